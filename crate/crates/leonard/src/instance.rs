//! Instance files: a parameter array or a raw matrix pair, with every scalar
//! written as a string literal.
//!
//! ```json
//! {"field": {"kind": "prime", "modulus": 10007}, "kind": "parameter_array", "d": 1,
//!  "theta": ["0", "1"], "theta_star": ["0", "1"], "varphi": ["1"]}
//! ```

use std::fmt;
use std::path::Path;

use leonard_core::error::Error as CoreError;
use leonard_core::field::{Field, Scalar};
use leonard_core::leonard::{build_split_model, LeonardModel, ParameterArray, RawPair};
use leonard_core::linalg::Matrix;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl InputError {
    fn field(field: impl Into<String>, message: impl fmt::Display) -> Self {
        InputError::Field { field: field.into(), message: message.to_string() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Prime { modulus: u64 },
}

impl FieldSpec {
    pub fn of(field: Field) -> Self {
        match field {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(modulus) => FieldSpec::Prime { modulus },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    ParameterArray,
    RawPair,
}

/// The on-disk shape, before any validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: FieldSpec,
    pub kind: InstanceKind,
    pub d: usize,
    pub theta: Vec<String>,
    pub theta_star: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub varphi: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<String>>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<Vec<String>>>,
    #[serde(rename = "A_star", default, skip_serializing_if = "Option::is_none")]
    pub a_star: Option<Vec<Vec<String>>>,
}

/// A validated instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    ParameterArray(ParameterArray),
    RawPair(RawPair),
}

impl Instance {
    pub fn load(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, InputError> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| InputError::Syntax {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &InstanceFile) -> Result<Self, InputError> {
        let field = match file.field {
            FieldSpec::Rational => Field::Rational,
            FieldSpec::Prime { modulus } => Field::prime(modulus).map_err(|e| InputError::field("field.modulus", e))?,
        };
        let d = file.d;
        field.check_degree(d).map_err(|e| InputError::field("field.modulus", e))?;
        let theta = scalars(field, "theta", &file.theta, d + 1)?;
        let theta_star = scalars(field, "theta_star", &file.theta_star, d + 1)?;
        match file.kind {
            InstanceKind::ParameterArray => {
                for (name, present) in [("A", file.a.is_some()), ("A_star", file.a_star.is_some())] {
                    if present {
                        return Err(InputError::field(name, "not allowed for a parameter_array instance"));
                    }
                }
                let varphi = file.varphi.as_ref().ok_or_else(|| InputError::field("varphi", "missing"))?;
                let varphi = scalars(field, "varphi", varphi, d)?;
                let phi = file.phi.as_ref().map(|p| scalars(field, "phi", p, d)).transpose()?;
                Ok(Instance::ParameterArray(ParameterArray::new(field, theta, theta_star, varphi, phi)?))
            }
            InstanceKind::RawPair => {
                for (name, present) in [("varphi", file.varphi.is_some()), ("phi", file.phi.is_some())] {
                    if present {
                        return Err(InputError::field(name, "not allowed for a raw_pair instance"));
                    }
                }
                let a = matrix(field, "A", file.a.as_deref(), d + 1)?;
                let a_star = matrix(field, "A_star", file.a_star.as_deref(), d + 1)?;
                Ok(Instance::RawPair(RawPair::new(a, a_star, theta, theta_star)?))
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Instance::ParameterArray(pa) => pa.field(),
            Instance::RawPair(raw) => raw.field(),
        }
    }

    pub fn d(&self) -> usize {
        match self {
            Instance::ParameterArray(pa) => pa.d(),
            Instance::RawPair(raw) => raw.d(),
        }
    }

    /// The split model of a parameter array, or the model of a raw pair in
    /// its own coordinates.
    pub fn model(&self) -> Result<LeonardModel, CoreError> {
        match self {
            Instance::ParameterArray(pa) => build_split_model(pa),
            Instance::RawPair(raw) => LeonardModel::from_raw(raw),
        }
    }

    pub fn to_file(&self) -> InstanceFile {
        match self {
            Instance::ParameterArray(pa) => parameter_array_file(pa),
            Instance::RawPair(raw) => InstanceFile {
                field: FieldSpec::of(raw.field()),
                kind: InstanceKind::RawPair,
                d: raw.d(),
                theta: literals(&raw.theta),
                theta_star: literals(&raw.theta_star),
                varphi: None,
                phi: None,
                a: Some(matrix_literals(&raw.a)),
                a_star: Some(matrix_literals(&raw.a_star)),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("instance files serialize")
    }
}

pub fn parameter_array_file(pa: &ParameterArray) -> InstanceFile {
    InstanceFile {
        field: FieldSpec::of(pa.field()),
        kind: InstanceKind::ParameterArray,
        d: pa.d(),
        theta: literals(pa.theta()),
        theta_star: literals(pa.theta_star()),
        varphi: Some(literals(pa.varphi())),
        phi: pa.phi().map(literals),
        a: None,
        a_star: None,
    }
}

pub fn literals(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(Scalar::to_literal).collect()
}

pub fn matrix_literals(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| literals(m.row(i))).collect()
}

fn scalars(field: Field, name: &str, xs: &[String], expected: usize) -> Result<Vec<Scalar>, InputError> {
    if xs.len() != expected {
        return Err(InputError::field(name, format!("has length {}, expected {expected}", xs.len())));
    }
    xs.iter()
        .enumerate()
        .map(|(k, x)| field.parse(x).map_err(|e| InputError::field(format!("{name}[{k}]"), e)))
        .collect()
}

fn matrix(field: Field, name: &str, rows: Option<&[Vec<String>]>, n: usize) -> Result<Matrix, InputError> {
    let rows = rows.ok_or_else(|| InputError::field(name, "missing"))?;
    if rows.len() != n {
        return Err(InputError::field(name, format!("has {} rows, expected {n}", rows.len())));
    }
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(r, row)| scalars(field, &format!("{name}[{r}]"), row, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(field, parsed)?)
}

/// serde_json appends " at line L column C"; the position is reported
/// separately.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(k) => message[..k].to_string(),
        None => message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const D1: &str = r#"{"field": {"kind": "rational"}, "kind": "parameter_array", "d": 1,
        "theta": ["0", "1"], "theta_star": ["0", "1"], "varphi": ["1"]}"#;

    #[test]
    fn parses_the_d1_fixture() {
        let inst = Instance::parse(D1).unwrap();
        assert_eq!(inst.d(), 1);
        assert_eq!(inst.field(), Field::Rational);
        let again = Instance::parse(&inst.to_json()).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let err = Instance::parse("{\n  \"field\": ,\n}").unwrap_err();
        match err {
            InputError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_scalars_name_the_entry() {
        let text = D1.replace(r#"["0", "1"], "varphi""#, r#"["0", "x"], "varphi""#);
        let err = Instance::parse(&text).unwrap_err();
        assert!(err.to_string().starts_with("field `theta_star[1]`"), "{err}");
    }

    #[test]
    fn repeated_theta() {
        let text = D1.replace(r#""theta": ["0", "1"]"#, r#""theta": ["1", "1"]"#);
        assert_eq!(Instance::parse(&text).unwrap_err().to_string(), "theta not mutually distinct");
    }

    #[test]
    fn small_or_composite_moduli() {
        let composite = D1.replace(r#"{"kind": "rational"}"#, r#"{"kind": "prime", "modulus": 6}"#);
        assert!(Instance::parse(&composite).unwrap_err().to_string().contains("not prime"));
        let small = D1.replace(r#"{"kind": "rational"}"#, r#"{"kind": "prime", "modulus": 3}"#);
        assert!(Instance::parse(&small).unwrap_err().to_string().contains("too small"));
    }

    #[test]
    fn raw_pair_round_trip() {
        let text = r#"{"field": {"kind": "prime", "modulus": 11}, "kind": "raw_pair", "d": 1,
            "A": [["0", "0"], ["1", "1"]], "A_star": [["0", "1"], ["0", "1"]],
            "theta": ["0", "1"], "theta_star": ["0", "1"]}"#;
        let inst = Instance::parse(text).unwrap();
        assert_eq!(Instance::parse(&inst.to_json()).unwrap(), inst);
        assert_eq!(inst.model().unwrap().parameter_array().phi().unwrap()[0], Field::Prime(11).from_i64(2));
    }
}
