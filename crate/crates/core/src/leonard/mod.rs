//! Leonard systems: parameter arrays, the split-basis model, primitive
//! idempotents, tridiagonality verification, relatives under the D4 action,
//! parameter extraction from raw matrix pairs, and the antiautomorphism.
//!
//! Every algebra element is a concrete `(d+1) x (d+1)` matrix. For a model
//! built from a parameter array those matrices are already written in the
//! split basis; a model built from a raw pair keeps the caller's
//! coordinates and carries the change of basis to split coordinates.

mod d4;
mod dagger;
mod split;

use alloc::format;
use alloc::vec::Vec;

pub use d4::{apply_generator, apply_word, d4_apply, d4_orbit, D4Element, Generator};
pub use dagger::{gram_solutions, Antiautomorphism};
pub use split::{extract_parameter_array, split_basis, split_basis_from, split_decomposition, SplitBasis};

use crate::error::{Error, PairWitness, Result, Sandwich};
use crate::field::{Field, Scalar};
use crate::linalg::{shift, Matrix};
use crate::poly::{all_distinct, RootSequence};
use crate::report::{Check, VerificationReport};

/// `(θ_0..θ_d; θ*_0..θ*_d; φ_1..φ_d; φ̂_1..φ̂_d)`. The second split
/// sequence `φ̂` may be absent until computed.
///
/// Sequences are stored 0-based: `varphi()[i - 1]` is `φ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterArray {
    field: Field,
    theta: Vec<Scalar>,
    theta_star: Vec<Scalar>,
    varphi: Vec<Scalar>,
    phi: Option<Vec<Scalar>>,
}

impl ParameterArray {
    pub fn new(
        field: Field,
        theta: Vec<Scalar>,
        theta_star: Vec<Scalar>,
        varphi: Vec<Scalar>,
        phi: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        if theta.is_empty() {
            return Err(Error::Length { name: "theta", expected: 1, actual: 0 });
        }
        let d = theta.len() - 1;
        let check_len = |name, xs: &[Scalar], expected| {
            if xs.len() != expected {
                return Err(Error::Length { name, expected, actual: xs.len() });
            }
            if let Some(x) = xs.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch { left: field, right: x.field() });
            }
            Ok(())
        };
        check_len("theta", &theta, d + 1)?;
        check_len("theta_star", &theta_star, d + 1)?;
        check_len("varphi", &varphi, d)?;
        if let Some(phi) = &phi {
            check_len("phi", phi, d)?;
        }
        if !all_distinct(&theta) {
            return Err(Error::NotDistinct("theta"));
        }
        if !all_distinct(&theta_star) {
            return Err(Error::NotDistinct("theta_star"));
        }
        if let Some(i) = varphi.iter().position(Scalar::is_zero) {
            return Err(Error::ZeroSplitValue { name: "varphi", index: i + 1 });
        }
        if let Some(i) = phi.as_ref().and_then(|p| p.iter().position(Scalar::is_zero)) {
            return Err(Error::ZeroSplitValue { name: "phi", index: i + 1 });
        }
        Ok(ParameterArray { field, theta, theta_star, varphi, phi })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn d(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn theta(&self) -> &[Scalar] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[Scalar] {
        &self.theta_star
    }

    pub fn varphi(&self) -> &[Scalar] {
        &self.varphi
    }

    pub fn phi(&self) -> Option<&[Scalar]> {
        self.phi.as_deref()
    }

    pub fn is_complete(&self) -> bool {
        self.phi.is_some()
    }

    pub fn theta_seq(&self) -> RootSequence {
        RootSequence::new(self.field, self.theta.clone()).expect("validated")
    }

    pub fn theta_star_seq(&self) -> RootSequence {
        RootSequence::new(self.field, self.theta_star.clone()).expect("validated")
    }

    /// The same array with `φ̂` forgotten.
    pub fn without_phi(&self) -> Self {
        ParameterArray { phi: None, ..self.clone() }
    }

    fn complete_phi(&self) -> Result<&[Scalar]> {
        self.phi().ok_or_else(|| Error::Inconsistent("second split sequence not computed".into()))
    }

    /// `A` in split coordinates: diagonal `θ`, subdiagonal 1.
    pub fn split_a(&self) -> Matrix {
        let f = self.field;
        Matrix::from_fn(f, self.d() + 1, self.d() + 1, |i, j| {
            if i == j {
                self.theta[i].clone()
            } else if i == j + 1 {
                f.one()
            } else {
                f.zero()
            }
        })
    }

    /// `A*` in split coordinates: diagonal `θ*`, superdiagonal `φ`.
    pub fn split_a_star(&self) -> Matrix {
        let f = self.field;
        Matrix::from_fn(f, self.d() + 1, self.d() + 1, |i, j| {
            if i == j {
                self.theta_star[i].clone()
            } else if j == i + 1 {
                self.varphi[i].clone()
            } else {
                f.zero()
            }
        })
    }
}

/// `E_i = Π_{j≠i} (X - θ_j I)/(θ_i - θ_j)`, with the defining properties
/// `X E_i = θ_i E_i`, `E_i E_j = δ_ij E_i`, `Σ E_i = I`, `X = Σ θ_i E_i` and
/// `E_i ≠ 0` verified. A failure means `X` is not multiplicity-free with
/// these eigenvalues.
pub fn primitive_idempotents(x: &Matrix, eigs: &[Scalar]) -> Result<Vec<Matrix>> {
    let n = x.rows();
    if !x.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", n, x.cols())));
    }
    if eigs.len() != n {
        return Err(Error::Length { name: "eigenvalues", expected: n, actual: eigs.len() });
    }
    if !all_distinct(eigs) {
        return Err(Error::NotDistinct("eigenvalues"));
    }
    let field = x.field();
    let shifted: Vec<Matrix> = eigs.iter().map(|t| shift(x, t)).collect();
    let mut es = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = Matrix::identity(field, n);
        for j in (0..n).filter(|&j| j != i) {
            let c = (&eigs[i] - &eigs[j]).inv()?;
            e = (&e * &shifted[j]).scale(&c);
        }
        es.push(e);
    }

    let fail = |msg: alloc::string::String| Err(Error::NotMultiplicityFree(msg));
    let mut total = Matrix::zeros(field, n, n);
    let mut weighted = Matrix::zeros(field, n, n);
    for i in 0..n {
        if es[i].is_zero() {
            return fail(format!("E_{i} is zero"));
        }
        if x * &es[i] != es[i].scale(&eigs[i]) {
            return fail(format!("X E_{i} != θ_{i} E_{i}"));
        }
        for j in 0..n {
            let p = &es[i] * &es[j];
            let ok = if i == j { p == es[i] } else { p.is_zero() };
            if !ok {
                return fail(format!("E_{i} E_{j} != δ E_{i}"));
            }
        }
        total = &total + &es[i];
        weighted = &weighted + &es[i].scale(&eigs[i]);
    }
    if total != Matrix::identity(field, n) {
        return fail("Σ E_i != I".into());
    }
    if &weighted != x {
        return fail("X != Σ θ_i E_i".into());
    }
    Ok(es)
}

/// Tridiagonality witnesses: pairs `(i, j)` where `E_i A* E_j` (or
/// `E*_i A E*_j`) is nonzero although `|i - j| > 1`, or zero although
/// `|i - j| = 1`.
pub fn tridiagonal_witnesses(a: &Matrix, e: &[Matrix], a_star: &Matrix, e_star: &[Matrix]) -> Vec<PairWitness> {
    let mut out = Vec::new();
    for (sandwich, outer, mid) in [(Sandwich::DualInPrimary, e, a_star), (Sandwich::PrimaryInDual, e_star, a)] {
        let n = outer.len();
        for i in 0..n {
            let left = &outer[i] * mid;
            for j in (0..n).filter(|&j| i.abs_diff(j) >= 1) {
                let zero = (&left * &outer[j]).is_zero();
                let expect_zero = i.abs_diff(j) > 1;
                if zero != expect_zero {
                    out.push(PairWitness { sandwich, i, j });
                }
            }
        }
    }
    out
}

/// Report form of [`tridiagonal_witnesses`], one check per `(i, j)` with
/// `i ≠ j`.
pub fn verify_leonard_system(a: &Matrix, e: &[Matrix], a_star: &Matrix, e_star: &[Matrix]) -> Vec<Check> {
    let witnesses = tridiagonal_witnesses(a, e, a_star, e_star);
    let mut checks = Vec::new();
    for (sandwich, tag, n) in
        [(Sandwich::DualInPrimary, "E A* E", e.len()), (Sandwich::PrimaryInDual, "E* A E*", e_star.len())]
    {
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                let id = format!("tridiagonal/{tag}/({i},{j})");
                match witnesses.iter().find(|w| w.sandwich == sandwich && w.i == i && w.j == j) {
                    Some(w) => checks.push(Check::fail(id, format!("{w}"))),
                    None => checks.push(Check::pass(id)),
                }
            }
        }
    }
    checks
}

/// A matrix pair with caller-supplied eigenvalue orderings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPair {
    pub a: Matrix,
    pub a_star: Matrix,
    pub theta: Vec<Scalar>,
    pub theta_star: Vec<Scalar>,
}

impl RawPair {
    pub fn new(a: Matrix, a_star: Matrix, theta: Vec<Scalar>, theta_star: Vec<Scalar>) -> Result<Self> {
        if !a.is_square() || !a_star.is_square() || a.rows() != a_star.rows() {
            return Err(Error::DimensionMismatch(format!(
                "A is {}x{}, A* is {}x{}",
                a.rows(),
                a.cols(),
                a_star.rows(),
                a_star.cols()
            )));
        }
        if a.field() != a_star.field() {
            return Err(Error::FieldMismatch { left: a.field(), right: a_star.field() });
        }
        let n = a.rows();
        if n == 0 {
            return Err(Error::DimensionMismatch("empty matrices".into()));
        }
        for (name, xs) in [("theta", &theta), ("theta_star", &theta_star)] {
            if xs.len() != n {
                return Err(Error::Length { name, expected: n, actual: xs.len() });
            }
            if let Some(x) = xs.iter().find(|x| x.field() != a.field()) {
                return Err(Error::FieldMismatch { left: a.field(), right: x.field() });
            }
            if !all_distinct(xs) {
                return Err(Error::NotDistinct(name));
            }
        }
        Ok(RawPair { a, a_star, theta, theta_star })
    }

    pub fn d(&self) -> usize {
        self.a.rows() - 1
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }
}

/// `(A; E_0..E_d; A*; E*_0..E*_d)` with the eigenvalue orderings that go
/// with the idempotent orderings. Constructed only after the tridiagonality
/// conditions have been verified, or as a relative of such a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeonardSystem {
    a: Matrix,
    e: Vec<Matrix>,
    theta: Vec<Scalar>,
    a_star: Matrix,
    e_star: Vec<Matrix>,
    theta_star: Vec<Scalar>,
}

impl LeonardSystem {
    pub fn from_raw(raw: &RawPair) -> Result<Self> {
        let e = primitive_idempotents(&raw.a, &raw.theta)?;
        let e_star = primitive_idempotents(&raw.a_star, &raw.theta_star)?;
        let witnesses = tridiagonal_witnesses(&raw.a, &e, &raw.a_star, &e_star);
        if !witnesses.is_empty() {
            return Err(Error::NotLeonardSystem(witnesses));
        }
        Ok(LeonardSystem {
            a: raw.a.clone(),
            e,
            theta: raw.theta.clone(),
            a_star: raw.a_star.clone(),
            e_star,
            theta_star: raw.theta_star.clone(),
        })
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn d(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn a_star(&self) -> &Matrix {
        &self.a_star
    }

    pub fn idempotents(&self) -> &[Matrix] {
        &self.e
    }

    pub fn dual_idempotents(&self) -> &[Matrix] {
        &self.e_star
    }

    pub fn theta(&self) -> &[Scalar] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[Scalar] {
        &self.theta_star
    }

    pub fn theta_seq(&self) -> RootSequence {
        RootSequence::new(self.field(), self.theta.clone()).expect("nonempty")
    }

    pub fn theta_star_seq(&self) -> RootSequence {
        RootSequence::new(self.field(), self.theta_star.clone()).expect("nonempty")
    }

    /// `Φ^g`, obtained by reindexing the idempotent sequences and swapping
    /// the starred and unstarred halves.
    pub fn relative(&self, g: D4Element) -> LeonardSystem {
        fn maybe_rev<T: Clone>(xs: &[T], rev: bool) -> Vec<T> {
            if rev {
                xs.iter().rev().cloned().collect()
            } else {
                xs.to_vec()
            }
        }
        let e = maybe_rev(&self.e, g.reverses_e());
        let theta = maybe_rev(&self.theta, g.reverses_e());
        let e_star = maybe_rev(&self.e_star, g.reverses_e_star());
        let theta_star = maybe_rev(&self.theta_star, g.reverses_e_star());
        if g.swaps() {
            LeonardSystem {
                a: self.a_star.clone(),
                e: e_star,
                theta: theta_star,
                a_star: self.a.clone(),
                e_star: e,
                theta_star: theta,
            }
        } else {
            LeonardSystem { a: self.a.clone(), e, theta, a_star: self.a_star.clone(), e_star, theta_star }
        }
    }
}

/// Every ordering pair of the supplied eigenvalue lists for which the pair
/// is a Leonard system. Cost grows as `((d+1)!)²`, so only `d ≤ 3` is
/// accepted.
pub fn search_orderings(raw: &RawPair) -> Result<Vec<(Vec<Scalar>, Vec<Scalar>)>> {
    if raw.d() > 3 {
        return Err(Error::Unsupported(format!("ordering search needs d <= 3, got d = {}", raw.d())));
    }
    let e = primitive_idempotents(&raw.a, &raw.theta)?;
    let e_star = primitive_idempotents(&raw.a_star, &raw.theta_star)?;
    let perms = permutations(raw.d() + 1);
    let mut found = Vec::new();
    for p in &perms {
        let ep: Vec<Matrix> = p.iter().map(|&k| e[k].clone()).collect();
        for q in &perms {
            let eq: Vec<Matrix> = q.iter().map(|&k| e_star[k].clone()).collect();
            if tridiagonal_witnesses(&raw.a, &ep, &raw.a_star, &eq).is_empty() {
                found.push((
                    p.iter().map(|&k| raw.theta[k].clone()).collect(),
                    q.iter().map(|&k| raw.theta_star[k].clone()).collect(),
                ));
            }
        }
    }
    Ok(found)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `ν = η_d(θ_0) η*_d(θ*_0) / (φ̂_1 ... φ̂_d)` and
/// `ν^{↓⇓} = τ_d(θ_d) τ*_d(θ*_d) / (φ̂_1 ... φ̂_d)`.
pub fn nu_values(pa: &ParameterArray) -> Result<(Scalar, Scalar)> {
    let phi = pa.complete_phi()?;
    let d = pa.d();
    let theta = pa.theta_seq();
    let theta_star = pa.theta_star_seq();
    let phi_prod = product_in(pa.field(), phi.iter());
    let inv = phi_prod.inv()?;
    let nu = &(&theta.eta(d)?.eval(&pa.theta()[0]) * &theta_star.eta(d)?.eval(&pa.theta_star()[0])) * &inv;
    let nu_dd = &(&theta.tau(d)?.eval(&pa.theta()[d]) * &theta_star.tau(d)?.eval(&pa.theta_star()[d])) * &inv;
    Ok((nu, nu_dd))
}

/// Product with the empty-product convention.
pub(crate) fn product_in<'a>(field: Field, xs: impl Iterator<Item = &'a Scalar>) -> Scalar {
    xs.fold(field.one(), |acc, x| &acc * x)
}

/// A verified Leonard system together with its parameter array, its split
/// basis, `ν`, `ν^{↓⇓}` and the antiautomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeonardModel {
    system: LeonardSystem,
    pa: ParameterArray,
    split: SplitBasis,
    split_inv: Matrix,
    nu: Scalar,
    nu_dd: Scalar,
    dagger: Antiautomorphism,
}

impl LeonardModel {
    /// The antiautomorphism is solved for in split coordinates, where `A`
    /// and `A*` are bidiagonal, and carried back by the split basis.
    pub fn from_system(system: LeonardSystem) -> Result<Self> {
        Self::build(system, None)
    }

    fn build(system: LeonardSystem, dagger: Option<Antiautomorphism>) -> Result<Self> {
        let split = split_basis(&system)?;
        let phi = split_basis(&system.relative(D4Element::DOUBLE_DOWN))?.varphi;
        let pa = ParameterArray::new(
            system.field(),
            system.theta().to_vec(),
            system.theta_star().to_vec(),
            split.varphi.clone(),
            Some(phi),
        )?;
        let split_inv = split.matrix().inverse()?;
        let (nu, nu_dd) = nu_values(&pa)?;
        let dagger = match dagger {
            Some(dagger) => dagger,
            None => Antiautomorphism::solve(&pa.split_a(), &pa.split_a_star())?.transport(&split.matrix(), &split_inv),
        };
        Ok(LeonardModel { system, pa, split, split_inv, nu, nu_dd, dagger })
    }

    pub fn from_raw(raw: &RawPair) -> Result<Self> {
        Self::from_system(LeonardSystem::from_raw(raw)?)
    }

    /// The model of `Φ^g`. The antiautomorphism is shared: it is determined
    /// by `A` and `A*` alone.
    pub fn relative(&self, g: D4Element) -> Result<Self> {
        Self::build(self.system.relative(g), Some(self.dagger.clone()))
    }

    pub fn system(&self) -> &LeonardSystem {
        &self.system
    }

    pub fn parameter_array(&self) -> &ParameterArray {
        &self.pa
    }

    pub fn field(&self) -> Field {
        self.system.field()
    }

    pub fn d(&self) -> usize {
        self.system.d()
    }

    pub fn a(&self) -> &Matrix {
        self.system.a()
    }

    pub fn a_star(&self) -> &Matrix {
        self.system.a_star()
    }

    pub fn e(&self, i: usize) -> &Matrix {
        &self.system.e[i]
    }

    pub fn e_star(&self, i: usize) -> &Matrix {
        &self.system.e_star[i]
    }

    pub fn nu(&self) -> &Scalar {
        &self.nu
    }

    pub fn nu_dd(&self) -> &Scalar {
        &self.nu_dd
    }

    pub fn dagger(&self) -> &Antiautomorphism {
        &self.dagger
    }

    pub fn split_basis(&self) -> &SplitBasis {
        &self.split
    }

    /// `φ_i` (1-based).
    pub fn varphi(&self, i: usize) -> &Scalar {
        &self.pa.varphi[i - 1]
    }

    /// `φ̂_i` (1-based).
    pub fn phi(&self, i: usize) -> &Scalar {
        &self.pa.phi.as_ref().expect("model arrays are complete")[i - 1]
    }

    /// The matrix representing `X` with respect to the split basis.
    pub fn to_split_coords(&self, x: &Matrix) -> Matrix {
        &(&self.split_inv * x) * &self.split.matrix()
    }
}

/// The split-basis model of a parameter array: `A` lower bidiagonal with
/// subdiagonal 1, `A*` upper bidiagonal with superdiagonal `φ`. Fails with
/// the offending `(i, j)` pairs if the candidate is not a Leonard system.
/// A supplied `φ̂` must agree with the computed second split sequence.
pub fn build_split_model(pa: &ParameterArray) -> Result<LeonardModel> {
    let raw = RawPair::new(pa.split_a(), pa.split_a_star(), pa.theta.clone(), pa.theta_star.clone())?;
    let model = LeonardModel::from_raw(&raw)?;
    if model.pa.varphi != pa.varphi {
        return Err(Error::Inconsistent("extracted first split sequence differs from varphi".into()));
    }
    if let Some(phi) = &pa.phi {
        if model.pa.phi.as_ref() != Some(phi) {
            return Err(Error::Inconsistent("supplied phi differs from the computed second split sequence".into()));
        }
    }
    Ok(model)
}

/// `φ̂`: the first split sequence of the `⇓` relative of the split model.
pub fn second_split_sequence(pa: &ParameterArray) -> Result<Vec<Scalar>> {
    let model = build_split_model(&pa.without_phi())?;
    Ok(model.pa.phi.expect("model arrays are complete"))
}

/// Full verification record of a candidate: every tridiagonality pair, in
/// report form. Useful when construction fails and the caller wants all
/// witnesses rather than the error.
pub fn candidate_report(pa: &ParameterArray) -> Result<VerificationReport> {
    let a = pa.split_a();
    let a_star = pa.split_a_star();
    let e = primitive_idempotents(&a, pa.theta())?;
    let e_star = primitive_idempotents(&a_star, pa.theta_star())?;
    Ok(VerificationReport::with_checks("candidate", verify_leonard_system(&a, &e, &a_star, &e_star)))
}
