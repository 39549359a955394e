//! The full verification suite for one model.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::Result;
use crate::identities::{
    verify_commutator_traces, verify_four_idempotent_products, verify_split_relations, verify_split_relations_anti,
    verify_trace_formulas,
};
use crate::leonard::{
    build_split_model, d4_apply, split_decomposition, verify_leonard_system, D4Element, LeonardModel,
};
use crate::linalg::Matrix;
use crate::poly::{verify_lagrange_sum, verify_transition_sums};
use crate::report::{Check, VerificationReport};
use crate::units::{f_formulas_check, unit_formula_checks, unit_relations_check, MatrixUnitSet};

/// Whether the identity families run on the model alone or on all eight
/// relatives.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Scope {
    #[default]
    Base,
    Orbit,
}

/// Runs every verifier on `model`: tridiagonality, split decomposition and
/// coordinates, the parameter-array round trip, D4 consistency, the
/// antiautomorphism, `ν`, the polynomial identities, matrix units,
/// projectors and all identity families.
pub fn verify_model(model: &LeonardModel, instance: &str, scope: Scope) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(instance);
    let sys = model.system();
    let pa = model.parameter_array();
    let field = model.field();
    let d = model.d();

    report.extend(verify_leonard_system(sys.a(), sys.idempotents(), sys.a_star(), sys.dual_idempotents()));

    let decomposition = split_decomposition(sys);
    report.push(Check::from_bool("split/decomposition", decomposition.is_ok(), || {
        decomposition.err().map(|e| e.to_string()).unwrap_or_default()
    }));
    report.push(Check::matrices("split/coordinates/A", &model.to_split_coords(model.a()), &pa.split_a()));
    report.push(Check::matrices("split/coordinates/A*", &model.to_split_coords(model.a_star()), &pa.split_a_star()));

    let rebuilt = build_split_model(&pa.without_phi()).map(|m| m.parameter_array().clone());
    report.push(Check::from_bool("round-trip", rebuilt.as_ref() == Ok(pa), || match &rebuilt {
        Ok(other) => format!("rebuilt array differs: {other:?}"),
        Err(e) => e.to_string(),
    }));

    for g in D4Element::all() {
        let name = g.name();
        let view = model.relative(g)?;
        let expected = d4_apply(g, pa)?;
        report.push(Check::from_bool(format!("d4/consistency/{name}"), view.parameter_array() == &expected, || {
            format!("extracted {:?} != transformed {:?}", view.parameter_array(), expected)
        }));
        let vs = view.system();
        let tri = verify_leonard_system(vs.a(), vs.idempotents(), vs.a_star(), vs.dual_idempotents());
        let bad = tri.iter().find(|c| !c.passed);
        report.push(Check::from_bool(format!("d4/orbit/{name}"), bad.is_none(), || {
            bad.and_then(|c| c.witness.clone()).unwrap_or_default()
        }));
    }

    report.extend(dagger_checks(model));

    let trace0 = (model.e_star(0) * model.e(0)).trace()?;
    report.push(Check::scalars("nu/trace-E*0E0", &(&trace0 * model.nu()), &field.one()));
    let traced = (model.e_star(d) * model.e(d)).trace()?;
    report.push(Check::scalars("nu/trace-E*dEd", &(&traced * model.nu_dd()), &field.one()));

    let theta = sys.theta_seq();
    let theta_star = sys.theta_star_seq();
    for (name, seq) in [("theta", &theta), ("theta_star", &theta_star)] {
        let mut c = verify_lagrange_sum(seq)?;
        c.id = format!("{}/{name}", c.id);
        report.push(c);
    }
    report.extend(verify_transition_sums(&theta, &theta_star)?);

    report.extend(unit_formula_checks(model)?);
    report.extend(unit_relations_check(&MatrixUnitSet::new(model)?));
    report.extend(f_formulas_check(model)?);

    match scope {
        Scope::Base => report.extend(identity_checks(model)?),
        Scope::Orbit => {
            for g in D4Element::all() {
                let prefix = if g == D4Element::IDENTITY { None } else { Some(g.name()) };
                let view = model.relative(g)?;
                for mut c in identity_checks(&view)? {
                    if let Some(p) = &prefix {
                        c.id = format!("relative/{p}/{}", c.id);
                    }
                    report.push(c);
                }
            }
        }
    }
    Ok(report)
}

fn identity_checks(model: &LeonardModel) -> Result<Vec<Check>> {
    let mut checks = verify_split_relations(model)?;
    checks.extend(verify_split_relations_anti(model)?);
    checks.extend(verify_four_idempotent_products(model)?);
    checks.extend(verify_commutator_traces(model)?);
    checks.extend(verify_trace_formulas(model)?);
    Ok(checks)
}

/// `†` fixes `A`, `A*` and every idempotent, squares to the identity and
/// reverses products. The last two are tested on matrix units and on
/// `A`, `A*` themselves.
pub fn dagger_checks(model: &LeonardModel) -> Vec<Check> {
    let dagger = model.dagger();
    let field = model.field();
    let n = model.d() + 1;
    let mut checks = Vec::new();
    checks.push(Check::matrices("dagger/fixes/A", &dagger.apply(model.a()), model.a()));
    checks.push(Check::matrices("dagger/fixes/A*", &dagger.apply(model.a_star()), model.a_star()));
    for i in 0..n {
        checks.push(Check::matrices(format!("dagger/fixes/E_{i}"), &dagger.apply(model.e(i)), model.e(i)));
        checks.push(Check::matrices(format!("dagger/fixes/E*_{i}"), &dagger.apply(model.e_star(i)), model.e_star(i)));
    }
    let mut samples: Vec<Matrix> = Vec::new();
    for i in 0..n {
        samples.push(Matrix::unit(field, n, i, (i + 1) % n));
        samples.push(&Matrix::unit(field, n, (i + 1) % n, i) + model.a());
    }
    samples.push(model.a_star().clone());
    let involution = samples.iter().all(|x| &dagger.apply(&dagger.apply(x)) == x);
    checks.push(Check::from_bool("dagger/involution", involution, || "dagger(dagger(X)) != X".into()));
    let anti = samples
        .iter()
        .zip(samples.iter().skip(1))
        .all(|(x, y)| dagger.apply(&(x * y)) == &dagger.apply(y) * &dagger.apply(x));
    checks.push(Check::from_bool("dagger/anti-multiplicative", anti, || "dagger(XY) != dagger(Y) dagger(X)".into()));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::fixtures::{d1_parameter_array, hypercube_pair, Affine};

    #[test]
    fn d1_fixture_passes_everything() {
        let m = build_split_model(&d1_parameter_array(Field::Rational)).unwrap();
        let r = verify_model(&m, "d1", Scope::Orbit).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.passed() > 100);
    }

    #[test]
    fn affine_hypercube_passes_everything() {
        for field in [Field::Rational, Field::prime(10007).unwrap()] {
            let t = Affine { a: field.from_i64(3), b: field.from_i64(-2), c: field.from_i64(-5), e: field.from_i64(7) };
            let raw = t.apply(&hypercube_pair(field, 3)).unwrap();
            let m = LeonardModel::from_raw(&raw).unwrap();
            let r = verify_model(&m, "affine", Scope::Base).unwrap();
            assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
