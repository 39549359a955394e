mod common;

use common::*;
use leonard_core::error::{Error, Sandwich};
use leonard_core::fixtures::{d1_parameter_array, hypercube_pair, rejected_d2_candidate, Affine};
use leonard_core::leonard::{
    apply_word, build_split_model, d4_apply, d4_orbit, extract_parameter_array, gram_solutions, nu_values,
    primitive_idempotents, search_orderings, second_split_sequence, split_basis, split_basis_from, split_decomposition,
    verify_leonard_system, D4Element, Generator, LeonardModel, LeonardSystem, ParameterArray, RawPair,
};
use leonard_core::linalg::{Matrix, Subspace};
use proptest::prelude::*;

#[test]
fn d1_fixture_matrices() {
    let f = q();
    let model = build_split_model(&d1_parameter_array(f)).unwrap();
    assert_eq!(model.a(), &m(f, &[&[0, 0], &[1, 1]]));
    assert_eq!(model.a_star(), &m(f, &[&[0, 1], &[0, 1]]));
    assert_eq!(model.e(0), &m(f, &[&[1, 0], &[-1, 0]]));
    assert_eq!(model.e(1), &m(f, &[&[0, 0], &[1, 1]]));
    assert_eq!(model.e_star(0), &m(f, &[&[1, -1], &[0, 0]]));
    assert_eq!(&(model.e(0) * model.a_star()) * model.e(1), m(f, &[&[1, 1], &[-1, -1]]));
}

#[test]
fn d1_fixture_scalars() {
    let f = q();
    let model = build_split_model(&d1_parameter_array(f)).unwrap();
    assert_eq!(model.parameter_array().phi().unwrap(), &s(f, &[2])[..]);
    let half = f.ratio(1, 2).unwrap();
    assert_eq!(model.nu(), &half);
    assert_eq!(model.nu_dd(), &half);
    assert_eq!((model.e_star(0) * model.e(0)).trace().unwrap(), f.from_i64(2));
    assert_eq!(second_split_sequence(&d1_parameter_array(f)).unwrap(), s(f, &[2]));
}

#[test]
fn d0_is_degenerate() {
    let f = q();
    let pa = ParameterArray::new(f, s(f, &[5]), s(f, &[7]), vec![], None).unwrap();
    let model = build_split_model(&pa).unwrap();
    assert_eq!(model.a(), &m(f, &[&[5]]));
    assert_eq!(model.a_star(), &m(f, &[&[7]]));
    assert_eq!(model.e(0), &Matrix::identity(f, 1));
    assert_eq!(model.e_star(0), &Matrix::identity(f, 1));
    assert_eq!(model.nu(), &f.one());
    assert_eq!(model.dagger().gram(), &Matrix::identity(f, 1));
    assert_eq!(nu_values(model.parameter_array()).unwrap(), (f.one(), f.one()));
}

#[test]
fn idempotents_of_a_diagonal_matrix() {
    let f = q();
    let x = m(f, &[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]);
    let es = primitive_idempotents(&x, &s(f, &[2, 0, -2])).unwrap();
    for (i, e) in es.iter().enumerate() {
        assert_eq!(e, &Matrix::unit(f, 3, i, i));
    }
}

#[test]
fn idempotents_reject_repeated_eigenvalues() {
    let f = q();
    let err = primitive_idempotents(&Matrix::identity(f, 2), &s(f, &[1, 1])).unwrap_err();
    assert_eq!(err, Error::NotDistinct("eigenvalues"));
}

#[test]
fn idempotents_reject_wrong_eigenvalues() {
    let f = q();
    let err = primitive_idempotents(&m(f, &[&[1, 1], &[0, 1]]), &s(f, &[1, 2])).unwrap_err();
    assert!(matches!(err, Error::NotMultiplicityFree(_)));
}

#[test]
fn parameter_array_validation() {
    let f = q();
    assert_eq!(
        ParameterArray::new(f, s(f, &[0, 0]), s(f, &[0, 1]), s(f, &[1]), None).unwrap_err().to_string(),
        "theta not mutually distinct"
    );
    assert!(matches!(
        ParameterArray::new(f, s(f, &[0, 1]), s(f, &[0, 1]), s(f, &[0]), None),
        Err(Error::ZeroSplitValue { name: "varphi", index: 1 })
    ));
    assert!(matches!(
        ParameterArray::new(f, s(f, &[0, 1]), s(f, &[0, 1]), s(f, &[1, 1]), None),
        Err(Error::Length { name: "varphi", .. })
    ));
}

#[test]
fn supplied_phi_must_match() {
    let f = q();
    let pa = ParameterArray::new(f, s(f, &[0, 1]), s(f, &[0, 1]), s(f, &[1]), Some(s(f, &[3]))).unwrap();
    assert!(matches!(build_split_model(&pa), Err(Error::Inconsistent(_))));
    let pa = ParameterArray::new(f, s(f, &[0, 1]), s(f, &[0, 1]), s(f, &[1]), Some(s(f, &[2]))).unwrap();
    assert!(build_split_model(&pa).is_ok());
}

#[test]
fn rejection_candidate_has_far_witness() {
    for f in [q(), gf()] {
        let err = build_split_model(&rejected_d2_candidate(f)).unwrap_err();
        let Error::NotLeonardSystem(witnesses) = err else { panic!("expected a verdict, got {err:?}") };
        assert!(witnesses.iter().any(|w| w.expected_zero()));
        assert!(witnesses.iter().any(|w| w.sandwich == Sandwich::DualInPrimary && w.i == 2 && w.j == 0));
    }
}

#[test]
fn arithmetic_d2_candidate_is_accepted() {
    let f = q();
    let pa = ParameterArray::new(f, s(f, &[2, 0, -2]), s(f, &[2, 0, -2]), s(f, &[1, 1]), None).unwrap();
    assert!(build_split_model(&pa).is_ok());
}

#[test]
fn hypercube_d2_verifies_and_splits() {
    for f in [q(), gf()] {
        let raw = hypercube_pair(f, 2);
        let sys = LeonardSystem::from_raw(&raw).unwrap();
        let checks = verify_leonard_system(sys.a(), sys.idempotents(), sys.a_star(), sys.dual_idempotents());
        assert_eq!(checks.len(), 12);
        assert!(checks.iter().all(|c| c.passed));
        let parts = split_decomposition(&sys).unwrap();
        assert!(parts.iter().all(|u| u.dim() == 1));
        let pa = extract_parameter_array(&sys).unwrap();
        assert_eq!(pa.varphi(), &s(f, &[-4, -4])[..]);
        assert_eq!(pa.phi().unwrap(), &s(f, &[4, 4])[..]);
    }
}

#[test]
fn split_model_decomposition_is_standard() {
    let f = q();
    let model = LeonardModel::from_raw(&hypercube_pair(f, 3)).unwrap();
    let split = build_split_model(&model.parameter_array().without_phi()).unwrap();
    let parts = split_decomposition(split.system()).unwrap();
    for (i, u) in parts.iter().enumerate() {
        let e = (0..4).map(|k| if k == i { f.one() } else { f.zero() }).collect();
        assert_eq!(u, &Subspace::span(f, 4, vec![e]).unwrap());
    }
    assert_eq!(split_basis(split.system()).unwrap().matrix(), Matrix::identity(f, 4));
}

#[test]
fn d1_as_raw_pair_splits_into_coordinate_lines() {
    let f = q();
    let pa = d1_parameter_array(f);
    let raw = RawPair::new(pa.split_a(), pa.split_a_star(), s(f, &[0, 1]), s(f, &[0, 1])).unwrap();
    let parts = split_decomposition(&LeonardSystem::from_raw(&raw).unwrap()).unwrap();
    assert_eq!(parts[0], Subspace::span(f, 2, vec![s(f, &[1, 0])]).unwrap());
    assert_eq!(parts[1], Subspace::span(f, 2, vec![s(f, &[0, 1])]).unwrap());
}

#[test]
fn double_down_on_d1_fixture() {
    let f = q();
    let pa = build_split_model(&d1_parameter_array(f)).unwrap().parameter_array().clone();
    let dd = d4_apply(D4Element::DOUBLE_DOWN, &pa).unwrap();
    assert_eq!(dd.theta(), &s(f, &[1, 0])[..]);
    assert_eq!(dd.theta_star(), &s(f, &[0, 1])[..]);
    assert_eq!(dd.varphi(), &s(f, &[2])[..]);
    assert_eq!(dd.phi().unwrap(), &s(f, &[1])[..]);
    assert_eq!(second_split_sequence(&dd).unwrap(), s(f, &[1]));
}

#[test]
fn d1_orbit_all_verify() {
    let f = q();
    let pa = build_split_model(&d1_parameter_array(f)).unwrap().parameter_array().clone();
    let orbit = d4_orbit(&pa).unwrap();
    assert_eq!(orbit.len(), 8);
    let names: Vec<String> = orbit.iter().map(|(g, _)| g.name()).collect();
    assert_eq!(names, ["Φ", "Φ^↓", "Φ^⇓", "Φ^↓⇓", "Φ^*", "Φ^↓*", "Φ^⇓*", "Φ^↓⇓*"]);
    for (_, member) in &orbit {
        assert_eq!(build_split_model(&member.without_phi()).unwrap().parameter_array(), member);
    }
}

#[test]
fn search_finds_the_hypercube_orderings() {
    let f = q();
    let raw = hypercube_pair(f, 2);
    let found = search_orderings(&raw).unwrap();
    assert!(found.contains(&(raw.theta.clone(), raw.theta_star.clone())));
    // the four reversal combinations, and nothing else
    assert_eq!(found.len(), 4);
    assert!(matches!(search_orderings(&hypercube_pair(f, 4)), Err(Error::Unsupported(_))));
}

#[test]
fn d1_gram_space_is_a_line() {
    let f = q();
    let model = build_split_model(&d1_parameter_array(f)).unwrap();
    assert_eq!(gram_solutions(model.a(), model.a_star()).dim(), 1);
    let dagger = model.dagger();
    assert_eq!(&dagger.apply(model.e(0)), model.e(0));
    assert_eq!(&dagger.apply(model.e_star(0)), model.e_star(0));
}

fn words() -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(prop_oneof![Just(Generator::Star), Just(Generator::Down), Just(Generator::DoubleDown)], 0..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn round_trip(model in models(4)) {
        let pa = model.parameter_array();
        let rebuilt = build_split_model(&pa.without_phi()).unwrap();
        prop_assert_eq!(rebuilt.parameter_array(), pa);
        let supplied = build_split_model(pa).unwrap();
        prop_assert_eq!(supplied.parameter_array(), pa);
    }

    #[test]
    fn rescaling_u0_changes_nothing(model in models(4), k in nonzero()) {
        let sys = model.system();
        let parts = split_decomposition(sys).unwrap();
        let k = model.field().from_i64(k);
        let u0: Vec<_> = parts[0].basis()[0].iter().map(|x| x * &k).collect();
        let basis = split_basis_from(sys, &parts, u0).unwrap();
        prop_assert_eq!(&basis.varphi, &model.split_basis().varphi);
    }

    #[test]
    fn affine_scales_split_sequences(raw in raw_pairs(4), a in nonzero(), b in -9i64..=9, c in nonzero(), e in -9i64..=9) {
        let f = raw.field();
        let t = Affine { a: f.from_i64(a), b: f.from_i64(b), c: f.from_i64(c), e: f.from_i64(e) };
        let before = LeonardModel::from_raw(&raw).unwrap();
        let after = LeonardModel::from_raw(&t.apply(&raw).unwrap()).unwrap();
        let ac = f.from_i64(a * c);
        for i in 1..=raw.d() {
            prop_assert_eq!(after.varphi(i), &(before.varphi(i) * &ac));
            prop_assert_eq!(after.phi(i), &(before.phi(i) * &ac));
        }
    }

    #[test]
    fn relatives_match_the_parameter_action(model in models(4)) {
        let pa = model.parameter_array();
        for g in D4Element::all() {
            let view = model.relative(g).unwrap();
            prop_assert_eq!(view.parameter_array(), &d4_apply(g, pa).unwrap(), "{}", g.name());
            let rebuilt = build_split_model(&view.parameter_array().without_phi()).unwrap();
            prop_assert_eq!(rebuilt.parameter_array(), view.parameter_array());
        }
    }

    #[test]
    fn equal_words_act_equally(model in models(3), w in words()) {
        let pa = model.parameter_array();
        let g = D4Element::from_word(&w);
        prop_assert_eq!(apply_word(&w, pa).unwrap(), d4_apply(g, pa).unwrap());
        prop_assert_eq!(apply_word(&g.word(), pa).unwrap(), d4_apply(g, pa).unwrap());
    }

    #[test]
    fn generator_relations_on_arrays(model in models(3)) {
        use Generator::*;
        let pa = model.parameter_array();
        for s in [Star, Down, DoubleDown] {
            prop_assert_eq!(&apply_word(&[s, s], pa).unwrap(), pa);
        }
        prop_assert_eq!(apply_word(&[DoubleDown, Star], pa).unwrap(), apply_word(&[Star, Down], pa).unwrap());
        prop_assert_eq!(
            apply_word(&[Down, DoubleDown, Down, DoubleDown], pa).unwrap(),
            apply_word(&[DoubleDown, Down, DoubleDown, Down], pa).unwrap()
        );
    }

    #[test]
    fn nu_inverts_the_traces(model in models(5)) {
        let d = model.d();
        let one = model.field().one();
        prop_assert_eq!(&(model.e_star(0) * model.e(0)).trace().unwrap() * model.nu(), one.clone());
        prop_assert_eq!(&(model.e_star(d) * model.e(d)).trace().unwrap() * model.nu_dd(), one);
    }

    #[test]
    fn antiautomorphism_laws(model in models(4), seed in any::<u64>()) {
        prop_assert_eq!(gram_solutions(model.a(), model.a_star()).dim(), 1);
        let dagger = model.dagger();
        prop_assert_eq!(&dagger.apply(model.a()), model.a());
        prop_assert_eq!(&dagger.apply(model.a_star()), model.a_star());
        for i in 0..=model.d() {
            prop_assert_eq!(&dagger.apply(model.e(i)), model.e(i));
            prop_assert_eq!(&dagger.apply(model.e_star(i)), model.e_star(i));
        }
        let n = model.d() + 1;
        let f = model.field();
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            f.from_i64(((state >> 33) % 19) as i64 - 9)
        };
        let x = Matrix::from_fn(f, n, n, |_, _| next());
        let y = Matrix::from_fn(f, n, n, |_, _| next());
        prop_assert_eq!(dagger.apply(&dagger.apply(&x)), x.clone());
        prop_assert_eq!(dagger.apply(&(&x * &y)), &dagger.apply(&y) * &dagger.apply(&x));
    }
}
