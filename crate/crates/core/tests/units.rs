mod common;

use common::*;
use leonard_core::fixtures::{d1_parameter_array, hypercube_pair};
use leonard_core::leonard::{build_split_model, LeonardModel};
use leonard_core::linalg::Matrix;
use leonard_core::units::{
    delta_unit_left, delta_unit_right, f_formulas_check, f_projector, unit_formula_checks, unit_relations_check,
    MatrixUnitSet,
};
use proptest::prelude::*;

#[test]
fn d1_units() {
    let f = q();
    let model = build_split_model(&d1_parameter_array(f)).unwrap();
    assert_eq!(delta_unit_left(&model, 0, 0).unwrap(), m(f, &[&[1, 0], &[0, 0]]));
    assert_eq!(delta_unit_left(&model, 0, 1).unwrap(), m(f, &[&[0, 1], &[0, 0]]));
    assert_eq!(delta_unit_right(&model, 1, 1).unwrap(), m(f, &[&[0, 0], &[0, 1]]));
    assert_eq!(f_projector(&model, 0).unwrap(), m(f, &[&[1, 0], &[0, 0]]));
    assert_eq!(f_projector(&model, 1).unwrap(), m(f, &[&[0, 0], &[0, 1]]));
}

#[test]
fn d0_unit_is_one() {
    let model = LeonardModel::from_raw(&hypercube_pair(q(), 0)).unwrap();
    assert_eq!(delta_unit_right(&model, 0, 0).unwrap(), Matrix::identity(q(), 1));
    assert!(delta_unit_left(&model, 1, 0).is_err());
}

#[test]
fn unit_products() {
    let model = LeonardModel::from_raw(&hypercube_pair(gf(), 2)).unwrap();
    let set = MatrixUnitSet::new(&model).unwrap();
    assert_eq!(set.get(0, 1) * set.get(1, 0), set.get(0, 0).clone());
    assert!((set.get(0, 1) * set.get(0, 1)).is_zero());
    let checks = unit_relations_check(&set);
    assert_eq!(checks.len(), 10);
    assert!(checks.iter().all(|c| c.passed));
}

#[test]
fn d2_projectors() {
    for f in [q(), gf()] {
        let model = LeonardModel::from_raw(&hypercube_pair(f, 2)).unwrap();
        for i in 0..3 {
            assert_eq!(f_projector(&model, i).unwrap().rank(), 1);
        }
        let checks = f_formulas_check(&model).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{:?}", checks.iter().find(|c| !c.passed));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_forms_agree(model in models(5)) {
        let n = model.d() + 1;
        let mut sum = Matrix::zeros(model.field(), n, n);
        for i in 0..n {
            for j in 0..n {
                let left = delta_unit_left(&model, i, j).unwrap();
                prop_assert_eq!(&left, &delta_unit_right(&model, i, j).unwrap());
                prop_assert_eq!(model.to_split_coords(&left), Matrix::unit(model.field(), n, i, j));
            }
            sum = &sum + &delta_unit_left(&model, i, i).unwrap();
        }
        prop_assert_eq!(sum, Matrix::identity(model.field(), n));
        prop_assert!(unit_formula_checks(&model).unwrap().iter().all(|c| c.passed));
    }

    #[test]
    fn unit_laws(model in models(4)) {
        let set = MatrixUnitSet::new(&model).unwrap();
        prop_assert!(unit_relations_check(&set).iter().all(|c| c.passed));
        prop_assert!(f_formulas_check(&model).unwrap().iter().all(|c| c.passed));
    }
}
