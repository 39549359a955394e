#![allow(dead_code)]

use leonard_core::field::{Field, Scalar};
use leonard_core::fixtures::{hypercube_pair, Affine};
use leonard_core::leonard::{LeonardModel, RawPair};
use leonard_core::linalg::Matrix;
use proptest::prelude::*;

pub fn q() -> Field {
    Field::Rational
}

pub fn gf() -> Field {
    Field::prime(10007).unwrap()
}

pub fn m(field: Field, rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()).unwrap()
}

pub fn s(field: Field, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-9i64..=-1, 1i64..=9]
}

pub fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(q()), Just(gf())]
}

/// A hypercube pair of diameter `d ≤ dmax` under a random affine map.
pub fn raw_pairs(dmax: usize) -> impl Strategy<Value = RawPair> {
    (fields(), 0..=dmax, nonzero(), -9i64..=9, nonzero(), -9i64..=9).prop_map(|(f, d, a, b, c, e)| {
        let t = Affine { a: f.from_i64(a), b: f.from_i64(b), c: f.from_i64(c), e: f.from_i64(e) };
        t.apply(&hypercube_pair(f, d)).unwrap()
    })
}

pub fn models(dmax: usize) -> impl Strategy<Value = LeonardModel> {
    raw_pairs(dmax).prop_map(|raw| LeonardModel::from_raw(&raw).expect("affine hypercube is a Leonard system"))
}
