//! Deterministic test instances.
//!
//! The hypercube pair has `A` tridiagonal with `(i-1, i)`-entry `i`,
//! `(i+1, i)`-entry `d - i` and zero diagonal, and `A* = diag(d - 2i)`; both
//! eigenvalue orderings are `d - 2i`. Affine maps `A → aA + bI`,
//! `A* → cA* + eI` with `a, c ≠ 0` keep the primitive idempotents, so the
//! images stay Leonard systems. Nothing here is trusted: callers re-verify.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::leonard::{ParameterArray, RawPair};
use crate::linalg::Matrix;

/// `θ = (0, 1)`, `θ* = (0, 1)`, `φ = (1)`.
pub fn d1_parameter_array(field: Field) -> ParameterArray {
    let f = |x| field.from_i64(x);
    ParameterArray::new(field, alloc::vec![f(0), f(1)], alloc::vec![f(0), f(1)], alloc::vec![f(1)], None)
        .expect("valid array")
}

/// `θ = θ* = (0, 1, 3)`, `φ = (1, 1)`: not a Leonard system, `E_2 A* E_0 ≠ 0`.
///
/// The arithmetic choice `θ = θ* = (2, 0, -2)` with `φ = (1, 1)` is a
/// Leonard system, so it cannot serve as a rejection example.
pub fn rejected_d2_candidate(field: Field) -> ParameterArray {
    let f = |x| field.from_i64(x);
    ParameterArray::new(
        field,
        alloc::vec![f(0), f(1), f(3)],
        alloc::vec![f(0), f(1), f(3)],
        alloc::vec![f(1), f(1)],
        None,
    )
    .expect("valid array")
}

pub fn hypercube_pair(field: Field, d: usize) -> RawPair {
    let n = d + 1;
    let di = d as i64;
    let a = Matrix::from_fn(field, n, n, |r, c| {
        if r + 1 == c {
            field.from_i64(c as i64)
        } else if r == c + 1 {
            field.from_i64(di - c as i64)
        } else {
            field.zero()
        }
    });
    let eigs: Vec<Scalar> = (0..n).map(|i| field.from_i64(di - 2 * i as i64)).collect();
    let a_star = Matrix::diagonal(field, &eigs);
    RawPair::new(a, a_star, eigs.clone(), eigs).expect("hypercube pair is well formed")
}

/// `A → aA + bI`, `A* → cA* + eI`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub e: Scalar,
}

impl Affine {
    pub fn identity(field: Field) -> Self {
        Affine { a: field.one(), b: field.zero(), c: field.one(), e: field.zero() }
    }

    pub fn apply(&self, raw: &RawPair) -> Result<RawPair> {
        if self.a.is_zero() || self.c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = raw.d() + 1;
        let id = Matrix::identity(raw.field(), n);
        let a = &raw.a.scale(&self.a) + &id.scale(&self.b);
        let a_star = &raw.a_star.scale(&self.c) + &id.scale(&self.e);
        let theta = raw.theta.iter().map(|t| &(&self.a * t) + &self.b).collect();
        let theta_star = raw.theta_star.iter().map(|t| &(&self.c * t) + &self.e).collect();
        RawPair::new(a, a_star, theta, theta_star)
    }
}
