//! The split decomposition `U_0, ..., U_d` of a Leonard system, the split
//! basis adapted to it, and parameter-array extraction.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{shift, Matrix, Subspace};

use super::{D4Element, LeonardSystem, ParameterArray};

fn not_split(msg: alloc::string::String) -> Error {
    Error::NotSplit(msg)
}

/// `U_i = (E*_0 V + ... + E*_i V) ∩ (E_i V + ... + E_d V)`, with every
/// property of a decomposition checked: each `U_i` is a line, the lines span
/// `V`, `(A - θ_i I) U_i = U_{i+1}`, `(A - θ_d I) U_d = 0`,
/// `(A* - θ*_i I) U_i = U_{i-1}` and `(A* - θ*_0 I) U_0 = 0`.
pub fn split_decomposition(sys: &LeonardSystem) -> Result<Vec<Subspace>> {
    let field = sys.field();
    let n = sys.d() + 1;
    let dual_images: Vec<Subspace> = sys.dual_idempotents().iter().map(Matrix::column_space).collect();
    let images: Vec<Subspace> = sys.idempotents().iter().map(Matrix::column_space).collect();

    // prefix[i] = E*_0 V + ... + E*_i V, suffix[i] = E_i V + ... + E_d V
    let mut prefix = Vec::with_capacity(n);
    let mut acc = Subspace::zero(field, n);
    for s in &dual_images {
        acc = acc.sum(s)?;
        prefix.push(acc.clone());
    }
    let mut suffix = alloc::vec![Subspace::zero(field, n); n];
    let mut acc = Subspace::zero(field, n);
    for i in (0..n).rev() {
        acc = acc.sum(&images[i])?;
        suffix[i] = acc.clone();
    }

    let mut parts = Vec::with_capacity(n);
    for i in 0..n {
        let u = prefix[i].intersect(&suffix[i])?;
        if u.dim() != 1 {
            return Err(not_split(format!("U_{i} has dimension {}", u.dim())));
        }
        parts.push(u);
    }
    let total = parts.iter().try_fold(Subspace::zero(field, n), |acc, u| acc.sum(u))?;
    if total.dim() != n {
        return Err(not_split(format!("U_0..U_d span only {} dimensions", total.dim())));
    }

    let theta = sys.theta();
    let theta_star = sys.theta_star();
    let zero = Subspace::zero(field, n);
    for i in 0..n {
        let raised = parts[i].image(&shift(sys.a(), &theta[i]))?;
        let expected = if i + 1 < n { &parts[i + 1] } else { &zero };
        if &raised != expected {
            return Err(not_split(format!("(A - θ_{i} I) U_{i} is not U_{}", i + 1)));
        }
        let lowered = parts[i].image(&shift(sys.a_star(), &theta_star[i]))?;
        let expected = if i > 0 { &parts[i - 1] } else { &zero };
        if &lowered != expected {
            return Err(not_split(format!("(A* - θ*_{i} I) U_{i} is not U_{}", i as isize - 1)));
        }
    }
    Ok(parts)
}

/// A split basis `u_0, ..., u_d` with `(A - θ_i I) u_i = u_{i+1}` and
/// `(A* - θ*_i I) u_i = φ_i u_{i-1}`, together with the first split sequence
/// read off from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitBasis {
    pub vectors: Vec<Vec<Scalar>>,
    pub varphi: Vec<Scalar>,
}

impl SplitBasis {
    /// The change-of-basis matrix whose columns are `u_0, ..., u_d`.
    pub fn matrix(&self) -> Matrix {
        let n = self.vectors.len();
        let field = self.vectors[0][0].field();
        Matrix::from_columns(field, n, &self.vectors).expect("split basis vectors have length d+1")
    }
}

/// Split basis seeded by the first basis vector of `U_0`.
pub fn split_basis(sys: &LeonardSystem) -> Result<SplitBasis> {
    let parts = split_decomposition(sys)?;
    let u0 = parts[0].basis()[0].clone();
    split_basis_from(sys, &parts, u0)
}

/// Split basis seeded by an arbitrary nonzero `u0 ∈ U_0`. The resulting
/// `varphi` does not depend on the choice of `u0`.
pub fn split_basis_from(sys: &LeonardSystem, parts: &[Subspace], u0: Vec<Scalar>) -> Result<SplitBasis> {
    let d = sys.d();
    if u0.iter().all(Scalar::is_zero) || !parts[0].contains(&u0) {
        return Err(Error::Inconsistent("u_0 must be a nonzero vector of U_0".into()));
    }
    let theta = sys.theta();
    let theta_star = sys.theta_star();
    let mut vectors = alloc::vec![u0];
    for i in 0..d {
        let next = shift(sys.a(), &theta[i]).apply(&vectors[i]);
        if next.iter().all(Scalar::is_zero) {
            return Err(Error::Inconsistent(format!("u_{} is zero", i + 1)));
        }
        if !parts[i + 1].contains(&next) {
            return Err(Error::Inconsistent(format!("u_{} is not in U_{}", i + 1, i + 1)));
        }
        vectors.push(next);
    }
    if !shift(sys.a(), &theta[d]).apply(&vectors[d]).iter().all(Scalar::is_zero) {
        return Err(Error::Inconsistent("(A - θ_d I) u_d is nonzero".into()));
    }
    if !shift(sys.a_star(), &theta_star[0]).apply(&vectors[0]).iter().all(Scalar::is_zero) {
        return Err(Error::Inconsistent("(A* - θ*_0 I) u_0 is nonzero".into()));
    }
    let mut varphi = Vec::with_capacity(d);
    for i in 1..=d {
        let w = shift(sys.a_star(), &theta_star[i]).apply(&vectors[i]);
        let prev = &vectors[i - 1];
        let k = prev.iter().position(|x| !x.is_zero()).expect("u_{i-1} is nonzero");
        let ratio = w[k].checked_div(&prev[k])?;
        if w.iter().zip(prev).any(|(a, b)| a != &(&ratio * b)) {
            return Err(Error::Inconsistent(format!("(A* - θ*_{i} I) u_{i} is not a multiple of u_{}", i - 1)));
        }
        if ratio.is_zero() {
            return Err(Error::ZeroSplitValue { name: "varphi", index: i });
        }
        varphi.push(ratio);
    }
    Ok(SplitBasis { vectors, varphi })
}

/// The full parameter array `(θ; θ*; φ; φ̂)` of a verified system; the
/// second split sequence is the first split sequence of the `⇓` relative.
pub fn extract_parameter_array(sys: &LeonardSystem) -> Result<ParameterArray> {
    let varphi = split_basis(sys)?.varphi;
    let phi = split_basis(&sys.relative(D4Element::DOUBLE_DOWN))?.varphi;
    ParameterArray::new(sys.field(), sys.theta().to_vec(), sys.theta_star().to_vec(), varphi, Some(phi))
}
