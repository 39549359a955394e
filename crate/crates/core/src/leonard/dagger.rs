//! The antiautomorphism fixing `A` and `A*`, realized as
//! `X ↦ K⁻¹ Xᵀ K` for a matrix `K` with `K A = Aᵀ K` and `K A* = A*ᵀ K`.

use alloc::format;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antiautomorphism {
    gram: Matrix,
    gram_inv: Matrix,
}

/// Solutions `K` (vectorized row-major) of `K A = Aᵀ K`, `K A* = A*ᵀ K`.
pub fn gram_solutions(a: &Matrix, a_star: &Matrix) -> Subspace {
    let field = a.field();
    let n = a.rows();
    let unknowns = n * n;
    let mut system = Matrix::zeros(field, 2 * unknowns, unknowns);
    for (block, x) in [a, a_star].into_iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = block * unknowns + i * n + j;
                // (K X)_{ij} = Σ_s K_{is} X_{sj}
                for s in 0..n {
                    let col = i * n + s;
                    let v = system.get(row, col) + x.get(s, j);
                    system.set(row, col, v);
                }
                // (Xᵀ K)_{ij} = Σ_s X_{si} K_{sj}
                for s in 0..n {
                    let col = s * n + j;
                    let v = system.get(row, col) - x.get(s, i);
                    system.set(row, col, v);
                }
            }
        }
    }
    system.kernel()
}

impl Antiautomorphism {
    /// Solves for `K`. The solution space must be a line spanned by an
    /// invertible matrix; `K` is normalized so its first nonzero entry is 1.
    pub fn solve(a: &Matrix, a_star: &Matrix) -> Result<Self> {
        let n = a.rows();
        let solutions = gram_solutions(a, a_star);
        if solutions.dim() != 1 {
            return Err(Error::Antiautomorphism(format!(
                "solution space has dimension {}, expected 1",
                solutions.dim()
            )));
        }
        // reduced echelon basis: the leading entry is already 1
        let k = &solutions.basis()[0];
        let gram = Matrix::from_fn(a.field(), n, n, |i, j| k[i * n + j].clone());
        let gram_inv = gram.inverse().map_err(|_| Error::Antiautomorphism("solution K is singular".into()))?;
        Ok(Antiautomorphism { gram, gram_inv })
    }

    /// The antiautomorphism of a similar pair: if `self` belongs to
    /// `(A_s, A*_s)` and `X = P X_s P⁻¹`, the result belongs to `(A, A*)`,
    /// with `K = P⁻ᵀ K_s P⁻¹` renormalized so its first nonzero entry is 1.
    pub fn transport(&self, p: &Matrix, p_inv: &Matrix) -> Self {
        let gram = &(&p_inv.transpose() * &self.gram) * p_inv;
        let gram_inv = &(p * &self.gram_inv) * &p.transpose();
        let lead = gram.entries().iter().find(|x| !x.is_zero()).expect("K is invertible").clone();
        let lead_inv = lead.inv().expect("nonzero");
        Antiautomorphism { gram: gram.scale(&lead_inv), gram_inv: gram_inv.scale(&lead) }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `X ↦ K⁻¹ Xᵀ K`
    pub fn apply(&self, x: &Matrix) -> Matrix {
        &(&self.gram_inv * &x.transpose()) * &self.gram
    }
}
