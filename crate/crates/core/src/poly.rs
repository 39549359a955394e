//! Univariate polynomials and the monic root-product sequences `tau_i`,
//! `eta_i` built from an eigenvalue ordering.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;
use crate::report::Check;

/// A polynomial in one indeterminate, coefficients in ascending degree with
/// no trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn from_coeffs(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(c.field(), vec![c])
    }

    /// `λ - root`
    pub fn linear(root: &Scalar) -> Self {
        let f = root.field();
        Poly { field: f, coeffs: vec![-root, f.one()] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = other.coeffs.get(k).unwrap_or(&zero);
                a + b
            })
            .collect();
        Self::from_coeffs(self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Self::from_coeffs(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(self.field, out)
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, x: &Matrix) -> Matrix {
        let n = x.rows();
        let id = Matrix::identity(self.field, n);
        self.coeffs.iter().rev().fold(Matrix::zeros(self.field, n, n), |acc, c| &(&acc * x) + &id.scale(c))
    }
}

/// An ordered list of scalars `x_0, ..., x_d` used as polynomial roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSequence {
    field: Field,
    roots: Vec<Scalar>,
}

impl RootSequence {
    pub fn new(field: Field, roots: Vec<Scalar>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::Length { name: "root sequence", expected: 1, actual: 0 });
        }
        if let Some(x) = roots.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch { left: field, right: x.field() });
        }
        Ok(RootSequence { field, roots })
    }

    /// Like [`RootSequence::new`] but also requires mutually distinct entries;
    /// `name` labels the error.
    pub fn distinct(field: Field, roots: Vec<Scalar>, name: &'static str) -> Result<Self> {
        let seq = Self::new(field, roots)?;
        if !all_distinct(&seq.roots) {
            return Err(Error::NotDistinct(name));
        }
        Ok(seq)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The diameter `d`: one less than the number of roots.
    pub fn d(&self) -> usize {
        self.roots.len() - 1
    }

    pub fn roots(&self) -> &[Scalar] {
        &self.roots
    }

    pub fn reversed(&self) -> Self {
        RootSequence { field: self.field, roots: self.roots.iter().rev().cloned().collect() }
    }

    fn product(&self, roots: impl Iterator<Item = usize>) -> Poly {
        roots.fold(Poly::constant(self.field.one()), |p, h| p.mul(&Poly::linear(&self.roots[h])))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i > self.roots.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.roots.len() });
        }
        Ok(())
    }

    /// `(λ - x_0)(λ - x_1)...(λ - x_{i-1})`
    pub fn tau(&self, i: usize) -> Result<Poly> {
        self.check_index(i)?;
        Ok(self.product(0..i))
    }

    /// `(λ - x_d)(λ - x_{d-1})...(λ - x_{d-i+1})`
    pub fn eta(&self, i: usize) -> Result<Poly> {
        self.check_index(i)?;
        let d = self.d();
        Ok(self.product((0..i).map(|h| d - h)))
    }
}

pub(crate) fn all_distinct(xs: &[Scalar]) -> bool {
    xs.iter().enumerate().all(|(i, x)| xs[..i].iter().all(|y| y != x))
}

/// Both sides of the partial-fraction identity
///
/// `Σ_i (λ-ξ_0)...(λ-ξ_{i-1}) / ((ξ_0-ξ_1)...(ξ_0-ξ_i)) = (λ-ξ_1)...(λ-ξ_d) / ((ξ_0-ξ_1)...(ξ_0-ξ_d))`
/// expanded to coefficient lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangeSum {
    pub lhs: Poly,
    pub rhs: Poly,
}

impl LagrangeSum {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn lagrange_sum(xi: &RootSequence) -> Result<LagrangeSum> {
    if !all_distinct(xi.roots()) {
        return Err(Error::NotDistinct("xi"));
    }
    let f = xi.field();
    let x = xi.roots();
    let d = xi.d();
    let mut lhs = Poly::zero(f);
    let mut numer = Poly::constant(f.one());
    let mut denom = f.one();
    for i in 0..=d {
        if i > 0 {
            numer = numer.mul(&Poly::linear(&x[i - 1]));
            denom = &denom * &(&x[0] - &x[i]);
        }
        lhs = lhs.add(&numer.scale(&denom.inv()?));
    }
    let rhs = (1..=d).fold(Poly::constant(f.one()), |p, h| p.mul(&Poly::linear(&x[h]))).scale(&denom.inv()?);
    Ok(LagrangeSum { lhs, rhs })
}

pub fn verify_lagrange_sum(xi: &RootSequence) -> Result<Check> {
    let sum = lagrange_sum(xi)?;
    Ok(Check::from_bool("lagrange-sum", sum.holds(), || {
        format!("lhs {:?} != rhs {:?}", sum.lhs.coeffs(), sum.rhs.coeffs())
    }))
}

/// The four expansions of `tau_d` in the `eta_i` basis and of `eta_d` in the
/// `tau_i` basis, for both sequences, checked coefficient-wise.
pub fn verify_transition_sums(theta: &RootSequence, theta_star: &RootSequence) -> Result<Vec<Check>> {
    if !all_distinct(theta.roots()) {
        return Err(Error::NotDistinct("theta"));
    }
    if !all_distinct(theta_star.roots()) {
        return Err(Error::NotDistinct("theta_star"));
    }
    let mut checks = Vec::with_capacity(4);
    for (name, seq) in [("theta", theta), ("theta_star", theta_star)] {
        let d = seq.d();
        let first = &seq.roots()[0];
        let last = &seq.roots()[d];
        let mut tau_sum = Poly::zero(seq.field());
        let mut eta_sum = Poly::zero(seq.field());
        for i in 0..=d {
            tau_sum = tau_sum.add(&seq.eta(i)?.scale(&seq.tau(d - i)?.eval(last)));
            eta_sum = eta_sum.add(&seq.tau(i)?.scale(&seq.eta(d - i)?.eval(first)));
        }
        let tau_d = seq.tau(d)?;
        let eta_d = seq.eta(d)?;
        checks.push(Check::from_bool(format!("transition/tau-in-eta/{name}"), tau_sum == tau_d, || {
            format!("{:?} != {:?}", tau_sum.coeffs(), tau_d.coeffs())
        }));
        checks.push(Check::from_bool(format!("transition/eta-in-tau/{name}"), eta_sum == eta_d, || {
            format!("{:?} != {:?}", eta_sum.coeffs(), eta_d.coeffs())
        }));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn seq(xs: &[i64]) -> RootSequence {
        RootSequence::new(Q, xs.iter().map(|&x| Q.from_i64(x)).collect()).unwrap()
    }

    fn coeffs(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn tau_and_eta() {
        let s = seq(&[0, 1]);
        assert_eq!(s.tau(0).unwrap().coeffs(), coeffs(&[1]));
        assert_eq!(s.tau(2).unwrap().coeffs(), coeffs(&[0, -1, 1]));
        assert_eq!(s.eta(1).unwrap().coeffs(), coeffs(&[-1, 1]));
        assert_eq!(s.eta(3), Err(Error::IndexOutOfRange { index: 3, max: 2 }));
    }

    #[test]
    fn evaluation() {
        let s = seq(&[0, 1]);
        assert_eq!(s.tau(2).unwrap().eval(&Q.from_i64(2)), Q.from_i64(2));
        assert_eq!(s.eta(1).unwrap().eval(&Q.from_i64(0)), Q.from_i64(-1));
        let a = Matrix::from_rows(Q, vec![coeffs(&[0, 0]), coeffs(&[1, 1])]).unwrap();
        assert_eq!(s.tau(1).unwrap().eval_matrix(&a), a);
        assert!(Poly::zero(Q).eval_matrix(&a).is_zero());
    }

    #[test]
    fn degrees_and_monic() {
        let s = seq(&[3, -1, 4, 7, 0]);
        for i in 0..=s.d() {
            for p in [s.tau(i).unwrap(), s.eta(i).unwrap()] {
                assert_eq!(p.degree(), Some(i));
                assert!(p.is_monic());
            }
        }
    }

    #[test]
    fn tau_vanishes_at_first_root_past_zero() {
        let s = seq(&[5, -2, 9, 1]);
        assert!(s.tau(0).unwrap().eval(&s.roots()[0]).is_one());
        for j in 1..=s.d() {
            assert!(s.tau(j).unwrap().eval(&s.roots()[0]).is_zero());
        }
    }

    #[test]
    fn lagrange_small_cases() {
        let d0 = lagrange_sum(&seq(&[4])).unwrap();
        assert_eq!(d0.lhs.coeffs(), coeffs(&[1]));
        assert!(d0.holds());
        let d1 = lagrange_sum(&seq(&[0, 1])).unwrap();
        assert_eq!(d1.lhs.coeffs(), coeffs(&[1, -1]));
        assert_eq!(d1.rhs.coeffs(), coeffs(&[1, -1]));
        assert_eq!(lagrange_sum(&seq(&[1, 2, 1])), Err(Error::NotDistinct("xi")));
    }

    #[test]
    fn transition_small_cases() {
        for xs in [&[0i64][..], &[0, 1], &[2, 0, -2]] {
            let s = seq(xs);
            let checks = verify_transition_sums(&s, &s.reversed()).unwrap();
            assert_eq!(checks.len(), 4);
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        }
        assert_eq!(verify_transition_sums(&seq(&[1, 1]), &seq(&[0, 1])), Err(Error::NotDistinct("theta")));
    }
}
