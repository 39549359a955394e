//! Dense exact linear algebra: matrices, reduced row echelon forms, kernels,
//! subspace sums and intersections, and general linear solving.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// A dense matrix over a single field, stored row-major.
///
/// Rows and columns are indexed from 0. The Leonard-system code only ever
/// builds square `(d+1) x (d+1)` matrices; rectangular shapes exist for the
/// elimination machinery.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// The elementary matrix with `(i, j)`-entry 1 and all other entries 0.
    pub fn unit(field: Field, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        m.data[i * n + j] = field.one();
        m
    }

    pub fn diagonal(field: Field, entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(field, n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from row vectors, checking shape and field.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {c}", row.len())));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch { left: field, right: x.field() });
                }
                data.push(x);
            }
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    /// Builds an `n x k` matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, n: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch(format!("column of length {}, expected {n}", bad.len())));
        }
        Ok(Self::from_fn(field, n, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "field mismatch");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries; the vectorization used for basis checks.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    fn check_same(&self, other: &Matrix, what: &str) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{what} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same(other, "sum")?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same(other, "difference")?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.field.zero();
        Ok(Self::from_fn(self.field, self.rows, other.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, j);
                if !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b)))
            .collect()
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("trace of {}x{} matrix", self.rows, self.cols)));
        }
        Ok((0..self.rows).fold(self.field.zero(), |acc, i| &acc + self.get(i, i)))
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// The pivot in each column is the first nonzero entry at or below the
    /// current row. The result does not depend on that choice: the RREF of a
    /// matrix is unique.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let x = m.get(row, j) * &inv;
                m.data[row * m.cols + j] = x;
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let x = m.get(r, j) - &(&factor * m.get(row, j));
                    m.data[r * m.cols + j] = x;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(k, free);
            }
            vectors.push(v);
        }
        Subspace::span_unchecked(self.field, self.cols, vectors)
    }

    /// Span of the columns.
    pub fn column_space(&self) -> Subspace {
        Subspace::span_unchecked(self.field, self.rows, (0..self.cols).map(|j| self.column(j)).collect())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("inverse of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = Self::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// First position where two same-shape matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.data.len()).find(|&k| self.data[k] != other.data[k]).map(|k| (k / self.cols, k % self.cols))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-self.field.one())
    }
}

/// `X - c I`
pub fn shift(x: &Matrix, c: &Scalar) -> Matrix {
    let mut m = x.clone();
    for i in 0..x.rows.min(x.cols) {
        let v = m.get(i, i) - c;
        m.data[i * m.cols + i] = v;
    }
    m
}

/// A subspace of the column space `K^n`, stored as the nonzero rows of a
/// reduced row echelon form. Two subspaces are equal iff their stored bases
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Matrix::identity(field, ambient).column_space()
    }

    /// Span of arbitrary vectors.
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!("vector of length {} in {ambient}-space", v.len())));
            }
            if let Some(x) = v.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch { left: field, right: x.field() });
            }
        }
        Ok(Self::span_unchecked(field, ambient, vectors))
    }

    fn span_unchecked(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_fn(field, vectors.len(), ambient, |i, j| vectors[i][j].clone());
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { field, ambient, basis }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field, right: other.field });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of {}-space and {}-space",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::span_unchecked(self.field, self.ambient, vectors))
    }

    /// `U ∩ W` from the kernel of `[U | W]`: a relation `Σ a_i u_i + Σ b_j w_j = 0`
    /// yields the common vector `Σ a_i u_i`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.basis.is_empty() || other.basis.is_empty() {
            return Ok(Self::zero(self.field, self.ambient));
        }
        let k = self.basis.len();
        let columns: Vec<Vec<Scalar>> = self.basis.iter().chain(&other.basis).cloned().collect();
        let stacked = Matrix::from_columns(self.field, self.ambient, &columns)?;
        let relations = stacked.kernel();
        let vectors = relations
            .basis
            .iter()
            .map(|c| {
                let mut v = vec![self.field.zero(); self.ambient];
                for (coef, u) in c[..k].iter().zip(&self.basis) {
                    for (vi, ui) in v.iter_mut().zip(u) {
                        *vi = &*vi + &(coef * ui);
                    }
                }
                v
            })
            .collect();
        Ok(Self::span_unchecked(self.field, self.ambient, vectors))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut vectors = self.basis.clone();
        vectors.push(v.to_vec());
        Self::span_unchecked(self.field, self.ambient, vectors).dim() == self.dim()
    }

    /// `X U`
    pub fn image(&self, x: &Matrix) -> Result<Subspace> {
        if x.cols != self.ambient || x.field != self.field {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to {}-space",
                x.rows, x.cols, self.ambient
            )));
        }
        Ok(Self::span_unchecked(self.field, x.rows, self.basis.iter().map(|v| x.apply(v)).collect()))
    }
}

/// Outcome of solving `coeffs * x = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    None,
    Unique(Vec<Scalar>),
    /// `particular + span(homogeneous)`
    Affine {
        particular: Vec<Scalar>,
        homogeneous: Subspace,
    },
}

pub fn solve_general(coeffs: &Matrix, rhs: &[Scalar]) -> Result<Solution> {
    if rhs.len() != coeffs.rows {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} equations",
            rhs.len(),
            coeffs.rows
        )));
    }
    if let Some(x) = rhs.iter().find(|x| x.field() != coeffs.field) {
        return Err(Error::FieldMismatch { left: coeffs.field, right: x.field() });
    }
    let n = coeffs.cols;
    let aug = Matrix::from_fn(coeffs.field, coeffs.rows, n + 1, |i, j| {
        if j < n {
            coeffs.get(i, j).clone()
        } else {
            rhs[i].clone()
        }
    });
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(Solution::None);
    }
    let mut particular = vec![coeffs.field.zero(); n];
    for (k, &p) in pivots.iter().enumerate() {
        particular[p] = r.get(k, n).clone();
    }
    let homogeneous = coeffs.kernel();
    if homogeneous.dim() == 0 {
        Ok(Solution::Unique(particular))
    } else {
        Ok(Solution::Affine { particular, homogeneous })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(Q, rows.iter().map(|r| r.iter().map(|&x| Q.from_i64(x)).collect()).collect()).unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    fn span(vs: &[&[i64]], n: usize) -> Subspace {
        Subspace::span(Q, n, vs.iter().map(|x| v(x)).collect()).unwrap()
    }

    #[test]
    fn products() {
        let x = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(&Matrix::identity(Q, 2) * &x, x);
        assert!((&x * &Matrix::zeros(Q, 2, 2)).is_zero());
        // d=1 split model: A * A*
        assert_eq!(&m(&[&[0, 0], &[1, 1]]) * &m(&[&[0, 1], &[0, 1]]), m(&[&[0, 0], &[0, 2]]));
    }

    #[test]
    fn shape_and_field_errors() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = Matrix::identity(Q, 3);
        assert!(matches!(a.try_mul(&b), Err(Error::DimensionMismatch(_))));
        assert!(matches!(a.try_add(&b), Err(Error::DimensionMismatch(_))));
        let p = Matrix::identity(Field::Prime(7), 2);
        assert!(matches!(a.try_mul(&p), Err(Error::FieldMismatch { .. })));
        assert!(Matrix::zeros(Q, 2, 3).trace().is_err());
        assert!(Matrix::from_rows(Q, vec![v(&[1, 2]), v(&[1])]).is_err());
    }

    #[test]
    fn traces() {
        assert_eq!(Matrix::identity(Q, 3).trace().unwrap(), Q.from_i64(3));
        // E*_0 E_0 of the d=1 split model
        assert_eq!(m(&[&[2, 0], &[0, 0]]).trace().unwrap(), Q.from_i64(2));
    }

    #[test]
    fn kernels_and_images() {
        assert_eq!(Matrix::identity(Q, 3).kernel().dim(), 0);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).kernel(), span(&[&[1, -1]], 2));
        // E_0 of the d=1 split model
        assert_eq!(m(&[&[1, 0], &[-1, 0]]).column_space(), span(&[&[1, -1]], 2));
    }

    #[test]
    fn sums_and_intersections() {
        let u = span(&[&[1, 2, 3], &[0, 1, 1]], 3);
        assert_eq!(u.intersect(&u).unwrap(), u);
        let l1 = span(&[&[1, 0]], 2);
        let l2 = span(&[&[1, 1]], 2);
        assert_eq!(l1.intersect(&l2).unwrap().dim(), 0);
        assert_eq!(l1.sum(&l2).unwrap(), Subspace::full(Q, 2));
        let a = span(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let b = span(&[&[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(a.intersect(&b).unwrap(), span(&[&[0, 1, 0]], 3));
        assert!(a.intersect(&Subspace::zero(Q, 2)).is_err());
        assert!(a.contains(&v(&[2, -5, 0])));
        assert!(!a.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn solving() {
        let b = v(&[3, -1, 2]);
        assert_eq!(solve_general(&Matrix::identity(Q, 3), &b).unwrap(), Solution::Unique(b.clone()));
        match solve_general(&Matrix::zeros(Q, 2, 2), &v(&[0, 0])).unwrap() {
            Solution::Affine { particular, homogeneous } => {
                assert_eq!(particular, v(&[0, 0]));
                assert_eq!(homogeneous, Subspace::full(Q, 2));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(solve_general(&m(&[&[1, 1], &[1, 1]]), &v(&[1, 2])).unwrap(), Solution::None);
    }

    #[test]
    fn inverse() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(&a * &a.inverse().unwrap(), Matrix::identity(Q, 2));
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_err());
    }

    fn any_field() -> impl Strategy<Value = Field> {
        prop_oneof![Just(Q), Just(Field::Prime(7)), Just(Field::Prime(10007))]
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        (any_field(), proptest::collection::vec(-3i64..4, rows * cols))
            .prop_map(move |(f, xs)| Matrix::from_fn(f, rows, cols, |i, j| f.from_i64(xs[i * cols + j])))
    }

    fn pair(n: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
        (any_field(), proptest::collection::vec(-3i64..4, 2 * n * n)).prop_map(move |(f, xs)| {
            let a = Matrix::from_fn(f, n, n, |i, j| f.from_i64(xs[i * n + j]));
            let b = Matrix::from_fn(f, n, n, |i, j| f.from_i64(xs[n * n + i * n + j]));
            (a, b)
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(x in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
            prop_assert_eq!(x.rank() + x.kernel().dim(), x.cols());
            for k in x.kernel().basis() {
                prop_assert!(x.apply(k).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn rref_is_idempotent(x in matrix(3, 4)) {
            let (r, p) = x.rref();
            prop_assert_eq!(r.rref(), (r.clone(), p));
        }

        #[test]
        fn trace_commutes((x, y) in pair(4)) {
            prop_assert_eq!((&x * &y).trace().unwrap(), (&y * &x).trace().unwrap());
        }

        #[test]
        fn grassmann((x, y) in pair(4)) {
            let u = x.column_space();
            let w = y.kernel();
            let s = u.sum(&w).unwrap();
            let i = u.intersect(&w).unwrap();
            prop_assert_eq!(u.dim() + w.dim(), s.dim() + i.dim());
            for b in i.basis() {
                prop_assert!(u.contains(b) && w.contains(b));
            }
        }

        #[test]
        fn solve_consistent_system((x, y) in pair(3)) {
            let rhs = x.apply(&y.column(0));
            match solve_general(&x, &rhs).unwrap() {
                Solution::None => prop_assert!(false, "system has a solution"),
                Solution::Unique(s) => prop_assert_eq!(x.apply(&s), rhs),
                Solution::Affine { particular, .. } => prop_assert_eq!(x.apply(&particular), rhs),
            }
        }
    }
}
