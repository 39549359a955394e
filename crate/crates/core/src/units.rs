//! Matrix units `Δ_{i,j}` attached to the split basis and the projectors
//! `F_i = Δ_{i,i}`.
//!
//! `Δ_{i,j}` is the algebra element whose matrix in the split basis is the
//! elementary matrix `e_ij`. It has two closed forms:
//!
//! * `ν τ_i(A) E*_0 E_0 τ*_j(A*) / (φ_1 ... φ_j)`
//! * `ν^{↓⇓} η*_{d-i}(A*) E_d E*_d η_{d-j}(A) / (φ_d ... φ_{i+1})`
//!
//! with empty products equal to 1. Both are evaluated here in whatever
//! coordinates the model uses, and compared against `e_ij` after a change
//! to split coordinates.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::leonard::{split_decomposition, LeonardModel};
use crate::linalg::{Matrix, Subspace};
use crate::report::Check;

fn check_index(model: &LeonardModel, i: usize) -> Result<()> {
    if i > model.d() {
        return Err(Error::IndexOutOfRange { index: i, max: model.d() });
    }
    Ok(())
}

/// `φ_1 ... φ_j`
fn varphi_head(model: &LeonardModel, j: usize) -> crate::field::Scalar {
    (1..=j).fold(model.field().one(), |acc, k| &acc * model.varphi(k))
}

/// `φ_d ... φ_{i+1}`
fn varphi_tail(model: &LeonardModel, i: usize) -> crate::field::Scalar {
    (i + 1..=model.d()).fold(model.field().one(), |acc, k| &acc * model.varphi(k))
}

pub fn delta_unit_left(model: &LeonardModel, i: usize, j: usize) -> Result<Matrix> {
    check_index(model, i)?;
    check_index(model, j)?;
    let th = model.system().theta_seq();
    let ths = model.system().theta_star_seq();
    let core = model.e_star(0) * model.e(0);
    let m = &(&th.tau(i)?.eval_matrix(model.a()) * &core) * &ths.tau(j)?.eval_matrix(model.a_star());
    Ok(m.scale(&model.nu().checked_div(&varphi_head(model, j))?))
}

pub fn delta_unit_right(model: &LeonardModel, i: usize, j: usize) -> Result<Matrix> {
    check_index(model, i)?;
    check_index(model, j)?;
    let d = model.d();
    let th = model.system().theta_seq();
    let ths = model.system().theta_star_seq();
    let core = model.e(d) * model.e_star(d);
    let m = &(&ths.eta(d - i)?.eval_matrix(model.a_star()) * &core) * &th.eta(d - j)?.eval_matrix(model.a());
    Ok(m.scale(&model.nu_dd().checked_div(&varphi_tail(model, i))?))
}

/// The factors of both closed forms, evaluated once: `Δ_{i,j}` is
/// `left[i] * right[j]` by the first form and `left_dd[i] * right_dd[j]` by
/// the second.
struct Factors {
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    left_dd: Vec<Matrix>,
    right_dd: Vec<Matrix>,
}

impl Factors {
    fn new(model: &LeonardModel) -> Result<Self> {
        let d = model.d();
        let th = model.system().theta_seq();
        let ths = model.system().theta_star_seq();
        let core = (model.e_star(0) * model.e(0)).scale(model.nu());
        let core_dd = (model.e(d) * model.e_star(d)).scale(model.nu_dd());
        let mut f = Factors { left: Vec::new(), right: Vec::new(), left_dd: Vec::new(), right_dd: Vec::new() };
        for k in 0..=d {
            f.left.push(&th.tau(k)?.eval_matrix(model.a()) * &core);
            let c = varphi_head(model, k).inv()?;
            f.right.push(ths.tau(k)?.eval_matrix(model.a_star()).scale(&c));
            let c = varphi_tail(model, k).inv()?;
            f.left_dd.push(&ths.eta(d - k)?.eval_matrix(model.a_star()).scale(&c) * &core_dd);
            f.right_dd.push(th.eta(d - k)?.eval_matrix(model.a()));
        }
        Ok(f)
    }
}

/// The `(d+1) x (d+1)` grid of matrix units, `units[i][j] = Δ_{i,j}`,
/// evaluated through the first closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixUnitSet {
    units: Vec<Vec<Matrix>>,
}

impl MatrixUnitSet {
    pub fn new(model: &LeonardModel) -> Result<Self> {
        let f = Factors::new(model)?;
        let units = f.left.iter().map(|l| f.right.iter().map(|r| l * r).collect()).collect();
        Ok(MatrixUnitSet { units })
    }

    pub fn d(&self) -> usize {
        self.units.len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> &Matrix {
        &self.units[i][j]
    }
}

/// Both closed forms against `e_ij` in split coordinates, for every
/// `(i, j)`.
pub fn unit_formula_checks(model: &LeonardModel) -> Result<Vec<Check>> {
    let n = model.d() + 1;
    let f = Factors::new(model)?;
    let mut checks = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            let unit = Matrix::unit(model.field(), n, i, j);
            let left = model.to_split_coords(&(&f.left[i] * &f.right[j]));
            let right = model.to_split_coords(&(&f.left_dd[i] * &f.right_dd[j]));
            checks.push(Check::matrices(format!("units/left/({i},{j})"), &left, &unit));
            checks.push(Check::matrices(format!("units/right/({i},{j})"), &right, &unit));
        }
    }
    Ok(checks)
}

/// `Δ_{i,j} Δ_{r,s} = δ_{j,r} Δ_{i,s}` for all four indices (one check per
/// `(i, j)` covering every `(r, s)`), and linear independence of the units
/// via the rank of their stacked vectorizations.
pub fn unit_relations_check(set: &MatrixUnitSet) -> Vec<Check> {
    let n = set.d() + 1;
    let field = set.get(0, 0).field();
    let mut checks = Vec::with_capacity(n * n + 1);
    for i in 0..n {
        for j in 0..n {
            let mut witness = None;
            'outer: for r in 0..n {
                for s in 0..n {
                    let p = set.get(i, j) * set.get(r, s);
                    let ok = if j == r { &p == set.get(i, s) } else { p.is_zero() };
                    if !ok {
                        witness = Some(format!("Δ_({i},{j}) Δ_({r},{s}) != δ_({j},{r}) Δ_({i},{s})"));
                        break 'outer;
                    }
                }
            }
            let id = format!("units/product/({i},{j})");
            checks.push(match witness {
                None => Check::pass(id),
                Some(w) => Check::fail(id, w),
            });
        }
    }
    let stacked = Matrix::from_fn(field, n * n, n * n, |k, l| set.get(k / n, k % n).entries()[l].clone());
    let rank = stacked.rank();
    checks.push(Check::from_bool("units/basis", rank == n * n, || {
        format!("units span a space of dimension {rank}, expected {}", n * n)
    }));
    checks
}

/// `F_i = Δ_{i,i}`, through the first closed form.
pub fn f_projector(model: &LeonardModel, i: usize) -> Result<Matrix> {
    delta_unit_left(model, i, i)
}

/// Projector laws: `F_i F_j = δ_ij F_i`, `Σ F_i = I`, `rank F_i = 1`,
/// `(F_i - I) U_i = 0`, `F_i U_j = 0` for `j ≠ i`, and both closed forms of
/// `F_i` equal to the split-coordinate projector `e_ii`.
pub fn f_formulas_check(model: &LeonardModel) -> Result<Vec<Check>> {
    let d = model.d();
    let n = d + 1;
    let field = model.field();
    let fs: Vec<Matrix> = (0..n).map(|i| f_projector(model, i)).collect::<Result<_>>()?;
    let parts = split_decomposition(model.system())?;
    let id = Matrix::identity(field, n);
    let mut checks = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let p = &fs[i] * &fs[j];
            let expected = if i == j { fs[i].clone() } else { Matrix::zeros(field, n, n) };
            checks.push(Check::matrices(format!("projector/product/({i},{j})"), &p, &expected));
        }
    }
    let total = fs.iter().fold(Matrix::zeros(field, n, n), |acc, f| &acc + f);
    checks.push(Check::matrices("projector/sum", &total, &id));
    let zero = Subspace::zero(field, n);
    for i in 0..n {
        let rank = fs[i].rank();
        checks.push(Check::from_bool(format!("projector/rank/{i}"), rank == 1, || format!("rank {rank}")));
        let fixes = parts[i].image(&(&fs[i] - &id))? == zero;
        checks.push(Check::from_bool(format!("projector/fixes-U/{i}"), fixes, || format!("(F_{i} - I) U_{i} != 0")));
        let kills = (0..n).filter(|&j| j != i).find(|&j| parts[j].image(&fs[i]).map_or(true, |u| u != zero));
        checks.push(Check::from_bool(format!("projector/kills-other-U/{i}"), kills.is_none(), || {
            format!("F_{i} U_{} != 0", kills.unwrap_or(0))
        }));
    }
    for i in 0..n {
        let unit = Matrix::unit(field, n, i, i);
        let left = model.to_split_coords(&delta_unit_left(model, i, i)?);
        let right = model.to_split_coords(&delta_unit_right(model, i, i)?);
        checks.push(Check::matrices(format!("projector/left-form/{i}"), &left, &unit));
        checks.push(Check::matrices(format!("projector/right-form/{i}"), &right, &unit));
    }
    Ok(checks)
}
