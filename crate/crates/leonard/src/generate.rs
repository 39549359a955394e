//! Seeded random instances: hypercube pairs under random affine maps,
//! written in a random basis.
//!
//! Every instance draws from its own ChaCha stream, selected by its index,
//! so a batch can be generated in any order or in parallel and still come
//! out the same.

use leonard_core::field::{Field, Scalar};
use leonard_core::fixtures::{hypercube_pair, Affine};
use leonard_core::leonard::RawPair;
use leonard_core::linalg::Matrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Bound on the absolute value of random integers over the rationals.
const RATIONAL_BOUND: i64 = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub name: String,
    pub raw: RawPair,
}

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-RATIONAL_BOUND..=RATIONAL_BOUND)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

pub fn random_nonzero(rng: &mut impl Rng, field: Field) -> Scalar {
    loop {
        let x = random_scalar(rng, field);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_matrix(rng: &mut impl Rng, field: Field, n: usize) -> Matrix {
    Matrix::from_fn(field, n, n, |_, _| random_scalar(rng, field))
}

pub fn random_affine(rng: &mut impl Rng, field: Field) -> Affine {
    Affine {
        a: random_nonzero(rng, field),
        b: random_scalar(rng, field),
        c: random_nonzero(rng, field),
        e: random_scalar(rng, field),
    }
}

/// `L U` with `L` unit lower and `U` unit upper triangular, entries in
/// `-2..=2`: invertible with determinant 1 and small inverse.
pub fn random_unimodular(rng: &mut impl Rng, field: Field, n: usize) -> Matrix {
    let mut entry = |keep: bool| if keep { field.from_i64(rng.gen_range(-2..=2)) } else { field.zero() };
    let l = Matrix::from_fn(field, n, n, |i, j| if i == j { field.one() } else { entry(i > j) });
    let u = Matrix::from_fn(field, n, n, |i, j| if i == j { field.one() } else { entry(i < j) });
    &l * &u
}

/// The diameter-`d` hypercube pair, moved by a random affine map and
/// conjugated by a random unimodular matrix. Eigenvalue orderings follow
/// the affine map.
pub fn random_raw_pair(rng: &mut impl Rng, field: Field, d: usize) -> RawPair {
    let raw = random_affine(rng, field).apply(&hypercube_pair(field, d)).expect("affine coefficients are nonzero");
    let p = random_unimodular(rng, field, d + 1);
    let p_inv = p.inverse().expect("unimodular");
    let a = &(&p * &raw.a) * &p_inv;
    let a_star = &(&p * &raw.a_star) * &p_inv;
    RawPair::new(a, a_star, raw.theta, raw.theta_star).expect("similar pair keeps its shape")
}

pub fn field_tag(field: Field) -> String {
    match field {
        Field::Rational => "rational".into(),
        Field::Prime(p) => format!("gf{p}"),
    }
}

/// `trials` instances for each `d` in `0..=dmax`, in `(d, trial)` order.
pub fn batch(seed: u64, field: Field, dmax: usize, trials: usize) -> Vec<Generated> {
    let mut out = Vec::with_capacity((dmax + 1) * trials);
    for d in 0..=dmax {
        for t in 0..trials {
            let index = (d * trials + t) as u64;
            let stream = match field {
                Field::Rational => index,
                Field::Prime(_) => index | 1 << 63,
            };
            let mut rng = rng_for(seed, stream);
            out.push(Generated {
                name: format!("selftest/{}/d={d}/{t}", field_tag(field)),
                raw: random_raw_pair(&mut rng, field, d),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use leonard_core::leonard::LeonardModel;

    #[test]
    fn deterministic() {
        let f = Field::prime(10007).unwrap();
        assert_eq!(batch(7, f, 3, 4), batch(7, f, 3, 4));
        assert_ne!(batch(7, f, 3, 4), batch(8, f, 3, 4));
    }

    #[test]
    fn generated_pairs_are_leonard_systems() {
        for f in [Field::Rational, Field::prime(101).unwrap()] {
            for g in batch(1, f, 4, 3) {
                assert!(LeonardModel::from_raw(&g.raw).is_ok(), "{}", g.name);
            }
        }
    }
}
