//! Exact scalars: arbitrary-precision rationals and prime fields GF(p).
//!
//! Every value carries its [`Field`] so that mixing fields is caught at the
//! operation boundary. The `checked_*` methods report a mismatch as an
//! [`Error`]; the operator impls on references panic instead and are meant
//! for code that already holds scalars from a single field.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// GF(p). The modulus must be an odd prime.
    pub fn prime(modulus: u64) -> Result<Self> {
        if modulus <= 2 {
            return Err(Error::ModulusTooSmall { modulus, min: 3 });
        }
        if !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(Field::Prime(modulus))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(*p),
        }
    }

    /// Rejects prime fields too small to hold `d + 1` distinct eigenvalues of
    /// the form `d - 2i`.
    pub fn check_degree(&self, d: usize) -> Result<()> {
        if let Field::Prime(p) = self {
            let min = 2 * (d as u64 + 1) + 1;
            if *p < min {
                return Err(Error::ModulusTooSmall { modulus: *p, min });
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar(Repr::Rational(BigRational::from_integer(BigInt::from(n)))),
            Field::Prime(p) => {
                let r = (n as i128).rem_euclid(*p as i128) as u64;
                Scalar(Repr::Prime { value: r, modulus: *p })
            }
        }
    }

    /// `num / den` as a field element.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        self.fraction(BigInt::from(num), BigInt::from(den))
    }

    fn fraction(&self, num: BigInt, den: BigInt) -> Result<Scalar> {
        match self {
            Field::Rational => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar(Repr::Rational(BigRational::new(num, den))))
            }
            Field::Prime(p) => {
                let modulus = BigInt::from(*p);
                let n = num.mod_floor(&modulus).to_u64().expect("residue fits in u64");
                let d = den.mod_floor(&modulus).to_u64().expect("residue fits in u64");
                if d == 0 {
                    return Err(Error::DivisionByZero);
                }
                let inv = mod_pow(d, p - 2, *p);
                Ok(Scalar(Repr::Prime { value: mul_mod(n, inv, *p), modulus: *p }))
            }
        }
    }

    /// Parses a literal: optional sign, decimal integer, optional `/` and a
    /// decimal denominator.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let malformed = || Error::MalformedScalar(text.to_string());
        let (num_text, den_text) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let digits = num_text.strip_prefix(['+', '-']).unwrap_or(num_text);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let num = BigInt::from_str(num_text.strip_prefix('+').unwrap_or(num_text)).map_err(|_| malformed())?;
        let den = match den_text {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed());
                }
                BigInt::from_str(d).map_err(|_| malformed())?
            }
        };
        self.fraction(num, den)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

/// An exact field element in canonical form: a reduced fraction with positive
/// denominator, or a residue in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Rational(_) => Field::Rational,
            Repr::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Prime { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.field(), right: other.field() })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.add_unchecked(&other.neg_value()))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(r) => Scalar(Repr::Rational(r.recip())),
            Repr::Prime { value, modulus } => {
                Scalar(Repr::Prime { value: mod_pow(*value, modulus - 2, *modulus), modulus: *modulus })
            }
        })
    }

    fn neg_value(&self) -> Scalar {
        match &self.0 {
            Repr::Rational(r) => Scalar(Repr::Rational(-r)),
            Repr::Prime { value, modulus } => {
                Scalar(Repr::Prime { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus })
            }
        }
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            (Repr::Prime { value: a, modulus }, Repr::Prime { value: b, modulus: m }) if modulus == m => {
                let s = (*a as u128 + *b as u128) % *modulus as u128;
                Scalar(Repr::Prime { value: s as u64, modulus: *modulus })
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            (Repr::Prime { value: a, modulus }, Repr::Prime { value: b, modulus: m }) if modulus == m => {
                Scalar(Repr::Prime { value: mul_mod(*a, *b, *modulus), modulus: *modulus })
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    /// Canonical literal; `field.parse(&s.to_literal()) == s`.
    pub fn to_literal(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_unchecked(rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.add_unchecked(&rhs.neg_value())
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_unchecked(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_value()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_value()
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the witness set is exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
