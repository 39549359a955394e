use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar literal {0:?}")]
    MalformedScalar(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {modulus} is too small (need at least {min})")]
    ModulusTooSmall { modulus: u64, min: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{name} has length {actual}, expected {expected}")]
    Length { name: &'static str, expected: usize, actual: usize },
    #[error("{0} not mutually distinct")]
    NotDistinct(&'static str),
    #[error("{name}_{index} is zero")]
    ZeroSplitValue { name: &'static str, index: usize },
    #[error("not multiplicity-free with the given eigenvalues: {0}")]
    NotMultiplicityFree(String),
    #[error("not a Leonard system: {}", join(.0))]
    NotLeonardSystem(Vec<PairWitness>),
    #[error("not a Leonard system: split decomposition fails: {0}")]
    NotSplit(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("antiautomorphism: {0}")]
    Antiautomorphism(String),
}

/// Which tridiagonality condition a witness refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sandwich {
    /// `E_i A* E_j`
    DualInPrimary,
    /// `E*_i A E*_j`
    PrimaryInDual,
}

/// A failing `(i, j)` pair of the tridiagonality conditions: the product was
/// nonzero where `|i - j| > 1`, or zero where `|i - j| = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairWitness {
    pub sandwich: Sandwich,
    pub i: usize,
    pub j: usize,
}

impl PairWitness {
    pub fn expected_zero(&self) -> bool {
        self.i.abs_diff(self.j) > 1
    }
}

impl fmt::Display for PairWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = (self.i, self.j);
        match self.sandwich {
            Sandwich::DualInPrimary => write!(f, "E_{i} A* E_{j}")?,
            Sandwich::PrimaryInDual => write!(f, "E*_{i} A E*_{j}")?,
        }
        if self.expected_zero() {
            write!(f, " is nonzero but |{i}-{j}|>1")
        } else {
            write!(f, " is zero but |{i}-{j}|=1")
        }
    }
}

fn join(ws: &[PairWitness]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (k, w) in ws.iter().enumerate() {
        if k > 0 {
            out.push_str("; ");
        }
        let _ = write!(out, "{w}");
    }
    out
}
