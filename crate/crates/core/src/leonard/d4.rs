//! The dihedral group generated by `*`, `↓`, `⇓` and its action on
//! parameter arrays.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;

use super::ParameterArray;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Swap `(A, E)` with `(A*, E*)`.
    Star,
    /// Reverse the second idempotent sequence.
    Down,
    /// Reverse the first idempotent sequence.
    DoubleDown,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::Star => '*',
            Generator::Down => '↓',
            Generator::DoubleDown => '⇓',
        }
    }
}

/// A group element, stored as its effect on `(A; E_i; A*; E*_i)`: whether
/// the two halves are swapped and which of the original idempotent
/// sequences `E`, `E*` appear reversed.
///
/// Words are read left to right: `Φ^{↓*}` is `(Φ^↓)^*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct D4Element {
    swap: bool,
    rev_e: bool,
    rev_e_star: bool,
}

impl D4Element {
    pub const IDENTITY: Self = D4Element { swap: false, rev_e: false, rev_e_star: false };
    pub const STAR: Self = D4Element { swap: true, rev_e: false, rev_e_star: false };
    pub const DOWN: Self = D4Element { swap: false, rev_e: false, rev_e_star: true };
    pub const DOUBLE_DOWN: Self = D4Element { swap: false, rev_e: true, rev_e_star: false };

    /// All eight relatives in the order
    /// `Φ, Φ^↓, Φ^⇓, Φ^↓⇓, Φ^*, Φ^↓*, Φ^⇓*, Φ^↓⇓*`.
    pub fn all() -> [D4Element; 8] {
        let mut out = [Self::IDENTITY; 8];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = D4Element { swap: k >= 4, rev_e_star: k % 2 == 1, rev_e: (k / 2) % 2 == 1 };
        }
        out
    }

    pub fn from_word(word: &[Generator]) -> Self {
        word.iter().fold(Self::IDENTITY, |g, &s| g.then(s))
    }

    /// `g` followed by one more generator.
    pub fn then(self, s: Generator) -> Self {
        let mut g = self;
        match (s, self.swap) {
            (Generator::Star, _) => g.swap = !g.swap,
            (Generator::Down, false) | (Generator::DoubleDown, true) => g.rev_e_star = !g.rev_e_star,
            (Generator::Down, true) | (Generator::DoubleDown, false) => g.rev_e = !g.rev_e,
        }
        g
    }

    /// `g` followed by `h`.
    pub fn compose(self, h: D4Element) -> Self {
        h.word().into_iter().fold(self, D4Element::then)
    }

    pub fn inverse(self) -> Self {
        Self::all()
            .into_iter()
            .find(|h| self.compose(*h) == Self::IDENTITY)
            .expect("every element of a group has an inverse")
    }

    /// Canonical word: optional `↓`, optional `⇓`, optional `*`.
    pub fn word(self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(3);
        if self.rev_e_star {
            w.push(Generator::Down);
        }
        if self.rev_e {
            w.push(Generator::DoubleDown);
        }
        if self.swap {
            w.push(Generator::Star);
        }
        w
    }

    pub fn swaps(self) -> bool {
        self.swap
    }

    pub fn reverses_e(self) -> bool {
        self.rev_e
    }

    pub fn reverses_e_star(self) -> bool {
        self.rev_e_star
    }

    /// Parses a word such as `↓⇓*`. ASCII aliases: `d` for `↓`, `D` for `⇓`.
    /// The empty word, `1` and `Φ` denote the identity; a leading `Φ^` is
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let body = text.strip_prefix("Φ").unwrap_or(text);
        let body = body.strip_prefix('^').unwrap_or(body);
        if body == "1" {
            return Ok(Self::IDENTITY);
        }
        let mut word = Vec::new();
        for c in body.chars() {
            word.push(match c {
                '*' => Generator::Star,
                '↓' | 'd' => Generator::Down,
                '⇓' | 'D' => Generator::DoubleDown,
                _ => return Err(Error::Inconsistent(alloc::format!("unknown D4 word {text:?}"))),
            });
        }
        Ok(Self::from_word(&word))
    }

    /// `Φ`, `Φ^↓`, ..., `Φ^↓⇓*`.
    pub fn name(self) -> String {
        let mut s = String::from("Φ");
        let w = self.word();
        if !w.is_empty() {
            s.push('^');
            s.extend(w.iter().map(|g| g.symbol()));
        }
        s
    }
}

impl fmt::Display for D4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn reversed(xs: &[Scalar]) -> Vec<Scalar> {
    xs.iter().rev().cloned().collect()
}

/// How one generator changes a complete parameter array
/// `(θ; θ*; φ; φ̂)`:
///
/// * `*`: `(θ*; θ; φ; reversed φ̂)`
/// * `↓`: `(θ; reversed θ*; reversed φ̂; reversed φ)`
/// * `⇓`: `(reversed θ; θ*; φ̂; φ)`
pub fn apply_generator(s: Generator, pa: &ParameterArray) -> Result<ParameterArray> {
    let phi = pa.phi().ok_or_else(|| Error::Inconsistent("second split sequence not computed".into()))?;
    let (theta, theta_star, varphi, phi) = match s {
        Generator::Star => (pa.theta_star().to_vec(), pa.theta().to_vec(), pa.varphi().to_vec(), reversed(phi)),
        Generator::Down => (pa.theta().to_vec(), reversed(pa.theta_star()), reversed(phi), reversed(pa.varphi())),
        Generator::DoubleDown => (reversed(pa.theta()), pa.theta_star().to_vec(), phi.to_vec(), pa.varphi().to_vec()),
    };
    ParameterArray::new(pa.field(), theta, theta_star, varphi, Some(phi))
}

/// Applies a word letter by letter, without reducing it first.
pub fn apply_word(word: &[Generator], pa: &ParameterArray) -> Result<ParameterArray> {
    word.iter().try_fold(pa.clone(), |acc, &s| apply_generator(s, &acc))
}

/// Parameter array of `Φ^g`.
pub fn d4_apply(g: D4Element, pa: &ParameterArray) -> Result<ParameterArray> {
    apply_word(&g.word(), pa)
}

/// The parameter arrays of all eight relatives, in table order.
pub fn d4_orbit(pa: &ParameterArray) -> Result<Vec<(D4Element, ParameterArray)>> {
    D4Element::all().into_iter().map(|g| Ok((g, d4_apply(g, pa)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn table_names() {
        let names: Vec<String> = D4Element::all().iter().map(|g| g.name()).collect();
        assert_eq!(names, ["Φ", "Φ^↓", "Φ^⇓", "Φ^↓⇓", "Φ^*", "Φ^↓*", "Φ^⇓*", "Φ^↓⇓*"]);
        for g in D4Element::all() {
            assert_eq!(D4Element::parse(&g.name()).unwrap(), g);
        }
        assert_eq!(D4Element::parse("dD*").unwrap().name(), "Φ^↓⇓*");
        assert!(D4Element::parse("x").is_err());
    }

    #[test]
    fn defining_relations() {
        for s in [Star, Down, DoubleDown] {
            assert_eq!(D4Element::from_word(&[s, s]), D4Element::IDENTITY);
        }
        assert_eq!(D4Element::from_word(&[DoubleDown, Star]), D4Element::from_word(&[Star, Down]));
        assert_eq!(D4Element::from_word(&[Down, Star]), D4Element::from_word(&[Star, DoubleDown]));
        assert_eq!(D4Element::from_word(&[Down, DoubleDown]), D4Element::from_word(&[DoubleDown, Down]));
    }

    #[test]
    fn group_structure() {
        let all = D4Element::all();
        for g in all {
            assert_eq!(g.compose(g.inverse()), D4Element::IDENTITY);
            assert_eq!(g.inverse().compose(g), D4Element::IDENTITY);
            for h in all {
                assert!(all.contains(&g.compose(h)));
                for k in all {
                    assert_eq!(g.compose(h).compose(k), g.compose(h.compose(k)));
                }
            }
        }
        // D4 is not abelian; * and ↓ do not commute.
        assert_ne!(D4Element::STAR.compose(D4Element::DOWN), D4Element::DOWN.compose(D4Element::STAR));
        assert_eq!(all.iter().filter(|g| g.inverse() != **g).count(), 2);
    }
}
