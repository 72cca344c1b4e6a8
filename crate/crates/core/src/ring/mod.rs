//! Exact coefficient rings: `Z/n`, `GF(p^k)` and integer Laurent polynomials.
//!
//! Rings carry their own parameters (modulus, field polynomial); elements are
//! plain values interpreted relative to a ring instance.

mod galois;
mod laurent;
mod modular;
mod parse;
mod spec;

use std::fmt;
use std::hash::Hash;

use thiserror::Error;

pub use galois::GaloisField;
pub use laurent::{Laurent, LaurentPoly};
pub use modular::Zn;
pub use spec::{Element, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not a unit")]
    NonUnit(String),
    #[error("ring {0} is infinite")]
    Infinite(String),
    #[error("element {0} does not belong to ring {1}")]
    SpecMismatch(String, String),
    #[error("invalid ring spec `{0}`: {1}")]
    InvalidSpec(String, String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    /// All elements in canonical order, or `None` for infinite rings.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, text: &str) -> Result<Self::Elem, RingError>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inv(a).is_some()
    }

    fn try_inv(&self, a: &Self::Elem) -> Result<Self::Elem, RingError> {
        self.inv(a)
            .ok_or_else(|| RingError::NonUnit(self.format(a)))
    }

    /// `a^e`; negative exponents require a unit.
    fn pow(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            k >>= 1;
            if k > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        Some(acc)
    }

    fn units(&self) -> Result<Vec<Self::Elem>, RingError> {
        let all = self
            .elements()
            .ok_or_else(|| RingError::Infinite(self.to_string()))?;
        Ok(all.into_iter().filter(|a| self.is_unit(a)).collect())
    }
}
