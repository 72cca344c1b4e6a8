use std::fmt;

use num_integer::Integer;

use super::parse::parse_terms;
use super::{Ring, RingError};

/// The residue ring `Z/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zn {
    n: u32,
}

impl Zn {
    pub fn new(n: u32) -> Result<Self, RingError> {
        if n < 2 || n > i32::MAX as u32 {
            return Err(RingError::InvalidSpec(
                format!("Z{n}"),
                "modulus must be in 2..2^31".into(),
            ));
        }
        Ok(Zn { n })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }
}

impl fmt::Display for Zn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}", self.n)
    }
}

impl Ring for Zn {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.n as u64) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.n - a
        }
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.n as u64) as u32
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        let g = (*a as i64).extended_gcd(&(self.n as i64));
        (g.gcd == 1).then(|| g.x.rem_euclid(self.n as i64) as u32)
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.n as i64) as u32
    }

    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.n).collect())
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    fn parse(&self, text: &str) -> Result<u32, RingError> {
        let terms = parse_terms(text, None)?;
        Ok(terms
            .iter()
            .fold(0, |acc, t| self.add(&acc, &self.from_int(t.coeff))))
    }
}
