use std::fmt;
use std::sync::Arc;

use super::parse::parse_terms;
use super::{Ring, RingError};

const MAX_ORDER: u64 = 1 << 16;
const MUL_TABLE_ORDER: u32 = 256;

/// `GF(p^k)` presented as `Z_p[t]/(f)` for an explicit monic irreducible `f`.
///
/// Elements are encoded as integers `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`, where
/// `c_i` is the coefficient of `t^i`; this encoding is also the canonical order.
#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
    q: u32,
    mul_table: Option<Arc<[u32]>>,
    inv_table: Arc<[u32]>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Remainder of `a` modulo monic `m` over `Z_p` (coefficients low degree first).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[shift + i] =
                    ((r[shift + i] as u64 + (p - c) as u64 * lead as u64) % p as u64) as u32;
            }
        }
    }
    r
}

impl GaloisField {
    /// `modulus` lists the coefficients of `f` from `t^0` up to `t^k`.
    pub fn new(p: u32, modulus: Vec<u32>) -> Result<Self, RingError> {
        let k = modulus.len().saturating_sub(1) as u32;
        let describe = || format!("GF({p}^{k};{})", format_poly(&modulus, p));
        let invalid = |msg: &str| RingError::InvalidSpec(describe(), msg.into());
        if !is_prime(p) {
            return Err(invalid("characteristic must be prime"));
        }
        if k == 0 {
            return Err(invalid("polynomial must have degree at least 1"));
        }
        if modulus.iter().any(|&c| c >= p) || modulus[k as usize] != 1 {
            return Err(invalid(
                "polynomial must be monic with coefficients reduced mod p",
            ));
        }
        let q = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| invalid("field too large"))? as u32;
        if !is_irreducible(&modulus, p) {
            return Err(invalid("polynomial is reducible"));
        }
        let mut field = GaloisField {
            p,
            k,
            modulus,
            q,
            mul_table: None,
            inv_table: Arc::from(vec![0u32; 0]),
        };
        let inv: Vec<u32> = (0..q)
            .map(|a| if a == 0 { 0 } else { field.pow_slow(a, q - 2) })
            .collect();
        field.inv_table = Arc::from(inv);
        if q <= MUL_TABLE_ORDER {
            let table: Vec<u32> = (0..q * q).map(|i| field.mul_slow(i / q, i % q)).collect();
            field.mul_table = Some(Arc::from(table));
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The class of `t`.
    pub fn generator(&self) -> u32 {
        self.from_coeffs(&[0, 1])
    }

    pub fn coeffs(&self, mut a: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }

    /// Encodes a polynomial of any degree, reducing it mod `f` and `p`.
    pub fn from_coeffs(&self, c: &[u32]) -> u32 {
        let c: Vec<u32> = c.iter().map(|&x| x % self.p).collect();
        let r = if c.len() > self.k as usize {
            poly_rem(&c, &self.modulus, self.p)
        } else {
            c
        };
        r.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    fn pow_slow(&self, a: u32, mut e: u32) -> u32 {
        let (mut acc, mut sq) = (1, a);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, sq);
            }
            sq = self.mul_slow(sq, sq);
            e >>= 1;
        }
        acc
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u32; 2 * self.k as usize];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % self.p as u64) as u32;
            }
        }
        self.from_coeffs(&prod)
    }
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        // all monic g of degree d
        let count = (p as u64).pow(d as u32);
        for mut lower in 0..count {
            let mut g: Vec<u32> = (0..d)
                .map(|_| {
                    let c = (lower % p as u64) as u32;
                    lower /= p as u64;
                    c
                })
                .collect();
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn format_poly(c: &[u32], _p: u32) -> String {
    let mut out = String::new();
    for (i, &x) in c.iter().enumerate().filter(|(_, &x)| x != 0) {
        if !out.is_empty() {
            out.push('+');
        }
        match (i, x) {
            (0, x) => out.push_str(&x.to_string()),
            (_, 1) => {}
            (_, x) => out.push_str(&x.to_string()),
        }
        match i {
            0 => {}
            1 => out.push('t'),
            i => out.push_str(&format!("t^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{};{})",
            self.p,
            self.k,
            format_poly(&self.modulus, self.p)
        )
    }
}

impl Ring for GaloisField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (ca, cb) = (self.coeffs(*a), self.coeffs(*b));
        let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.from_coeffs(&sum)
    }

    fn neg(&self, a: &u32) -> u32 {
        if self.p == 2 {
            return *a;
        }
        let c: Vec<u32> = self
            .coeffs(*a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.from_coeffs(&c)
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[(*a * self.q + *b) as usize],
            None => self.mul_slow(*a, *b),
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        (*a != 0).then(|| self.inv_table[*a as usize])
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.q).collect())
    }

    fn format(&self, a: &u32) -> String {
        format_poly(&self.coeffs(*a), self.p)
    }

    fn parse(&self, text: &str) -> Result<u32, RingError> {
        let mut acc = 0;
        for term in parse_terms(text, Some('t'))? {
            if term.exp < 0 {
                return Err(RingError::Syntax {
                    pos: 0,
                    msg: "negative exponent in a field element".into(),
                });
            }
            let c = term.coeff.rem_euclid(self.p as i64) as u32;
            let mono = self.pow(&self.generator(), term.exp).unwrap();
            acc = self.add(&acc, &self.mul(&mono, &self.from_int(c as i64)));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> GaloisField {
        GaloisField::new(2, vec![1, 1, 0, 1]).unwrap()
    }

    #[test]
    fn f8_arithmetic() {
        let f = f8();
        let t = f.parse("t").unwrap();
        let t2 = f.parse("t^2").unwrap();
        assert_eq!(f.format(&f.mul(&t, &t2)), "1+t");
        assert_eq!(f.add(&t, &t), 0);
        assert_eq!(f.format(&f.inv(&t).unwrap()), "1+t^2");
        assert_eq!(f.parse("1+t+t^2").unwrap(), 0b111);
        assert_eq!(f.units().unwrap().len(), 7);
        assert_eq!(f.to_string(), "GF(2^3;1+t+t^3)");
        assert_eq!(f.parse("t^3").unwrap(), f.parse("1+t").unwrap());
    }

    #[test]
    fn odd_characteristic() {
        // GF(9) = Z3[t]/(t^2+1)
        let f = GaloisField::new(3, vec![1, 0, 1]).unwrap();
        assert_eq!(f.order(), 9);
        let x = f.parse("2t+1").unwrap();
        assert_eq!(f.format(&x), "1+2t");
        assert_eq!(f.format(&f.mul(&x, &f.inv(&x).unwrap())), "1");
        assert_eq!(f.format(&f.neg(&x)), "2+t");
        for a in f.units().unwrap() {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GaloisField::new(2, vec![1, 0, 1]).is_err()); // (1+t)^2
        assert!(GaloisField::new(4, vec![1, 1, 1]).is_err());
        assert!(GaloisField::new(2, vec![1, 1, 0, 0]).is_err());
        assert!(GaloisField::new(2, vec![1, 1]).is_ok());
        assert!(GaloisField::new(2, vec![1, 1, 1]).is_ok());
    }
}
