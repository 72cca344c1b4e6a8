use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::parse::parse_terms;
use super::{Ring, RingError};

/// Integer Laurent polynomial in `A`; no zero coefficients are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(exp, coeff);
        p
    }

    fn add_term(&mut self, exp: i64, coeff: i64) {
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates at `A = t` in another ring; `None` if a negative power of a non-unit is needed.
    pub fn substitute<R: Ring>(&self, ring: &R, t: &R::Elem) -> Option<R::Elem> {
        self.terms().try_fold(ring.zero(), |acc, (e, c)| {
            let m = ring.mul(&ring.from_int(c), &ring.pow(t, e)?);
            Some(ring.add(&acc, &m))
        })
    }
}

/// Degree-lexicographic: compare coefficients from the highest exponent down.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some((_, &c))) => return 0.cmp(&c),
                (Some((_, &c)), None) => return c.cmp(&0),
                (Some((ea, ca)), Some((eb, cb))) => {
                    let o = match ea.cmp(eb) {
                        Ordering::Greater => ca.cmp(&0),
                        Ordering::Less => 0.cmp(cb),
                        Ordering::Equal => ca.cmp(cb),
                    };
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The ring `Z[A, A^-1]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Laurent;

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Laurent")
    }
}

impl Ring for Laurent {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::default()
    }

    fn one(&self) -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let mut r = a.clone();
        for (e, c) in b.terms() {
            r.add_term(e, c);
        }
        r
    }

    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: a.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::default();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                r.add_term(ea + eb, ca * cb);
            }
        }
        r
    }

    /// Units are exactly `±A^k`.
    fn inv(&self, a: &LaurentPoly) -> Option<LaurentPoly> {
        match a.terms.iter().next() {
            Some((&e, &c)) if a.terms.len() == 1 && c.abs() == 1 => {
                Some(LaurentPoly::monomial(c, -e))
            }
            _ => None,
        }
    }

    fn from_int(&self, n: i64) -> LaurentPoly {
        LaurentPoly::monomial(n, 0)
    }

    fn elements(&self) -> Option<Vec<LaurentPoly>> {
        None
    }

    fn format(&self, a: &LaurentPoly) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in a.terms().rev() {
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 || e == 0 {
                out.push_str(&c.abs().to_string());
            }
            match e {
                0 => {}
                1 => out.push('A'),
                e => out.push_str(&format!("A^{e}")),
            }
        }
        out
    }

    fn parse(&self, text: &str) -> Result<LaurentPoly, RingError> {
        let mut r = LaurentPoly::default();
        for t in parse_terms(text, Some('A'))? {
            r.add_term(t.exp, t.coeff);
        }
        Ok(r)
    }
}
