use std::fmt;
use std::str::FromStr;

use super::parse::parse_terms;
use super::{GaloisField, Laurent, LaurentPoly, Ring, RingError, Zn};

/// A ring chosen at runtime, e.g. from a CLI flag or a bracket file header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Modular(Zn),
    Galois(GaloisField),
    Laurent(Laurent),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Residue(u32),
    Field(u32),
    Poly(LaurentPoly),
}

impl RingSpec {
    pub fn modular(n: u32) -> Result<Self, RingError> {
        Zn::new(n).map(RingSpec::Modular)
    }

    pub fn galois(p: u32, modulus: Vec<u32>) -> Result<Self, RingError> {
        GaloisField::new(p, modulus).map(RingSpec::Galois)
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, RingSpec::Laurent(_))
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (RingSpec::Modular(z), Element::Residue(v)) => *v < z.modulus(),
            (RingSpec::Galois(f), Element::Field(v)) => *v < f.order(),
            (RingSpec::Laurent(_), Element::Poly(_)) => true,
            _ => false,
        }
    }

    fn check(&self, e: &Element) -> Result<(), RingError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(RingError::SpecMismatch(format!("{e:?}"), self.to_string()))
        }
    }

    pub fn checked_add(&self, a: &Element, b: &Element) -> Result<Element, RingError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: &Element, b: &Element) -> Result<Element, RingError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_inv(&self, a: &Element) -> Result<Element, RingError> {
        self.check(a)?;
        self.try_inv(a)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Modular(z) => z.fmt(f),
            RingSpec::Galois(g) => g.fmt(f),
            RingSpec::Laurent(l) => l.fmt(f),
        }
    }
}

impl FromStr for RingSpec {
    type Err = RingError;

    /// Accepts `Zn`, `GF(p^k;f)` and `Laurent`.
    fn from_str(s: &str) -> Result<Self, RingError> {
        let s = s.trim();
        let invalid = |msg: &str| RingError::InvalidSpec(s.to_string(), msg.to_string());
        if s == "Laurent" {
            return Ok(RingSpec::Laurent(Laurent));
        }
        if let Some(n) = s.strip_prefix('Z') {
            let n: u32 = n.parse().map_err(|_| invalid("expected Z<modulus>"))?;
            return RingSpec::modular(n);
        }
        let body = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| invalid("expected Zn, GF(p^k;f) or Laurent"))?;
        let (order, poly) = body
            .split_once(';')
            .ok_or_else(|| invalid("missing `;f`"))?;
        let (p, k) = order
            .split_once('^')
            .ok_or_else(|| invalid("expected p^k"))?;
        let p: u32 = p
            .trim()
            .parse()
            .map_err(|_| invalid("bad characteristic"))?;
        let k: usize = k.trim().parse().map_err(|_| invalid("bad degree"))?;
        if p < 2 {
            return Err(invalid("characteristic must be prime"));
        }
        let mut coeffs = vec![0u32; k + 1];
        for t in parse_terms(poly, Some('t'))? {
            if t.exp < 0 || t.exp as usize > k {
                return Err(invalid("polynomial degree does not match k"));
            }
            let c = &mut coeffs[t.exp as usize];
            *c = ((*c as i64 + t.coeff).rem_euclid(p as i64)) as u32;
        }
        RingSpec::galois(p, coeffs)
    }
}

macro_rules! dispatch {
    ($self:ident, $z:ident => $mod_expr:expr, $g:ident => $gal_expr:expr, $l:ident => $lau_expr:expr) => {
        match $self {
            RingSpec::Modular($z) => $mod_expr,
            RingSpec::Galois($g) => $gal_expr,
            RingSpec::Laurent($l) => $lau_expr,
        }
    };
}

fn mismatch(spec: &RingSpec, e: &Element) -> ! {
    panic!("element {e:?} used with ring {spec}")
}

impl RingSpec {
    fn residue(&self, e: &Element) -> u32 {
        match e {
            Element::Residue(v) | Element::Field(v) => *v,
            Element::Poly(_) => mismatch(self, e),
        }
    }

    fn poly<'a>(&self, e: &'a Element) -> &'a LaurentPoly {
        match e {
            Element::Poly(p) => p,
            _ => mismatch(self, e),
        }
    }
}

impl Ring for RingSpec {
    type Elem = Element;

    fn zero(&self) -> Element {
        self.from_int(0)
    }

    fn one(&self) -> Element {
        self.from_int(1)
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        dispatch!(self,
            z => Element::Residue(z.add(&self.residue(a), &self.residue(b))),
            g => Element::Field(g.add(&self.residue(a), &self.residue(b))),
            l => Element::Poly(l.add(self.poly(a), self.poly(b))))
    }

    fn neg(&self, a: &Element) -> Element {
        dispatch!(self,
            z => Element::Residue(z.neg(&self.residue(a))),
            g => Element::Field(g.neg(&self.residue(a))),
            l => Element::Poly(l.neg(self.poly(a))))
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        dispatch!(self,
            z => Element::Residue(z.mul(&self.residue(a), &self.residue(b))),
            g => Element::Field(g.mul(&self.residue(a), &self.residue(b))),
            l => Element::Poly(l.mul(self.poly(a), self.poly(b))))
    }

    fn inv(&self, a: &Element) -> Option<Element> {
        dispatch!(self,
            z => z.inv(&self.residue(a)).map(Element::Residue),
            g => g.inv(&self.residue(a)).map(Element::Field),
            l => l.inv(self.poly(a)).map(Element::Poly))
    }

    fn from_int(&self, n: i64) -> Element {
        dispatch!(self,
            z => Element::Residue(z.from_int(n)),
            g => Element::Field(g.from_int(n)),
            l => Element::Poly(l.from_int(n)))
    }

    fn elements(&self) -> Option<Vec<Element>> {
        dispatch!(self,
            z => z.elements().map(|v| v.into_iter().map(Element::Residue).collect()),
            g => g.elements().map(|v| v.into_iter().map(Element::Field).collect()),
            _l => None)
    }

    fn format(&self, a: &Element) -> String {
        dispatch!(self,
            z => z.format(&self.residue(a)),
            g => g.format(&self.residue(a)),
            l => l.format(self.poly(a)))
    }

    fn parse(&self, text: &str) -> Result<Element, RingError> {
        dispatch!(self,
            z => z.parse(text).map(Element::Residue),
            g => g.parse(text).map(Element::Field),
            l => l.parse(text).map(Element::Poly))
    }
}
