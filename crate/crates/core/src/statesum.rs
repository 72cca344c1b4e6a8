//! The state-sum value of a colored diagram and the multiset invariant.
//!
//! A state chooses the oriented or disoriented smoothing at each crossing; bit
//! `i` of a state mask is set when crossing `i` is smoothed disoriented.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::bracket::Bracket;
use crate::coloring::{crossing_frame, enumerate_colorings, Coloring};
use crate::diagram::{LinkDiagram, Sign};
use crate::ring::Ring;

/// States are enumerated exhaustively, so crossing counts are capped.
pub const MAX_CROSSINGS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateSumError {
    #[error("coloring is not valid for this diagram and biquandle")]
    ColoringMismatch,
    #[error("{0} crossings exceeds the state-sum limit of {MAX_CROSSINGS}")]
    TooManyCrossings(usize),
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Port pairs joined by a smoothing; ports are `4i + position`.
fn smoothing_pairs(sign: Sign, disoriented: bool) -> [(usize, usize); 2] {
    const AB_CD: [(usize, usize); 2] = [(0, 1), (2, 3)];
    const AD_BC: [(usize, usize); 2] = [(0, 3), (1, 2)];
    match (sign, disoriented) {
        (Sign::Positive, false) | (Sign::Negative, true) => AB_CD,
        _ => AD_BC,
    }
}

/// Number of circles in the smoothed diagram, free loops included.
pub fn state_circles(d: &LinkDiagram, mask: u64) -> usize {
    let c = d.crossing_count();
    let mut parent: Vec<usize> = (0..4 * c).collect();
    let union = |p: &mut Vec<usize>, u: usize, v: usize| {
        let (ru, rv) = (find(p, u), find(p, v));
        if ru != rv {
            p[ru] = rv;
            true
        } else {
            false
        }
    };
    let mut merges = 0;
    let mut first_port = vec![usize::MAX; d.semiarc_count()];
    for i in 0..c {
        for (pos, &s) in d.ends(i).iter().enumerate() {
            let port = 4 * i + pos;
            if first_port[s] == usize::MAX {
                first_port[s] = port;
            } else if union(&mut parent, first_port[s], port) {
                merges += 1;
            }
        }
        for (u, v) in smoothing_pairs(d.sign(i), mask >> i & 1 == 1) {
            if union(&mut parent, 4 * i + u, 4 * i + v) {
                merges += 1;
            }
        }
    }
    4 * c - merges + d.free_loops()
}

/// Circle counts for every state mask.
pub fn all_state_circles(d: &LinkDiagram) -> Result<Vec<usize>, StateSumError> {
    let c = d.crossing_count();
    if c > MAX_CROSSINGS {
        return Err(StateSumError::TooManyCrossings(c));
    }
    Ok((0..1u64 << c).map(|m| state_circles(d, m)).collect())
}

/// Precomputed data for evaluating many colorings of one diagram.
struct Evaluator<'a, R: Ring> {
    d: &'a LinkDiagram,
    br: &'a Bracket<R>,
    circles: Vec<usize>,
    delta_pows: Vec<R::Elem>,
    writhe_factor: R::Elem,
}

impl<'a, R: Ring> Evaluator<'a, R> {
    fn new(d: &'a LinkDiagram, br: &'a Bracket<R>) -> Result<Self, StateSumError> {
        let ring = br.ring();
        let circles = all_state_circles(d)?;
        let max_k = circles.iter().copied().max().unwrap_or(0);
        let mut delta_pows = vec![ring.one()];
        for k in 0..max_k {
            delta_pows.push(ring.mul(&delta_pows[k], br.delta()));
        }
        let e = d.negative_count() as i64 - d.positive_count() as i64;
        let writhe_factor = ring.pow(br.w(), e).expect("w is a unit");
        Ok(Evaluator {
            d,
            br,
            circles,
            delta_pows,
            writhe_factor,
        })
    }

    fn value(&self, f: &Coloring) -> R::Elem {
        let ring = self.br.ring();
        let c = self.d.crossing_count();
        // (oriented, disoriented) coefficient per crossing
        let coef: Vec<(R::Elem, R::Elem)> = (0..c)
            .map(|i| {
                let [x, y, ..] = crossing_frame(self.d, i).map(|s| f.arc(s));
                match self.d.sign(i) {
                    Sign::Positive => (self.br.a(x, y).clone(), self.br.b(x, y).clone()),
                    Sign::Negative => (self.br.a_inv(x, y).clone(), self.br.b_inv(x, y).clone()),
                }
            })
            .collect();
        let mut total = ring.zero();
        for (mask, &k) in self.circles.iter().enumerate() {
            let mut term = self.delta_pows[k].clone();
            for (i, (o, dis)) in coef.iter().enumerate() {
                term = ring.mul(&term, if mask >> i & 1 == 1 { dis } else { o });
            }
            total = ring.add(&total, &term);
        }
        ring.mul(&total, &self.writhe_factor)
    }
}

/// The state-sum value of one coloring.
pub fn beta_value<R: Ring>(
    d: &LinkDiagram,
    br: &Bracket<R>,
    f: &Coloring,
) -> Result<R::Elem, StateSumError> {
    if !f.is_valid(d, br.biquandle()) {
        return Err(StateSumError::ColoringMismatch);
    }
    Ok(Evaluator::new(d, br)?.value(f))
}

/// Every coloring with its value, in coloring order.
pub fn beta_values<R: Ring>(
    d: &LinkDiagram,
    br: &Bracket<R>,
) -> Result<Vec<(Coloring, R::Elem)>, StateSumError> {
    let ev = Evaluator::new(d, br)?;
    let colorings = enumerate_colorings(d, br.biquandle());
    Ok(colorings
        .into_par_iter()
        .map(|f| {
            let v = ev.value(&f);
            (f, v)
        })
        .collect())
}

pub fn invariant<R: Ring>(
    d: &LinkDiagram,
    br: &Bracket<R>,
) -> Result<InvariantValue<R>, StateSumError> {
    let mut v = InvariantValue::empty(br.ring().clone());
    for (_, e) in beta_values(d, br)? {
        v.insert(e);
    }
    Ok(v)
}

/// Multiset of values; also read as the polynomial `Σ m·u^value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantValue<R: Ring> {
    ring: R,
    values: BTreeMap<R::Elem, usize>,
}

impl<R: Ring> InvariantValue<R> {
    pub fn empty(ring: R) -> Self {
        InvariantValue {
            ring,
            values: BTreeMap::new(),
        }
    }

    pub fn from_values(ring: R, values: impl IntoIterator<Item = R::Elem>) -> Self {
        let mut v = InvariantValue::empty(ring);
        for e in values {
            v.insert(e);
        }
        v
    }

    pub fn insert(&mut self, e: R::Elem) {
        *self.values.entry(e).or_default() += 1;
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// `(value, multiplicity)` in canonical ring order.
    pub fn entries(&self) -> impl Iterator<Item = (&R::Elem, usize)> {
        self.values.iter().map(|(e, &m)| (e, m))
    }

    pub fn multiplicity(&self, e: &R::Elem) -> usize {
        self.values.get(e).copied().unwrap_or(0)
    }

    /// Setting `u = 1` leaves the number of colorings.
    pub fn evaluate_at_u1(&self) -> usize {
        self.values.values().sum()
    }

    fn wrapped(&self, e: &R::Elem) -> String {
        let s = self.ring.format(e);
        if s.get(1..).is_some_and(|t| t.contains(['+', '-'])) {
            format!("({s})")
        } else {
            s
        }
    }

    /// e.g. `2u^3+2u^4`, `4u`, `3u^(1+t)`.
    pub fn polynomial_string(&self) -> String {
        if self.values.is_empty() {
            return "0".into();
        }
        let one = self.ring.one();
        self.values
            .iter()
            .map(|(e, &m)| {
                let coeff = if m == 1 { String::new() } else { m.to_string() };
                if self.ring.is_zero(e) {
                    m.to_string()
                } else if *e == one {
                    format!("{coeff}u")
                } else {
                    format!("{coeff}u^{}", self.wrapped(e))
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// e.g. `{2×(1+t), 3×t}`.
    pub fn multiset_string(&self) -> String {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|(e, m)| format!("{m}×{}", self.wrapped(e)))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let values: Vec<serde_json::Value> = self
            .values
            .iter()
            .map(|(e, m)| json!({"exponent": self.ring.format(e), "multiplicity": m}))
            .collect();
        json!({"values": values, "count": self.evaluate_at_u1()})
    }
}
