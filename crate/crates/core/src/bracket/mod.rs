//! Biquandle brackets: verification, the standard constructions, and
//! scalar/C-equivalence transforms.

pub mod axioms;
mod rmatrix;

use std::fmt;

use thiserror::Error;

use crate::biquandle::{Biquandle, BiquandleError};
use crate::ring::{Laurent, Ring, RingError, RingSpec};

pub use axioms::Letter;
pub use rmatrix::{is_classical_rmatrix, Matrix, RMatrices};

/// Cell coordinates in errors are 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("{matrix}[{x},{y}] = {value} is not a unit")]
    NonUnit {
        matrix: char,
        x: usize,
        y: usize,
        value: String,
    },
    #[error("axiom (ii): delta at ({x},{y}) differs from delta at (1,1)")]
    DeltaInconsistent { x: usize, y: usize },
    #[error("axiom (i) fails at x = {x}")]
    KinkCondition { x: usize },
    #[error("axiom (iii): equation {equation} fails at (x,y,z) = ({x},{y},{z})")]
    YangBaxter {
        equation: usize,
        x: usize,
        y: usize,
        z: usize,
    },
    #[error("not a 2-cocycle at (x,y,z) = ({x},{y},{z})")]
    NotCocycle { x: usize, y: usize, z: usize },
    #[error("mixed cocycle condition ({condition}) fails at (x,y,z) = ({x},{y},{z})")]
    MixedCocycle {
        condition: usize,
        x: usize,
        y: usize,
        z: usize,
    },
    #[error("biquandle is not a quandle")]
    NotQuandle,
    #[error("malformed bracket: {0}")]
    Malformed(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Biquandle(#[from] BiquandleError),
}

/// A validated bracket; `A`, `B` are row-major `n x n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bracket<R: Ring> {
    biquandle: Biquandle,
    ring: R,
    a: Vec<R::Elem>,
    b: Vec<R::Elem>,
    a_inv: Vec<R::Elem>,
    b_inv: Vec<R::Elem>,
    delta: R::Elem,
    w: R::Elem,
}

/// Every failed condition, or only the first when `all` is false.
pub fn violations<R: Ring>(
    q: &Biquandle,
    ring: &R,
    a: &[R::Elem],
    b: &[R::Elem],
    all: bool,
) -> Vec<BracketError> {
    let n = q.size();
    let mut out = Vec::new();
    if a.len() != n * n || b.len() != n * n {
        out.push(BracketError::Malformed(format!(
            "expected two {n}x{n} matrices"
        )));
        return out;
    }
    for (name, m) in [('A', a), ('B', b)] {
        for (i, v) in m.iter().enumerate() {
            if !ring.is_unit(v) {
                out.push(BracketError::NonUnit {
                    matrix: name,
                    x: i / n + 1,
                    y: i % n + 1,
                    value: ring.format(v),
                });
                if !all {
                    return out;
                }
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    let delta_at = |i: usize| {
        let (ai, bi) = (ring.inv(&a[i]).unwrap(), ring.inv(&b[i]).unwrap());
        ring.neg(&ring.add(&ring.mul(&a[i], &bi), &ring.mul(&ai, &b[i])))
    };
    let delta = delta_at(0);
    for i in 1..n * n {
        if delta_at(i) != delta {
            out.push(BracketError::DeltaInconsistent {
                x: i / n + 1,
                y: i % n + 1,
            });
            if !all {
                return out;
            }
        }
    }
    let w = ring.add(&ring.mul(&delta, &a[0]), &b[0]);
    let w_inv = ring.inv(&w);
    for x in 0..n {
        let i = x * n + x;
        let (ai, bi) = (ring.inv(&a[i]).unwrap(), ring.inv(&b[i]).unwrap());
        let first = ring.add(&ring.mul(&delta, &a[i]), &b[i]) == w;
        let second = w_inv.as_ref() == Some(&ring.add(&ring.mul(&delta, &ai), &bi));
        if !(first && second) {
            out.push(BracketError::KinkCondition { x: x + 1 });
            if !all {
                return out;
            }
        }
    }
    let coef = |l: Letter, c: usize| match l {
        Letter::A => a[c].clone(),
        Letter::B => b[c].clone(),
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let cells = axioms::triple_cells(q, x, y, z);
                for eq in 0..5 {
                    if !axioms::holds(ring, &delta, eq, &cells, &coef) {
                        out.push(BracketError::YangBaxter {
                            equation: eq + 1,
                            x: x + 1,
                            y: y + 1,
                            z: z + 1,
                        });
                        if !all {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

/// The four conditions satisfied by any quandle bracket.
pub fn mixed_cocycle_check<R: Ring>(
    q: &Biquandle,
    ring: &R,
    a: &[R::Elem],
    b: &[R::Elem],
) -> Result<(), BracketError> {
    if !q.is_quandle() {
        return Err(BracketError::NotQuandle);
    }
    let n = q.size();
    let c = |r: usize, s: usize| r * n + s;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (l1, l2, r1, r2) = (
                    c(x, y),
                    c(q.under(x, y), z),
                    c(x, z),
                    c(q.under(x, z), q.under(y, z)),
                );
                let conditions = [(a, a, a, a), (a, b, b, a), (b, a, a, b), (b, b, b, b)];
                for (k, (m1, m2, m3, m4)) in conditions.iter().enumerate() {
                    if ring.mul(&m1[l1], &m2[l2]) != ring.mul(&m3[r1], &m4[r2]) {
                        return Err(BracketError::MixedCocycle {
                            condition: k + 1,
                            x: x + 1,
                            y: y + 1,
                            z: z + 1,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

impl<R: Ring> Bracket<R> {
    pub fn verify(
        biquandle: Biquandle,
        ring: R,
        a: Vec<R::Elem>,
        b: Vec<R::Elem>,
    ) -> Result<Self, BracketError> {
        if let Some(e) = violations(&biquandle, &ring, &a, &b, false)
            .into_iter()
            .next()
        {
            return Err(e);
        }
        let a_inv: Vec<R::Elem> = a.iter().map(|v| ring.inv(v).unwrap()).collect();
        let b_inv: Vec<R::Elem> = b.iter().map(|v| ring.inv(v).unwrap()).collect();
        let delta = ring.neg(&ring.add(&ring.mul(&a[0], &b_inv[0]), &ring.mul(&a_inv[0], &b[0])));
        let w = ring.add(&ring.mul(&delta, &a[0]), &b[0]);
        Ok(Bracket {
            biquandle,
            ring,
            a,
            b,
            a_inv,
            b_inv,
            delta,
            w,
        })
    }

    /// `A ≡ t`, `B ≡ t⁻¹`.
    pub fn constant(biquandle: Biquandle, ring: R, t: &R::Elem) -> Result<Self, BracketError> {
        let ti = ring.try_inv(t)?;
        let m = biquandle.size().pow(2);
        Bracket::verify(biquandle, ring, vec![t.clone(); m], vec![ti; m])
    }

    /// `A = B = γ_C` with `γ_C(x,y) = C(x) C(y)⁻¹ C(x◁y)⁻¹ C(y◁̄x)`.
    pub fn coboundary(biquandle: Biquandle, ring: R, c: &[R::Elem]) -> Result<Self, BracketError> {
        let gamma = gamma(&biquandle, &ring, c)?;
        Bracket::verify(biquandle, ring, gamma.clone(), gamma)
    }

    /// `A = B = ψ` for a unit-valued 2-cocycle `ψ`.
    pub fn cocycle(biquandle: Biquandle, ring: R, psi: Vec<R::Elem>) -> Result<Self, BracketError> {
        let n = biquandle.size();
        if psi.len() != n * n {
            return Err(BracketError::Malformed(format!(
                "expected a {n}x{n} matrix"
            )));
        }
        for x in 0..n {
            if psi[x * n + x] != ring.one() {
                return Err(BracketError::NotCocycle {
                    x: x + 1,
                    y: x + 1,
                    z: x + 1,
                });
            }
        }
        let coef = |_: Letter, c: usize| psi[c].clone();
        let delta = ring.from_int(-2);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !axioms::holds(
                        &ring,
                        &delta,
                        0,
                        &axioms::triple_cells(&biquandle, x, y, z),
                        &coef,
                    ) {
                        return Err(BracketError::NotCocycle {
                            x: x + 1,
                            y: y + 1,
                            z: z + 1,
                        });
                    }
                }
            }
        }
        Bracket::verify(biquandle, ring, psi.clone(), psi)
    }

    pub fn scalar_transform(&self, alpha: &R::Elem) -> Result<Self, BracketError> {
        self.ring.try_inv(alpha)?;
        let scale = |m: &[R::Elem]| m.iter().map(|v| self.ring.mul(alpha, v)).collect();
        Bracket::verify(
            self.biquandle.clone(),
            self.ring.clone(),
            scale(&self.a),
            scale(&self.b),
        )
    }

    pub fn c_transform(&self, c: &[R::Elem]) -> Result<Self, BracketError> {
        let g = gamma(&self.biquandle, &self.ring, c)?;
        let apply = |m: &[R::Elem]| m.iter().zip(&g).map(|(v, g)| self.ring.mul(v, g)).collect();
        Bracket::verify(
            self.biquandle.clone(),
            self.ring.clone(),
            apply(&self.a),
            apply(&self.b),
        )
    }

    pub fn biquandle(&self) -> &Biquandle {
        &self.biquandle
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.biquandle.size()
    }

    #[inline]
    pub fn a(&self, x: usize, y: usize) -> &R::Elem {
        &self.a[x * self.size() + y]
    }

    #[inline]
    pub fn b(&self, x: usize, y: usize) -> &R::Elem {
        &self.b[x * self.size() + y]
    }

    #[inline]
    pub fn a_inv(&self, x: usize, y: usize) -> &R::Elem {
        &self.a_inv[x * self.size() + y]
    }

    #[inline]
    pub fn b_inv(&self, x: usize, y: usize) -> &R::Elem {
        &self.b_inv[x * self.size() + y]
    }

    pub fn a_matrix(&self) -> &[R::Elem] {
        &self.a
    }

    pub fn b_matrix(&self) -> &[R::Elem] {
        &self.b
    }

    pub fn delta(&self) -> &R::Elem {
        &self.delta
    }

    pub fn w(&self) -> &R::Elem {
        &self.w
    }

    /// Row-major `[A | B]` entries, the canonical sort key.
    pub fn key(&self) -> Vec<R::Elem> {
        let n = self.size();
        (0..n)
            .flat_map(|x| {
                self.a[x * n..(x + 1) * n]
                    .iter()
                    .chain(&self.b[x * n..(x + 1) * n])
                    .cloned()
            })
            .collect()
    }

    /// The `n x 2n` block matrix `[A | B]`, one row per line.
    pub fn block_matrix(&self) -> String {
        let n = self.size();
        let mut out = String::new();
        for x in 0..n {
            let row: Vec<String> = (0..n)
                .map(|y| self.ring.format(self.a(x, y)))
                .chain((0..n).map(|y| self.ring.format(self.b(x, y))))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn gamma<R: Ring>(q: &Biquandle, ring: &R, c: &[R::Elem]) -> Result<Vec<R::Elem>, BracketError> {
    let n = q.size();
    if c.len() != n {
        return Err(BracketError::Malformed(format!(
            "expected {n} entries in C"
        )));
    }
    let ci: Vec<R::Elem> = c
        .iter()
        .map(|v| ring.try_inv(v))
        .collect::<Result<_, _>>()?;
    Ok((0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            let p = ring.mul(&c[x], &ci[y]);
            ring.mul(&ring.mul(&p, &ci[q.under(x, y)]), &c[q.over(y, x)])
        })
        .collect())
}

/// The Kauffman bracket: one-element biquandle, `A = [A]`, `B = [A⁻¹]`.
pub fn kauffman_bracket() -> Bracket<Laurent> {
    let l = Laurent;
    let a = l.parse("A").unwrap();
    let ai = l.inv(&a).unwrap();
    Bracket::verify(Biquandle::trivial(1).unwrap(), l, vec![a], vec![ai])
        .expect("Kauffman bracket is valid")
}

/// Bracket file: `ring: <spec>` then `n` rows of `2n` elements.
pub fn parse_bracket_file(
    text: &str,
) -> Result<(RingSpec, Vec<Vec<crate::ring::Element>>), BracketError> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| BracketError::Malformed("empty bracket file".into()))?;
    let spec = header
        .strip_prefix("ring:")
        .ok_or_else(|| BracketError::Malformed("first line must be `ring: <spec>`".into()))?;
    let ring: RingSpec = spec.trim().parse()?;
    let rows = lines
        .map(|l| {
            l.split_whitespace()
                .filter(|t| *t != "|")
                .map(|t| ring.parse(t))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((ring, rows))
}

impl Bracket<RingSpec> {
    pub fn from_file_text(biquandle: Biquandle, text: &str) -> Result<Self, BracketError> {
        let (ring, rows) = parse_bracket_file(text)?;
        let (a, b) = split_block(biquandle.size(), rows)?;
        Bracket::verify(biquandle, ring, a, b)
    }

    pub fn to_file_text(&self) -> String {
        format!("ring: {}\n{}", self.ring, self.block_matrix())
    }
}

/// Splits `n` rows of `[A | B]` into row-major `A` and `B`.
pub fn split_block<E: Clone>(
    n: usize,
    rows: Vec<Vec<E>>,
) -> Result<(Vec<E>, Vec<E>), BracketError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != 2 * n) {
        return Err(BracketError::Malformed(format!(
            "expected {n} rows of {} entries",
            2 * n
        )));
    }
    let a = rows.iter().flat_map(|r| r[..n].to_vec()).collect();
    let b = rows.iter().flat_map(|r| r[n..].to_vec()).collect();
    Ok((a, b))
}

impl<R: Ring> fmt::Display for Bracket<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.block_matrix())
    }
}
