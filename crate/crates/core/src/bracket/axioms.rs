//! The five exchange equations of a biquandle bracket, as data.
//!
//! For a triple `(x, y, z)` each side multiplies coefficients at three cells:
//! the left side at `(x,y), (y,z), (x◁y, z◁̄y)` and the right side at
//! `(x,z), (y◁̄x, z◁̄x), (x◁z, y◁z)`.

use crate::biquandle::Biquandle;
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    A,
    B,
}

use Letter::{A, B};

/// `δ^delta · L₁ L₂ L₃` over the three cells of one side.
#[derive(Debug, Clone, Copy)]
pub struct Monomial {
    pub delta: bool,
    pub letters: [Letter; 3],
}

const fn m(letters: [Letter; 3]) -> Monomial {
    Monomial {
        delta: false,
        letters,
    }
}

const fn dm(letters: [Letter; 3]) -> Monomial {
    Monomial {
        delta: true,
        letters,
    }
}

pub struct Equation {
    pub lhs: &'static [Monomial],
    pub rhs: &'static [Monomial],
}

pub const EQUATIONS: [Equation; 5] = [
    Equation {
        lhs: &[m([A, A, A])],
        rhs: &[m([A, A, A])],
    },
    Equation {
        lhs: &[m([A, B, B])],
        rhs: &[m([B, B, A])],
    },
    Equation {
        lhs: &[m([B, A, B])],
        rhs: &[m([B, A, B])],
    },
    Equation {
        lhs: &[m([A, A, B])],
        rhs: &[m([A, B, A]), m([A, A, B]), dm([A, B, B]), m([B, B, B])],
    },
    Equation {
        lhs: &[m([B, A, A]), m([A, B, A]), dm([B, B, A]), m([B, B, B])],
        rhs: &[m([B, A, A])],
    },
];

/// Row-major cell indices `[lhs₁, lhs₂, lhs₃, rhs₁, rhs₂, rhs₃]` for a triple.
pub fn triple_cells(q: &Biquandle, x: usize, y: usize, z: usize) -> [usize; 6] {
    let n = q.size();
    let c = |r: usize, s: usize| r * n + s;
    [
        c(x, y),
        c(y, z),
        c(q.under(x, y), q.over(z, y)),
        c(x, z),
        c(q.over(y, x), q.over(z, x)),
        c(q.under(x, z), q.under(y, z)),
    ]
}

fn side<R: Ring>(
    ring: &R,
    delta: &R::Elem,
    terms: &[Monomial],
    cells: &[usize],
    coef: &impl Fn(Letter, usize) -> R::Elem,
) -> R::Elem {
    terms.iter().fold(ring.zero(), |acc, t| {
        let mut p = if t.delta { delta.clone() } else { ring.one() };
        for (l, &c) in t.letters.iter().zip(cells) {
            p = ring.mul(&p, &coef(*l, c));
        }
        ring.add(&acc, &p)
    })
}

/// Whether equation `eq` (0-based) holds at the given cells.
pub fn holds<R: Ring>(
    ring: &R,
    delta: &R::Elem,
    eq: usize,
    cells: &[usize; 6],
    coef: &impl Fn(Letter, usize) -> R::Elem,
) -> bool {
    let e = &EQUATIONS[eq];
    side(ring, delta, e.lhs, &cells[..3], coef) == side(ring, delta, e.rhs, &cells[3..], coef)
}
