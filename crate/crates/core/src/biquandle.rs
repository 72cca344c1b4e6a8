//! Finite biquandles as pairs of operation tables.
//!
//! Elements are `0..n` internally and `1..n` in every text format.

use std::fmt;

use thiserror::Error;

use crate::ring::{Ring, RingError, Zn};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiquandleError {
    #[error("axiom ({axiom}) fails at {witness:?}: {detail}")]
    AxiomViolation {
        axiom: &'static str,
        witness: Vec<usize>,
        detail: String,
    },
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `under[x][y] = x ◁ y`, `over[x][y] = x ◁̄ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biquandle {
    n: usize,
    under: Vec<usize>,
    over: Vec<usize>,
    // x with x ◁ y = r, indexed [y][r]
    under_solve: Vec<usize>,
    // y with y ◁̄ x = r, indexed [x][r]
    over_solve: Vec<usize>,
    // (x, y) with (x ◁ y, y ◁̄ x) = (r, s), indexed [r][s]
    pair_solve: Vec<(usize, usize)>,
}

fn violation(axiom: &'static str, witness: &[usize], detail: impl Into<String>) -> BiquandleError {
    BiquandleError::AxiomViolation {
        axiom,
        witness: witness.iter().map(|x| x + 1).collect(),
        detail: detail.into(),
    }
}

impl Biquandle {
    /// Validates 0-indexed row-major tables.
    pub fn new(n: usize, under: Vec<usize>, over: Vec<usize>) -> Result<Self, BiquandleError> {
        if n == 0 || under.len() != n * n || over.len() != n * n {
            return Err(BiquandleError::Malformed(format!(
                "expected two {n}x{n} tables"
            )));
        }
        if let Some(v) = under.iter().chain(&over).find(|&&v| v >= n) {
            return Err(BiquandleError::Malformed(format!(
                "entry {} out of range 1..{n}",
                v + 1
            )));
        }
        let at = |t: &[usize], x: usize, y: usize| t[x * n + y];
        for x in 0..n {
            if at(&under, x, x) != at(&over, x, x) {
                return Err(violation("i", &[x], "x◁x != x◁̄x"));
            }
        }
        let mut under_solve = vec![usize::MAX; n * n];
        let mut over_solve = vec![usize::MAX; n * n];
        let mut pair_solve = vec![(usize::MAX, usize::MAX); n * n];
        for y in 0..n {
            for x in 0..n {
                let r = at(&under, x, y);
                if under_solve[y * n + r] != usize::MAX {
                    return Err(violation("ii", &[x, y], "β_y is not injective"));
                }
                under_solve[y * n + r] = x;
                let s = at(&over, x, y);
                if over_solve[y * n + s] != usize::MAX {
                    return Err(violation("ii", &[x, y], "α_y is not injective"));
                }
                over_solve[y * n + s] = x;
                let (r, s) = (at(&under, x, y), at(&over, y, x));
                if pair_solve[r * n + s].0 != usize::MAX {
                    return Err(violation("ii", &[x, y], "S is not injective"));
                }
                pair_solve[r * n + s] = (x, y);
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let u = |a, b| at(&under, a, b);
                    let o = |a, b| at(&over, a, b);
                    if u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)) {
                        return Err(violation("iii", &[x, y, z], "(x◁y)◁(z◁y) != (x◁z)◁(y◁̄z)"));
                    }
                    if o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)) {
                        return Err(violation("iii", &[x, y, z], "(x◁y)◁̄(z◁y) != (x◁̄z)◁(y◁̄z)"));
                    }
                    if o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)) {
                        return Err(violation("iii", &[x, y, z], "(x◁̄y)◁̄(z◁̄y) != (x◁̄z)◁̄(y◁z)"));
                    }
                }
            }
        }
        Ok(Biquandle {
            n,
            under,
            over,
            under_solve,
            over_solve,
            pair_solve,
        })
    }

    /// Validates 1-indexed nested tables.
    pub fn from_tables(under: &[Vec<usize>], over: &[Vec<usize>]) -> Result<Self, BiquandleError> {
        let n = under.len();
        let flat = |t: &[Vec<usize>]| -> Result<Vec<usize>, BiquandleError> {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(BiquandleError::Malformed(
                    "tables must be square and of equal size".into(),
                ));
            }
            t.iter()
                .flatten()
                .map(|&v| {
                    v.checked_sub(1)
                        .ok_or_else(|| BiquandleError::Malformed("entries are 1-indexed".into()))
                })
                .collect()
        };
        Biquandle::new(n, flat(under)?, flat(over)?)
    }

    /// Reads the `n x 2n` block matrix `[◁ | ◁̄]`.
    pub fn parse(text: &str) -> Result<Self, BiquandleError> {
        let rows: Vec<Vec<usize>> = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split_whitespace()
                    .filter(|t| *t != "|")
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| BiquandleError::Malformed(format!("bad entry `{t}`")))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != 2 * n) {
            return Err(BiquandleError::Malformed(format!(
                "expected {n} rows of {} entries",
                2 * n
            )));
        }
        let under: Vec<Vec<usize>> = rows.iter().map(|r| r[..n].to_vec()).collect();
        let over: Vec<Vec<usize>> = rows.iter().map(|r| r[n..].to_vec()).collect();
        Biquandle::from_tables(&under, &over)
    }

    /// `x ◁ y = σ(x) = x ◁̄ y`; `sigma` is a 0-indexed permutation.
    pub fn constant_action(sigma: &[usize]) -> Result<Self, BiquandleError> {
        let n = sigma.len();
        let table: Vec<usize> = (0..n * n).map(|i| sigma[i / n]).collect();
        Biquandle::new(n, table.clone(), table)
    }

    /// `x ◁ y = 2y - x mod n`, `x ◁̄ y = x`. Element `k` in `1..n` is the residue `k mod n`.
    pub fn dihedral(n: usize) -> Result<Self, BiquandleError> {
        let idx = |v: i64| ((v - 1).rem_euclid(n as i64)) as usize;
        let val = |i: usize| (i + 1) as i64;
        let under = (0..n * n)
            .map(|i| idx(2 * val(i % n) - val(i / n)))
            .collect();
        let over = (0..n * n).map(|i| i / n).collect();
        Biquandle::new(n, under, over)
    }

    /// `x ◁ y = tx + (r⁻¹ - t)y`, `x ◁̄ y = r⁻¹x` over `Z/n`; the residue 0 is element `n`.
    pub fn alexander(ring: &Zn, t: u32, r: u32) -> Result<Self, BiquandleError> {
        let t = t % ring.modulus();
        ring.try_inv(&t)?;
        let rinv = ring.try_inv(&(r % ring.modulus()))?;
        let n = ring.modulus() as usize;
        let res = |i: usize| ((i + 1) % n) as u32;
        let idx = |v: u32| (v as usize + n - 1) % n;
        let coef = ring.sub(&rinv, &t);
        let under = (0..n * n)
            .map(|i| idx(ring.add(&ring.mul(&t, &res(i / n)), &ring.mul(&coef, &res(i % n)))))
            .collect();
        let over = (0..n * n)
            .map(|i| idx(ring.mul(&rinv, &res(i / n))))
            .collect();
        Biquandle::new(n, under, over)
    }

    pub fn trivial(n: usize) -> Result<Self, BiquandleError> {
        let t: Vec<usize> = (0..n * n).map(|i| i / n).collect();
        Biquandle::new(n, t.clone(), t)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn under(&self, x: usize, y: usize) -> usize {
        self.under[x * self.n + y]
    }

    #[inline]
    pub fn over(&self, x: usize, y: usize) -> usize {
        self.over[x * self.n + y]
    }

    /// The `x` with `x ◁ y = r`.
    #[inline]
    pub fn under_solve(&self, y: usize, r: usize) -> usize {
        self.under_solve[y * self.n + r]
    }

    /// The `y` with `y ◁̄ x = s`.
    #[inline]
    pub fn over_solve(&self, x: usize, s: usize) -> usize {
        self.over_solve[x * self.n + s]
    }

    /// The `(x, y)` with `x ◁ y = r` and `y ◁̄ x = s`.
    #[inline]
    pub fn pair_solve(&self, r: usize, s: usize) -> (usize, usize) {
        self.pair_solve[r * self.n + s]
    }

    pub fn is_quandle(&self) -> bool {
        (0..self.n * self.n).all(|i| self.over[i] == i / self.n)
    }
}

impl fmt::Display for Biquandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|y| self.under(x, y))
                .chain((0..self.n).map(|y| self.over(x, y)))
                .map(|v| (v + 1).to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn alexander_matches_block_matrix() {
        let z5 = Zn::new(5).unwrap();
        let x = Biquandle::alexander(&z5, 2, 4).unwrap();
        let expected = "4 1 3 5 2 4 4 4 4 4\n1 3 5 2 4 3 3 3 3 3\n3 5 2 4 1 2 2 2 2 2\n\
                        5 2 4 1 3 1 1 1 1 1\n2 4 1 3 5 5 5 5 5 5\n";
        assert_eq!(x.to_string(), expected);
        assert_eq!(
            Biquandle::alexander(&z5, 1, 1).unwrap(),
            Biquandle::trivial(5).unwrap()
        );
        let z3 = Zn::new(3).unwrap();
        assert_eq!(
            Biquandle::alexander(&z3, 2, 1).unwrap(),
            Biquandle::dihedral(3).unwrap()
        );
        assert!(Biquandle::alexander(&z5, 0, 1).is_err());
    }

    #[test]
    fn named_tables() {
        let ca2 = Biquandle::constant_action(&[1, 0]).unwrap();
        assert_eq!(ca2.to_string(), "2 2 2 2\n1 1 1 1\n");
        assert!(!ca2.is_quandle());
        let d3 = Biquandle::dihedral(3).unwrap();
        assert_eq!(d3.to_string(), "1 3 2 1 1 1\n3 2 1 2 2 2\n2 1 3 3 3 3\n");
        assert!(d3.is_quandle());
        assert!(Biquandle::dihedral(4).unwrap().is_quandle());
        assert!(Biquandle::dihedral(1).unwrap().is_quandle());
        assert!(Biquandle::constant_action(&[1, 2, 0]).is_ok());
        assert_eq!(Biquandle::parse(&d3.to_string()).unwrap(), d3);
        assert_eq!(
            Biquandle::parse("1 | 1").unwrap(),
            Biquandle::trivial(1).unwrap()
        );
    }

    #[test]
    fn violations() {
        // under[1][2] = 2 breaks bijectivity of β_2 on the trivial table
        let err = Biquandle::from_tables(&[vec![1, 2], vec![2, 2]], &[vec![1, 1], vec![2, 2]])
            .unwrap_err();
        assert!(
            matches!(err, BiquandleError::AxiomViolation { axiom: "ii", .. }),
            "{err}"
        );
        let err = Biquandle::from_tables(&[vec![2, 1], vec![1, 2]], &[vec![1, 1], vec![2, 2]])
            .unwrap_err();
        assert!(matches!(
            err,
            BiquandleError::AxiomViolation { axiom: "i", .. }
        ));
        assert!(Biquandle::parse("1 2 1\n").is_err());
        assert!(Biquandle::parse("1 3\n").is_err());
    }

    #[test]
    fn solvers_invert_operations() {
        let x = Biquandle::alexander(&Zn::new(5).unwrap(), 2, 4).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(x.under_solve(b, x.under(a, b)), a);
                assert_eq!(x.over_solve(a, x.over(b, a)), b);
                assert_eq!(x.pair_solve(x.under(a, b), x.over(b, a)), (a, b));
            }
        }
    }

    proptest! {
        #[test]
        fn constant_action_is_always_a_biquandle(perm in (1usize..=6).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())) {
            prop_assert!(Biquandle::constant_action(&perm).is_ok());
        }
    }
}
