//! Exhaustive search for brackets on a finite biquandle over a finite ring.
//!
//! Candidates are stratified by `δ`: for a fixed `δ` each cell takes a pair
//! `(A, B)` of units with `-AB⁻¹ - A⁻¹B = δ`. Diagonal cells are assigned first
//! (fixing `w`), then off-diagonal cells row-major; every exchange equation is
//! checked as soon as its six cells are assigned.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::biquandle::Biquandle;
use crate::bracket::{axioms, Bracket, Letter};
use crate::ring::{Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("pair table would hold {pairs} entries, above the bound {bound}")]
    RingTooLarge { pairs: usize, bound: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Keep only the first `limit` brackets in canonical order.
    pub limit: Option<usize>,
    /// Upper bound on `|R^×|²`, the size of the per-δ pair tables.
    pub max_pairs: usize,
    pub dedup: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limit: None,
            max_pairs: 1 << 20,
            dedup: false,
        }
    }
}

/// Brackets in one class under scalar and C-equivalence.
#[derive(Debug, Clone)]
pub struct EquivalenceClass<R: Ring> {
    pub representative: Bracket<R>,
    /// Indices into the deduplicated list.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct SearchReport<R: Ring> {
    pub biquandle: Biquandle,
    pub ring: R,
    pub brackets: Vec<Bracket<R>>,
    /// Search-tree nodes visited, over all strata.
    pub candidates: u64,
    /// Brackets found per δ, before any limit.
    pub per_delta: BTreeMap<R::Elem, usize>,
    pub elapsed: Duration,
    pub classes: Option<Vec<EquivalenceClass<R>>>,
}

impl<R: Ring> SearchReport<R> {
    pub fn to_json(&self) -> serde_json::Value {
        let r = &self.ring;
        let mat = |b: &Bracket<R>| -> Vec<Vec<String>> {
            let n = b.size();
            (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| r.format(b.a(x, y)))
                        .chain((0..n).map(|y| r.format(b.b(x, y))))
                        .collect()
                })
                .collect()
        };
        let brackets: Vec<_> = self
            .brackets
            .iter()
            .map(|b| json!({"delta": r.format(b.delta()), "w": r.format(b.w()), "matrix": mat(b)}))
            .collect();
        let per_delta: serde_json::Map<String, serde_json::Value> = self
            .per_delta
            .iter()
            .map(|(d, c)| (r.format(d), json!(c)))
            .collect();
        let mut out = json!({
            "biquandle": self.biquandle.to_string(),
            "ring": r.to_string(),
            "count": self.brackets.len(),
            "candidates": self.candidates,
            "per_delta": per_delta,
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "brackets": brackets,
        });
        if let Some(classes) = &self.classes {
            out["classes"] = classes
                .iter()
                .map(|c| json!({"representative": mat(&c.representative), "members": c.members}))
                .collect();
        }
        out
    }
}

/// `(A[x][y], B[x][y])` for one cell.
type Cell<R> = (<R as Ring>::Elem, <R as Ring>::Elem);

/// Candidate `(A, B)` matrices, row-major.
type Pair<R> = (Vec<<R as Ring>::Elem>, Vec<<R as Ring>::Elem>);

struct Stratum<'a, R: Ring> {
    q: &'a Biquandle,
    ring: &'a R,
    delta: R::Elem,
    pairs: Vec<(R::Elem, R::Elem)>,
    order: Vec<usize>,
    /// Triples completed when the cell at each order position is assigned.
    checks: Vec<Vec<[usize; 6]>>,
    a: Vec<R::Elem>,
    b: Vec<R::Elem>,
    nodes: u64,
    found: Vec<Pair<R>>,
}

impl<R: Ring> Stratum<'_, R> {
    fn run(&mut self, pos: usize, w: Option<&(R::Elem, R::Elem)>) {
        if pos == self.order.len() {
            self.found.push((self.a.clone(), self.b.clone()));
            return;
        }
        let n = self.q.size();
        let cell = self.order[pos];
        let diagonal = cell / n == cell % n;
        for k in 0..self.pairs.len() {
            self.nodes += 1;
            let (pa, pb) = self.pairs[k].clone();
            let mut next_w = None;
            if diagonal {
                let r = self.ring;
                let lhs = r.add(&r.mul(&self.delta, &pa), &pb);
                let inv = r.add(
                    &r.mul(&self.delta, &r.inv(&pa).unwrap()),
                    &r.inv(&pb).unwrap(),
                );
                match w {
                    Some((w, w_inv)) if lhs != *w || inv != *w_inv => continue,
                    Some(_) => {}
                    None => match r.inv(&lhs) {
                        Some(li) if li == inv => next_w = Some((lhs, li)),
                        _ => continue,
                    },
                }
            }
            self.a[cell] = pa;
            self.b[cell] = pb;
            let ok = {
                let (a, b) = (&self.a, &self.b);
                let coef = |l: Letter, c: usize| match l {
                    Letter::A => a[c].clone(),
                    Letter::B => b[c].clone(),
                };
                self.checks[pos].iter().all(|cells| {
                    (0..5).all(|e| axioms::holds(self.ring, &self.delta, e, cells, &coef))
                })
            };
            if ok {
                let w_here = next_w.clone();
                self.run(pos + 1, w_here.as_ref().or(w));
            }
        }
    }
}

/// Diagonal cells first, then off-diagonal cells row-major.
fn cell_order(n: usize) -> Vec<usize> {
    let diag = (0..n).map(|x| x * n + x);
    let off = (0..n * n).filter(|c| c / n != c % n);
    diag.chain(off).collect()
}

pub fn search_brackets<R: Ring>(
    q: &Biquandle,
    ring: &R,
    opts: &SearchOptions,
) -> Result<SearchReport<R>, SearchError> {
    let start = Instant::now();
    let units = ring.units()?;
    let elements = ring
        .elements()
        .ok_or_else(|| RingError::Infinite(ring.to_string()))?;
    let table = units.len() * units.len();
    if table > opts.max_pairs {
        return Err(SearchError::RingTooLarge {
            pairs: table,
            bound: opts.max_pairs,
        });
    }
    let inverses: Vec<R::Elem> = units.iter().map(|u| ring.inv(u).unwrap()).collect();
    let mut strata: BTreeMap<R::Elem, Vec<Cell<R>>> =
        elements.into_iter().map(|d| (d, vec![])).collect();
    for (a, ai) in units.iter().zip(&inverses) {
        for (b, bi) in units.iter().zip(&inverses) {
            let d = ring.neg(&ring.add(&ring.mul(a, bi), &ring.mul(ai, b)));
            strata
                .get_mut(&d)
                .expect("delta is a ring element")
                .push((a.clone(), b.clone()));
        }
    }

    let n = q.size();
    let order = cell_order(n);
    let mut position = vec![0; n * n];
    for (p, &c) in order.iter().enumerate() {
        position[c] = p;
    }
    let mut checks = vec![Vec::new(); order.len()];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let cells = axioms::triple_cells(q, x, y, z);
                let last = cells.iter().map(|&c| position[c]).max().unwrap();
                checks[last].push(cells);
            }
        }
    }

    let nodes = AtomicU64::new(0);
    let per_stratum: Vec<(R::Elem, Vec<Pair<R>>)> = strata
        .into_par_iter()
        .filter(|(_, pairs)| !pairs.is_empty())
        .map(|(delta, pairs)| {
            let mut s = Stratum {
                q,
                ring,
                delta: delta.clone(),
                pairs,
                order: order.clone(),
                checks: checks.clone(),
                a: vec![ring.one(); n * n],
                b: vec![ring.one(); n * n],
                nodes: 0,
                found: Vec::new(),
            };
            s.run(0, None);
            nodes.fetch_add(s.nodes, Ordering::Relaxed);
            (delta, s.found)
        })
        .collect();

    let mut per_delta = BTreeMap::new();
    let mut brackets = Vec::new();
    for (delta, found) in per_stratum {
        per_delta.insert(delta, found.len());
        for (a, b) in found {
            let br = Bracket::verify(q.clone(), ring.clone(), a, b)
                .expect("search emits valid brackets");
            brackets.push(br);
        }
    }
    brackets.sort_by_cached_key(Bracket::key);
    if let Some(limit) = opts.limit {
        brackets.truncate(limit);
    }
    let classes = opts
        .dedup
        .then(|| dedup_equivalence(&brackets))
        .transpose()?;
    Ok(SearchReport {
        biquandle: q.clone(),
        ring: ring.clone(),
        brackets,
        candidates: nodes.into_inner(),
        per_delta,
        elapsed: start.elapsed(),
        classes,
    })
}

/// Every `(A, B)` key reachable by a scalar and a C-transform.
fn orbit_keys<R: Ring>(br: &Bracket<R>, units: &[R::Elem]) -> Vec<Vec<R::Elem>> {
    let (ring, q) = (br.ring(), br.biquandle());
    let n = q.size();
    let mut out = Vec::new();
    // C is only relevant up to a common scalar, so fix C(0) = 1
    let mut idx = vec![0usize; n.saturating_sub(1)];
    let one = ring.one();
    loop {
        let c: Vec<R::Elem> = std::iter::once(one.clone())
            .chain(idx.iter().map(|&i| units[i].clone()))
            .collect();
        let ci: Vec<R::Elem> = c.iter().map(|v| ring.inv(v).unwrap()).collect();
        let gamma: Vec<R::Elem> = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                let p = ring.mul(&ring.mul(&c[x], &ci[y]), &ci[q.under(x, y)]);
                ring.mul(&p, &c[q.over(y, x)])
            })
            .collect();
        for alpha in units {
            let scale = |m: &[R::Elem], i: usize| ring.mul(alpha, &ring.mul(&m[i], &gamma[i]));
            let key: Vec<R::Elem> = (0..n)
                .flat_map(|x| {
                    let (a, b) = (br.a_matrix(), br.b_matrix());
                    (0..n)
                        .map(move |y| scale(a, x * n + y))
                        .chain((0..n).map(move |y| scale(b, x * n + y)))
                })
                .collect();
            out.push(key);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < units.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Partitions brackets over one `(X, R)` into equivalence classes; each
/// representative is the canonically least member of the full orbit.
pub fn dedup_equivalence<R: Ring>(
    brackets: &[Bracket<R>],
) -> Result<Vec<EquivalenceClass<R>>, SearchError> {
    let Some(first) = brackets.first() else {
        return Ok(Vec::new());
    };
    let units = first.ring().units()?;
    let index: HashMap<Vec<R::Elem>, usize> = brackets
        .iter()
        .enumerate()
        .map(|(i, b)| (b.key(), i))
        .collect();
    let mut class_of = vec![usize::MAX; brackets.len()];
    let mut classes: Vec<EquivalenceClass<R>> = Vec::new();
    for (i, br) in brackets.iter().enumerate() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let keys = orbit_keys(br, &units);
        let least = keys.iter().min().unwrap().clone();
        let mut members: Vec<usize> = keys.iter().filter_map(|k| index.get(k).copied()).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            class_of[m] = classes.len();
        }
        let n = br.size();
        let rows: Vec<Vec<R::Elem>> = least.chunks(2 * n).map(<[R::Elem]>::to_vec).collect();
        let (a, b) = crate::bracket::split_block(n, rows).expect("orbit key has block shape");
        let representative = Bracket::verify(br.biquandle().clone(), br.ring().clone(), a, b)
            .expect("transforms preserve validity");
        classes.push(EquivalenceClass {
            representative,
            members,
        });
    }
    Ok(classes)
}
