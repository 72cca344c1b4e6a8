//! Biquandle colorings of diagrams and the counting invariant.
//!
//! At each crossing the two semiarcs on the left of the under-strand's
//! direction of travel, read as `(x, y)` (under, over), determine the two on the
//! right as `(x ◁ y, y ◁̄ x)`. For a positive crossing the left pair is
//! (under-in, over-out); for a negative one it is (under-out, over-in).

use crate::biquandle::Biquandle;
use crate::diagram::{LinkDiagram, Sign};

/// Semiarcs `[x, y, x ◁ y, y ◁̄ x]` at a crossing.
pub fn crossing_frame(d: &LinkDiagram, i: usize) -> [usize; 4] {
    let a = d.arcs(i);
    match d.sign(i) {
        Sign::Positive => [a.under_in, a.over_out, a.under_out, a.over_in],
        Sign::Negative => [a.under_out, a.over_in, a.under_in, a.over_out],
    }
}

/// Colors (0-indexed) of every semiarc, in semiarc order, plus one color per free loop.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    arcs: Vec<usize>,
    loops: Vec<usize>,
}

impl Coloring {
    pub fn new(arcs: Vec<usize>, loops: Vec<usize>) -> Self {
        Coloring { arcs, loops }
    }

    pub fn arc(&self, semiarc: usize) -> usize {
        self.arcs[semiarc]
    }

    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }

    pub fn loops(&self) -> &[usize] {
        &self.loops
    }

    pub fn is_valid(&self, d: &LinkDiagram, x: &Biquandle) -> bool {
        self.arcs.len() == d.semiarc_count()
            && self.loops.len() == d.free_loops()
            && self.arcs.iter().chain(&self.loops).all(|&c| c < x.size())
            && (0..d.crossing_count()).all(|i| {
                let [a, b, ar, br] = crossing_frame(d, i).map(|s| self.arcs[s]);
                x.under(a, b) == ar && x.over(b, a) == br
            })
    }

    /// `label=color` pairs with 1-indexed colors, free loops as `U=color`.
    pub fn describe(&self, d: &LinkDiagram) -> String {
        let mut parts: Vec<String> = self
            .arcs
            .iter()
            .enumerate()
            .map(|(s, c)| format!("{}={}", d.label(s), c + 1))
            .collect();
        parts.extend(self.loops.iter().map(|c| format!("U={}", c + 1)));
        parts.join(" ")
    }
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    x: &'a Biquandle,
    frames: Vec<[usize; 4]>,
    touching: Vec<Vec<usize>>,
    col: Vec<usize>,
    trail: Vec<usize>,
}

impl Search<'_> {
    fn assign(&mut self, s: usize, c: usize, queue: &mut Vec<usize>) -> bool {
        if self.col[s] != UNSET {
            return self.col[s] == c;
        }
        self.col[s] = c;
        self.trail.push(s);
        queue.extend(&self.touching[s]);
        true
    }

    /// Deduces forced colors; false on contradiction.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(i) = queue.pop() {
            let f = self.frames[i];
            let [a, b, ar, br] = f.map(|s| self.col[s]);
            let ok = match (a != UNSET, b != UNSET, ar != UNSET, br != UNSET) {
                (true, true, _, _) => {
                    self.assign(f[2], self.x.under(a, b), &mut queue)
                        && self.assign(f[3], self.x.over(b, a), &mut queue)
                }
                (_, _, true, true) => {
                    let (a, b) = self.x.pair_solve(ar, br);
                    self.assign(f[0], a, &mut queue) && self.assign(f[1], b, &mut queue)
                }
                (true, false, _, true) => {
                    let b = self.x.over_solve(a, br);
                    self.assign(f[1], b, &mut queue)
                        && self.assign(f[2], self.x.under(a, b), &mut queue)
                }
                (false, true, true, _) => {
                    let a = self.x.under_solve(b, ar);
                    self.assign(f[0], a, &mut queue)
                        && self.assign(f[3], self.x.over(b, a), &mut queue)
                }
                _ => true,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for s in self.trail.drain(mark..) {
            self.col[s] = UNSET;
        }
    }

    fn run(&mut self, order: &[usize], out: &mut Vec<Vec<usize>>) {
        let Some(pos) = order.iter().position(|&s| self.col[s] == UNSET) else {
            out.push(self.col.clone());
            return;
        };
        let s = order[pos];
        for c in 0..self.x.size() {
            let mark = self.trail.len();
            let mut queue = Vec::new();
            if self.assign(s, c, &mut queue) && self.propagate(queue) {
                self.run(&order[pos..], out);
            }
            self.undo(mark);
        }
    }
}

/// All colorings in lexicographic order of `(arc colors, loop colors)`.
pub fn enumerate_colorings(d: &LinkDiagram, x: &Biquandle) -> Vec<Coloring> {
    let frames: Vec<[usize; 4]> = (0..d.crossing_count())
        .map(|i| crossing_frame(d, i))
        .collect();
    let mut touching = vec![Vec::new(); d.semiarc_count()];
    for (i, f) in frames.iter().enumerate() {
        for &s in f {
            if !touching[s].contains(&i) {
                touching[s].push(i);
            }
        }
    }
    let order: Vec<usize> = d.strand_components().iter().flatten().copied().collect();
    let mut search = Search {
        x,
        frames,
        touching,
        col: vec![UNSET; d.semiarc_count()],
        trail: Vec::new(),
    };
    let mut arcs = Vec::new();
    search.run(&order, &mut arcs);
    arcs.sort();

    let n = x.size();
    let loops = d.free_loops();
    let loop_count = n.pow(loops as u32);
    let mut out = Vec::with_capacity(arcs.len() * loop_count);
    for a in arcs {
        for k in 0..loop_count {
            let mut colors = vec![0; loops];
            let mut k = k;
            for slot in colors.iter_mut().rev() {
                *slot = k % n;
                k /= n;
            }
            out.push(Coloring {
                arcs: a.clone(),
                loops: colors,
            });
        }
    }
    out
}

pub fn counting_invariant(d: &LinkDiagram, x: &Biquandle) -> usize {
    enumerate_colorings(d, x).len()
}
