//! Oriented link diagrams given by PD codes.
//!
//! A crossing `X[a,b,c,d]` lists its four semiarc labels counterclockwise,
//! starting from the incoming under-strand; the under-strand runs `a -> c`.
//! Orientation of the over-strand is propagated from the under-strands.

mod catalog;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use catalog::{catalog, catalog_lookup, knot_names, link_names, CATALOG_TEXT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed PD code at position {pos}: {msg}")]
    Malformed { pos: usize, msg: String },
    #[error("inconsistent PD code: {0}")]
    Inconsistent(String),
    #[error("virtual crossings are not supported (position {pos})")]
    Virtual { pos: usize },
    #[error("unknown diagram name `{0}`")]
    UnknownName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// Semiarc indices meeting at a crossing, by role.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingArcs {
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    free_loops: usize,
    labels: Vec<u32>,
    ends: Vec<[usize; 4]>,
    signs: Vec<Sign>,
    components: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    In,
    Out,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::In => Dir::Out,
            Dir::Out => Dir::In,
        }
    }
}

struct Orienter<'a> {
    crossings: &'a [[u32; 4]],
    ends: &'a [[usize; 4]],
    occ: &'a [Vec<(usize, usize)>],
    dir: Vec<[Option<Dir>; 4]>,
}

impl Orienter<'_> {
    /// Sets one port direction and propagates along semiarcs and through crossings.
    fn fix(&mut self, i: usize, p: usize, d: Dir) -> Result<(), DiagramError> {
        let mut stack = vec![(i, p, d)];
        while let Some((i, p, d)) = stack.pop() {
            match self.dir[i][p] {
                Some(old) if old != d => {
                    return Err(DiagramError::Inconsistent(format!(
                        "orientation conflict at label {}",
                        self.crossings[i][p]
                    )))
                }
                Some(_) => continue,
                None => self.dir[i][p] = Some(d),
            }
            let &(j, q) = self.occ[self.ends[i][p]]
                .iter()
                .find(|&&o| o != (i, p))
                .unwrap();
            stack.push((j, q, d.flip()));
            stack.push((i, (p + 2) % 4, d.flip()));
        }
        Ok(())
    }
}

impl LinkDiagram {
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let (crossings, free_loops) = parse_tokens(text)?;
        LinkDiagram::from_crossings(crossings, free_loops)
    }

    pub fn from_crossings(
        crossings: Vec<[u32; 4]>,
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        LinkDiagram::build(crossings, free_loops, None)
    }

    /// Like `from_crossings`, with crossing signs known in advance.
    pub fn from_signed_crossings(
        crossings: Vec<[u32; 4]>,
        free_loops: usize,
        signs: &[Sign],
    ) -> Result<Self, DiagramError> {
        if signs.len() != crossings.len() {
            return Err(DiagramError::Inconsistent(
                "one sign per crossing required".into(),
            ));
        }
        LinkDiagram::build(crossings, free_loops, Some(signs))
    }

    fn build(
        crossings: Vec<[u32; 4]>,
        free_loops: usize,
        known: Option<&[Sign]>,
    ) -> Result<Self, DiagramError> {
        let labels: Vec<u32> = crossings
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let ends: Vec<[usize; 4]> = crossings.iter().map(|x| x.map(|l| index[&l])).collect();
        let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); labels.len()];
        for (i, e) in ends.iter().enumerate() {
            for (p, &s) in e.iter().enumerate() {
                occ[s].push((i, p));
            }
        }
        if let Some(s) = occ.iter().position(|o| o.len() != 2) {
            return Err(DiagramError::Inconsistent(format!(
                "label {} occurs {} times, expected 2",
                labels[s],
                occ[s].len()
            )));
        }

        let mut orient = Orienter {
            crossings: &crossings,
            ends: &ends,
            occ: &occ,
            dir: vec![[None; 4]; crossings.len()],
        };
        for i in 0..crossings.len() {
            orient.fix(i, 0, Dir::In)?;
            match known.map(|k| k[i]) {
                Some(Sign::Positive) => orient.fix(i, 3, Dir::In)?,
                Some(Sign::Negative) => orient.fix(i, 1, Dir::In)?,
                None => {}
            }
        }
        // Strands that never pass under: orient by label succession.
        for (i, x) in crossings.iter().enumerate() {
            if orient.dir[i][1].is_none() {
                let (b, d) = (x[1], x[3]);
                let d_to_b = b == d + 1 || (b < d && d != b + 1);
                orient.fix(i, if d_to_b { 3 } else { 1 }, Dir::In)?;
            }
        }
        let dir = orient.dir;

        let signs: Vec<Sign> = dir
            .iter()
            .map(|d| {
                if d[3] == Some(Dir::In) {
                    Sign::Positive
                } else {
                    Sign::Negative
                }
            })
            .collect();

        // next semiarc along the orientation, from the head of each semiarc
        let mut next = vec![usize::MAX; labels.len()];
        for (s, o) in occ.iter().enumerate() {
            let &(i, p) = o
                .iter()
                .find(|&&(i, p)| dir[i][p] == Some(Dir::In))
                .unwrap();
            next[s] = ends[i][(p + 2) % 4];
        }
        let mut seen = vec![false; labels.len()];
        let mut components = Vec::new();
        for start in 0..labels.len() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                comp.push(s);
                s = next[s];
            }
            components.push(comp);
        }
        Ok(LinkDiagram {
            crossings,
            free_loops,
            labels,
            ends,
            signs,
            components,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    /// Number of crossingless unknotted components.
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn semiarc_count(&self) -> usize {
        self.labels.len()
    }

    /// PD label of a semiarc index.
    pub fn label(&self, semiarc: usize) -> u32 {
        self.labels[semiarc]
    }

    /// Semiarc indices at positions `a, b, c, d` of crossing `i`.
    pub fn ends(&self, i: usize) -> [usize; 4] {
        self.ends[i]
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn positive_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == Sign::Positive).count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossing_count() - self.positive_count()
    }

    pub fn writhe(&self) -> i64 {
        self.positive_count() as i64 - self.negative_count() as i64
    }

    pub fn arcs(&self, i: usize) -> CrossingArcs {
        let [a, b, c, d] = self.ends[i];
        match self.signs[i] {
            Sign::Positive => CrossingArcs {
                under_in: a,
                under_out: c,
                over_in: d,
                over_out: b,
            },
            Sign::Negative => CrossingArcs {
                under_in: a,
                under_out: c,
                over_in: b,
                over_out: d,
            },
        }
    }

    /// Semiarc cycles in orientation order, one per component with crossings.
    pub fn strand_components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], s)| match s {
                Sign::Positive => [d, a, b, c],
                Sign::Negative => [b, c, d, a],
            })
            .collect();
        let signs: Vec<Sign> = self.signs.iter().map(|s| s.flip()).collect();
        LinkDiagram::from_signed_crossings(crossings, self.free_loops, &signs)
            .expect("mirror of a valid diagram")
    }

    /// Relabels semiarcs `1..2c` consecutively along each component.
    pub fn normalized(&self) -> LinkDiagram {
        let mut new_label = vec![0u32; self.labels.len()];
        let mut k = 0;
        for comp in &self.components {
            for &s in comp {
                k += 1;
                new_label[s] = k;
            }
        }
        let crossings = self.ends.iter().map(|e| e.map(|s| new_label[s])).collect();
        LinkDiagram::from_signed_crossings(crossings, self.free_loops, &self.signs)
            .expect("relabelling keeps validity")
    }

    /// Crossing and position where semiarc `s` ends.
    fn head(&self, s: usize) -> (usize, usize) {
        (0..self.crossing_count())
            .flat_map(|i| [(i, 0), (i, self.over_in_pos(i))])
            .find(|&(i, p)| self.ends[i][p] == s)
            .expect("every semiarc has a head")
    }

    fn over_in_pos(&self, i: usize) -> usize {
        match self.signs[i] {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    /// Closure of a braid word on `strands` strands; `i` is `σ_i`, `-i` its inverse.
    pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram, DiagramError> {
        let mut at: Vec<u32> = (1..=strands as u32).collect();
        let mut next = strands as u32;
        let mut crossings = Vec::with_capacity(word.len());
        let mut signs = Vec::with_capacity(word.len());
        for (k, &g) in word.iter().enumerate() {
            let i = g.unsigned_abs() as usize;
            if i == 0 || i >= strands {
                return Err(DiagramError::Malformed {
                    pos: k,
                    msg: format!("generator {g} out of range"),
                });
            }
            let (l, r) = (at[i - 1], at[i]);
            let (nl, nr) = (next + 1, next + 2);
            next += 2;
            if g > 0 {
                crossings.push([r, nr, nl, l]);
                signs.push(Sign::Positive);
            } else {
                crossings.push([l, r, nr, nl]);
                signs.push(Sign::Negative);
            }
            at[i - 1] = nl;
            at[i] = nr;
        }
        let close: HashMap<u32, u32> = at
            .iter()
            .zip(1..)
            .filter(|(t, b)| **t != *b)
            .map(|(&t, b)| (t, b))
            .collect();
        let free_loops = at.iter().zip(1..).filter(|(t, b)| **t == *b).count();
        for x in &mut crossings {
            for l in x.iter_mut() {
                *l = close.get(l).copied().unwrap_or(*l);
            }
        }
        if crossings.is_empty() {
            return Err(DiagramError::Malformed {
                pos: 0,
                msg: "empty braid word".into(),
            });
        }
        Ok(LinkDiagram::from_signed_crossings(crossings, free_loops, &signs)?.normalized())
    }

    /// Connected sum along the lowest-labelled semiarc of each diagram.
    pub fn connected_sum(&self, other: &LinkDiagram) -> LinkDiagram {
        if self.crossings.is_empty() || other.crossings.is_empty() {
            let (mut sum, absorbed) = if self.crossings.is_empty() {
                (other.clone(), self)
            } else {
                (self.clone(), other)
            };
            sum.free_loops += absorbed.free_loops - 1;
            return sum;
        }
        let offset = self.labels.last().copied().unwrap_or(0);
        let (s1, s2) = (self.labels[0], other.labels[0] + offset);
        let mut crossings = self.crossings.clone();
        let mut shifted: Vec<[u32; 4]> = other
            .crossings
            .iter()
            .map(|x| x.map(|l| l + offset))
            .collect();
        let (i1, p1) = self.head(0);
        let (i2, p2) = other.head(0);
        crossings[i1][p1] = s2;
        shifted[i2][p2] = s1;
        crossings.extend(shifted);
        LinkDiagram::from_crossings(crossings, self.free_loops + other.free_loops)
            .expect("connected sum of valid diagrams")
            .normalized()
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect();
        parts.extend(std::iter::repeat_n("U".to_string(), self.free_loops));
        f.write_str(&parts.join(" "))
    }
}

fn parse_tokens(text: &str) -> Result<(Vec<[u32; 4]>, usize), DiagramError> {
    let malformed = |pos: usize, msg: &str| DiagramError::Malformed {
        pos,
        msg: msg.into(),
    };
    let mut body = text.trim();
    let mut base = text.len() - text.trim_start().len();
    if let Some(inner) = body.strip_prefix("PD[").and_then(|b| b.strip_suffix(']')) {
        body = inner;
        base += 3;
    }
    let bytes = body.as_bytes();
    let mut crossings = Vec::new();
    let mut loops = 0;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b',' {
            i += 1;
            continue;
        }
        let pos = base + i;
        match c {
            b'U' => {
                loops += 1;
                i += 1;
                if bytes.get(i).is_some_and(|b| b.is_ascii_alphanumeric()) {
                    return Err(malformed(base + i, "unexpected character after `U`"));
                }
            }
            b'X' => {
                i += 1;
                if matches!(bytes.get(i), Some(b'v') | Some(b'V')) {
                    return Err(DiagramError::Virtual { pos });
                }
                if bytes.get(i) != Some(&b'[') {
                    return Err(malformed(base + i, "expected `[`"));
                }
                let close = body[i..]
                    .find(']')
                    .ok_or_else(|| malformed(pos, "unclosed `[`"))?
                    + i;
                let labels: Vec<u32> = body[i + 1..close]
                    .split(',')
                    .map(|t| t.trim().parse::<u32>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| malformed(base + i + 1, "expected positive integer labels"))?;
                if labels.len() != 4 {
                    return Err(malformed(pos, "a crossing needs four labels"));
                }
                crossings.push([labels[0], labels[1], labels[2], labels[3]]);
                i = close + 1;
            }
            b'V' => return Err(DiagramError::Virtual { pos }),
            _ => return Err(malformed(pos, "expected `X[a,b,c,d]` or `U`")),
        }
    }
    if crossings.is_empty() && loops == 0 {
        return Err(malformed(base, "empty diagram"));
    }
    Ok((crossings, loops))
}
