//! Independent reference implementations used as oracles.
#![allow(dead_code)]

use bbrack::{Biquandle, Bracket, LinkDiagram, Ring, Sign};
use rand::rngs::StdRng;
use rand::Rng;

/// Input semiarcs `(x, y)` and output semiarcs `(x ◁ y, y ◁̄ x)` of crossing `i`.
pub fn sides(d: &LinkDiagram, i: usize) -> ([usize; 2], [usize; 2]) {
    let [a, b, c, e] = d.ends(i);
    match d.sign(i) {
        Sign::Positive => ([a, b], [c, e]),
        Sign::Negative => ([c, b], [a, e]),
    }
}

/// Every assignment of colors to semiarcs, filtered by the crossing relations.
pub fn brute_colorings(d: &LinkDiagram, q: &Biquandle) -> Vec<Vec<usize>> {
    let n = q.size();
    let s = d.semiarc_count() + d.free_loops();
    let mut out = Vec::new();
    let total = n.pow(s as u32);
    for code in 0..total {
        let mut col = vec![0; s];
        let mut k = code;
        for c in col.iter_mut().rev() {
            *c = k % n;
            k /= n;
        }
        let ok = (0..d.crossing_count()).all(|i| {
            let ([x, y], [r, t]) = sides(d, i);
            q.under(col[x], col[y]) == col[r] && q.over(col[y], col[x]) == col[t]
        });
        if ok {
            out.push(col);
        }
    }
    out
}

/// Circles after smoothing, by walking the two perfect matchings on ports.
pub fn circles(d: &LinkDiagram, disoriented: &[bool]) -> usize {
    let c = d.crossing_count();
    let mut along = vec![usize::MAX; 4 * c];
    let mut first = vec![usize::MAX; d.semiarc_count()];
    for i in 0..c {
        for (p, &s) in d.ends(i).iter().enumerate() {
            let port = 4 * i + p;
            if first[s] == usize::MAX {
                first[s] = port;
            } else {
                along[port] = first[s];
                along[first[s]] = port;
            }
        }
    }
    let across = |port: usize| {
        let (i, p) = (port / 4, port % 4);
        // oriented smoothing of a positive crossing joins a-b and c-d
        let ab_cd = (d.sign(i) == Sign::Positive) != disoriented[i];
        let partner = if ab_cd { [1, 0, 3, 2] } else { [3, 2, 1, 0] };
        4 * i + partner[p]
    };
    let mut seen = vec![false; 4 * c];
    let mut count = 0;
    for start in 0..4 * c {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut port = start;
        loop {
            seen[port] = true;
            let other = along[port];
            seen[other] = true;
            port = across(other);
            if port == start {
                break;
            }
        }
    }
    count + d.free_loops()
}

/// `Σ_states Π coefficients · δ^circles · w^(n-p)` for one coloring, with
/// coefficients given per crossing as (oriented, disoriented).
pub fn state_sum<R: Ring>(
    ring: &R,
    d: &LinkDiagram,
    delta: &R::Elem,
    w: &R::Elem,
    coef: &[(R::Elem, R::Elem)],
) -> R::Elem {
    let c = d.crossing_count();
    let mut total = ring.zero();
    for mask in 0..1usize << c {
        let dis: Vec<bool> = (0..c).map(|i| mask >> i & 1 == 1).collect();
        let mut term = ring.one();
        for (i, &x) in dis.iter().enumerate() {
            term = ring.mul(&term, if x { &coef[i].1 } else { &coef[i].0 });
        }
        for _ in 0..circles(d, &dis) {
            term = ring.mul(&term, delta);
        }
        total = ring.add(&total, &term);
    }
    let (p, n) = (d.positive_count() as i64, d.negative_count() as i64);
    ring.mul(&total, &ring.pow(w, n - p).unwrap())
}

/// Sorted bracket values over brute-force colorings.
pub fn brute_invariant<R: Ring>(
    ring: &R,
    q: &Biquandle,
    d: &LinkDiagram,
    a: &[R::Elem],
    b: &[R::Elem],
    delta: &R::Elem,
    w: &R::Elem,
) -> Vec<R::Elem> {
    let n = q.size();
    let mut out: Vec<R::Elem> = brute_colorings(d, q)
        .iter()
        .map(|col| {
            let coef: Vec<(R::Elem, R::Elem)> = (0..d.crossing_count())
                .map(|i| {
                    let ([x, y], _) = sides(d, i);
                    let k = col[x] * n + col[y];
                    match d.sign(i) {
                        Sign::Positive => (a[k].clone(), b[k].clone()),
                        Sign::Negative => (ring.inv(&a[k]).unwrap(), ring.inv(&b[k]).unwrap()),
                    }
                })
                .collect();
            state_sum(ring, d, delta, w, &coef)
        })
        .collect();
    out.sort();
    out
}

/// The bracket axioms (i)-(iii), spelled out term by term.
pub fn literal_is_bracket<R: Ring>(q: &Biquandle, ring: &R, a: &[R::Elem], b: &[R::Elem]) -> bool {
    let n = q.size();
    if a.iter().chain(b).any(|v| ring.inv(v).is_none()) {
        return false;
    }
    let av = |x: usize, y: usize| a[x * n + y].clone();
    let bv = |x: usize, y: usize| b[x * n + y].clone();
    let inv = |v: R::Elem| ring.inv(&v).unwrap();
    let m3 = |p: R::Elem, q: R::Elem, r: R::Elem| ring.mul(&ring.mul(&p, &q), &r);

    // (ii)
    let delta_at = |x: usize, y: usize| {
        ring.neg(&ring.add(
            &ring.mul(&av(x, y), &inv(bv(x, y))),
            &ring.mul(&inv(av(x, y)), &bv(x, y)),
        ))
    };
    let delta = delta_at(0, 0);
    for x in 0..n {
        for y in 0..n {
            if delta_at(x, y) != delta {
                return false;
            }
        }
    }
    // (i)
    let w = ring.add(&ring.mul(&delta, &av(0, 0)), &bv(0, 0));
    let Some(w_inv) = ring.inv(&w) else {
        return false;
    };
    for x in 0..n {
        if ring.add(&ring.mul(&delta, &av(x, x)), &bv(x, x)) != w {
            return false;
        }
        if ring.add(&ring.mul(&delta, &inv(av(x, x))), &inv(bv(x, x))) != w_inv {
            return false;
        }
    }
    // (iii)
    let (u, o) = (|x, y| q.under(x, y), |x, y| q.over(x, y));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (p, s) = (u(x, y), o(z, y));
                let (r, t) = (o(y, x), o(z, x));
                let (g, h) = (u(x, z), u(y, z));
                let e1 = m3(av(x, y), av(y, z), av(p, s)) == m3(av(x, z), av(r, t), av(g, h));
                let e2 = m3(av(x, y), bv(y, z), bv(p, s)) == m3(bv(x, z), bv(r, t), av(g, h));
                let e3 = m3(bv(x, y), av(y, z), bv(p, s)) == m3(bv(x, z), av(r, t), bv(g, h));
                let rhs4 = [
                    m3(av(x, z), bv(r, t), av(g, h)),
                    m3(av(x, z), av(r, t), bv(g, h)),
                    ring.mul(&delta, &m3(av(x, z), bv(r, t), bv(g, h))),
                    m3(bv(x, z), bv(r, t), bv(g, h)),
                ];
                let e4 = m3(av(x, y), av(y, z), bv(p, s))
                    == rhs4.iter().fold(ring.zero(), |acc, v| ring.add(&acc, v));
                let lhs5 = [
                    m3(bv(x, y), av(y, z), av(p, s)),
                    m3(av(x, y), bv(y, z), av(p, s)),
                    ring.mul(&delta, &m3(bv(x, y), bv(y, z), av(p, s))),
                    m3(bv(x, y), bv(y, z), bv(p, s)),
                ];
                let e5 = lhs5.iter().fold(ring.zero(), |acc, v| ring.add(&acc, v))
                    == m3(bv(x, z), av(r, t), av(g, h));
                if !(e1 && e2 && e3 && e4 && e5) {
                    return false;
                }
            }
        }
    }
    true
}

/// Diagrams in a shipped `.pd` file, one per non-comment line.
pub fn read_pd_group(path: &std::path::Path) -> Vec<LinkDiagram> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| LinkDiagram::parse(l).unwrap())
        .collect()
}

pub fn data_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub type Candidate<E> = (Vec<E>, Vec<E>);

/// Candidate `(A, B)` pairs: uniform unit matrices, single-cell perturbations of
/// valid brackets, and scalar/C transforms of valid brackets, in rotation.
pub fn random_candidates<R: Ring>(
    rng: &mut StdRng,
    ring: &R,
    n: usize,
    seeds: &[Bracket<R>],
    count: usize,
) -> Vec<Candidate<R::Elem>> {
    let units = ring.units().unwrap();
    let elems = ring.elements().unwrap();
    (0..count)
        .map(|k| match k % 3 {
            0 => {
                let pick = |rng: &mut StdRng| -> Vec<R::Elem> {
                    (0..n * n)
                        .map(|_| units[rng.gen_range(0..units.len())].clone())
                        .collect()
                };
                (pick(rng), pick(rng))
            }
            1 => {
                let s = &seeds[rng.gen_range(0..seeds.len())];
                let (mut a, mut b) = (s.a_matrix().to_vec(), s.b_matrix().to_vec());
                let cell = rng.gen_range(0..n * n);
                let m = if rng.gen_bool(0.5) { &mut a } else { &mut b };
                m[cell] = elems[rng.gen_range(0..elems.len())].clone();
                (a, b)
            }
            _ => {
                let s = &seeds[rng.gen_range(0..seeds.len())];
                let alpha = units[rng.gen_range(0..units.len())].clone();
                let c: Vec<R::Elem> = (0..n)
                    .map(|_| units[rng.gen_range(0..units.len())].clone())
                    .collect();
                let t = s.scalar_transform(&alpha).unwrap().c_transform(&c).unwrap();
                (t.a_matrix().to_vec(), t.b_matrix().to_vec())
            }
        })
        .collect()
}
