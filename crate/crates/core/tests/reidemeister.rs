mod common;

use bbrack::bracket::kauffman_bracket;
use bbrack::statesum::invariant;
use bbrack::{named, Biquandle, Bracket, LinkDiagram, Ring, Zn};
use common::*;

fn groups() -> Vec<(String, Vec<LinkDiagram>)> {
    let mut paths: Vec<_> = std::fs::read_dir(data_dir().join("reidemeister"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "pd"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            (
                p.file_stem().unwrap().to_string_lossy().into_owned(),
                read_pd_group(&p),
            )
        })
        .collect()
}

fn assert_invariant<R: Ring>(br: &Bracket<R>, label: &str) {
    for (name, group) in groups() {
        assert!(group.len() >= 2, "{name}");
        for d in [false, true] {
            let vals: Vec<String> = group
                .iter()
                .map(|g| {
                    let g = if d { g.mirror() } else { g.clone() };
                    invariant(&g, br).unwrap().multiset_string()
                })
                .collect();
            assert!(
                vals.windows(2).all(|w| w[0] == w[1]),
                "{label} on {name} (mirror {d}): {vals:?}"
            );
        }
    }
}

#[test]
fn named_brackets_are_invariant() {
    for name in ["ex1", "f8", "z11-dihedral"] {
        assert_invariant(&named::bracket(name).unwrap(), name);
    }
}

#[test]
fn kauffman_bracket_is_invariant() {
    assert_invariant(&kauffman_bracket(), "kauffman");
}

#[test]
fn constant_brackets_are_invariant() {
    for (q, n, t) in [("ca2", 7, 2), ("dihedral3", 5, 1), ("trivial2", 11, 3)] {
        let ring = Zn::new(n).unwrap();
        let br = Bracket::constant(named::biquandle(q).unwrap(), ring, &t).unwrap();
        assert_invariant(&br, &format!("{q}/Z{n}"));
    }
}

#[test]
fn coboundary_bracket_is_invariant() {
    let d3: Biquandle = named::biquandle("dihedral3").unwrap();
    let br = Bracket::coboundary(d3, Zn::new(11).unwrap(), &[1, 2, 3]).unwrap();
    assert_invariant(&br, "coboundary");
}

/// Each shipped diagram is the closure of the braid word named in the comment above it.
#[test]
fn data_matches_braid_words() {
    let dir = data_dir().join("reidemeister");
    for entry in std::fs::read_dir(&dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let mut lines = text.lines();
        while let Some(line) = lines.next() {
            let Some(rest) = line.strip_prefix("# closure of [") else {
                continue;
            };
            let (word, tail) = rest.split_once(']').unwrap();
            let word: Vec<i32> = word
                .split_whitespace()
                .map(|w| w.parse().unwrap())
                .collect();
            let strands: usize = tail.split_whitespace().nth(1).unwrap().parse().unwrap();
            let shipped = LinkDiagram::parse(lines.next().unwrap()).unwrap();
            let built = LinkDiagram::braid_closure(strands, &word).unwrap();
            assert_eq!(shipped.normalized(), built.normalized(), "{line}");
        }
    }
}
