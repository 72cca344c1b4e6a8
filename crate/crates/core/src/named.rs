//! Built-in biquandles and brackets, addressable by name.

use crate::biquandle::Biquandle;
use crate::bracket::Bracket;
use crate::ring::{RingSpec, Zn};

pub const BIQUANDLES: &[&str] = &["ca2", "dihedral3", "alexander-z5-t2-r4", "trivial2", "one"];
pub const BRACKETS: &[&str] = &["ex1", "f8", "z11-dihedral"];

pub fn biquandle(name: &str) -> Option<Biquandle> {
    let q = match name {
        "ca2" => Biquandle::constant_action(&[1, 0]),
        "dihedral3" => Biquandle::dihedral(3),
        "alexander-z5-t2-r4" => Biquandle::alexander(&Zn::new(5).ok()?, 2, 4),
        "trivial2" => Biquandle::trivial(2),
        "one" => Biquandle::trivial(1),
        _ => return None,
    };
    Some(q.expect("built-in biquandle is valid"))
}

fn build(q: &str, ring: &str, rows: &[&str]) -> Bracket<RingSpec> {
    let ring: RingSpec = ring.parse().expect("built-in ring spec");
    let text = format!("ring: {ring}\n{}\n", rows.join("\n"));
    Bracket::from_file_text(biquandle(q).unwrap(), &text).expect("built-in bracket is valid")
}

pub fn bracket(name: &str) -> Option<Bracket<RingSpec>> {
    Some(match name {
        "ex1" => build("ca2", "Z5", &["1 3 4 2", "4 1 1 4"]),
        "f8" => build("ca2", "GF(2^3;1+t+t^3)", &["1 1+t t t+t^2", "1+t^2 1 1 t"]),
        "z11-dihedral" => build(
            "dihedral3",
            "Z11",
            &["1 7 7 7 5 5", "1 1 8 7 7 1", "1 8 1 7 1 7"],
        ),
        _ => return None,
    })
}

/// The biquandle a built-in bracket lives on.
pub fn bracket_biquandle(name: &str) -> Option<&'static str> {
    match name {
        "ex1" | "f8" => Some("ca2"),
        "z11-dihedral" => Some("dihedral3"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn all_names_resolve() {
        for n in BIQUANDLES {
            assert!(biquandle(n).is_some(), "{n}");
        }
        for n in BRACKETS {
            let b = bracket(n).unwrap();
            assert_eq!(
                b.biquandle(),
                &biquandle(bracket_biquandle(n).unwrap()).unwrap()
            );
        }
        let z11 = bracket("z11-dihedral").unwrap();
        assert_eq!(z11.ring().format(z11.delta()), "7");
        assert!(bracket("nope").is_none());
    }
}
