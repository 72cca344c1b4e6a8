//! Biquandle bracket invariants of oriented classical links.
//!
//! Colorings of a PD-coded diagram by a finite biquandle are weighted by a
//! coloring-dependent Kauffman-style state sum; the multiset of weights is a
//! link invariant.

pub mod biquandle;
pub mod bracket;
pub mod coloring;
pub mod diagram;
pub mod named;
pub mod ring;
pub mod search;
pub mod statesum;

pub use biquandle::Biquandle;
pub use bracket::{Bracket, BracketError};
pub use coloring::{counting_invariant, enumerate_colorings, Coloring};
pub use diagram::{catalog_lookup, LinkDiagram, Sign};
pub use ring::{Element, GaloisField, Laurent, LaurentPoly, Ring, RingError, RingSpec, Zn};
pub use search::{search_brackets, SearchOptions, SearchReport};
pub use statesum::{invariant, InvariantValue};

/// A bracket whose ring is chosen at runtime.
pub type DynBracket = Bracket<RingSpec>;
pub type ModularBracket = Bracket<Zn>;
pub type GaloisBracket = Bracket<GaloisField>;
pub type KauffmanBracket = Bracket<Laurent>;
