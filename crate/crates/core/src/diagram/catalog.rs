use super::{DiagramError, LinkDiagram};

/// `name<TAB>pd` lines: the unknot, prime knots up to 8 crossings, prime links
/// up to 7 crossings, the square and granny knots, and the 2-component unlink.
pub const CATALOG_TEXT: &str = include_str!("../../data/catalog.tsv");

/// `(name, pd code)` pairs in file order.
pub fn catalog() -> impl Iterator<Item = (&'static str, &'static str)> {
    CATALOG_TEXT
        .lines()
        .filter(|l| !l.trim().is_empty())
        .filter_map(|l| l.split_once('\t'))
}

pub fn catalog_lookup(name: &str) -> Result<LinkDiagram, DiagramError> {
    let (_, pd) = catalog()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| DiagramError::UnknownName(name.into()))?;
    LinkDiagram::parse(pd)
}

/// `Unknot` and the prime knots, in catalog order.
pub fn knot_names() -> impl Iterator<Item = &'static str> {
    catalog()
        .map(|(n, _)| n)
        .filter(|n| *n == "Unknot" || n.starts_with(|c: char| c.is_ascii_digit()))
}

/// The prime links, in catalog order.
pub fn link_names() -> impl Iterator<Item = &'static str> {
    catalog().map(|(n, _)| n).filter(|n| n.starts_with('L'))
}
