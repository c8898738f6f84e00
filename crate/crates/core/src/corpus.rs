//! Posets shipped with the library.

use crate::text::{parse_poset, PosetDocument};

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        /// `(name, file contents)` for every bundled poset.
        pub const BUNDLED: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../posets/", $name, ".poset")))),*
        ];
    };
}

bundled!(
    "fig1",
    "fig3",
    "fig4",
    "fig6",
    "chain1",
    "chain2",
    "chain3",
    "chain4",
    "antichain2",
    "antichain3",
    "boolean1",
    "boolean2",
    "boolean3",
    "fig2",
    "fig5",
    "fig7",
);

/// Reference lattices drawn for comparison, not inputs to the checks.
pub const REFERENCE_LATTICES: &[&str] = &["fig2", "fig5", "fig7"];

pub fn names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Parses a bundled poset. Panics only if a shipped file is malformed.
pub fn load(name: &str) -> Option<PosetDocument> {
    source(name).map(|s| parse_poset(s).unwrap_or_else(|e| panic!("bundled poset {name}: {e}")))
}

/// Bundled posets meant as check inputs (everything but the reference
/// lattices).
pub fn inputs() -> Vec<PosetDocument> {
    names().filter(|n| !REFERENCE_LATTICES.contains(n)).filter_map(load).collect()
}
