//! Graphviz output of Hasse diagrams.

use std::fmt::Write as _;

use crate::family::ConFamily;
use crate::poset::Poset;
use crate::text::format_classes;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn render(name: &str, p: &Poset, tooltip: impl Fn(usize) -> Option<String>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    out.push_str("  rankdir=BT;\n  node [shape=circle];\n");
    for i in 0..p.len() {
        match tooltip(i) {
            Some(t) => {
                let _ = writeln!(out, "  n{i} [label={}, tooltip={}];", quote(p.label(i)), quote(&t));
            }
            None => {
                let _ = writeln!(out, "  n{i} [label={}];", quote(p.label(i)));
            }
        }
    }
    for (a, b) in p.hasse_edges() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a poset.
pub fn poset_dot(name: &str, p: &Poset) -> String {
    render(name, p, |_| None)
}

/// Hasse diagram of a congruence family under inclusion, each node carrying
/// its class list as tooltip.
pub fn con_lattice_dot(name: &str, p: &Poset, family: &ConFamily) -> String {
    let lattice = family.as_poset();
    render(name, &lattice, |i| Some(format_classes(p, family.get(i))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_has_no_edges() {
        let p = Poset::from_covers(&["x"], &[] as &[(&str, &str)]).unwrap();
        let dot = poset_dot("one", &p);
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("[label=").count(), 1);
    }

    #[test]
    fn escapes_labels() {
        let p = Poset::from_covers(&["x\"y"], &[] as &[(&str, &str)]).unwrap();
        assert!(poset_dot("q", &p).contains("label=\"x\\\"y\""));
    }
}
