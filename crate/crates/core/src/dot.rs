//! Graphviz rendering of an automaton.

use std::fmt::Write;

use crate::automaton::Automaton;
use crate::stateset::StateSet;
use crate::word::Word;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per state and one edge per (source, target) pair, labelled with
/// the comma-joined letters that take it. Self-loops are drawn. States in
/// `highlight` are filled.
pub fn export_dot(a: &Automaton, highlight: Option<&StateSet>) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in 0..a.n() {
        let mut attrs = format!("label={}", quote(&a.state_name(q)));
        if highlight.is_some_and(|h| h.contains(q)) {
            attrs.push_str(", style=filled, fillcolor=lightblue, highlight=true");
        }
        writeln!(out, "  {q} [{attrs}];").unwrap();
    }
    for q in 0..a.n() {
        // Targets in order of their first letter.
        let mut edges: Vec<(usize, Vec<String>)> = Vec::new();
        for x in 0..a.sigma() {
            let t = a.step(q, x);
            let label = Word::letter(x).to_letters();
            match edges.iter_mut().find(|(target, _)| *target == t) {
                Some((_, labels)) => labels.push(label),
                None => edges.push((t, vec![label])),
            }
        }
        for (t, labels) in edges {
            writeln!(out, "  {q} -> {t} [label={}];", quote(&labels.join(","))).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::carpi_family;

    #[test]
    fn a21_graph() {
        let c = carpi_family(2, 1).unwrap();
        let dot = export_dot(c.automaton(), Some(&c.c_b()));
        assert_eq!(
            dot.matches("[label=\"q").count() + dot.matches("[label=\"s").count(),
            4
        );
        assert!(dot.contains("  1 -> 2 [label=\"a\"];"));
        assert!(dot.contains("  1 -> 1 [label=\"b\"];"));
        assert!(dot.contains("  0 -> 3 [label=\"b\"];"));
        assert!(dot.contains("  3 [label=\"s1\", style=filled"));
        assert!(dot.contains("  0 [label=\"q0\", style=filled"));
        assert!(!dot.contains("  1 [label=\"q1\", style"));
        assert_eq!(dot, export_dot(c.automaton(), Some(&c.c_b())));
    }

    #[test]
    fn parallel_edges_merge() {
        let a = Automaton::new(3, vec![vec![0, 0, 0]]).unwrap();
        assert!(export_dot(&a, None).contains("0 -> 0 [label=\"a,b,c\"];"));
    }
}
