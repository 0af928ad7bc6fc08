//! Graphviz export.

use std::fmt::Write;

use hylo_core::{Game, Outcome, Value};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", escape(s))
}

/// A deterministic `digraph`: states in index order, then edges in index
/// order. With values, each label gains the value, and states with an outcome
/// are colored (P blue, N red).
pub fn export_dot(game: &Game, values: Option<&[Value]>) -> String {
    let mut out = format!("digraph {} {{\n", quote(game.name()));
    for x in game.states() {
        let mut label = escape(game.state_name(x));
        let mut color = None;
        if let Some(v) = values.map(|v| &v[x]) {
            let _ = write!(label, "\\n{}", escape(&v.to_string()));
            color = v.as_outcome().map(|o| match o {
                Outcome::P => "blue",
                Outcome::N => "red",
            });
        }
        let _ = write!(out, "  {x} [label=\"{label}\"");
        if let Some(c) = color {
            let _ = write!(out, ", color={c}, fontcolor={c}");
        }
        out.push_str("];\n");
    }
    for (x, o) in game.edges() {
        let _ = writeln!(out, "  {x} -> {o};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hylo_core::rules::{reachable_fragment, Nim};
    use hylo_core::values::{hylo_eval, Builtin};

    #[test]
    fn empty_game_has_empty_body() {
        assert_eq!(export_dot(&Game::empty(), None), "digraph \"empty\" {\n}\n");
    }

    #[test]
    fn chain_nodes_and_edges() {
        let dot = export_dot(&Game::chain(2), None);
        assert_eq!(dot.matches("label=").count(), 3);
        assert_eq!(dot.matches("->").count(), 2);
    }

    #[test]
    fn outcome_colors() {
        let frag = reachable_fragment(&Nim, vec![3], 10).unwrap();
        let values = hylo_eval(&frag.game, &Builtin::Np).unwrap();
        let dot = export_dot(&frag.game, Some(&values));
        let zero = frag.state_of(&vec![0]).unwrap();
        let line = dot.lines().find(|l| l.trim_start().starts_with(&format!("{zero} ["))).unwrap();
        assert!(line.contains("\\nP") && line.contains("color=blue"), "{line}");
        assert_eq!(dot.matches(", color=red").count(), 3);
    }
}
