use super::{DiagramTree, SingularityDiagram};
use crate::Error;
use std::fmt::Write;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    /// The canonical key.
    Text,
    /// A Graphviz `digraph`.
    Dot,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "dot" | "graph" => Ok(RenderFormat::Dot),
            _ => Err(Error::Contract(format!("unknown render format '{s}'"))),
        }
    }
}

pub fn render(d: &SingularityDiagram, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => d.canonical_key(),
        RenderFormat::Dot => {
            let mut out = String::new();
            writeln!(out, "digraph singularity {{").unwrap();
            writeln!(out, "  label=\"{}\";", d.canonical_key()).unwrap();
            writeln!(out, "  node [fontname=\"Helvetica\"];").unwrap();
            let mut next = 0usize;
            emit(&d.tree, &mut out, &mut next, None);
            writeln!(out, "}}").unwrap();
            out
        }
    }
}

fn emit(t: &DiagramTree, out: &mut String, next: &mut usize, parent: Option<usize>) {
    let id = *next;
    *next += 1;
    match t {
        DiagramTree::Leaf { char_exponents } => {
            let label = if char_exponents.is_empty() {
                "S".to_string()
            } else {
                char_exponents.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", ")
            };
            writeln!(out, "  n{id} [shape=box, label=\"{label}\"];").unwrap();
        }
        DiagramTree::Node { contact, children } => {
            writeln!(out, "  n{id} [shape=circle, label=\"{contact}\"];").unwrap();
            for c in children {
                emit(c, out, next, Some(id));
            }
        }
    }
    if let Some(p) = parent {
        writeln!(out, "  n{p} -> n{id};").unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_key;

    #[test]
    fn tacnode_graph_has_three_nodes() {
        let d = parse_key("m2(2:S,S)").unwrap();
        let g = render(&d, RenderFormat::Dot);
        assert_eq!(g.matches("shape=").count(), 3);
        assert_eq!(g.matches("->").count(), 2);
        assert!(g.contains("label=\"2\""));
        assert_eq!(render(&d, RenderFormat::Text), "m2(2:S,S)");
    }

    #[test]
    fn nested_labels() {
        let d = parse_key("m4(1:(2:S,S),[3/2])").unwrap();
        let g = render(&d, RenderFormat::Dot);
        for l in ["label=\"1\"", "label=\"2\"", "label=\"3/2\""] {
            assert!(g.contains(l), "{l} missing in {g}");
        }
        assert!("svg".parse::<RenderFormat>().is_err());
    }
}
