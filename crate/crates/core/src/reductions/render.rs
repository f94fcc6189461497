use std::fmt::Write;

use super::{ReductionArtifact, Role};
use crate::vertex_set::VertexSet;

fn color(role: Role) -> &'static str {
    match role {
        Role::V(_) => "lightblue",
        Role::E(_) | Role::EPrime(_) => "salmon",
        Role::U(_) | Role::UPrime(_) | Role::UStar(_) => "palegreen",
        Role::W(_) | Role::WPrime(_) => "khaki",
        Role::A | Role::B | Role::C => "plum",
        Role::EStar | Role::Universal => "lightgray",
    }
}

impl ReductionArtifact {
    /// `<vertex> <role>` lines, vertices 1-based.
    pub fn roles_text(&self) -> String {
        let mut out = String::new();
        for (v, role) in self.roles.iter().enumerate() {
            writeln!(out, "{} {}", v + 1, role).unwrap();
        }
        out
    }

    /// Graphviz rendering with one fill color per role family. Vertices in
    /// `highlight` get a bold outline.
    pub fn to_dot(&self, highlight: &VertexSet) -> String {
        let mut out = format!("graph {} {{\n  node [style=filled];\n", self.kind.to_string().replace('-', "_"));
        for (v, role) in self.roles.iter().enumerate() {
            let pen = if highlight.contains(v) { ", penwidth=3" } else { "" };
            writeln!(out, "  {} [label=\"{}\", fillcolor={}{}];", v + 1, role, color(*role), pen).unwrap();
        }
        for (u, v) in self.graph.edges() {
            writeln!(out, "  {} -- {};", u + 1, v + 1).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
