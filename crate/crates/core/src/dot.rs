//! Graphviz export. Solid edges are shared boundaries; with `show_dotted`,
//! dashed edges mark pairs of faces that do not touch.

use std::fmt::Write;

use crate::graph::{Coloring, FaceId, MapGraph};

const FILLS: [&str; 8] = [
    "tomato", "skyblue", "palegreen", "gold", "plum", "orange", "lightgray", "pink",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(map: &MapGraph, col: Option<&Coloring>, show_dotted: bool) -> String {
    let mut out = String::from("graph map {\n");
    for f in map.faces() {
        let name = quote(map.label(f));
        match col.and_then(|c| c.get(f)) {
            Some(c) => {
                let fill = FILLS[c.0 % FILLS.len()];
                writeln!(out, "  {name} [label={}, style=filled, fillcolor={fill}];", quote(&format!("{} ({c})", map.label(f)))).unwrap();
            }
            None => writeln!(out, "  {name};").unwrap(),
        }
    }
    for (f, g) in map.edges() {
        writeln!(out, "  {} -- {};", quote(map.label(f)), quote(map.label(g))).unwrap();
    }
    if show_dotted {
        for f in map.faces() {
            for g in (f.0 + 1..map.len()).map(FaceId) {
                if !map.has_edge(f, g) {
                    writeln!(out, "  {} -- {} [style=dashed];", quote(map.label(f)), quote(map.label(g))).unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{base_map_5, complete_multipartite};

    fn edge_lines(dot: &str) -> (usize, usize) {
        let solid = dot.lines().filter(|l| l.contains("--") && !l.contains("dashed")).count();
        let dashed = dot.lines().filter(|l| l.contains("dashed")).count();
        (solid, dashed)
    }

    #[test]
    fn base_map_dot() {
        let (map, col) = base_map_5();
        let dot = export_dot(&map, Some(&col), true);
        assert_eq!(edge_lines(&dot), (9, 1));
        assert!(dot.contains("\"D\" -- \"E\" [style=dashed];"));
        assert!(dot.contains("fillcolor=gold"));
        assert_eq!(edge_lines(&export_dot(&map, None, false)), (9, 0));
    }

    #[test]
    fn single_face() {
        let m = complete_multipartite(1, 0, 0, 0).unwrap();
        assert_eq!(export_dot(&m, None, true), "graph map {\n  \"A1\";\n}\n");
    }

    #[test]
    fn multipartite_matches_base_structure() {
        let (base, _) = base_map_5();
        let m = complete_multipartite(1, 1, 1, 2).unwrap();
        assert_eq!(edge_lines(&export_dot(&m, None, true)), edge_lines(&export_dot(&base, None, true)));
        // same shape: relabel A1->A, B1->B, C1->C, D1->D, D2->E
        let renamed = export_dot(&m, None, true)
            .replace("A1", "A").replace("B1", "B").replace("C1", "C").replace("D1", "D").replace("D2", "E");
        assert_eq!(renamed, export_dot(&base, None, true));
    }
}
