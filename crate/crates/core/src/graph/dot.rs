use super::{Graph, MixedGraph};

pub fn graph_to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        s.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}

/// Arcs are drawn as directed edges, kept edges with `dir=none`.
pub fn mixed_to_dot(m: &MixedGraph) -> String {
    let mut s = String::from("digraph G {\n");
    for v in 0..m.n() {
        s.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in m.arcs() {
        s.push_str(&format!("  {u} -> {v};\n"));
    }
    for &(u, v) in m.edges() {
        s.push_str(&format!("  {u} -> {v} [dir=none];\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_output_lists_every_adjacency() {
        let m = MixedGraph::new(3, [(1, 2)], [(0, 1)]).unwrap();
        let dot = mixed_to_dot(&m);
        assert!(dot.starts_with("digraph G {"));
        assert!(dot.contains("0 -> 1;"));
        assert!(dot.contains("1 -> 2 [dir=none];"));
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert!(graph_to_dot(&g).contains("0 -- 1;"));
    }
}
