use super::PolyError;
use crate::graph::{bipartition, girth, undirected_square, Graph, MixedGraph};
use crate::qt::PartialOrientation;

/// For graphs of girth at least four: the all-arcs orientation from one colour
/// class to the other when `g` is bipartite, `None` otherwise.
pub fn decide_girth4(g: &Graph) -> Result<Option<PartialOrientation>, PolyError> {
    if girth(g) == Some(3) {
        return Err(PolyError::GirthThree);
    }
    let Some(side) = bipartition(g) else { return Ok(None) };
    let arcs = g
        .edges()
        .iter()
        .map(|&(u, v)| if side[u] { (u, v) } else { (v, u) });
    let mixed = MixedGraph::oriented(g.n(), arcs).expect("one arc per edge");
    Ok(Some(PartialOrientation::new_unchecked(g.clone(), mixed)))
}

/// Embeds `g` as an induced subgraph of an oriented graph square.
///
/// Each edge `{lo, hi}` (edge index `i`) is oriented `lo -> hi` and subdivided
/// by the new vertex `n + i`. Returns the square's underlying graph and the
/// oriented root.
pub fn embed_universal(g: &Graph) -> (Graph, MixedGraph) {
    let n = g.n();
    let arcs = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(lo, hi))| [(lo, n + i), (n + i, hi)]);
    let root = MixedGraph::oriented(n + g.edge_count(), arcs).expect("subdivision is an oriented graph");
    (undirected_square(&root), root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named;
    use crate::graph::mixed_square;
    use crate::qt::{verify_witness, vertex_status, VertexStatus};

    #[test]
    fn girth_four_decisions() {
        let c4 = decide_girth4(&named::cycle(4)).unwrap().unwrap();
        let statuses: Vec<_> = (0..4).map(|v| vertex_status(c4.mixed(), v)).collect();
        assert_eq!(statuses.iter().filter(|&&s| s == VertexStatus::Source).count(), 2);
        assert_eq!(statuses.iter().filter(|&&s| s == VertexStatus::Sink).count(), 2);
        assert_eq!(verify_witness(c4.base(), c4.mixed()), Ok(()));
        assert_eq!(decide_girth4(&named::cycle(5)), Ok(None));
        assert_eq!(decide_girth4(&named::petersen()), Ok(None));
        assert_eq!(decide_girth4(&named::complete(3)), Err(PolyError::GirthThree));
        assert!(decide_girth4(&named::path(5)).unwrap().is_some());
    }

    #[test]
    fn embedding_of_a_single_edge() {
        let (sq, root) = embed_universal(&named::path(2));
        assert_eq!(root.arcs(), &[(0, 2), (2, 1)]);
        assert_eq!(sq, named::complete(3));
        assert!(sq.induced(&[0, 1]).graph.has_edge(0, 1));
    }

    #[test]
    fn embedding_of_edgeless_graph_is_identity() {
        let (sq, root) = embed_universal(&Graph::empty(3));
        assert_eq!(sq, Graph::empty(3));
        assert!(root.arcs().is_empty());
    }

    #[test]
    fn five_cycle_embeds_into_an_orientable_square() {
        let c5 = named::cycle(5);
        let (sq, root) = embed_universal(&c5);
        assert_eq!(sq.n(), 10);
        assert_eq!(sq.induced(&[0, 1, 2, 3, 4]).graph, c5);
        assert_eq!(verify_witness(&sq, &mixed_square(&root)), Ok(()));
    }
}
