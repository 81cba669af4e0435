mod common;

use common::{structural_violations, removability_violations};
use quasisquare::corpus::{connected_graphs, named};
use quasisquare::qt::{decide_qt, enumerate_qt, SolveOptions};

#[test]
fn structural_statements_hold_for_every_orientation() {
    let mut checked = 0;
    for g in connected_graphs(6, |g| g.edge_count() <= 10) {
        for o in enumerate_qt(&g).unwrap() {
            let bad = structural_violations(&g, &o);
            assert!(bad.is_empty(), "{:?} / {:?}: {bad:?}", g.edges(), o.mixed());
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn removable_vertices_on_small_subcubic_graphs() {
    let decide = |h: &quasisquare::Graph| decide_qt(h, &SolveOptions::default()).unwrap().is_some();
    let mut with_removable = 0;
    for g in connected_graphs(7, |g| g.max_degree() <= 3) {
        let bad = removability_violations(&g, decide);
        assert!(bad.is_empty(), "{:?}: {bad:?}", g.edges());
        if (0..g.n()).any(|u| quasisquare::poly::is_removable(&g, u).unwrap()) {
            with_removable += 1;
        }
    }
    assert!(with_removable > 0);
    assert!(removability_violations(&named::k4_minus_edge(), decide).is_empty());
}
