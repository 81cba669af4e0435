use crate::graph::{Graph, MixedGraph};
use crate::qt::{enumerate_qt, signature, Signature};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Literal vertices `(u, v, w)` of the clause gadget.
pub const LITERALS: [usize; 3] = [1, 8, 4];
/// Far end of the triangle-free edge at `u`, `v`, `w`.
pub const PENDANTS: [usize; 3] = [0, 7, 5];

const GADGET_EDGES: [(usize, usize); 13] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (1, 6),
    (2, 6),
    (3, 6),
    (4, 6),
    (6, 7),
    (2, 7),
    (3, 7),
    (7, 8),
];

/// The nine-vertex clause gadget with its literal and pendant triples. Its
/// triangle-free edges are exactly the three literal-pendant pairs.
pub fn clause_gadget() -> (Graph, [usize; 3], [usize; 3]) {
    (Graph::new(9, GADGET_EDGES).expect("fixed gadget"), LITERALS, PENDANTS)
}

/// Outcome of enumerating every quasi-transitive partial orientation of the
/// gadget and reading off the signature of its literal vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetReport {
    /// Orientations per signature, absent signatures omitted.
    pub counts: BTreeMap<Signature, usize>,
    /// First enumerated orientation for each achievable signature.
    pub templates: BTreeMap<Signature, MixedGraph>,
    /// Orientations in which a literal vertex is neither source nor sink.
    pub unsigned: usize,
    pub total: usize,
}

impl GadgetReport {
    pub fn achievable(&self) -> impl Iterator<Item = Signature> + '_ {
        self.counts.keys().copied()
    }

    pub fn count(&self, s: Signature) -> usize {
        self.counts.get(&s).copied().unwrap_or(0)
    }
}

fn compute() -> GadgetReport {
    let (g, literals, _) = clause_gadget();
    let mut report =
        GadgetReport { counts: BTreeMap::new(), templates: BTreeMap::new(), unsigned: 0, total: 0 };
    for o in enumerate_qt(&g).expect("gadget is under the enumeration cap") {
        report.total += 1;
        match signature(o.mixed(), literals) {
            Ok(s) => {
                *report.counts.entry(s).or_default() += 1;
                report.templates.entry(s).or_insert_with(|| o.into_mixed());
            }
            Err(_) => report.unsigned += 1,
        }
    }
    report
}

/// Enumerates the gadget once per process and caches the result.
pub fn gadget_signature_set() -> &'static GadgetReport {
    static REPORT: OnceLock<GadgetReport> = OnceLock::new();
    REPORT.get_or_init(compute)
}

/// Stored gadget orientation realising `s`, if any.
pub fn gadget_template(s: Signature) -> Option<&'static MixedGraph> {
    gadget_signature_set().templates.get(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::triangle_free_edges;
    use crate::qt::verify_witness;

    #[test]
    fn degrees_and_symmetry() {
        let (g, _, _) = clause_gadget();
        let degs: Vec<usize> = (0..9).map(|v| g.degree(v)).collect();
        assert_eq!(degs, [1, 3, 4, 4, 3, 1, 5, 4, 1]);
        let sigma = [5, 4, 3, 2, 1, 0, 6, 7, 8];
        assert!(g.edges().iter().all(|&(a, b)| g.has_edge(sigma[a], sigma[b])));
    }

    #[test]
    fn pendant_edges_are_the_triangle_free_edges() {
        let (g, lit, pend) = clause_gadget();
        let free = triangle_free_edges(&g);
        let expected: Vec<(usize, usize)> =
            lit.iter().zip(pend).map(|(&l, p)| (l.min(p), l.max(p))).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        assert_eq!(free.as_slice(), expected.as_slice());
    }

    #[test]
    fn signatures_are_exactly_the_non_constant_triples() {
        let report = gadget_signature_set();
        let got: Vec<Signature> = report.achievable().collect();
        let want: Vec<Signature> = Signature::all().filter(|s| !s.is_constant()).collect();
        assert_eq!(got, want);
        assert_eq!(report.count(Signature([true; 3])), 0);
        assert_eq!(report.count(Signature([false; 3])), 0);
        assert_eq!((report.total, report.unsigned), (48, 0));
        for s in want {
            assert_eq!(report.count(s), report.count(s.complement()));
            let t = gadget_template(s).unwrap();
            assert_eq!(signature(t, LITERALS), Ok(s));
            assert_eq!(verify_witness(&clause_gadget().0, t), Ok(()));
        }
    }
}
