//! Recognition of graphs that are the undirected square of an oriented graph.
//!
//! A graph is such a square exactly when some of its edges can be oriented so
//! that the resulting mixed graph is quasi-transitive. This crate provides the
//! exact search for such partial orientations, polynomial decisions for
//! maximum degree three and girth four, and the encoding of monotone
//! not-all-equal 3-SAT into the problem.
//!
//! ```
//! use quasisquare::corpus::named;
//! use quasisquare::qt::{decide_qt, verify_witness, SolveOptions};
//!
//! let k5 = named::complete(5);
//! let w = decide_qt(&k5, &SolveOptions::default()).unwrap().unwrap();
//! assert!(verify_witness(&k5, w.mixed()).is_ok());
//! assert!(decide_qt(&named::cycle(5), &SolveOptions::default()).unwrap().is_none());
//! ```

pub mod corpus;
pub mod graph;
pub mod nae;
pub mod poly;
pub mod qt;

pub use graph::{Graph, MixedGraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/mixed-graphs.md")]
    mod mixed_graphs {}
    #[doc = include_str!("../../../book/src/orientations.md")]
    mod orientations {}
    #[doc = include_str!("../../../book/src/degree-three.md")]
    mod degree_three {}
    #[doc = include_str!("../../../book/src/reduction.md")]
    mod reduction {}
}
