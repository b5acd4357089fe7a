//! Non-rainbow and null colorings of sphere and projective-plane
//! triangulations.
//!
//! A coloring of a graph `G` with `k` colors is a map `G -> K_k`; it is
//! *null* when the induced map on first homology vanishes. On triangulations
//! of the sphere and the projective plane the null colorings are exactly the
//! colorings without a rainbow (three-colored) face, and a maximal null
//! coloring always has a forest as its quotient graph. This crate decides
//! both properties exactly, computes the largest number of colors of a
//! non-rainbow coloring by exhaustive search, and builds triangulations that
//! reach the upper bound `⌊(2n-1)/3⌋` (sphere) or `⌊(2n+1)/3⌋` (projective
//! plane).

pub mod coloring;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod search;
pub mod snf;
pub mod surface;

pub use coloring::{Color, Coloring, QuotientGraph};
pub use graph::{build_graph, ClosedWalk, Distance, EdgeId, MultiGraph, SpanningTree, VertexId};
pub use homology::{is_null_coloring, InducedMatrix};
pub use search::{BoundReport, Descent, SearchBudget, SearchError};
pub use surface::{Face, SurfaceKind, Triangulation};
