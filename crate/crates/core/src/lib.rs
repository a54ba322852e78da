//! Metric dimension of graphs, computed exactly by search and in closed
//! form for tensor products of cliques.
//!
//! Vertices of `K_{m_1} ⊗ … ⊗ K_{m_t}` are numbered in row-major mixed
//! radix with the last factor varying fastest, see [`CliqueFactors`].

pub mod constructions;
pub mod distance;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod metric;
pub mod solver;

pub use distance::{all_pairs_distances, diameter, Diameter, DistanceMatrix, INF};
pub use error::{Error, Result};
pub use graph::{
    build_bipartite_minus_matching, build_clique, check_k2_kn_isomorphism, tensor_of_cliques, tensor_product,
    CliqueFactors, Graph, TensorCoord,
};
pub use metric::{
    is_resolving, lemma2_witness, projection, representation, OrderedVertexSet, Representation, Resolution,
};
pub use solver::{
    exact_metric_dimension, exact_metric_dimension_with_stats, greedy_resolving_set, DimResult, SolveStats,
    SolverOptions, Strategy,
};
