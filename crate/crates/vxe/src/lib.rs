//! Vertex energies of finite simple graphs.
//!
//! The energy of a vertex is its diagonal entry in `|A|`, the positive
//! square root of the squared adjacency matrix: writing `λ_j` for the
//! eigenvalues of `A` and `p_ij` for the squared eigenvector components,
//! the energy of vertex `i` is `Σ_j p_ij·|λ_j|`. Summed over all vertices
//! this recovers the classical graph energy `Σ_j |λ_j|`, so vertex energies
//! say how the total is distributed across the graph.
//!
//! What lives where:
//!
//! - [`graph`]: the graph type, edge-list parsing, walk counting, and a
//!   seeded random corpus generator;
//! - [`spectral`]: eigendecomposition, spectral weights, vertex energies,
//!   moments, and the bipartite energy split;
//! - [`bounds`]: per-vertex and global energy bounds with an aggregated
//!   report;
//! - [`classify`]: hyper-/hypoenergetic classification plus structural
//!   sufficient criteria;
//! - [`families`]: generators and closed-form energies for named families;
//! - [`limits`]: limiting energies of the infinite line, half-line, and
//!   regular tree, with quadrature and truncation cross-checks.
//!
//! Everything numeric is generic over the scalar (f32 or f64) through the
//! [`Real`] trait; f64 is the intended default and what the aliases below
//! pin down.
//!
//! ```
//! use vxe::{vertex_energy, Graph};
//!
//! // A star with four leaves: the center's energy is √4 = 2.
//! let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
//! let center: f64 = vertex_energy(&star, 0).unwrap();
//! assert!((center - 2.0).abs() < 1e-12);
//! ```

pub mod bounds;
pub mod classify;
mod eigen;
pub mod error;
pub mod families;
pub mod graph;
pub mod limits;
mod num;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{parse_edge_list, random_corpus, write_edge_list, Graph};
pub use num::Real;
pub use spectral::{
    all_vertex_energies, bipartite_energy_split, decompose, decompose_with_cap, spectral_moment,
    vertex_energy, EnergyVector, SpectralDecomposition,
};

/// Spectral decomposition at f64 precision.
pub type Decomposition64 = spectral::SpectralDecomposition<f64>;
/// Spectral decomposition at f32 precision.
pub type Decomposition32 = spectral::SpectralDecomposition<f32>;
/// Vertex energies at f64 precision.
pub type Energies64 = spectral::EnergyVector<f64>;
/// Vertex energies at f32 precision.
pub type Energies32 = spectral::EnergyVector<f32>;
/// Per-vertex bound report at f64 precision.
pub type BoundReport64 = bounds::BoundReport<f64>;
/// Whole-graph classification at f64 precision.
pub type GraphClass64 = classify::GraphClass<f64>;
