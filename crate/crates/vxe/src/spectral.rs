//! Spectral decomposition of adjacency matrices and the quantities the rest
//! of the crate derives from it.
//!
//! For a graph with adjacency matrix `A = U Λ Uᵀ`, the *energy of vertex i*
//! is the diagonal entry of `|A| = U |Λ| Uᵀ`:
//!
//! ```text
//! E(i) = Σ_j p_ij |λ_j|,    p_ij = u_ij²
//! ```
//!
//! The weight matrix `(p_ij)` is doubly stochastic, so vertex energies
//! distribute the total graph energy `Σ_j |λ_j|` over the vertices. The same
//! weights turn eigenvalue powers into spectral moments, which equal closed
//! walk counts for integer exponents.

use crate::eigen::decompose_symmetric;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::num::Real;

/// Default cap on the matrix dimension accepted by [`decompose`].
///
/// Dense eigendecomposition is cubic; the cap keeps accidental huge inputs
/// from looking like a hang. Override per call with [`decompose_with_cap`]
/// (the CLI maps the `VXE_EIG_CAP` environment variable onto it).
pub const DEFAULT_EIG_CAP: usize = 4096;

/// Relative tolerance for grouping nearly equal eigenvalues.
///
/// Two adjacent eigenvalues belong to one group when they differ by at most
/// `1e-8 · max(1, |λ₁|)`. Grouping makes reported weights basis-independent
/// on degenerate eigenspaces: the summed weight of a group is the squared
/// projection onto the whole eigenspace, which no longer depends on the
/// arbitrary orthonormal basis the solver picked inside it.
pub const GROUP_RELATIVE_TOL: f64 = 1e-8;

/// A maximal run of (nearly) equal eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenGroup<R> {
    /// Mean eigenvalue of the group.
    pub value: R,
    /// Index of the first member in descending eigenvalue order.
    pub start: usize,
    /// Number of members (the multiplicity within tolerance).
    pub len: usize,
}

/// Per-vertex energies plus their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyVector<R = f64> {
    /// `per_vertex[i]` is the energy of vertex `i`.
    pub per_vertex: Vec<R>,
    /// Total graph energy `Σ_j |λ_j|`.
    pub total: R,
}

/// Eigendecomposition of a graph's adjacency matrix together with the
/// spectral weight matrix.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<R: Real = f64> {
    n: usize,
    /// Eigenvalues in descending order.
    eigenvalues: Vec<R>,
    /// Eigenvectors, column-major: `vectors[j*n + i]` is component `i` of
    /// the eigenvector for `eigenvalues[j]`.
    vectors: Vec<R>,
    /// Weights, row-major: `weights[i*n + j] = u_ij²`.
    weights: Vec<R>,
    /// Runs of nearly equal eigenvalues.
    groups: Vec<EigenGroup<R>>,
}

impl<R: Real> SpectralDecomposition<R> {
    fn from_graph(g: &Graph, cap: usize) -> Result<Self> {
        let n = g.n();
        if n > cap {
            return Err(Error::SizeCapExceeded { n, cap });
        }
        let a: Vec<R> = g.adjacency_matrix();
        let eig = decompose_symmetric(&a, n)?;
        let mut weights = vec![R::zero(); n * n];
        for j in 0..n {
            let col = &eig.vectors[j * n..(j + 1) * n];
            for (i, &u) in col.iter().enumerate() {
                weights[i * n + j] = u * u;
            }
        }
        let groups = group_eigenvalues(&eig.values);
        Ok(SpectralDecomposition {
            n,
            eigenvalues: eig.values,
            vectors: eig.vectors,
            weights,
            groups,
        })
    }

    /// Matrix dimension (the graph's vertex count).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> &[R] {
        &self.eigenvalues
    }

    /// Eigenvector for `eigenvalues()[j]`, as a slice of length `n`.
    pub fn eigenvector(&self, j: usize) -> &[R] {
        &self.vectors[j * self.n..(j + 1) * self.n]
    }

    /// Spectral weight `p_ij = u_ij²`.
    pub fn weight(&self, i: usize, j: usize) -> R {
        self.weights[i * self.n + j]
    }

    /// Weight row of vertex `i`.
    pub fn weight_row(&self, i: usize) -> &[R] {
        &self.weights[i * self.n..(i + 1) * self.n]
    }

    /// Maximal runs of nearly equal eigenvalues, in descending order.
    pub fn groups(&self) -> &[EigenGroup<R>] {
        &self.groups
    }

    /// Summed weight of vertex `v` over one eigenvalue group.
    pub fn group_weight(&self, v: usize, group: &EigenGroup<R>) -> R {
        let row = self.weight_row(v);
        row[group.start..group.start + group.len]
            .iter()
            .copied()
            .sum()
    }

    /// Summed weight of `v` on the eigenvalue group of largest magnitude.
    ///
    /// When `λ₁` and `-λ₁` tie in magnitude (bipartite graphs), the group
    /// containing the largest eigenvalue `λ₁` wins, so for a connected graph
    /// this is the squared Perron eigenvector entry.
    pub fn top_group_weight(&self, v: usize) -> R {
        let mut best: Option<&EigenGroup<R>> = None;
        for g in &self.groups {
            match best {
                Some(b) if g.value.abs() <= b.value.abs() => {}
                _ => best = Some(g),
            }
        }
        best.map_or(R::zero(), |g| self.group_weight(v, g))
    }

    /// Multiplicity `l` and summed weight at `v` of all eigenvalues whose
    /// magnitude ties with `|λ₁|` within the grouping tolerance. This merges
    /// the `+λ₁` and `-λ₁` groups of a bipartite graph.
    pub fn abs_top_group(&self, v: usize) -> (usize, R) {
        if self.n == 0 {
            return (0, R::zero());
        }
        let top = self.eigenvalues[0].abs();
        let tol = group_tolerance(&self.eigenvalues);
        let mut l = 0;
        let mut w = R::zero();
        for g in &self.groups {
            if (g.value.abs() - top).abs() <= tol {
                l += g.len;
                w += self.group_weight(v, g);
            }
        }
        (l, w)
    }

    /// Energy of vertex `v`: `Σ_j p_vj |λ_j|`.
    pub fn vertex_energy(&self, v: usize) -> R {
        self.weight_row(v)
            .iter()
            .zip(self.eigenvalues.iter())
            .map(|(&p, &lam)| p * lam.abs())
            .sum()
    }

    /// Energies of all vertices; the total is the trace `Σ_j |λ_j|`.
    pub fn energies(&self) -> EnergyVector<R> {
        let per_vertex = (0..self.n).map(|v| self.vertex_energy(v)).collect();
        let total = self.eigenvalues.iter().map(|lam| lam.abs()).sum();
        EnergyVector { per_vertex, total }
    }

    /// Spectral moment `Σ_j p_vj λ_j^k`; equals the closed-walk count of
    /// length `k` at `v` for integer `k ≥ 0`.
    pub fn moment(&self, v: usize, k: u32) -> R {
        self.weight_row(v)
            .iter()
            .zip(self.eigenvalues.iter())
            .map(|(&p, &lam)| p * lam.powi(k as i32))
            .sum()
    }

    /// Absolute spectral moment `Σ_j p_vj |λ_j|^s` for real `s ≥ 0`.
    ///
    /// The convention `0^0 = 1` applies, so `s = 0` always yields 1.
    pub fn abs_moment(&self, v: usize, s: R) -> R {
        self.weight_row(v)
            .iter()
            .zip(self.eigenvalues.iter())
            .map(|(&p, &lam)| p * lam.abs().powf(s))
            .sum()
    }
}

fn group_tolerance<R: Real>(eigenvalues: &[R]) -> R {
    let top = eigenvalues.first().map_or(R::zero(), |l| l.abs());
    R::of(GROUP_RELATIVE_TOL) * top.max(R::one())
}

fn group_eigenvalues<R: Real>(eigenvalues: &[R]) -> Vec<EigenGroup<R>> {
    let tol = group_tolerance(eigenvalues);
    let mut groups = Vec::new();
    let mut start = 0;
    while start < eigenvalues.len() {
        let mut end = start + 1;
        while end < eigenvalues.len() && (eigenvalues[end - 1] - eigenvalues[end]).abs() <= tol {
            end += 1;
        }
        let len = end - start;
        let sum: R = eigenvalues[start..end].iter().copied().sum();
        groups.push(EigenGroup {
            value: sum / R::of_usize(len),
            start,
            len,
        });
        start = end;
    }
    groups
}

/// Decomposes the adjacency matrix of `g` under the default size cap.
pub fn decompose<R: Real>(g: &Graph) -> Result<SpectralDecomposition<R>> {
    SpectralDecomposition::from_graph(g, DEFAULT_EIG_CAP)
}

/// Decomposes the adjacency matrix of `g` with an explicit size cap.
pub fn decompose_with_cap<R: Real>(g: &Graph, cap: usize) -> Result<SpectralDecomposition<R>> {
    SpectralDecomposition::from_graph(g, cap)
}

/// Energy of one vertex of `g`.
pub fn vertex_energy<R: Real>(g: &Graph, v: usize) -> Result<R> {
    if v >= g.n() {
        return Err(Error::OutOfRange {
            what: "vertex",
            value: v,
            limit: g.n(),
        });
    }
    Ok(decompose::<R>(g)?.vertex_energy(v))
}

/// Energies of every vertex of `g` plus the total.
pub fn all_vertex_energies<R: Real>(g: &Graph) -> Result<EnergyVector<R>> {
    Ok(decompose::<R>(g)?.energies())
}

/// Spectral moment of order `k` at vertex `v`.
pub fn spectral_moment<R: Real>(g: &Graph, v: usize, k: u32) -> Result<R> {
    if v >= g.n() {
        return Err(Error::OutOfRange {
            what: "vertex",
            value: v,
            limit: g.n(),
        });
    }
    Ok(decompose::<R>(g)?.moment(v, k))
}

/// Absolute spectral moment of real order `s ≥ 0` at vertex `v`.
pub fn abs_moment<R: Real>(g: &Graph, v: usize, s: R) -> Result<R> {
    if v >= g.n() {
        return Err(Error::OutOfRange {
            what: "vertex",
            value: v,
            limit: g.n(),
        });
    }
    if s < R::zero() {
        return Err(Error::BadParameters {
            reason: "absolute moment order must be non-negative".into(),
        });
    }
    Ok(decompose::<R>(g)?.abs_moment(v, s))
}

/// Splits the total energy of a bipartite graph across its two parts.
///
/// Both halves are equal: `|A|` of a bipartite graph is block-diagonal with
/// blocks `√(BBᵀ)` and `√(BᵀB)`, which share nonzero spectrum, so each part
/// carries exactly half the total energy. The function returns the two part
/// sums as computed, letting callers observe the equality numerically.
pub fn bipartite_energy_split<R: Real>(g: &Graph) -> Result<(R, R)> {
    let (p1, p2) = g.bipartition().ok_or(Error::NotBipartite)?;
    let dec = decompose::<R>(g)?;
    let sum = |part: &[usize]| part.iter().map(|&v| dec.vertex_energy(v)).sum::<R>();
    Ok((sum(&p1), sum(&p2)))
}
