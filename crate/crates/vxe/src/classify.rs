//! Hyper- and hypoenergetic classification of vertices and graphs, plus
//! purely structural sufficient conditions that certify a classification
//! without any spectral computation.
//!
//! A vertex is *hyperenergetic* when its energy is at least 2 (the energy of
//! a complete-graph vertex in the large-n limit) and *hypoenergetic* when its
//! energy is strictly below 1 (the energy of a vertex in any regular graph is
//! at least 1). Graph-level flags quantify these over all vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::num::Real;
use crate::spectral::all_vertex_energies;

/// Vertex energy at or above this is hyperenergetic.
pub const HYPER_THRESHOLD: f64 = 2.0;
/// Vertex energy strictly below this is hypoenergetic.
pub const HYPO_THRESHOLD: f64 = 1.0;
/// Half-width of the band around either threshold inside which a vertex is
/// additionally flagged borderline. Classification itself always uses exact
/// comparison; the flag only marks values too close to a threshold for the
/// boolean to be numerically trustworthy.
pub const BORDERLINE_TOL: f64 = 1e-9;

/// Classification of a single vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexClass<R> {
    pub vertex: usize,
    pub energy: R,
    /// `energy >= 2`.
    pub hyperenergetic: bool,
    /// `energy < 1`.
    pub hypoenergetic: bool,
    /// Energy within [`BORDERLINE_TOL`] of either threshold.
    pub borderline: bool,
}

/// What a holding criterion lets one conclude without computing spectra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionConclusion {
    /// Every vertex has energy ≥ 2.
    CompletelyHyperenergetic,
    /// Every vertex has energy < 2.
    CompletelyNonHyperenergetic,
    /// Every vertex has energy ≥ 1.
    CompletelyNonHypoenergetic,
    /// The listed vertices each have energy < 1.
    HypoenergeticVertices(Vec<usize>),
    /// The total energy is strictly below the number of vertices.
    TotalEnergyBelowVertexCount,
}

/// One evaluated sufficient condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub name: &'static str,
    pub holds: bool,
    /// Human-readable parameters, e.g. `"d = 3"`.
    pub detail: String,
    pub conclusion: CriterionConclusion,
}

/// Classification of a whole graph, with per-vertex detail and the list of
/// structural criteria that fired.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphClass<R> {
    pub vertices: Vec<VertexClass<R>>,
    /// All vertices hyperenergetic (vacuously true when n = 0).
    pub completely_hyperenergetic: bool,
    /// No vertex hyperenergetic.
    pub completely_non_hyperenergetic: bool,
    /// All vertices hypoenergetic.
    pub completely_hypoenergetic: bool,
    /// No vertex hypoenergetic.
    pub completely_non_hypoenergetic: bool,
    /// The subset of [`criteria_check`] results that hold.
    pub satisfied_criteria: Vec<CriterionOutcome>,
}

fn classify_energy<R: Real>(vertex: usize, energy: R) -> VertexClass<R> {
    let hyper_t = R::of(HYPER_THRESHOLD);
    let hypo_t = R::of(HYPO_THRESHOLD);
    let band = R::of(BORDERLINE_TOL);
    VertexClass {
        vertex,
        energy,
        hyperenergetic: energy >= hyper_t,
        hypoenergetic: energy < hypo_t,
        borderline: (energy - hyper_t).abs() <= band || (energy - hypo_t).abs() <= band,
    }
}

/// Classifies one vertex by its computed energy.
pub fn classify_vertex<R: Real>(g: &Graph, v: usize) -> Result<VertexClass<R>> {
    g.check_vertex(v)?;
    let e = crate::spectral::vertex_energy::<R>(g, v)?;
    Ok(classify_energy(v, e))
}

/// Classifies every vertex and aggregates the graph-level flags; the
/// structural criteria are evaluated alongside and the holding ones listed.
pub fn classify_graph<R: Real>(g: &Graph) -> Result<GraphClass<R>> {
    let energies = all_vertex_energies::<R>(g)?;
    Ok(classify_energies(g, &energies.per_vertex))
}

/// [`classify_graph`] against per-vertex energies that have already been
/// computed, e.g. from [`crate::SpectralDecomposition::energies`].
pub fn classify_energies<R: Real>(g: &Graph, per_vertex: &[R]) -> GraphClass<R> {
    let vertices: Vec<VertexClass<R>> = per_vertex
        .iter()
        .enumerate()
        .map(|(v, &e)| classify_energy(v, e))
        .collect();
    let satisfied_criteria = criteria_check(g)
        .into_iter()
        .filter(|c| c.holds)
        .collect();
    GraphClass {
        completely_hyperenergetic: vertices.iter().all(|c| c.hyperenergetic),
        completely_non_hyperenergetic: vertices.iter().all(|c| !c.hyperenergetic),
        completely_hypoenergetic: vertices.iter().all(|c| c.hypoenergetic),
        completely_non_hypoenergetic: vertices.iter().all(|c| !c.hypoenergetic),
        vertices,
        satisfied_criteria,
    }
}

/// Common degree of a regular graph with at least one vertex.
fn regular_degree(g: &Graph) -> Option<usize> {
    if g.n() == 0 {
        return None;
    }
    let d = g.degree(0).expect("vertex in range");
    (1..g.n())
        .all(|v| g.degree(v).expect("vertex in range") == d)
        .then_some(d)
}

fn quadrangle_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| !g.quadrangle_through(v).expect("vertex in range"))
}

/// Degree-1 vertices whose component is not a single edge. (Both endpoints
/// of an isolated edge have energy exactly 1, so they are excluded.)
fn pendant_vertices_off_isolated_edges(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| {
            g.degree(v).expect("vertex in range") == 1 && {
                let u = g.neighbors(v).next().expect("degree is 1");
                g.degree(u).expect("vertex in range") != 1
            }
        })
        .collect()
}

/// Evaluates the structural sufficient conditions on `g`.
///
/// Each entry reports whether the condition holds and what holding implies;
/// none of them performs spectral work. The conditions:
///
/// 1. d-regular with `d ≤ 4` → completely non-hyperenergetic.
/// 2. d-regular, quadrangle-free, `d ≥ 8` → completely hyperenergetic.
/// 3. quadrangle-free with `δ ≥ 2√Δ + 2` → completely hyperenergetic.
/// 4. d-regular with `d ≥ 1` → completely non-hypoenergetic.
/// 5. degree-1 vertices off isolated edges → those vertices hypoenergetic.
/// 6. bipartite with `2n₁ ≤ √n₂` (parts sized `n₁ ≤ n₂`) → total energy < n.
/// 7. tree with smaller part `n₁ ≤ n/4` → total energy < n.
///
/// The independent-set variant of 6 needs a caller-supplied set and lives in
/// [`independent_set_criterion`].
pub fn criteria_check(g: &Graph) -> Vec<CriterionOutcome> {
    let n = g.n();
    let reg = regular_degree(g);
    let quad_free = n > 0 && quadrangle_free(g);
    let (min_deg, max_deg) = g.degree_extremes();
    let mut out = Vec::new();

    out.push(match reg {
        Some(d) if d <= 4 => CriterionOutcome {
            name: "regular_degree_at_most_4",
            holds: true,
            detail: format!("d = {d}"),
            conclusion: CriterionConclusion::CompletelyNonHyperenergetic,
        },
        _ => CriterionOutcome {
            name: "regular_degree_at_most_4",
            holds: false,
            detail: describe_regularity(reg),
            conclusion: CriterionConclusion::CompletelyNonHyperenergetic,
        },
    });

    out.push(match reg {
        Some(d) if d >= 8 && quad_free => CriterionOutcome {
            name: "regular_quadrangle_free_degree_at_least_8",
            holds: true,
            detail: format!("d = {d}, quadrangle-free"),
            conclusion: CriterionConclusion::CompletelyHyperenergetic,
        },
        _ => CriterionOutcome {
            name: "regular_quadrangle_free_degree_at_least_8",
            holds: false,
            detail: describe_regularity(reg),
            conclusion: CriterionConclusion::CompletelyHyperenergetic,
        },
    });

    let gap_holds =
        n > 0 && quad_free && min_deg as f64 >= 2.0 * (max_deg as f64).sqrt() + 2.0;
    out.push(CriterionOutcome {
        name: "quadrangle_free_min_degree_gap",
        holds: gap_holds,
        detail: format!("min degree {min_deg}, max degree {max_deg}"),
        conclusion: CriterionConclusion::CompletelyHyperenergetic,
    });

    out.push(match reg {
        Some(d) if d >= 1 => CriterionOutcome {
            name: "regular_degree_at_least_1",
            holds: true,
            detail: format!("d = {d}"),
            conclusion: CriterionConclusion::CompletelyNonHypoenergetic,
        },
        _ => CriterionOutcome {
            name: "regular_degree_at_least_1",
            holds: false,
            detail: describe_regularity(reg),
            conclusion: CriterionConclusion::CompletelyNonHypoenergetic,
        },
    });

    let pendants = pendant_vertices_off_isolated_edges(g);
    out.push(CriterionOutcome {
        name: "pendant_vertices",
        holds: !pendants.is_empty(),
        detail: format!("{} qualifying degree-1 vertices", pendants.len()),
        conclusion: CriterionConclusion::HypoenergeticVertices(pendants),
    });

    let parts = g.bipartition();
    out.push(match &parts {
        Some((p1, p2)) if n > 0 => {
            let n1 = p1.len().min(p2.len());
            let n2 = p1.len().max(p2.len());
            let holds = 2.0 * n1 as f64 <= (n2 as f64).sqrt();
            CriterionOutcome {
                name: "bipartite_small_part",
                holds,
                detail: format!("parts {n1}, {n2}"),
                conclusion: CriterionConclusion::TotalEnergyBelowVertexCount,
            }
        }
        _ => CriterionOutcome {
            name: "bipartite_small_part",
            holds: false,
            detail: if n == 0 {
                "empty graph".to_owned()
            } else {
                "not bipartite".to_owned()
            },
            conclusion: CriterionConclusion::TotalEnergyBelowVertexCount,
        },
    });

    let is_tree = n > 0 && g.m() == n - 1 && g.is_connected();
    out.push(match &parts {
        Some((p1, p2)) if is_tree => {
            let n1 = p1.len().min(p2.len());
            let holds = n1 as f64 <= n as f64 / 4.0;
            CriterionOutcome {
                name: "tree_small_part",
                holds,
                detail: format!("smaller part {n1} of {n}"),
                conclusion: CriterionConclusion::TotalEnergyBelowVertexCount,
            }
        }
        _ => CriterionOutcome {
            name: "tree_small_part",
            holds: false,
            detail: "not a tree".to_owned(),
            conclusion: CriterionConclusion::TotalEnergyBelowVertexCount,
        },
    });

    out
}

fn describe_regularity(reg: Option<usize>) -> String {
    match reg {
        Some(d) => format!("d = {d}"),
        None => "not regular".to_owned(),
    }
}

/// Independent-set variant of the small-part criterion.
///
/// `w2` must be an independent set (given, not searched for): distinct
/// in-range vertices with no edge between any two. With `n₂ = |W₂|` and
/// `n₁ = n - n₂`, the condition `n₁ ≤ 0.4·√n₂` implies total energy < n.
pub fn independent_set_criterion(g: &Graph, w2: &[usize]) -> Result<CriterionOutcome> {
    let mut seen = vec![false; g.n()];
    for &v in w2 {
        g.check_vertex(v)?;
        if seen[v] {
            return Err(Error::BadParameters {
                reason: format!("vertex {v} listed twice in the independent set"),
            });
        }
        seen[v] = true;
    }
    for &v in w2 {
        for u in g.neighbors(v) {
            if seen[u] {
                return Err(Error::BadParameters {
                    reason: format!("vertices {v} and {u} are adjacent, set is not independent"),
                });
            }
        }
    }
    let n2 = w2.len();
    let n1 = g.n() - n2;
    let holds = g.n() > 0 && n1 as f64 <= 0.4 * (n2 as f64).sqrt();
    Ok(CriterionOutcome {
        name: "independent_set_small_complement",
        holds,
        detail: format!("complement {n1}, independent set {n2}"),
        conclusion: CriterionConclusion::TotalEnergyBelowVertexCount,
    })
}

/// Whether a holding criterion's conclusion agrees with the spectral
/// classification, within `tol` at the thresholds.
pub fn criterion_consistent<R: Real>(
    class: &GraphClass<R>,
    outcome: &CriterionOutcome,
    tol: R,
) -> bool {
    if !outcome.holds {
        return true;
    }
    let hyper_t = R::of(HYPER_THRESHOLD);
    let hypo_t = R::of(HYPO_THRESHOLD);
    match &outcome.conclusion {
        CriterionConclusion::CompletelyHyperenergetic => class
            .vertices
            .iter()
            .all(|c| c.energy >= hyper_t - tol),
        CriterionConclusion::CompletelyNonHyperenergetic => class
            .vertices
            .iter()
            .all(|c| c.energy < hyper_t + tol),
        CriterionConclusion::CompletelyNonHypoenergetic => class
            .vertices
            .iter()
            .all(|c| c.energy >= hypo_t - tol),
        CriterionConclusion::HypoenergeticVertices(vs) => vs
            .iter()
            .all(|&v| class.vertices[v].energy < hypo_t + tol),
        CriterionConclusion::TotalEnergyBelowVertexCount => {
            let total: R = class.vertices.iter().map(|c| c.energy).sum();
            total < R::of_usize(class.vertices.len()) + tol
        }
    }
}
