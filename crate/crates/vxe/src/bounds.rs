//! Lower and upper bounds on vertex energies, plus global (total-energy)
//! bounds, with an aggregating per-vertex report.
//!
//! Degree notation in the formulas: `d` is the degree of the vertex under
//! consideration, `Δ` the maximum and `δ` the minimum degree of the graph,
//! `λ₁` the largest adjacency eigenvalue, `r` the vertex's eccentricity,
//! `M₄` the number of closed 4-walks at the vertex, and `p₁` the spectral
//! weight of the vertex on the eigenvalue group of largest magnitude.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::num::Real;
use crate::spectral::{decompose, SpectralDecomposition};

/// Radicand floor for [`upper_spectral_cs`]: values in `[-1e-10, 0)` are
/// treated as roundoff and clamped to zero; anything lower is reported as an
/// error because it signals inconsistent weights, not noise.
pub const RADICAND_TOLERANCE: f64 = 1e-10;

/// Upper bound `√d` on the energy of a vertex of degree `d`.
///
/// Equality holds exactly when the vertex's component is a star centered at
/// the vertex (see [`is_star_center`]).
pub fn upper_sqrt_degree<R: Real>(g: &Graph, v: usize) -> Result<R> {
    Ok(R::of_usize(g.degree(v)?).sqrt())
}

/// Lower bound `d/Δ`. Tight on complete bipartite graphs with equal parts.
pub fn lower_degree_ratio<R: Real>(g: &Graph, v: usize) -> Result<R> {
    let d = g.degree(v)?;
    let (_, max_deg) = g.degree_extremes();
    if max_deg == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(R::of_usize(d) / R::of_usize(max_deg))
}

/// Lower bound `√(d/Δ)`, the square root of [`lower_degree_ratio`].
pub fn lower_sqrt_degree_ratio<R: Real>(g: &Graph, v: usize) -> Result<R> {
    Ok(lower_degree_ratio::<R>(g, v)?.sqrt())
}

/// Lower bound `d^{3/2} / √M₄` from the fourth spectral moment.
pub fn lower_fourth_moment<R: Real>(g: &Graph, v: usize) -> Result<R> {
    let d = g.degree(v)?;
    if d == 0 {
        return Err(Error::ZeroDegree { vertex: v });
    }
    let m4 = g.closed_walk_count(v, 4)?;
    let d = R::of_usize(d);
    let m4 = R::of(m4 as f64);
    Ok(d.powf(R::of(1.5)) / m4.sqrt())
}

/// Hölder-type lower bound on the vertex energy.
///
/// For an integer `k ≥ 2` and real `p > 1` with conjugate `q = p/(p-1)`:
///
/// ```text
/// E(v) ≥ φ_v(|A|^k)^q / φ_v(|A|^{p(k-1)+1})^{q/p}
/// ```
///
/// where `φ_v` is the absolute spectral moment at `v`. The pair
/// `(k, p) = (2, 3)` recovers [`lower_fourth_moment`].
pub fn lower_holder<R: Real>(g: &Graph, v: usize, k: u32, p: R) -> Result<R> {
    let dec = decompose::<R>(g)?;
    lower_holder_from(&dec, g, v, k, p)
}

fn lower_holder_from<R: Real>(
    dec: &SpectralDecomposition<R>,
    g: &Graph,
    v: usize,
    k: u32,
    p: R,
) -> Result<R> {
    if g.degree(v)? == 0 {
        return Err(Error::ZeroDegree { vertex: v });
    }
    if k < 2 {
        return Err(Error::BadParameters {
            reason: format!("holder exponent k = {k} must be at least 2"),
        });
    }
    if p <= R::one() {
        return Err(Error::BadExponent {
            p: p.to_f64().unwrap_or(f64::NAN),
        });
    }
    let q = p / (p - R::one());
    let num = dec.abs_moment(v, R::of_usize(k as usize));
    let den_order = p * R::of_usize(k as usize - 1) + R::one();
    let den = dec.abs_moment(v, den_order);
    Ok(num.powf(q) / den.powf(q / p))
}

/// Lower bound `√d · √(d/(d+Δ-1))` for vertices on no 4-cycle.
///
/// Returns `Ok(None)` when the vertex lies on a quadrangle, in which case
/// the bound does not apply.
pub fn lower_quadrangle_free<R: Real>(g: &Graph, v: usize) -> Result<Option<R>> {
    let d = g.degree(v)?;
    if d == 0 {
        return Err(Error::ZeroDegree { vertex: v });
    }
    if g.quadrangle_through(v)? {
        return Ok(None);
    }
    let (_, max_deg) = g.degree_extremes();
    let d = R::of_usize(d);
    let dd = R::of_usize(max_deg);
    Ok(Some(d.sqrt() * (d / (d + dd - R::one())).sqrt()))
}

/// Lower bound `1/(λ₁^{2r} + λ₁^{2r-2})` on the spectral weight `p₁` of the
/// vertex for the largest-magnitude eigenvalue group, where `r` is the
/// vertex's eccentricity.
pub fn top_weight_lower_bound<R: Real>(g: &Graph, v: usize) -> Result<R> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let dec = decompose::<R>(g)?;
    top_weight_lower_bound_from(&dec, g, v)
}

fn top_weight_lower_bound_from<R: Real>(
    dec: &SpectralDecomposition<R>,
    g: &Graph,
    v: usize,
) -> Result<R> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let r = g.eccentricity(v)? as i32;
    let lam1 = dec.eigenvalues()[0];
    Ok(R::one() / (lam1.powi(2 * r) + lam1.powi(2 * r - 2)))
}

/// Cauchy–Schwarz upper bound using the computed top weight:
///
/// ```text
/// E(v) ≤ p₁|λ₁| + √((d - p₁λ₁²)(1 - p₁))
/// ```
///
/// Requires a connected graph on at least two vertices. A radicand below
/// `-1e-10` is reported as [`Error::NegativeRadicand`]; tiny negative values
/// above that floor clamp to zero.
pub fn upper_spectral_cs<R: Real>(g: &Graph, v: usize) -> Result<R> {
    if g.n() < 2 || g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dec = decompose::<R>(g)?;
    upper_spectral_cs_from(&dec, g, v)
}

fn upper_spectral_cs_from<R: Real>(
    dec: &SpectralDecomposition<R>,
    g: &Graph,
    v: usize,
) -> Result<R> {
    let d = R::of_usize(g.degree(v)?);
    let p1 = dec.top_group_weight(v);
    let lam = dec.eigenvalues()[0].abs();
    let radicand = (d - p1 * lam * lam) * (R::one() - p1);
    let floor = -R::of(RADICAND_TOLERANCE);
    if radicand < floor {
        return Err(Error::NegativeRadicand {
            value: radicand.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(p1 * lam + radicand.max(R::zero()).sqrt())
}

/// Degree statistic `α = max(√(Σ d_j² / n), √Δ)`.
///
/// For connected graphs `α ≤ λ₁`, which makes it a certificate-free stand-in
/// for the largest eigenvalue in [`upper_koolen_moulton`].
pub fn alpha<R: Real>(g: &Graph) -> R {
    let n = g.n();
    if n == 0 {
        return R::zero();
    }
    let sum_sq: R = (0..n)
        .map(|v| {
            let d = R::of_usize(g.degree(v).expect("vertex in range"));
            d * d
        })
        .sum();
    let mean_sq = (sum_sq / R::of_usize(n)).sqrt();
    let (_, max_deg) = g.degree_extremes();
    mean_sq.max(R::of_usize(max_deg).sqrt())
}

/// Koolen–Moulton-type upper bound built from degrees and eccentricity only:
///
/// ```text
/// E(v) ≤ wα + √((d - wα²)(1 - w)),    w = 1/(2Δ^{2r})
/// ```
///
/// with `α` as in [`alpha`] and `r` the vertex's eccentricity. No spectral
/// computation is involved.
pub fn upper_koolen_moulton<R: Real>(g: &Graph, v: usize) -> Result<R> {
    if g.n() < 2 || g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let r = g.eccentricity(v)? as i32;
    let (_, max_deg) = g.degree_extremes();
    let dd = R::of_usize(max_deg);
    let w = R::one() / ((R::one() + R::one()) * dd.powi(2 * r));
    let a = alpha::<R>(g);
    let d = R::of_usize(g.degree(v)?);
    let radicand = (d - w * a * a) * (R::one() - w);
    Ok(w * a + radicand.max(R::zero()).sqrt())
}

/// Global bounds on the total energy: `E(G) ≤ Σ√d_i ≤ √(2mn)`.
///
/// Returns the pair `(Σ√d_i, √(2mn))`. The second inequality is tight
/// exactly for regular graphs.
pub fn global_bounds<R: Real>(g: &Graph) -> (R, R) {
    let sum_sqrt: R = (0..g.n())
        .map(|v| R::of_usize(g.degree(v).expect("vertex in range")).sqrt())
        .sum();
    let two_mn = R::of_usize(2 * g.m()) * R::of_usize(g.n());
    (sum_sqrt, two_mn.sqrt())
}

/// Total-energy bounds computed from one part of a bipartition:
/// `(2/√Δ) Σ_{v∈part} √d_v ≤ E(G) ≤ 2 Σ_{v∈part} √d_v`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartEnergyBounds<R> {
    /// Vertices of the part, ascending.
    pub vertices: Vec<usize>,
    pub lower: R,
    pub upper: R,
}

/// Eqbi-style bounds for one labeling `(n₁, n₂)` of the two part sizes:
/// `2(n₂ - 1 + √(m - n₂ + 1))/√Δ ≤ E(G) ≤ 2√(n₁ m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EqbiLabeling<R> {
    pub n1: usize,
    pub n2: usize,
    pub lower: R,
    pub upper: R,
}

/// Global energy bounds specific to bipartite graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteGlobalBounds<R> {
    /// Bounds derived from part 1 of the canonical bipartition.
    pub part1: PartEnergyBounds<R>,
    /// Bounds derived from part 2.
    pub part2: PartEnergyBounds<R>,
    /// Size-based bounds for both labelings of the parts; index 0 puts the
    /// smaller part first. `None` when the graph is disconnected (the lower
    /// bound needs `m ≥ n - 1`) or has no edges.
    pub eqbi: Option<[EqbiLabeling<R>; 2]>,
}

impl<R: Real> BipartiteGlobalBounds<R> {
    /// Largest available lower bound.
    pub fn best_lower(&self) -> R {
        let mut best = self.part1.lower.max(self.part2.lower);
        if let Some(eqbi) = &self.eqbi {
            best = best.max(eqbi[0].lower).max(eqbi[1].lower);
        }
        best
    }

    /// Smallest available upper bound.
    pub fn best_upper(&self) -> R {
        let mut best = self.part1.upper.min(self.part2.upper);
        if let Some(eqbi) = &self.eqbi {
            best = best.min(eqbi[0].upper).min(eqbi[1].upper);
        }
        best
    }
}

/// Computes [`BipartiteGlobalBounds`] for a bipartite graph.
///
/// An edgeless bipartite graph has energy 0 and reports all-zero bounds.
pub fn bipartite_global_bounds<R: Real>(g: &Graph) -> Result<BipartiteGlobalBounds<R>> {
    let (p1, p2) = g.bipartition().ok_or(Error::NotBipartite)?;
    if g.m() == 0 {
        return Ok(BipartiteGlobalBounds {
            part1: PartEnergyBounds {
                vertices: p1,
                lower: R::zero(),
                upper: R::zero(),
            },
            part2: PartEnergyBounds {
                vertices: p2,
                lower: R::zero(),
                upper: R::zero(),
            },
            eqbi: None,
        });
    }
    let (_, max_deg) = g.degree_extremes();
    let sqrt_dd = R::of_usize(max_deg).sqrt();
    let two = R::one() + R::one();
    let part_bounds = |part: Vec<usize>| -> PartEnergyBounds<R> {
        let s: R = part
            .iter()
            .map(|&v| R::of_usize(g.degree(v).expect("vertex in range")).sqrt())
            .sum();
        PartEnergyBounds {
            vertices: part,
            lower: two / sqrt_dd * s,
            upper: two * s,
        }
    };
    let sizes = (p1.len(), p2.len());
    let part1 = part_bounds(p1);
    let part2 = part_bounds(p2);
    let eqbi = if g.is_connected() {
        let m = g.m();
        let labeling = |n1: usize, n2: usize| -> EqbiLabeling<R> {
            // Connected: m >= n1 + n2 - 1, so the radicand is at least n1 > 0.
            let lower = two * (R::of_usize(n2 - 1) + R::of_usize(m + 1 - n2).sqrt()) / sqrt_dd;
            let upper = two * (R::of_usize(n1) * R::of_usize(m)).sqrt();
            EqbiLabeling { n1, n2, lower, upper }
        };
        let (small, large) = if sizes.0 <= sizes.1 {
            (sizes.0, sizes.1)
        } else {
            (sizes.1, sizes.0)
        };
        Some([labeling(small, large), labeling(large, small)])
    } else {
        None
    };
    Ok(BipartiteGlobalBounds { part1, part2, eqbi })
}

/// Whether `v`'s connected component is a star centered at `v`.
///
/// Single vertices count (trivial star), as do both endpoints of an isolated
/// edge. This is exactly the equality case of [`upper_sqrt_degree`].
pub fn is_star_center(g: &Graph, v: usize) -> Result<bool> {
    let (comp, map) = g.component_of(v)?;
    let cn = comp.n();
    if cn == 1 {
        return Ok(true);
    }
    let local = map.iter().position(|&orig| orig == v).expect("v in its component");
    if comp.degree(local)? != cn - 1 {
        return Ok(false);
    }
    Ok((0..cn).all(|u| u == local || comp.degree(u).expect("vertex in range") == 1))
}

/// One named bound in a [`BoundReport`]; `value` is `None` when the bound
/// does not apply to this vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry<R> {
    pub name: &'static str,
    pub value: Option<R>,
}

impl<R> BoundEntry<R> {
    pub fn applicable(&self) -> bool {
        self.value.is_some()
    }
}

/// Every bound this module knows, evaluated at one vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<R> {
    pub vertex: usize,
    pub degree: usize,
    pub energy: R,
    pub lower_bounds: Vec<BoundEntry<R>>,
    pub upper_bounds: Vec<BoundEntry<R>>,
    /// Eccentricity of the vertex; `None` when the graph is disconnected.
    pub eccentricity: Option<usize>,
    /// The degree statistic [`alpha`].
    pub alpha: R,
    /// Spectral weight of the vertex on the top eigenvalue group.
    pub top_group_weight: R,
    /// Lower bound on that weight; `None` when the graph is disconnected or
    /// has no edges.
    pub weight_lower_bound: Option<R>,
}

/// Names of the lower bounds in a [`BoundReport`], in report order.
pub const LOWER_BOUND_NAMES: [&str; 7] = [
    "degree_ratio",
    "sqrt_degree_ratio",
    "fourth_moment",
    "holder_k2_p3",
    "holder_k2_p2",
    "holder_k3_p2",
    "quadrangle_free",
];

/// Names of the upper bounds in a [`BoundReport`], in report order.
pub const UPPER_BOUND_NAMES: [&str; 3] = ["sqrt_degree", "spectral_cs", "koolen_moulton"];

/// Evaluates every applicable bound at vertex `v`.
///
/// Degree-0 vertices have energy 0 and report all bounds as 0 (trivially
/// valid and tight). Bounds that need connectivity are inapplicable on
/// disconnected graphs, and the quadrangle-free bound is inapplicable for
/// vertices on a 4-cycle.
pub fn bound_report<R: Real>(g: &Graph, v: usize) -> Result<BoundReport<R>> {
    let dec = decompose::<R>(g)?;
    bound_report_from(&dec, g, v)
}

/// [`bound_report`] against a decomposition that has already been computed,
/// so reports for every vertex of one graph share a single eigensolve.
pub fn bound_report_from<R: Real>(
    dec: &SpectralDecomposition<R>,
    g: &Graph,
    v: usize,
) -> Result<BoundReport<R>> {
    let d = g.degree(v)?;
    let energy = dec.vertex_energy(v);
    let connected = g.is_connected();
    let eccentricity = if connected { Some(g.eccentricity(v)?) } else { None };
    let a = alpha::<R>(g);
    let top_weight = dec.top_group_weight(v);

    if d == 0 {
        let zeros = |names: &[&'static str]| {
            names
                .iter()
                .map(|&name| BoundEntry {
                    name,
                    value: Some(R::zero()),
                })
                .collect::<Vec<_>>()
        };
        return Ok(BoundReport {
            vertex: v,
            degree: d,
            energy,
            lower_bounds: zeros(&LOWER_BOUND_NAMES),
            upper_bounds: zeros(&UPPER_BOUND_NAMES),
            eccentricity,
            alpha: a,
            top_group_weight: top_weight,
            weight_lower_bound: None,
        });
    }

    let two = R::one() + R::one();
    let three = two + R::one();
    let lower_bounds = vec![
        BoundEntry {
            name: "degree_ratio",
            value: Some(lower_degree_ratio::<R>(g, v)?),
        },
        BoundEntry {
            name: "sqrt_degree_ratio",
            value: Some(lower_sqrt_degree_ratio::<R>(g, v)?),
        },
        BoundEntry {
            name: "fourth_moment",
            value: Some(lower_fourth_moment::<R>(g, v)?),
        },
        BoundEntry {
            name: "holder_k2_p3",
            value: Some(lower_holder_from(dec, g, v, 2, three)?),
        },
        BoundEntry {
            name: "holder_k2_p2",
            value: Some(lower_holder_from(dec, g, v, 2, two)?),
        },
        BoundEntry {
            name: "holder_k3_p2",
            value: Some(lower_holder_from(dec, g, v, 3, two)?),
        },
        BoundEntry {
            name: "quadrangle_free",
            value: lower_quadrangle_free::<R>(g, v)?,
        },
    ];

    let spectral_cs = if connected && g.n() >= 2 {
        Some(upper_spectral_cs_from(dec, g, v)?)
    } else {
        None
    };
    let koolen_moulton = if connected && g.n() >= 2 {
        Some(upper_koolen_moulton::<R>(g, v)?)
    } else {
        None
    };
    let upper_bounds = vec![
        BoundEntry {
            name: "sqrt_degree",
            value: Some(upper_sqrt_degree::<R>(g, v)?),
        },
        BoundEntry {
            name: "spectral_cs",
            value: spectral_cs,
        },
        BoundEntry {
            name: "koolen_moulton",
            value: koolen_moulton,
        },
    ];

    let weight_lower_bound = if connected && g.m() >= 1 {
        Some(top_weight_lower_bound_from(dec, g, v)?)
    } else {
        None
    };

    Ok(BoundReport {
        vertex: v,
        degree: d,
        energy,
        lower_bounds,
        upper_bounds,
        eccentricity,
        alpha: a,
        top_group_weight: top_weight,
        weight_lower_bound,
    })
}
