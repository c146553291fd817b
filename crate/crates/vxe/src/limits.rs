//! Limiting vertex energies of infinite graph models — the two-sided line,
//! the half-line, and the d-regular tree — with three mutually checking
//! evaluations: exact closed forms, quadrature against the model's spectral
//! density, and truncation experiments on growing finite pieces.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::num::Real;
use crate::spectral::{decompose_with_cap, DEFAULT_EIG_CAP};

/// Maximum recursion depth of the adaptive Simpson integrator.
pub const QUADRATURE_MAX_DEPTH: u32 = 40;
/// Per-panel absolute tolerance of the integrator.
pub const QUADRATURE_PANEL_TOL: f64 = 1e-10;

/// An infinite graph model with a known limiting vertex energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitModel {
    /// The two-sided infinite path; every vertex looks the same.
    Line,
    /// The one-sided infinite path; vertices are indexed from 1 at the end.
    SemiLine(usize),
    /// The infinite tree in which every vertex has degree `d ≥ 3`.
    RegularTree(usize),
}

impl LimitModel {
    /// Parses the CLI form: `line`, `semiline:2`, `tree:3`.
    pub fn parse(s: &str) -> Result<LimitModel> {
        let bad = |reason: String| Error::BadParameters { reason };
        let model = if s == "line" {
            LimitModel::Line
        } else if let Some(rest) = s.strip_prefix("semiline:") {
            let i = rest
                .parse::<usize>()
                .map_err(|_| bad(format!("'{rest}' is not a vertex index")))?;
            LimitModel::SemiLine(i)
        } else if let Some(rest) = s.strip_prefix("tree:") {
            let d = rest
                .parse::<usize>()
                .map_err(|_| bad(format!("'{rest}' is not a degree")))?;
            LimitModel::RegularTree(d)
        } else {
            return Err(bad(format!("unknown limit model '{s}'")));
        };
        model.validate()?;
        Ok(model)
    }

    fn validate(&self) -> Result<()> {
        match *self {
            LimitModel::Line => Ok(()),
            LimitModel::SemiLine(i) if i >= 1 => Ok(()),
            LimitModel::SemiLine(i) => Err(Error::BadParameters {
                reason: format!("half-line vertices are indexed from 1, got {i}"),
            }),
            LimitModel::RegularTree(d) if d >= 3 => Ok(()),
            LimitModel::RegularTree(d) => Err(Error::BadParameters {
                reason: format!("regular tree needs degree at least 3, got {d}"),
            }),
        }
    }
}

impl std::fmt::Display for LimitModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LimitModel::Line => write!(f, "line"),
            LimitModel::SemiLine(i) => write!(f, "semiline:{i}"),
            LimitModel::RegularTree(d) => write!(f, "tree:{d}"),
        }
    }
}

/// Closed-form limiting vertex energy of a model.
///
/// - line: `4/π` at every vertex;
/// - half-line, vertex `i`: `4/π + 4(-1)^i / (π(4i² - 1))` — in particular
///   `8/(3π)` at the end vertex, maximized at `i = 2`;
/// - d-regular tree: `(2d√(d-1) - d(d-2)·arctan(2√(d-1)/(d-2))) / π`.
pub fn limit_energy<R: Real>(model: LimitModel) -> Result<R> {
    model.validate()?;
    let pi = R::PI();
    let four = R::of(4.0);
    Ok(match model {
        LimitModel::Line => four / pi,
        LimitModel::SemiLine(i) => {
            let sign = if i % 2 == 0 { R::one() } else { -R::one() };
            let denom = R::of_usize(4 * i * i - 1);
            four / pi + four * sign / (pi * denom)
        }
        LimitModel::RegularTree(d) => {
            let dd = R::of_usize(d);
            let root = (dd - R::one()).sqrt();
            let two = R::of(2.0);
            (two * dd * root - dd * (dd - two) * (two * root / (dd - two)).atan()) / pi
        }
    })
}

/// The spectral density associated with a limit model: arcsine for the line,
/// semicircle for the end of the half-line, Kesten–McKay for regular trees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensitySpec<R> {
    kind: DensityKind,
    /// The density's support is `[-half_width, half_width]`.
    pub half_width: R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum DensityKind {
    Arcsine,
    Semicircle,
    KestenMcKay(usize),
}

impl<R: Real> DensitySpec<R> {
    /// Pointwise density value; zero outside the support.
    pub fn density(&self, x: R) -> R {
        let pi = R::PI();
        let two = R::of(2.0);
        if x.abs() >= self.half_width {
            return R::zero();
        }
        match self.kind {
            DensityKind::Arcsine => R::one() / (pi * (R::of(4.0) - x * x).sqrt()),
            DensityKind::Semicircle => (R::of(4.0) - x * x).sqrt() / (two * pi),
            DensityKind::KestenMcKay(d) => {
                let dd = R::of_usize(d);
                let c2 = self.half_width * self.half_width;
                dd * (c2 - x * x).sqrt() / (two * pi * (dd * dd - x * x))
            }
        }
    }

    /// Total mass by quadrature; should be 1 to within 1e-9.
    pub fn mass(&self) -> R {
        self.integrate(|_| R::one())
    }

    /// First absolute moment `∫ |x| dμ` by quadrature.
    pub fn abs_moment(&self) -> R {
        self.integrate(|x| x.abs())
    }

    /// Integrates `f` against the density with the substitution `x = c·sinθ`
    /// (`c` the half-width), which removes the inverse-square-root endpoint
    /// singularity of the arcsine case and flattens the others. For
    /// Kesten–McKay the transformed denominator stays at least `(d-2)² ≥ 1`.
    fn integrate<F: Fn(R) -> R>(&self, f: F) -> R {
        let pi = R::PI();
        let two = R::of(2.0);
        let c = self.half_width;
        let g: Box<dyn Fn(R) -> R> = match self.kind {
            DensityKind::Arcsine => Box::new(move |t: R| f(two * t.sin()) / pi),
            DensityKind::Semicircle => Box::new(move |t: R| {
                let cos = t.cos();
                two / pi * f(two * t.sin()) * cos * cos
            }),
            DensityKind::KestenMcKay(d) => Box::new(move |t: R| {
                let dd = R::of_usize(d);
                let sin = t.sin();
                let cos = t.cos();
                dd * c * c * cos * cos / (two * pi * (dd * dd - c * c * sin * sin)) * f(c * sin)
            }),
        };
        let half_pi = pi / two;
        adaptive_simpson(&g, -half_pi, half_pi, R::of(QUADRATURE_PANEL_TOL), QUADRATURE_MAX_DEPTH)
    }
}

/// The spectral density of a model, when one is implemented.
///
/// Interior half-line vertices (`semiline:i` with `i > 1`) have only the
/// closed-form limit; asking for their density is an [`Error::UnsupportedModel`].
pub fn density_for<R: Real>(model: LimitModel) -> Result<DensitySpec<R>> {
    model.validate()?;
    match model {
        LimitModel::Line => Ok(DensitySpec {
            kind: DensityKind::Arcsine,
            half_width: R::of(2.0),
        }),
        LimitModel::SemiLine(1) => Ok(DensitySpec {
            kind: DensityKind::Semicircle,
            half_width: R::of(2.0),
        }),
        LimitModel::SemiLine(i) => Err(Error::UnsupportedModel {
            reason: format!("no spectral density implemented for half-line vertex {i}"),
        }),
        LimitModel::RegularTree(d) => Ok(DensitySpec {
            kind: DensityKind::KestenMcKay(d),
            half_width: R::of(2.0) * (R::of_usize(d) - R::one()).sqrt(),
        }),
    }
}

/// Limiting vertex energy as the first absolute moment of the model's
/// spectral density, by quadrature. Independent check of [`limit_energy`].
pub fn density_quadrature<R: Real>(model: LimitModel) -> Result<R> {
    Ok(density_for::<R>(model)?.abs_moment())
}

fn simpson_panel<R: Real, F: Fn(R) -> R>(f: &F, a: R, fa: R, b: R, fb: R) -> (R, R, R) {
    let half = R::of(0.5);
    let m = (a + b) * half;
    let fm = f(m);
    let s = (b - a) / R::of(6.0) * (fa + R::of(4.0) * fm + fb);
    (m, fm, s)
}

fn simpson_rec<R: Real, F: Fn(R) -> R>(
    f: &F,
    a: R,
    fa: R,
    b: R,
    fb: R,
    m: R,
    fm: R,
    whole: R,
    tol: R,
    depth: u32,
) -> R {
    let (lm, flm, left) = simpson_panel(f, a, fa, m, fm);
    let (rm, frm, right) = simpson_panel(f, m, fm, b, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= R::of(15.0) * tol {
        return left + right + delta / R::of(15.0);
    }
    let half = R::of(0.5);
    simpson_rec(f, a, fa, m, fm, lm, flm, left, tol * half, depth - 1)
        + simpson_rec(f, m, fm, b, fb, rm, frm, right, tol * half, depth - 1)
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
fn adaptive_simpson<R: Real, F: Fn(R) -> R>(f: &F, a: R, b: R, tol: R, max_depth: u32) -> R {
    let fa = f(a);
    let fb = f(b);
    let (m, fm, whole) = simpson_panel(f, a, fa, b, fb);
    simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth)
}

/// Finite ball of radius `r` in the d-regular tree, labeled in breadth-first
/// order from the root (vertex 0). Root and internal vertices have degree
/// `d`; the outermost shell consists of leaves.
pub fn regular_tree_ball(d: usize, r: usize) -> Result<Graph> {
    regular_tree_ball_with_cap(d, r, DEFAULT_EIG_CAP)
}

/// [`regular_tree_ball`] with an explicit size cap in place of
/// [`DEFAULT_EIG_CAP`].
pub fn regular_tree_ball_with_cap(d: usize, r: usize, cap: usize) -> Result<Graph> {
    LimitModel::RegularTree(d).validate()?;
    // n = 1 + d((d-1)^r - 1)/(d-2); computed incrementally to spot cap
    // violations before allocating anything huge.
    let mut n: usize = 1;
    let mut shell: usize = 1;
    for depth in 0..r {
        shell *= if depth == 0 { d } else { d - 1 };
        n = n
            .checked_add(shell)
            .filter(|&n| n <= cap)
            .ok_or(Error::SizeCapExceeded { n: usize::MAX, cap })?;
    }
    let mut g = Graph::new(n);
    let mut next = 1;
    // (vertex, depth) in BFS order; children attached in label order.
    let mut frontier = std::collections::VecDeque::from([(0usize, 0usize)]);
    while let Some((v, depth)) = frontier.pop_front() {
        if depth == r {
            continue;
        }
        let children = if depth == 0 { d } else { d - 1 };
        for _ in 0..children {
            g.add_edge(v, next)?;
            frontier.push_back((next, depth + 1));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Ok(g)
}

/// The finite truncation used for a model at size parameter `s`, and the
/// vertex whose energy tracks the model's limit: the middle of a path on
/// `2s + 1` vertices for the line, vertex `i - 1` of a path on `s` vertices
/// for the half-line, the root of the radius-`s` ball for the tree.
pub fn truncation(model: LimitModel, s: usize) -> Result<(Graph, usize)> {
    truncation_with_cap(model, s, DEFAULT_EIG_CAP)
}

/// [`truncation`] with an explicit size cap in place of [`DEFAULT_EIG_CAP`].
pub fn truncation_with_cap(model: LimitModel, s: usize, cap: usize) -> Result<(Graph, usize)> {
    model.validate()?;
    match model {
        LimitModel::Line => {
            let n = 2 * s + 1;
            if n > cap {
                return Err(Error::SizeCapExceeded { n, cap });
            }
            Ok((path(n), s))
        }
        LimitModel::SemiLine(i) => {
            if s < i {
                return Err(Error::BadParameters {
                    reason: format!("truncation size {s} does not contain vertex {i}"),
                });
            }
            if s > cap {
                return Err(Error::SizeCapExceeded { n: s, cap });
            }
            Ok((path(s), i - 1))
        }
        LimitModel::RegularTree(d) => Ok((regular_tree_ball_with_cap(d, s, cap)?, 0)),
    }
}

fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
}

/// Energies of the tracked vertex along a strictly ascending size schedule.
///
/// Each entry is `(size, energy)`; the energies approach
/// [`limit_energy`]`(model)` as the sizes grow.
pub fn truncation_series<R: Real>(
    model: LimitModel,
    sizes: &[usize],
) -> Result<Vec<(usize, R)>> {
    truncation_series_with_cap(model, sizes, DEFAULT_EIG_CAP)
}

/// [`truncation_series`] with an explicit size cap in place of
/// [`DEFAULT_EIG_CAP`].
pub fn truncation_series_with_cap<R: Real>(
    model: LimitModel,
    sizes: &[usize],
    cap: usize,
) -> Result<Vec<(usize, R)>> {
    for w in sizes.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::BadParameters {
                reason: format!("sizes must be strictly ascending, got {} then {}", w[0], w[1]),
            });
        }
    }
    sizes
        .iter()
        .map(|&s| {
            let (g, v) = truncation_with_cap(model, s, cap)?;
            let dec = decompose_with_cap::<R>(&g, cap)?;
            Ok((s, dec.vertex_energy(v)))
        })
        .collect()
}
