//! Generators for named graph families and their closed-form vertex
//! energies. The closed forms serve as analytic oracles for the spectral
//! machinery: for every family except circulants the per-vertex energy is
//! known exactly, so the numerically computed values can be checked against
//! finite formulas (trig sums at worst).
//!
//! Canonical labelings: star and friendship graphs put the hub at vertex 0
//! (friendship pairs are `(2i-1, 2i)`); path vertices run 0 to n-1 along the
//! path; complete bipartite parts are `0..n1` and `n1..n1+n2`; hypercube
//! vertices are bitmasks joined when they differ in exactly one bit;
//! circulant vertex `i` is adjacent to `i ± s (mod n)` for each offset `s`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::num::Real;

/// Largest accepted hypercube dimension (2^16 vertices).
pub const MAX_HYPERCUBE_DIM: usize = 16;

/// A parsed family description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Complete graph on `n ≥ 1` vertices.
    Complete(usize),
    /// Cycle on `n ≥ 3` vertices.
    Cycle(usize),
    /// Path on `n ≥ 1` vertices.
    Path(usize),
    /// Star on `n ≥ 1` vertices (one center, `n - 1` leaves).
    Star(usize),
    /// Complete bipartite graph with part sizes `n1, n2 ≥ 1`.
    CompleteBipartite(usize, usize),
    /// Hypercube of the given dimension (`2^dim` vertices).
    Hypercube(usize),
    /// `k ≥ 1` triangles sharing one hub vertex (`2k + 1` vertices).
    Friendship(usize),
    /// Circulant graph on `n` vertices with connection offsets `S`.
    Circulant(usize, Vec<usize>),
}

impl FamilySpec {
    /// Parses the CLI form: `complete:4`, `cycle:6`, `path:5`, `star:5`,
    /// `kbip:2,3`, `hypercube:3`, `friendship:2`, `circulant:17:1,4`.
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let bad = |reason: String| Error::BadParameters { reason };
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("family spec '{s}' has no ':' separator")))?;
        let int = |t: &str| -> Result<usize> {
            t.trim()
                .parse::<usize>()
                .map_err(|_| bad(format!("'{t}' is not a nonnegative integer")))
        };
        let spec = match name {
            "complete" => FamilySpec::Complete(int(rest)?),
            "cycle" => FamilySpec::Cycle(int(rest)?),
            "path" => FamilySpec::Path(int(rest)?),
            "star" => FamilySpec::Star(int(rest)?),
            "kbip" => {
                let (a, b) = rest
                    .split_once(',')
                    .ok_or_else(|| bad(format!("kbip needs two sizes, got '{rest}'")))?;
                FamilySpec::CompleteBipartite(int(a)?, int(b)?)
            }
            "hypercube" => FamilySpec::Hypercube(int(rest)?),
            "friendship" => FamilySpec::Friendship(int(rest)?),
            "circulant" => {
                let (n, offsets) = rest
                    .split_once(':')
                    .ok_or_else(|| bad(format!("circulant needs n:offsets, got '{rest}'")))?;
                let s: Result<Vec<usize>> = offsets.split(',').map(|t| int(t)).collect();
                FamilySpec::Circulant(int(n)?, s?)
            }
            _ => return Err(bad(format!("unknown family '{name}'"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let bad = |reason: String| Err(Error::BadParameters { reason });
        match self {
            FamilySpec::Complete(n) | FamilySpec::Path(n) | FamilySpec::Star(n) => {
                if *n == 0 {
                    return bad("family needs at least one vertex".to_owned());
                }
            }
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return bad(format!("cycle needs at least 3 vertices, got {n}"));
                }
            }
            FamilySpec::CompleteBipartite(n1, n2) => {
                if *n1 == 0 || *n2 == 0 {
                    return bad(format!("part sizes must be positive, got {n1}, {n2}"));
                }
            }
            FamilySpec::Hypercube(dim) => {
                if *dim > MAX_HYPERCUBE_DIM {
                    return bad(format!("hypercube dimension {dim} exceeds {MAX_HYPERCUBE_DIM}"));
                }
            }
            FamilySpec::Friendship(k) => {
                if *k == 0 {
                    return bad("friendship graph needs at least one triangle".to_owned());
                }
            }
            FamilySpec::Circulant(n, s) => {
                if *n == 0 {
                    return bad("circulant needs at least one vertex".to_owned());
                }
                if s.is_empty() {
                    return bad("circulant needs a nonempty offset set".to_owned());
                }
                for w in s.windows(2) {
                    if w[0] >= w[1] {
                        return bad(format!(
                            "offsets must be strictly increasing, got {} then {}",
                            w[0], w[1]
                        ));
                    }
                }
                let top = *s.last().expect("nonempty");
                if s[0] == 0 || top > n / 2 {
                    return bad(format!(
                        "offsets must lie in 1..={} for n = {n}",
                        n / 2
                    ));
                }
            }
        }
        Ok(())
    }

    /// Number of vertices of the generated graph.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Complete(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Path(n)
            | FamilySpec::Star(n)
            | FamilySpec::Circulant(n, _) => *n,
            FamilySpec::CompleteBipartite(n1, n2) => n1 + n2,
            FamilySpec::Hypercube(dim) => 1usize << dim,
            FamilySpec::Friendship(k) => 2 * k + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::CompleteBipartite(n1, n2) => write!(f, "kbip:{n1},{n2}"),
            FamilySpec::Hypercube(dim) => write!(f, "hypercube:{dim}"),
            FamilySpec::Friendship(k) => write!(f, "friendship:{k}"),
            FamilySpec::Circulant(n, s) => {
                write!(f, "circulant:{n}:")?;
                for (i, v) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Builds the canonical graph for a family spec.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut g = Graph::new(spec.vertex_count());
    match spec {
        FamilySpec::Complete(n) => {
            for u in 0..*n {
                for v in (u + 1)..*n {
                    g.add_edge(u, v)?;
                }
            }
        }
        FamilySpec::Cycle(n) => {
            for v in 0..*n {
                g.add_edge(v, (v + 1) % n)?;
            }
        }
        FamilySpec::Path(n) => {
            for v in 1..*n {
                g.add_edge(v - 1, v)?;
            }
        }
        FamilySpec::Star(n) => {
            for v in 1..*n {
                g.add_edge(0, v)?;
            }
        }
        FamilySpec::CompleteBipartite(n1, n2) => {
            for u in 0..*n1 {
                for v in *n1..(n1 + n2) {
                    g.add_edge(u, v)?;
                }
            }
        }
        FamilySpec::Hypercube(dim) => {
            for v in 0..(1usize << dim) {
                for bit in 0..*dim {
                    let u = v ^ (1 << bit);
                    if u > v {
                        g.add_edge(v, u)?;
                    }
                }
            }
        }
        FamilySpec::Friendship(k) => {
            for i in 1..=*k {
                g.add_edge(0, 2 * i - 1)?;
                g.add_edge(0, 2 * i)?;
                g.add_edge(2 * i - 1, 2 * i)?;
            }
        }
        FamilySpec::Circulant(n, s) => {
            for v in 0..*n {
                for &off in s {
                    g.add_edge(v, (v + off) % n)?;
                }
            }
        }
    }
    Ok(g)
}

/// One orbit of vertices sharing a closed-form energy.
#[derive(Debug, Clone, PartialEq)]
pub struct RoleEnergy<R> {
    pub role: String,
    /// Vertex ids with this energy, ascending.
    pub vertices: Vec<usize>,
    pub energy: R,
}

/// Closed-form energies for a family instance. Roles partition the vertex
/// set when a closed form exists.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyEnergies<R> {
    pub roles: Vec<RoleEnergy<R>>,
    /// False only for circulants, which have no closed form here; their
    /// role list is empty and energies must come from the spectral module.
    pub closed_form_available: bool,
}

impl<R: Real> FamilyEnergies<R> {
    /// Expands roles into a per-vertex vector of length `n`, or `None` when
    /// no closed form is available.
    pub fn per_vertex(&self, n: usize) -> Option<Vec<R>> {
        if !self.closed_form_available {
            return None;
        }
        let mut out = vec![R::zero(); n];
        for role in &self.roles {
            for &v in &role.vertices {
                out[v] = role.energy;
            }
        }
        Some(out)
    }
}

fn single_role<R: Real>(name: &str, n: usize, energy: R) -> FamilyEnergies<R> {
    FamilyEnergies {
        roles: vec![RoleEnergy {
            role: name.to_owned(),
            vertices: (0..n).collect(),
            energy,
        }],
        closed_form_available: true,
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    // n ≤ 16 here, far from overflow.
    let mut acc: u64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u64 / (i as u64 + 1);
    }
    acc
}

/// Evaluates the known closed-form vertex energies of a family.
///
/// Per-family values (with `v` ranging over the canonical labeling):
///
/// - complete graph: `2(n-1)/n` at every vertex;
/// - cycle: `4·cos(π/n)/(n·sin(π/n))` when `n ≡ 0 (mod 4)`,
///   `4/(n·sin(π/n))` when `n ≡ 2 (mod 4)`, `2/(n·sin(π/2n))` for odd `n`;
/// - path, vertex id `t`: `(4/(n+1)) Σ_{j=1}^n |cos(jπ/(n+1))|·sin²((t+1)jπ/(n+1))`;
/// - star: `√(n-1)` at the center, `1/√(n-1)` at each leaf;
/// - complete bipartite: `√(n2/n1)` on the first part, `√(n1/n2)` on the second;
/// - hypercube: `2⌈dim/2⌉·C(dim,⌈dim/2⌉)/2^dim` at every vertex;
/// - friendship: `4k/√(8k+1)` at the hub,
///   `(1 + 4k + (2k-1)√(8k+1))/(2k√(8k+1))` elsewhere.
///
/// Circulants have no closed form: the result has an empty role list and
/// `closed_form_available == false`.
pub fn closed_form_energies<R: Real>(spec: &FamilySpec) -> Result<FamilyEnergies<R>> {
    spec.validate()?;
    let pi = R::PI();
    let two = R::one() + R::one();
    let four = two + two;
    Ok(match spec {
        FamilySpec::Complete(n) => {
            let nn = R::of_usize(*n);
            single_role("all", *n, two * (nn - R::one()) / nn)
        }
        FamilySpec::Cycle(n) => {
            let nn = R::of_usize(*n);
            let e = if n % 4 == 0 {
                four * (pi / nn).cos() / (nn * (pi / nn).sin())
            } else if n % 2 == 0 {
                four / (nn * (pi / nn).sin())
            } else {
                two / (nn * (pi / (two * nn)).sin())
            };
            single_role("all", *n, e)
        }
        FamilySpec::Path(n) => {
            let np1 = R::of_usize(n + 1);
            let roles = (0..*n)
                .map(|t| {
                    let i = R::of_usize(t + 1);
                    let sum: R = (1..=*n)
                        .map(|j| {
                            let j = R::of_usize(j);
                            let c = (j * pi / np1).cos().abs();
                            let s = (i * j * pi / np1).sin();
                            c * s * s
                        })
                        .sum();
                    RoleEnergy {
                        role: format!("position_{t}"),
                        vertices: vec![t],
                        energy: four / np1 * sum,
                    }
                })
                .collect();
            FamilyEnergies {
                roles,
                closed_form_available: true,
            }
        }
        FamilySpec::Star(n) => {
            let leaves = R::of_usize(n - 1);
            let mut roles = vec![RoleEnergy {
                role: "center".to_owned(),
                vertices: vec![0],
                energy: leaves.sqrt(),
            }];
            if *n > 1 {
                roles.push(RoleEnergy {
                    role: "leaf".to_owned(),
                    vertices: (1..*n).collect(),
                    energy: R::one() / leaves.sqrt(),
                });
            }
            FamilyEnergies {
                roles,
                closed_form_available: true,
            }
        }
        FamilySpec::CompleteBipartite(n1, n2) => {
            let a = R::of_usize(*n1);
            let b = R::of_usize(*n2);
            FamilyEnergies {
                roles: vec![
                    RoleEnergy {
                        role: "part_1".to_owned(),
                        vertices: (0..*n1).collect(),
                        energy: (b / a).sqrt(),
                    },
                    RoleEnergy {
                        role: "part_2".to_owned(),
                        vertices: (*n1..n1 + n2).collect(),
                        energy: (a / b).sqrt(),
                    },
                ],
                closed_form_available: true,
            }
        }
        FamilySpec::Hypercube(dim) => {
            let half_up = dim.div_ceil(2);
            let total = two * R::of_usize(half_up) * R::of(binomial(*dim, half_up) as f64);
            let n = 1usize << dim;
            single_role("all", n, total / R::of_usize(n))
        }
        FamilySpec::Friendship(k) => {
            let kk = R::of_usize(*k);
            let root = (R::of(8.0) * kk + R::one()).sqrt();
            let hub = four * kk / root;
            let periph =
                (R::one() + four * kk + (two * kk - R::one()) * root) / (two * kk * root);
            FamilyEnergies {
                roles: vec![
                    RoleEnergy {
                        role: "hub".to_owned(),
                        vertices: vec![0],
                        energy: hub,
                    },
                    RoleEnergy {
                        role: "peripheral".to_owned(),
                        vertices: (1..=2 * k).collect(),
                        energy: periph,
                    },
                ],
                closed_form_available: true,
            }
        }
        FamilySpec::Circulant(_, _) => FamilyEnergies {
            roles: Vec::new(),
            closed_form_available: false,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::all_vertex_energies;

    fn check_oracle(spec: &FamilySpec, tol: f64) {
        let g = generate(spec).unwrap();
        let closed: FamilyEnergies<f64> = closed_form_energies(spec).unwrap();
        let per = closed.per_vertex(g.n()).expect("closed form exists");
        let spectral = all_vertex_energies::<f64>(&g).unwrap().per_vertex;
        for v in 0..g.n() {
            assert!(
                (per[v] - spectral[v]).abs() < tol,
                "{spec}: vertex {v} closed {} vs spectral {}",
                per[v],
                spectral[v]
            );
        }
    }

    #[test]
    fn generated_shapes() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let q3 = generate(&FamilySpec::Hypercube(3)).unwrap();
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v).unwrap() == 3));
        let f2 = generate(&FamilySpec::Friendship(2)).unwrap();
        assert_eq!((f2.n(), f2.m()), (5, 6));
        assert_eq!(f2.degree(0).unwrap(), 4);
        assert!(f2.has_edge(1, 2) && f2.has_edge(3, 4));
        let c = generate(&FamilySpec::Circulant(17, vec![1, 4])).unwrap();
        assert_eq!((c.n(), c.m()), (17, 34));
        assert!((0..17).all(|v| c.degree(v).unwrap() == 4));
        let p1 = generate(&FamilySpec::Path(1)).unwrap();
        assert_eq!((p1.n(), p1.m()), (1, 0));
        // Offset n/2 contributes a perfect matching, not doubled edges.
        let c42 = generate(&FamilySpec::Circulant(4, vec![2])).unwrap();
        assert_eq!(c42.m(), 2);
    }

    #[test]
    fn parse_round_trips_and_rejections() {
        for s in [
            "complete:4",
            "cycle:6",
            "path:5",
            "star:5",
            "kbip:2,3",
            "hypercube:3",
            "friendship:2",
            "circulant:17:1,4",
        ] {
            let spec = FamilySpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
        }
        for s in [
            "cycle:2",
            "kbip:0,3",
            "kbip:3",
            "circulant:17:9",
            "circulant:17:0",
            "circulant:17:4,1",
            "circulant:17:",
            "hypercube:17",
            "complete:0",
            "pentagon:5",
            "complete:x",
            "complete",
        ] {
            assert!(FamilySpec::parse(s).is_err(), "{s} should be rejected");
        }
    }

    #[test]
    fn closed_forms_match_known_values() {
        let k4: FamilyEnergies<f64> = closed_form_energies(&FamilySpec::Complete(4)).unwrap();
        assert!((k4.roles[0].energy - 1.5).abs() < 1e-15);

        // F1 is the triangle: both roles must agree with 2(3-1)/3.
        let f1: FamilyEnergies<f64> = closed_form_energies(&FamilySpec::Friendship(1)).unwrap();
        for r in &f1.roles {
            assert!((r.energy - 4.0 / 3.0).abs() < 1e-12, "{}", r.role);
        }

        let kb: FamilyEnergies<f64> =
            closed_form_energies(&FamilySpec::CompleteBipartite(2, 3)).unwrap();
        assert!((kb.roles[0].energy - (1.5f64).sqrt()).abs() < 1e-12);
        assert!((kb.roles[1].energy - (2.0f64 / 3.0).sqrt()).abs() < 1e-12);

        // Cycle congruence cases: C4 → 1, C6 → 4/3, C3 agrees with K3.
        let c4: FamilyEnergies<f64> = closed_form_energies(&FamilySpec::Cycle(4)).unwrap();
        assert!((c4.roles[0].energy - 1.0).abs() < 1e-10);
        let c6: FamilyEnergies<f64> = closed_form_energies(&FamilySpec::Cycle(6)).unwrap();
        assert!((c6.roles[0].energy - 4.0 / 3.0).abs() < 1e-10);
        let c3: FamilyEnergies<f64> = closed_form_energies(&FamilySpec::Cycle(3)).unwrap();
        assert!((c3.roles[0].energy - 4.0 / 3.0).abs() < 1e-12);

        // Q2 = C4 forces per-vertex 1; Q3 and Q4 both give 1.5.
        for (dim, want) in [(2usize, 1.0f64), (3, 1.5), (4, 1.5)] {
            let q: FamilyEnergies<f64> = closed_form_energies(&FamilySpec::Hypercube(dim)).unwrap();
            assert!((q.roles[0].energy - want).abs() < 1e-12, "dim {dim}");
        }

        let s5: FamilyEnergies<f64> = closed_form_energies(&FamilySpec::Star(5)).unwrap();
        assert!((s5.roles[0].energy - 2.0).abs() < 1e-15);
        assert!((s5.roles[1].energy - 0.5).abs() < 1e-15);

        // Path on two vertices is a single edge: both endpoints energy 1.
        let p2: FamilyEnergies<f64> = closed_form_energies(&FamilySpec::Path(2)).unwrap();
        for r in &p2.roles {
            assert!((r.energy - 1.0).abs() < 1e-12);
        }

        let circ: FamilyEnergies<f64> =
            closed_form_energies(&FamilySpec::Circulant(17, vec![1, 4])).unwrap();
        assert!(!circ.closed_form_available);
        assert!(circ.roles.is_empty());
    }

    #[test]
    fn closed_forms_agree_with_spectra() {
        for spec in [
            FamilySpec::Complete(7),
            FamilySpec::Cycle(7),
            FamilySpec::Cycle(8),
            FamilySpec::Cycle(10),
            FamilySpec::Path(5),
            FamilySpec::Path(6),
            FamilySpec::Star(9),
            FamilySpec::CompleteBipartite(3, 5),
            FamilySpec::Hypercube(4),
            FamilySpec::Friendship(3),
        ] {
            check_oracle(&spec, 1e-8);
        }
    }

    #[test]
    fn roles_partition_vertices() {
        for spec in [
            FamilySpec::Path(6),
            FamilySpec::Star(6),
            FamilySpec::CompleteBipartite(2, 4),
            FamilySpec::Friendship(2),
            FamilySpec::Hypercube(3),
        ] {
            let n = spec.vertex_count();
            let fe: FamilyEnergies<f64> = closed_form_energies(&spec).unwrap();
            let mut seen = vec![0u32; n];
            for r in &fe.roles {
                assert!(r.energy >= 0.0);
                for &v in &r.vertices {
                    seen[v] += 1;
                }
            }
            assert!(seen.iter().all(|&c| c == 1), "{spec}");
        }
    }

    #[test]
    fn cycle_energy_approaches_the_line_limit() {
        // Per-vertex cycle energy tends to 4/π; the closed form alone makes
        // this checkable at sizes far beyond any eigensolve.
        let c: FamilyEnergies<f64> = closed_form_energies(&FamilySpec::Cycle(2000)).unwrap();
        let limit = 4.0 / std::f64::consts::PI;
        assert!((c.roles[0].energy - limit).abs() < 2e-3);
    }

    #[test]
    fn circulant_vertices_clear_the_two_offset_floor() {
        // With two offsets every vertex energy stays above √(2/6).
        let g = generate(&FamilySpec::Circulant(17, vec![1, 4])).unwrap();
        let energies = all_vertex_energies::<f64>(&g).unwrap().per_vertex;
        let floor = (1.0f64 / 3.0).sqrt();
        for (v, &e) in energies.iter().enumerate() {
            assert!(e > floor, "vertex {v}: {e} vs floor {floor}");
        }
    }
}
