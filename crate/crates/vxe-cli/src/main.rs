//! Command-line front end for vertex-energy analysis.
//!
//! Each invocation handles one graph (from an edge-list file, a family
//! spec, or an infinite-graph model) and writes one report to stdout in
//! table, JSON, or CSV form. Exit codes separate usage errors (1), input
//! that fails to parse (2), and computations that fail or are unsupported
//! on the given graph (3).

mod output;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use output::{json_document, num, obj, sig12, Sheet};
use vxe::bounds::{self, BoundReport};
use vxe::classify::{self, CriterionConclusion, CriterionOutcome};
use vxe::families::{self, FamilySpec};
use vxe::limits::{self, LimitModel};
use vxe::spectral::{decompose_with_cap, DEFAULT_EIG_CAP};
use vxe::{Error, Graph, SpectralDecomposition};

#[derive(Parser)]
#[command(
    name = "vxe",
    version,
    about = "Vertex energies of finite simple graphs",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Per-vertex energies and the graph total
    Energy {
        /// Edge-list file, or '-' for standard input
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Lower and upper energy bounds per vertex, plus global bounds
    Bounds {
        /// Edge-list file, or '-' for standard input
        #[arg(long)]
        input: String,
        /// Report only this vertex
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Hyper-/hypoenergetic classification and structural criteria
    Classify {
        /// Edge-list file, or '-' for standard input
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Spectral moments of one vertex next to its closed-walk counts
    Moments {
        /// Edge-list file, or '-' for standard input
        #[arg(long)]
        input: String,
        /// Vertex whose moments are listed
        #[arg(long)]
        vertex: usize,
        /// Largest order; every order 0..=K is listed
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Closed-form energies of a named family next to computed values
    Family {
        /// Family spec: complete:N, cycle:N, path:N, star:N, kbip:N1,N2,
        /// hypercube:D, friendship:K, or circulant:N:S1,S2,...
        #[arg(long)]
        spec: String,
        /// Also write the generated graph as an edge list to FILE
        #[arg(long, value_name = "FILE")]
        emit_graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Limiting vertex energy of an infinite model, with optional truncations
    Limit {
        /// Model: line, semiline:I (positions from 1), or tree:D (D >= 3)
        #[arg(long)]
        model: String,
        /// Comma-separated ascending truncation sizes to evaluate
        #[arg(long, value_name = "S1,S2,...")]
        truncate: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Total-energy split across the two parts of a bipartite graph
    Split {
        /// Edge-list file, or '-' for standard input
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// A failed run: exit code plus the message for stderr.
struct Failure {
    code: u8,
    msg: String,
}

fn usage_failure(msg: String) -> Failure {
    Failure { code: 1, msg }
}

fn input_failure(e: Error) -> Failure {
    Failure {
        code: 2,
        msg: e.to_string(),
    }
}

fn compute_failure(e: Error) -> Failure {
    Failure {
        code: 3,
        msg: e.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; only real mistakes exit 1.
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Energy { input, format } => cmd_energy(&input, format),
        Command::Bounds {
            input,
            vertex,
            format,
        } => cmd_bounds(&input, vertex, format),
        Command::Classify { input, format } => cmd_classify(&input, format),
        Command::Moments {
            input,
            vertex,
            k,
            format,
        } => cmd_moments(&input, vertex, k, format),
        Command::Family {
            spec,
            emit_graph,
            format,
        } => cmd_family(&spec, emit_graph.as_deref(), format),
        Command::Limit {
            model,
            truncate,
            format,
        } => cmd_limit(&model, truncate.as_deref(), format),
        Command::Split { input, format } => cmd_split(&input, format),
    }
}

/// Eigensolver size cap: `VXE_EIG_CAP` when set, the library default otherwise.
fn eig_cap() -> Result<usize, Failure> {
    match std::env::var("VXE_EIG_CAP") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => Ok(cap),
            _ => Err(usage_failure(format!(
                "VXE_EIG_CAP must be a positive integer, got '{s}'"
            ))),
        },
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_EIG_CAP),
        Err(e) => Err(usage_failure(format!("VXE_EIG_CAP: {e}"))),
    }
}

fn read_graph(input: &str) -> Result<Graph, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure {
                code: 2,
                msg: format!("reading standard input: {e}"),
            })?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure {
            code: 2,
            msg: format!("reading {input}: {e}"),
        })?
    };
    vxe::parse_edge_list(&text).map_err(input_failure)
}

fn decompose_input(g: &Graph) -> Result<SpectralDecomposition<f64>, Failure> {
    let cap = eig_cap()?;
    decompose_with_cap::<f64>(g, cap).map_err(compute_failure)
}

fn render(sheet: Sheet, format: Format) -> String {
    match format {
        Format::Table => sheet.render_table(),
        Format::Csv => sheet.render_csv(),
        Format::Json => unreachable!("JSON documents are assembled directly"),
    }
}

fn degree_of(g: &Graph, v: usize) -> usize {
    g.degree(v).expect("vertex in range")
}

fn cmd_energy(input: &str, format: Format) -> Result<String, Failure> {
    let g = read_graph(input)?;
    let dec = decompose_input(&g)?;
    let energies = dec.energies();
    if format == Format::Json {
        let vertices = (0..g.n())
            .map(|v| {
                obj([
                    ("id", Value::from(v as u64)),
                    ("degree", Value::from(degree_of(&g, v) as u64)),
                    ("energy", num(energies.per_vertex[v])),
                ])
            })
            .collect();
        let global = obj([("total_energy", num(energies.total))]);
        return Ok(json_document(Some((g.n(), g.m())), vertices, global));
    }
    let mut rows: Vec<Vec<String>> = (0..g.n())
        .map(|v| {
            vec![
                v.to_string(),
                degree_of(&g, v).to_string(),
                sig12(energies.per_vertex[v]),
            ]
        })
        .collect();
    rows.push(vec![
        "total".to_string(),
        String::new(),
        sig12(energies.total),
    ]);
    let sheet = Sheet {
        columns: vec!["vertex", "degree", "energy"],
        rows,
        footers: vec![],
    };
    Ok(render(sheet, format))
}

fn bound_value(report: &BoundReport<f64>, lower: bool, name: &str) -> Option<f64> {
    let entries = if lower {
        &report.lower_bounds
    } else {
        &report.upper_bounds
    };
    entries
        .iter()
        .find(|e| e.name == name)
        .and_then(|e| e.value)
}

fn cmd_bounds(input: &str, vertex: Option<usize>, format: Format) -> Result<String, Failure> {
    let g = read_graph(input)?;
    let dec = decompose_input(&g)?;
    let ids: Vec<usize> = match vertex {
        Some(v) => {
            g.check_vertex(v).map_err(compute_failure)?;
            vec![v]
        }
        None => (0..g.n()).collect(),
    };
    let reports: Vec<BoundReport<f64>> = ids
        .iter()
        .map(|&v| bounds::bound_report_from(&dec, &g, v))
        .collect::<Result<_, _>>()
        .map_err(compute_failure)?;
    let (sum_sqrt_degrees, sqrt_2mn) = bounds::global_bounds::<f64>(&g);
    let alpha = bounds::alpha::<f64>(&g);
    let bipartite = if g.bipartition().is_some() {
        Some(bounds::bipartite_global_bounds::<f64>(&g).map_err(compute_failure)?)
    } else {
        None
    };

    if format == Format::Json {
        let vertices = reports
            .iter()
            .map(|r| {
                let side = |lower: bool, names: &[&'static str]| {
                    obj(names.iter().map(|&name| {
                        let v = bound_value(r, lower, name)
                            .map(num)
                            .unwrap_or(Value::Null);
                        (name, v)
                    }))
                };
                obj([
                    ("id", Value::from(r.vertex as u64)),
                    ("degree", Value::from(r.degree as u64)),
                    ("energy", num(r.energy)),
                    ("lower", side(true, &bounds::LOWER_BOUND_NAMES)),
                    ("upper", side(false, &bounds::UPPER_BOUND_NAMES)),
                    (
                        "eccentricity",
                        r.eccentricity
                            .map(|e| Value::from(e as u64))
                            .unwrap_or(Value::Null),
                    ),
                    ("top_group_weight", num(r.top_group_weight)),
                    (
                        "weight_lower_bound",
                        r.weight_lower_bound.map(num).unwrap_or(Value::Null),
                    ),
                ])
            })
            .collect();
        let bipartite_json = match &bipartite {
            None => Value::Null,
            Some(b) => {
                let part = |p: &bounds::PartEnergyBounds<f64>| {
                    obj([
                        ("size", Value::from(p.vertices.len() as u64)),
                        ("lower", num(p.lower)),
                        ("upper", num(p.upper)),
                    ])
                };
                let eqbi = match &b.eqbi {
                    None => Value::Null,
                    Some(labelings) => Value::Array(
                        labelings
                            .iter()
                            .map(|l| {
                                obj([
                                    ("n1", Value::from(l.n1 as u64)),
                                    ("n2", Value::from(l.n2 as u64)),
                                    ("lower", num(l.lower)),
                                    ("upper", num(l.upper)),
                                ])
                            })
                            .collect(),
                    ),
                };
                obj([
                    ("part1", part(&b.part1)),
                    ("part2", part(&b.part2)),
                    ("eqbi", eqbi),
                    ("best_lower", num(b.best_lower())),
                    ("best_upper", num(b.best_upper())),
                ])
            }
        };
        let global = obj([
            ("alpha", num(alpha)),
            ("sum_sqrt_degrees", num(sum_sqrt_degrees)),
            ("sqrt_2mn", num(sqrt_2mn)),
            ("bipartite", bipartite_json),
        ]);
        return Ok(json_document(Some((g.n(), g.m())), vertices, global));
    }

    let mut columns = vec!["vertex", "degree", "energy"];
    columns.extend_from_slice(&bounds::LOWER_BOUND_NAMES);
    columns.extend_from_slice(&bounds::UPPER_BOUND_NAMES);
    columns.extend_from_slice(&["eccentricity", "top_group_weight", "weight_lower_bound"]);
    let fmt_opt = |v: Option<f64>| v.map(sig12).unwrap_or_default();
    let rows = reports
        .iter()
        .map(|r| {
            let mut row = vec![r.vertex.to_string(), r.degree.to_string(), sig12(r.energy)];
            for name in bounds::LOWER_BOUND_NAMES {
                row.push(fmt_opt(bound_value(r, true, name)));
            }
            for name in bounds::UPPER_BOUND_NAMES {
                row.push(fmt_opt(bound_value(r, false, name)));
            }
            row.push(r.eccentricity.map(|e| e.to_string()).unwrap_or_default());
            row.push(sig12(r.top_group_weight));
            row.push(fmt_opt(r.weight_lower_bound));
            row
        })
        .collect();
    let mut footers = vec![
        format!("alpha: {}", sig12(alpha)),
        format!("sum_sqrt_degrees: {}", sig12(sum_sqrt_degrees)),
        format!("sqrt_2mn: {}", sig12(sqrt_2mn)),
    ];
    match &bipartite {
        None => footers.push("bipartite: no".to_string()),
        Some(b) => {
            let part = |label: &str, p: &bounds::PartEnergyBounds<f64>| {
                format!(
                    "bipartite {label}: size {}, lower {}, upper {}",
                    p.vertices.len(),
                    sig12(p.lower),
                    sig12(p.upper)
                )
            };
            footers.push(part("part1", &b.part1));
            footers.push(part("part2", &b.part2));
            if let Some(labelings) = &b.eqbi {
                for l in labelings {
                    footers.push(format!(
                        "bipartite sizes (n1={}, n2={}): lower {}, upper {}",
                        l.n1,
                        l.n2,
                        sig12(l.lower),
                        sig12(l.upper)
                    ));
                }
            }
            footers.push(format!(
                "bipartite best: lower {}, upper {}",
                sig12(b.best_lower()),
                sig12(b.best_upper())
            ));
        }
    }
    let sheet = Sheet {
        columns,
        rows,
        footers,
    };
    Ok(render(sheet, format))
}

fn conclusion_text(c: &CriterionConclusion) -> String {
    match c {
        CriterionConclusion::CompletelyHyperenergetic => "completely hyperenergetic".to_string(),
        CriterionConclusion::CompletelyNonHyperenergetic => {
            "completely non-hyperenergetic".to_string()
        }
        CriterionConclusion::CompletelyNonHypoenergetic => {
            "completely non-hypoenergetic".to_string()
        }
        CriterionConclusion::HypoenergeticVertices(vs) => {
            let ids: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
            format!("hypoenergetic vertices: {}", ids.join(" "))
        }
        CriterionConclusion::TotalEnergyBelowVertexCount => {
            "total energy below vertex count".to_string()
        }
    }
}

fn criterion_line(c: &CriterionOutcome) -> String {
    format!(
        "criterion {}: {} -> {}",
        c.name,
        c.detail,
        conclusion_text(&c.conclusion)
    )
}

fn cmd_classify(input: &str, format: Format) -> Result<String, Failure> {
    let g = read_graph(input)?;
    let dec = decompose_input(&g)?;
    let energies = dec.energies();
    let gc = classify::classify_energies(&g, &energies.per_vertex);
    if format == Format::Json {
        let vertices = gc
            .vertices
            .iter()
            .map(|c| {
                obj([
                    ("id", Value::from(c.vertex as u64)),
                    ("energy", num(c.energy)),
                    ("hyperenergetic", Value::Bool(c.hyperenergetic)),
                    ("hypoenergetic", Value::Bool(c.hypoenergetic)),
                    ("borderline", Value::Bool(c.borderline)),
                ])
            })
            .collect();
        let criteria = gc
            .satisfied_criteria
            .iter()
            .map(|c| {
                obj([
                    ("name", Value::String(c.name.to_string())),
                    ("detail", Value::String(c.detail.clone())),
                    ("conclusion", Value::String(conclusion_text(&c.conclusion))),
                ])
            })
            .collect();
        let global = obj([
            (
                "completely_hyperenergetic",
                Value::Bool(gc.completely_hyperenergetic),
            ),
            (
                "completely_non_hyperenergetic",
                Value::Bool(gc.completely_non_hyperenergetic),
            ),
            (
                "completely_hypoenergetic",
                Value::Bool(gc.completely_hypoenergetic),
            ),
            (
                "completely_non_hypoenergetic",
                Value::Bool(gc.completely_non_hypoenergetic),
            ),
            ("satisfied_criteria", Value::Array(criteria)),
        ]);
        return Ok(json_document(Some((g.n(), g.m())), vertices, global));
    }
    let rows = gc
        .vertices
        .iter()
        .map(|c| {
            vec![
                c.vertex.to_string(),
                sig12(c.energy),
                c.hyperenergetic.to_string(),
                c.hypoenergetic.to_string(),
                c.borderline.to_string(),
            ]
        })
        .collect();
    let mut footers = vec![
        format!(
            "completely_hyperenergetic: {}",
            gc.completely_hyperenergetic
        ),
        format!(
            "completely_non_hyperenergetic: {}",
            gc.completely_non_hyperenergetic
        ),
        format!("completely_hypoenergetic: {}", gc.completely_hypoenergetic),
        format!(
            "completely_non_hypoenergetic: {}",
            gc.completely_non_hypoenergetic
        ),
    ];
    footers.extend(gc.satisfied_criteria.iter().map(criterion_line));
    let sheet = Sheet {
        columns: vec![
            "vertex",
            "energy",
            "hyperenergetic",
            "hypoenergetic",
            "borderline",
        ],
        rows,
        footers,
    };
    Ok(render(sheet, format))
}

fn cmd_moments(input: &str, vertex: usize, k: u32, format: Format) -> Result<String, Failure> {
    let g = read_graph(input)?;
    g.check_vertex(vertex).map_err(compute_failure)?;
    let dec = decompose_input(&g)?;
    let mut entries: Vec<(u32, u64, f64)> = Vec::with_capacity(k as usize + 1);
    for order in 0..=k {
        let walks = g.closed_walk_count(vertex, order).map_err(compute_failure)?;
        entries.push((order, walks, dec.moment(vertex, order)));
    }
    let max_abs_error = entries
        .iter()
        .map(|&(_, w, s)| (s - w as f64).abs())
        .fold(0.0f64, f64::max);
    if format == Format::Json {
        let moments = entries
            .iter()
            .map(|&(order, walks, moment)| {
                obj([
                    ("k", Value::from(order)),
                    ("walk_count", Value::from(walks)),
                    ("spectral_moment", num(moment)),
                ])
            })
            .collect();
        let vertices = vec![obj([
            ("id", Value::from(vertex as u64)),
            ("moments", Value::Array(moments)),
        ])];
        let global = obj([("max_abs_error", num(max_abs_error))]);
        return Ok(json_document(Some((g.n(), g.m())), vertices, global));
    }
    let rows = entries
        .iter()
        .map(|&(order, walks, moment)| {
            vec![
                order.to_string(),
                walks.to_string(),
                sig12(moment),
                sig12((moment - walks as f64).abs()),
            ]
        })
        .collect();
    let sheet = Sheet {
        columns: vec!["k", "walk_count", "spectral_moment", "abs_error"],
        rows,
        footers: vec![format!("vertex: {vertex}")],
    };
    Ok(render(sheet, format))
}

fn cmd_family(
    spec_str: &str,
    emit_graph: Option<&std::path::Path>,
    format: Format,
) -> Result<String, Failure> {
    let spec = FamilySpec::parse(spec_str).map_err(input_failure)?;
    let g = families::generate(&spec).map_err(compute_failure)?;
    if let Some(path) = emit_graph {
        std::fs::write(path, vxe::write_edge_list(&g)).map_err(|e| Failure {
            code: 3,
            msg: format!("writing {}: {e}", path.display()),
        })?;
    }
    let dec = decompose_input(&g)?;
    let energies = dec.energies();
    let fe = families::closed_form_energies::<f64>(&spec).map_err(compute_failure)?;
    let closed = fe.per_vertex(g.n());
    let mut role_of: Vec<Option<&str>> = vec![None; g.n()];
    for role in &fe.roles {
        for &v in &role.vertices {
            role_of[v] = Some(&role.role);
        }
    }
    let deviation =
        |v: usize| closed.as_ref().map(|c| (c[v] - energies.per_vertex[v]).abs());
    let max_deviation = closed
        .as_ref()
        .map(|c| {
            (0..g.n())
                .map(|v| (c[v] - energies.per_vertex[v]).abs())
                .fold(0.0f64, f64::max)
        });
    if format == Format::Json {
        let vertices = (0..g.n())
            .map(|v| {
                obj([
                    ("id", Value::from(v as u64)),
                    (
                        "role",
                        role_of[v]
                            .map(|r| Value::String(r.to_string()))
                            .unwrap_or(Value::Null),
                    ),
                    (
                        "closed_form",
                        closed
                            .as_ref()
                            .map(|c| num(c[v]))
                            .unwrap_or(Value::Null),
                    ),
                    ("computed", num(energies.per_vertex[v])),
                    (
                        "deviation",
                        deviation(v).map(num).unwrap_or(Value::Null),
                    ),
                ])
            })
            .collect();
        let global = obj([
            ("family", Value::String(spec.to_string())),
            (
                "closed_form_available",
                Value::Bool(fe.closed_form_available),
            ),
            (
                "max_deviation",
                max_deviation.map(num).unwrap_or(Value::Null),
            ),
            ("total_energy", num(energies.total)),
        ]);
        return Ok(json_document(Some((g.n(), g.m())), vertices, global));
    }
    let rows = (0..g.n())
        .map(|v| {
            vec![
                v.to_string(),
                role_of[v].unwrap_or_default().to_string(),
                closed.as_ref().map(|c| sig12(c[v])).unwrap_or_default(),
                sig12(energies.per_vertex[v]),
                deviation(v).map(sig12).unwrap_or_default(),
            ]
        })
        .collect();
    let mut footers = vec![
        format!("family: {spec}"),
        format!("closed_form_available: {}", fe.closed_form_available),
    ];
    if let Some(d) = max_deviation {
        footers.push(format!("max_deviation: {}", sig12(d)));
    }
    footers.push(format!("total_energy: {}", sig12(energies.total)));
    let sheet = Sheet {
        columns: vec!["vertex", "role", "closed_form", "computed", "deviation"],
        rows,
        footers,
    };
    Ok(render(sheet, format))
}

fn parse_truncations(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| Failure {
                code: 2,
                msg: format!("bad truncation size '{t}'"),
            })
        })
        .collect()
}

fn cmd_limit(model_str: &str, truncate: Option<&str>, format: Format) -> Result<String, Failure> {
    let model = LimitModel::parse(model_str).map_err(input_failure)?;
    let closed = limits::limit_energy::<f64>(model).map_err(compute_failure)?;
    let quadrature = match limits::density_quadrature::<f64>(model) {
        Ok(q) => Some(q),
        Err(Error::UnsupportedModel { .. }) => None,
        Err(e) => return Err(compute_failure(e)),
    };
    let truncations: Vec<(usize, f64)> = match truncate {
        None => vec![],
        Some(s) => {
            let sizes = parse_truncations(s)?;
            let cap = eig_cap()?;
            limits::truncation_series_with_cap::<f64>(model, &sizes, cap).map_err(|e| {
                match e {
                    // A bad size schedule is an input problem, not a failed
                    // computation.
                    Error::BadParameters { .. } => input_failure(e),
                    other => compute_failure(other),
                }
            })?
        }
    };
    if format == Format::Json {
        let truncation_values = truncations
            .iter()
            .map(|&(size, energy)| {
                obj([
                    ("size", Value::from(size as u64)),
                    ("energy", num(energy)),
                ])
            })
            .collect();
        let global = obj([
            ("model", Value::String(model.to_string())),
            ("closed_form", num(closed)),
            ("quadrature", quadrature.map(num).unwrap_or(Value::Null)),
            ("truncations", Value::Array(truncation_values)),
        ]);
        return Ok(json_document(None, vec![], global));
    }
    let mut rows = vec![vec!["closed_form".to_string(), sig12(closed)]];
    if let Some(q) = quadrature {
        rows.push(vec!["quadrature".to_string(), sig12(q)]);
    }
    for &(size, energy) in &truncations {
        rows.push(vec![format!("truncation_{size}"), sig12(energy)]);
    }
    let sheet = Sheet {
        columns: vec!["quantity", "value"],
        rows,
        footers: vec![format!("model: {model}")],
    };
    Ok(render(sheet, format))
}

fn cmd_split(input: &str, format: Format) -> Result<String, Failure> {
    let g = read_graph(input)?;
    let (p1, p2) = g
        .bipartition()
        .ok_or(Error::NotBipartite)
        .map_err(compute_failure)?;
    let dec = decompose_input(&g)?;
    let energies = dec.energies();
    let mut part_of = vec![0u8; g.n()];
    for &v in &p1 {
        part_of[v] = 1;
    }
    for &v in &p2 {
        part_of[v] = 2;
    }
    let sum = |part: &[usize]| part.iter().map(|&v| energies.per_vertex[v]).sum::<f64>();
    let (e1, e2) = (sum(&p1), sum(&p2));
    if format == Format::Json {
        let vertices = (0..g.n())
            .map(|v| {
                obj([
                    ("id", Value::from(v as u64)),
                    ("part", Value::from(part_of[v])),
                    ("energy", num(energies.per_vertex[v])),
                ])
            })
            .collect();
        let global = obj([
            ("part1_energy", num(e1)),
            ("part2_energy", num(e2)),
            ("total_energy", num(energies.total)),
        ]);
        return Ok(json_document(Some((g.n(), g.m())), vertices, global));
    }
    let rows = (0..g.n())
        .map(|v| {
            vec![
                v.to_string(),
                part_of[v].to_string(),
                sig12(energies.per_vertex[v]),
            ]
        })
        .collect();
    let sheet = Sheet {
        columns: vec!["vertex", "part", "energy"],
        rows,
        footers: vec![
            format!("part1_energy: {}", sig12(e1)),
            format!("part2_energy: {}", sig12(e2)),
            format!("total_energy: {}", sig12(energies.total)),
        ],
    };
    Ok(render(sheet, format))
}
