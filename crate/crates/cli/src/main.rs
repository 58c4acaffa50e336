//! `polysurf`: build, check and export polyhedral surfaces.
//!
//! Exit codes: 0 success, 1 the answer is "no" (invalid surface, obstruction
//! found, not isomorphic), 2 usage, parse or IO error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polysurf::constructions::{
    density_family, density_report, realize_comb, realize_hypercube, realize_k35, realize_k44, realize_planar_flat,
    realize_subdivision_cylinder, ConstructionResult,
};
use polysurf::graphs::{self, density_stats, obstruction_scan, parse_graph, write_graph};
use polysurf::io::{export_obj, export_off, parse_surface, write_surface};
use polysurf::surface::ValidationOptions;
use polysurf::{Graph, Mode, Surface};

#[derive(Parser)]
#[command(name = "polysurf", version, about = "Exact polyhedral surfaces realizing graphs")]
struct Cli {
    /// Seed for the randomized graph generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Report::Text)]
    report: Report,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Off,
    Obj,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph in the text format.
    Graph {
        #[command(subcommand)]
        kind: GraphKind,
        /// Output file; stdout if omitted.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run a construction and write the surface file.
    Realize {
        #[command(subcommand)]
        method: Method,
        /// Output file; stdout if omitted.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check a surface file against the contact model.
    Verify {
        surface: PathBuf,
        /// Require strictly convex polygons, whatever the file says.
        #[arg(long, conflicts_with = "general")]
        convex: bool,
        /// Allow nonconvex simple polygons, whatever the file says.
        #[arg(long)]
        general: bool,
        /// Also require every side to be shared.
        #[arg(long)]
        closed: bool,
    },
    /// Print the adjacency graph of a valid surface.
    Adjacency { surface: PathBuf },
    /// Check whether a surface realizes a graph.
    Iso { surface: PathBuf, graph: PathBuf },
    /// Scan a graph for obstructions to convex realizability.
    Obstructions { graph: PathBuf },
    /// Edge-count statistics of a graph.
    Stats { graph: PathBuf },
    /// Export a surface as an OFF or OBJ mesh (lossy).
    Export {
        surface: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Off)]
        format: Format,
        /// Decimal digits per coordinate.
        #[arg(long, default_value_t = 12)]
        digits: usize,
        /// Output file; stdout if omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GraphKind {
    Complete { n: usize },
    Bipartite { a: usize, b: usize },
    Hypercube { d: u32 },
    Path { n: usize },
    Cycle { n: usize },
    Petersen,
    /// Subdivide every edge of the graph in a file `k` times.
    Subdivide { graph: PathBuf, k: usize },
    /// Random 3-tree on `n` vertices (uses `--seed`).
    ThreeTree { n: usize },
    TripleStacked,
    /// Random planar graph (uses `--seed`).
    Planar { n: usize },
    /// Erdos-Renyi graph G(n, p) (uses `--seed`).
    Gnp { n: usize, p: f64 },
}

#[derive(Subcommand)]
enum Method {
    Comb { graph: PathBuf },
    Planar { graph: PathBuf },
    Cylinder {
        graph: PathBuf,
        /// Subdivision count.
        #[arg(short, long, default_value_t = 1)]
        k: usize,
    },
    K44,
    K35,
    Hypercube { d: u32 },
    Density { ell: usize },
}

/// A failure that maps to exit code 1 rather than 2.
struct Negative;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Negative)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_surface(path: &Path) -> Result<Surface> {
    parse_surface(&read(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn report(format: Report, text: String, value: Value) {
    match format {
        Report::Text => println!("{text}"),
        Report::Json => println!("{value}"),
    }
}

fn run(cli: &Cli) -> Result<Result<(), Negative>> {
    match &cli.command {
        Command::Graph { kind, out } => {
            let g = build_graph(kind, cli.seed)?;
            emit(out.as_deref(), &write_graph(&g))?;
        }
        Command::Realize { method, out } => {
            let (name, result) = realize(method)?;
            emit(out.as_deref(), &write_surface(&result.surface))?;
            let s = &result.stats;
            let text = format!(
                "{name}: {} polygons, at most {} corners, coordinates up to {} bits",
                s.polygons, s.max_corners, s.max_coordinate_bits
            );
            let mut value = json!({ "method": name, "stats": s });
            if let Method::Density { ell } = method {
                value["density"] = json!(density_report(*ell, &result));
            }
            // With the surface on stdout, the stats go to stderr.
            match (out, cli.report) {
                (Some(_), format) => report(format, text, value),
                (None, Report::Text) => eprintln!("{text}"),
                (None, Report::Json) => eprintln!("{value}"),
            }
        }
        Command::Verify { surface, convex, general, closed } => {
            let mut s = load_surface(surface)?;
            if *convex || *general {
                let mode = if *convex { Mode::Convex } else { Mode::General };
                s = Surface::new(s.polygons().to_vec(), mode)?;
            }
            let r = s.validate_with(&ValidationOptions { require_closed: *closed });
            let violations: Vec<String> = r.violations.iter().map(|v| v.to_string()).collect();
            let text = if r.valid {
                format!("valid: {} polygons, {} adjacencies", s.len(), r.adjacency.m())
            } else {
                format!("invalid: {} violations\n{}", violations.len(), violations.join("\n"))
            };
            let value = json!({
                "valid": r.valid,
                "mode": s.mode().to_string(),
                "polygons": s.len(),
                "adjacencies": r.adjacency.m(),
                "violations": violations,
            });
            report(cli.report, text, value);
            if !r.valid {
                return Ok(Err(Negative));
            }
        }
        Command::Adjacency { surface } => {
            let s = load_surface(surface)?;
            match s.adjacency_graph() {
                Ok(g) => emit(None, &write_graph(&g))?,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(Err(Negative));
                }
            }
        }
        Command::Iso { surface, graph } => {
            let s = load_surface(surface)?;
            let g = load_graph(graph)?;
            let realization = match s.realizes(&g) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(Err(Negative));
                }
            };
            let map: Option<Vec<u32>> = realization.as_ref().map(|r| r.vertex_map.iter().map(|id| id.0).collect());
            let text = match &map {
                Some(m) => format!("isomorphic; vertex -> polygon: {m:?}"),
                None => "not isomorphic".to_string(),
            };
            report(cli.report, text, json!({ "isomorphic": map.is_some(), "vertex_map": map }));
            if map.is_none() {
                return Ok(Err(Negative));
            }
        }
        Command::Obstructions { graph } => {
            let g = load_graph(graph)?;
            let found = obstruction_scan(&g);
            let text = if found.is_empty() {
                "no obstructions found".to_string()
            } else {
                found.iter().map(|o| format!("{}: {:?}", o.kind, o.witness)).collect::<Vec<_>>().join("\n")
            };
            let value = json!(found
                .iter()
                .map(|o| json!({ "kind": o.kind.to_string(), "witness": o.witness }))
                .collect::<Vec<_>>());
            report(cli.report, text, value);
            if !found.is_empty() {
                return Ok(Err(Negative));
            }
        }
        Command::Stats { graph } => {
            let d = density_stats(&load_graph(graph)?);
            let text = format!(
                "n {} m {} average degree {:.4} n^(9/5) {:.1} hypercube edges {}",
                d.n, d.m, d.avg_degree, d.kst_upper, d.hypercube_lower_example
            );
            report(cli.report, text, json!(d));
        }
        Command::Export { surface, format, digits, out } => {
            let s = load_surface(surface)?;
            let (text, stats) = match format {
                Format::Off => export_off(&s, *digits),
                Format::Obj => export_obj(&s, *digits),
            };
            emit(out.as_deref(), &text)?;
            if out.is_some() {
                report(
                    cli.report,
                    format!("{} vertices, {} faces", stats.vertices, stats.faces),
                    json!({ "vertices": stats.vertices, "faces": stats.faces }),
                );
            }
        }
    }
    Ok(Ok(()))
}

fn build_graph(kind: &GraphKind, seed: u64) -> Result<Graph> {
    Ok(match kind {
        GraphKind::Complete { n } => graphs::complete(*n),
        GraphKind::Bipartite { a, b } => graphs::complete_bipartite(*a, *b),
        GraphKind::Hypercube { d } => {
            if *d > 20 {
                bail!("hypercube dimension {d} is too large");
            }
            graphs::hypercube(*d)
        }
        GraphKind::Path { n } => graphs::path(*n),
        GraphKind::Cycle { n } => graphs::cycle(*n),
        GraphKind::Petersen => graphs::petersen(),
        GraphKind::Subdivide { graph, k } => graphs::subdivide_graph(&load_graph(graph)?, *k)?,
        GraphKind::ThreeTree { n } => graphs::random_three_tree(*n, seed)?,
        GraphKind::TripleStacked => graphs::triple_stacked_triangle(),
        GraphKind::Planar { n } => graphs::random_planar(*n, seed),
        GraphKind::Gnp { n, p } => {
            if !(0.0..=1.0).contains(p) {
                bail!("edge probability {p} is not in [0, 1]");
            }
            graphs::gnp(*n, *p, seed)
        }
    })
}

fn realize(method: &Method) -> Result<(&'static str, ConstructionResult)> {
    Ok(match method {
        Method::Comb { graph } => ("comb", realize_comb(&load_graph(graph)?)?),
        Method::Planar { graph } => ("planar", realize_planar_flat(&load_graph(graph)?)?),
        Method::Cylinder { graph, k } => ("cylinder", realize_subdivision_cylinder(&load_graph(graph)?, *k)?),
        Method::K44 => ("k44", realize_k44()?),
        Method::K35 => ("k35", realize_k35()?),
        Method::Hypercube { d } => ("hypercube", realize_hypercube(*d)?),
        Method::Density { ell } => ("density", density_family(*ell)?),
    })
}
