//! Command-line front end: reachability sweeps, envelopes, critical
//! angles, pairwise paths, spanning trees and forests, the spanning-tree
//! counterexample, cap generation, unfolding, and parameter sweeps.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (no
//! spanning tree, overlap found, path missing), 2 for usage and input
//! errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use anglemono::cap;
use anglemono::gen;
use anglemono::geom::Angle;
use anglemono::graph::{augment, PlaneGraph};
use anglemono::io as amio;
use anglemono::paths;
use anglemono::spanning;
use anglemono::svg;

mod report;
use report::RunReport;

/// Relative length tolerance used by the CLI-side overlap and
/// radial-monotonicity checks; `ANGLEMONO_EPS` overrides it.
const DEFAULT_LEN_EPS_REL: f64 = 1e-9;

fn len_eps_rel() -> f64 {
    std::env::var("ANGLEMONO_EPS")
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .filter(|v| v.is_finite() && *v > 0.0)
        .unwrap_or(DEFAULT_LEN_EPS_REL)
}

#[derive(Parser)]
#[command(
    name = "anglemono",
    version,
    about = "Angle-monotone paths, spanning forests, and convex-cap unfolding"
)]
struct Cli {
    /// Include wall-clock timings in the report (off by default so that
    /// repeated runs are byte-identical).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnvelopeArg {
    Upper,
    Lower,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Vertices and edges reachable by wedge paths from a source.
    Reach {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        /// Wedge center, degrees.
        #[arg(long)]
        beta: f64,
        /// Wedge width, degrees.
        #[arg(long, default_value_t = 90.0)]
        width: f64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Greedy extremal wedge paths (and the region they bound).
    Envelope {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 90.0)]
        width: f64,
        #[arg(long, value_enum, default_value_t = EnvelopeArg::Both)]
        kind: EnvelopeArg,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Wedge centers at which reachability changes, plus midpoints.
    CriticalAngles {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 90.0)]
        width: f64,
    },
    /// One angle-monotone path between two vertices.
    Path {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
        #[arg(long, default_value_t = 90.0)]
        width: f64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Boundary-rooted quadrant spanning forest.
    Forest {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Spanning tree of a 45°-grid graph.
    Tree45 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Exhaustively decide angle-monotone spanning tree existence.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long, default_value_t = 90.0)]
        width: f64,
        /// Search-node budget; exceeding it is inconclusive.
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Build and certify the spanning-tree counterexample instance.
    Cex {
        /// Rotation of the two broken-symmetry corners toward each other,
        /// degrees.
        #[arg(long, default_value_t = 4.5)]
        shift: f64,
        /// Outward radial pull on pockets and corners (strict-acuteness
        /// margin).
        #[arg(long, default_value_t = 0.0)]
        pull: f64,
        /// Write the instance as graph JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Generate a convex cap by lifting a disk triangulation.
    GenCap {
        /// Approximate vertex count.
        #[arg(long)]
        n: usize,
        /// Target maximum face-normal tilt, degrees.
        #[arg(long)]
        phi: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output OFF path.
        #[arg(long)]
        out: PathBuf,
        /// Also write the projected triangulation as graph JSON.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Project, cut, and unfold a convex cap; check the net for overlap.
    Unfold {
        /// Triangle mesh in OFF format.
        mesh: PathBuf,
        #[arg(long)]
        source_vertex: usize,
        /// Root face override (default: lowest-index face at the source).
        #[arg(long)]
        root_face: Option<usize>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Unfold many generated caps across tilt targets and report overlap
    /// and radial-monotonicity statistics.
    Sweep {
        /// Comma-separated tilt targets, degrees.
        #[arg(long, value_delimiter = ',')]
        phi_list: Vec<f64>,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write each trial's net SVG into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &Path, width: Angle, rep: &mut RunReport) -> Result<PlaneGraph> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    rep.input(&path.display().to_string(), &bytes);
    let text = String::from_utf8(bytes).context("graph file is not UTF-8")?;
    let g = amio::graph_from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    let v = g.validate(width);
    if !v.is_valid() {
        bail!("graph fails validation at width {:.2}°: {v}", width.degrees());
    }
    Ok(g)
}

fn write_artifact(path: &Path, contents: &str, rep: &mut RunReport) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))?;
    rep.artifacts.push(path.display().to_string());
    Ok(())
}

fn check_vertex(g: &PlaneGraph, v: usize, what: &str) -> Result<()> {
    if v >= g.vertex_count() {
        bail!("{what} {v} out of range (graph has {} vertices)", g.vertex_count());
    }
    Ok(())
}

fn finish(rep: &RunReport) -> u8 {
    rep.print();
    if rep.all_pass() {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<u8> {
    let started = Instant::now();
    let timings = cli.timings;
    let code = match cli.cmd {
        Cmd::Reach { graph, source, beta, width, svg: svg_out } => {
            let mut rep = RunReport::new("reach");
            let width = Angle::from_degrees(width);
            let g = load_graph(&graph, width, &mut rep)?;
            check_vertex(&g, source, "source")?;
            let gp = augment(&g, width);
            let rs = paths::reach_set(&gp, source, Angle::from_degrees(beta), width);
            if let Some(out) = svg_out {
                write_artifact(&out, &svg::render_reach(&gp, &rs), &mut rep)?;
            }
            rep.data = json!({
                "beta_deg": beta,
                "width_deg": width.degrees(),
                "reached": rs.reached_vertices(),
                "reached_count": rs.reached_count(),
                "used_edges": rs.used_edge_ids(),
                "used_rays": rs.used_ray_ids(),
            });
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
        Cmd::Envelope { graph, source, beta, width, kind, svg: svg_out } => {
            let mut rep = RunReport::new("envelope");
            let width = Angle::from_degrees(width);
            let g = load_graph(&graph, width, &mut rep)?;
            check_vertex(&g, source, "source")?;
            let gp = augment(&g, width);
            let beta = Angle::from_degrees(beta);
            let upper = paths::envelope(&gp, source, beta, width, paths::EnvelopeKind::Upper);
            let lower = paths::envelope(&gp, source, beta, width, paths::EnvelopeKind::Lower);
            let reg = paths::region(&gp, source, beta, width);
            let selected: Vec<&paths::EnvelopePath> = match kind {
                EnvelopeArg::Upper => vec![&upper],
                EnvelopeArg::Lower => vec![&lower],
                EnvelopeArg::Both => vec![&upper, &lower],
            };
            if let Some(out) = svg_out {
                let region_draw =
                    (kind == EnvelopeArg::Both && !reg.degenerate).then_some(&reg);
                write_artifact(&out, &svg::render_envelopes(&gp, &selected, region_draw), &mut rep)?;
            }
            rep.data = json!({
                "beta_deg": beta.degrees(),
                "width_deg": width.degrees(),
                "upper": { "vertices": upper.vertices, "ray_deg": gp.rays()[upper.ray].dir.degrees() },
                "lower": { "vertices": lower.vertices, "ray_deg": gp.rays()[lower.ray].dir.degrees() },
                "region_degenerate": reg.degenerate,
                "region_vertices": reg.boundary_vertices,
            });
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
        Cmd::CriticalAngles { graph, width } => {
            let mut rep = RunReport::new("critical-angles");
            let width = Angle::from_degrees(width);
            let g = load_graph(&graph, width, &mut rep)?;
            let gp = augment(&g, width);
            let crit = paths::critical_angles(&gp, width);
            rep.data = json!({
                "width_deg": width.degrees(),
                "angles_deg": crit.angles.iter().map(|a| a.degrees()).collect::<Vec<_>>(),
                "midpoints_deg": crit.midpoints.iter().map(|a| a.degrees()).collect::<Vec<_>>(),
            });
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
        Cmd::Path { graph, source, target, width, svg: svg_out } => {
            let mut rep = RunReport::new("path");
            let width = Angle::from_degrees(width);
            let g = load_graph(&graph, width, &mut rep)?;
            check_vertex(&g, source, "source")?;
            check_vertex(&g, target, "target")?;
            match paths::find_path(&g, source, target, width) {
                Some(found) => {
                    let chk = paths::verify_monotone(&g, &found.vertices, width)
                        .expect("found paths follow edges");
                    let ratio = paths::spanning_ratio(&g, &found.vertices);
                    let bound = 1.0 / (0.5 * width.radians()).cos() + 1e-6;
                    rep.check("found", true, format!("{} vertices", found.vertices.len()));
                    rep.check(
                        "monotone",
                        chk.monotone,
                        format!(
                            "arc {:.6}°",
                            chk.arc_width.map(|a| a.degrees()).unwrap_or(0.0)
                        ),
                    );
                    rep.check(
                        "spanning_ratio",
                        ratio <= bound,
                        format!("{ratio:.6} <= {bound:.6}"),
                    );
                    if let Some(out) = svg_out {
                        write_artifact(&out, &svg::render_path(&g, &found.vertices), &mut rep)?;
                    }
                    rep.data = json!({
                        "path": found.vertices,
                        "witness_deg": found.witness.degrees(),
                        "ratio": ratio,
                    });
                }
                None => {
                    rep.check("found", false, "no angle-monotone path at this width");
                    rep.data = json!({ "path": null });
                }
            }
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
        Cmd::Forest { graph, source, svg: svg_out } => {
            let mut rep = RunReport::new("forest");
            let w90 = Angle::from_degrees(90.0);
            let g = load_graph(&graph, w90, &mut rep)?;
            check_vertex(&g, source, "source")?;
            if g.is_on_hull(source) {
                bail!("source {source} lies on the hull; pick an interior vertex");
            }
            let gp = augment(&g, w90);
            let forest = spanning::quadrant_forest(&gp, source);
            let fr = spanning::verify_forest(&g, &forest);
            rep.check(
                "forest_valid",
                fr.is_valid(),
                if fr.is_valid() {
                    "spans interior, boundary-rooted, monotone, quadrant-confined".to_string()
                } else {
                    fr.violations.join("; ")
                },
            );
            if let Some(out) = svg_out {
                write_artifact(&out, &svg::render_forest(&g, &forest), &mut rep)?;
            }
            let sizes: Vec<usize> = (0..4)
                .map(|j| {
                    (0..g.vertex_count())
                        .filter(|&v| forest.quadrant(v) == Some(j as u8))
                        .count()
                })
                .collect();
            rep.data = json!({
                "quadrant_sizes": sizes,
                "roots": forest.roots,
                "tree_edges": forest.tree_edges().len(),
            });
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
        Cmd::Tree45 { graph, source, svg: svg_out } => {
            let mut rep = RunReport::new("tree45");
            let w90 = Angle::from_degrees(90.0);
            let g = load_graph(&graph, w90, &mut rep)?;
            check_vertex(&g, source, "source")?;
            match spanning::spanning_tree_45deg(&g, source) {
                Ok(tree) => {
                    rep.check(
                        "spanning_tree",
                        true,
                        format!("{} vertices, {} edges", tree.members().len(), tree.edge_count()),
                    );
                    if let Some(out) = svg_out {
                        write_artifact(&out, &svg::render_tree(&g, &tree), &mut rep)?;
                    }
                    rep.data = json!({
                        "root": tree.root,
                        "edges": tree.tree_edges().iter().map(|&(c, p, _)| [c, p]).collect::<Vec<_>>(),
                    });
                }
                Err(spanning::SpanError::NotA45Graph { edge, dir_deg }) => {
                    bail!("edge {edge} has direction {dir_deg:.4}°; not a 45°-grid graph");
                }
                Err(e) => {
                    rep.check("spanning_tree", false, e.to_string());
                }
            }
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
        Cmd::Oracle { graph, source, width, budget, svg: svg_out } => {
            let mut rep = RunReport::new("oracle");
            let width = Angle::from_degrees(width);
            let g = load_graph(&graph, width, &mut rep)?;
            check_vertex(&g, source, "source")?;
            match spanning::spanning_tree_oracle(&g, source, width, budget) {
                spanning::OracleOutcome::Tree(tree) => {
                    rep.check(
                        "tree_exists",
                        true,
                        format!("witness tree with {} edges", tree.edge_count()),
                    );
                    if let Some(out) = svg_out {
                        write_artifact(&out, &svg::render_tree(&g, &tree), &mut rep)?;
                    }
                    rep.data = json!({
                        "outcome": "tree",
                        "edges": tree.tree_edges().iter().map(|&(c, p, _)| [c, p]).collect::<Vec<_>>(),
                    });
                }
                spanning::OracleOutcome::NoTree => {
                    rep.check("tree_exists", false, "search exhausted: no spanning tree");
                    rep.data = json!({ "outcome": "no-tree" });
                }
                spanning::OracleOutcome::BudgetExceeded => {
                    rep.check("tree_exists", false, format!("inconclusive: budget {budget} exceeded"));
                    rep.data = json!({ "outcome": "budget-exceeded" });
                }
            }
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
        Cmd::Cex { shift, pull, out, svg: svg_out } => {
            let mut rep = RunReport::new("cex");
            match spanning::counterexample_graph_with(shift, pull) {
                Ok(cex) => {
                    rep.check(
                        "certified",
                        true,
                        format!(
                            "unique paths to A and B, no spanning tree, shift {shift}°, pull {pull}"
                        ),
                    );
                    if let Some(path) = out {
                        write_artifact(&path, &amio::graph_to_json(&cex.graph), &mut rep)?;
                    }
                    if let Some(path) = svg_out {
                        let gp = augment(&cex.graph, Angle::from_degrees(90.0));
                        write_artifact(&path, &svg::render_graph(&gp), &mut rep)?;
                    }
                    rep.data = json!({
                        "source": cex.source,
                        "names": cex.names,
                        "shift_deg": cex.shift_deg,
                        "outward_pull": cex.outward_pull,
                        "vertices": cex.graph.vertex_count(),
                        "edges": cex.graph.edge_count(),
                    });
                }
                Err(e) => {
                    rep.check("certified", false, e.to_string());
                    rep.data = json!({ "shift_deg": shift, "outward_pull": pull });
                }
            }
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
        Cmd::GenCap { n, phi, seed, out, graph_out } => {
            let mut rep = RunReport::new("gen-cap");
            rep.seed = Some(seed);
            let cap = cap::generate_cap(n, Angle::from_degrees(phi), seed)
                .map_err(|e| anyhow!("{e}"))?;
            write_artifact(&out, &amio::cap_to_off(&cap), &mut rep)?;
            let report = cap::validate_cap(&cap, false);
            rep.check("cap_valid", report.is_valid(), format!("{} issues", report.violations.len()));
            if let Some(path) = graph_out {
                let proj = cap::project(&cap).map_err(|e| anyhow!("{e}"))?;
                write_artifact(&path, &amio::graph_to_json(&proj.graph), &mut rep)?;
            }
            rep.data = json!({
                "vertices": cap.vertex_count(),
                "faces": cap.triangles().len(),
                "max_tilt_deg": cap.max_tilt().degrees(),
                "max_face_angle_deg": report.max_face_angle.degrees(),
                "strictly_acute": report.strictly_acute,
            });
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
        Cmd::Unfold { mesh, source_vertex, root_face, svg: svg_out } => {
            let mut rep = RunReport::new("unfold");
            let bytes = fs::read(&mesh).with_context(|| format!("reading {}", mesh.display()))?;
            rep.input(&mesh.display().to_string(), &bytes);
            let text = String::from_utf8(bytes).context("OFF file is not UTF-8")?;
            let cap3 = amio::cap_from_off(&text)?;
            let caprep = cap::validate_cap(&cap3, false);
            if !caprep.is_valid() {
                bail!("mesh is not a valid cap: {}", caprep.violations.join("; "));
            }
            let code = unfold_pipeline(
                &mut rep,
                &cap3,
                source_vertex,
                root_face,
                svg_out.as_deref(),
            )?;
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            rep.print();
            code
        }
        Cmd::Sweep { phi_list, trials, n, seed, jobs, out_dir } => {
            let mut rep = RunReport::new("sweep");
            rep.seed = Some(seed);
            if phi_list.is_empty() {
                bail!("--phi-list needs at least one tilt target");
            }
            if let Some(dir) = &out_dir {
                fs::create_dir_all(dir)
                    .with_context(|| format!("creating {}", dir.display()))?;
            }
            let tasks: Vec<(usize, u64)> = (0..phi_list.len())
                .flat_map(|pi| (0..trials).map(move |t| (pi, t)))
                .collect();
            let run_one = |&(pi, t): &(usize, u64)| -> serde_json::Value {
                let phi = phi_list[pi];
                let trial_seed = seed
                    .wrapping_mul(0x9e3779b97f4a7c15)
                    .wrapping_add((pi as u64) << 32)
                    .wrapping_add(t);
                match sweep_trial(phi, n, trial_seed, t, out_dir.as_deref()) {
                    Ok(v) => v,
                    Err(e) => json!({
                        "phi_deg": phi, "trial": t, "error": e.to_string(),
                    }),
                }
            };
            let rows: Vec<serde_json::Value> = if jobs > 1 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .context("building worker pool")?;
                pool.install(|| {
                    use rayon::prelude::*;
                    tasks.par_iter().map(run_one).collect()
                })
            } else {
                tasks.iter().map(run_one).collect()
            };
            let errors = rows.iter().filter(|r| r.get("error").is_some()).count();
            rep.check("all_runs_completed", errors == 0, format!("{errors} failed runs"));
            // per-tilt aggregates
            let mut summary = Vec::new();
            for (pi, &phi) in phi_list.iter().enumerate() {
                let of_phi: Vec<&serde_json::Value> = rows
                    .iter()
                    .filter(|r| r.get("phi_deg").and_then(|v| v.as_f64()) == Some(phi))
                    .collect();
                let _ = pi;
                let total = of_phi.len();
                let overlaps: u64 = of_phi
                    .iter()
                    .filter_map(|r| r.get("overlap_pairs").and_then(|v| v.as_u64()))
                    .sum();
                let clean = of_phi
                    .iter()
                    .filter(|r| r.get("overlap_pairs").and_then(|v| v.as_u64()) == Some(0))
                    .count();
                let radial_ok = of_phi
                    .iter()
                    .filter(|r| r.get("radial_all").and_then(|v| v.as_bool()) == Some(true))
                    .count();
                summary.push(json!({
                    "phi_deg": phi,
                    "trials": total,
                    "overlap_free_nets": clean,
                    "total_overlap_pairs": overlaps,
                    "radially_monotone_nets": radial_ok,
                }));
            }
            rep.data = json!({ "trials": rows, "summary": summary });
            rep.timing("total", started.elapsed().as_millis() as u64, timings);
            finish(&rep)
        }
    };
    Ok(code)
}

/// Shared tail of `unfold` and `sweep`: forest, lift, develop, overlap.
fn unfold_pipeline(
    rep: &mut RunReport,
    cap3: &cap::ConvexCap,
    source_vertex: usize,
    root_face: Option<usize>,
    svg_out: Option<&Path>,
) -> Result<u8> {
    let proj = cap::project(cap3).map_err(|e| anyhow!("{e}"))?;
    let g = &proj.graph;
    if source_vertex >= g.vertex_count() {
        bail!("source vertex {source_vertex} out of range");
    }
    if g.is_on_hull(source_vertex) {
        bail!("source vertex {source_vertex} is on the boundary; pick an interior vertex");
    }
    let gp = augment(g, Angle::from_degrees(90.0));
    let forest = spanning::quadrant_forest(&gp, source_vertex);
    let fr = spanning::verify_forest(g, &forest);
    rep.check(
        "forest_valid",
        fr.is_valid(),
        if fr.is_valid() { "ok".to_string() } else { fr.violations.join("; ") },
    );
    let cuts = cap::lift_forest(&forest, cap3).map_err(|e| anyhow!("{e}"))?;
    let layout = match root_face {
        Some(rf) => cap::unfold_with_root(cap3, &cuts, rf),
        None => cap::unfold(cap3, &cuts),
    }
    .map_err(|e| anyhow!("{e}"))?;
    let eps = len_eps_rel() * layout.bbox_diameter();
    let overlaps = cap::overlap_check_eps(&layout, eps.max(1e-12));
    rep.check("no_overlap", overlaps.is_empty(), format!("{} overlapping pairs", overlaps.len()));
    if let Some(out) = svg_out {
        write_artifact(out, &svg::render_layout(&layout), rep)?;
    }
    let radial: Vec<bool> = layout
        .dev_paths
        .iter()
        .map(|dp| {
            cap::radial_monotone_check_eps(&dp.left, eps.max(1e-12))
                && cap::radial_monotone_check_eps(&dp.right, eps.max(1e-12))
        })
        .collect();
    let max_turn_deg =
        cuts.turns.iter().map(|t| t.turn().to_degrees()).fold(0.0f64, f64::max);
    let mut overlap_list = String::new();
    for (a, b) in overlaps.iter().take(20) {
        let _ = write!(overlap_list, "({a},{b}) ");
    }
    rep.data = json!({
        "max_tilt_deg": cap3.max_tilt().degrees(),
        "alpha_max_deg": proj.alpha_max.degrees(),
        "delta_deg": proj.delta.degrees(),
        "projection_guaranteed_non_obtuse": proj.guaranteed,
        "turns_over_90": cuts.flagged.len(),
        "max_turn_deg": max_turn_deg,
        "overlap_pairs": overlaps.len(),
        "overlap_sample": overlap_list.trim(),
        "cut_paths": layout.dev_paths.len(),
        "radially_monotone_paths": radial.iter().filter(|&&b| b).count(),
    });
    Ok(if rep.all_pass() { 0 } else { 1 })
}

/// One sweep trial: generate, unfold, summarize.
fn sweep_trial(
    phi_deg: f64,
    n: usize,
    trial_seed: u64,
    trial: u64,
    out_dir: Option<&Path>,
) -> Result<serde_json::Value> {
    let cap3 = cap::generate_cap(n, Angle::from_degrees(phi_deg), trial_seed)
        .map_err(|e| anyhow!("{e}"))?;
    let proj = cap::project(&cap3).map_err(|e| anyhow!("{e}"))?;
    let source = gen::random_interior_vertex(&proj.graph, trial_seed ^ 0x5bd1e995);
    let gp = augment(&proj.graph, Angle::from_degrees(90.0));
    let forest = spanning::quadrant_forest(&gp, source);
    let cuts = cap::lift_forest(&forest, &cap3).map_err(|e| anyhow!("{e}"))?;
    let layout = cap::unfold(&cap3, &cuts).map_err(|e| anyhow!("{e}"))?;
    let eps = (len_eps_rel() * layout.bbox_diameter()).max(1e-12);
    let overlaps = cap::overlap_check_eps(&layout, eps);
    let radial_all = layout.dev_paths.iter().all(|dp| {
        cap::radial_monotone_check_eps(&dp.left, eps)
            && cap::radial_monotone_check_eps(&dp.right, eps)
    });
    let max_turn_deg =
        cuts.turns.iter().map(|t| t.turn().to_degrees()).fold(0.0f64, f64::max);
    if let Some(dir) = out_dir {
        let path = dir.join(format!("net-phi{phi_deg:.1}-t{trial}.svg"));
        fs::write(&path, svg::render_layout(&layout))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(json!({
        "phi_deg": phi_deg,
        "trial": trial,
        "seed": trial_seed,
        "source": source,
        "overlap_pairs": overlaps.len(),
        "radial_all": radial_all,
        "turns_over_90": cuts.flagged.len(),
        "max_turn_deg": max_turn_deg,
    }))
}
