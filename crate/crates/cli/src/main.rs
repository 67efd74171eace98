//! `altroute`: construct, check, and render 1-plane Hamiltonian
//! alternating cycles and paths on bicolored point sets.
//!
//! Exit codes: 0 when all requested verifications pass, 1 when a
//! produced or supplied route fails verification, 2 on usage or input
//! errors. All user-facing point indices are 1-based.

mod generate;
mod instance;
mod report;
mod svg;

use altroute::{
    build_cycle, build_path, optimum_cycle, optimum_path, oracle, verify_route, AltRoute,
    BicoloredSet, Color,
};
use clap::{Parser, Subcommand};
use instance::Instance;
use report::Report;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "altroute",
    version,
    about = "1-plane Hamiltonian alternating cycles and paths"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        /// Write the instance here instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Build a minimum-crossing (convex) or bounded (general) cycle.
    Cycle {
        instance: PathBuf,
        /// Treat the instance as a convex sequence; a point list must
        /// then have all points on its convex hull.
        #[arg(long)]
        convex: bool,
        #[arg(long)]
        json: bool,
        /// Render the result to this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the route file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an alternating path between two endpoints.
    Path {
        instance: PathBuf,
        /// 1-based start point (overrides any `endpoints:` annotation).
        #[arg(long)]
        from: Option<usize>,
        /// 1-based end point.
        #[arg(long)]
        to: Option<usize>,
        #[arg(long)]
        convex: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a route file against an instance.
    Check {
        instance: PathBuf,
        route: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive minimum over all Hamiltonian alternating routes
    /// (small instances only).
    Oracle {
        instance: PathBuf,
        /// Enumerate cycles instead of paths.
        #[arg(long)]
        cycle: bool,
        /// 1-based path endpoints; omit both for free endpoints.
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Render an instance (and optionally a route) as SVG.
    Svg {
        instance: PathBuf,
        route: Option<PathBuf>,
        /// Write the SVG here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// n red and n blue uniform points in general position.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        bbox: i64,
    },
    /// Random balanced convex color sequence.
    Convex {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Convex sequence from a run-length pattern such as R5B5 or RBx25.
    Runs { pattern: String },
    /// Monochromatic hull with the other color nested inside.
    Nested {
        /// Hull color, R or B.
        #[arg(long)]
        color: String,
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.cmd {
        Cmd::Gen { family, out } => {
            let inst = match family {
                GenFamily::Random { n, seed, bbox } => generate::random_general(n, seed, bbox)?,
                GenFamily::Convex { n, seed } => generate::convex_random(n, seed)?,
                GenFamily::Runs { pattern } => generate::runs_pattern(&pattern)?,
                GenFamily::Nested { color, n } => {
                    let c = match color.as_str() {
                        "R" | "r" => Color::Red,
                        "B" | "b" => Color::Blue,
                        other => {
                            return Err(format!("hull color must be R or B, got {other:?}").into())
                        }
                    };
                    generate::nested(c, n)?
                }
            };
            emit(out.as_deref(), &instance::serialize_instance(&inst))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Cycle {
            instance: path,
            convex,
            json,
            svg: svg_out,
            out,
        } => {
            let (inst, label) = load(&path)?;
            let (set, perm) = prepare(&inst, convex)?;
            let route = if set.is_convex() {
                optimum_cycle(&set)?
            } else {
                build_cycle(&set)?
            };
            finish(
                &inst,
                &label,
                route,
                perm.as_deref(),
                json,
                svg_out.as_deref(),
                out.as_deref(),
            )
        }
        Cmd::Path {
            instance: path,
            from,
            to,
            convex,
            json,
            svg: svg_out,
            out,
        } => {
            let (inst, label) = load(&path)?;
            let (s, t) = resolve_endpoints(&inst, from, to)?;
            let (set, perm) = prepare(&inst, convex)?;
            let (s, t) = match &perm {
                Some(p) => (position_in(p, s)?, position_in(p, t)?),
                None => (s, t),
            };
            let route = if set.is_convex() {
                optimum_path(&set, s, t)?
            } else {
                build_path(&set, s, t)?
            };
            finish(
                &inst,
                &label,
                route,
                perm.as_deref(),
                json,
                svg_out.as_deref(),
                out.as_deref(),
            )
        }
        Cmd::Check {
            instance: path,
            route: route_path,
            json,
        } => {
            let (inst, label) = load(&path)?;
            let text = std::fs::read_to_string(&route_path)?;
            let (kind, verts) = instance::parse_route(&text)?;
            for &v in &verts {
                if v >= inst.set.len() {
                    return Err(format!("route index {} out of range", v + 1).into());
                }
            }
            let route = AltRoute::analyzed(&inst.set, kind, verts);
            let rep = verify_route(&inst.set, &route);
            let report = Report::new(&label, kind, &rep);
            print!(
                "{}",
                if json {
                    report.to_json() + "\n"
                } else {
                    report.to_text()
                }
            );
            Ok(exit_for(rep.passed()))
        }
        Cmd::Oracle {
            instance: path,
            cycle,
            from,
            to,
            json,
        } => {
            let (inst, label) = load(&path)?;
            let query = match (cycle, from, to) {
                (true, None, None) => oracle::OracleQuery::Cycle,
                (false, None, None) => oracle::OracleQuery::PathFree,
                (false, Some(f), Some(t)) => {
                    oracle::OracleQuery::PathBetween(to_zero_based(f)?, to_zero_based(t)?)
                }
                _ => return Err("use --cycle, or --from with --to, or neither".into()),
            };
            let res = oracle::enumerate_min(&inst.set, query)?;
            let summary = OracleSummary {
                instance: label,
                min_crossings: res.min_crossings,
                optimal_routes: res.optimal_routes.len(),
                exists_1plane: res.exists_1plane,
                all_optima_1plane: res.all_optima_1plane,
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&summary)?);
            } else {
                let min = summary
                    .min_crossings
                    .map_or("none".to_string(), |m| m.to_string());
                print!(
                    "instance: {}\nmin_crossings: {}\noptimal_routes: {}\nexists_1plane: {}\nall_optima_1plane: {}\n",
                    summary.instance,
                    min,
                    summary.optimal_routes,
                    summary.exists_1plane,
                    summary.all_optima_1plane
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Svg {
            instance: path,
            route: route_path,
            out,
        } => {
            let (inst, _) = load(&path)?;
            let route = match route_path {
                Some(rp) => {
                    let (kind, verts) = instance::parse_route(&std::fs::read_to_string(&rp)?)?;
                    Some(AltRoute::analyzed(&inst.set, kind, verts))
                }
                None => None,
            };
            emit(out.as_deref(), &svg::render_svg(&inst.set, route.as_ref()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Serialize)]
struct OracleSummary {
    instance: String,
    min_crossings: Option<usize>,
    optimal_routes: usize,
    exists_1plane: bool,
    all_optima_1plane: bool,
}

fn load(path: &Path) -> Result<(Instance, String), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok((instance::parse_instance(&text)?, path.display().to_string()))
}

fn to_zero_based(i: usize) -> Result<usize, Box<dyn std::error::Error>> {
    if i == 0 {
        return Err("point indices are 1-based".into());
    }
    Ok(i - 1)
}

fn resolve_endpoints(
    inst: &Instance,
    from: Option<usize>,
    to: Option<usize>,
) -> Result<(usize, usize), Box<dyn std::error::Error>> {
    let (s, t) = match (from, to, inst.endpoints) {
        (Some(f), Some(t), _) => (to_zero_based(f)?, to_zero_based(t)?),
        (None, None, Some(e)) => e,
        (None, None, None) => {
            return Err("path needs --from and --to (or an endpoints: annotation)".into())
        }
        _ => return Err("--from and --to must be given together".into()),
    };
    if s >= inst.set.len() || t >= inst.set.len() {
        return Err("endpoint index out of range".into());
    }
    Ok((s, t))
}

/// The set to solve on plus, when `--convex` converted a point list,
/// the permutation mapping sequence positions back to original indices.
type Prepared = (BicoloredSet, Option<Vec<usize>>);

/// With `--convex`, reinterpret a point-list instance whose points are
/// all hull vertices as the convex color sequence in ccw hull order.
fn prepare(inst: &Instance, convex: bool) -> Result<Prepared, Box<dyn std::error::Error>> {
    if !convex || inst.set.is_convex() {
        return Ok((inst.set.clone(), None));
    }
    let hull = inst.set.hull();
    if hull.vertices.len() != inst.set.len() {
        return Err("--convex requires all points on the convex hull".into());
    }
    let perm = hull.vertices.clone();
    let colors: Vec<Color> = perm.iter().map(|&i| inst.set.color(i)).collect();
    Ok((BicoloredSet::from_color_sequence(&colors)?, Some(perm)))
}

fn position_in(perm: &[usize], orig: usize) -> Result<usize, Box<dyn std::error::Error>> {
    perm.iter()
        .position(|&v| v == orig)
        .ok_or_else(|| "endpoint not found on hull".into())
}

/// Map back to original indices if needed, verify on the original set,
/// and write the route, report, and optional SVG.
fn finish(
    inst: &Instance,
    label: &str,
    route: AltRoute,
    perm: Option<&[usize]>,
    json: bool,
    svg_out: Option<&Path>,
    route_out: Option<&Path>,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let route = match perm {
        Some(p) => {
            let verts: Vec<usize> = route.vertices.iter().map(|&v| p[v]).collect();
            AltRoute::analyzed(&inst.set, route.kind, verts)
        }
        None => route,
    };
    let rep = verify_route(&inst.set, &route);
    let report = Report::new(label, route.kind, &rep);
    let route_text = instance::serialize_route(route.kind, &route.vertices);
    match route_out {
        Some(p) => std::fs::write(p, &route_text)?,
        None => print!("{route_text}"),
    }
    print!(
        "{}",
        if json {
            report.to_json() + "\n"
        } else {
            report.to_text()
        }
    );
    if let Some(p) = svg_out {
        std::fs::write(p, svg::render_svg(&inst.set, Some(&route)))?;
    }
    Ok(exit_for(rep.passed()))
}

fn exit_for(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
