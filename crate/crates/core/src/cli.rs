//! Command-line front end. Each subcommand returns a process exit code:
//! 0 ok, 2 parse or validation error, 3 geometric invalidity, 4 failed
//! condition check, 5 tolerance-sensitive or ambiguous numerics.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::geometry::Tolerance;
use crate::io::{
    analyze, generate_sized, render_framework, render_lift, render_reciprocal_pair, write, AnalysisOptions,
    AnalysisReport, FixtureKind, FrameworkDocument, LiftDocument, ReciprocalDocument,
};
use crate::lifting::{level_curve, maxwell_lifting, LevelCurve};
use crate::plane_graph::{build_embedding, pebble_game_rank};
use crate::reciprocal::{cremona_reciprocal, maxwell_reciprocal};
use crate::rigidity::{is_good_self_stress, unique_stress, SelfStress};

#[derive(Debug, Parser)]
#[command(
    name = "recipro",
    version,
    about = "Self-stresses, reciprocals and liftings of planar frameworks"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Orientation and incidence tolerance, relative to coordinate scale.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol_geom: f64,
    /// Singular-value cutoff for ranks and null spaces, relative to the largest.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol_rank: f64,
    /// Zero threshold for stress entries, relative to the largest.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol_stress: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write an SVG rendering to this path.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Cremona,
    Maxwell,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every check on a framework document.
    Analyze { input: PathBuf },
    /// Draw the reciprocal diagram of the framework's stress.
    Reciprocal {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "cremona")]
        mode: ModeArg,
        /// Reciprocal document path; printed to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lift the framework's stress and sample level curves.
    Lift {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        levels: usize,
    },
    /// Pebble-game rank of the graph.
    Laman { input: PathBuf },
    /// Write a seeded fixture document.
    Generate {
        /// One of: k4, wheel, triangulated-polygon-circuit, singular-concurrent,
        /// bad-quadrangle-search, pointed-pt, figure-eight, almost-pointed.
        kind: String,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether the document's stress (or its unique stress) is good.
    VerifyGood { input: PathBuf },
    /// Analyze many documents concurrently.
    Batch { inputs: Vec<PathBuf> },
}

impl GlobalArgs {
    fn tolerance(&self) -> Result<Tolerance> {
        Tolerance::new(self.tol_geom, self.tol_rank, self.tol_stress)
    }
}

/// Parses arguments, runs the command and reports errors on stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.class().exit_code()
        }
    }
}

fn load(path: &Path) -> Result<(Framework, Option<SelfStress>)> {
    FrameworkDocument::load(path)?.load_parts()
}

/// The given stress after an equilibrium check, else the unique one.
fn resolve_stress(fw: &Framework, given: Option<SelfStress>, tol: &Tolerance) -> Result<SelfStress> {
    match given {
        Some(s) if s.is_equilibrium(fw, tol) => Ok(s),
        Some(s) => Err(Error::Validation(format!(
            "given stress is not in equilibrium (residual {:.3e})",
            s.residual
        ))),
        None => unique_stress(fw, tol),
    }
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    match out {
        Some(p) => write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_report(r: &AnalysisReport) {
    for w in &r.warnings {
        eprintln!("warning: {w}");
    }
    println!("status: {}", r.status);
    let c = &r.counts;
    println!("counts: e={} t={} q={} x={} y={}", c.e, c.t, c.q, c.x, c.y);
    println!(
        "laman: rank {} independent {} circuit {}",
        r.laman.rank, r.laman.independent, r.laman.circuit
    );
    println!("stress dimension: {}", r.stress_dimension);
    for check in &r.checks {
        let verdict = if check.pass { "PASS" } else { "FAIL" };
        match check.residual {
            Some(res) => println!("{verdict} {} (residual {res:.3e})", check.name),
            None => println!("{verdict} {}", check.name),
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let g = &cli.global;
    let tol = g.tolerance()?;
    match &cli.command {
        Command::Analyze { input } => {
            let (fw, given) = load(input)?;
            let opts = AnalysisOptions {
                tol,
                seed: g.seed,
                ..AnalysisOptions::default()
            };
            let report = analyze(&fw, given.as_ref(), &opts)?;
            if let Some(svg) = &g.svg {
                write(svg, &render_framework(&fw, report.stress.as_deref(), &tol))?;
            }
            if g.json {
                emit(&report, None)?;
            } else {
                print_report(&report);
            }
            Ok(report.exit_code())
        }
        Command::Reciprocal { input, mode, out } => {
            let (fw, given) = load(input)?;
            let stress = resolve_stress(&fw, given, &tol)?;
            let emb = build_embedding(&fw, &tol)?;
            let recip = match mode {
                ModeArg::Cremona => cremona_reciprocal(&emb, &stress)?,
                ModeArg::Maxwell => maxwell_reciprocal(&emb, &stress)?,
            };
            if let Some(svg) = &g.svg {
                write(svg, &render_reciprocal_pair(&fw, &stress.omega, &recip, &tol))?;
            }
            emit(&ReciprocalDocument::from_diagram(&recip), out.as_deref())?;
            Ok(0)
        }
        Command::Lift { input, out, levels } => {
            let (fw, given) = load(input)?;
            let stress = resolve_stress(&fw, given, &tol)?;
            let emb = build_embedding(&fw, &tol)?;
            let lift = maxwell_lifting(&emb, &stress)?;
            let peak = lift.peak_height();
            let curves: Vec<LevelCurve> = if peak > 0.0 {
                (1..=*levels)
                    .map(|i| level_curve(&lift, peak * i as f64 / (*levels + 1) as f64))
                    .collect::<Result<_>>()?
            } else {
                Vec::new()
            };
            if let Some(svg) = &g.svg {
                write(svg, &render_lift(&lift, &curves))?;
            }
            emit(&LiftDocument::from_lifting(&lift, curves), out.as_deref())?;
            Ok(0)
        }
        Command::Laman { input } => {
            let (fw, _) = load(input)?;
            let r = pebble_game_rank(fw.edges(), fw.vertex_count());
            let n = fw.vertex_count();
            let circuit = crate::plane_graph::is_laman_circuit(fw.edges(), n);
            if g.json {
                emit(
                    &serde_json::json!({
                        "rank": r.rank,
                        "independent": r.independent,
                        "laman": r.independent && fw.edge_count() == 2 * n - 3,
                        "circuit": circuit,
                    }),
                    None,
                )?;
            } else {
                println!("rank {} of {} edges", r.rank, fw.edge_count());
                println!("independent: {}", r.independent);
                println!("laman circuit: {circuit}");
            }
            Ok(0)
        }
        Command::Generate { kind, size, out } => {
            let kind: FixtureKind = kind.parse()?;
            let doc = generate_sized(kind, g.seed, *size)?;
            if let Some(svg) = &g.svg {
                let fw = doc.framework()?;
                write(svg, &render_framework(&fw, doc.stress.as_deref(), &tol))?;
            }
            match out {
                Some(p) => doc.save(p)?,
                None => print!("{}", doc.to_json()),
            }
            Ok(0)
        }
        Command::VerifyGood { input } => {
            let (fw, given) = load(input)?;
            let stress = resolve_stress(&fw, given, &tol)?;
            if let Some(err) = fw.first_crossing(&tol)? {
                return Err(err);
            }
            let emb = build_embedding(&fw, &tol)?;
            let report = is_good_self_stress(&emb, &stress)?;
            if g.json {
                emit(&report, None)?;
            } else {
                println!("good: {}", report.good);
                if !report.zero_edges.is_empty() {
                    println!("zero edges: {:?}", report.zero_edges);
                }
                if let Some(v) = report.distinguished_vertex {
                    println!("distinguished vertex: {v}");
                }
                if !report.bad_quadrangle_vertices.is_empty() {
                    println!("bad quadrangles at: {:?}", report.bad_quadrangle_vertices);
                }
            }
            Ok(if !report.near_threshold.is_empty() {
                5
            } else if report.good {
                0
            } else {
                4
            })
        }
        Command::Batch { inputs } => {
            let opts = AnalysisOptions {
                tol,
                seed: g.seed,
                ..AnalysisOptions::default()
            };
            let results: Vec<(i32, String)> = std::thread::scope(|s| {
                let handles: Vec<_> = inputs
                    .iter()
                    .map(|path| {
                        let opts = &opts;
                        s.spawn(
                            move || match load(path).and_then(|(fw, st)| analyze(&fw, st.as_ref(), opts)) {
                                Ok(r) => (r.exit_code(), r.status),
                                Err(e) => (e.class().exit_code(), e.to_string()),
                            },
                        )
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("worker panicked"))
                    .collect()
            });
            for (path, (code, status)) in inputs.iter().zip(&results) {
                let line = serde_json::json!({"file": path.display().to_string(), "exit_code": code, "status": status});
                println!("{line}");
            }
            Ok(results.iter().map(|r| r.0).max().unwrap_or(0))
        }
    }
}
