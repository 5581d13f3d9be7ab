//! Command-line front end. Subcommands read JSON from `-i` (or stdin) and
//! write JSON or SVG to `-o` (or stdout), so they compose with pipes:
//!
//! ```text
//! spanner gen --kind regular-ngon --n 23 | spanner build convex | spanner verify --expect-degree 3
//! ```
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when verification fails.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use spanner_core::bounds::{scan_max, BoundDomain, BoundFunction};
use spanner_core::convex::build_convex_spanner;
use spanner_core::gen::{generate, Instance, InstanceKind, InstanceSpec};
use spanner_core::grid::build_grid_spanner;
use spanner_core::io::{self, Document};
use spanner_core::steiner::augment_to_degree3;
use spanner_core::svg::{render_graph, render_grid};
use spanner_core::verify::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

/// Overrides `--seed` when set.
pub const SEED_ENV: &str = "SPANNER_SEED";

#[derive(Debug, Parser)]
#[command(name = "spanner", about = "Degree-3 plane spanners and their verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InOut {
    /// Input file (default: stdin)
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a point set or grid
    Gen {
        #[arg(long)]
        kind: InstanceKind,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        rows: usize,
        #[arg(long, default_value_t = 0)]
        cols: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a spanner
    Build {
        #[command(subcommand)]
        what: BuildKind,
    },
    /// Add Steiner points to reduce the degree to 3
    Augment {
        #[command(subcommand)]
        what: AugmentKind,
    },
    /// Report degree, planarity and stretch of a graph
    Verify {
        /// Fail unless stretch <= X
        #[arg(long)]
        expect_stretch: Option<f64>,
        /// Fail unless max degree <= D
        #[arg(long)]
        expect_degree: Option<usize>,
        /// Measure stretch over non-Steiner vertices only
        #[arg(long)]
        restrict_original: bool,
        #[command(flatten)]
        io: InOut,
    },
    /// Render a graph or grid as SVG
    Render {
        /// For grid input, draw the spanner instead of the full lattice
        #[arg(long)]
        spanner: bool,
        #[command(flatten)]
        io: InOut,
    },
    /// Numerical bound certification
    Bounds {
        #[command(subcommand)]
        what: BoundsKind,
    },
}

#[derive(Debug, Subcommand)]
enum BuildKind {
    /// Points in convex position -> graph
    Convex(InOut),
    /// Grid -> graph
    Grid(InOut),
}

#[derive(Debug, Subcommand)]
enum AugmentKind {
    /// Plane graph -> degree-3 graph with Steiner points
    Steiner {
        #[arg(long)]
        epsilon: f64,
        #[command(flatten)]
        io: InOut,
    },
}

#[derive(Debug, Subcommand)]
enum BoundsKind {
    /// Scan a bound function over its domain
    Scan {
        #[arg(long)]
        function: BoundFunction,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
    },
}

/// Error carrying the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure { code: EXIT_INPUT, message: e.to_string() }
    }
}

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Streams<'_> {
    fn read(&mut self, path: &Option<PathBuf>) -> Result<String, Failure> {
        match path {
            Some(p) => Ok(fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?),
            None => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                Ok(s)
            }
        }
    }

    fn write(&mut self, path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
        match path {
            Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?,
            None => {
                self.stdout.write_all(text.as_bytes())?;
                if !text.ends_with('\n') {
                    self.stdout.write_all(b"\n")?;
                }
            }
        }
        Ok(())
    }
}

/// Runs the CLI on `argv` (including the program name) with the given
/// streams and returns the exit code.
pub fn run_with(argv: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let mut streams = Streams { stdin, stdout };
    match dispatch(cli.command, &mut streams) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

/// [`run_with`] on the process streams.
pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdin(), &mut std::io::stdout(), &mut std::io::stderr())
}

fn dispatch(command: Command, s: &mut Streams) -> Result<i32, Failure> {
    match command {
        Command::Gen { kind, n, rows, cols, seed, scale, output } => {
            let seed = match std::env::var(SEED_ENV) {
                Ok(v) => v.parse().map_err(|_| format!("{SEED_ENV}={v:?} is not a u64 seed"))?,
                Err(_) => seed,
            };
            let spec = InstanceSpec { kind, n, rows, cols, seed, scale };
            let text = match generate(&spec)? {
                Instance::Points(p) => io::points_to_json(&p),
                Instance::Grid(g) => io::grid_to_json(&g),
            };
            s.write(&output, &text)?;
        }
        Command::Build { what: BuildKind::Convex(io) } => {
            let points = io::parse_points(&s.read(&io.input)?)?;
            let (g, _) = build_convex_spanner(&points)?;
            s.write(&io.output, &io::graph_to_json(&g))?;
        }
        Command::Build { what: BuildKind::Grid(io) } => {
            let grid = io::parse_grid(&s.read(&io.input)?)?;
            s.write(&io.output, &io::graph_to_json(&build_grid_spanner(&grid)))?;
        }
        Command::Augment { what: AugmentKind::Steiner { epsilon, io } } => {
            let g = io::parse_graph(&s.read(&io.input)?)?;
            let out = augment_to_degree3(&g, epsilon)?;
            s.write(&io.output, &io::graph_to_json(&out))?;
        }
        Command::Verify { expect_stretch, expect_degree, restrict_original, io } => {
            let g = io::parse_graph(&s.read(&io.input)?)?;
            let r = report(&g, restrict_original);
            s.write(&io.output, &serde_json::to_string(&r)?)?;
            let stretch_ok = match (expect_stretch, r.stretch) {
                (None, _) => true,
                (Some(x), Some(t)) => t <= x,
                (Some(_), None) => false,
            };
            let degree_ok = expect_degree.is_none_or(|d| r.max_degree <= d);
            if !(r.is_plane && r.connected && stretch_ok && degree_ok) {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::Render { spanner, io } => {
            let svg = match io::parse_document(&s.read(&io.input)?)? {
                Document::Graph(g) => render_graph(&g),
                Document::Grid(grid) if spanner => render_grid(&grid, Some(&build_grid_spanner(&grid))),
                Document::Grid(grid) => render_grid(&grid, None),
                Document::Points(p) => render_graph(&spanner_core::GeometricGraph::empty(p)),
            };
            s.write(&io.output, &svg)?;
        }
        Command::Bounds { what: BoundsKind::Scan { function, steps } } => {
            if steps < 2 {
                return Err(Failure { code: EXIT_INPUT, message: "--steps must be at least 2".into() });
            }
            let result = scan_max(&BoundDomain::for_function(function, steps));
            s.write(&None, &serde_json::to_string(&result)?)?;
            if !result.satisfied {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(EXIT_OK)
}
