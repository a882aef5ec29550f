use std::ffi::OsString;
use std::hash::{BuildHasher, RandomState};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::bench::{bench_csv, bench_scaling, Family};
use super::gen::{gen_coloring, gen_random, RandomSpec};
use super::parse::{parse_system_with_order, serialize_system};
use super::report::RunReport;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::linalg::{build_coeff_matrix, rank};
use crate::poly::{MonomialOrder, PolySystem};
use crate::spaces::{mingen, solve_basis, verify_mingen, verify_solve, Classification, MingenConfig, SolveConfig};
use crate::violator::SmallBasis;

#[derive(Parser, Debug)]
#[command(name = "hellyspace", version, about = "Small certificates for large polynomial systems")]
struct Cli {
    /// Print a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for violation scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank of the coefficient matrix and a pivot subsystem.
    Rank {
        file: PathBuf,
        #[arg(long, default_value = "grevlex")]
        order: MonomialOrder,
    },
    /// A subsystem with the same common zeros, or a certificate that there are none.
    SolveBasis {
        file: PathBuf,
        /// Combinatorial dimension to assume (default: the coefficient rank).
        #[arg(long)]
        delta: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// A small generating set of the ideal of a homogeneous system.
    Mingen {
        file: PathBuf,
        /// Upper bound on the number of minimal generators.
        #[arg(long)]
        gamma: usize,
        /// Assert that the input contains a Groebner basis, tightening gamma by the leading-term count.
        #[arg(long)]
        assume_gb: bool,
        #[arg(long)]
        allow_inhomogeneous: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check a given basis against the whole system.
    Verify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        basis: Vec<usize>,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Also require at most this many elements (generating mode).
        #[arg(long)]
        gamma: Option<usize>,
        #[arg(long, default_value = "grevlex")]
        order: MonomialOrder,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated instance.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Measure query counts as the input grows.
    #[command(subcommand)]
    Bench(BenchCommand),
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Root seed, or `random` for a fresh one (printed to stderr).
    #[arg(long, default_value = "0")]
    seed: SeedArg,
    /// Re-check the result against every input polynomial.
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value = "grevlex")]
    order: MonomialOrder,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Use minimum-cardinality enumeration for small bases instead of the greedy search.
    #[arg(long)]
    exhaustive_base: bool,
}

#[derive(Clone, Copy, Debug)]
enum SeedArg {
    Fixed(u64),
    Random,
}

impl std::str::FromStr for SeedArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "random" {
            return Ok(SeedArg::Random);
        }
        s.parse().map(SeedArg::Fixed).map_err(|_| format!("'{s}' is neither a u64 nor 'random'"))
    }
}

impl SeedArg {
    fn resolve(self) -> u64 {
        match self {
            SeedArg::Fixed(s) => s,
            SeedArg::Random => {
                let s = RandomState::new().hash_one(Instant::now());
                eprintln!("seed: {s}");
                s
            }
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Solve,
    Mingen,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Coloring,
    Random,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// The 2-coloring system of a non-bipartite graph on n vertices.
    Coloring {
        #[arg(long)]
        n: usize,
        /// `Q` or a prime modulus.
        #[arg(long, default_value = "2147483647")]
        field: String,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Random combinations of a fixed-rank core.
    Random {
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        homogeneous: bool,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long, default_value = "2147483647")]
        field: String,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum BenchCommand {
    /// Mean sampling queries per size over seeds 0..N, as CSV.
    Scaling {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Vertex counts (coloring) or system sizes (random).
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        seeds: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "3")]
        nvars: usize,
        #[arg(long, default_value = "2")]
        d: u32,
        #[arg(long, default_value = "6")]
        rank: usize,
        #[arg(long)]
        homogeneous: bool,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::DeltaTooSmall { .. }) { 3 } else { 2 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

/// Parses `argv` (including the program name), runs the command and returns the exit code:
/// 0 on success (an infeasibility certificate is a success), 2 on input or configuration
/// errors, 3 when the supplied combinatorial dimension turns out too small.
pub fn run_command<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let run = || dispatch(&cli);
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(run),
            Err(e) => Err(Failure {
                code: 2,
                message: e.to_string(),
            }),
        },
        None => run(),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &Path, order: MonomialOrder) -> Result<(Vec<u8>, PolySystem), Failure> {
    let bytes = std::fs::read(path).map_err(|e| io_failure(path, e))?;
    let text = String::from_utf8_lossy(&bytes);
    let parsed = parse_system_with_order(&text, order)?;
    if !parsed.zero_lines.is_empty() {
        let lines: Vec<String> = parsed.zero_lines.iter().map(|l| l.to_string()).collect();
        eprintln!(
            "warning: dropped zero polynomial(s) on line(s) {}; indices refer to the remaining polynomials",
            lines.join(", ")
        );
    }
    Ok((bytes, parsed.system))
}

fn parse_field(s: &str) -> Result<FieldSpec, Failure> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let p: u64 = s.parse().map_err(|_| Failure {
        code: 2,
        message: format!("field must be Q or a prime, got '{s}'"),
    })?;
    Ok(FieldSpec::prime(p)?)
}

fn write_text(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(cli: &Cli, report: &RunReport, out: Option<&Path>) -> Result<(), Failure> {
    let text = if cli.pretty { report.summary() } else { report.to_json() };
    write_text(out, &text)
}

fn small_basis(run: &RunArgs) -> SmallBasis {
    if run.exhaustive_base {
        SmallBasis::Exhaustive
    } else {
        SmallBasis::Auto
    }
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    let start = Instant::now();
    let elapsed = || start.elapsed().as_millis() as u64;
    match &cli.command {
        Command::Rank { file, order } => {
            let (bytes, system) = load(file, *order)?;
            let r = rank(&build_coeff_matrix(&system, *order));
            let mut report = RunReport::new("rank", &bytes, &system);
            report.delta_or_gamma = Some(r.rank);
            report.basis_indices = r.pivot_columns;
            report.wall_time_ms = elapsed();
            emit(cli, &report, None)
        }
        Command::SolveBasis { file, delta, run } => {
            let (bytes, system) = load(file, run.order)?;
            let mut cfg = SolveConfig::new(system);
            cfg.order = run.order;
            cfg.delta_override = *delta;
            cfg.seed = run.seed.resolve();
            cfg.verify = run.verify;
            cfg.small_basis = small_basis(run);
            let out = solve_basis(&cfg)?;
            let mut report = RunReport::new("solve-basis", &bytes, &cfg.system).with_outcome(&out);
            report.wall_time_ms = elapsed();
            emit(cli, &report, run.out.as_deref())
        }
        Command::Mingen {
            file,
            gamma,
            assume_gb,
            allow_inhomogeneous,
            run,
        } => {
            let (bytes, system) = load(file, run.order)?;
            let mut cfg = MingenConfig::new(system, *gamma);
            cfg.order = run.order;
            cfg.assume_gb = *assume_gb;
            cfg.allow_inhomogeneous = *allow_inhomogeneous;
            cfg.seed = run.seed.resolve();
            cfg.verify = run.verify;
            cfg.small_basis = small_basis(run);
            if *allow_inhomogeneous && cfg.system.first_inhomogeneous().is_some() {
                eprintln!("note: input is not homogeneous; the result generates the ideal but need not be minimal");
            }
            let out = match mingen(&cfg) {
                Err(Error::DeltaTooSmall { delta }) => {
                    return Err(Failure {
                        code: 3,
                        message: format!(
                            "gamma = {delta} underestimates the number of minimal generators; retry with --gamma {}",
                            2 * delta
                        ),
                    })
                }
                other => other?,
            };
            let mut report = RunReport::new("mingen", &bytes, &cfg.system).with_outcome(&out);
            report.delta_or_gamma = Some(*gamma);
            report.wall_time_ms = elapsed();
            emit(cli, &report, run.out.as_deref())
        }
        Command::Verify {
            file,
            basis,
            mode,
            gamma,
            order,
            out,
        } => {
            let (bytes, system) = load(file, *order)?;
            let v = match mode {
                Mode::Solve => verify_solve(&system, basis, *order)?,
                Mode::Mingen => verify_mingen(&system, basis, *order, *gamma)?,
            };
            let mut report = RunReport::new("verify", &bytes, &system);
            let mut indices = basis.clone();
            indices.sort_unstable();
            indices.dedup();
            if let Mode::Solve = mode {
                let gb = crate::groebner::buchberger(&system.subsystem(&indices)?, *order);
                report.classification = Some(if gb.is_unit() {
                    Classification::Infeasible
                } else {
                    Classification::Feasible
                });
            }
            report.basis_indices = indices;
            report.delta_or_gamma = *gamma;
            report.primitive_calls.verify = v.calls;
            report.verified = Some(v.passed);
            report.wall_time_ms = elapsed();
            if !v.violators.is_empty() {
                eprintln!("not covered by the basis: {:?}", v.violators);
            }
            emit(cli, &report, out.as_deref())
        }
        Command::Gen(GenCommand::Coloring { n, field, out }) => {
            let system = gen_coloring(*n, parse_field(field)?)?;
            write_text(out.as_deref(), &serialize_system(&system))
        }
        Command::Gen(GenCommand::Random {
            nvars,
            d,
            m,
            rank,
            homogeneous,
            seed,
            field,
            out,
        }) => {
            let system = gen_random(&RandomSpec {
                nvars: *nvars,
                d: *d,
                m: *m,
                rank: *rank,
                homogeneous: *homogeneous,
                seed: *seed,
                field: parse_field(field)?,
            })?;
            write_text(out.as_deref(), &serialize_system(&system))
        }
        Command::Bench(BenchCommand::Scaling {
            family,
            sizes,
            seeds,
            out,
            nvars,
            d,
            rank,
            homogeneous,
        }) => {
            let family = match family {
                FamilyArg::Coloring => Family::Coloring,
                FamilyArg::Random => Family::Random {
                    nvars: *nvars,
                    d: *d,
                    rank: *rank,
                    homogeneous: *homogeneous,
                },
            };
            let rows = bench_scaling(family, sizes, *seeds, FieldSpec::default())?;
            std::fs::write(out, bench_csv(&rows)).map_err(|e| io_failure(out, e))?;
            eprintln!("wrote {} rows to {}", rows.len(), out.display());
            Ok(())
        }
    }
}
