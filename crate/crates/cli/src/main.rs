//! `hankel1`: optimal rank-1 Hankel and Toeplitz approximation from the
//! command line. Reads a matrix from CSV, runs the requested solver(s),
//! and emits a text or JSON report.

mod gen;
mod parse;
mod report;

use std::fs;
use std::io::Read;
use std::sync::Mutex;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hankel1::{
    cadzow_iterate, hankel_project, solve_complex, solve_real, solve_spectral, DenseMatrix,
    FrobeniusOptions, SpectralOptions,
};
use report::Block;

#[derive(Parser)]
#[command(
    name = "hankel1",
    version,
    about = "Optimal rank-1 Hankel and Toeplitz matrix approximation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimal approximation in the Frobenius norm.
    Frobenius(RunArgs),
    /// Optimal approximation in the spectral norm (real symmetric input).
    Spectral(RunArgs),
    /// Cadzow alternating-projection baseline.
    Cadzow(RunArgs),
    /// All applicable solvers side by side.
    Compare(RunArgs),
    /// Orthogonal projection onto the Hankel subspace.
    Project(RunArgs),
    /// Deterministic test-matrix generation.
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldChoice {
    Real,
    Complex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputChoice {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Matrix CSV file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Parameter field of the Frobenius search (default: both for real
    /// input, complex otherwise).
    #[arg(long, value_enum)]
    field: Option<FieldChoice>,
    /// Bisection tolerance on the spectral error level.
    #[arg(long, default_value_t = 1e-10)]
    eps: f64,
    /// Stopping/structural tolerance.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Radial grid size of the complex search.
    #[arg(long, default_value_t = 64)]
    grid_radii: usize,
    /// Angular grid size of the complex search.
    #[arg(long, default_value_t = 256)]
    grid_angles: usize,
    /// Cadzow iteration budget.
    #[arg(long, default_value_t = 100_000)]
    max_iter: usize,
    /// Attach the full Cadzow singular-value trace.
    #[arg(long)]
    trace: bool,
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputChoice::Text)]
    output: OutputChoice,
    /// Seed for randomized helpers (accepted everywhere for uniformity).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Clone)]
struct GenArgs {
    /// Matrix family.
    #[arg(long, value_enum, default_value_t = gen::GenKind::Random)]
    kind: gen::GenKind,
    /// Row count.
    #[arg(long, default_value_t = 4)]
    rows: usize,
    /// Column count.
    #[arg(long, default_value_t = 4)]
    cols: usize,
    /// RNG seed; identical seeds give byte-identical output.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Noise amplitude for `rank1-hankel-plus-noise`.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    /// Generate complex entries.
    #[arg(long, value_enum, default_value_t = FieldChoice::Real)]
    field: FieldChoice,
    /// Output file, or `-` for stdout.
    #[arg(long, default_value = "-")]
    out: String,
}

type BlockResult = Result<Block, (String, String)>;

fn validate(args: &RunArgs) -> Result<(), (String, String)> {
    let positive = |x: f64| x.is_finite() && x > 0.0;
    if !positive(args.eps) || !positive(args.tol) {
        return Err(("config".into(), "tolerances must be positive".into()));
    }
    if args.grid_radii < 3 || args.grid_angles < 3 {
        return Err(("config".into(), "grid sizes must be at least 3".into()));
    }
    Ok(())
}

fn read_matrix(input: &str) -> Result<DenseMatrix, (String, String)> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| ("io".to_string(), e.to_string()))?;
        buf
    } else {
        fs::read_to_string(input).map_err(|e| ("io".to_string(), format!("{input}: {e}")))?
    };
    parse::parse_matrix(&text).map_err(|e| ("parse".to_string(), e))
}

fn frobenius_options(args: &RunArgs) -> FrobeniusOptions {
    FrobeniusOptions {
        grid_radii: args.grid_radii,
        grid_angles: args.grid_angles,
        tol: args.tol.min(1e-10),
        ..FrobeniusOptions::default()
    }
}

/// Frobenius blocks per the field choice: real matrices run both searches
/// by default, complex matrices only the complex one.
fn frobenius_jobs(a: &DenseMatrix, args: &RunArgs) -> Result<Vec<Job>, (String, String)> {
    let mut fields = Vec::new();
    match args.field {
        Some(FieldChoice::Real) => {
            if !a.is_real(0.0) {
                return Err((
                    "config".into(),
                    "the real parameter search requires a real matrix".into(),
                ));
            }
            fields.push(FieldChoice::Real);
        }
        Some(FieldChoice::Complex) => fields.push(FieldChoice::Complex),
        None => {
            if a.is_real(0.0) {
                fields.push(FieldChoice::Real);
            }
            fields.push(FieldChoice::Complex);
        }
    }
    let jobs = fields
        .into_iter()
        .map(|field| {
            let a = a.clone();
            let opts = frobenius_options(args);
            let job: Job = Box::new(move || {
                let sol = match field {
                    FieldChoice::Real => solve_real(&a, &opts),
                    FieldChoice::Complex => solve_complex(&a, &opts),
                }
                .map_err(|e| ("solver".to_string(), e.to_string()))?;
                Ok(report::frobenius_block(&a, &sol))
            });
            job
        })
        .collect();
    Ok(jobs)
}

fn spectral_job(a: &DenseMatrix, args: &RunArgs) -> Job {
    let a = a.clone();
    let eps = args.eps;
    Box::new(move || {
        let sol = solve_spectral(&a, eps, &SpectralOptions::default())
            .map_err(|e| ("solver".to_string(), e.to_string()))?;
        Ok(report::spectral_block(&a, &sol))
    })
}

fn cadzow_job(a: &DenseMatrix, args: &RunArgs) -> Job {
    let a = a.clone();
    let (tol, max_iter, with_trace) = (args.tol, args.max_iter, args.trace);
    Box::new(move || {
        let trace = cadzow_iterate(&a, tol, tol, max_iter)
            .map_err(|e| ("solver".to_string(), e.to_string()))?;
        Ok(report::cadzow_block(&a, &trace, with_trace))
    })
}

type Job = Box<dyn FnOnce() -> BlockResult + Send>;

/// Runs jobs with at most `HANKEL1_THREADS` worker threads (0 or 1 means
/// sequential; unset means one thread per job), preserving order.
fn run_jobs(jobs: Vec<Job>) -> Vec<BlockResult> {
    let cap = match std::env::var("HANKEL1_THREADS") {
        Ok(v) => v.parse::<usize>().unwrap_or(1).max(1),
        Err(_) => jobs.len().max(1),
    };
    if cap <= 1 || jobs.len() <= 1 {
        return jobs.into_iter().map(|j| j()).collect();
    }
    let n = jobs.len();
    let queue: Mutex<Vec<(usize, Job)>> = Mutex::new(jobs.into_iter().enumerate().collect());
    let results: Mutex<Vec<Option<BlockResult>>> = Mutex::new((0..n).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..cap.min(n) {
            scope.spawn(|| loop {
                let next = queue.lock().unwrap().pop();
                match next {
                    Some((idx, job)) => {
                        let r = job();
                        results.lock().unwrap()[idx] = Some(r);
                    }
                    None => break,
                }
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.unwrap())
        .collect()
}

/// Prints the report and exits; status 0 iff no error block.
fn finish(
    input: Option<&DenseMatrix>,
    results: Vec<BlockResult>,
    output: OutputChoice,
    t0: Instant,
) -> ! {
    let mut blocks = Vec::new();
    let mut error: Option<(String, String)> = None;
    for r in results {
        match r {
            Ok(b) => blocks.push(b),
            Err(e) => {
                error = Some(e);
                break;
            }
        }
    }
    fail_or_finish(input, blocks, error, output, t0)
}

fn fail_or_finish(
    input: Option<&DenseMatrix>,
    blocks: Vec<Block>,
    error: Option<(String, String)>,
    output: OutputChoice,
    t0: Instant,
) -> ! {
    let timing_ms = t0.elapsed().as_secs_f64() * 1e3;
    let err_ref = error.as_ref().map(|(k, m)| (k.as_str(), m.as_str()));
    let rendered = report::render(
        input,
        &blocks,
        err_ref,
        timing_ms,
        matches!(output, OutputChoice::Json),
    );
    print!("{rendered}");
    std::process::exit(if error.is_some() { 1 } else { 0 });
}

fn fail(output: OutputChoice, t0: Instant, e: (String, String)) -> ! {
    fail_or_finish(None, Vec::new(), Some(e), output, t0)
}

/// Appends a text-format cross table of solver errors.
fn comparison_table(blocks: &mut Vec<Block>) {
    let mut lines = String::from("comparison (error_F / error_2):\n");
    let mut any = false;
    for b in blocks.iter() {
        let name = b.json["name"].as_str().unwrap_or("?");
        if let (Some(ef), Some(e2)) = (
            b.json["error_frobenius"].as_f64(),
            b.json["error_spectral"].as_f64(),
        ) {
            lines.push_str(&format!("  {name:<18} {ef:.6} / {e2:.6}\n"));
            any = true;
        }
    }
    if any {
        blocks.push(Block {
            json: serde_json::json!({ "name": "comparison" }),
            text: lines,
        });
    }
}

fn main() {
    let cli = Cli::parse();
    let t0 = Instant::now();
    match cli.command {
        Command::Frobenius(args) => {
            if let Err(e) = validate(&args) {
                fail(args.output, t0, e);
            }
            let a = match read_matrix(&args.input) {
                Ok(a) => a,
                Err(e) => fail(args.output, t0, e),
            };
            let jobs = match frobenius_jobs(&a, &args) {
                Ok(j) => j,
                Err(e) => fail_or_finish(Some(&a), Vec::new(), Some(e), args.output, t0),
            };
            let results = run_jobs(jobs);
            finish(Some(&a), results, args.output, t0);
        }
        Command::Spectral(args) => {
            if let Err(e) = validate(&args) {
                fail(args.output, t0, e);
            }
            let a = match read_matrix(&args.input) {
                Ok(a) => a,
                Err(e) => fail(args.output, t0, e),
            };
            let results = run_jobs(vec![spectral_job(&a, &args)]);
            finish(Some(&a), results, args.output, t0);
        }
        Command::Cadzow(args) => {
            if let Err(e) = validate(&args) {
                fail(args.output, t0, e);
            }
            let a = match read_matrix(&args.input) {
                Ok(a) => a,
                Err(e) => fail(args.output, t0, e),
            };
            let results = run_jobs(vec![cadzow_job(&a, &args)]);
            finish(Some(&a), results, args.output, t0);
        }
        Command::Compare(args) => {
            if let Err(e) = validate(&args) {
                fail(args.output, t0, e);
            }
            let a = match read_matrix(&args.input) {
                Ok(a) => a,
                Err(e) => fail(args.output, t0, e),
            };
            let mut jobs = match frobenius_jobs(&a, &args) {
                Ok(j) => j,
                Err(e) => fail_or_finish(Some(&a), Vec::new(), Some(e), args.output, t0),
            };
            let symmetric =
                a.rows() == a.cols() && a.is_real(0.0) && a.max_asymmetry() <= args.tol.max(1e-10);
            if symmetric {
                jobs.push(spectral_job(&a, &args));
            }
            jobs.push(cadzow_job(&a, &args));
            let results = run_jobs(jobs);
            let mut blocks = Vec::new();
            let mut error = None;
            for r in results {
                match r {
                    Ok(b) => blocks.push(b),
                    Err(e) => {
                        error = Some(e);
                        break;
                    }
                }
            }
            if !symmetric && error.is_none() {
                blocks.push(report::notice_block(
                    "spectral",
                    "skipped: input is not real symmetric",
                ));
            }
            if error.is_none() {
                comparison_table(&mut blocks);
            }
            fail_or_finish(Some(&a), blocks, error, args.output, t0);
        }
        Command::Project(args) => {
            let a = match read_matrix(&args.input) {
                Ok(a) => a,
                Err(e) => fail(args.output, t0, e),
            };
            let p = hankel_project(&a);
            let csv = parse::format_matrix(&p);
            let block = report::matrix_block("project", &p, csv);
            finish(Some(&a), vec![Ok(block)], args.output, t0);
        }
        Command::Gen(args) => {
            if args.rows < 2 || args.cols < 2 {
                eprintln!("error: generated matrices need at least 2 rows and columns");
                std::process::exit(1);
            }
            let a = gen::generate(
                args.kind,
                args.rows,
                args.cols,
                args.seed,
                args.noise,
                args.field == FieldChoice::Complex,
            );
            let csv = parse::format_matrix(&a);
            if args.out == "-" {
                print!("{csv}");
            } else if let Err(e) = fs::write(&args.out, csv) {
                eprintln!("error: {}: {e}", args.out);
                std::process::exit(1);
            }
        }
    }
}
