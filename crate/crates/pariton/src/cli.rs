//! The `pariton` command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::bench::{gen_family, rngame, run_bench, write_csv, Family, GenSpec, SOLVER_STACK};
use crate::game::{parse_pgsolver, write_pgsolver, ParityGame};
use crate::hpp::qp_call_bound;
use crate::oracle::{brute_force_solve, zielonka_solve, ValidatingObserver};
use crate::solve::{Algorithm, Cancel, Observer, Silent, SolveResult, Tracer};

#[derive(Parser)]
#[command(name = "pariton", version, about = "Parity game solvers based on priority promotion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game in PGSolver format and print the winner of every position.
    Solve(SolveArgs),
    /// Compare a solver against a reference and report the first disagreement.
    Verify(VerifyArgs),
    /// Generate games.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Time solvers on a set of games and write CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, default_value = "hpp")]
    algo: Algorithm,
    /// Run the state validators on every intermediate state.
    #[arg(long)]
    validate: bool,
    /// Append call statistics as one JSON line.
    #[arg(long)]
    stats: bool,
    /// Dump every intermediate state to stderr.
    #[arg(long)]
    trace: bool,
    /// Input file, or `-` for stdin.
    file: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reference {
    Zlk,
    Brute,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    against: Reference,
    #[arg(long, default_value = "hpp")]
    algo: Algorithm,
    file: String,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Seeded random game.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long = "max-prio")]
        max_prio: u32,
        #[arg(long = "min-deg", default_value_t = 2)]
        min_deg: usize,
        #[arg(long = "max-deg", default_value_t = 10)]
        max_deg: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        o: Option<PathBuf>,
    },
    /// Structured family instance.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        o: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated algorithm names.
    #[arg(long, value_delimiter = ',', default_value = "hpp,rpp,parys,zlk")]
    algos: Vec<Algorithm>,
    /// Per-solve timeout in seconds.
    #[arg(long, default_value_t = 25.0)]
    timeout: f64,
    #[arg(long)]
    reference: Option<Algorithm>,
    /// Output CSV; rows are appended when the file already exists.
    #[arg(long)]
    out: PathBuf,
    #[arg(required = true)]
    files: Vec<PathBuf>,
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Gen(g) => generate(g),
        Command::Bench(args) => bench(args),
    }
}

fn read_game(file: &str) -> Result<ParityGame> {
    let text = if file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(file).with_context(|| format!("reading {file}"))?
    };
    parse_pgsolver(&text).with_context(|| format!("parsing {file}"))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

/// Runs `f` on a thread with a stack large enough for the recursive solvers.
fn on_big_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|s| {
        std::thread::Builder::new().stack_size(SOLVER_STACK).spawn_scoped(s, f).expect("spawn solver thread").join()
    })
    .unwrap_or_else(|e| std::panic::resume_unwind(e))
}

fn run_observed<O: Observer>(game: &ParityGame, algo: Algorithm, observer: &mut O) -> SolveResult {
    algo.solve_with(game, observer, &Cancel::new()).expect("no cancellation requested")
}

fn solve(args: SolveArgs) -> Result<ExitCode> {
    let game = read_game(&args.file)?;
    let algo = args.algo;
    let (res, trace, violations) = on_big_stack(|| {
        if args.validate {
            let mut v = ValidatingObserver::new();
            let res = run_observed(&game, algo, &mut v);
            let lines: Vec<String> = v.violations.iter().chain(&v.dominion_violations).map(|(p, x)| format!("{p}: {x}")).collect();
            (res, None, lines)
        } else if args.trace {
            let mut t = Tracer::default();
            let res = run_observed(&game, algo, &mut t);
            (res, Some(t.text), Vec::new())
        } else {
            (run_observed(&game, algo, &mut Silent), None, Vec::new())
        }
    });
    if let Some(t) = trace {
        eprint!("{t}");
    }
    let mut out = String::new();
    for v in game.positions() {
        out.push_str(&format!("{} {};\n", game.id(v), res.winner(v).index()));
    }
    if args.stats {
        out.push_str(&stats_json(&game, &res));
        out.push('\n');
    }
    write_out(None, &out)?;
    if !violations.is_empty() {
        for l in &violations {
            eprintln!("violation {l}");
        }
        eprintln!("{} violations", violations.len());
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn stats_json(game: &ParityGame, res: &SolveResult) -> String {
    let s = res.stats;
    let bound = if game.is_empty() { BigUint::from(0u32) } else { qp_call_bound(game.len() as u64, game.priority_count() as u64) };
    let within = BigUint::from(s.nontrivial_sol_calls) <= bound;
    serde_json::json!({
        "calls": s.nontrivial_sol_calls,
        "hsol_iters": s.hsol_iterations,
        "promotions": s.promotions,
        "bound": bound.to_string(),
        "within_bound": within,
    })
    .to_string()
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let game = read_game(&args.file)?;
    let algo = args.algo;
    let res = on_big_stack(|| algo.solve(&game));
    let reference = match args.against {
        Reference::Zlk => on_big_stack(|| zielonka_solve(&game)),
        Reference::Brute => brute_force_solve(&game)?,
    };
    match res.first_difference(&reference) {
        None => {
            println!("agree on {} positions", game.len());
            Ok(ExitCode::SUCCESS)
        }
        Some(v) => {
            println!(
                "disagree at position {}: {} says {}, reference says {}",
                game.id(v),
                algo,
                res.winner(v).index(),
                reference.winner(v).index()
            );
            Ok(ExitCode::from(1))
        }
    }
}

fn generate(command: GenCommand) -> Result<ExitCode> {
    let (game, out) = match command {
        GenCommand::Random { n, max_prio, min_deg, max_deg, seed, o } => {
            (rngame(&GenSpec { n, max_prio, min_deg, max_deg, seed })?, o)
        }
        GenCommand::Family { name, k, o } => (gen_family(name.parse::<Family>()?, k)?, o),
    };
    write_out(out.as_deref(), &write_pgsolver(&game))?;
    Ok(ExitCode::SUCCESS)
}

fn bench(args: BenchArgs) -> Result<ExitCode> {
    if args.timeout.is_nan() || args.timeout <= 0.0 {
        bail!("timeout must be positive");
    }
    let mut games = Vec::with_capacity(args.files.len());
    for f in &args.files {
        let name = f.display().to_string();
        games.push((name.clone(), read_game(&name)?));
    }
    let records = run_bench(&games, &args.algos, Duration::from_secs_f64(args.timeout), args.reference);
    let exists = args.out.exists() && fs::metadata(&args.out)?.len() > 0;
    let file = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(&args.out)
        .with_context(|| format!("opening {}", args.out.display()))?;
    write_csv(file, &records, !exists)?;
    let disagreements = records.iter().filter(|r| r.agreed == Some(false)).count();
    eprintln!("{} records written to {}", records.len(), args.out.display());
    if disagreements > 0 {
        eprintln!("{disagreements} disagreements with the reference");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
