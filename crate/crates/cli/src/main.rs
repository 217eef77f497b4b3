use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dhcolor::bounds::f_bound;
use dhcolor::generators::{
    gen_h2_tower_with_limit, gen_perm_tower_with_limit, gen_random, paper_i, paper_r, H2_TOWER_LIMIT,
    PERM_TOWER_LIMIT,
};
use dhcolor::solver::DEFAULT_MAX_K;
use dhcolor::{
    audit, check_condition, chromatic_number, contains_pattern, fuzz, induce_good_coloring, is_proper, parse,
    serialize, verify_good_coloring, Algorithm, ChromaticResult, Condition, DirectedHypergraph, Error, FuzzConfig,
    Pattern, PatternReport, RunOptions, TieBreak,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dhcolor", version, about = "Analyze and color directed hypergraphs")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a hypergraph for a two-edge pattern or an intersection condition.
    Check(CheckArgs),
    /// Run a coloring algorithm and write the coloring.
    Color(ColorArgs),
    /// Compute the chromatic number exactly.
    Chromatic(ChromaticArgs),
    /// Write a generated hypergraph.
    Gen(GenArgs),
    /// Print the good-coloring edge bound f(n).
    Bound {
        #[arg(long)]
        n: usize,
    },
    /// Induce a good coloring from a 2→1 hypergraph and compare |E| with f(n).
    Goodcheck { file: PathBuf },
    /// Run an algorithm on random instances and check every result.
    Fuzz(FuzzArgs),
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    #[command(flatten)]
    what: CheckWhat,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CheckWhat {
    /// One of H2 I1 R3 E I0 H1 R4.
    #[arg(long)]
    pattern: Option<Pattern>,
    /// One of onehead-h1 i0-free r4-free i0r4-free lovasz h2-two-intersect tails-only-2-intersect.
    #[arg(long)]
    cond: Option<Condition>,
}

#[derive(Args)]
struct ColorArgs {
    file: PathBuf,
    /// one-head, ht3, i0-4 or i0r4-2.
    #[arg(long)]
    algo: Algorithm,
    /// Write the run trace here.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Skip the precondition check.
    #[arg(long)]
    unchecked: bool,
    /// Write the coloring here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Break one-head ties at random with this seed.
    #[arg(long)]
    tie_seed: Option<u64>,
}

#[derive(Args)]
struct ChromaticArgs {
    file: PathBuf,
    #[arg(long, default_value_t = DEFAULT_MAX_K)]
    max_k: usize,
    /// Write a minimum proper coloring here.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    PaperI,
    PaperR,
    H2Tower,
    PermTower,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    kind: Kind,
    /// Tower level.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Raise the tower level limit.
    #[arg(long)]
    max_level: Option<usize>,
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    m: usize,
    #[arg(long)]
    cond: Option<Condition>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long)]
    algo: Algorithm,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long, default_value_t = 9)]
    n_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edges of varying size (one-head and ht3).
    #[arg(long)]
    mixed: bool,
    /// Random tie-breaking in the one-head algorithm.
    #[arg(long)]
    random_ties: bool,
}

/// Exit status 1: a well-formed question with a negative answer.
const NEGATIVE: u8 = 1;
/// Exit status 2: bad input or usage.
const INVALID: u8 = 2;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) | Error::RoleConflict { .. } => NEGATIVE,
            _ => INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: INVALID,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read_text(path: &Path) -> io::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<DirectedHypergraph, Failure> {
    let text = read_text(path)?;
    parse(&text).map_err(|e| Failure {
        code: INVALID,
        message: format!("{}: {e}", path.display()),
    })
}

fn write_or_print(path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn report_json(h: &DirectedHypergraph, r: &PatternReport) -> Value {
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| {
            let common: Vec<Value> = w
                .common
                .iter()
                .map(|s| json!({"vertex": h.name(s.vertex), "first": s.first, "second": s.second}))
                .collect();
            json!({"i": w.i, "j": w.j, "common": common})
        })
        .collect();
    json!({"subject": r.subject.to_string(), "avoided": r.avoided, "witnesses": witnesses})
}

fn check(a: &CheckArgs, as_json: bool) -> Outcome {
    let h = load(&a.file)?;
    let report = match (a.what.pattern, a.what.cond) {
        (Some(p), _) => contains_pattern(&h, p)?,
        (None, Some(c)) => check_condition(&h, c),
        (None, None) => unreachable!("clap requires one of the two"),
    };
    if as_json {
        print_json(&report_json(&h, &report));
    } else {
        println!("{report}");
        for w in &report.witnesses {
            println!("{}", w.describe(&h));
        }
    }
    Ok(if report.avoided { 0 } else { NEGATIVE })
}

fn color(a: &ColorArgs, as_json: bool) -> Outcome {
    let h = load(&a.file)?;
    let opts = RunOptions {
        checked: !a.unchecked,
        ties: a.tie_seed.map_or(TieBreak::Smallest, TieBreak::Seeded),
    };
    let run = a.algo.run(&h, &opts)?;
    let proper = is_proper(&h, &run.coloring)?;
    let audit_result = audit(&run);
    if let Some(path) = &a.trace {
        fs::write(path, run.trace_text())?;
    }
    let text = run.coloring.to_text(&h)?;
    if as_json {
        let colors: serde_json::Map<String, Value> = h
            .names()
            .iter()
            .zip(run.coloring.colors())
            .map(|(n, c)| (n.clone(), json!(c.0)))
            .collect();
        let order: Vec<&str> = run.order.vertices().iter().map(|&v| run.working.name(v)).collect();
        print_json(&json!({
            "algorithm": a.algo.id(),
            "k": run.coloring.k(),
            "proper": proper,
            "colors": colors,
            "order": order,
            "audit": audit_result.as_ref().err().map(ToString::to_string),
        }));
        if let Some(p) = &a.output {
            fs::write(p, &text)?;
        }
    } else {
        write_or_print(a.output.as_deref(), &text)?;
        if a.unchecked || !proper {
            eprintln!("proper: {proper}");
        }
        if let Err(v) = &audit_result {
            eprintln!("trace audit: {v}");
        }
    }
    Ok(if proper { 0 } else { NEGATIVE })
}

fn chromatic(a: &ChromaticArgs, as_json: bool) -> Outcome {
    let h = load(&a.file)?;
    if a.max_k == 0 {
        return Err(Error::NoColors.into());
    }
    let result = chromatic_number(&h, a.max_k)?;
    if let (Some(path), ChromaticResult::Exact { witness, .. }) = (&a.witness, &result) {
        fs::write(path, witness.to_text(&h)?)?;
    }
    match (&result, as_json) {
        (ChromaticResult::Exact { chi, .. }, false) => println!("{chi}"),
        (ChromaticResult::Exceeds { max_k }, false) => println!(">{max_k}"),
        (ChromaticResult::Exact { chi, .. }, true) => print_json(&json!({"chi": chi, "max_k": a.max_k})),
        (ChromaticResult::Exceeds { max_k }, true) => print_json(&json!({"chi": null, "max_k": max_k})),
    }
    Ok(0)
}

fn generate(a: &GenArgs, as_json: bool) -> Outcome {
    let h = match a.kind {
        Kind::PaperI => paper_i(),
        Kind::PaperR => paper_r(),
        Kind::H2Tower => gen_h2_tower_with_limit(a.k, a.max_level.unwrap_or(H2_TOWER_LIMIT))?,
        Kind::PermTower => gen_perm_tower_with_limit(a.k, a.max_level.unwrap_or(PERM_TOWER_LIMIT))?,
        Kind::Random => gen_random(a.n, a.m, a.cond, a.seed)?,
    };
    let text = serialize(&h);
    if as_json {
        if let Some(p) = &a.output {
            fs::write(p, &text)?;
        }
        print_json(&json!({
            "vertices": h.vertex_count(),
            "edges": h.edge_count(),
            "text": text,
        }));
    } else {
        write_or_print(a.output.as_deref(), &text)?;
    }
    Ok(0)
}

fn goodcheck(file: &Path, as_json: bool) -> Outcome {
    let h = load(file)?;
    let n = h.vertex_count();
    let limit = f_bound(n);
    let good = induce_good_coloring(&h).and_then(|gc| verify_good_coloring(&gc));
    let (good, reason) = match good {
        Ok(g) => (g, None),
        Err(e @ Error::RoleConflict { .. }) => (false, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    let within = h.edge_count() as u64 <= limit;
    if as_json {
        print_json(&json!({
            "vertices": n,
            "edges": h.edge_count(),
            "f": limit,
            "good": good,
            "within_bound": within,
            "conflict": reason,
        }));
    } else {
        println!("|E| = {}, f({n}) = {limit}", h.edge_count());
        match reason {
            Some(r) => println!("no good coloring: {r}"),
            None => println!("good coloring: {}", if good { "valid" } else { "invalid" }),
        }
    }
    Ok(if good && within { 0 } else { NEGATIVE })
}

fn run_fuzz(a: &FuzzArgs, as_json: bool) -> Outcome {
    if a.n_min < 3 || a.n_max < a.n_min {
        return Err(Failure {
            code: INVALID,
            message: format!("need 3 <= n-min <= n-max, got {}..{}", a.n_min, a.n_max),
        });
    }
    let cfg = FuzzConfig {
        n_min: a.n_min,
        n_max: a.n_max,
        seed: a.seed,
        mixed: a.mixed,
        random_ties: a.random_ties,
        ..FuzzConfig::new(a.algo, a.trials)
    };
    let report = fuzz(&cfg);
    if as_json {
        print_json(&serde_json::to_value(&report).expect("report serializes"));
    } else {
        println!(
            "{}: {} trials, {} failures, {} edges, {} instances checked against f(n)",
            report.algorithm,
            report.trials,
            report.failures.len(),
            report.edges_total,
            report.bound_checked
        );
        for f in &report.failures {
            println!("seed {} {:?}: {}", f.seed, f.kind, f.detail);
        }
    }
    Ok(if report.passed() { 0 } else { NEGATIVE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let j = cli.json;
    let outcome = match &cli.command {
        Command::Check(a) => check(a, j),
        Command::Color(a) => color(a, j),
        Command::Chromatic(a) => chromatic(a, j),
        Command::Gen(a) => generate(a, j),
        Command::Bound { n } => {
            let f = f_bound(*n);
            if j {
                print_json(&json!({"n": n, "f": f}));
            } else {
                println!("{f}");
            }
            Ok(0)
        }
        Command::Goodcheck { file } => goodcheck(file, j),
        Command::Fuzz(a) => run_fuzz(a, j),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if j {
                print_json(&json!({"error": f.message}));
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
