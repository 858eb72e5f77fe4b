use std::collections::HashSet;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use resyn::canon::{canonical_if_valid, canonicalize, validate, Mode};
use resyn::config::{parse_settings, Settings};
use resyn::cost::verify_cost_equalities;
use resyn::eval::{corpus_stats, evaluate_corpus, SuiteKind};
use resyn::examplegen::{
    build_instance, dedup_corpus, read_corpus, structural_signature, write_corpus_to, Instance,
    RandomGt,
};
use resyn::synth::{synthesize, StrategySuite, Task};
use resyn::syntax::{ast_stats, parse, serialize, RegexAst};

#[derive(Parser)]
#[command(name = "resyn", version, about = "Regex synthesis from examples")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Settings file with key=value lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for corpus-level parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    Preserving,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Default,
    Identifiable,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouterArg {
    Oracle,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Heuristic,
    BaseOnly,
    SingleLevel,
}

#[derive(Subcommand)]
enum Command {
    /// Canonicalize patterns, one per line.
    Canonicalize {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
    },
    /// Run the acceptance filters on patterns, one per line.
    Validate { input: Option<PathBuf> },
    /// Build a corpus from a pattern list (or random ground truths).
    Gen {
        input: Option<PathBuf>,
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Generate this many random ground truths instead of reading patterns.
        #[arg(long)]
        random: Option<usize>,
        /// Largest AST depth of random ground truths.
        #[arg(long, default_value_t = 5)]
        max_depth: usize,
        /// Smallest AST depth of random ground truths.
        #[arg(long, default_value_t = 1)]
        min_depth: usize,
        #[arg(long, value_enum, default_value_t = Preset::Default)]
        preset: Preset,
        /// Prefix for instance ids.
        #[arg(long, default_value = "")]
        id_prefix: String,
    },
    /// Synthesize a regex from examples.
    Synth {
        #[arg(long = "pos")]
        positives: Vec<String>,
        #[arg(long = "neg")]
        negatives: Vec<String>,
        /// File with one positive per line.
        #[arg(long)]
        pos_file: Option<PathBuf>,
        /// File with one negative per line.
        #[arg(long)]
        neg_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RouterArg::Heuristic)]
        router: RouterArg,
        /// Ground truth guiding the oracle router.
        #[arg(long)]
        gt: Option<String>,
    },
    /// Exact alignment, decomposition and expression costs of strings.
    Align { input: Option<PathBuf> },
    /// Evaluate a strategy suite on a corpus.
    Eval {
        corpus: PathBuf,
        #[arg(long, value_enum, default_value_t = SuiteArg::Heuristic)]
        suite: SuiteArg,
    },
    /// Structural statistics of a corpus.
    Stats { corpus: PathBuf },
    /// Drop instances whose ground truths share a structural signature.
    Dedup {
        corpus: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Corpus(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Corpus(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Corpus(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Corpus(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn lines(text: &str) -> Vec<&str> {
    text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l)).collect()
}

fn load_corpus(path: &Path) -> Result<Vec<Instance>, Failure> {
    read_corpus(path).map_err(|e| Failure::Corpus(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Corpus(format!("{}: {e}", p.display()))),
        None => {
            let mut o = io::stdout().lock();
            o.write_all(text.as_bytes())
                .and_then(|_| o.flush())
                .map_err(|e| Failure::Corpus(e.to_string()))
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn run(cli: Cli) -> Result<(), Failure> {
    let settings = match &cli.config {
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            parse_settings(&text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?
        }
        None => Settings::default(),
    };
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let format = cli.format;

    match cli.command {
        Command::Canonicalize { input, mode } => {
            let mode = match mode {
                ModeArg::Full => Mode::Full,
                ModeArg::Preserving => Mode::Preserving,
            };
            let text = read_input(input.as_deref())?;
            let mut out = String::new();
            for p in lines(&text) {
                let result = match canonical_if_valid(p) {
                    Ok(ast) if mode == Mode::Full => Ok(serialize(&ast)),
                    Ok(_) => {
                        let raw = parse(p).expect("validated");
                        canonicalize(&raw, mode)
                            .map(|a| serialize(&a))
                            .map_err(|_| resyn::canon::Reason::Unparsable)
                    }
                    Err(r) => Err(r),
                };
                out += &match (format, result) {
                    (Format::Json, Ok(c)) => json!({"pattern": p, "canonical": c}).to_string(),
                    (Format::Json, Err(r)) => json!({"pattern": p, "rejected": r}).to_string(),
                    (Format::Csv, Ok(c)) => format!("{},{}", csv(p), csv(&c)),
                    (Format::Csv, Err(r)) => format!("{},REJECT {r}", csv(p)),
                    (Format::Table, Ok(c)) => c,
                    (Format::Table, Err(r)) => format!("REJECT {r}"),
                };
                out.push('\n');
            }
            emit(&out, None)
        }
        Command::Validate { input } => {
            let text = read_input(input.as_deref())?;
            let mut out = String::new();
            for p in lines(&text) {
                let v = validate(p);
                out += &match format {
                    Format::Json => json!({"pattern": p, "accepted": v.accepted, "reason": v.reason})
                        .to_string(),
                    Format::Csv => format!("{},{}", csv(p), v.reason),
                    Format::Table => v.reason.to_string(),
                };
                out.push('\n');
            }
            emit(&out, None)
        }
        Command::Gen {
            input,
            out,
            random,
            max_depth,
            min_depth,
            preset,
            id_prefix,
        } => {
            let mut gts = Vec::new();
            match random {
                Some(n) => {
                    if min_depth > max_depth {
                        return Err(Failure::Usage("--min-depth exceeds --max-depth".into()));
                    }
                    let g = match preset {
                        Preset::Default => RandomGt::default(),
                        Preset::Identifiable => RandomGt::identifiable(),
                    };
                    gts = random_gts(&g, n, min_depth, max_depth, cli.seed);
                }
                None => {
                    let text = read_input(input.as_deref())?;
                    for (i, p) in lines(&text).into_iter().enumerate() {
                        if p.trim().is_empty() {
                            continue;
                        }
                        match canonical_if_valid(p) {
                            Ok(ast) => gts.push(ast),
                            Err(r) => eprintln!("line {}: skipped ({r})", i + 1),
                        }
                    }
                }
            }
            let mut instances = Vec::new();
            for (i, gt) in gts.iter().enumerate() {
                match build_instance(format!("{id_prefix}{i}"), gt, &settings.instance, cli.seed.wrapping_add(i as u64)) {
                    Ok(inst) => instances.push(inst),
                    Err(e) => eprintln!("{}: skipped ({e})", serialize(gt)),
                }
            }
            let mut buf = Vec::new();
            write_corpus_to(&mut buf, &instances).map_err(|e| Failure::Corpus(e.to_string()))?;
            emit(&String::from_utf8(buf).expect("utf-8"), out.as_deref())
        }
        Command::Synth {
            mut positives,
            mut negatives,
            pos_file,
            neg_file,
            router,
            gt,
        } => {
            if let Some(p) = pos_file {
                positives.extend(lines(&read_input(Some(&p))?).iter().map(|s| s.to_string()));
            }
            if let Some(p) = neg_file {
                negatives.extend(lines(&read_input(Some(&p))?).iter().map(|s| s.to_string()));
            }
            if positives.is_empty() {
                return Err(Failure::Usage("at least one positive example is required".into()));
            }
            let cfg = &settings.synthesis;
            let mut task = Task::new(&positives, &negatives);
            let suite = match router {
                RouterArg::Heuristic => StrategySuite::heuristic(cfg),
                RouterArg::Oracle => {
                    let gt = gt.ok_or_else(|| Failure::Usage("--router oracle requires --gt".into()))?;
                    let ast = canonical_if_valid(&gt)
                        .map_err(|r| Failure::Usage(format!("--gt rejected: {r}")))?;
                    task = task.with_guide(ast);
                    StrategySuite::oracle(cfg)
                }
            };
            let start = Instant::now();
            let result = synthesize(&task, &suite, cfg);
            let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
            let text = match (&result, format) {
                (Ok(s), Format::Json) => pretty(&json!({
                    "regex": s.regex, "tree": s.tree, "elapsed_ms": elapsed_ms
                })),
                (Err(e), Format::Json) => pretty(&json!({
                    "error": e.to_string(), "elapsed_ms": elapsed_ms
                })),
                (Ok(s), Format::Csv) => format!("regex,elapsed_ms\n{},{elapsed_ms:.3}\n", csv(&serialize(&s.regex))),
                (Err(e), Format::Csv) => format!("regex,elapsed_ms\nFAILURE: {e},{elapsed_ms:.3}\n"),
                (Ok(s), Format::Table) => format!(
                    "regex    {}\nelapsed  {elapsed_ms:.3} ms\ntree     {}\n",
                    s.regex,
                    serde_json::to_string(&s.tree).expect("serializable")
                ),
                (Err(e), Format::Table) => format!("FAILURE: {e}\nelapsed  {elapsed_ms:.3} ms\n"),
            };
            emit(&text, None)
        }
        Command::Align { input } => {
            let text = read_input(input.as_deref())?;
            let strings: Vec<&str> = lines(&text);
            let report = verify_cost_equalities(&strings)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            emit(&pretty(&report), None)
        }
        Command::Eval { corpus, suite } => {
            let instances = load_corpus(&corpus)?;
            let kind = match suite {
                SuiteArg::Oracle => SuiteKind::Oracle,
                SuiteArg::Heuristic => SuiteKind::Heuristic,
                SuiteArg::BaseOnly => SuiteKind::BaseOnly,
                SuiteArg::SingleLevel => SuiteKind::SingleLevel,
            };
            let report = evaluate_corpus(&instances, kind, &settings.synthesis);
            let text = match format {
                Format::Json => pretty(&report),
                Format::Table => report.to_table(),
                Format::Csv => report.to_csv(),
            };
            emit(&text, None)
        }
        Command::Stats { corpus } => {
            let instances = load_corpus(&corpus)?;
            let stats = corpus_stats(instances.iter().map(|i| &i.gt));
            let f = |x: Option<f64>| x.map_or("n/a".to_string(), |v| format!("{v:.3}"));
            let text = match format {
                Format::Json => pretty(&stats),
                Format::Csv => {
                    let mut s = String::from("depth,instances\n");
                    for (b, n) in &stats.depth_histogram {
                        s += &format!("{b},{n}\n");
                    }
                    s
                }
                Format::Table => {
                    let mut s = format!(
                        "instances          {}\nunique structures  {}\nmean depth         {}\nmean nodes         {}\nmean unions        {}\n",
                        stats.instances,
                        stats.unique_structures,
                        f(stats.mean_depth),
                        f(stats.mean_nodes),
                        f(stats.mean_unions)
                    );
                    for (k, n) in &stats.top_level {
                        s += &format!("top {k:<14} {n}\n");
                    }
                    for (b, n) in &stats.depth_histogram {
                        s += &format!("depth {b:<12} {n}\n");
                    }
                    s
                }
            };
            emit(&text, None)
        }
        Command::Dedup { corpus, out } => {
            let instances = load_corpus(&corpus)?;
            let before = instances.len();
            let kept = dedup_corpus(instances);
            eprintln!("kept {} of {before}", kept.len());
            let mut buf = Vec::new();
            write_corpus_to(&mut buf, &kept).map_err(|e| Failure::Corpus(e.to_string()))?;
            emit(&String::from_utf8(buf).expect("utf-8"), out.as_deref())
        }
    }
}

/// Structurally distinct random ground truths with depth in the given range.
fn random_gts(g: &RandomGt, n: usize, min_depth: usize, max_depth: usize, seed: u64) -> Vec<RegexAst> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut budget = 0;
    let mut misses = 0;
    while out.len() < n && misses < 100_000 {
        budget = budget % (max_depth + 1) + 1;
        let gt = g.generate(&mut rng, budget);
        let d = ast_stats(&gt).depth;
        if (min_depth..=max_depth).contains(&d) && seen.insert(structural_signature(&gt)) {
            out.push(gt);
            misses = 0;
        } else {
            misses += 1;
        }
    }
    out
}

fn csv(field: &str) -> String {
    if field.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
