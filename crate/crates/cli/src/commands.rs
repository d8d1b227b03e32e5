use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use ytab::bench::{self, DEFAULT_KS, DEFAULT_REPETITIONS};
use ytab::bijections as bij;
use ytab::circuits::{MapId, ReductionGraph, Value};
use ytab::oracles::{self, probes, EnumerationBounds};
use ytab::verify::{self, Group, SuiteConfig, DEFAULT_SEED};
use ytab::{Partition, SkewShape};

use crate::format::{self, Format, ParseError};

#[derive(Debug, Parser)]
#[command(name = "ytab", version, about = "Young tableau bijections and their reductions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Input file (`-` for standard input); text or JSON.
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    /// Second input, appended after the first.
    #[arg(long = "in2")]
    pub input2: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long)]
    pub max_size: Option<usize>,
    #[arg(long)]
    pub max_length: Option<usize>,
    #[arg(long)]
    pub max_value: Option<usize>,
}

impl BoundArgs {
    fn over(&self, base: EnumerationBounds) -> EnumerationBounds {
        EnumerationBounds {
            max_size: self.max_size.unwrap_or(base.max_size),
            max_length: self.max_length.unwrap_or(base.max_length),
            max_value: self.max_value.unwrap_or(base.max_value),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a map to the input.
    Apply {
        map: String,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Compute a map through the cheapest circuit over another map.
    Reduce {
        map: String,
        #[arg(long)]
        via: String,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// List every tableau of a shape, or of every shape within the bounds.
    Enumerate {
        /// `λ/μ`, parts separated by spaces or commas, e.g. `3 2/1`.
        #[arg(long)]
        shape: Option<String>,
        /// Keep only LR tableaux of this weight.
        #[arg(long)]
        lr: Option<String>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Count LR tableaux and companion tableaux.
    Count {
        #[arg(value_enum)]
        what: CountKind,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Run the property suites; one JSON record per property.
    Verify {
        #[command(flatten)]
        bounds: BoundArgs,
        /// Restrict to these groups.
        #[arg(long = "group")]
        groups: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Time a map on staircase inputs of growing size.
    Bench {
        #[arg(default_value = "xiN")]
        map: String,
        /// Sizes, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_KS)]
        k: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_REPETITIONS)]
        repetitions: usize,
        /// Run through the cheapest circuit over this map.
        #[arg(long)]
        via: Option<String>,
    },
    /// Probe the agreement (1) or octahedral counting (3) questions.
    Conjecture {
        #[arg(value_parser = ["1", "3"])]
        which: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Show the reduction graph.
    Graph {
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        emit: GraphFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CountKind {
    Lr,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug)]
pub enum CliError {
    Parse { file: String, error: ParseError },
    Io(String),
    Domain(ytab::Error),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse { .. } | CliError::Io(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse { file, error } => write!(f, "ParseError: {file}: {error}"),
            CliError::Io(m) => write!(f, "IoError: {m}"),
            CliError::Domain(e) => write!(f, "{}: {e}", e.name()),
            CliError::Verification(m) => write!(f, "VerificationFailure: {m}"),
        }
    }
}

impl From<ytab::Error> for CliError {
    fn from(e: ytab::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_values(path: &PathBuf) -> CliResult<Vec<Value>> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{name}: {e}")))?
    };
    format::parse_any(&text).map_err(|error| CliError::Parse { file: name, error })
}

impl Inputs {
    /// One value, or a tuple when several blocks are given.
    fn value(&self) -> CliResult<Value> {
        let mut vs = read_values(&self.input)?;
        if let Some(p) = &self.input2 {
            vs.extend(read_values(p)?);
        }
        Ok(match vs.len() {
            1 => vs.remove(0),
            _ => Value::Tuple(vs),
        })
    }
}

fn parse_map(name: &str) -> CliResult<MapId> {
    Ok(name.parse::<MapId>()?)
}

/// The graph maps plus the symmetry helpers that are not graph nodes.
fn apply_named(name: &str, v: &Value) -> CliResult<Value> {
    let one = |f: fn(&ytab::Tableau) -> ytab::Result<ytab::Tableau>| -> CliResult<Value> {
        Ok(Value::Tableau(f(v.as_tableau()?)?))
    };
    match name {
        "rho2_prime" => one(bij::rho2_prime),
        "rho3" => one(bij::rho3),
        "gamma" => one(bij::gamma),
        "tau" => one(bij::tau),
        _ => Ok(parse_map(name)?.apply(v)?),
    }
}

fn parse_partition(s: &str) -> CliResult<Partition> {
    let parts = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| ytab::Error::InvalidPartition(format!("`{t}` in `{s}`"))))
        .collect::<ytab::Result<Vec<i64>>>()?;
    Ok(Partition::new(parts)?)
}

fn parse_shape(s: &str) -> CliResult<SkewShape> {
    let (outer, inner) = s.split_once('/').unwrap_or((s, ""));
    Ok(SkewShape::new(parse_partition(outer)?, parse_partition(inner)?)?)
}

/// Collects output; `finish` writes it to `--out` or standard output.
struct Sink {
    buf: String,
    out: Option<PathBuf>,
}

impl Sink {
    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        if !self.buf.ends_with('\n') {
            self.buf.push('\n');
        }
    }

    fn record(&mut self, v: &impl serde::Serialize) {
        self.line(serde_json::to_string(v).expect("reports serialize"));
    }

    fn finish(self) -> CliResult<()> {
        match self.out {
            Some(p) => fs::write(&p, self.buf).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
            None => io::stdout().write_all(self.buf.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
        }
    }
}

fn emit_values<'a>(sink: &mut Sink, vs: impl IntoIterator<Item = &'a Value>, fmt: Format) {
    let blocks: Vec<String> = vs.into_iter().map(|v| format::emit(v, fmt)).collect();
    let sep = if fmt == Format::Text { "\n" } else { "" };
    sink.line(blocks.join(sep));
}

pub fn run(cli: Cli) -> CliResult<()> {
    let mut sink = Sink { buf: String::new(), out: cli.out.clone() };
    let fmt = cli.format;
    let outcome = dispatch(cli.command, fmt, &mut sink);
    // Reports are written even when a verification fails.
    if outcome.is_ok() || matches!(outcome, Err(CliError::Verification(_))) {
        sink.finish()?;
    }
    outcome
}

fn dispatch(command: Command, fmt: Format, sink: &mut Sink) -> CliResult<()> {
    match command {
        Command::Apply { map, inputs } => {
            let out = apply_named(&map, &inputs.value()?)?;
            emit_values(sink, [&out], fmt);
        }
        Command::Reduce { map, via, inputs } => {
            let (source, base) = (parse_map(&map)?, parse_map(&via)?);
            let input = inputs.value()?;
            let reduction = ReductionGraph::standard().reduce(source, base)?;
            let (out, report) = reduction.run(&input)?;
            let agrees = source.apply(&input)? == out;
            emit_values(sink, [&out], fmt);
            eprintln!(
                "{}",
                json!({
                    "reduction": reduction.name,
                    "declared_cost": reduction.declared_cost,
                    "base_calls": report.base_calls,
                    "input_bits": report.input_bits,
                    "output_bits": report.output_bits,
                    "agrees": agrees,
                })
            );
            if !agrees || report.base_calls != reduction.declared_cost {
                return Err(CliError::Verification(format!("{} disagrees with {source}", reduction.name)));
            }
        }
        Command::Enumerate { shape, lr, bounds } => {
            let b = bounds.over(EnumerationBounds::default());
            let mut ts = match shape {
                Some(s) => oracles::enumerate_tableaux(&parse_shape(&s)?, b.max_value),
                None => b.tableaux(),
            };
            if let Some(nu) = lr {
                let nu = parse_partition(&nu)?;
                ts.retain(|t| t.is_lr_of_weight(&nu));
            }
            let vs: Vec<Value> = ts.into_iter().map(Value::Tableau).collect();
            if !vs.is_empty() {
                emit_values(sink, &vs, fmt);
            }
            eprintln!("{} tableaux", vs.len());
        }
        Command::Count { what: CountKind::Lr, lambda, mu, nu } => {
            let (lambda, mu, nu) = (parse_partition(&lambda)?, parse_partition(&mu)?, parse_partition(&nu)?);
            let ctx = bij::LrTriple { mu: mu.clone(), nu: nu.clone(), lambda: lambda.clone() };
            sink.record(&json!({
                "lambda": lambda.parts(),
                "mu": mu.parts(),
                "nu": nu.parts(),
                "lr": oracles::lr_coefficient(&lambda, &mu, &nu),
                "lr_swapped": oracles::lr_coefficient(&lambda, &nu, &mu),
                "cf": probes::cf_count(&ctx, false),
                "cf_star": probes::cf_count(&ctx, true),
            }));
        }
        Command::Verify { bounds, groups, seed } => {
            let mut cfg = SuiteConfig { seed, ..SuiteConfig::default() };
            cfg.bounds = bounds.over(cfg.bounds);
            if !groups.is_empty() {
                cfg.groups = groups.iter().map(|g| g.parse::<Group>()).collect::<ytab::Result<_>>()?;
            }
            let results = verify::run_suite(&cfg);
            for r in &results {
                sink.record(r);
            }
            let failed: Vec<&str> = results.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect();
            eprintln!("{} properties, {} failed", results.len(), failed.len());
            if !failed.is_empty() {
                return Err(CliError::Verification(failed.join("; ")));
            }
        }
        Command::Bench { map, k, repetitions, via } => {
            let source = parse_map(&map)?;
            let report = match via {
                Some(base) => bench::bench_reduction(&ReductionGraph::standard().reduce(source, parse_map(&base)?)?, &k, repetitions)?,
                None => bench::bench(source, &k, repetitions)?,
            };
            for row in &report.rows {
                sink.record(row);
            }
            let ratios: Vec<String> = report.ratios().iter().map(|r| format!("{r:.2}")).collect();
            eprintln!("{source}: ratios [{}] in {:.2}s", ratios.join(", "), report.total_secs);
        }
        Command::Conjecture { which, bounds } => {
            let mismatches = if which == "1" {
                let r = probes::agreement_probe(&bounds.over(EnumerationBounds::extended()));
                sink.record(&r);
                eprintln!("{} LR tableaux, {} mismatches", r.checked, r.mismatches.len());
                r.mismatches.len()
            } else {
                let r = probes::octahedral_count_probe(bounds.max_size.unwrap_or(6));
                sink.record(&r);
                eprintln!("{} quadruples, {} mismatches", r.checked, r.mismatches.len());
                r.mismatches.len()
            };
            if mismatches > 0 {
                return Err(CliError::Verification(format!("{mismatches} mismatches")));
            }
        }
        Command::Graph { emit } => {
            let g = ReductionGraph::standard();
            match emit {
                GraphFormat::Dot => sink.line(g.to_dot()),
                GraphFormat::Json => {
                    for r in g.edges() {
                        sink.record(&json!({
                            "name": r.name,
                            "source": r.source,
                            "base": r.base,
                            "cost": r.declared_cost,
                            "restricted": r.restricted,
                        }));
                    }
                    if let Some((s, t, c)) = g.max_min_cost(&ytab::circuits::CORE_MAPS) {
                        sink.record(&json!({ "max_min_cost": c, "source": s, "base": t }));
                    }
                }
            }
        }
    }
    Ok(())
}
