use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context as _, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ivsoft_core::approximations::{approximate, Mode};
use ivsoft_core::audit::{
    gen_space, parse_selection, replay, run_audit, BetaPolicy, CoveringMode, GenConfig, Instance,
    Verdict,
};
use ivsoft_core::io::{
    parse_set, parse_space, serialize_space, Format, SetDocument, TargetSet, SCHEMA_VERSION,
    VERSION,
};
use ivsoft_core::{
    literal, validate_beta_covering, CoveringPolicy, IntervalValue, Kind, NeighborhoodSystem,
    SoftSpace,
};

/// Interval-valued fuzzy soft β-covering approximation spaces.
#[derive(Parser)]
#[command(name = "ivsoft", version)]
struct Cli {
    /// What to do with a membership table that is not a β-covering: `strict` or `repair:<parameter>`.
    #[arg(long, global = true, default_value = "strict")]
    policy: CoveringPolicy,

    /// Format of space documents read or written.
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Threshold β. Required for CSV input; overrides a JSON document's β; fixes β for generated spaces.
    #[arg(long, global = true)]
    beta: Option<IntervalValue>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a space document parses and is a β-covering.
    Validate { space: PathBuf },
    /// Print neighborhoods of objects, or the fuzzy grade matrix.
    Neighborhood {
        space: PathBuf,
        /// Object to report; repeatable. Defaults to every object.
        #[arg(long)]
        object: Vec<String>,
        /// Emit the full |U|×|U| matrix of SÑ_x(y) instead.
        #[arg(long)]
        matrix: bool,
    },
    /// Lower and upper approximations of a set.
    Approximate {
        space: PathBuf,
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        mode: Mode,
        /// Set document: {"mode":"fuzzy","grades":{..}} or {"mode":"crisp","members":[..]}.
        #[arg(long)]
        set: PathBuf,
        /// Evaluate straight from the definitions instead of the neighborhood matrices.
        #[arg(long)]
        literal: bool,
    },
    /// Check the theorem registry on random spaces.
    Audit(AuditArgs),
    /// Print a random β-covering space.
    GenRandom {
        #[command(flatten)]
        gen: GenArgs,
    },
}

#[derive(Args)]
struct GenArgs {
    /// Objects and parameters, as `U,A`.
    #[arg(long, default_value = "4,3", value_parser = parse_size)]
    size: (usize, usize),
    /// Grid denominator for sampled endpoints.
    #[arg(long, default_value_t = 10)]
    grid: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `reject` resamples until the covering holds; `repair` raises parameter e1.
    #[arg(long, default_value = "reject", value_parser = parse_covering)]
    covering: CoveringMode,
}

#[derive(Args)]
struct AuditArgs {
    #[command(flatten)]
    gen: GenArgs,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Comma-separated theorem ids, or `all`.
    #[arg(long, default_value = "all")]
    theorems: String,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Re-run the selected checks on a stored instance document instead of sampling.
    #[arg(long)]
    replay: Option<PathBuf>,
}

fn parse_size(s: &str) -> std::result::Result<(usize, usize), String> {
    let (u, a) = s.split_once(',').ok_or("expected U,A")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(u)?, parse(a)?))
}

fn parse_covering(s: &str) -> std::result::Result<CoveringMode, String> {
    match s {
        "reject" => Ok(CoveringMode::Reject),
        "repair" => Ok(CoveringMode::Repair),
        _ => Err("expected `reject` or `repair`".into()),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_space(cli: &Cli, path: &Path) -> Result<SoftSpace> {
    let text = read(path)?;
    parse_space(&text, cli.format, &cli.policy, cli.beta)
        .with_context(|| format!("in {}", path.display()))
}

/// Adds the version fields every JSON output carries.
fn stamped(mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("outputs are objects");
    obj.insert("version".into(), json!(VERSION));
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    body
}

/// Writes to standard output, ignoring a closed pipe.
fn out(text: &str) {
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = stdout.write_all(b"\n");
    }
}

fn emit(body: Value) {
    out(&serde_json::to_string_pretty(&stamped(body)).expect("json values serialize"));
}

fn gen_config(cli: &Cli, g: &GenArgs) -> GenConfig {
    GenConfig {
        universe_size: g.size.0,
        parameter_count: g.size.1,
        grid_denominator: g.grid,
        beta_policy: cli.beta.map_or(BetaPolicy::Random, BetaPolicy::Fixed),
        covering_policy: g.covering,
        seed: g.seed,
    }
}

fn validate(cli: &Cli, path: &Path) -> Result<u8> {
    let text = read(path)?;
    match parse_space(&text, cli.format, &cli.policy, cli.beta) {
        Ok(space) => {
            emit(json!({
                "ok": true,
                "objects": space.universe().len(),
                "parameters": space.mapping().parameters().len(),
                "beta": space.beta(),
            }));
            Ok(0)
        }
        Err(ivsoft_core::Error::NotACovering(report)) => {
            emit(json!({"ok": false, "failures": report.failures}));
            eprintln!("error: not a β-covering");
            Ok(2)
        }
        Err(e) => Err(e).with_context(|| format!("in {}", path.display())),
    }
}

fn neighborhood(cli: &Cli, path: &Path, objects: &[String], matrix: bool) -> Result<u8> {
    let space = load_space(cli, path)?;
    let sys = NeighborhoodSystem::new(&space);
    let u = space.universe();
    let empty: Vec<&str> = (0..u.len())
        .filter(|&x| sys.index_set_is_empty(x))
        .map(|x| u.name(x))
        .collect();
    if matrix {
        emit(json!({
            "beta": space.beta(),
            "objects": u.objects(),
            "matrix": sys.matrix(),
            "empty_index_set": empty,
        }));
        return Ok(0);
    }
    let names: Vec<&str> = if objects.is_empty() {
        u.objects().iter().map(String::as_str).collect()
    } else {
        objects.iter().map(String::as_str).collect()
    };
    let mut entries = serde_json::Map::new();
    for name in names {
        let x = u.position(name)?;
        entries.insert(
            name.to_string(),
            json!({
                "fuzzy": SetDocument::from_fuzzy(&sys.fuzzy_row(x)),
                "crisp": sys.crisp_row(x).members().collect::<Vec<_>>(),
                "complementary_fuzzy": SetDocument::from_fuzzy(&sys.complementary_row(x)),
                "complementary_crisp": sys.complementary_crisp_row(x).members().collect::<Vec<_>>(),
                "empty_index_set": sys.index_set_is_empty(x),
            }),
        );
    }
    emit(json!({"beta": space.beta(), "neighborhoods": entries}));
    Ok(0)
}

fn approximate_cmd(
    cli: &Cli,
    path: &Path,
    kind: Kind,
    mode: Mode,
    set: &Path,
    slow: bool,
) -> Result<u8> {
    let space = load_space(cli, path)?;
    let target = parse_set(&read(set)?, space.universe())
        .with_context(|| format!("in {}", set.display()))?;
    let (lower, upper) = match (mode, target) {
        (Mode::Fuzzy, TargetSet::Fuzzy(x)) => {
            let (lo, up) = if slow {
                (
                    literal::fuzzy_lower(&space, kind, &x)?,
                    literal::fuzzy_upper(&space, kind, &x)?,
                )
            } else {
                let pair = approximate(&NeighborhoodSystem::new(&space), kind, &x)?;
                (pair.lower, pair.upper)
            };
            (SetDocument::from_fuzzy(&lo), SetDocument::from_fuzzy(&up))
        }
        (Mode::Crisp, TargetSet::Crisp(x)) => {
            let (lo, up) = if slow {
                (
                    literal::crisp_lower(&space, kind, &x)?,
                    literal::crisp_upper(&space, kind, &x)?,
                )
            } else {
                let pair = approximate(&NeighborhoodSystem::new(&space), kind, &x)?;
                (pair.lower, pair.upper)
            };
            (SetDocument::from_crisp(&lo), SetDocument::from_crisp(&up))
        }
        (mode, _) => bail!("--mode {mode} does not match the mode of {}", set.display()),
    };
    let definable = lower == upper;
    emit(json!({
        "kind": kind.number(),
        "mode": mode,
        "lower": lower,
        "upper": upper,
        "definable": definable,
    }));
    Ok(0)
}

fn audit(cli: &Cli, args: &AuditArgs) -> Result<u8> {
    let ids = parse_selection(&args.theorems)?;
    if let Some(path) = &args.replay {
        let instance =
            Instance::from_json(&read(path)?).with_context(|| format!("in {}", path.display()))?;
        let mut fatal = false;
        let verdicts: Vec<Value> = ids
            .iter()
            .map(|id| {
                let verdict = replay(*id, &instance);
                let t = id.theorem();
                if matches!(verdict, Verdict::Fail(_))
                    && t.status.is_fatal()
                    && t.claim.is_universal()
                {
                    fatal = true;
                }
                json!({"id": t.id, "status": t.status, "claim": t.claim, "result": verdict})
            })
            .collect();
        emit(json!({"replay": verdicts}));
        return Ok(u8::from(fatal));
    }
    let config = gen_config(cli, &args.gen);
    let started = Instant::now();
    let report = run_audit(&config, &ids, args.trials)?;
    let text = report.to_json();
    match &args.out {
        Some(path) => {
            fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?
        }
        None => out(&text),
    }
    let s = &report.summary;
    eprintln!(
        "{} theorems, {} trials, {:.2}s",
        s.theorems,
        report.trials,
        started.elapsed().as_secs_f64()
    );
    for (label, ids) in [
        ("proved statement failed", &s.proved_failures),
        ("conjecture failed", &s.conjecture_failures),
        ("no witness found", &s.missing_witnesses),
    ] {
        for id in ids {
            eprintln!("{label}: {id}");
        }
    }
    Ok(u8::try_from(report.exit_code()).unwrap_or(1))
}

fn gen_random(cli: &Cli, g: &GenArgs) -> Result<u8> {
    let space = gen_space(&gen_config(cli, g))?;
    out(&serialize_space(&space, cli.format));
    debug_assert!(validate_beta_covering(space.mapping(), space.beta()).ok);
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Validate { space } => validate(cli, space),
        Command::Neighborhood {
            space,
            object,
            matrix,
        } => neighborhood(cli, space, object, *matrix),
        Command::Approximate {
            space,
            kind,
            mode,
            set,
            literal,
        } => approximate_cmd(cli, space, *kind, *mode, set, *literal),
        Command::Audit(args) => audit(cli, args),
        Command::GenRandom { gen } => gen_random(cli, gen),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
