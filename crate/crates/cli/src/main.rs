use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use owl_unchained::corpus::{list_cases, write_case_files};
use owl_unchained::harness::{parse_engine_config, EngineConfig, EngineKind, Mode, RunContext, RunOutcome};
use owl_unchained::model::Ontology;
use owl_unchained::parser::parse_ontology;
use owl_unchained::restrictions::check_global_restrictions;
use owl_unchained::translator::{build_entailment_problem, build_sat_problem, emit_tptp, TptpProblem};

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const INPUT_ERROR: u8 = 2;
const UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "owl-unchained", version, about = "Reason over OWL 2 ontologies beyond OWL 2 DL via first-order logic")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineChoice {
    /// Ground prover, then model finder.
    Builtin,
    Prover,
    Modelfinder,
    External,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchMode {
    Entail,
    Sat,
    Mutants,
}

#[derive(clap::Args)]
struct EngineArgs {
    #[arg(long, value_enum, default_value = "builtin")]
    engine: EngineChoice,
    /// Command template for --engine external; `{file}` is replaced by the problem path.
    #[arg(long)]
    command: Option<String>,
    /// Engine config file; overrides --engine.
    #[arg(long)]
    engines: Option<PathBuf>,
    /// Grounding depth for the built-in prover.
    #[arg(long)]
    depth: Option<usize>,
    /// Largest domain size for the built-in model finder.
    #[arg(long)]
    max_size: Option<usize>,
    /// Per-engine timeout in seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Start all engines at once; the first definitive answer wins.
    #[arg(long)]
    parallel: bool,
    /// Print `RESULT <status>` without the time field.
    #[arg(long)]
    no_times: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the OWL 2 DL global restrictions.
    CheckDl {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Emit a TPTP satisfiability problem, or an entailment problem when a conclusion is given.
    Translate {
        premise: PathBuf,
        conclusion: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether the premise entails the conclusion.
    Entail {
        premise: PathBuf,
        conclusion: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Decide whether the premise is satisfiable.
    Sat {
        premise: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Write the test corpus as `<dir>/<id>/owl2functional/*.ofn`.
    Corpus {
        dir: PathBuf,
        /// Also write each case's non-entailed mutant conclusion.
        #[arg(long)]
        mutants: bool,
    },
    /// Run every engine over every corpus case and print the verdict grid.
    Bench {
        #[arg(long)]
        engines: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "entail")]
        mode: BenchMode,
        #[arg(long)]
        no_times: bool,
        #[arg(long)]
        tsv: bool,
        #[arg(long)]
        parallel: bool,
    },
}

struct Failure(u8, String);

type CmdResult = Result<u8, Failure>;

fn input_error(message: impl Into<String>) -> Failure {
    Failure(INPUT_ERROR, message.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Ontology, Failure> {
    parse_ontology(&read(path)?).map_err(|e| input_error(format!("{}:{e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::CheckDl { file, format } => check_dl(&file, format),
        Cmd::Translate { premise, conclusion, output } => translate(&premise, conclusion.as_deref(), output.as_deref()),
        Cmd::Entail { premise, conclusion, engine } => entail(&premise, &conclusion, &engine),
        Cmd::Sat { premise, engine } => sat(&premise, &engine),
        Cmd::Corpus { dir, mutants } => corpus(&dir, mutants),
        Cmd::Bench { engines, mode, no_times, tsv, parallel } => bench(engines.as_deref(), mode, no_times, tsv, parallel),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("owl-unchained: {message}");
            ExitCode::from(code)
        }
    }
}

fn check_dl(file: &Path, format: ReportFormat) -> CmdResult {
    let report = check_global_restrictions(&load(file)?);
    print!(
        "{}",
        match format {
            ReportFormat::Text => report.render_text(),
            ReportFormat::Machine => report.render_machine(),
        }
    );
    Ok(if report.is_owl2dl { OK } else { NEGATIVE })
}

fn problem_for(premise: &Path, conclusion: Option<&Path>) -> Result<TptpProblem, Failure> {
    let p = load(premise)?;
    let name = |path: &Path| path.display().to_string();
    match conclusion {
        None => Ok(build_sat_problem(&p).with_sources(&name(premise), None)),
        Some(c) => build_entailment_problem(&p, &load(c)?)
            .map(|prob| prob.with_sources(&name(premise), Some(&name(c))))
            .map_err(|e| input_error(format!("{}: {e}", c.display()))),
    }
}

fn translate(premise: &Path, conclusion: Option<&Path>, output: Option<&Path>) -> CmdResult {
    let text = emit_tptp(&problem_for(premise, conclusion)?);
    match output {
        Some(out) => fs::write(out, text).map_err(|e| input_error(format!("{}: {e}", out.display())))?,
        None => print!("{text}"),
    }
    Ok(OK)
}

fn engines_from_args(args: &EngineArgs, builtin_order: [EngineConfig; 2]) -> Result<Vec<EngineConfig>, Failure> {
    let mut engines = match (&args.engines, args.engine) {
        (Some(path), _) => parse_engine_config(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))?,
        (None, EngineChoice::Builtin) => builtin_order.to_vec(),
        (None, EngineChoice::Prover) => vec![EngineConfig::builtin_prover()],
        (None, EngineChoice::Modelfinder) => vec![EngineConfig::builtin_model_finder()],
        (None, EngineChoice::External) => {
            let command = args.command.clone().ok_or_else(|| input_error("--engine external needs --command"))?;
            let e = EngineConfig::external("external", command);
            e.validate().map_err(|e| input_error(e.to_string()))?;
            vec![e]
        }
    };
    if let Some(t) = args.timeout {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(input_error(format!("bad timeout {t}")));
        }
        for e in &mut engines {
            e.timeout = Duration::from_secs_f64(t);
        }
    }
    for e in &mut engines {
        match &mut e.kind {
            EngineKind::BuiltinProver(cfg) => cfg.max_depth = args.depth.unwrap_or(cfg.max_depth),
            EngineKind::BuiltinModelFinder(cfg) => cfg.max_size = args.max_size.unwrap_or(cfg.max_size),
            EngineKind::External { .. } => {}
        }
    }
    Ok(engines)
}

fn report(outcome: Option<RunOutcome>, no_times: bool, codes: &[(&str, u8)]) -> CmdResult {
    let (status, millis) = match &outcome {
        Some(o) => {
            let known = codes.iter().any(|(s, _)| *s == o.raw_status);
            (if known { o.raw_status.as_str() } else { "Unknown" }, o.wall_time.as_millis())
        }
        None => ("Unknown", 0),
    };
    if let Some(o) = &outcome {
        if let Some(d) = &o.diagnostic {
            eprintln!("owl-unchained: {}: {d}", o.engine);
        }
        if status == "Unknown" {
            eprintln!("owl-unchained: {}: status {}", o.engine, o.raw_status);
        }
    }
    if no_times {
        println!("RESULT {status}");
    } else {
        println!("RESULT {status} {millis}ms");
    }
    Ok(codes.iter().find(|(s, _)| *s == status).map_or(UNKNOWN, |(_, c)| *c))
}

fn entail(premise: &Path, conclusion: &Path, args: &EngineArgs) -> CmdResult {
    let problem = problem_for(premise, Some(conclusion))?;
    let engines = engines_from_args(args, [EngineConfig::builtin_prover(), EngineConfig::builtin_model_finder()])?;
    let outcome = RunContext::from_env().run_first_definitive("entail", &problem, Mode::Entail, &engines, args.parallel);
    report(outcome, args.no_times, &[("Theorem", OK), ("CounterSatisfiable", NEGATIVE)])
}

fn sat(premise: &Path, args: &EngineArgs) -> CmdResult {
    let problem = problem_for(premise, None)?;
    let engines = engines_from_args(args, [EngineConfig::builtin_model_finder(), EngineConfig::builtin_prover()])?;
    let outcome = RunContext::from_env().run_first_definitive("sat", &problem, Mode::Sat, &engines, args.parallel);
    report(outcome, args.no_times, &[("Satisfiable", OK), ("Unsatisfiable", NEGATIVE)])
}

fn corpus(dir: &Path, mutants: bool) -> CmdResult {
    let written = write_case_files(dir, mutants).map_err(|e| input_error(e.to_string()))?;
    for path in written {
        println!("{}", path.display());
    }
    Ok(OK)
}

fn bench(config: Option<&Path>, mode: BenchMode, no_times: bool, tsv: bool, parallel: bool) -> CmdResult {
    let engines = match config {
        Some(path) => parse_engine_config(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))?,
        None => vec![EngineConfig::builtin_prover(), EngineConfig::builtin_model_finder()],
    };
    let mode = match mode {
        BenchMode::Entail => Mode::Entail,
        BenchMode::Sat => Mode::Sat,
        BenchMode::Mutants => Mode::Mutants,
    };
    let table = RunContext::from_env().run_suite(&engines, &list_cases(), mode, parallel);
    print!("{}", if tsv { table.render_tsv(!no_times) } else { table.render_text(!no_times) });
    Ok(OK)
}
