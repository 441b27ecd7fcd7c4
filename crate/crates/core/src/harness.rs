//! Runs corpus problems through engines and tabulates the verdicts.
//!
//! Engines are either built in (ground prover, model finder) or external
//! TPTP reasoners invoked through a shell command template with a `{file}`
//! placeholder. External runs are classified from the last `SZS status`
//! line of their output; timeouts, crashes and missing statuses are Unknown.
//!
//! Cells use `+` (Success), `-` (Wrong) and `?` (Unknown).
//!
//! For reference, tableau-based OWL 2 DL reasoners are expected to fail this
//! suite because they refuse or weaken premises outside OWL 2 DL. The
//! pattern on the entailment grid, which this harness does not reproduce:
//!
//! | reasoner | 01–10 | 11 | 12 |
//! |----------|-------|----|----|
//! | FaCT++   | ?     | ?  | ?  |
//! | HermiT   | ?     | -  | -  |
//! | Pellet   | -     | ?  | -  |

use std::fmt;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use serde::Deserialize;
use thiserror::Error;

use crate::corpus::TestCase;
use crate::fol::Formula;
use crate::model::Ontology;
use crate::modelfinder::{check_non_entailment, find_model, FinderConfig, ModelSearch, NonEntailment};
use crate::prover::{prove, GroundingConfig};
use crate::translator::{build_entailment_problem, build_sat_problem, emit_tptp, TptpProblem};

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(300);
pub const LOG_DIR_ENV: &str = "OWL_UNCHAINED_LOG_DIR";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("engine config: {0}")]
    Config(String),
    #[error("engine `{name}`: {message}")]
    InvalidEngine { name: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Success,
    Wrong,
    Unknown,
}

impl Verdict {
    pub fn glyph(self) -> char {
        match self {
            Verdict::Success => '+',
            Verdict::Wrong => '-',
            Verdict::Unknown => '?',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Premise against conclusion; all are expected theorems.
    Entail,
    /// Premise alone; all are expected satisfiable.
    Sat,
    /// Premise against the mutant; all are expected non-entailments.
    Mutants,
}

impl Mode {
    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "entail" => Some(Mode::Entail),
            "sat" => Some(Mode::Sat),
            "mutants" => Some(Mode::Mutants),
            _ => None,
        }
    }

    fn default_success(self) -> &'static [&'static str] {
        match self {
            Mode::Entail => &["Theorem"],
            Mode::Sat => &["Satisfiable"],
            Mode::Mutants => &["CounterSatisfiable", "Satisfiable"],
        }
    }

    fn wrong(self) -> &'static [&'static str] {
        match self {
            Mode::Entail => &["CounterSatisfiable", "Satisfiable"],
            Mode::Sat => &["Unsatisfiable"],
            Mode::Mutants => &["Theorem"],
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Entail => "entail",
            Mode::Sat => "sat",
            Mode::Mutants => "mutants",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EngineKind {
    BuiltinProver(GroundingConfig),
    BuiltinModelFinder(FinderConfig),
    External { command: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct EngineConfig {
    pub name: String,
    pub kind: EngineKind,
    pub timeout: Duration,
    /// Replaces the mode's default success statuses when non-empty.
    pub success_statuses: Vec<String>,
}

impl EngineConfig {
    pub fn builtin_prover() -> EngineConfig {
        EngineConfig::new("builtin-prover", EngineKind::BuiltinProver(GroundingConfig::default()))
    }

    pub fn builtin_model_finder() -> EngineConfig {
        EngineConfig::new("builtin-modelfinder", EngineKind::BuiltinModelFinder(FinderConfig::default()))
    }

    pub fn external(name: impl Into<String>, command: impl Into<String>) -> EngineConfig {
        EngineConfig::new(name, EngineKind::External { command: command.into() })
    }

    pub fn new(name: impl Into<String>, kind: EngineKind) -> EngineConfig {
        EngineConfig {
            name: name.into(),
            kind,
            timeout: DEFAULT_TIMEOUT,
            success_statuses: Vec::new(),
        }
    }

    pub fn with_timeout(mut self, timeout: Duration) -> EngineConfig {
        self.timeout = timeout;
        self
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let invalid = |message: &str| HarnessError::InvalidEngine {
            name: self.name.clone(),
            message: message.to_string(),
        };
        if self.name.is_empty() {
            return Err(invalid("empty name"));
        }
        if let EngineKind::External { command } = &self.kind {
            if command.trim().is_empty() {
                return Err(invalid("empty command"));
            }
            if !command.contains("{file}") {
                return Err(invalid("command lacks the {file} placeholder"));
            }
        }
        Ok(())
    }

    fn classify(&self, mode: Mode, status: &str) -> Verdict {
        let success = if self.success_statuses.is_empty() {
            mode.default_success().contains(&status)
        } else {
            self.success_statuses.iter().any(|s| s == status)
        };
        if success {
            Verdict::Success
        } else if mode.wrong().contains(&status) {
            Verdict::Wrong
        } else {
            Verdict::Unknown
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    engine: Vec<RawEngine>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEngine {
    name: String,
    kind: String,
    command: Option<String>,
    timeout: Option<f64>,
    #[serde(default)]
    success_statuses: Vec<String>,
    depth: Option<usize>,
    max_size: Option<usize>,
}

/// Reads `[[engine]]` tables with keys name, kind, command, timeout
/// (seconds), success_statuses, depth and max_size.
pub fn parse_engine_config(text: &str) -> Result<Vec<EngineConfig>, HarnessError> {
    let file: ConfigFile = toml::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))?;
    let mut out = Vec::new();
    for raw in file.engine {
        let kind = match raw.kind.as_str() {
            "builtin-prover" => EngineKind::BuiltinProver(GroundingConfig {
                max_depth: raw.depth.unwrap_or(GroundingConfig::default().max_depth),
                ..GroundingConfig::default()
            }),
            "builtin-modelfinder" => EngineKind::BuiltinModelFinder(FinderConfig {
                max_size: raw.max_size.unwrap_or(FinderConfig::default().max_size),
                ..FinderConfig::default()
            }),
            "external" => EngineKind::External {
                command: raw.command.clone().unwrap_or_default(),
            },
            other => {
                return Err(HarnessError::InvalidEngine {
                    name: raw.name,
                    message: format!("unknown kind `{other}`"),
                })
            }
        };
        let timeout = match raw.timeout {
            Some(t) if !(t >= 0.0 && t.is_finite()) => {
                return Err(HarnessError::InvalidEngine {
                    name: raw.name,
                    message: format!("bad timeout {t}"),
                })
            }
            Some(t) => Duration::from_secs_f64(t),
            None => DEFAULT_TIMEOUT,
        };
        let engine = EngineConfig {
            name: raw.name,
            kind,
            timeout,
            success_statuses: raw.success_statuses,
        };
        engine.validate()?;
        if out.iter().any(|e: &EngineConfig| e.name == engine.name) {
            return Err(HarnessError::Config(format!("duplicate engine `{}`", engine.name)));
        }
        out.push(engine);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub verdict: Verdict,
    /// SZS-style status word, or `Timeout` / `Error`.
    pub raw_status: String,
    pub wall_time: Duration,
    pub engine: String,
    pub case: String,
    pub diagnostic: Option<String>,
}

/// Where external runs leave their logs.
#[derive(Debug, Clone, Default)]
pub struct RunContext {
    pub log_dir: Option<PathBuf>,
}

impl RunContext {
    /// `$OWL_UNCHAINED_LOG_DIR`, else `runs/<timestamp>` under the working directory.
    pub fn from_env() -> RunContext {
        let dir = std::env::var_os(LOG_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| {
            Path::new("runs").join(chrono::Local::now().format("%Y%m%dT%H%M%S").to_string())
        });
        RunContext { log_dir: Some(dir) }
    }

    pub fn without_logs() -> RunContext {
        RunContext { log_dir: None }
    }

    pub fn run_entailment(&self, case: &TestCase, engine: &EngineConfig) -> RunOutcome {
        self.run_ontologies(case.id, &case.premise, Some(&case.conclusion), Mode::Entail, engine)
    }

    pub fn run_mutant(&self, case: &TestCase, engine: &EngineConfig) -> RunOutcome {
        self.run_ontologies(case.id, &case.premise, Some(&case.mutant), Mode::Mutants, engine)
    }

    pub fn run_sat(&self, case_id: &str, premise: &Ontology, engine: &EngineConfig) -> RunOutcome {
        self.run_ontologies(case_id, premise, None, Mode::Sat, engine)
    }

    pub fn run_case(&self, case: &TestCase, mode: Mode, engine: &EngineConfig) -> RunOutcome {
        match mode {
            Mode::Entail => self.run_entailment(case, engine),
            Mode::Mutants => self.run_mutant(case, engine),
            Mode::Sat => self.run_sat(case.id, &case.premise, engine),
        }
    }

    fn run_ontologies(
        &self,
        case_id: &str,
        premise: &Ontology,
        conclusion: Option<&Ontology>,
        mode: Mode,
        engine: &EngineConfig,
    ) -> RunOutcome {
        let problem = match conclusion {
            None => build_sat_problem(premise),
            Some(c) => match build_entailment_problem(premise, c) {
                Ok(p) => p,
                Err(e) => {
                    return outcome(engine, case_id, "Error", Verdict::Unknown, Duration::ZERO, Some(e.to_string()))
                }
            },
        };
        self.run_problem(case_id, &problem, mode, engine)
    }

    /// Runs one engine on an already translated problem.
    pub fn run_problem(&self, case_id: &str, problem: &TptpProblem, mode: Mode, engine: &EngineConfig) -> RunOutcome {
        let start = Instant::now();
        let (status, diagnostic) = match &engine.kind {
            EngineKind::External { command } => self.run_external(case_id, problem, command, engine),
            _ => run_builtin(problem, engine),
        };
        let verdict = engine.classify(mode, &status);
        outcome(engine, case_id, &status, verdict, start.elapsed(), diagnostic)
    }

    fn run_external(
        &self,
        case_id: &str,
        problem: &TptpProblem,
        command: &str,
        engine: &EngineConfig,
    ) -> (String, Option<String>) {
        if engine.timeout.is_zero() {
            return ("Timeout".into(), Some("timeout is zero".into()));
        }
        let file = match tempfile::Builder::new().suffix(".p").tempfile() {
            Ok(f) => f,
            Err(e) => return ("Error".into(), Some(format!("temp file: {e}"))),
        };
        if let Err(e) = fs::write(file.path(), emit_tptp(problem)) {
            return ("Error".into(), Some(format!("temp file: {e}")));
        }
        let line = command.replace("{file}", &shell_quote(&file.path().to_string_lossy()));
        let run = run_with_timeout(&line, engine.timeout);
        let log = format!("$ {line}\n--- stdout\n{}\n--- stderr\n{}\n", run.stdout, run.stderr);
        let mut diagnostic = run.error.clone();
        if let Some(dir) = &self.log_dir {
            let dir = dir.join(sanitize(&engine.name));
            let written = fs::create_dir_all(&dir).and_then(|_| fs::write(dir.join(format!("{}.log", sanitize(case_id))), &log));
            if let Err(e) = written {
                diagnostic.get_or_insert(format!("cannot write log: {e}"));
            }
        }
        if run.timed_out {
            return ("Timeout".into(), diagnostic);
        }
        match last_szs_status(&run.stdout).or_else(|| last_szs_status(&run.stderr)) {
            Some(s) => (s, diagnostic),
            None => ("Unknown".into(), diagnostic.or(Some("no SZS status line".into()))),
        }
    }

    /// Runs `engines` in order until one reports a status the mode classifies
    /// as Success or Wrong. With `parallel`, all engines start at once and the
    /// first definitive answer wins.
    pub fn run_first_definitive(
        &self,
        case_id: &str,
        problem: &TptpProblem,
        mode: Mode,
        engines: &[EngineConfig],
        parallel: bool,
    ) -> Option<RunOutcome> {
        if !parallel {
            let mut last = None;
            for e in engines {
                let o = self.run_problem(case_id, problem, mode, e);
                if o.verdict != Verdict::Unknown {
                    return Some(o);
                }
                last = Some(o);
            }
            return last;
        }
        let (tx, rx) = mpsc::channel();
        for e in engines {
            let (tx, ctx, problem, e, case_id) = (tx.clone(), self.clone(), problem.clone(), e.clone(), case_id.to_string());
            thread::spawn(move || {
                let _ = tx.send(ctx.run_problem(&case_id, &problem, mode, &e));
            });
        }
        drop(tx);
        let mut last = None;
        for o in rx {
            if o.verdict != Verdict::Unknown {
                return Some(o);
            }
            last = Some(o);
        }
        last
    }
}

fn outcome(
    engine: &EngineConfig,
    case: &str,
    status: &str,
    verdict: Verdict,
    wall_time: Duration,
    diagnostic: Option<String>,
) -> RunOutcome {
    RunOutcome {
        verdict,
        raw_status: status.to_string(),
        wall_time,
        engine: engine.name.clone(),
        case: case.to_string(),
        diagnostic,
    }
}

fn run_builtin(problem: &TptpProblem, engine: &EngineConfig) -> (String, Option<String>) {
    let axioms = problem.axioms();
    let conjecture = problem.conjecture().cloned();
    let kind = engine.kind.clone();
    let (tx, rx) = mpsc::channel();
    // The worker is abandoned on timeout; the engines' own budgets bound it.
    thread::spawn(move || {
        let _ = tx.send(builtin_status(&kind, &axioms, conjecture.as_ref()));
    });
    match rx.recv_timeout(engine.timeout) {
        Ok(r) => r,
        Err(_) => ("Timeout".into(), None),
    }
}

fn builtin_status(kind: &EngineKind, axioms: &[Formula], conjecture: Option<&Formula>) -> (String, Option<String>) {
    match (kind, conjecture) {
        (EngineKind::BuiltinProver(cfg), Some(c)) => {
            let r = prove(axioms, c, cfg);
            let s = if r.is_theorem() { "Theorem" } else { "GaveUp" };
            (s.into(), None)
        }
        (EngineKind::BuiltinProver(cfg), None) => {
            let r = prove(axioms, &Formula::False, cfg);
            let s = if r.is_theorem() { "Unsatisfiable" } else { "GaveUp" };
            (s.into(), None)
        }
        (EngineKind::BuiltinModelFinder(cfg), Some(c)) => match check_non_entailment(axioms, c, cfg) {
            Ok(NonEntailment::CounterModel(_)) => ("CounterSatisfiable".into(), None),
            Ok(NonEntailment::Unknown { .. }) => ("GaveUp".into(), None),
            Err(e) => ("Error".into(), Some(e.to_string())),
        },
        (EngineKind::BuiltinModelFinder(cfg), None) => match find_model(axioms, cfg) {
            Ok(ModelSearch::Found(_)) => ("Satisfiable".into(), None),
            Ok(ModelSearch::NoneUpTo { .. }) => ("GaveUp".into(), None),
            Err(e) => ("Error".into(), Some(e.to_string())),
        },
        (EngineKind::External { .. }, _) => ("Error".into(), Some("not a builtin engine".into())),
    }
}

struct ProcessRun {
    stdout: String,
    stderr: String,
    timed_out: bool,
    error: Option<String>,
}

fn run_with_timeout(line: &str, timeout: Duration) -> ProcessRun {
    let mut cmd = Command::new("sh");
    cmd.arg("-c").arg(line).stdin(Stdio::null()).stdout(Stdio::piped()).stderr(Stdio::piped());
    #[cfg(unix)]
    {
        use std::os::unix::process::CommandExt;
        cmd.process_group(0);
    }
    let mut child = match cmd.spawn() {
        Ok(c) => c,
        Err(e) => {
            return ProcessRun {
                stdout: String::new(),
                stderr: String::new(),
                timed_out: false,
                error: Some(format!("spawn failed: {e}")),
            }
        }
    };
    let drain = |pipe: Option<Box<dyn Read + Send>>| {
        thread::spawn(move || {
            let mut buf = Vec::new();
            if let Some(mut p) = pipe {
                let _ = p.read_to_end(&mut buf);
            }
            String::from_utf8_lossy(&buf).into_owned()
        })
    };
    let out = drain(child.stdout.take().map(|p| Box::new(p) as Box<dyn Read + Send>));
    let err = drain(child.stderr.take().map(|p| Box::new(p) as Box<dyn Read + Send>));
    let deadline = Instant::now() + timeout;
    let mut timed_out = false;
    let mut error = None;
    loop {
        match child.try_wait() {
            Ok(Some(status)) => {
                if !status.success() {
                    error = Some(format!("exited with {status}"));
                }
                break;
            }
            Ok(None) if Instant::now() >= deadline => {
                timed_out = true;
                kill_group(&mut child);
                let _ = child.wait();
                break;
            }
            Ok(None) => thread::sleep(Duration::from_millis(5)),
            Err(e) => {
                error = Some(format!("wait failed: {e}"));
                kill_group(&mut child);
                let _ = child.wait();
                break;
            }
        }
    }
    ProcessRun {
        stdout: out.join().unwrap_or_default(),
        stderr: err.join().unwrap_or_default(),
        timed_out,
        error,
    }
}

fn kill_group(child: &mut std::process::Child) {
    #[cfg(unix)]
    {
        // SAFETY: kill(2) with a negative pid only signals our own process group.
        let rc = unsafe { libc::kill(-(child.id() as libc::pid_t), libc::SIGKILL) };
        if rc == 0 {
            return;
        }
    }
    let _ = child.kill();
}

fn shell_quote(s: &str) -> String {
    format!("'{}'", s.replace('\'', "'\\''"))
}

fn sanitize(s: &str) -> String {
    s.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.' { c } else { '_' })
        .collect()
}

/// Status word of the last `SZS status` line.
pub fn last_szs_status(output: &str) -> Option<String> {
    output.lines().rev().find_map(|line| {
        let rest = &line[line.find("SZS status")? + "SZS status".len()..];
        rest.split_whitespace().next().map(str::to_string)
    })
}

/// Engines × cases grid of outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultsTable {
    pub mode: Mode,
    pub cases: Vec<String>,
    pub rows: Vec<(String, Vec<RunOutcome>)>,
}

impl ResultsTable {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn verdicts(&self, engine: &str) -> Option<Vec<Verdict>> {
        self.rows
            .iter()
            .find(|(name, _)| name == engine)
            .map(|(_, cells)| cells.iter().map(|o| o.verdict).collect())
    }

    fn column_label(case: &str) -> &str {
        case.get(..2).unwrap_or(case)
    }

    /// Aligned text; `times` appends a per-engine line of wall-times in ms.
    pub fn render_text(&self, times: bool) -> String {
        if self.rows.is_empty() {
            return String::new();
        }
        let width = self.rows.iter().map(|(n, _)| n.len()).max().unwrap_or(0).max("engine".len());
        let cell = self.cases.iter().map(|c| Self::column_label(c).len()).max().unwrap_or(2).max(if times { 6 } else { 2 });
        let mut out = format!("{:width$}", "engine");
        for c in &self.cases {
            out.push_str(&format!(" {:>cell$}", Self::column_label(c)));
        }
        out.push('\n');
        for (name, cells) in &self.rows {
            out.push_str(&format!("{name:width$}"));
            for o in cells {
                out.push_str(&format!(" {:>cell$}", o.verdict.glyph()));
            }
            out.push('\n');
            if times {
                out.push_str(&format!("{:width$}", ""));
                for o in cells {
                    out.push_str(&format!(" {:>cell$}", o.wall_time.as_millis()));
                }
                out.push('\n');
            }
        }
        out
    }

    /// Tab-separated: header `engine` plus case ids, one row per engine.
    pub fn render_tsv(&self, times: bool) -> String {
        let mut out = String::from("engine");
        for c in &self.cases {
            out.push('\t');
            out.push_str(c);
        }
        out.push('\n');
        for (name, cells) in &self.rows {
            out.push_str(name);
            for o in cells {
                out.push('\t');
                out.push(o.verdict.glyph());
                if times {
                    out.push_str(&format!(" {}ms", o.wall_time.as_millis()));
                }
            }
            out.push('\n');
        }
        out
    }
}

pub fn run_suite(engines: &[EngineConfig], cases: &[TestCase], mode: Mode) -> ResultsTable {
    RunContext::from_env().run_suite(engines, cases, mode, false)
}

impl RunContext {
    /// With `parallel`, each (engine, case) pair runs on its own thread.
    pub fn run_suite(&self, engines: &[EngineConfig], cases: &[TestCase], mode: Mode, parallel: bool) -> ResultsTable {
        let rows = if parallel {
            thread::scope(|s| {
                let handles: Vec<Vec<_>> = engines
                    .iter()
                    .map(|e| cases.iter().map(|c| s.spawn(move || self.run_case(c, mode, e))).collect())
                    .collect();
                engines
                    .iter()
                    .zip(handles)
                    .map(|(e, hs)| (e.name.clone(), hs.into_iter().map(|h| h.join().expect("run thread")).collect()))
                    .collect()
            })
        } else {
            engines
                .iter()
                .map(|e| (e.name.clone(), cases.iter().map(|c| self.run_case(c, mode, e)).collect()))
                .collect()
        };
        ResultsTable {
            mode,
            cases: cases.iter().map(|c| c.id.to_string()).collect(),
            rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{get_case, list_cases};
    use crate::parser::parse_ontology;

    fn quiet() -> RunContext {
        RunContext::without_logs()
    }

    #[test]
    fn szs_last_line_wins() {
        let out = "% SZS status GaveUp for x\nnoise\n# SZS status Theorem for x\n";
        assert_eq!(last_szs_status(out).as_deref(), Some("Theorem"));
        assert_eq!(last_szs_status("nothing here"), None);
    }

    #[test]
    fn classification_by_mode() {
        let e = EngineConfig::builtin_prover();
        assert_eq!(e.classify(Mode::Entail, "Theorem"), Verdict::Success);
        assert_eq!(e.classify(Mode::Entail, "CounterSatisfiable"), Verdict::Wrong);
        assert_eq!(e.classify(Mode::Entail, "Timeout"), Verdict::Unknown);
        assert_eq!(e.classify(Mode::Sat, "Unsatisfiable"), Verdict::Wrong);
        assert_eq!(e.classify(Mode::Mutants, "Theorem"), Verdict::Wrong);
        assert_eq!(e.classify(Mode::Mutants, "CounterSatisfiable"), Verdict::Success);
        let custom = EngineConfig {
            success_statuses: vec!["ContradictoryAxioms".into()],
            ..EngineConfig::builtin_prover()
        };
        assert_eq!(custom.classify(Mode::Entail, "ContradictoryAxioms"), Verdict::Success);
        assert_eq!(custom.classify(Mode::Entail, "Theorem"), Verdict::Unknown);
    }

    #[test]
    fn builtin_entailment_and_mutant() {
        let case = get_case("01").unwrap();
        let o = quiet().run_entailment(&case, &EngineConfig::builtin_prover());
        assert_eq!((o.verdict, o.raw_status.as_str()), (Verdict::Success, "Theorem"));
        let finder = EngineConfig::builtin_model_finder();
        assert_eq!(quiet().run_entailment(&case, &finder).verdict, Verdict::Unknown);
        let m = quiet().run_mutant(&case, &finder);
        assert_eq!((m.verdict, m.raw_status.as_str()), (Verdict::Success, "CounterSatisfiable"));
    }

    #[test]
    fn builtin_sat() {
        let finder = EngineConfig::builtin_model_finder();
        let case = get_case("05").unwrap();
        assert_eq!(quiet().run_sat(case.id, &case.premise, &finder).verdict, Verdict::Success);
        let empty = Ontology::default();
        assert_eq!(quiet().run_sat("empty", &empty, &finder).verdict, Verdict::Success);
        let unsat = parse_ontology(
            "Prefix(:=<http://example.org/family#>) Ontology( ReflexiveObjectProperty( :p ) IrreflexiveObjectProperty( :p ) )",
        )
        .unwrap();
        assert_eq!(quiet().run_sat("unsat", &unsat, &finder).verdict, Verdict::Unknown);
        let prover = EngineConfig::builtin_prover();
        assert_eq!(quiet().run_sat("unsat", &unsat, &prover).verdict, Verdict::Wrong);
    }

    #[test]
    fn misconfigured_external_is_unknown() {
        let case = get_case("01").unwrap();
        let e = EngineConfig::external("missing", "/nonexistent/prover-binary {file}").with_timeout(Duration::from_secs(5));
        let o = quiet().run_entailment(&case, &e);
        assert_eq!(o.verdict, Verdict::Unknown);
        assert!(o.diagnostic.is_some());
    }

    #[test]
    fn zero_timeout_skips_spawn() {
        let case = get_case("01").unwrap();
        let e = EngineConfig::external("stub", "echo 'SZS status Theorem' {file}").with_timeout(Duration::ZERO);
        let o = quiet().run_entailment(&case, &e);
        assert_eq!((o.verdict, o.raw_status.as_str()), (Verdict::Unknown, "Timeout"));
    }

    #[test]
    fn external_logs_are_written() {
        let dir = tempfile::tempdir().unwrap();
        let ctx = RunContext {
            log_dir: Some(dir.path().to_path_buf()),
        };
        let case = get_case("02").unwrap();
        let e = EngineConfig::external("cat stub", "cat {file}; echo '% SZS status Theorem'").with_timeout(Duration::from_secs(10));
        let o = ctx.run_entailment(&case, &e);
        assert_eq!(o.verdict, Verdict::Success);
        let log = fs::read_to_string(dir.path().join("cat_stub").join(format!("{}.log", case.id))).unwrap();
        assert!(log.contains("fof(conclusion, conjecture,"));
    }

    #[test]
    fn config_file() {
        let engines = parse_engine_config(
            r#"
            [[engine]]
            name = "prover"
            kind = "builtin-prover"
            depth = 1

            [[engine]]
            name = "eprover"
            kind = "external"
            command = "eprover --auto {file}"
            timeout = 2.5
            "#,
        )
        .unwrap();
        assert_eq!(engines.len(), 2);
        assert!(matches!(&engines[0].kind, EngineKind::BuiltinProver(c) if c.max_depth == 1));
        assert_eq!(engines[1].timeout, Duration::from_millis(2500));
        assert!(parse_engine_config("").unwrap().is_empty());
        assert!(parse_engine_config("[[engine]]\nname = \"x\"\nkind = \"external\"\ncommand = \"prove\"").is_err());
        assert!(parse_engine_config("[[engine]]\nname = \"x\"\nkind = \"oracle\"").is_err());
        assert!(parse_engine_config("[[engine]]\nname = \"x\"\nkind = \"builtin-prover\"\ncolour = 1").is_err());
    }

    #[test]
    fn suite_tables() {
        let cases = list_cases();
        let engines = [EngineConfig::builtin_prover(), EngineConfig::builtin_model_finder()];
        let t = quiet().run_suite(&engines, &cases, Mode::Entail, true);
        assert_eq!(t.verdicts("builtin-prover").unwrap(), vec![Verdict::Success; 12]);
        assert_eq!(t.verdicts("builtin-modelfinder").unwrap(), vec![Verdict::Unknown; 12]);
        let text = t.render_text(false);
        assert_eq!(text.lines().nth(1).unwrap(), format!("{:19}{}", "builtin-prover", "  +".repeat(12)));
        let tsv = t.render_tsv(false);
        assert!(tsv.starts_with("engine\t01AsymmetricTransitive\t"));
        assert_eq!(tsv.lines().nth(1).unwrap(), format!("builtin-prover{}", "\t+".repeat(12)));
        let empty = quiet().run_suite(&[], &cases, Mode::Sat, false);
        assert!(empty.is_empty());
        assert_eq!(empty.render_text(true), "");
    }

    #[test]
    fn first_definitive_answer() {
        let case = get_case("03").unwrap();
        let problem = build_entailment_problem(&case.premise, &case.mutant).unwrap();
        let engines = [EngineConfig::builtin_prover(), EngineConfig::builtin_model_finder()];
        for parallel in [false, true] {
            let o = quiet().run_first_definitive(case.id, &problem, Mode::Mutants, &engines, parallel).unwrap();
            assert_eq!((o.engine.as_str(), o.verdict), ("builtin-modelfinder", Verdict::Success));
        }
    }
}
