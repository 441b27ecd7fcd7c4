//! Acceptance criteria. Prints one PASS/FAIL line per criterion and fails if
//! any gating criterion fails.
//!
//! Oracles here are independent of the library: a direct first-order
//! evaluator, a brute-force interpretation enumerator, truth tables and
//! exhaustive SAT enumeration.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use owl_unchained::corpus::{list_cases, write_case_files};
use owl_unchained::fol::{clausify, Atom, Formula, Term};
use owl_unchained::harness::{EngineConfig, Mode, RunContext, Verdict};
use owl_unchained::modelfinder::{check_non_entailment, find_model, FiniteModel, FinderConfig, ModelSearch, NonEntailment};
use owl_unchained::parser::{parse_ontology, serialize_ontology};
use owl_unchained::prover::{prove, GroundingConfig, ProofResult};
use owl_unchained::restrictions::check_global_restrictions;
use owl_unchained::sat::{solve, PropProblem, SatResult};
use owl_unchained::translator::{build_entailment_problem, build_sat_problem, emit_tptp, Translator};

const CRIT1_TOTAL: Duration = Duration::from_secs(1);
const CRIT3_PER_CASE: Duration = Duration::from_secs(10);
const CRIT4_PER_CASE: Duration = Duration::from_secs(60);
const CRIT4_MAX_SIZE: usize = 6;
const CRIT3_MAX_DEPTH: usize = 2;
const CRIT6_RANDOM: usize = 200;
const CRIT6_DOMAIN: usize = 3;
const CRIT7_CNFS: usize = 1000;
const CRIT7_MAX_VARS: u32 = 12;

const CHAIN_GOLDEN: &str =
    "! [Y0,Y1,Y2] : ( ( uri_hasParent(Y0,Y1) & uri_hasBrother(Y1,Y2) ) => uri_hasUncle(Y0,Y2) )";

/// Interpretation used by the independent evaluator.
trait Interp {
    fn size(&self) -> usize;
    fn pred(&self, name: &str, args: &[usize]) -> bool;
    fn func(&self, name: &str, args: &[usize]) -> usize;
}

fn eval_term(i: &dyn Interp, t: &Term, env: &HashMap<String, usize>) -> usize {
    match t {
        Term::Var(v) => env[v],
        Term::Const(c) => i.func(c, &[]),
        Term::App(f, args) => {
            let vals: Vec<usize> = args.iter().map(|a| eval_term(i, a, env)).collect();
            i.func(f, &vals)
        }
    }
}

fn eval(i: &dyn Interp, f: &Formula, env: &mut HashMap<String, usize>) -> bool {
    match f {
        Formula::True => true,
        Formula::False => false,
        Formula::Atom(p, args) => {
            let vals: Vec<usize> = args.iter().map(|a| eval_term(i, a, env)).collect();
            i.pred(p, &vals)
        }
        Formula::Eq(a, b) => eval_term(i, a, env) == eval_term(i, b, env),
        Formula::Not(g) => !eval(i, g, env),
        Formula::And(gs) => gs.iter().all(|g| eval(i, g, env)),
        Formula::Or(gs) => gs.iter().any(|g| eval(i, g, env)),
        Formula::Implies(a, b) => !eval(i, a, env) || eval(i, b, env),
        Formula::Iff(a, b) => eval(i, a, env) == eval(i, b, env),
        Formula::Forall(vs, g) => quantify(i, vs, g, env, true),
        Formula::Exists(vs, g) => quantify(i, vs, g, env, false),
    }
}

fn quantify(i: &dyn Interp, vs: &[String], body: &Formula, env: &mut HashMap<String, usize>, universal: bool) -> bool {
    let Some((v, rest)) = vs.split_first() else {
        return eval(i, body, env);
    };
    let saved = env.get(v).copied();
    let mut result = universal;
    for d in 0..i.size() {
        env.insert(v.clone(), d);
        if quantify(i, rest, body, env, universal) != universal {
            result = !universal;
            break;
        }
    }
    match saved {
        Some(s) => env.insert(v.clone(), s),
        None => env.remove(v),
    };
    result
}

fn holds(i: &dyn Interp, f: &Formula) -> bool {
    eval(i, f, &mut HashMap::new())
}

struct ModelInterp<'a>(&'a FiniteModel);

impl Interp for ModelInterp<'_> {
    fn size(&self) -> usize {
        self.0.size
    }
    fn pred(&self, name: &str, args: &[usize]) -> bool {
        self.0.predicates.get(name).is_some_and(|s| s.contains(args))
    }
    fn func(&self, name: &str, args: &[usize]) -> usize {
        if args.is_empty() {
            self.0.constants[name]
        } else {
            self.0.functions[name][args]
        }
    }
}

/// Signature for random formulas: unary `p`, binary `r`, constant `c`.
struct SmallInterp {
    size: usize,
    p: u32,
    r: u32,
    c: usize,
}

impl Interp for SmallInterp {
    fn size(&self) -> usize {
        self.size
    }
    fn pred(&self, name: &str, args: &[usize]) -> bool {
        match name {
            "p" => self.p >> args[0] & 1 == 1,
            "r" => self.r >> (args[0] * self.size + args[1]) & 1 == 1,
            _ => panic!("unknown predicate {name}"),
        }
    }
    fn func(&self, name: &str, _args: &[usize]) -> usize {
        assert_eq!(name, "c");
        self.c
    }
}

fn brute_force_satisfiable(f: &Formula, max_size: usize) -> bool {
    (1..=max_size).any(|n| {
        (0..1u32 << n).any(|p| {
            (0..1u32 << (n * n)).any(|r| (0..n).any(|c| holds(&SmallInterp { size: n, p, r, c }, f)))
        })
    })
}

fn random_formula(rng: &mut ChaCha8Rng, depth: usize, scope: &mut Vec<String>, next: &mut usize) -> Formula {
    let term = |rng: &mut ChaCha8Rng, scope: &Vec<String>| {
        if scope.is_empty() || rng.gen_bool(0.2) {
            Term::constant("c")
        } else {
            Term::var(scope[rng.gen_range(0..scope.len())].clone())
        }
    };
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..5) {
            0 | 1 => Formula::atom("p", vec![term(rng, scope)]),
            2 | 3 => Formula::atom("r", vec![term(rng, scope), term(rng, scope)]),
            _ => Formula::eq(term(rng, scope), term(rng, scope)),
        };
    }
    match rng.gen_range(0..7) {
        0 => Formula::not(random_formula(rng, depth - 1, scope, next)),
        k @ 1..=4 => {
            let a = random_formula(rng, depth - 1, scope, next);
            let b = random_formula(rng, depth - 1, scope, next);
            match k {
                1 => Formula::And(vec![a, b]),
                2 => Formula::Or(vec![a, b]),
                3 => Formula::implies(a, b),
                _ => Formula::iff(a, b),
            }
        }
        k => {
            *next += 1;
            let v = format!("X{next}");
            scope.push(v.clone());
            let body = random_formula(rng, depth - 1, scope, next);
            scope.pop();
            if k == 5 {
                Formula::Forall(vec![v], Box::new(body))
            } else {
                Formula::Exists(vec![v], Box::new(body))
            }
        }
    }
}

const ATOMS: [&str; 4] = ["a1", "a2", "a3", "a4"];

fn truth(f: &Formula, row: u32) -> bool {
    match f {
        Formula::True => true,
        Formula::False => false,
        Formula::Atom(p, _) => row >> ATOMS.iter().position(|a| a == p).unwrap() & 1 == 1,
        Formula::Not(g) => !truth(g, row),
        Formula::And(gs) => gs.iter().all(|g| truth(g, row)),
        Formula::Or(gs) => gs.iter().any(|g| truth(g, row)),
        Formula::Implies(a, b) => !truth(a, row) || truth(b, row),
        Formula::Iff(a, b) => truth(a, row) == truth(b, row),
        other => panic!("not propositional: {other}"),
    }
}

/// All formulas of connective depth ≤ 2 over four atoms with ¬ ∧ ∨ → ↔.
fn propositional_suite() -> Vec<Formula> {
    let leaves: Vec<Formula> = ATOMS.iter().map(|a| Formula::prop(*a)).collect();
    let grow = |level: &Vec<Formula>| {
        let mut next = level.clone();
        next.extend(level.iter().map(|f| Formula::Not(Box::new(f.clone()))));
        for a in level {
            for b in level {
                next.push(Formula::And(vec![a.clone(), b.clone()]));
                next.push(Formula::Or(vec![a.clone(), b.clone()]));
                next.push(Formula::Implies(Box::new(a.clone()), Box::new(b.clone())));
                next.push(Formula::Iff(Box::new(a.clone()), Box::new(b.clone())));
            }
        }
        next
    };
    grow(&grow(&leaves))
}

fn cnf_truth(cs: &owl_unchained::fol::ClauseSet, row: u32) -> bool {
    cs.clauses.iter().all(|c| {
        c.literals.iter().any(|l| match &l.atom {
            Atom::Pred(p, _) => (row >> ATOMS.iter().position(|a| a == p).unwrap() & 1 == 1) == l.positive,
            Atom::Eq(..) => panic!("equality in propositional CNF"),
        })
    })
}

fn brute_force_cnf(p: &PropProblem) -> bool {
    (0..1u32 << p.num_vars).any(|bits| {
        p.clauses.iter().all(|c| c.iter().any(|&l| (bits >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0)))
    })
}

type Check = fn() -> Result<String, String>;

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    for case in list_cases() {
        let premise = parse_ontology(&case.premise_text).map_err(|e| e.to_string())?;
        let r = check_global_restrictions(&premise);
        if r.is_owl2dl || r.kinds() != case.expected_kinds {
            return Err(format!("{}: got {:?}, expected {:?}", case.id, r.kinds(), case.expected_kinds));
        }
        let conclusion = parse_ontology(&case.conclusion_text).map_err(|e| e.to_string())?;
        if !check_global_restrictions(&conclusion).is_owl2dl {
            return Err(format!("{}: conclusion is not OWL 2 DL", case.id));
        }
        if check_global_restrictions(&premise) != r {
            return Err(format!("{}: nondeterministic report", case.id));
        }
    }
    let took = start.elapsed();
    if took >= CRIT1_TOTAL {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("12 premises violate, 12 conclusions are DL, {took:?} total"))
}

fn criterion_2() -> Result<String, String> {
    let o = parse_ontology(
        "Prefix(:=<http://example.org/family#>) Ontology( SubObjectPropertyOf( ObjectPropertyChain( :hasParent :hasBrother ) :hasUncle ) )",
    )
    .map_err(|e| e.to_string())?;
    let mut t = Translator::new();
    let body = t.translate_axiom(&o.axioms[0]).iter().map(Formula::to_string).collect::<Vec<_>>().join(" ");
    let normalized = body.split_whitespace().collect::<Vec<_>>().join(" ");
    if normalized != CHAIN_GOLDEN {
        return Err(format!("got `{normalized}`"));
    }
    let emitted = emit_tptp(&build_sat_problem(&o));
    if !emitted.contains(&format!("fof(premise_001, axiom, {CHAIN_GOLDEN}).")) {
        return Err("emitted problem lacks the golden formula".into());
    }
    Ok("chain axiom formula is bit-exact".into())
}

fn criterion_3() -> Result<String, String> {
    let mut slowest = Duration::ZERO;
    for case in list_cases() {
        let problem = build_entailment_problem(&case.premise, &case.conclusion).map_err(|e| e.to_string())?;
        let cfg = GroundingConfig {
            max_depth: CRIT3_MAX_DEPTH,
            ..GroundingConfig::default()
        };
        let start = Instant::now();
        let r = prove(&problem.axioms(), problem.conjecture().unwrap(), &cfg);
        let took = start.elapsed();
        slowest = slowest.max(took);
        match r {
            ProofResult::Theorem { depth, .. } if depth <= CRIT3_MAX_DEPTH && took < CRIT3_PER_CASE => {}
            other => return Err(format!("{}: {other:?} in {took:?}", case.id)),
        }
    }
    Ok(format!("12/12 Theorem at depth <= {CRIT3_MAX_DEPTH}, slowest {slowest:?}"))
}

fn criterion_4() -> Result<String, String> {
    let mut sizes = Vec::new();
    for case in list_cases() {
        let axioms = build_sat_problem(&case.premise).axioms();
        let cfg = FinderConfig {
            max_size: CRIT4_MAX_SIZE,
            ..FinderConfig::default()
        };
        let start = Instant::now();
        let r = find_model(&axioms, &cfg).map_err(|e| format!("{}: {e}", case.id))?;
        let took = start.elapsed();
        let ModelSearch::Found(m) = r else {
            return Err(format!("{}: {r:?}", case.id));
        };
        if took >= CRIT4_PER_CASE || m.size > CRIT4_MAX_SIZE {
            return Err(format!("{}: size {} in {took:?}", case.id, m.size));
        }
        if let Some(f) = axioms.iter().find(|f| !holds(&ModelInterp(&m), f)) {
            return Err(format!("{}: model violates {f}", case.id));
        }
        sizes.push(m.size.to_string());
    }
    Ok(format!("12/12 verified models, sizes {}", sizes.join(",")))
}

fn criterion_5() -> Result<String, String> {
    for case in list_cases() {
        let problem = build_entailment_problem(&case.premise, &case.mutant).map_err(|e| e.to_string())?;
        let (axioms, conj) = (problem.axioms(), problem.conjecture().unwrap().clone());
        if prove(&axioms, &conj, &GroundingConfig::default()).is_theorem() {
            return Err(format!("{}: prover claims the mutant", case.id));
        }
        match check_non_entailment(&axioms, &conj, &FinderConfig::default()).map_err(|e| e.to_string())? {
            NonEntailment::CounterModel(m) => {
                let i = ModelInterp(&m);
                if !axioms.iter().all(|f| holds(&i, f)) || holds(&i, &conj) {
                    return Err(format!("{}: countermodel fails independent check", case.id));
                }
            }
            other => return Err(format!("{}: {other:?}", case.id)),
        }
    }
    Ok("12/12 mutants have verified countermodels and no proof".into())
}

fn criterion_6() -> Result<String, String> {
    let suite = propositional_suite();
    for f in &suite {
        let cs = clausify(f).map_err(|e| e.to_string())?;
        if let Some(row) = (0..16).find(|&row| truth(f, row) != cnf_truth(&cs, row)) {
            return Err(format!("CNF of {f} disagrees on row {row:04b}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let cfg = FinderConfig {
        max_size: CRIT6_DOMAIN,
        ..FinderConfig::default()
    };
    let (mut sat, mut unsat) = (0, 0);
    for _ in 0..CRIT6_RANDOM {
        let f = random_formula(&mut rng, 4, &mut Vec::new(), &mut 0);
        let oracle = brute_force_satisfiable(&f, CRIT6_DOMAIN);
        let found = match find_model(std::slice::from_ref(&f), &cfg).map_err(|e| e.to_string())? {
            ModelSearch::Found(m) => {
                if !holds(&ModelInterp(&m), &f) {
                    return Err(format!("model for {f} fails independent check"));
                }
                true
            }
            ModelSearch::NoneUpTo { .. } => false,
        };
        if found != oracle {
            return Err(format!("{f}: finder {found}, brute force {oracle}"));
        }
        if oracle {
            sat += 1;
        } else {
            unsat += 1;
        }
    }
    Ok(format!(
        "{} propositional formulas match truth tables; {CRIT6_RANDOM} random formulas agree ({sat} sat, {unsat} unsat)",
        suite.len()
    ))
}

fn criterion_7() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut sat, mut unsat) = (0, 0);
    for n in 0..CRIT7_CNFS {
        let vars = rng.gen_range(1..=CRIT7_MAX_VARS);
        let ratio = rng.gen_range(1.0..5.0);
        let clauses = (0..((vars as f64 * ratio) as usize).max(1))
            .map(|_| {
                (0..rng.gen_range(2..=3))
                    .map(|_| {
                        let v = rng.gen_range(1..=vars) as i32;
                        if rng.gen_bool(0.5) { v } else { -v }
                    })
                    .collect()
            })
            .collect();
        let p = PropProblem::new(vars, clauses);
        let oracle = brute_force_cnf(&p);
        match solve(&p).map_err(|e| e.to_string())? {
            SatResult::Sat(a) if oracle && a.satisfies(&p) => sat += 1,
            SatResult::Unsat if !oracle => unsat += 1,
            other => return Err(format!("cnf #{n}: solver {other:?}, brute force {oracle}")),
        }
    }
    Ok(format!("{CRIT7_CNFS} CNFs agree ({sat} sat, {unsat} unsat)"))
}

fn criterion_8() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let files = write_case_files(dir.path(), false).map_err(|e| e.to_string())?;
    for path in &files {
        let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
        let first = parse_ontology(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let second = parse_ontology(&serialize_ontology(&first)).map_err(|e| format!("{}: {e}", path.display()))?;
        if first != second {
            return Err(format!("{} does not round-trip", path.display()));
        }
    }
    Ok(format!("{} files round-trip", files.len()))
}

fn criterion_9() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let ctx = RunContext {
        log_dir: Some(dir.path().join("runs")),
    };
    let cases = list_cases();
    let theorem = EngineConfig::external("stub-theorem", "cat {file} > /dev/null; echo '% SZS status Theorem for stub'");
    let table = ctx.run_suite(&[theorem], &cases, Mode::Entail, true);
    if table.verdicts("stub-theorem") != Some(vec![Verdict::Success; 12]) {
        return Err(format!("theorem stub row:\n{}", table.render_text(false)));
    }

    let pid_file = dir.path().join("stub.pid");
    let sleeper = EngineConfig::external(
        "stub-sleep",
        format!("sh -c 'echo $$ > {}; exec sleep 30' {{file}}", pid_file.display()),
    )
    .with_timeout(Duration::from_millis(500));
    let start = Instant::now();
    let o = ctx.run_entailment(&cases[0], &sleeper);
    if o.verdict != Verdict::Unknown || start.elapsed() > Duration::from_secs(10) {
        return Err(format!("sleeping stub: {o:?}"));
    }
    let pid = fs::read_to_string(&pid_file).map_err(|e| e.to_string())?;
    std::thread::sleep(Duration::from_millis(100));
    if process_alive(pid.trim()) {
        return Err(format!("stub process {} survived the timeout", pid.trim()));
    }
    Ok("theorem stub row all `+`; sleeping stub `?` and killed".into())
}

fn process_alive(pid: &str) -> bool {
    let stat = fs::read_to_string(Path::new("/proc").join(pid).join("stat"));
    // Zombies are dead for our purposes.
    stat.is_ok_and(|s| !s.rsplit(')').next().unwrap_or("").trim_start().starts_with('Z'))
}

fn external_prover() -> Option<String> {
    let path = std::env::var_os("PATH")?;
    for (bin, cmd) in [("eprover", "eprover --auto --tstp-format -s {file}"), ("vampire", "vampire --mode casc {file}")] {
        if std::env::split_paths(&path).any(|d| d.join(bin).is_file()) {
            return Some(cmd.to_string());
        }
    }
    None
}

#[test]
fn acceptance() {
    let criteria: [(&str, Check); 9] = [
        ("1 restriction detection", criterion_1),
        ("2 translation fidelity", criterion_2),
        ("3 entailment reproduction", criterion_3),
        ("4 satisfiability reproduction", criterion_4),
        ("5 negative controls", criterion_5),
        ("6 normal-form correctness", criterion_6),
        ("7 SAT core agreement", criterion_7),
        ("8 round-trip", criterion_8),
        ("9 external-engine path (stubs)", criterion_9),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (name, check) in criteria {
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => writeln!(err, "PASS criterion {name}: {detail}").unwrap(),
            Err(detail) => {
                writeln!(err, "FAIL criterion {name}: {detail}").unwrap();
                failed.push(name);
            }
        }
    }
    match external_prover() {
        None => writeln!(err, "SKIP criterion 9 external prover row: no eprover or vampire on PATH (not gating)").unwrap(),
        Some(cmd) => {
            let engine = EngineConfig::external("external", cmd);
            let table = RunContext::without_logs().run_suite(&[engine], &list_cases(), Mode::Entail, false);
            let row = table.verdicts("external").unwrap_or_default();
            let status = if row.iter().all(|v| *v == Verdict::Success) { "PASS" } else { "INFO" };
            let glyphs: String = row.iter().map(|v| v.glyph()).collect();
            writeln!(err, "{status} criterion 9 external prover row (not gating): {glyphs}").unwrap();
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
