//! Bounded Herbrand grounding prover.
//!
//! The axioms and the negated conjecture are clausified once, then every
//! clause is instantiated over the ground terms of increasing nesting depth
//! and handed to the SAT core. An unsatisfiable ground instance set refutes the
//! clause set, so `Theorem` answers are sound; `Unknown` means no refutation
//! was found within the depth and clause budgets.
//!
//! Ground equality atoms are kept in one orientation and `t = t` is true.
//! Transitivity and congruence instances over the ground term set are added
//! only when a positive equality literal occurs; with equality in negative
//! positions only, the identity interpretation is always available.

use std::collections::HashMap;

use crate::fol::{ground_terms, Atom, Clause, ClauseSet, Clausifier, FolError, Formula, Term};
use crate::sat::{solve_with, PropProblem, SatError, SatResult, SolverConfig};

pub const DEFAULT_MAX_DEPTH: usize = 2;
pub const DEFAULT_GROUND_CLAUSE_BUDGET: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundingConfig {
    pub max_depth: usize,
    pub clause_budget: usize,
    /// `None` adds equality axioms exactly when positive equality occurs.
    pub congruence: Option<bool>,
    pub solver: SolverConfig,
}

impl Default for GroundingConfig {
    fn default() -> Self {
        GroundingConfig {
            max_depth: DEFAULT_MAX_DEPTH,
            clause_budget: DEFAULT_GROUND_CLAUSE_BUDGET,
            congruence: None,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofResult {
    Theorem { depth: usize, ground_clauses: usize },
    Unknown { reason: String },
}

impl ProofResult {
    pub fn is_theorem(&self) -> bool {
        matches!(self, ProofResult::Theorem { .. })
    }
}

/// Where a propositional clause came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseOrigin {
    /// Instance of first-order clause `clause` under `substitution`.
    Instance { clause: usize, substitution: Vec<(String, Term)> },
    Transitivity,
    PredicateCongruence(String),
    FunctionCongruence(String),
}

/// A propositional encoding with the tables needed to read it back.
#[derive(Debug, Clone, Default)]
pub struct GroundEncoding {
    pub problem: PropProblem,
    /// `atoms[v - 1]` is the ground atom of propositional variable `v`.
    pub atoms: Vec<Atom>,
    pub origins: Vec<ClauseOrigin>,
    pub clauses: ClauseSet,
    pub terms: Vec<Term>,
    pub depth: usize,
}

impl GroundEncoding {
    pub fn atom_of(&self, var: u32) -> &Atom {
        &self.atoms[var as usize - 1]
    }
}

/// Ground clause budget exceeded.
#[derive(Debug, Clone, PartialEq, Eq)]
struct GroundError(usize);

/// Clausifies `axioms ∧ ¬conjecture` with one shared Skolem numbering.
pub fn refutation_clauses(axioms: &[Formula], conjecture: &Formula) -> Result<ClauseSet, FolError> {
    let mut clausifier = Clausifier::default();
    let mut cs = ClauseSet::default();
    for a in axioms {
        clausifier.add(a, &mut cs)?;
    }
    clausifier.add(&Formula::not(conjecture.clone()), &mut cs)?;
    Ok(cs)
}

pub fn prove(axioms: &[Formula], conjecture: &Formula, cfg: &GroundingConfig) -> ProofResult {
    let cs = match refutation_clauses(axioms, conjecture) {
        Ok(cs) => cs,
        Err(e) => return ProofResult::Unknown { reason: e.to_string() },
    };
    let mut previous_terms = 0;
    for depth in 0..=cfg.max_depth {
        let terms = ground_terms(&cs, depth);
        // without functions deeper levels add nothing
        if depth > 0 && terms.len() == previous_terms {
            break;
        }
        previous_terms = terms.len();
        let enc = match ground(&cs, terms, depth, cfg) {
            Ok(enc) => enc,
            Err(GroundError(n)) => {
                return ProofResult::Unknown {
                    reason: format!("ground clause budget of {n} exceeded at depth {depth}"),
                }
            }
        };
        match solve_with(&enc.problem, cfg.solver) {
            Ok(SatResult::Unsat) => {
                return ProofResult::Theorem {
                    depth,
                    ground_clauses: enc.problem.clauses.len(),
                }
            }
            Ok(SatResult::Sat(_)) => {}
            Err(e @ SatError::ResourceBudgetExceeded(_)) => {
                return ProofResult::Unknown {
                    reason: format!("{e} at depth {depth}"),
                }
            }
            Err(e) => unreachable!("encoder produced an invalid problem: {e}"),
        }
    }
    ProofResult::Unknown {
        reason: format!("no refutation up to depth {}", cfg.max_depth),
    }
}

/// The propositional encoding at `cfg.max_depth`.
pub fn check_ground_core(axioms: &[Formula], conjecture: &Formula, cfg: &GroundingConfig) -> Result<GroundEncoding, String> {
    let cs = refutation_clauses(axioms, conjecture).map_err(|e| e.to_string())?;
    let terms = ground_terms(&cs, cfg.max_depth);
    ground(&cs, terms, cfg.max_depth, cfg).map_err(|GroundError(n)| format!("ground clause budget of {n} exceeded"))
}

struct Encoder {
    index: HashMap<Atom, u32>,
    atoms: Vec<Atom>,
    clauses: Vec<Vec<i32>>,
    origins: Vec<ClauseOrigin>,
    budget: usize,
}

enum GroundLit {
    True,
    False,
    Lit(i32),
}

impl Encoder {
    fn var(&mut self, atom: Atom) -> u32 {
        if let Some(&v) = self.index.get(&atom) {
            return v;
        }
        self.atoms.push(atom.clone());
        let v = self.atoms.len() as u32;
        self.index.insert(atom, v);
        v
    }

    fn literal(&mut self, positive: bool, atom: Atom) -> GroundLit {
        let atom = match atom {
            Atom::Eq(a, b) if a == b => {
                return if positive { GroundLit::True } else { GroundLit::False };
            }
            Atom::Eq(a, b) if b < a => Atom::Eq(b, a),
            other => other,
        };
        let v = self.var(atom) as i32;
        GroundLit::Lit(if positive { v } else { -v })
    }

    fn eq_lit(&mut self, positive: bool, a: &Term, b: &Term) -> GroundLit {
        self.literal(positive, Atom::Eq(a.clone(), b.clone()))
    }

    fn add(&mut self, lits: impl IntoIterator<Item = GroundLit>, origin: impl FnOnce() -> ClauseOrigin) -> Result<(), GroundError> {
        let mut clause = Vec::new();
        for l in lits {
            match l {
                GroundLit::True => return Ok(()),
                GroundLit::False => {}
                GroundLit::Lit(x) => {
                    if clause.contains(&-x) {
                        return Ok(());
                    }
                    if !clause.contains(&x) {
                        clause.push(x);
                    }
                }
            }
        }
        if self.clauses.len() >= self.budget {
            return Err(GroundError(self.budget));
        }
        self.clauses.push(clause);
        self.origins.push(origin());
        Ok(())
    }
}

fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(k as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut code| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        t
    })
}

fn ground(cs: &ClauseSet, terms: Vec<Term>, depth: usize, cfg: &GroundingConfig) -> Result<GroundEncoding, GroundError> {
    let mut enc = Encoder {
        index: HashMap::new(),
        atoms: Vec::new(),
        clauses: Vec::new(),
        origins: Vec::new(),
        budget: cfg.clause_budget,
    };
    let n = terms.len();
    for (ci, clause) in cs.clauses.iter().enumerate() {
        let vars = clause.vars();
        let instances = n.checked_pow(vars.len() as u32).unwrap_or(usize::MAX);
        if instances > cfg.clause_budget.saturating_sub(enc.clauses.len()) {
            return Err(GroundError(cfg.clause_budget));
        }
        for tuple in tuples(n, vars.len()) {
            let sub: HashMap<String, Term> = vars.iter().cloned().zip(tuple.iter().map(|&i| terms[i].clone())).collect();
            instantiate(&mut enc, ci, clause, &vars, &sub)?;
        }
    }
    if cfg.congruence.unwrap_or_else(|| cs.has_positive_equality()) {
        equality_axioms(&mut enc, cs, &terms)?;
    }
    Ok(GroundEncoding {
        problem: PropProblem::new(enc.atoms.len() as u32, enc.clauses),
        atoms: enc.atoms,
        origins: enc.origins,
        clauses: cs.clone(),
        terms,
        depth,
    })
}

fn instantiate(enc: &mut Encoder, ci: usize, clause: &Clause, vars: &[String], sub: &HashMap<String, Term>) -> Result<(), GroundError> {
    let lits: Vec<GroundLit> = clause
        .literals
        .iter()
        .map(|l| enc.literal(l.positive, l.atom.substitute(sub)))
        .collect();
    enc.add(lits, || ClauseOrigin::Instance {
        clause: ci,
        substitution: vars.iter().map(|v| (v.clone(), sub[v].clone())).collect(),
    })
}

fn equality_axioms(enc: &mut Encoder, cs: &ClauseSet, terms: &[Term]) -> Result<(), GroundError> {
    let n = terms.len();
    let cubic = n.saturating_mul(n).saturating_mul(n);
    if cubic > enc.budget.saturating_sub(enc.clauses.len()) {
        return Err(GroundError(enc.budget));
    }
    for s in terms {
        for t in terms {
            for u in terms {
                if s == t || t == u || s == u {
                    continue;
                }
                let lits = [enc.eq_lit(false, s, t), enc.eq_lit(false, t, u), enc.eq_lit(true, s, u)];
                enc.add(lits, || ClauseOrigin::Transitivity)?;
            }
        }
    }
    // one-position substitution suffices given symmetry and transitivity
    for (p, &arity) in &cs.symbols.predicates {
        for args in tuples(n, arity) {
            for pos in 0..arity {
                for replacement in 0..n {
                    if replacement == args[pos] {
                        continue;
                    }
                    let from: Vec<Term> = args.iter().map(|&i| terms[i].clone()).collect();
                    let mut to = from.clone();
                    to[pos] = terms[replacement].clone();
                    let lits = [
                        enc.eq_lit(false, &from[pos], &to[pos]),
                        enc.literal(false, Atom::Pred(p.clone(), from)),
                        enc.literal(true, Atom::Pred(p.clone(), to)),
                    ];
                    enc.add(lits, || ClauseOrigin::PredicateCongruence(p.clone()))?;
                }
            }
        }
    }
    let position: HashMap<&Term, usize> = terms.iter().enumerate().map(|(i, t)| (t, i)).collect();
    for (f, &arity) in &cs.symbols.functions {
        for args in tuples(n, arity) {
            let from = Term::App(f.clone(), args.iter().map(|&i| terms[i].clone()).collect());
            if !position.contains_key(&from) {
                continue;
            }
            for pos in 0..arity {
                for replacement in 0..n {
                    if replacement == args[pos] {
                        continue;
                    }
                    let mut to_args: Vec<Term> = args.iter().map(|&i| terms[i].clone()).collect();
                    to_args[pos] = terms[replacement].clone();
                    let to = Term::App(f.clone(), to_args);
                    if !position.contains_key(&to) {
                        continue;
                    }
                    let lits = [
                        enc.eq_lit(false, &terms[args[pos]], &terms[replacement]),
                        enc.eq_lit(true, &from, &to),
                    ];
                    enc.add(lits, || ClauseOrigin::FunctionCongruence(f.clone()))?;
                }
            }
        }
    }
    Ok(())
}
