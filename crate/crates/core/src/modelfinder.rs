//! Finite model finding by flattening and propositional encoding.
//!
//! For each domain size `n = 1, 2, ...` the clauses are flattened so that every
//! function application `f(x̄)` is named by a fresh variable `w` through a
//! negative graph literal `f(x̄) ≠ w`, then instantiated over `{0..n-1}`.
//! Each ground predicate atom and each graph atom `f(ē) = d` is a propositional
//! variable; graph atoms get exactly-one constraints per argument tuple, and
//! equality between variables is decided during instantiation. Constants are
//! 0-ary functions. Every model found is checked against the original formulas
//! by [`evaluate`] before it is returned.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::fol::{Atom, Clause, ClauseSet, Clausifier, FolError, Formula, Term};
use crate::sat::{solve_with, PropProblem, SatError, SatResult, SolverConfig};

pub const DEFAULT_MAX_SIZE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelFinderError {
    #[error(transparent)]
    Clausification(#[from] FolError),
    #[error("model at size {size} fails direct evaluation of formula {formula}")]
    VerificationFailed { size: usize, formula: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinderConfig {
    pub max_size: usize,
    /// Restricts the i-th constant to elements `0..=i`.
    pub symmetry_breaking: bool,
    pub solver: SolverConfig,
}

impl Default for FinderConfig {
    fn default() -> Self {
        FinderConfig {
            max_size: DEFAULT_MAX_SIZE,
            symmetry_breaking: false,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiniteModel {
    pub size: usize,
    pub predicates: BTreeMap<String, BTreeSet<Vec<usize>>>,
    pub functions: BTreeMap<String, BTreeMap<Vec<usize>, usize>>,
    pub constants: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSearch {
    Found(FiniteModel),
    /// No model up to `max_size`; `budget_exhausted` marks sizes skipped by the SAT budget.
    NoneUpTo { max_size: usize, budget_exhausted: bool },
}

impl ModelSearch {
    pub fn model(&self) -> Option<&FiniteModel> {
        match self {
            ModelSearch::Found(m) => Some(m),
            ModelSearch::NoneUpTo { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonEntailment {
    CounterModel(FiniteModel),
    Unknown { budget_exhausted: bool },
}

pub fn find_model(axioms: &[Formula], cfg: &FinderConfig) -> Result<ModelSearch, ModelFinderError> {
    let mut clausifier = Clausifier::default();
    let mut cs = ClauseSet::default();
    for a in axioms {
        clausifier.add(a, &mut cs)?;
    }
    let mut signature = cs.symbols.clone();
    for a in axioms {
        signature.merge(&a.symbols());
    }
    let mut functions: BTreeMap<String, usize> = signature.functions.clone();
    for c in &signature.constants {
        functions.insert(c.clone(), 0);
    }
    let flat: Vec<FlatClause> = cs.clauses.iter().map(flatten).collect();

    let mut budget_exhausted = false;
    for size in 1..=cfg.max_size {
        let enc = encode(&flat, &signature.predicates, &functions, size, cfg.symmetry_breaking);
        match solve_with(&enc.problem, cfg.solver) {
            Ok(SatResult::Sat(assignment)) => {
                let model = enc.decode(size, |v| assignment.value(v), &signature.predicates, &functions, &signature.constants);
                for (i, a) in axioms.iter().enumerate() {
                    if !evaluate(&model, a) {
                        return Err(ModelFinderError::VerificationFailed { size, formula: i });
                    }
                }
                return Ok(ModelSearch::Found(model));
            }
            Ok(SatResult::Unsat) => {}
            Err(SatError::ResourceBudgetExceeded(_)) => budget_exhausted = true,
            Err(e) => unreachable!("encoder produced an invalid problem: {e}"),
        }
    }
    Ok(ModelSearch::NoneUpTo {
        max_size: cfg.max_size,
        budget_exhausted,
    })
}

/// Searches for a model of `premise ∧ ¬conclusion`.
pub fn check_non_entailment(premise: &[Formula], conclusion: &Formula, cfg: &FinderConfig) -> Result<NonEntailment, ModelFinderError> {
    let mut axioms = premise.to_vec();
    axioms.push(Formula::not(conclusion.clone()));
    Ok(match find_model(&axioms, cfg)? {
        ModelSearch::Found(m) => NonEntailment::CounterModel(m),
        ModelSearch::NoneUpTo { budget_exhausted, .. } => NonEntailment::Unknown { budget_exhausted },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum FlatLit {
    Pred { positive: bool, name: String, args: Vec<usize> },
    /// `f(args) = result`
    Graph { positive: bool, name: String, args: Vec<usize>, result: usize },
    VarEq { positive: bool, a: usize, b: usize },
}

#[derive(Debug, Clone)]
struct FlatClause {
    lits: Vec<FlatLit>,
    num_vars: usize,
}

fn flatten(clause: &Clause) -> FlatClause {
    struct Flattener {
        vars: HashMap<String, usize>,
        named: HashMap<Term, usize>,
        defs: Vec<FlatLit>,
        next: usize,
    }
    impl Flattener {
        fn term(&mut self, t: &Term) -> usize {
            if let Some(&v) = self.named.get(t) {
                return v;
            }
            let v = match t {
                Term::Var(name) => {
                    if let Some(&v) = self.vars.get(name) {
                        return v;
                    }
                    let v = self.next;
                    self.next += 1;
                    self.vars.insert(name.clone(), v);
                    return v;
                }
                Term::Const(c) => {
                    let w = self.next;
                    self.next += 1;
                    self.defs.push(FlatLit::Graph {
                        positive: false,
                        name: c.clone(),
                        args: Vec::new(),
                        result: w,
                    });
                    w
                }
                Term::App(f, args) => {
                    let args: Vec<usize> = args.iter().map(|a| self.term(a)).collect();
                    let w = self.next;
                    self.next += 1;
                    self.defs.push(FlatLit::Graph {
                        positive: false,
                        name: f.clone(),
                        args,
                        result: w,
                    });
                    w
                }
            };
            self.named.insert(t.clone(), v);
            v
        }
    }
    let mut fl = Flattener {
        vars: HashMap::new(),
        named: HashMap::new(),
        defs: Vec::new(),
        next: 0,
    };
    let mut lits = Vec::new();
    for lit in &clause.literals {
        match &lit.atom {
            Atom::Pred(p, args) => {
                let args = args.iter().map(|t| fl.term(t)).collect();
                lits.push(FlatLit::Pred {
                    positive: lit.positive,
                    name: p.clone(),
                    args,
                });
            }
            Atom::Eq(a, b) => {
                let (a, b) = (fl.term(a), fl.term(b));
                lits.push(FlatLit::VarEq {
                    positive: lit.positive,
                    a,
                    b,
                });
            }
        }
    }
    lits.extend(fl.defs);
    FlatClause { lits, num_vars: fl.next }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum PropAtom {
    Pred(String, Vec<usize>),
    Graph(String, Vec<usize>, usize),
}

struct Encoding {
    problem: PropProblem,
    index: HashMap<PropAtom, u32>,
}

impl Encoding {
    fn var(&mut self, atom: PropAtom) -> u32 {
        let next = self.index.len() as u32 + 1;
        *self.index.entry(atom).or_insert(next)
    }

    fn decode(
        &self,
        size: usize,
        value: impl Fn(u32) -> bool,
        predicates: &BTreeMap<String, usize>,
        functions: &BTreeMap<String, usize>,
        constants: &BTreeSet<String>,
    ) -> FiniteModel {
        let mut model = FiniteModel {
            size,
            ..FiniteModel::default()
        };
        for (p, &arity) in predicates {
            let mut table = BTreeSet::new();
            for tuple in tuples(size, arity) {
                let atom = PropAtom::Pred(p.clone(), tuple.clone());
                if self.index.get(&atom).is_some_and(|&v| value(v)) {
                    table.insert(tuple);
                }
            }
            model.predicates.insert(p.clone(), table);
        }
        for (f, &arity) in functions {
            let mut table = BTreeMap::new();
            for tuple in tuples(size, arity) {
                let result = (0..size)
                    .find(|&d| value(self.index[&PropAtom::Graph(f.clone(), tuple.clone(), d)]))
                    .expect("totality constraint");
                table.insert(tuple, result);
            }
            if constants.contains(f) {
                model.constants.insert(f.clone(), table[&Vec::new()]);
            } else {
                model.functions.insert(f.clone(), table);
            }
        }
        model
    }
}

fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(k as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        t
    })
}

fn encode(
    flat: &[FlatClause],
    predicates: &BTreeMap<String, usize>,
    functions: &BTreeMap<String, usize>,
    size: usize,
    symmetry_breaking: bool,
) -> Encoding {
    let mut enc = Encoding {
        problem: PropProblem::default(),
        index: HashMap::new(),
    };
    // fixed variable numbering: graph atoms first, then predicate atoms
    for (f, &arity) in functions {
        for args in tuples(size, arity) {
            for d in 0..size {
                enc.var(PropAtom::Graph(f.clone(), args.clone(), d));
            }
        }
    }
    for (p, &arity) in predicates {
        for args in tuples(size, arity) {
            enc.var(PropAtom::Pred(p.clone(), args));
        }
    }
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut constant_rank = 0;
    for (f, &arity) in functions {
        for args in tuples(size, arity) {
            let vars: Vec<i32> = (0..size)
                .map(|d| enc.index[&PropAtom::Graph(f.clone(), args.clone(), d)] as i32)
                .collect();
            clauses.push(vars.clone());
            for i in 0..size {
                for j in i + 1..size {
                    clauses.push(vec![-vars[i], -vars[j]]);
                }
            }
            if symmetry_breaking && arity == 0 {
                for &v in vars.iter().skip(constant_rank + 1) {
                    clauses.push(vec![-v]);
                }
                constant_rank += 1;
            }
        }
    }
    for clause in flat {
        let mut assignment = vec![0usize; clause.num_vars];
        'instances: for code in 0..size.pow(clause.num_vars as u32) {
            let mut c = code;
            for slot in assignment.iter_mut().rev() {
                *slot = c % size;
                c /= size;
            }
            let mut out = Vec::with_capacity(clause.lits.len());
            for lit in &clause.lits {
                let (positive, atom) = match lit {
                    FlatLit::VarEq { positive, a, b } => {
                        if (assignment[*a] == assignment[*b]) == *positive {
                            continue 'instances;
                        }
                        continue;
                    }
                    FlatLit::Pred { positive, name, args } => {
                        (*positive, PropAtom::Pred(name.clone(), args.iter().map(|&a| assignment[a]).collect()))
                    }
                    FlatLit::Graph {
                        positive,
                        name,
                        args,
                        result,
                    } => (
                        *positive,
                        PropAtom::Graph(name.clone(), args.iter().map(|&a| assignment[a]).collect(), assignment[*result]),
                    ),
                };
                let v = enc.index[&atom] as i32;
                out.push(if positive { v } else { -v });
            }
            clauses.push(out);
        }
    }
    enc.problem = PropProblem::new(enc.index.len() as u32, clauses);
    enc
}

fn eval_term(m: &FiniteModel, t: &Term, env: &HashMap<String, usize>) -> usize {
    match t {
        Term::Var(v) => env[v],
        Term::Const(c) => m.constants[c],
        Term::App(f, args) => {
            let args: Vec<usize> = args.iter().map(|a| eval_term(m, a, env)).collect();
            m.functions[f][&args]
        }
    }
}

fn eval_in(m: &FiniteModel, f: &Formula, env: &mut HashMap<String, usize>) -> bool {
    match f {
        Formula::Atom(p, args) => {
            let tuple: Vec<usize> = args.iter().map(|a| eval_term(m, a, env)).collect();
            m.predicates.get(p).is_some_and(|table| table.contains(&tuple))
        }
        Formula::Eq(a, b) => eval_term(m, a, env) == eval_term(m, b, env),
        Formula::Not(g) => !eval_in(m, g, env),
        Formula::And(gs) => gs.iter().all(|g| eval_in(m, g, env)),
        Formula::Or(gs) => gs.iter().any(|g| eval_in(m, g, env)),
        Formula::Implies(a, b) => !eval_in(m, a, env) || eval_in(m, b, env),
        Formula::Iff(a, b) => eval_in(m, a, env) == eval_in(m, b, env),
        Formula::Forall(vs, g) => quantify(m, vs, g, env, true),
        Formula::Exists(vs, g) => quantify(m, vs, g, env, false),
        Formula::True => true,
        Formula::False => false,
    }
}

fn quantify(m: &FiniteModel, vs: &[String], body: &Formula, env: &mut HashMap<String, usize>, universal: bool) -> bool {
    let Some((first, rest)) = vs.split_first() else {
        return eval_in(m, body, env);
    };
    let saved = env.get(first).copied();
    let mut result = universal;
    for d in 0..m.size {
        env.insert(first.clone(), d);
        if quantify(m, rest, body, env, universal) != universal {
            result = !universal;
            break;
        }
    }
    match saved {
        Some(d) => env.insert(first.clone(), d),
        None => env.remove(first),
    };
    result
}

/// Direct recursive evaluation of a closed formula; unknown predicates are empty.
pub fn evaluate(m: &FiniteModel, f: &Formula) -> bool {
    eval_in(m, f, &mut HashMap::new())
}

impl FiniteModel {
    /// Tabular rendering; `names` maps symbols to display names.
    pub fn render(&self, names: impl Fn(&str) -> String) -> String {
        let mut out = format!("domain: {{0..{}}}\n", self.size - 1);
        for (c, d) in &self.constants {
            writeln!(out, "  {} = {d}", names(c)).expect("string write");
        }
        for (f, table) in &self.functions {
            for (args, d) in table {
                let args: Vec<String> = args.iter().map(usize::to_string).collect();
                writeln!(out, "  {}({}) = {d}", names(f), args.join(",")).expect("string write");
            }
        }
        for (p, table) in &self.predicates {
            let rows: Vec<String> = table
                .iter()
                .map(|t| {
                    let t: Vec<String> = t.iter().map(usize::to_string).collect();
                    format!("({})", t.join(","))
                })
                .collect();
            writeln!(out, "  {}: {{{}}}", names(p), rows.join(" ")).expect("string write");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Term {
        Term::var(name)
    }

    fn c(name: &str) -> Term {
        Term::constant(name)
    }

    fn r(a: Term, b: Term) -> Formula {
        Formula::atom("r", vec![a, b])
    }

    fn xy() -> Vec<String> {
        vec!["X".into(), "Y".into()]
    }

    fn reflexive() -> Formula {
        Formula::forall(vec!["X".into()], r(v("X"), v("X")))
    }

    fn irreflexive() -> Formula {
        Formula::forall(vec!["X".into()], Formula::not(r(v("X"), v("X"))))
    }

    #[test]
    fn empty_theory_has_a_one_element_model() {
        let m = find_model(&[], &FinderConfig::default()).unwrap();
        assert_eq!(m.model().unwrap().size, 1);
    }

    #[test]
    fn contradiction_has_no_model() {
        let cfg = FinderConfig {
            max_size: 4,
            ..FinderConfig::default()
        };
        assert_eq!(
            find_model(&[reflexive(), irreflexive()], &cfg).unwrap(),
            ModelSearch::NoneUpTo {
                max_size: 4,
                budget_exhausted: false
            }
        );
    }

    #[test]
    fn reflexivity_is_not_entailed_by_nothing() {
        let NonEntailment::CounterModel(m) = check_non_entailment(&[], &reflexive(), &FinderConfig::default()).unwrap() else {
            panic!("expected a countermodel");
        };
        assert_eq!(m.size, 1);
        assert!(m.predicates["r"].is_empty());
    }

    #[test]
    fn entailed_assertion_has_no_countermodel() {
        let fact = r(c("a"), c("b"));
        let cfg = FinderConfig {
            max_size: 3,
            ..FinderConfig::default()
        };
        assert!(matches!(
            check_non_entailment(std::slice::from_ref(&fact), &fact, &cfg).unwrap(),
            NonEntailment::Unknown { budget_exhausted: false }
        ));
    }

    #[test]
    fn distinct_constants_force_size() {
        let axioms = [
            Formula::not(Formula::eq(c("a"), c("b"))),
            Formula::not(Formula::eq(c("b"), c("c"))),
            Formula::not(Formula::eq(c("a"), c("c"))),
        ];
        let m = find_model(&axioms, &FinderConfig::default()).unwrap();
        assert_eq!(m.model().unwrap().size, 3);
    }

    #[test]
    fn skolem_functions_are_total() {
        // every element has an r-successor different from itself
        let f = Formula::forall(
            vec!["X".into()],
            Formula::exists(
                vec!["Y".into()],
                Formula::And(vec![r(v("X"), v("Y")), Formula::not(Formula::eq(v("X"), v("Y")))]),
            ),
        );
        let m = find_model(std::slice::from_ref(&f), &FinderConfig::default()).unwrap();
        let m = m.model().unwrap();
        assert_eq!(m.size, 2);
        assert!(evaluate(m, &f));
        assert_eq!(m.functions["sk1"].len(), 2);
    }

    #[test]
    fn strict_order_needs_three_elements() {
        let trans = Formula::forall(
            vec!["X".into(), "Y".into(), "Z".into()],
            Formula::implies(Formula::And(vec![r(v("X"), v("Y")), r(v("Y"), v("Z"))]), r(v("X"), v("Z"))),
        );
        let asym = Formula::forall(xy(), Formula::implies(r(v("X"), v("Y")), Formula::not(r(v("Y"), v("X")))));
        let axioms = [trans, asym, r(c("bill"), c("john")), r(c("john"), c("mary"))];
        let m = find_model(&axioms, &FinderConfig::default()).unwrap();
        let m = m.model().unwrap();
        assert_eq!(m.size, 3);
        assert!(axioms.iter().all(|a| evaluate(m, a)));
        let with_breaking = FinderConfig {
            symmetry_breaking: true,
            ..FinderConfig::default()
        };
        let m2 = find_model(&axioms, &with_breaking).unwrap();
        assert_eq!(m2.model().unwrap().size, 3);
        assert_eq!(find_model(&axioms, &FinderConfig::default()).unwrap().model(), Some(m));
    }

    #[test]
    fn evaluator_basics() {
        let mut m = FiniteModel {
            size: 2,
            ..FiniteModel::default()
        };
        m.constants.insert("a".into(), 0);
        m.predicates.insert("r".into(), [vec![0, 1], vec![1, 1]].into_iter().collect());
        let some_succ = Formula::forall(
            vec!["X".into()],
            Formula::exists(vec!["Y".into()], r(v("X"), v("Y"))),
        );
        assert!(evaluate(&m, &some_succ));
        assert!(!evaluate(&m, &reflexive()));
        assert!(evaluate(&m, &Formula::not(r(c("a"), c("a")))));
        assert!(!evaluate(&m, &Formula::atom("unknown", vec![c("a")])));
        let shown = m.render(|s| s.to_string());
        assert!(shown.contains("r: {(0,1) (1,1)}"), "{shown}");
    }
}
