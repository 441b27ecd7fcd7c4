//! First-order terms and formulas, normal forms, and bounded Herbrand universes.
//!
//! `Display` on [`Term`] and [`Formula`] produces TPTP FOF syntax; the
//! translator's emitter relies on it for byte-exact output.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub const DEFAULT_CLAUSE_BUDGET: usize = 100_000;

/// Constant injected into an otherwise empty Herbrand universe.
pub const INJECTED_CONSTANT: &str = "dom0";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FolError {
    #[error("clausification would exceed the clause budget of {limit}")]
    ClausificationBlowup { limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Const(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Term {
        Term::Const(name.into())
    }

    pub fn app(f: impl Into<String>, args: Vec<Term>) -> Term {
        Term::App(f.into(), args)
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Const(_) => true,
            Term::App(_, args) => args.iter().all(Term::is_ground),
        }
    }

    /// Function-nesting depth; constants and variables have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn substitute(&self, sub: &HashMap<String, Term>) -> Term {
        match self {
            Term::Var(v) => sub.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::Const(_) => self.clone(),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|t| t.substitute(sub)).collect()),
        }
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Const(_) => {}
            Term::App(_, args) => args.iter().for_each(|t| t.collect_vars(out)),
        }
    }

    fn collect_symbols(&self, sig: &mut Symbols) {
        match self {
            Term::Var(_) => {}
            Term::Const(c) => {
                sig.constants.insert(c.clone());
            }
            Term::App(f, args) => {
                sig.functions.insert(f.clone(), args.len());
                args.iter().for_each(|t| t.collect_symbols(sig));
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) | Term::Const(v) => f.write_str(v),
            Term::App(name, args) => {
                write!(f, "{name}(")?;
                write_joined(f, args, ",")?;
                f.write_str(")")
            }
        }
    }
}

fn write_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T], sep: &str) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String, Vec<Term>),
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(Vec<String>, Box<Formula>),
    Exists(Vec<String>, Box<Formula>),
    True,
    False,
}

impl Formula {
    pub fn atom(p: impl Into<String>, args: Vec<Term>) -> Formula {
        Formula::Atom(p.into(), args)
    }

    pub fn prop(p: impl Into<String>) -> Formula {
        Formula::Atom(p.into(), Vec::new())
    }

    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Conjunction that drops `True` members and unwraps singletons.
    pub fn and(members: Vec<Formula>) -> Formula {
        let mut kept: Vec<Formula> = members.into_iter().filter(|f| *f != Formula::True).collect();
        match kept.len() {
            0 => Formula::True,
            1 => kept.pop().expect("one member"),
            _ => Formula::And(kept),
        }
    }

    /// Disjunction that drops `False` members and unwraps singletons.
    pub fn or(members: Vec<Formula>) -> Formula {
        let mut kept: Vec<Formula> = members.into_iter().filter(|f| *f != Formula::False).collect();
        match kept.len() {
            0 => Formula::False,
            1 => kept.pop().expect("one member"),
            _ => Formula::Or(kept),
        }
    }

    /// Universal quantification; an empty variable list returns the body.
    pub fn forall(vars: Vec<String>, body: Formula) -> Formula {
        if vars.is_empty() {
            body
        } else {
            Formula::Forall(vars, Box::new(body))
        }
    }

    pub fn exists(vars: Vec<String>, body: Formula) -> Formula {
        if vars.is_empty() {
            body
        } else {
            Formula::Exists(vars, Box::new(body))
        }
    }

    /// Free variables in order of first occurrence.
    pub fn free_vars(&self) -> Vec<String> {
        fn go(f: &Formula, bound: &mut Vec<String>, out: &mut Vec<String>) {
            let push_term = |t: &Term, bound: &Vec<String>, out: &mut Vec<String>| {
                let mut vs = Vec::new();
                t.collect_vars(&mut vs);
                for v in vs {
                    if !bound.contains(&v) && !out.contains(&v) {
                        out.push(v);
                    }
                }
            };
            match f {
                Formula::Atom(_, args) => args.iter().for_each(|t| push_term(t, bound, out)),
                Formula::Eq(a, b) => {
                    push_term(a, bound, out);
                    push_term(b, bound, out);
                }
                Formula::Not(g) => go(g, bound, out),
                Formula::And(gs) | Formula::Or(gs) => gs.iter().for_each(|g| go(g, bound, out)),
                Formula::Implies(a, b) | Formula::Iff(a, b) => {
                    go(a, bound, out);
                    go(b, bound, out);
                }
                Formula::Forall(vs, g) | Formula::Exists(vs, g) => {
                    let mark = bound.len();
                    bound.extend(vs.iter().cloned());
                    go(g, bound, out);
                    bound.truncate(mark);
                }
                Formula::True | Formula::False => {}
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn symbols(&self) -> Symbols {
        let mut sig = Symbols::default();
        self.collect_symbols(&mut sig);
        sig
    }

    fn collect_symbols(&self, sig: &mut Symbols) {
        match self {
            Formula::Atom(p, args) => {
                sig.predicates.insert(p.clone(), args.len());
                args.iter().for_each(|t| t.collect_symbols(sig));
            }
            Formula::Eq(a, b) => {
                sig.equality = true;
                a.collect_symbols(sig);
                b.collect_symbols(sig);
            }
            Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => g.collect_symbols(sig),
            Formula::And(gs) | Formula::Or(gs) => gs.iter().for_each(|g| g.collect_symbols(sig)),
            Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_symbols(sig);
                b.collect_symbols(sig);
            }
            Formula::True | Formula::False => {}
        }
    }

    fn substitute(&self, sub: &HashMap<String, Term>) -> Formula {
        match self {
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(|t| t.substitute(sub)).collect()),
            Formula::Eq(a, b) => Formula::Eq(a.substitute(sub), b.substitute(sub)),
            Formula::Not(g) => Formula::Not(Box::new(g.substitute(sub))),
            Formula::And(gs) => Formula::And(gs.iter().map(|g| g.substitute(sub)).collect()),
            Formula::Or(gs) => Formula::Or(gs.iter().map(|g| g.substitute(sub)).collect()),
            Formula::Implies(a, b) => Formula::implies(a.substitute(sub), b.substitute(sub)),
            Formula::Iff(a, b) => Formula::iff(a.substitute(sub), b.substitute(sub)),
            Formula::Forall(vs, g) | Formula::Exists(vs, g) => {
                let mut inner = sub.clone();
                for v in vs {
                    inner.remove(v);
                }
                let body = Box::new(g.substitute(&inner));
                if matches!(self, Formula::Forall(..)) {
                    Formula::Forall(vs.clone(), body)
                } else {
                    Formula::Exists(vs.clone(), body)
                }
            }
            Formula::True | Formula::False => self.clone(),
        }
    }
}

/// TPTP FOF rendering. Compound formulas are always parenthesized.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(p, args) if args.is_empty() => f.write_str(p),
            Formula::Atom(p, args) => {
                write!(f, "{p}(")?;
                write_joined(f, args, ",")?;
                f.write_str(")")
            }
            Formula::Eq(a, b) => write!(f, "{a} = {b}"),
            Formula::Not(g) => match g.as_ref() {
                Formula::Eq(a, b) => write!(f, "{a} != {b}"),
                _ => write!(f, "~ {g}"),
            },
            Formula::And(gs) | Formula::Or(gs) => match gs.len() {
                0 => f.write_str(if matches!(self, Formula::And(_)) { "$true" } else { "$false" }),
                1 => write!(f, "{}", gs[0]),
                _ => {
                    f.write_str("( ")?;
                    let sep = if matches!(self, Formula::And(_)) { " & " } else { " | " };
                    write_joined(f, gs, sep)?;
                    f.write_str(" )")
                }
            },
            Formula::Implies(a, b) => write!(f, "( {a} => {b} )"),
            Formula::Iff(a, b) => write!(f, "( {a} <=> {b} )"),
            Formula::Forall(vs, g) => write!(f, "! [{}] : {g}", vs.join(",")),
            Formula::Exists(vs, g) => write!(f, "? [{}] : {g}", vs.join(",")),
            Formula::True => f.write_str("$true"),
            Formula::False => f.write_str("$false"),
        }
    }
}

/// Predicate, function, and constant symbols with their arities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Symbols {
    pub predicates: BTreeMap<String, usize>,
    /// Functions of arity at least one.
    pub functions: BTreeMap<String, usize>,
    pub constants: BTreeSet<String>,
    pub equality: bool,
}

impl Symbols {
    pub fn merge(&mut self, other: &Symbols) {
        self.predicates.extend(other.predicates.iter().map(|(k, v)| (k.clone(), *v)));
        self.functions.extend(other.functions.iter().map(|(k, v)| (k.clone(), *v)));
        self.constants.extend(other.constants.iter().cloned());
        self.equality |= other.equality;
    }
}

pub fn nnf(f: &Formula) -> Formula {
    nnf_signed(f, true)
}

fn nnf_signed(f: &Formula, positive: bool) -> Formula {
    let all = |gs: &[Formula], pos: bool| gs.iter().map(|g| nnf_signed(g, pos)).collect::<Vec<_>>();
    match f {
        Formula::Atom(..) | Formula::Eq(..) => {
            if positive {
                f.clone()
            } else {
                Formula::not(f.clone())
            }
        }
        Formula::True => if positive { Formula::True } else { Formula::False },
        Formula::False => if positive { Formula::False } else { Formula::True },
        Formula::Not(g) => nnf_signed(g, !positive),
        Formula::And(gs) if positive => Formula::And(all(gs, true)),
        Formula::And(gs) => Formula::Or(all(gs, false)),
        Formula::Or(gs) if positive => Formula::Or(all(gs, true)),
        Formula::Or(gs) => Formula::And(all(gs, false)),
        Formula::Implies(a, b) if positive => Formula::Or(vec![nnf_signed(a, false), nnf_signed(b, true)]),
        Formula::Implies(a, b) => Formula::And(vec![nnf_signed(a, true), nnf_signed(b, false)]),
        Formula::Iff(a, b) if positive => Formula::And(vec![
            Formula::Or(vec![nnf_signed(a, false), nnf_signed(b, true)]),
            Formula::Or(vec![nnf_signed(b, false), nnf_signed(a, true)]),
        ]),
        Formula::Iff(a, b) => Formula::Or(vec![
            Formula::And(vec![nnf_signed(a, true), nnf_signed(b, false)]),
            Formula::And(vec![nnf_signed(b, true), nnf_signed(a, false)]),
        ]),
        Formula::Forall(vs, g) if positive => Formula::Forall(vs.clone(), Box::new(nnf_signed(g, true))),
        Formula::Forall(vs, g) => Formula::Exists(vs.clone(), Box::new(nnf_signed(g, false))),
        Formula::Exists(vs, g) if positive => Formula::Exists(vs.clone(), Box::new(nnf_signed(g, true))),
        Formula::Exists(vs, g) => Formula::Forall(vs.clone(), Box::new(nnf_signed(g, false))),
    }
}

/// Renames every bound variable to a fresh `VN`, continuing from `counter`.
pub fn standardize_apart(f: &Formula, counter: &mut usize) -> Formula {
    match f {
        Formula::Forall(vs, g) | Formula::Exists(vs, g) => {
            let mut sub = HashMap::new();
            let mut fresh = Vec::with_capacity(vs.len());
            for v in vs {
                *counter += 1;
                let name = format!("V{counter}");
                sub.insert(v.clone(), Term::Var(name.clone()));
                fresh.push(name);
            }
            let body = Box::new(standardize_apart(&g.substitute(&sub), counter));
            if matches!(f, Formula::Forall(..)) {
                Formula::Forall(fresh, body)
            } else {
                Formula::Exists(fresh, body)
            }
        }
        Formula::Not(g) => Formula::Not(Box::new(standardize_apart(g, counter))),
        Formula::And(gs) => Formula::And(gs.iter().map(|g| standardize_apart(g, counter)).collect()),
        Formula::Or(gs) => Formula::Or(gs.iter().map(|g| standardize_apart(g, counter)).collect()),
        Formula::Implies(a, b) => {
            let a = standardize_apart(a, counter);
            Formula::implies(a, standardize_apart(b, counter))
        }
        Formula::Iff(a, b) => {
            let a = standardize_apart(a, counter);
            Formula::iff(a, standardize_apart(b, counter))
        }
        _ => f.clone(),
    }
}

/// Skolemizes a formula in negation normal form, numbering symbols from `sk1`.
///
/// Bound variable names must not shadow each other; [`standardize_apart`] ensures this.
pub fn skolemize(f: &Formula) -> Formula {
    let mut counter = 0;
    skolemize_with(f, &mut counter)
}

/// As [`skolemize`], continuing the `skN` numbering from `counter`.
/// Free variables of `f` count as universally quantified.
pub fn skolemize_with(f: &Formula, counter: &mut usize) -> Formula {
    let mut scope = f.free_vars();
    skolem_walk(f, &mut scope, &HashMap::new(), counter)
}

fn skolem_walk(f: &Formula, scope: &mut Vec<String>, sub: &HashMap<String, Term>, counter: &mut usize) -> Formula {
    match f {
        Formula::Atom(..) | Formula::Eq(..) => f.substitute(sub),
        Formula::Not(g) => Formula::Not(Box::new(skolem_walk(g, scope, sub, counter))),
        Formula::And(gs) => Formula::And(gs.iter().map(|g| skolem_walk(g, scope, sub, counter)).collect()),
        Formula::Or(gs) => Formula::Or(gs.iter().map(|g| skolem_walk(g, scope, sub, counter)).collect()),
        Formula::Forall(vs, g) => {
            let mark = scope.len();
            scope.extend(vs.iter().cloned());
            let mut inner = sub.clone();
            for v in vs {
                inner.remove(v);
            }
            let body = skolem_walk(g, scope, &inner, counter);
            scope.truncate(mark);
            Formula::Forall(vs.clone(), Box::new(body))
        }
        Formula::Exists(vs, g) => {
            let mut inner = sub.clone();
            let args: Vec<Term> = scope.iter().map(|v| Term::Var(v.clone())).collect();
            for v in vs {
                *counter += 1;
                let name = format!("sk{counter}");
                let witness = if args.is_empty() {
                    Term::Const(name)
                } else {
                    Term::App(name, args.clone())
                };
                inner.insert(v.clone(), witness);
            }
            skolem_walk(g, scope, &inner, counter)
        }
        // Implies/Iff do not occur in NNF; substitute through them untouched.
        _ => f.substitute(sub),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Pred(String, Vec<Term>),
    Eq(Term, Term),
}

impl Atom {
    pub fn substitute(&self, sub: &HashMap<String, Term>) -> Atom {
        match self {
            Atom::Pred(p, args) => Atom::Pred(p.clone(), args.iter().map(|t| t.substitute(sub)).collect()),
            Atom::Eq(a, b) => Atom::Eq(a.substitute(sub), b.substitute(sub)),
        }
    }

    pub fn terms(&self) -> Vec<&Term> {
        match self {
            Atom::Pred(_, args) => args.iter().collect(),
            Atom::Eq(a, b) => vec![a, b],
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Pred(p, args) => write!(f, "{}", Formula::Atom(p.clone(), args.clone())),
            Atom::Eq(a, b) => write!(f, "{a} = {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub positive: bool,
    pub atom: Atom,
}

impl Literal {
    pub fn pos(atom: Atom) -> Literal {
        Literal { positive: true, atom }
    }

    pub fn neg(atom: Atom) -> Literal {
        Literal { positive: false, atom }
    }

    pub fn negated(&self) -> Literal {
        Literal {
            positive: !self.positive,
            atom: self.atom.clone(),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.atom, self.positive) {
            (atom, true) => write!(f, "{atom}"),
            (Atom::Eq(a, b), false) => write!(f, "{a} != {b}"),
            (atom, false) => write!(f, "~ {atom}"),
        }
    }
}

/// A disjunction of literals; variables are implicitly universal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Clause {
        Clause { literals }
    }

    /// Variables in order of first occurrence.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        for lit in &self.literals {
            for t in lit.atom.terms() {
                t.collect_vars(&mut out);
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return f.write_str("$false");
        }
        write_joined(f, &self.literals, " | ")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClauseSet {
    pub clauses: Vec<Clause>,
    pub symbols: Symbols,
}

impl ClauseSet {
    pub fn push(&mut self, clause: Clause) {
        for lit in &clause.literals {
            match &lit.atom {
                Atom::Pred(p, args) => {
                    self.symbols.predicates.insert(p.clone(), args.len());
                    args.iter().for_each(|t| t.collect_symbols(&mut self.symbols));
                }
                Atom::Eq(a, b) => {
                    self.symbols.equality = true;
                    a.collect_symbols(&mut self.symbols);
                    b.collect_symbols(&mut self.symbols);
                }
            }
        }
        self.clauses.push(clause);
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Whether some clause contains a positive equality literal.
    pub fn has_positive_equality(&self) -> bool {
        self.clauses
            .iter()
            .flat_map(|c| &c.literals)
            .any(|l| l.positive && matches!(l.atom, Atom::Eq(..)))
    }
}

/// Converts formulas to clauses, sharing Skolem and variable numbering across calls.
#[derive(Debug, Clone)]
pub struct Clausifier {
    pub clause_budget: usize,
    skolem_counter: usize,
    var_counter: usize,
}

impl Default for Clausifier {
    fn default() -> Self {
        Clausifier::new(DEFAULT_CLAUSE_BUDGET)
    }
}

impl Clausifier {
    pub fn new(clause_budget: usize) -> Clausifier {
        Clausifier {
            clause_budget,
            skolem_counter: 0,
            var_counter: 0,
        }
    }

    pub fn add(&mut self, f: &Formula, out: &mut ClauseSet) -> Result<(), FolError> {
        let g = nnf(f);
        let g = standardize_apart(&g, &mut self.var_counter);
        let g = skolemize_with(&g, &mut self.skolem_counter);
        let matrix = strip_universals(&g);
        let remaining = self.clause_budget.saturating_sub(out.len());
        for lits in cnf(&matrix, remaining)? {
            out.push(Clause::new(lits));
        }
        Ok(())
    }
}

pub fn clausify(f: &Formula) -> Result<ClauseSet, FolError> {
    let mut out = ClauseSet::default();
    Clausifier::default().add(f, &mut out)?;
    Ok(out)
}

fn strip_universals(f: &Formula) -> Formula {
    match f {
        Formula::Forall(_, g) => strip_universals(g),
        Formula::And(gs) => Formula::And(gs.iter().map(strip_universals).collect()),
        Formula::Or(gs) => Formula::Or(gs.iter().map(strip_universals).collect()),
        _ => f.clone(),
    }
}

fn to_atom(f: &Formula) -> Atom {
    match f {
        Formula::Atom(p, args) => Atom::Pred(p.clone(), args.clone()),
        Formula::Eq(a, b) => Atom::Eq(a.clone(), b.clone()),
        _ => unreachable!("not an atom: {f}"),
    }
}

/// Distributes a quantifier-free NNF matrix into clauses.
fn cnf(f: &Formula, budget: usize) -> Result<Vec<Vec<Literal>>, FolError> {
    let blowup = || FolError::ClausificationBlowup { limit: budget };
    let clauses = match f {
        Formula::True => Vec::new(),
        Formula::False => vec![Vec::new()],
        Formula::Atom(..) | Formula::Eq(..) => vec![vec![Literal::pos(to_atom(f))]],
        Formula::Not(g) => vec![vec![Literal::neg(to_atom(g))]],
        Formula::And(gs) => {
            let mut out = Vec::new();
            for g in gs {
                out.extend(cnf(g, budget)?);
                if out.len() > budget {
                    return Err(blowup());
                }
            }
            out
        }
        Formula::Or(gs) => {
            let mut acc: Vec<Vec<Literal>> = vec![Vec::new()];
            for g in gs {
                let part = cnf(g, budget)?;
                if acc.len().saturating_mul(part.len()) > budget {
                    return Err(blowup());
                }
                let mut next = Vec::with_capacity(acc.len() * part.len());
                for a in &acc {
                    for b in &part {
                        let mut c = a.clone();
                        c.extend(b.iter().cloned());
                        next.push(c);
                    }
                }
                acc = next;
            }
            acc
        }
        _ => unreachable!("quantifier or connective left in matrix: {f}"),
    };
    if clauses.len() > budget {
        return Err(blowup());
    }
    Ok(clauses.into_iter().filter_map(tidy_clause).collect())
}

/// Drops duplicate literals; returns `None` for tautologies.
fn tidy_clause(lits: Vec<Literal>) -> Option<Vec<Literal>> {
    let mut out: Vec<Literal> = Vec::with_capacity(lits.len());
    for lit in lits {
        if out.contains(&lit.negated()) {
            return None;
        }
        if !out.contains(&lit) {
            out.push(lit);
        }
    }
    Some(out)
}

/// Ground terms of nesting depth at most `depth`, by depth and then lexicographically.
pub fn ground_terms(cs: &ClauseSet, depth: usize) -> Vec<Term> {
    let mut terms: Vec<Term> = if cs.symbols.constants.is_empty() {
        vec![Term::Const(INJECTED_CONSTANT.to_string())]
    } else {
        cs.symbols.constants.iter().map(|c| Term::Const(c.clone())).collect()
    };
    let mut layer_start = 0;
    for _ in 0..depth {
        let layer_end = terms.len();
        let mut layer = Vec::new();
        for (f, &arity) in &cs.symbols.functions {
            let mut idx = vec![0usize; arity];
            'odometer: loop {
                // new terms need at least one argument from the previous layer
                if idx.iter().any(|&i| i >= layer_start) {
                    layer.push(Term::App(f.clone(), idx.iter().map(|&i| terms[i].clone()).collect()));
                }
                let mut pos = arity;
                loop {
                    if pos == 0 {
                        break 'odometer;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < layer_end {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        if layer.is_empty() {
            break;
        }
        layer_start = layer_end;
        terms.extend(layer);
    }
    terms
}
