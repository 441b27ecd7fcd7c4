//! Propositional satisfiability.
//!
//! Conflict-driven search with two watched literals, first-UIP clause learning
//! and non-chronological backjumping. There are no restarts and no activity
//! heuristics: the decision is always the lowest unassigned variable, tried
//! true first, so every run on the same input takes the same path.

use std::fmt::Write as _;

use thiserror::Error;

pub const DEFAULT_CONFLICT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("conflict budget of {0} exhausted")]
    ResourceBudgetExceeded(u64),
    #[error("literal {literal} references a variable outside 1..={num_vars}")]
    InvalidLiteral { literal: i32, num_vars: u32 },
    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },
}

/// CNF over variables `1..=num_vars`; literals are signed variable indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropProblem {
    pub num_vars: u32,
    pub clauses: Vec<Vec<i32>>,
}

impl PropProblem {
    pub fn new(num_vars: u32, clauses: Vec<Vec<i32>>) -> PropProblem {
        PropProblem { num_vars, clauses }
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                write!(out, "{l} ").expect("string write");
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn from_dimacs(text: &str) -> Result<PropProblem, SatError> {
        let mut num_vars = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            let err = |message: String| SatError::Dimacs { line: i + 1, message };
            if let Some(header) = line.strip_prefix('p') {
                let parts: Vec<&str> = header.split_whitespace().collect();
                if parts.len() != 3 || parts[0] != "cnf" {
                    return Err(err("expected `p cnf <vars> <clauses>`".into()));
                }
                num_vars = Some(parts[1].parse::<u32>().map_err(|e| err(e.to_string()))?);
                continue;
            }
            let Some(n) = num_vars else {
                return Err(err("clause before header".into()));
            };
            for tok in line.split_whitespace() {
                let lit: i32 = tok.parse().map_err(|_| err(format!("bad literal `{tok}`")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else if lit.unsigned_abs() > n {
                    return Err(err(format!("literal {lit} exceeds {n} variables")));
                } else {
                    current.push(lit);
                }
            }
        }
        if !current.is_empty() {
            clauses.push(current);
        }
        Ok(PropProblem {
            num_vars: num_vars.unwrap_or(0),
            clauses,
        })
    }
}

/// Total assignment; index 0 holds variable 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn value(&self, var: u32) -> bool {
        self.values[var as usize - 1]
    }

    pub fn literal(&self, lit: i32) -> bool {
        self.value(lit.unsigned_abs()) == (lit > 0)
    }

    pub fn satisfies(&self, p: &PropProblem) -> bool {
        p.clauses.iter().all(|c| c.iter().any(|&l| self.literal(l)))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    Sat(Assignment),
    Unsat,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Sat(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub conflict_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            conflict_budget: DEFAULT_CONFLICT_BUDGET,
        }
    }
}

pub fn solve(p: &PropProblem) -> Result<SatResult, SatError> {
    solve_with(p, SolverConfig::default())
}

pub fn solve_with(p: &PropProblem, config: SolverConfig) -> Result<SatResult, SatError> {
    for c in &p.clauses {
        for &l in c {
            if l == 0 || l.unsigned_abs() > p.num_vars {
                return Err(SatError::InvalidLiteral {
                    literal: l,
                    num_vars: p.num_vars,
                });
            }
        }
    }
    Solver::new(p.num_vars as usize, config).run(&p.clauses)
}

const UNASSIGNED: i8 = 0;

fn lit_index(l: i32) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0)
}

struct Solver {
    config: SolverConfig,
    clauses: Vec<Vec<i32>>,
    watches: Vec<Vec<usize>>,
    /// +1 true, -1 false, 0 unassigned; indexed by variable.
    value: Vec<i8>,
    level: Vec<usize>,
    reason: Vec<Option<usize>>,
    trail: Vec<i32>,
    trail_lim: Vec<usize>,
    qhead: usize,
    /// Every variable below this one is assigned.
    next_decision: usize,
    seen: Vec<bool>,
    conflicts: u64,
}

impl Solver {
    fn new(num_vars: usize, config: SolverConfig) -> Solver {
        Solver {
            config,
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * num_vars],
            value: vec![UNASSIGNED; num_vars + 1],
            level: vec![0; num_vars + 1],
            reason: vec![None; num_vars + 1],
            trail: Vec::with_capacity(num_vars),
            trail_lim: Vec::new(),
            qhead: 0,
            next_decision: 1,
            seen: vec![false; num_vars + 1],
            conflicts: 0,
        }
    }

    fn lit_value(&self, l: i32) -> i8 {
        let v = self.value[l.unsigned_abs() as usize];
        if l > 0 {
            v
        } else {
            -v
        }
    }

    fn decision_level(&self) -> usize {
        self.trail_lim.len()
    }

    fn assign(&mut self, l: i32, reason: Option<usize>) {
        let v = l.unsigned_abs() as usize;
        self.value[v] = if l > 0 { 1 } else { -1 };
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    fn attach(&mut self, clause: Vec<i32>) -> usize {
        let idx = self.clauses.len();
        self.watches[lit_index(clause[0])].push(idx);
        self.watches[lit_index(clause[1])].push(idx);
        self.clauses.push(clause);
        idx
    }

    fn run(mut self, input: &[Vec<i32>]) -> Result<SatResult, SatError> {
        for c in input {
            let mut lits: Vec<i32> = Vec::with_capacity(c.len());
            let mut tautology = false;
            for &l in c {
                if lits.contains(&-l) {
                    tautology = true;
                    break;
                }
                if !lits.contains(&l) {
                    lits.push(l);
                }
            }
            if tautology {
                continue;
            }
            match lits.len() {
                0 => return Ok(SatResult::Unsat),
                1 => match self.lit_value(lits[0]) {
                    1 => {}
                    -1 => return Ok(SatResult::Unsat),
                    _ => self.assign(lits[0], None),
                },
                _ => {
                    self.attach(lits);
                }
            }
        }

        loop {
            if let Some(conflict) = self.propagate() {
                if self.decision_level() == 0 {
                    return Ok(SatResult::Unsat);
                }
                self.conflicts += 1;
                if self.conflicts > self.config.conflict_budget {
                    return Err(SatError::ResourceBudgetExceeded(self.config.conflict_budget));
                }
                let (learnt, back_level) = self.analyze(conflict);
                self.backtrack(back_level);
                if learnt.len() == 1 {
                    self.assign(learnt[0], None);
                } else {
                    let first = learnt[0];
                    let idx = self.attach(learnt);
                    self.assign(first, Some(idx));
                }
            } else {
                while self.next_decision < self.value.len() && self.value[self.next_decision] != UNASSIGNED {
                    self.next_decision += 1;
                }
                if self.next_decision == self.value.len() {
                    let values = self.value[1..].iter().map(|&v| v > 0).collect();
                    return Ok(SatResult::Sat(Assignment { values }));
                }
                self.trail_lim.push(self.trail.len());
                self.assign(self.next_decision as i32, None);
            }
        }
    }

    /// Returns the index of a falsified clause, if any.
    fn propagate(&mut self) -> Option<usize> {
        while self.qhead < self.trail.len() {
            let falsified = -self.trail[self.qhead];
            self.qhead += 1;
            let watch_idx = lit_index(falsified);
            let watching = std::mem::take(&mut self.watches[watch_idx]);
            let mut keep = Vec::with_capacity(watching.len());
            let mut conflict = None;
            for (pos, &ci) in watching.iter().enumerate() {
                if conflict.is_some() {
                    keep.extend_from_slice(&watching[pos..]);
                    break;
                }
                let clause = &mut self.clauses[ci];
                if clause[0] == falsified {
                    clause.swap(0, 1);
                }
                let other = clause[0];
                if self.lit_value_of(other) == 1 {
                    keep.push(ci);
                    continue;
                }
                let replacement = (2..self.clauses[ci].len()).find(|&k| self.lit_value_of(self.clauses[ci][k]) != -1);
                if let Some(k) = replacement {
                    self.clauses[ci].swap(1, k);
                    let new_watch = self.clauses[ci][1];
                    self.watches[lit_index(new_watch)].push(ci);
                    continue;
                }
                keep.push(ci);
                if self.lit_value_of(other) == -1 {
                    conflict = Some(ci);
                } else {
                    self.assign(other, Some(ci));
                }
            }
            self.watches[watch_idx] = keep;
            if conflict.is_some() {
                return conflict;
            }
        }
        None
    }

    fn lit_value_of(&self, l: i32) -> i8 {
        self.lit_value(l)
    }

    /// First-UIP analysis: the learnt clause has the asserting literal first
    /// and a literal of the backjump level second.
    fn analyze(&mut self, conflict: usize) -> (Vec<i32>, usize) {
        let current = self.decision_level();
        let mut learnt = vec![0];
        let mut pending = 0;
        let mut clause = conflict;
        let mut skip_first = false;
        let mut idx = self.trail.len();
        let uip = loop {
            let start = usize::from(skip_first);
            for k in start..self.clauses[clause].len() {
                let q = self.clauses[clause][k];
                let v = q.unsigned_abs() as usize;
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    if self.level[v] == current {
                        pending += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                idx -= 1;
                if self.seen[self.trail[idx].unsigned_abs() as usize] {
                    break;
                }
            }
            let p = self.trail[idx];
            let v = p.unsigned_abs() as usize;
            self.seen[v] = false;
            pending -= 1;
            if pending == 0 {
                break p;
            }
            clause = self.reason[v].expect("implied literal has a reason");
            skip_first = true;
        };
        learnt[0] = -uip;
        for &l in &learnt[1..] {
            self.seen[l.unsigned_abs() as usize] = false;
        }
        let mut back_level = 0;
        if learnt.len() > 1 {
            let mut best = 1;
            for k in 2..learnt.len() {
                if self.level[learnt[k].unsigned_abs() as usize] > self.level[learnt[best].unsigned_abs() as usize] {
                    best = k;
                }
            }
            learnt.swap(1, best);
            back_level = self.level[learnt[1].unsigned_abs() as usize];
        }
        (learnt, back_level)
    }

    fn backtrack(&mut self, level: usize) {
        if self.decision_level() <= level {
            return;
        }
        let keep = self.trail_lim[level];
        for &l in &self.trail[keep..] {
            let v = l.unsigned_abs() as usize;
            self.value[v] = UNASSIGNED;
            self.reason[v] = None;
            self.next_decision = self.next_decision.min(v);
        }
        self.trail.truncate(keep);
        self.trail_lim.truncate(level);
        self.qhead = keep;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn sat(p: &PropProblem) -> Assignment {
        match solve(p).unwrap() {
            SatResult::Sat(a) => a,
            SatResult::Unsat => panic!("expected sat"),
        }
    }

    #[test]
    fn contradiction_is_unsat() {
        assert_eq!(solve(&PropProblem::new(1, vec![vec![1], vec![-1]])).unwrap(), SatResult::Unsat);
    }

    #[test]
    fn unit_propagation() {
        let a = sat(&PropProblem::new(2, vec![vec![1, 2], vec![-1]]));
        assert!(a.value(2));
        assert!(!a.value(1));
    }

    #[test]
    fn empty_clause_and_empty_problem() {
        assert_eq!(solve(&PropProblem::new(3, vec![vec![]])).unwrap(), SatResult::Unsat);
        let a = sat(&PropProblem::new(3, vec![]));
        // true-first branching on unconstrained variables
        assert!(a.value(1) && a.value(2) && a.value(3));
        assert!(sat(&PropProblem::new(0, vec![])).is_empty());
    }

    #[test]
    fn invalid_literals_are_rejected() {
        assert_eq!(
            solve(&PropProblem::new(1, vec![vec![2]])),
            Err(SatError::InvalidLiteral { literal: 2, num_vars: 1 })
        );
    }

    #[test]
    fn pigeonhole_three_into_two_is_unsat() {
        // var(p, h) = 2p + h + 1
        let v = |p: i32, h: i32| 2 * p + h + 1;
        let mut clauses = Vec::new();
        for p in 0..3 {
            clauses.push(vec![v(p, 0), v(p, 1)]);
        }
        for h in 0..2 {
            for p in 0..3 {
                for q in p + 1..3 {
                    clauses.push(vec![-v(p, h), -v(q, h)]);
                }
            }
        }
        assert_eq!(solve(&PropProblem::new(6, clauses)).unwrap(), SatResult::Unsat);
    }

    #[test]
    fn budget_is_reported() {
        let v = |p: i32, h: i32| 4 * p + h + 1;
        let mut clauses = Vec::new();
        for p in 0..5 {
            clauses.push((0..4).map(|h| v(p, h)).collect());
        }
        for h in 0..4 {
            for p in 0..5 {
                for q in p + 1..5 {
                    clauses.push(vec![-v(p, h), -v(q, h)]);
                }
            }
        }
        let p = PropProblem::new(20, clauses);
        assert_eq!(
            solve_with(&p, SolverConfig { conflict_budget: 3 }),
            Err(SatError::ResourceBudgetExceeded(3))
        );
        assert_eq!(solve(&p).unwrap(), SatResult::Unsat);
    }

    #[test]
    fn dimacs_round_trip() {
        let p = PropProblem::new(3, vec![vec![1, -2], vec![3], vec![-1, 2, -3]]);
        let text = p.to_dimacs();
        assert_eq!(text, "p cnf 3 3\n1 -2 0\n3 0\n-1 2 -3 0\n");
        assert_eq!(PropProblem::from_dimacs(&format!("c comment\n{text}")).unwrap(), p);
        assert!(PropProblem::from_dimacs("1 2 0").is_err());
        assert!(PropProblem::from_dimacs("p cnf 1 1\n2 0").is_err());
    }

    fn brute_force(p: &PropProblem) -> bool {
        (0u32..1 << p.num_vars).any(|bits| {
            p.clauses
                .iter()
                .all(|c| c.iter().any(|&l| (bits >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0)))
        })
    }

    fn random_cnf(rng: &mut impl Rng, max_vars: u32) -> PropProblem {
        let n = rng.gen_range(1..=max_vars);
        let m = rng.gen_range(0..=5 * n as usize);
        let clauses = (0..m)
            .map(|_| {
                let k = rng.gen_range(1..=4);
                (0..k)
                    .map(|_| {
                        let v = rng.gen_range(1..=n) as i32;
                        if rng.gen_bool(0.5) {
                            v
                        } else {
                            -v
                        }
                    })
                    .collect()
            })
            .collect();
        PropProblem::new(n, clauses)
    }

    #[test]
    fn agrees_with_enumeration_on_random_cnfs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let p = random_cnf(&mut rng, 10);
            match solve(&p).unwrap() {
                SatResult::Sat(a) => assert!(a.satisfies(&p), "{p:?}"),
                SatResult::Unsat => assert!(!brute_force(&p), "{p:?}"),
            }
            assert_eq!(solve(&p).unwrap().is_sat(), brute_force(&p));
        }
    }

    #[test]
    fn deterministic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let p = random_cnf(&mut rng, 12);
            assert_eq!(solve(&p).unwrap(), solve(&p).unwrap());
        }
    }
}
