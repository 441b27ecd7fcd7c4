//! OWL 2 direct semantics as first-order formulas, packaged as TPTP FOF problems.
//!
//! The mappings follow the tables of the OWL 2 Direct Semantics document:
//! Table 2 (object property expressions), Table 4 (class expressions),
//! Table 5 (class expression axioms), Table 6 (object property axioms, including
//! property chains) and Table 10 (assertions). Individuals become constants and
//! no unique-name assumption is made. Every class expression is read with one
//! free variable; quantified variables are named `Y0`, `Y1`, ... and numbering
//! restarts for each emitted formula.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::fol::{Formula, Term};
use crate::model::*;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("the conclusion ontology contains no logical axioms")]
    EmptyConclusion,
}

/// Injective IRI ↔ symbol map, filled in first-use order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolMap {
    by_iri: BTreeMap<Iri, String>,
    by_symbol: BTreeMap<String, Iri>,
    order: Vec<Iri>,
}

impl SymbolMap {
    pub fn mangle(&mut self, iri: &Iri) -> String {
        if let Some(s) = self.by_iri.get(iri) {
            return s.clone();
        }
        let local: String = iri
            .local_name()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        let base = format!("uri_{local}");
        let mut symbol = base.clone();
        let mut n = 2;
        while self.by_symbol.contains_key(&symbol) {
            symbol = format!("{base}_{n}");
            n += 1;
        }
        self.by_iri.insert(iri.clone(), symbol.clone());
        self.by_symbol.insert(symbol.clone(), iri.clone());
        self.order.push(iri.clone());
        symbol
    }

    pub fn symbol(&self, iri: &Iri) -> Option<&str> {
        self.by_iri.get(iri).map(String::as_str)
    }

    pub fn iri(&self, symbol: &str) -> Option<&Iri> {
        self.by_symbol.get(symbol)
    }

    /// `(symbol, iri)` pairs in first-use order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &Iri)> {
        self.order.iter().map(|iri| (self.by_iri[iri].as_str(), iri))
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Translator {
    pub symbols: SymbolMap,
    next_var: usize,
}

impl Translator {
    pub fn new() -> Translator {
        Translator::default()
    }

    fn fresh(&mut self) -> String {
        let v = format!("Y{}", self.next_var);
        self.next_var += 1;
        v
    }

    fn fresh_n(&mut self, n: usize) -> Vec<String> {
        (0..n).map(|_| self.fresh()).collect()
    }

    fn individual(&mut self, a: &Iri) -> Term {
        Term::Const(self.symbols.mangle(a))
    }

    pub fn translate_ope(&mut self, ope: &Ope, s: &Term, t: &Term) -> Formula {
        let p = self.symbols.mangle(ope.iri());
        if ope.is_inverse() {
            Formula::atom(p, vec![t.clone(), s.clone()])
        } else {
            Formula::atom(p, vec![s.clone(), t.clone()])
        }
    }

    pub fn translate_class(&mut self, ce: &ClassExpr, x: &Term) -> Formula {
        match ce {
            ClassExpr::Named(c) => Formula::atom(self.symbols.mangle(c), vec![x.clone()]),
            ClassExpr::Thing => Formula::True,
            ClassExpr::Nothing => Formula::False,
            ClassExpr::IntersectionOf(list) => {
                Formula::and(list.iter().map(|c| self.translate_class(c, x)).collect())
            }
            ClassExpr::UnionOf(list) => Formula::or(list.iter().map(|c| self.translate_class(c, x)).collect()),
            ClassExpr::ComplementOf(c) => Formula::not(self.translate_class(c, x)),
            ClassExpr::SomeValuesFrom(r, c) => {
                let y = self.fresh();
                let yt = Term::Var(y.clone());
                let body = Formula::and(vec![self.translate_ope(r, x, &yt), self.translate_class(c, &yt)]);
                Formula::exists(vec![y], body)
            }
            ClassExpr::AllValuesFrom(r, c) => {
                let y = self.fresh();
                let yt = Term::Var(y.clone());
                let body = Formula::implies(self.translate_ope(r, x, &yt), self.translate_class(c, &yt));
                Formula::forall(vec![y], body)
            }
            ClassExpr::HasSelf(r) => self.translate_ope(r, x, x),
            ClassExpr::MinCardinality(n, r, c) => self.min_cardinality(*n as usize, r, c, x),
            ClassExpr::MaxCardinality(n, r, c) => self.max_cardinality(*n as usize, r, c, x),
            ClassExpr::ExactCardinality(n, r, c) => {
                let min = self.min_cardinality(*n as usize, r, c, x);
                let max = self.max_cardinality(*n as usize, r, c, x);
                Formula::and(vec![min, max])
            }
            ClassExpr::OneOf(list) => Formula::or(
                list.iter()
                    .map(|a| Formula::eq(x.clone(), self.individual(a)))
                    .collect(),
            ),
            ClassExpr::HasValue(r, a) => {
                let a = self.individual(a);
                self.translate_ope(r, x, &a)
            }
        }
    }

    fn min_cardinality(&mut self, n: usize, r: &Ope, c: &ClassExpr, x: &Term) -> Formula {
        if n == 0 {
            return Formula::True;
        }
        let ys = self.fresh_n(n);
        let yts: Vec<Term> = ys.iter().map(|y| Term::Var(y.clone())).collect();
        let mut parts = distinct_pairs(&yts);
        for y in &yts {
            parts.push(self.translate_ope(r, x, y));
            parts.push(self.translate_class(c, y));
        }
        Formula::exists(ys, Formula::and(parts))
    }

    fn max_cardinality(&mut self, n: usize, r: &Ope, c: &ClassExpr, x: &Term) -> Formula {
        let ys = self.fresh_n(n + 1);
        let yts: Vec<Term> = ys.iter().map(|y| Term::Var(y.clone())).collect();
        let mut premises = Vec::new();
        for y in &yts {
            premises.push(self.translate_ope(r, x, y));
            premises.push(self.translate_class(c, y));
        }
        let mut equalities = Vec::new();
        for i in 0..yts.len() {
            for j in i + 1..yts.len() {
                equalities.push(Formula::eq(yts[i].clone(), yts[j].clone()));
            }
        }
        Formula::forall(ys, Formula::implies(Formula::and(premises), Formula::or(equalities)))
    }

    /// Closed formulas expressing `a`; declarations yield none.
    pub fn translate_axiom(&mut self, a: &Axiom) -> Vec<Formula> {
        match a {
            Axiom::SubClassOf(sub, sup) => {
                vec![self.class_closure(|t, x| {
                    let l = t.translate_class(sub, x);
                    Formula::implies(l, t.translate_class(sup, x))
                })]
            }
            Axiom::EquivalentClasses(list) => list[1..]
                .iter()
                .map(|other| {
                    self.class_closure(|t, x| {
                        let l = t.translate_class(&list[0], x);
                        Formula::iff(l, t.translate_class(other, x))
                    })
                })
                .collect(),
            Axiom::DisjointClasses(list) => pairs(list)
                .into_iter()
                .map(|(c, d)| {
                    self.class_closure(|t, x| {
                        let l = t.translate_class(c, x);
                        Formula::not(Formula::and(vec![l, t.translate_class(d, x)]))
                    })
                })
                .collect(),
            Axiom::SubObjectPropertyOf(PropertyOrChain::Property(sub), sup) => {
                vec![self.binary_closure(|t, x, y| {
                    Formula::implies(t.translate_ope(sub, x, y), t.translate_ope(sup, x, y))
                })]
            }
            Axiom::SubObjectPropertyOf(PropertyOrChain::Chain(chain), sup) => {
                self.next_var = 0;
                let ys = self.fresh_n(chain.len() + 1);
                let yts: Vec<Term> = ys.iter().map(|y| Term::Var(y.clone())).collect();
                let links = chain
                    .iter()
                    .enumerate()
                    .map(|(i, p)| self.translate_ope(p, &yts[i], &yts[i + 1]))
                    .collect();
                let head = self.translate_ope(sup, &yts[0], &yts[chain.len()]);
                vec![Formula::forall(ys, Formula::implies(Formula::and(links), head))]
            }
            Axiom::EquivalentObjectProperties(list) => list[1..]
                .iter()
                .map(|other| {
                    self.binary_closure(|t, x, y| {
                        Formula::iff(t.translate_ope(&list[0], x, y), t.translate_ope(other, x, y))
                    })
                })
                .collect(),
            Axiom::DisjointObjectProperties(list) => pairs(list)
                .into_iter()
                .map(|(p, q)| {
                    self.binary_closure(|t, x, y| {
                        Formula::not(Formula::and(vec![t.translate_ope(p, x, y), t.translate_ope(q, x, y)]))
                    })
                })
                .collect(),
            Axiom::InverseObjectProperties(p, q) => {
                vec![self.binary_closure(|t, x, y| Formula::iff(t.translate_ope(p, x, y), t.translate_ope(q, y, x)))]
            }
            Axiom::Characteristic(ch, p) => vec![self.characteristic(*ch, p)],
            Axiom::ObjectPropertyDomain(p, c) => {
                vec![self.binary_closure(|t, x, y| {
                    let l = t.translate_ope(p, x, y);
                    Formula::implies(l, t.translate_class(c, x))
                })]
            }
            Axiom::ObjectPropertyRange(p, c) => {
                vec![self.binary_closure(|t, x, y| {
                    let l = t.translate_ope(p, x, y);
                    Formula::implies(l, t.translate_class(c, y))
                })]
            }
            Axiom::ClassAssertion(c, a) => {
                self.next_var = 0;
                let a = self.individual(a);
                vec![self.translate_class(c, &a)]
            }
            Axiom::ObjectPropertyAssertion(p, a, b) => {
                self.symbols.mangle(p.iri());
                let (a, b) = (self.individual(a), self.individual(b));
                vec![self.translate_ope(p, &a, &b)]
            }
            Axiom::NegativeObjectPropertyAssertion(p, a, b) => {
                self.symbols.mangle(p.iri());
                let (a, b) = (self.individual(a), self.individual(b));
                vec![Formula::not(self.translate_ope(p, &a, &b))]
            }
            Axiom::SameIndividual(list) => pairs(list)
                .into_iter()
                .map(|(a, b)| Formula::eq(self.individual(a), self.individual(b)))
                .collect(),
            Axiom::DifferentIndividuals(list) => pairs(list)
                .into_iter()
                .map(|(a, b)| Formula::not(Formula::eq(self.individual(a), self.individual(b))))
                .collect(),
            Axiom::Declaration(..) => Vec::new(),
        }
    }

    fn class_closure(&mut self, body: impl FnOnce(&mut Self, &Term) -> Formula) -> Formula {
        self.next_var = 0;
        let x = self.fresh();
        let f = body(self, &Term::Var(x.clone()));
        Formula::forall(vec![x], f)
    }

    fn binary_closure(&mut self, body: impl FnOnce(&mut Self, &Term, &Term) -> Formula) -> Formula {
        self.next_var = 0;
        let (x, y) = (self.fresh(), self.fresh());
        let f = body(self, &Term::Var(x.clone()), &Term::Var(y.clone()));
        Formula::forall(vec![x, y], f)
    }

    fn characteristic(&mut self, ch: Characteristic, p: &Ope) -> Formula {
        self.next_var = 0;
        let vars = match ch {
            Characteristic::Reflexive | Characteristic::Irreflexive => self.fresh_n(1),
            Characteristic::Symmetric | Characteristic::Asymmetric => self.fresh_n(2),
            _ => self.fresh_n(3),
        };
        let v: Vec<Term> = vars.iter().map(|y| Term::Var(y.clone())).collect();
        let body = match ch {
            Characteristic::Reflexive => self.translate_ope(p, &v[0], &v[0]),
            Characteristic::Irreflexive => Formula::not(self.translate_ope(p, &v[0], &v[0])),
            Characteristic::Symmetric => {
                Formula::implies(self.translate_ope(p, &v[0], &v[1]), self.translate_ope(p, &v[1], &v[0]))
            }
            Characteristic::Asymmetric => Formula::implies(
                self.translate_ope(p, &v[0], &v[1]),
                Formula::not(self.translate_ope(p, &v[1], &v[0])),
            ),
            Characteristic::Transitive => Formula::implies(
                Formula::and(vec![self.translate_ope(p, &v[0], &v[1]), self.translate_ope(p, &v[1], &v[2])]),
                self.translate_ope(p, &v[0], &v[2]),
            ),
            Characteristic::Functional => Formula::implies(
                Formula::and(vec![self.translate_ope(p, &v[0], &v[1]), self.translate_ope(p, &v[0], &v[2])]),
                Formula::eq(v[1].clone(), v[2].clone()),
            ),
            Characteristic::InverseFunctional => Formula::implies(
                Formula::and(vec![self.translate_ope(p, &v[0], &v[2]), self.translate_ope(p, &v[1], &v[2])]),
                Formula::eq(v[0].clone(), v[1].clone()),
            ),
        };
        Formula::forall(vars, body)
    }
}

fn pairs<T>(list: &[T]) -> Vec<(&T, &T)> {
    let mut out = Vec::new();
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            out.push((&list[i], &list[j]));
        }
    }
    out
}

fn distinct_pairs(ts: &[Term]) -> Vec<Formula> {
    pairs(ts)
        .into_iter()
        .map(|(a, b)| Formula::not(Formula::eq(a.clone(), b.clone())))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Axiom,
    Conjecture,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Axiom => "axiom",
            Role::Conjecture => "conjecture",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TptpFormula {
    pub name: String,
    pub role: Role,
    pub formula: Formula,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TptpProblem {
    pub header: Vec<String>,
    pub formulas: Vec<TptpFormula>,
    pub symbols: SymbolMap,
}

impl TptpProblem {
    pub fn axioms(&self) -> Vec<Formula> {
        self.formulas
            .iter()
            .filter(|f| f.role == Role::Axiom)
            .map(|f| f.formula.clone())
            .collect()
    }

    pub fn conjecture(&self) -> Option<&Formula> {
        self.formulas
            .iter()
            .find(|f| f.role == Role::Conjecture)
            .map(|f| &f.formula)
    }

    /// Records source file names in the header.
    pub fn with_sources(mut self, premise: &str, conclusion: Option<&str>) -> TptpProblem {
        self.header.push(format!("premise: {premise}"));
        if let Some(c) = conclusion {
            self.header.push(format!("conclusion: {c}"));
        }
        self
    }
}

fn premise_formulas(t: &mut Translator, premise: &Ontology) -> Vec<TptpFormula> {
    premise
        .axioms
        .iter()
        .enumerate()
        .filter_map(|(i, a)| {
            let fs = t.translate_axiom(a);
            (!fs.is_empty()).then(|| TptpFormula {
                name: format!("premise_{:03}", i + 1),
                role: Role::Axiom,
                formula: Formula::and(fs),
            })
        })
        .collect()
}

fn header(kind: &str) -> Vec<String> {
    vec![format!("owl-unchained {TOOL_VERSION}: {kind} problem")]
}

pub fn build_entailment_problem(premise: &Ontology, conclusion: &Ontology) -> Result<TptpProblem, TranslateError> {
    let mut t = Translator::new();
    let mut formulas = premise_formulas(&mut t, premise);
    let parts: Vec<Formula> = conclusion.axioms.iter().flat_map(|a| t.translate_axiom(a)).collect();
    if parts.is_empty() {
        return Err(TranslateError::EmptyConclusion);
    }
    formulas.push(TptpFormula {
        name: "conclusion".into(),
        role: Role::Conjecture,
        formula: Formula::and(parts),
    });
    Ok(TptpProblem {
        header: header("entailment"),
        formulas,
        symbols: t.symbols,
    })
}

pub fn build_sat_problem(o: &Ontology) -> TptpProblem {
    let mut t = Translator::new();
    let formulas = premise_formulas(&mut t, o);
    TptpProblem {
        header: header("satisfiability"),
        formulas,
        symbols: t.symbols,
    }
}

pub fn emit_tptp(p: &TptpProblem) -> String {
    let mut out = String::new();
    for line in &p.header {
        writeln!(out, "% {line}").expect("string write");
    }
    if !p.symbols.is_empty() {
        out.push_str("% symbols:\n");
        for (symbol, iri) in p.symbols.entries() {
            writeln!(out, "%   {symbol} = <{iri}>").expect("string write");
        }
    }
    for f in &p.formulas {
        writeln!(out, "fof({}, {}, {}).", f.name, f.role.as_str(), f.formula).expect("string write");
    }
    out
}
