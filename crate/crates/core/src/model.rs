//! Abstract syntax for the object-property fragment of OWL 2.
//!
//! The model covers classes, object properties and named individuals. Data
//! properties, datatypes, annotations and anonymous individuals are not
//! represented; the parser rejects them before an [`Ontology`] is built.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub const OWL_NS: &str = "http://www.w3.org/2002/07/owl#";
pub const OWL_THING: &str = "http://www.w3.org/2002/07/owl#Thing";
pub const OWL_NOTHING: &str = "http://www.w3.org/2002/07/owl#Nothing";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown prefix `{0}`")]
    UnknownPrefix(String),
    #[error("invalid IRI `{0}`")]
    InvalidIri(String),
    #[error("`{0}` is neither a full IRI nor an abbreviated `prefix:local` name")]
    Malformed(String),
}

/// An absolute IRI.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, ModelError> {
        let value = value.into();
        if value.is_empty() || value.chars().any(char::is_whitespace) {
            return Err(ModelError::InvalidIri(value));
        }
        Ok(Iri(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The fragment after the last `#` or `/`, or the whole IRI when that is empty.
    pub fn local_name(&self) -> &str {
        let s = self.0.as_str();
        match s.rfind(['#', '/']) {
            Some(pos) if pos + 1 < s.len() => &s[pos + 1..],
            _ => s,
        }
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Prefix names (possibly empty) mapped to namespace IRIs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixMap {
    entries: BTreeMap<String, String>,
}

impl PrefixMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, prefix: impl Into<String>, namespace: impl Into<String>) {
        self.entries.insert(prefix.into(), namespace.into());
    }

    pub fn get(&self, prefix: &str) -> Result<&str, ModelError> {
        self.entries
            .get(prefix)
            .map(String::as_str)
            .ok_or_else(|| ModelError::UnknownPrefix(prefix.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Shortest `prefix:local` spelling of `iri`, if some namespace matches
    /// and the remainder is a plain local name.
    pub fn abbreviate(&self, iri: &Iri) -> Option<String> {
        let mut best: Option<(&str, &str)> = None;
        for (prefix, ns) in self.iter() {
            if let Some(local) = iri.as_str().strip_prefix(ns) {
                if !is_simple_local(local) {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((_, best_local)) => local.len() < best_local.len(),
                };
                if better {
                    best = Some((prefix, local));
                }
            }
        }
        best.map(|(p, l)| format!("{p}:{l}"))
    }
}

fn is_simple_local(local: &str) -> bool {
    !local.is_empty()
        && !local.ends_with('.')
        && local
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

/// Expand `prefix:local` or `<full-iri>` against `prefixes`.
pub fn resolve(prefixes: &PrefixMap, abbreviated: &str) -> Result<Iri, ModelError> {
    if let Some(inner) = abbreviated
        .strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
    {
        return Iri::new(inner);
    }
    let (prefix, local) = abbreviated
        .split_once(':')
        .ok_or_else(|| ModelError::Malformed(abbreviated.to_string()))?;
    let ns = prefixes.get(prefix)?;
    Iri::new(format!("{ns}{local}"))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObjectPropertyExpression {
    Named(Iri),
    InverseOf(Box<ObjectPropertyExpression>),
}

pub type Ope = ObjectPropertyExpression;

impl ObjectPropertyExpression {
    pub fn named(iri: Iri) -> Self {
        Ope::Named(iri)
    }

    pub fn inverse_of(inner: Ope) -> Self {
        Ope::InverseOf(Box::new(inner))
    }

    /// The underlying property name, ignoring any number of inversions.
    pub fn iri(&self) -> &Iri {
        match self {
            Ope::Named(iri) => iri,
            Ope::InverseOf(inner) => inner.iri(),
        }
    }

    /// True when an odd number of inversions wraps the name.
    pub fn is_inverse(&self) -> bool {
        match self {
            Ope::Named(_) => false,
            Ope::InverseOf(inner) => !inner.is_inverse(),
        }
    }

    pub fn normalize(&self) -> Ope {
        normalize_ope(self)
    }

    /// Normalized inverse of this expression.
    pub fn inverse(&self) -> Ope {
        if self.is_inverse() {
            Ope::Named(self.iri().clone())
        } else {
            Ope::inverse_of(Ope::Named(self.iri().clone()))
        }
    }
}

pub fn normalize_ope(ope: &Ope) -> Ope {
    let named = Ope::Named(ope.iri().clone());
    if ope.is_inverse() {
        Ope::inverse_of(named)
    } else {
        named
    }
}

impl fmt::Display for ObjectPropertyExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ope::Named(iri) => write!(f, "{iri}"),
            Ope::InverseOf(inner) => write!(f, "ObjectInverseOf({inner})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassExpression {
    Named(Iri),
    Thing,
    Nothing,
    IntersectionOf(Vec<ClassExpression>),
    UnionOf(Vec<ClassExpression>),
    ComplementOf(Box<ClassExpression>),
    SomeValuesFrom(Ope, Box<ClassExpression>),
    AllValuesFrom(Ope, Box<ClassExpression>),
    HasSelf(Ope),
    MinCardinality(u32, Ope, Box<ClassExpression>),
    MaxCardinality(u32, Ope, Box<ClassExpression>),
    ExactCardinality(u32, Ope, Box<ClassExpression>),
    OneOf(Vec<Iri>),
    HasValue(Ope, Iri),
}

pub type ClassExpr = ClassExpression;

impl ClassExpression {
    pub fn named(iri: Iri) -> Self {
        ClassExpr::Named(iri)
    }

    pub fn some(ope: Ope, filler: ClassExpr) -> Self {
        ClassExpr::SomeValuesFrom(ope, Box::new(filler))
    }

    pub fn all(ope: Ope, filler: ClassExpr) -> Self {
        ClassExpr::AllValuesFrom(ope, Box::new(filler))
    }

    pub fn min(n: u32, ope: Ope, filler: ClassExpr) -> Self {
        ClassExpr::MinCardinality(n, ope, Box::new(filler))
    }

    pub fn max(n: u32, ope: Ope, filler: ClassExpr) -> Self {
        ClassExpr::MaxCardinality(n, ope, Box::new(filler))
    }

    pub fn exact(n: u32, ope: Ope, filler: ClassExpr) -> Self {
        ClassExpr::ExactCardinality(n, ope, Box::new(filler))
    }

    /// Calls `f` on every property expression inside this class expression.
    pub fn for_each_ope<'a>(&'a self, f: &mut impl FnMut(&'a Ope)) {
        match self {
            ClassExpr::Named(_) | ClassExpr::Thing | ClassExpr::Nothing | ClassExpr::OneOf(_) => {}
            ClassExpr::IntersectionOf(list) | ClassExpr::UnionOf(list) => {
                list.iter().for_each(|c| c.for_each_ope(f))
            }
            ClassExpr::ComplementOf(c) => c.for_each_ope(f),
            ClassExpr::SomeValuesFrom(p, c)
            | ClassExpr::AllValuesFrom(p, c)
            | ClassExpr::MinCardinality(_, p, c)
            | ClassExpr::MaxCardinality(_, p, c)
            | ClassExpr::ExactCardinality(_, p, c) => {
                f(p);
                c.for_each_ope(f);
            }
            ClassExpr::HasSelf(p) | ClassExpr::HasValue(p, _) => f(p),
        }
    }

    /// Calls `f` on this expression and every nested class expression, outermost first.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a ClassExpr)) {
        f(self);
        match self {
            ClassExpr::IntersectionOf(list) | ClassExpr::UnionOf(list) => {
                list.iter().for_each(|c| c.walk(f))
            }
            ClassExpr::ComplementOf(c)
            | ClassExpr::SomeValuesFrom(_, c)
            | ClassExpr::AllValuesFrom(_, c)
            | ClassExpr::MinCardinality(_, _, c)
            | ClassExpr::MaxCardinality(_, _, c)
            | ClassExpr::ExactCardinality(_, _, c) => c.walk(f),
            _ => {}
        }
    }
}

/// Either a single property or an `ObjectPropertyChain` of at least two.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PropertyOrChain {
    Property(Ope),
    Chain(Vec<Ope>),
}

impl PropertyOrChain {
    pub fn opes(&self) -> &[Ope] {
        match self {
            PropertyOrChain::Property(p) => std::slice::from_ref(p),
            PropertyOrChain::Chain(list) => list,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntityKind {
    Class,
    ObjectProperty,
    NamedIndividual,
}

impl EntityKind {
    pub fn keyword(self) -> &'static str {
        match self {
            EntityKind::Class => "Class",
            EntityKind::ObjectProperty => "ObjectProperty",
            EntityKind::NamedIndividual => "NamedIndividual",
        }
    }
}

/// The property characteristics expressible as unary axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Characteristic {
    Transitive,
    Symmetric,
    Asymmetric,
    Reflexive,
    Irreflexive,
    Functional,
    InverseFunctional,
}

impl Characteristic {
    pub const ALL: [Characteristic; 7] = [
        Characteristic::Transitive,
        Characteristic::Symmetric,
        Characteristic::Asymmetric,
        Characteristic::Reflexive,
        Characteristic::Irreflexive,
        Characteristic::Functional,
        Characteristic::InverseFunctional,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Characteristic::Transitive => "Transitive",
            Characteristic::Symmetric => "Symmetric",
            Characteristic::Asymmetric => "Asymmetric",
            Characteristic::Reflexive => "Reflexive",
            Characteristic::Irreflexive => "Irreflexive",
            Characteristic::Functional => "Functional",
            Characteristic::InverseFunctional => "InverseFunctional",
        }
    }

    /// Functional-syntax keyword, e.g. `TransitiveObjectProperty`.
    pub fn keyword(self) -> &'static str {
        match self {
            Characteristic::Transitive => "TransitiveObjectProperty",
            Characteristic::Symmetric => "SymmetricObjectProperty",
            Characteristic::Asymmetric => "AsymmetricObjectProperty",
            Characteristic::Reflexive => "ReflexiveObjectProperty",
            Characteristic::Irreflexive => "IrreflexiveObjectProperty",
            Characteristic::Functional => "FunctionalObjectProperty",
            Characteristic::InverseFunctional => "InverseFunctionalObjectProperty",
        }
    }

    pub fn from_keyword(keyword: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.keyword() == keyword)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Axiom {
    SubClassOf(ClassExpr, ClassExpr),
    EquivalentClasses(Vec<ClassExpr>),
    DisjointClasses(Vec<ClassExpr>),
    SubObjectPropertyOf(PropertyOrChain, Ope),
    EquivalentObjectProperties(Vec<Ope>),
    DisjointObjectProperties(Vec<Ope>),
    InverseObjectProperties(Ope, Ope),
    Characteristic(Characteristic, Ope),
    ObjectPropertyDomain(Ope, ClassExpr),
    ObjectPropertyRange(Ope, ClassExpr),
    ClassAssertion(ClassExpr, Iri),
    ObjectPropertyAssertion(Ope, Iri, Iri),
    NegativeObjectPropertyAssertion(Ope, Iri, Iri),
    SameIndividual(Vec<Iri>),
    DifferentIndividuals(Vec<Iri>),
    Declaration(EntityKind, Iri),
}

impl Axiom {
    /// Every class expression appearing at the top level of this axiom.
    pub fn class_expressions(&self) -> Vec<&ClassExpr> {
        match self {
            Axiom::SubClassOf(a, b) => vec![a, b],
            Axiom::EquivalentClasses(list) | Axiom::DisjointClasses(list) => list.iter().collect(),
            Axiom::ObjectPropertyDomain(_, c)
            | Axiom::ObjectPropertyRange(_, c)
            | Axiom::ClassAssertion(c, _) => vec![c],
            _ => Vec::new(),
        }
    }

    /// Every property expression occurring anywhere in this axiom.
    pub fn opes(&self) -> Vec<&Ope> {
        let mut out = Vec::new();
        match self {
            Axiom::SubObjectPropertyOf(sub, sup) => {
                out.extend(sub.opes());
                out.push(sup);
            }
            Axiom::EquivalentObjectProperties(list) | Axiom::DisjointObjectProperties(list) => {
                out.extend(list)
            }
            Axiom::InverseObjectProperties(a, b) => {
                out.push(a);
                out.push(b);
            }
            Axiom::Characteristic(_, p)
            | Axiom::ObjectPropertyDomain(p, _)
            | Axiom::ObjectPropertyRange(p, _)
            | Axiom::ObjectPropertyAssertion(p, _, _)
            | Axiom::NegativeObjectPropertyAssertion(p, _, _) => out.push(p),
            _ => {}
        }
        for ce in self.class_expressions() {
            ce.for_each_ope(&mut |p| out.push(p));
        }
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ontology {
    pub iri: Option<Iri>,
    pub prefixes: PrefixMap,
    pub axioms: Vec<Axiom>,
}

impl Ontology {
    pub fn new(prefixes: PrefixMap) -> Self {
        Ontology {
            iri: None,
            prefixes,
            axioms: Vec::new(),
        }
    }

    pub fn with_axioms(prefixes: PrefixMap, axioms: Vec<Axiom>) -> Self {
        Ontology {
            iri: None,
            prefixes,
            axioms,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty()
    }
}

/// Names used by an ontology, grouped by the role they play.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    pub classes: BTreeSet<Iri>,
    pub properties: BTreeSet<Iri>,
    pub individuals: BTreeSet<Iri>,
}

pub fn signature(o: &Ontology) -> Signature {
    let mut sig = Signature::default();
    for axiom in &o.axioms {
        for p in axiom.opes() {
            sig.properties.insert(p.iri().clone());
        }
        for ce in axiom.class_expressions() {
            ce.walk(&mut |c| match c {
                ClassExpr::Named(iri) => {
                    sig.classes.insert(iri.clone());
                }
                ClassExpr::OneOf(list) => sig.individuals.extend(list.iter().cloned()),
                ClassExpr::HasValue(_, a) => {
                    sig.individuals.insert(a.clone());
                }
                _ => {}
            });
        }
        match axiom {
            Axiom::ClassAssertion(_, a) => {
                sig.individuals.insert(a.clone());
            }
            Axiom::ObjectPropertyAssertion(_, a, b)
            | Axiom::NegativeObjectPropertyAssertion(_, a, b) => {
                sig.individuals.insert(a.clone());
                sig.individuals.insert(b.clone());
            }
            Axiom::SameIndividual(list) | Axiom::DifferentIndividuals(list) => {
                sig.individuals.extend(list.iter().cloned())
            }
            Axiom::Declaration(kind, iri) => {
                let set = match kind {
                    EntityKind::Class => &mut sig.classes,
                    EntityKind::ObjectProperty => &mut sig.properties,
                    EntityKind::NamedIndividual => &mut sig.individuals,
                };
                set.insert(iri.clone());
            }
            _ => {}
        }
    }
    sig
}
