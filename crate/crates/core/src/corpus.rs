//! The twelve family-relations test cases.
//!
//! Each premise is a modeling pattern outside OWL 2 DL plus a small set of
//! assertions that make the pattern's characteristic inference fire. The
//! conclusion states that inference; the mutant is a nearby statement the
//! premise does not entail. Negative conclusions use
//! `NegativeObjectPropertyAssertion`. The `:` prefix is
//! `http://example.org/family#`.

use std::collections::BTreeSet;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::model::{Characteristic, Ontology};
use crate::parser::parse_ontology;
use crate::restrictions::ViolationKind;

pub const NAMESPACE: &str = "http://example.org/family#";

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown test case `{0}`")]
    UnknownCase(String),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestCase {
    /// Two-digit number followed by the pattern name, e.g. `01AsymmetricTransitive`.
    pub id: &'static str,
    pub premise: Ontology,
    pub conclusion: Ontology,
    pub mutant: Ontology,
    pub expected_kinds: BTreeSet<ViolationKind>,
    pub notes: &'static str,
    pub premise_text: String,
    pub conclusion_text: String,
    pub mutant_text: String,
}

impl TestCase {
    pub fn number(&self) -> &'static str {
        &self.id[..2]
    }
}

struct Source {
    id: &'static str,
    axioms: &'static str,
    assertions: &'static str,
    conclusion: &'static str,
    mutant: &'static str,
    kinds: &'static [ViolationKind],
    notes: &'static str,
}

const ASYMMETRIC: ViolationKind = ViolationKind::NonSimpleCharacteristic(Characteristic::Asymmetric);
const FUNCTIONAL: ViolationKind = ViolationKind::NonSimpleCharacteristic(Characteristic::Functional);

const SOURCES: [Source; 12] = [
    Source {
        id: "01AsymmetricTransitive",
        axioms: "TransitiveObjectProperty( :hasAncestor )
AsymmetricObjectProperty( :hasAncestor )",
        assertions: "ObjectPropertyAssertion( :hasAncestor :bill :john )
ObjectPropertyAssertion( :hasAncestor :john :mary )",
        conclusion: "ObjectPropertyAssertion( :hasAncestor :bill :mary )
NegativeObjectPropertyAssertion( :hasAncestor :mary :bill )",
        mutant: "ObjectPropertyAssertion( :hasAncestor :mary :bill )",
        kinds: &[ASYMMETRIC],
        notes: "Transitivity gives hasAncestor(bill,mary); asymmetry then rules out \
                hasAncestor(mary,bill). Ground proof at depth 0. Countermodel for the \
                mutant: three elements ordered bill < john < mary.",
    },
    Source {
        id: "02AsymmetricChained",
        axioms: "SubObjectPropertyOf(
  ObjectPropertyChain( :hasParent :hasBrother )
  :hasUncle )
AsymmetricObjectProperty( :hasUncle )",
        assertions: "ObjectPropertyAssertion( :hasParent :mary :john )
ObjectPropertyAssertion( :hasBrother :john :tom )",
        conclusion: "ObjectPropertyAssertion( :hasUncle :mary :tom )
NegativeObjectPropertyAssertion( :hasUncle :tom :mary )",
        mutant: "ObjectPropertyAssertion( :hasUncle :tom :mary )",
        kinds: &[ASYMMETRIC],
        notes: "The chain composes hasParent(mary,john) and hasBrother(john,tom) into \
                hasUncle(mary,tom); asymmetry excludes the reverse. Depth 0.",
    },
    Source {
        id: "03DisjointTransitive",
        axioms: "TransitiveObjectProperty( :hasAncestor )
TransitiveObjectProperty( :hasDescendant )
DisjointObjectProperties( :hasDescendant :hasAncestor )",
        assertions: "ObjectPropertyAssertion( :hasAncestor :bill :john )
ObjectPropertyAssertion( :hasAncestor :john :mary )",
        conclusion: "ObjectPropertyAssertion( :hasAncestor :bill :mary )
NegativeObjectPropertyAssertion( :hasDescendant :bill :mary )",
        mutant: "ObjectPropertyAssertion( :hasAncestor :mary :bill )",
        kinds: &[ViolationKind::NonSimpleInDisjointness],
        notes: "Transitivity yields hasAncestor(bill,mary) and disjointness forbids the \
                same pair in hasDescendant. Depth 0. Nothing forces hasAncestor(mary,bill).",
    },
    Source {
        id: "04DisjointChained",
        axioms: "SubObjectPropertyOf(
  ObjectPropertyChain( :hasParent :hasBrother )
  :hasUncle )
DisjointObjectProperties( :hasUncle :hasParent :hasBrother )",
        assertions: "ObjectPropertyAssertion( :hasParent :mary :john )
ObjectPropertyAssertion( :hasBrother :john :tom )",
        conclusion: "ObjectPropertyAssertion( :hasUncle :mary :tom )
NegativeObjectPropertyAssertion( :hasParent :mary :tom )",
        mutant: "ObjectPropertyAssertion( :hasUncle :tom :mary )",
        kinds: &[ViolationKind::NonSimpleInDisjointness],
        notes: "The chain gives hasUncle(mary,tom); disjointness of hasUncle and \
                hasParent then excludes hasParent(mary,tom). Depth 0.",
    },
    Source {
        id: "05NumberrestrictedTransitive",
        axioms: "TransitiveObjectProperty( :hasAncestor )
SubClassOf(
  :Person
  ObjectMinCardinality( 2 :hasAncestor :Person ) )",
        assertions: "ClassAssertion( :Person :bill )",
        conclusion: "ClassAssertion(
  ObjectSomeValuesFrom( :hasAncestor ObjectSomeValuesFrom( :hasAncestor owl:Thing ) )
  :bill )",
        mutant: "ClassAssertion( ObjectSomeValuesFrom( ObjectInverseOf( :hasAncestor ) owl:Thing ) :bill )",
        kinds: &[ViolationKind::NonSimpleInCardinality],
        notes: "bill has an ancestor sk1(bill) that is a Person, which in turn has an \
                ancestor sk1(sk1(bill)); the refutation needs ground terms of depth 2. \
                Premise model of size 2: two persons, each an ancestor of both. Mutant \
                countermodel of size 3: bill below a two-element mutual-ancestor cluster \
                with nothing above bill.",
    },
    Source {
        id: "06NumberrestrictedChained",
        axioms: "SubObjectPropertyOf(
  ObjectPropertyChain( :hasMother :hasFather )
  :hasMaternalGrandfather )
FunctionalObjectProperty( :hasMaternalGrandfather )",
        assertions: "ObjectPropertyAssertion( :hasMother :mary :susan )
ObjectPropertyAssertion( :hasFather :susan :john )
ObjectPropertyAssertion( :hasMaternalGrandfather :mary :gramps )",
        conclusion: "SameIndividual( :john :gramps )",
        mutant: "ObjectPropertyAssertion( :hasMaternalGrandfather :gramps :mary )",
        kinds: &[FUNCTIONAL],
        notes: "The chain gives hasMaternalGrandfather(mary,john); with the asserted \
                hasMaternalGrandfather(mary,gramps), functionality identifies john and \
                gramps. Needs the ground equality axioms; depth 0.",
    },
    Source {
        id: "07NonregularSingleChained",
        axioms: "SubObjectPropertyOf(
  ObjectPropertyChain(
    :hasMother
    :hasRelative
    ObjectInverseOf( :hasFather ) )
  :hasRelative )",
        assertions: "ObjectPropertyAssertion( :hasMother :mary :susan )
ObjectPropertyAssertion( :hasFather :bill :john )
ObjectPropertyAssertion( :hasRelative :susan :john )",
        conclusion: "ObjectPropertyAssertion( :hasRelative :mary :bill )",
        mutant: "ObjectPropertyAssertion( :hasRelative :bill :mary )",
        kinds: &[ViolationKind::NonRegularChain],
        notes: "One chain step: mary -hasMother-> susan -hasRelative-> john \
                <-hasFather- bill. Depth 0. hasRelative is not symmetric, so the \
                reverse direction fails in a model with just the asserted facts.",
    },
    Source {
        id: "08NonregularMultiChained",
        axioms: "SubObjectPropertyOf(
  ObjectPropertyChain( :hasCousin :hasFather )
  :hasUncle )
SubObjectPropertyOf(
  ObjectPropertyChain( :hasUncle ObjectInverseOf( :hasFather ) )
  :hasCousin )",
        assertions: "ObjectPropertyAssertion( :hasCousin :bill :charlie )
ObjectPropertyAssertion( :hasFather :charlie :tom )
ObjectPropertyAssertion( :hasFather :dave :tom )",
        conclusion: "ObjectPropertyAssertion( :hasUncle :bill :tom )
ObjectPropertyAssertion( :hasCousin :bill :dave )",
        mutant: "ObjectPropertyAssertion( :hasUncle :tom :bill )",
        kinds: &[ViolationKind::HierarchyCycle],
        notes: "The first chain gives hasUncle(bill,tom), which the second chain combines \
                with hasFather(dave,tom) into hasCousin(bill,dave). Depth 0.",
    },
    Source {
        id: "09ScopedEquivalence",
        axioms: "SymmetricObjectProperty( :hasRelativeOrSelf )
TransitiveObjectProperty( :hasRelativeOrSelf )
EquivalentClasses( :Person ObjectHasSelf( :hasRelativeOrSelf ) )",
        assertions: "ObjectPropertyAssertion( :hasRelativeOrSelf :mary :susan )",
        conclusion: "ClassAssertion( :Person :mary )
ClassAssertion( :Person :susan )",
        mutant: "NegativeObjectPropertyAssertion( :hasRelativeOrSelf :susan :mary )",
        kinds: &[ViolationKind::NonSimpleInHasSelf],
        notes: "Symmetry gives hasRelativeOrSelf(susan,mary); transitivity through either \
                order gives the two self loops, hence both are Persons. Depth 0. The \
                mutant denies what symmetry forces, so any premise model refutes it.",
    },
    Source {
        id: "10ReflexiveTransitive",
        axioms: "SubObjectPropertyOf( :hasParent :hasAncestorOrSelf )
TransitiveObjectProperty( :hasAncestorOrSelf )
EquivalentClasses( :Person ObjectHasSelf( :hasAncestorOrSelf ) )",
        assertions: "ClassAssertion( :Person :mary )
ClassAssertion( :Person :susan )
ObjectPropertyAssertion( :hasParent :mary :susan )
ObjectPropertyAssertion( :hasParent :susan :anne )
ClassAssertion( :Person :anne )",
        conclusion: "ObjectPropertyAssertion( :hasAncestorOrSelf :mary :anne )",
        mutant: "ObjectPropertyAssertion( :hasAncestorOrSelf :anne :mary )",
        kinds: &[ViolationKind::NonSimpleInHasSelf],
        notes: "Both parent links lift to hasAncestorOrSelf and transitivity joins them. \
                Depth 0. Nothing relates anne back to mary.",
    },
    Source {
        id: "11CyclicSingleRelation",
        axioms: "SubObjectPropertyOf( :loves :z )
TransitiveObjectProperty( :z )
SubClassOf( ObjectHasSelf( :z ) :LovedLover )",
        assertions: "ObjectPropertyAssertion( :loves :abel :beth )
ObjectPropertyAssertion( :loves :beth :chris )
ObjectPropertyAssertion( :loves :chris :abel )",
        conclusion: "ClassAssertion( :LovedLover :abel )
ClassAssertion( :LovedLover :beth )
ClassAssertion( :LovedLover :chris )",
        mutant: "ObjectPropertyAssertion( :loves :abel :chris )",
        kinds: &[ViolationKind::NonSimpleInHasSelf],
        notes: "The three loves links lift to z and transitivity closes the cycle into a \
                z self loop at every member. Depth 0. The mutant adds a link that is only \
                in z, not in loves.",
    },
    Source {
        id: "12CyclicMultiRelation",
        axioms: "SubObjectPropertyOf(
  ObjectPropertyChain(
    :hasMother
    :hasSpouse
    ObjectInverseOf( :hasFather ) )
  :z )
SubClassOf( ObjectHasSelf( :z ) :LegitimateChild )",
        assertions: "ObjectPropertyAssertion( :hasMother :junior :alice )
ObjectPropertyAssertion( :hasSpouse :alice :bob )
ObjectPropertyAssertion( :hasFather :junior :bob )",
        conclusion: "ClassAssertion( :LegitimateChild :junior )",
        mutant: "ObjectPropertyAssertion( :hasSpouse :bob :alice )",
        kinds: &[ViolationKind::NonSimpleInHasSelf],
        notes: "The chain junior -hasMother-> alice -hasSpouse-> bob <-hasFather- junior \
                is a z self loop at junior. Depth 0. hasSpouse is not declared symmetric.",
    },
];

fn document(id: &str, part: &str, body: &str) -> String {
    let owl = if body.contains("owl:") {
        "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
    } else {
        ""
    };
    format!(
        "# {id}: {part}\nPrefix(:=<{NAMESPACE}>)\n{owl}Ontology(<http://example.org/family/{id}/{part}>\n{body}\n)\n"
    )
}

fn build(src: &Source) -> TestCase {
    let premise_text = document(src.id, "premise", &format!("{}\n{}", src.axioms, src.assertions));
    let conclusion_text = document(src.id, "conclusion", src.conclusion);
    let mutant_text = document(src.id, "mutant", src.mutant);
    let parse = |text: &str| parse_ontology(text).unwrap_or_else(|e| panic!("embedded case {}: {e}", src.id));
    TestCase {
        id: src.id,
        premise: parse(&premise_text),
        conclusion: parse(&conclusion_text),
        mutant: parse(&mutant_text),
        expected_kinds: src.kinds.iter().cloned().collect(),
        notes: src.notes,
        premise_text,
        conclusion_text,
        mutant_text,
    }
}

pub fn list_cases() -> Vec<TestCase> {
    SOURCES.iter().map(build).collect()
}

/// Looks a case up by full id or by its two-digit number.
pub fn get_case(id: &str) -> Result<TestCase, CorpusError> {
    SOURCES
        .iter()
        .find(|s| s.id == id || (id.len() == 2 && s.id.starts_with(id)))
        .map(build)
        .ok_or_else(|| CorpusError::UnknownCase(id.to_string()))
}

/// Writes `<dir>/<id>/owl2functional/{premise,conclusion}.ofn` for every case,
/// plus `mutant.ofn` when `mutants` is set. Returns the paths written.
pub fn write_case_files(dir: &Path, mutants: bool) -> Result<Vec<PathBuf>, CorpusError> {
    let mut written = Vec::new();
    for case in list_cases() {
        let sub = dir.join(case.id).join("owl2functional");
        fs::create_dir_all(&sub).map_err(|source| CorpusError::Io {
            path: sub.clone(),
            source,
        })?;
        let mut files = vec![("premise.ofn", &case.premise_text), ("conclusion.ofn", &case.conclusion_text)];
        if mutants {
            files.push(("mutant.ofn", &case.mutant_text));
        }
        for (name, text) in files {
            let path = sub.join(name);
            fs::write(&path, text).map_err(|source| CorpusError::Io {
                path: path.clone(),
                source,
            })?;
            written.push(path);
        }
    }
    Ok(written)
}
