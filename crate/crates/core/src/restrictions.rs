//! OWL 2 DL global restrictions on object properties.
//!
//! Two checks are implemented:
//!
//! * the restriction on simple properties: a composite property (transitive,
//!   the super-property of a chain of length two or more, or a super-property
//!   of either through the hierarchy or inverses) may not appear in
//!   cardinality restrictions, `ObjectHasSelf`, `DisjointObjectProperties`, or
//!   functional / inverse-functional / irreflexive / asymmetric axioms;
//! * the restriction on the property hierarchy: there must be one strict order
//!   over property names such that every chain axiom takes one of the admitted
//!   shapes `P∘P ⊑ P`, `P∘Q..⊑ P`, `Q..∘P ⊑ P`, or `Q1..Qn ⊑ P` with every
//!   `Q` strictly below `P`, and no sub-property sits strictly above its
//!   super-property.
//!
//! Blank-node restrictions and typing constraints are not checked.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::model::*;

/// Reflexive-transitive subsumption over normalized property expressions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Subsumption {
    pairs: BTreeSet<(Ope, Ope)>,
}

impl Subsumption {
    pub fn contains(&self, sub: &Ope, sup: &Ope) -> bool {
        self.pairs.contains(&(sub.normalize(), sup.normalize()))
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(Ope, Ope)> {
        self.pairs.iter()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn supers<'a>(&'a self, sub: &'a Ope) -> impl Iterator<Item = &'a Ope> + 'a {
        self.pairs
            .iter()
            .filter(move |(s, _)| s == sub)
            .map(|(_, sup)| sup)
    }
}

/// Every normalized property expression occurring in `o`, together with its inverse.
pub fn property_universe(o: &Ontology) -> BTreeSet<Ope> {
    let mut all = BTreeSet::new();
    for axiom in &o.axioms {
        for p in axiom.opes() {
            all.insert(p.normalize());
            all.insert(p.inverse());
        }
        if let Axiom::Declaration(EntityKind::ObjectProperty, iri) = axiom {
            let p = Ope::Named(iri.clone());
            all.insert(p.inverse());
            all.insert(p);
        }
    }
    all
}

fn direct_subsumptions(o: &Ontology) -> Vec<(Ope, Ope)> {
    let mut edges = Vec::new();
    for axiom in &o.axioms {
        match axiom {
            Axiom::SubObjectPropertyOf(PropertyOrChain::Property(sub), sup) => {
                edges.push((sub.normalize(), sup.normalize()));
            }
            Axiom::EquivalentObjectProperties(list) => {
                for a in list {
                    for b in list {
                        if a != b {
                            edges.push((a.normalize(), b.normalize()));
                        }
                    }
                }
            }
            Axiom::InverseObjectProperties(p, q) => {
                edges.push((p.normalize(), q.inverse()));
                edges.push((q.inverse(), p.normalize()));
            }
            Axiom::Characteristic(Characteristic::Symmetric, p) => {
                edges.push((p.normalize(), p.inverse()));
                edges.push((p.inverse(), p.normalize()));
            }
            _ => {}
        }
    }
    let inverted: Vec<_> = edges.iter().map(|(a, b)| (a.inverse(), b.inverse())).collect();
    edges.extend(inverted);
    edges
}

pub fn subsumption_closure(o: &Ontology) -> Subsumption {
    let universe = property_universe(o);
    let mut succ: BTreeMap<Ope, BTreeSet<Ope>> = BTreeMap::new();
    for (a, b) in direct_subsumptions(o) {
        succ.entry(a).or_default().insert(b);
    }
    let mut pairs = BTreeSet::new();
    for start in &universe {
        let mut seen = BTreeSet::from([start.clone()]);
        let mut stack = vec![start.clone()];
        while let Some(p) = stack.pop() {
            if let Some(next) = succ.get(&p) {
                for q in next {
                    if seen.insert(q.clone()) {
                        stack.push(q.clone());
                    }
                }
            }
        }
        pairs.extend(seen.into_iter().map(|sup| (start.clone(), sup)));
    }
    Subsumption { pairs }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyClassification {
    pub composite: BTreeSet<Ope>,
    pub simple: BTreeSet<Ope>,
    pub subsumption: Subsumption,
}

impl PropertyClassification {
    pub fn is_composite(&self, ope: &Ope) -> bool {
        self.composite.contains(&ope.normalize())
    }
}

pub fn classify_properties(o: &Ontology) -> PropertyClassification {
    let subsumption = subsumption_closure(o);
    let universe = property_universe(o);
    let mut seeds = Vec::new();
    for axiom in &o.axioms {
        match axiom {
            Axiom::Characteristic(Characteristic::Transitive, p) => seeds.push(p.normalize()),
            Axiom::SubObjectPropertyOf(PropertyOrChain::Chain(chain), sup) if chain.len() >= 2 => {
                seeds.push(sup.normalize())
            }
            _ => {}
        }
    }
    let mut composite = BTreeSet::new();
    let mut stack: Vec<Ope> = seeds.into_iter().flat_map(|p| [p.inverse(), p]).collect();
    while let Some(p) = stack.pop() {
        if !composite.insert(p.clone()) {
            continue;
        }
        stack.push(p.inverse());
        stack.extend(subsumption.supers(&p).cloned());
    }
    let simple = universe.difference(&composite).cloned().collect();
    PropertyClassification {
        composite,
        simple,
        subsumption,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    NonSimpleInCardinality,
    NonSimpleInHasSelf,
    NonSimpleInDisjointness,
    NonSimpleCharacteristic(Characteristic),
    NonRegularChain,
    HierarchyCycle,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::NonSimpleInCardinality => f.write_str("NonSimpleInCardinality"),
            ViolationKind::NonSimpleInHasSelf => f.write_str("NonSimpleInHasSelf"),
            ViolationKind::NonSimpleInDisjointness => f.write_str("NonSimpleInDisjointness"),
            ViolationKind::NonSimpleCharacteristic(c) => {
                write!(f, "NonSimpleCharacteristic({})", c.name())
            }
            ViolationKind::NonRegularChain => f.write_str("NonRegularChain"),
            ViolationKind::HierarchyCycle => f.write_str("HierarchyCycle"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub axiom_index: usize,
    pub property: Ope,
    pub detail: String,
}

impl Violation {
    /// `VIOLATION <kind> <axiom-index> <property-iri>`
    pub fn machine_line(&self) -> String {
        format!(
            "VIOLATION {} {} {}",
            self.kind,
            self.axiom_index,
            ope_token(&self.property)
        )
    }
}

fn ope_token(p: &Ope) -> String {
    if p.is_inverse() {
        format!("ObjectInverseOf({})", p.iri())
    } else {
        p.iri().to_string()
    }
}

pub fn check_simple_usage(o: &Ontology, c: &PropertyClassification) -> Vec<Violation> {
    let mut out = Vec::new();
    for (index, axiom) in o.axioms.iter().enumerate() {
        let mut flag = |kind: ViolationKind, p: &Ope, detail: String| {
            if c.is_composite(p) {
                out.push(Violation {
                    kind,
                    axiom_index: index,
                    property: p.clone(),
                    detail,
                });
            }
        };
        match axiom {
            Axiom::DisjointObjectProperties(list) => {
                for p in list {
                    flag(
                        ViolationKind::NonSimpleInDisjointness,
                        p,
                        format!("composite property {p} used in property disjointness"),
                    );
                }
            }
            Axiom::Characteristic(
                ch @ (Characteristic::Functional
                | Characteristic::InverseFunctional
                | Characteristic::Irreflexive
                | Characteristic::Asymmetric),
                p,
            ) => flag(
                ViolationKind::NonSimpleCharacteristic(*ch),
                p,
                format!("composite property {p} declared {}", ch.name().to_lowercase()),
            ),
            _ => {}
        }
        for ce in axiom.class_expressions() {
            ce.walk(&mut |ce| match ce {
                ClassExpr::MinCardinality(_, p, _)
                | ClassExpr::MaxCardinality(_, p, _)
                | ClassExpr::ExactCardinality(_, p, _) => flag(
                    ViolationKind::NonSimpleInCardinality,
                    p,
                    format!("composite property {p} used in a cardinality restriction"),
                ),
                ClassExpr::HasSelf(p) => flag(
                    ViolationKind::NonSimpleInHasSelf,
                    p,
                    format!("composite property {p} used in a self restriction"),
                ),
                _ => {}
            });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Edge {
    /// sub ⪯ sup from the plain hierarchy
    Weak,
    /// lower ≺ upper required by a chain axiom
    Strict(usize),
}

pub fn check_regularity(o: &Ontology) -> Vec<Violation> {
    let mut violations = Vec::new();
    // Nodes are property names: the order must treat P and inv(P) alike.
    let mut edges: BTreeMap<Iri, BTreeSet<(Iri, Edge)>> = BTreeMap::new();
    let mut add = |from: &Iri, to: &Iri, e: Edge| {
        edges.entry(from.clone()).or_default().insert((to.clone(), e));
    };

    for (sub, sup) in direct_subsumptions(o) {
        if sub.iri() != sup.iri() {
            add(sub.iri(), sup.iri(), Edge::Weak);
        }
    }

    for (index, axiom) in o.axioms.iter().enumerate() {
        let Axiom::SubObjectPropertyOf(PropertyOrChain::Chain(chain), sup) = axiom else {
            continue;
        };
        let sup_n = sup.normalize();
        let chain_n: Vec<Ope> = chain.iter().map(Ope::normalize).collect();
        let n = chain_n.len();
        if n == 2 && chain_n[0] == sup_n && chain_n[1] == sup_n {
            continue;
        }
        // Positions allowed to equal the super-property without an ordering constraint.
        let exempt = if chain_n[0] == sup_n && chain_n[n - 1] != sup_n {
            Some(0)
        } else if chain_n[n - 1] == sup_n && chain_n[0] != sup_n {
            Some(n - 1)
        } else {
            None
        };
        let mut offending = Vec::new();
        for (i, p) in chain_n.iter().enumerate() {
            if Some(i) == exempt {
                continue;
            }
            if p.iri() == sup_n.iri() {
                offending.push(i + 1);
            } else {
                add(p.iri(), sup_n.iri(), Edge::Strict(index));
            }
        }
        if !offending.is_empty() {
            let positions: Vec<String> = offending.iter().map(usize::to_string).collect();
            violations.push(Violation {
                kind: ViolationKind::NonRegularChain,
                axiom_index: index,
                property: sup_n.clone(),
                detail: format!(
                    "{sup} occurs at chain position {} of its own defining chain",
                    positions.join(", ")
                ),
            });
        }
    }

    // A strict edge u ≺ v lies on a cycle iff u is reachable from v.
    let reaches = |from: &Iri, target: &Iri| -> bool {
        let mut seen = BTreeSet::from([from.clone()]);
        let mut stack = vec![from.clone()];
        while let Some(x) = stack.pop() {
            if &x == target {
                return true;
            }
            for (y, _) in edges.get(&x).into_iter().flatten() {
                if seen.insert(y.clone()) {
                    stack.push(y.clone());
                }
            }
        }
        false
    };
    let mut cyclic: BTreeMap<usize, (Iri, Iri)> = BTreeMap::new();
    for (lower, outs) in &edges {
        for (upper, e) in outs {
            if let Edge::Strict(index) = e {
                if !cyclic.contains_key(index) && reaches(upper, lower) {
                    cyclic.insert(*index, (lower.clone(), upper.clone()));
                }
            }
        }
    }
    for (index, (lower, upper)) in cyclic {
        let Axiom::SubObjectPropertyOf(_, sup) = &o.axioms[index] else {
            unreachable!("strict edges come from chain axioms")
        };
        violations.push(Violation {
            kind: ViolationKind::HierarchyCycle,
            axiom_index: index,
            property: sup.normalize(),
            detail: format!(
                "{lower} must be strictly below {upper}, but {upper} is also at or below {lower}"
            ),
        });
    }
    violations.sort_by_key(|v| v.axiom_index);
    violations
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionReport {
    pub classification: PropertyClassification,
    pub violations: Vec<Violation>,
    pub is_owl2dl: bool,
}

impl RestrictionReport {
    pub fn kinds(&self) -> BTreeSet<ViolationKind> {
        self.violations.iter().map(|v| v.kind.clone()).collect()
    }

    pub fn render_machine(&self) -> String {
        self.violations
            .iter()
            .map(|v| v.machine_line() + "\n")
            .collect()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let names = |set: &BTreeSet<Ope>| {
            let list: Vec<_> = set
                .iter()
                .filter(|p| !p.is_inverse())
                .map(|p| p.iri().local_name().to_string())
                .collect();
            if list.is_empty() {
                "(none)".to_string()
            } else {
                list.join(", ")
            }
        };
        out.push_str(&format!("composite properties: {}\n", names(&self.classification.composite)));
        out.push_str(&format!("simple properties: {}\n", names(&self.classification.simple)));
        if self.is_owl2dl {
            out.push_str("OWL 2 DL: yes (global restrictions satisfied)\n");
        } else {
            out.push_str(&format!(
                "OWL 2 DL: no ({} violation{})\n",
                self.violations.len(),
                if self.violations.len() == 1 { "" } else { "s" }
            ));
            for v in &self.violations {
                out.push_str(&format!("  axiom {}: {}: {}\n", v.axiom_index, v.kind, v.detail));
            }
        }
        out
    }
}

pub fn check_global_restrictions(o: &Ontology) -> RestrictionReport {
    let classification = classify_properties(o);
    let mut violations = check_simple_usage(o, &classification);
    violations.extend(check_regularity(o));
    // stable: keeps per-axiom emission order
    violations.sort_by_key(|v| v.axiom_index);
    let is_owl2dl = violations.is_empty();
    RestrictionReport {
        classification,
        violations,
        is_owl2dl,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_ontology;

    fn onto(body: &str) -> Ontology {
        parse_ontology(&format!("Prefix(:=<http://ex.org/>) Ontology( {body} )")).unwrap()
    }

    fn p(name: &str) -> Ope {
        Ope::Named(Iri::new(format!("http://ex.org/{name}")).unwrap())
    }

    #[test]
    fn closure_of_single_subproperty() {
        let s = subsumption_closure(&onto("SubObjectPropertyOf( :loves :z )"));
        assert!(s.contains(&p("loves"), &p("z")));
        assert!(s.contains(&p("loves").inverse(), &p("z").inverse()));
        assert!(s.contains(&p("loves"), &p("loves")));
        assert!(!s.contains(&p("z"), &p("loves")));
        // 4 reflexive + 2 proper
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn closure_of_empty_ontology_is_empty() {
        assert!(subsumption_closure(&Ontology::default()).is_empty());
    }

    #[test]
    fn symmetric_relates_property_and_inverse() {
        let s = subsumption_closure(&onto("SymmetricObjectProperty( :hasRelativeOrSelf )"));
        let r = p("hasRelativeOrSelf");
        assert!(s.contains(&r, &r.inverse()));
        assert!(s.contains(&r.inverse(), &r));
    }

    #[test]
    fn inverse_properties_relate_both_ways() {
        let s = subsumption_closure(&onto("InverseObjectProperties( :hasParent :hasChild )"));
        assert!(s.contains(&p("hasParent"), &p("hasChild").inverse()));
        assert!(s.contains(&p("hasChild").inverse(), &p("hasParent")));
        assert!(s.contains(&p("hasChild"), &p("hasParent").inverse()));
    }

    #[test]
    fn transitive_seeds_composite() {
        let c = classify_properties(&onto("TransitiveObjectProperty( :hasAncestor )"));
        assert!(c.is_composite(&p("hasAncestor")));
        assert!(c.is_composite(&p("hasAncestor").inverse()));
        assert!(c.simple.is_empty());
    }

    #[test]
    fn chain_makes_super_composite_only() {
        let c = classify_properties(&onto(
            "SubObjectPropertyOf( ObjectPropertyChain( :hasParent :hasBrother ) :hasUncle )",
        ));
        assert!(c.is_composite(&p("hasUncle")));
        assert!(!c.is_composite(&p("hasParent")));
        assert!(!c.is_composite(&p("hasBrother")));
        assert!(c.simple.contains(&p("hasParent")));
    }

    #[test]
    fn compositeness_flows_upward_not_downward() {
        let c = classify_properties(&onto(
            "SubObjectPropertyOf( :loves :z ) TransitiveObjectProperty( :z )",
        ));
        assert!(c.is_composite(&p("z")));
        assert!(!c.is_composite(&p("loves")));

        let c = classify_properties(&onto(
            "SubObjectPropertyOf( :z :above ) TransitiveObjectProperty( :z )",
        ));
        assert!(c.is_composite(&p("above")));
    }

    #[test]
    fn legal_family_ontology_has_no_simple_usage_violations() {
        let o = onto(
            "SubObjectPropertyOf( ObjectPropertyChain( :hasParent :hasBrother ) :hasUncle ) \
             FunctionalObjectProperty( :hasParent ) \
             DisjointObjectProperties( :hasParent :hasBrother )",
        );
        assert_eq!(check_simple_usage(&o, &classify_properties(&o)), vec![]);
        assert!(check_global_restrictions(&o).is_owl2dl);
    }

    #[test]
    fn disjointness_flags_each_composite_member() {
        let o = onto(
            "TransitiveObjectProperty( :broaderTransitive ) \
             DisjointObjectProperties( :broaderTransitive :related )",
        );
        let v = check_simple_usage(&o, &classify_properties(&o));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::NonSimpleInDisjointness);
        assert_eq!(v[0].property, p("broaderTransitive"));
        assert_eq!(v[0].axiom_index, 1);
    }

    #[test]
    fn reflexive_and_domain_are_allowed_on_composite() {
        let o = onto(
            "TransitiveObjectProperty( :r ) ReflexiveObjectProperty( :r ) \
             ObjectPropertyDomain( :r :A ) EquivalentObjectProperties( :r :s )",
        );
        assert!(check_global_restrictions(&o).is_owl2dl);
    }

    #[test]
    fn nested_restrictions_are_found() {
        let o = onto(
            "TransitiveObjectProperty( :r ) \
             SubClassOf( :A ObjectSomeValuesFrom( :s ObjectIntersectionOf( :B ObjectHasSelf( ObjectInverseOf( :r ) ) ) ) )",
        );
        let v = check_simple_usage(&o, &classify_properties(&o));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::NonSimpleInHasSelf);
        assert_eq!(v[0].property, p("r").inverse());
    }

    #[test]
    fn transitivity_alone_is_regular() {
        assert_eq!(check_regularity(&onto("TransitiveObjectProperty( :p )")), vec![]);
        assert_eq!(
            check_regularity(&onto("SubObjectPropertyOf( ObjectPropertyChain( :p :p ) :p )")),
            vec![]
        );
    }

    #[test]
    fn edge_positions_are_regular() {
        let o = onto(
            "SubObjectPropertyOf( ObjectPropertyChain( :p :q :r ) :p ) \
             SubObjectPropertyOf( ObjectPropertyChain( :q :r ) :r )",
        );
        assert_eq!(check_regularity(&o), vec![]);
    }

    #[test]
    fn inner_occurrence_is_non_regular() {
        let v = check_regularity(&onto(
            "SubObjectPropertyOf( ObjectPropertyChain( :a :p :b ) :p )",
        ));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::NonRegularChain);
        assert_eq!(v[0].property, p("p"));
    }

    #[test]
    fn inverse_of_super_in_chain_is_non_regular() {
        let v = check_regularity(&onto(
            "SubObjectPropertyOf( ObjectPropertyChain( :a ObjectInverseOf( :p ) ) :p )",
        ));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::NonRegularChain);
    }

    #[test]
    fn hierarchy_against_chain_order_is_a_cycle() {
        // q ≺ p from the chain, but p ⊑ q
        let o = onto(
            "SubObjectPropertyOf( ObjectPropertyChain( :q :r ) :p ) SubObjectPropertyOf( :p :q )",
        );
        let v = check_regularity(&o);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::HierarchyCycle);
        assert_eq!(v[0].axiom_index, 0);
    }

    #[test]
    fn hierarchy_alone_never_cycles() {
        let o = onto("SubObjectPropertyOf( :a :b ) SubObjectPropertyOf( :b :a )");
        assert_eq!(check_regularity(&o), vec![]);
    }

    #[test]
    fn empty_ontology_is_dl() {
        let r = check_global_restrictions(&Ontology::default());
        assert!(r.is_owl2dl);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn machine_format() {
        let o = onto("TransitiveObjectProperty( :r ) AsymmetricObjectProperty( :r )");
        let r = check_global_restrictions(&o);
        assert_eq!(
            r.render_machine(),
            "VIOLATION NonSimpleCharacteristic(Asymmetric) 1 http://ex.org/r\n"
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn axiom_strategy() -> impl Strategy<Value = String> {
            let name = prop::sample::select(vec![":a", ":b", ":c", ":d"]);
            let ope = (name.clone(), any::<bool>()).prop_map(|(n, inv)| {
                if inv {
                    format!("ObjectInverseOf( {n} )")
                } else {
                    n.to_string()
                }
            });
            prop_oneof![
                ope.clone().prop_map(|p| format!("TransitiveObjectProperty( {p} )")),
                ope.clone().prop_map(|p| format!("SymmetricObjectProperty( {p} )")),
                ope.clone().prop_map(|p| format!("AsymmetricObjectProperty( {p} )")),
                (ope.clone(), ope.clone()).prop_map(|(a, b)| format!("SubObjectPropertyOf( {a} {b} )")),
                (ope.clone(), ope.clone()).prop_map(|(a, b)| format!("InverseObjectProperties( {a} {b} )")),
                (ope.clone(), ope.clone()).prop_map(|(a, b)| format!("DisjointObjectProperties( {a} {b} )")),
                (prop::collection::vec(ope.clone(), 2..4), ope.clone()).prop_map(|(c, s)| format!(
                    "SubObjectPropertyOf( ObjectPropertyChain( {} ) {s} )",
                    c.join(" ")
                )),
                ope.prop_map(|p| format!("SubClassOf( :A ObjectHasSelf( {p} ) )")),
            ]
        }

        proptest! {
            #[test]
            fn adding_an_axiom_never_shrinks_composites(
                axioms in prop::collection::vec(axiom_strategy(), 0..6),
                extra in axiom_strategy(),
            ) {
                let before = classify_properties(&onto(&axioms.join(" ")));
                let after = classify_properties(&onto(&format!("{} {extra}", axioms.join(" "))));
                prop_assert!(before.composite.is_subset(&after.composite));
            }

            #[test]
            fn classification_invariants(axioms in prop::collection::vec(axiom_strategy(), 0..8)) {
                let o = onto(&axioms.join(" "));
                let c = classify_properties(&o);
                prop_assert!(c.composite.is_disjoint(&c.simple));
                let all: BTreeSet<_> = c.composite.union(&c.simple).cloned().collect();
                prop_assert_eq!(all, property_universe(&o));
                for p in &c.composite {
                    prop_assert!(c.composite.contains(&p.inverse()));
                    for sup in c.subsumption.supers(p) {
                        prop_assert!(c.composite.contains(sup));
                    }
                }
                let r1 = check_global_restrictions(&o);
                let r2 = check_global_restrictions(&o);
                prop_assert_eq!(&r1, &r2);
                prop_assert_eq!(r1.is_owl2dl, r1.violations.is_empty());
                for v in &r1.violations {
                    prop_assert!(v.axiom_index < o.axioms.len());
                    let axiom_opes: Vec<Ope> = o.axioms[v.axiom_index].opes().into_iter().map(Ope::normalize).collect();
                    prop_assert!(axiom_opes.contains(&v.property.normalize()));
                }
            }
        }
    }
}
