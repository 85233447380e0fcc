//! Concept expressions, roles, axioms and the ontology store for the
//! AL[U][E][C][H][O](D) fragment.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

/// Literal filler of a data role.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Literal {
    Int(i64),
    /// Open-world rank marker such as `n` or `n-2`.
    Symbol(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConceptExpr {
    Bottom,
    Top,
    Atom(String),
    Nominal(String),
    DataNominal(Literal),
    /// `∀R.D` for a data role `R` and a datatype `D`.
    DataAll(String, String),
    Not(Box<ConceptExpr>),
    AllValues(String, Box<ConceptExpr>),
    And(Vec<ConceptExpr>),
    Or(Vec<ConceptExpr>),
}

impl ConceptExpr {
    pub fn atom(name: impl Into<String>) -> Self {
        ConceptExpr::Atom(name.into())
    }

    pub fn nominal(name: impl Into<String>) -> Self {
        ConceptExpr::Nominal(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: ConceptExpr) -> Self {
        ConceptExpr::Not(Box::new(e))
    }

    pub fn all(role: impl Into<String>, e: ConceptExpr) -> Self {
        ConceptExpr::AllValues(role.into(), Box::new(e))
    }

    /// Flattened, sorted, deduplicated conjunction. One member collapses
    /// to itself, none to `Top`.
    pub fn and(members: Vec<ConceptExpr>) -> Self {
        let mut flat = Vec::new();
        for m in members {
            match m {
                ConceptExpr::And(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        flat.sort();
        flat.dedup();
        match flat.len() {
            0 => ConceptExpr::Top,
            1 => flat.pop().unwrap(),
            _ => ConceptExpr::And(flat),
        }
    }

    /// Flattened, sorted, deduplicated disjunction. One member collapses
    /// to itself, none to `Bottom`.
    pub fn or(members: Vec<ConceptExpr>) -> Self {
        let mut flat = Vec::new();
        for m in members {
            match m {
                ConceptExpr::Or(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        flat.sort();
        flat.dedup();
        match flat.len() {
            0 => ConceptExpr::Bottom,
            1 => flat.pop().unwrap(),
            _ => ConceptExpr::Or(flat),
        }
    }

    /// Rebuilds the tree bottom-up through the canonicalizing constructors.
    pub fn canonical(&self) -> Self {
        match self {
            ConceptExpr::Not(e) => ConceptExpr::not(e.canonical()),
            ConceptExpr::AllValues(r, e) => ConceptExpr::all(r.clone(), e.canonical()),
            ConceptExpr::And(ms) => ConceptExpr::and(ms.iter().map(|m| m.canonical()).collect()),
            ConceptExpr::Or(ms) => ConceptExpr::or(ms.iter().map(|m| m.canonical()).collect()),
            other => other.clone(),
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            ConceptExpr::Atom(n) => Some(n),
            _ => None,
        }
    }

    /// Visits every sub-expression, the root included.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a ConceptExpr)) {
        f(self);
        match self {
            ConceptExpr::Not(e) | ConceptExpr::AllValues(_, e) => e.walk(f),
            ConceptExpr::And(ms) | ConceptExpr::Or(ms) => ms.iter().for_each(|m| m.walk(f)),
            _ => {}
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk(&mut |e| {
            if let ConceptExpr::Atom(n) = e {
                out.insert(n.clone());
            }
        });
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    SubClassOf(ConceptExpr, ConceptExpr),
    EquivalentTo(ConceptExpr, ConceptExpr),
    ConceptAssertion(ConceptExpr, String),
    RoleAssertion(String, String, String),
    DataAssertion(String, String, Literal),
    SameIndividual(String, String),
}

impl Axiom {
    pub fn sub(a: ConceptExpr, b: ConceptExpr) -> Self {
        Axiom::SubClassOf(a, b)
    }

    pub fn equiv(a: ConceptExpr, b: ConceptExpr) -> Self {
        Axiom::EquivalentTo(a, b)
    }

    pub fn member(c: ConceptExpr, ind: impl Into<String>) -> Self {
        Axiom::ConceptAssertion(c, ind.into())
    }

    pub fn same(a: impl Into<String>, b: impl Into<String>) -> Self {
        let (a, b) = (a.into(), b.into());
        if a <= b {
            Axiom::SameIndividual(a, b)
        } else {
            Axiom::SameIndividual(b, a)
        }
    }

    pub fn canonical(&self) -> Self {
        match self {
            Axiom::SubClassOf(a, b) => Axiom::SubClassOf(a.canonical(), b.canonical()),
            Axiom::EquivalentTo(a, b) => Axiom::EquivalentTo(a.canonical(), b.canonical()),
            Axiom::ConceptAssertion(c, i) => Axiom::ConceptAssertion(c.canonical(), i.clone()),
            Axiom::SameIndividual(a, b) => Axiom::same(a.clone(), b.clone()),
            other => other.clone(),
        }
    }

    pub fn is_abox(&self) -> bool {
        matches!(
            self,
            Axiom::ConceptAssertion(..)
                | Axiom::RoleAssertion(..)
                | Axiom::DataAssertion(..)
                | Axiom::SameIndividual(..)
        )
    }

    pub fn exprs(&self) -> Vec<&ConceptExpr> {
        match self {
            Axiom::SubClassOf(a, b) | Axiom::EquivalentTo(a, b) => vec![a, b],
            Axiom::ConceptAssertion(c, _) => vec![c],
            _ => Vec::new(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for e in self.exprs() {
            out.extend(e.atoms());
        }
        out
    }

    pub fn individuals(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for e in self.exprs() {
            e.walk(&mut |x| {
                if let ConceptExpr::Nominal(n) = x {
                    out.insert(n.clone());
                }
            });
        }
        match self {
            Axiom::ConceptAssertion(_, i) => {
                out.insert(i.clone());
            }
            Axiom::RoleAssertion(_, a, b) | Axiom::SameIndividual(a, b) => {
                out.insert(a.clone());
                out.insert(b.clone());
            }
            Axiom::DataAssertion(_, a, _) => {
                out.insert(a.clone());
            }
            _ => {}
        }
        out
    }

    /// Object and data roles mentioned by the axiom.
    pub fn roles(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for e in self.exprs() {
            e.walk(&mut |x| match x {
                ConceptExpr::AllValues(r, _) | ConceptExpr::DataAll(r, _) => {
                    out.insert(r.clone());
                }
                _ => {}
            });
        }
        match self {
            Axiom::RoleAssertion(r, _, _) | Axiom::DataAssertion(r, _, _) => {
                out.insert(r.clone());
            }
            _ => {}
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Provenance {
    pub source_index: usize,
    pub rule_id: String,
}

impl Provenance {
    pub fn new(source_index: usize, rule_id: impl Into<String>) -> Self {
        Provenance { source_index, rule_id: rule_id.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RoleKind {
    Builtin,
    Induced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Role {
    pub name: String,
    pub kind: RoleKind,
    pub transitive: bool,
    /// Declared super-role (dimension roles specialize `hasDim`).
    pub parent: Option<String>,
}

pub const DIMENSIONS: [&str; 9] = [
    "Length",
    "Width",
    "Height",
    "Number",
    "Temperature",
    "Speed",
    "Time",
    "Distance",
    "Quality",
];

const BUILTIN_ROLES: [&str; 15] = [
    "hasState",
    "does",
    "include",
    "hasDim",
    "hasUnit",
    "hasValue",
    "hasRank",
    "hasGreaterValue",
    "PPR",
    "FPR",
    "mayBe",
    "canBecome",
    "canBe",
    "isNow",
    "isSometimes",
];

/// Role name used for a dimension, e.g. `Height` -> `hasHeight`.
pub fn dimension_role(dimension: &str) -> String {
    format!("has{dimension}")
}

pub fn builtin_role(name: &str) -> Option<Role> {
    if BUILTIN_ROLES.contains(&name) {
        return Some(Role {
            name: name.to_string(),
            kind: RoleKind::Builtin,
            transitive: name == "include",
            parent: None,
        });
    }
    DIMENSIONS.iter().find(|d| dimension_role(d) == name).map(|_| Role {
        name: name.to_string(),
        kind: RoleKind::Builtin,
        transitive: false,
        parent: Some("hasDim".to_string()),
    })
}

pub fn role_info(name: &str) -> Role {
    builtin_role(name).unwrap_or_else(|| Role {
        name: name.to_string(),
        kind: RoleKind::Induced,
        transitive: false,
        parent: None,
    })
}

/// One piece of a concatenated concept label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LabelPart {
    Word(String),
    /// Rendered as `_N`.
    Counter(u32),
    /// An individual embedded verbatim.
    Nominal(String),
}

impl LabelPart {
    pub fn word(w: impl Into<String>) -> Self {
        LabelPart::Word(w.into())
    }
}

pub fn capitalize(w: &str) -> String {
    let mut cs = w.chars();
    match cs.next() {
        Some(c) => c.to_uppercase().chain(cs).collect(),
        None => String::new(),
    }
}

/// Concatenates label parts: each word piece capitalized, separators
/// (space, hyphen, underscore) removed camel-style.
pub fn mk_label(parts: &[LabelPart]) -> String {
    let mut out = String::new();
    for p in parts {
        match p {
            LabelPart::Word(w) => {
                for piece in w.split([' ', '-', '_']).filter(|s| !s.is_empty()) {
                    out.push_str(&capitalize(piece));
                }
            }
            LabelPart::Counter(n) => {
                out.push('_');
                out.push_str(&n.to_string());
            }
            LabelPart::Nominal(ind) => out.push_str(ind),
        }
    }
    out
}

/// Individual name for the `n`th instance of a subject, e.g. `woman_7`.
pub fn instance_name(parts: &[LabelPart], n: u32) -> String {
    let label = mk_label(parts);
    let mut cs = label.chars();
    let head: String = match cs.next() {
        Some(c) => c.to_lowercase().chain(cs).collect(),
        None => String::new(),
    };
    format!("{head}_{n}")
}

/// Ordered, duplicate-free axiom store.
#[derive(Debug, Clone, Default)]
pub struct Ontology {
    axioms: Vec<(Axiom, Option<Provenance>)>,
    index: HashMap<Axiom, usize>,
    registry: BTreeMap<String, Option<Provenance>>,
    counters: BTreeMap<String, u32>,
    allocations: BTreeMap<(String, usize, usize), u32>,
}

impl PartialEq for Ontology {
    fn eq(&self, other: &Self) -> bool {
        self.axioms == other.axioms
    }
}

impl Eq for Ontology {}

impl Ontology {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a canonicalized copy; returns false if it was already stored.
    pub fn add_axiom(&mut self, axiom: Axiom, provenance: Option<Provenance>) -> bool {
        let axiom = axiom.canonical();
        if self.index.contains_key(&axiom) {
            return false;
        }
        for name in axiom.atoms() {
            self.registry.entry(name).or_insert_with(|| provenance.clone());
        }
        self.index.insert(axiom.clone(), self.axioms.len());
        self.axioms.push((axiom, provenance));
        true
    }

    pub fn extend<I: IntoIterator<Item = (Axiom, Option<Provenance>)>>(&mut self, items: I) {
        for (a, p) in items {
            self.add_axiom(a, p);
        }
    }

    pub fn contains(&self, axiom: &Axiom) -> bool {
        self.index.contains_key(&axiom.canonical())
    }

    pub fn len(&self) -> usize {
        self.axioms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty()
    }

    pub fn entries(&self) -> &[(Axiom, Option<Provenance>)] {
        &self.axioms
    }

    pub fn axioms(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms.iter().map(|(a, _)| a)
    }

    pub fn tbox(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms().filter(|a| !a.is_abox())
    }

    pub fn abox(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms().filter(|a| a.is_abox())
    }

    /// Concept name -> provenance of the first axiom mentioning it.
    pub fn concept_registry(&self) -> &BTreeMap<String, Option<Provenance>> {
        &self.registry
    }

    pub fn concept_names(&self) -> BTreeSet<String> {
        self.registry.keys().cloned().collect()
    }

    pub fn individuals(&self) -> BTreeSet<String> {
        self.axioms().flat_map(|a| a.individuals()).collect()
    }

    pub fn roles(&self) -> BTreeMap<String, Role> {
        let mut out = BTreeMap::new();
        for name in self.axioms().flat_map(|a| a.roles()) {
            let role = role_info(&name);
            if let Some(parent) = &role.parent {
                out.entry(parent.clone()).or_insert_with(|| role_info(parent));
            }
            out.insert(name, role);
        }
        out
    }

    /// Returns the next value of a counter, starting at 1.
    pub fn next_counter(&mut self, key: &str) -> u32 {
        let slot = self.counters.entry(key.to_string()).or_insert(0);
        *slot += 1;
        *slot
    }

    /// Counter value owned by one sentence expansion: the first request
    /// allocates, later requests from the same owner get the same value.
    pub fn counter_for(&mut self, key: &str, source_index: usize, expansion_id: usize) -> u32 {
        let slot = (key.to_string(), source_index, expansion_id);
        if let Some(n) = self.allocations.get(&slot) {
            return *n;
        }
        let n = self.next_counter(key);
        self.allocations.insert(slot, n);
        n
    }

    pub fn counters(&self) -> &BTreeMap<String, u32> {
        &self.counters
    }

    /// Order- and provenance-insensitive comparison.
    pub fn same_axioms(&self, other: &Ontology) -> bool {
        self.index.len() == other.index.len() && self.index.keys().all(|a| other.index.contains_key(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(n: &str) -> ConceptExpr {
        ConceptExpr::atom(n)
    }

    #[test]
    fn label_examples() {
        let w = |s: &str| LabelPart::word(s);
        assert_eq!(mk_label(&[w("Student"), w("Person")]), "StudentPerson");
        assert_eq!(mk_label(&[w("smoker"), w("woman")]), "SmokerWoman");
        assert_eq!(mk_label(&[w("cat"), w("UNION"), w("dog")]), "CatUNIONDog");
        assert_eq!(mk_label(&[w("student"), LabelPart::Counter(1), w("activist")]), "Student_1Activist");
        assert_eq!(mk_label(&[w("long-haired"), w("thing")]), "LongHairedThing");
        assert_eq!(mk_label(&[w("microprocessor"), LabelPart::Nominal("IntelPentium4".into())]), "MicroprocessorIntelPentium4");
        assert_eq!(instance_name(&[w("woman")], 7), "woman_7");
    }

    #[test]
    fn and_or_are_flat_and_sorted() {
        let e = ConceptExpr::and(vec![a("B"), ConceptExpr::and(vec![a("C"), a("A")]), a("B")]);
        assert_eq!(e, ConceptExpr::And(vec![a("A"), a("B"), a("C")]));
        assert_eq!(ConceptExpr::or(vec![a("X")]), a("X"));
        assert_eq!(ConceptExpr::and(vec![]), ConceptExpr::Top);
    }

    #[test]
    fn add_is_idempotent_and_ordered() {
        let mut o = Ontology::new();
        assert!(o.add_axiom(Axiom::sub(a("Cat"), a("Animal")), None));
        assert!(!o.add_axiom(Axiom::sub(a("Cat"), a("Animal")), None));
        assert!(o.add_axiom(Axiom::sub(a("Animal"), a("Cat")), None));
        assert_eq!(o.len(), 2);
        assert_eq!(o.concept_names().len(), 2);
    }

    #[test]
    fn counters_start_at_one() {
        let mut o = Ontology::new();
        assert_eq!(o.next_counter("inst:woman"), 1);
        assert_eq!(o.next_counter("inst:woman"), 2);
        assert_eq!(o.next_counter("inst:man"), 1);
    }

    #[test]
    fn dimension_roles_are_sub_roles() {
        let r = builtin_role("hasHeight").unwrap();
        assert_eq!(r.parent.as_deref(), Some("hasDim"));
        assert!(builtin_role("include").unwrap().transitive);
        assert_eq!(role_info("likes").kind, RoleKind::Induced);
    }

    fn word() -> impl Strategy<Value = String> {
        "[a-z]{1,6}"
    }

    proptest! {
        #[test]
        fn mk_label_injective(xs in prop::collection::vec(word(), 1..5), ys in prop::collection::vec(word(), 1..5)) {
            let px: Vec<_> = xs.iter().map(LabelPart::word).collect();
            let py: Vec<_> = ys.iter().map(LabelPart::word).collect();
            if xs != ys {
                prop_assert_ne!(mk_label(&px), mk_label(&py));
            }
        }

        #[test]
        fn and_member_order_irrelevant(mut names in prop::collection::vec("[A-Z][a-z]{0,3}", 2..6)) {
            let fwd = ConceptExpr::and(names.iter().map(|n| a(n)).collect());
            names.reverse();
            let rev = ConceptExpr::and(names.iter().map(|n| a(n)).collect());
            prop_assert_eq!(fwd, rev);
        }

        #[test]
        fn duplicate_inserts_do_not_change_equality(names in prop::collection::vec("[A-Z][a-z]{0,3}", 2..8)) {
            let mut o1 = Ontology::new();
            let mut o2 = Ontology::new();
            for w in names.windows(2) {
                let ax = Axiom::sub(a(&w[0]), a(&w[1]));
                o1.add_axiom(ax.clone(), None);
                o2.add_axiom(ax.clone(), None);
                o2.add_axiom(ax, None);
            }
            prop_assert_eq!(o1, o2);
        }
    }
}
