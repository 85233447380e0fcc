//! Structural subsumption over told axioms with lazy unfolding of
//! definitions, consistency checking, and taxonomy extraction.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dlmodel::{role_info, Axiom, ConceptExpr, Literal, Ontology};
use crate::serialize::{axiom_to_dl, expr_to_dl};

pub const TOP: &str = "owl:Thing";
pub const BOTTOM: &str = "owl:Nothing";

/// Nesting bound for filler and case-split sub-proofs; beyond it a test
/// answers "not entailed", which keeps cyclic told axioms terminating.
const MAX_DEPTH: usize = 8;

thread_local! {
    static DEPTH: std::cell::Cell<usize> = const { std::cell::Cell::new(0) };
}

/// Runs `f` one level deeper, or returns `None` at the bound.
fn nested<T>(f: impl FnOnce() -> T) -> Option<T> {
    let d = DEPTH.with(|c| c.get());
    if d >= MAX_DEPTH {
        return None;
    }
    DEPTH.with(|c| c.set(d + 1));
    let out = f();
    DEPTH.with(|c| c.set(d));
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReasonError {
    #[error("definition cycle: {}", .0.join(" -> "))]
    DefinitionCycle(Vec<String>),
}

/// Conjunctive normal description of a concept: everything it is known to
/// be an instance of, closed under told subsumers.
#[derive(Debug, Clone, Default)]
struct Desc {
    atoms: BTreeSet<String>,
    negs: BTreeSet<String>,
    neg_exprs: Vec<ConceptExpr>,
    nominals: BTreeSet<String>,
    literals: BTreeSet<Literal>,
    alls: BTreeMap<String, Vec<ConceptExpr>>,
    data_alls: BTreeMap<String, BTreeSet<String>>,
    ors: Vec<Vec<ConceptExpr>>,
    bottom: bool,
    seen: HashSet<ConceptExpr>,
    applied: BTreeSet<usize>,
}

#[derive(Debug, Clone)]
struct Gci {
    lhs: ConceptExpr,
    rhs: ConceptExpr,
}

/// Read-only snapshot of an ontology prepared for reasoning.
#[derive(Debug, Clone)]
pub struct Reasoner {
    told: HashMap<ConceptExpr, Vec<ConceptExpr>>,
    gcis: Vec<Gci>,
    constraints: Vec<ConceptExpr>,
    names: BTreeSet<String>,
    assertions: BTreeMap<String, Vec<ConceptExpr>>,
    role_edges: Vec<(String, String, String)>,
    data_edges: Vec<(String, String, Literal)>,
    flagged: Vec<String>,
    cycle: Option<Vec<String>>,
}

fn is_atomic(e: &ConceptExpr) -> bool {
    matches!(e, ConceptExpr::Atom(_) | ConceptExpr::Nominal(_))
}

fn has_nested_complement(e: &ConceptExpr) -> bool {
    let mut found = false;
    e.walk(&mut |x| {
        if let ConceptExpr::Not(inner) = x {
            found |= !matches!(**inner, ConceptExpr::Atom(_));
        }
    });
    found
}

/// Super-roles of `role`, starting with the role itself.
fn role_chain(role: &str) -> Vec<String> {
    let mut out = vec![role.to_string()];
    while let Some(p) = role_info(out.last().unwrap()).parent {
        if out.contains(&p) {
            break;
        }
        out.push(p);
    }
    out
}

fn literal_type(l: &Literal) -> &'static str {
    match l {
        Literal::Int(_) => "xsd:integer",
        Literal::Symbol(_) => "xsd:string",
    }
}

impl Reasoner {
    /// Fails on a definition cycle.
    pub fn new(onto: &Ontology) -> Result<Self, ReasonError> {
        let r = Self::prepare(onto);
        match &r.cycle {
            Some(c) => Err(ReasonError::DefinitionCycle(c.clone())),
            None => Ok(r),
        }
    }

    fn prepare(onto: &Ontology) -> Self {
        let mut r = Reasoner {
            told: HashMap::new(),
            gcis: Vec::new(),
            constraints: Vec::new(),
            names: onto.concept_names(),
            assertions: BTreeMap::new(),
            role_edges: Vec::new(),
            data_edges: Vec::new(),
            flagged: Vec::new(),
            cycle: None,
        };
        let mut definitions: BTreeMap<String, Vec<ConceptExpr>> = BTreeMap::new();
        for a in onto.axioms() {
            match a {
                Axiom::SubClassOf(l, rhs) => r.add_sub(l.clone(), rhs.clone()),
                Axiom::EquivalentTo(l, rhs) => {
                    if *rhs == ConceptExpr::Bottom || *l == ConceptExpr::Bottom {
                        let lhs = if *rhs == ConceptExpr::Bottom { l } else { rhs };
                        r.add_constraint(lhs.clone());
                        continue;
                    }
                    if let (ConceptExpr::Atom(name), false) = (l, is_atomic(rhs)) {
                        definitions.entry(name.clone()).or_default().push(rhs.clone());
                    }
                    if let (ConceptExpr::Atom(name), false) = (rhs, is_atomic(l)) {
                        definitions.entry(name.clone()).or_default().push(l.clone());
                    }
                    r.add_sub(l.clone(), rhs.clone());
                    r.add_sub(rhs.clone(), l.clone());
                }
                Axiom::ConceptAssertion(c, ind) => {
                    r.assertions.entry(ind.clone()).or_default().push(c.clone());
                    r.told.entry(ConceptExpr::nominal(ind)).or_default().push(c.clone());
                }
                Axiom::SameIndividual(x, y) => {
                    r.told.entry(ConceptExpr::nominal(x)).or_default().push(ConceptExpr::nominal(y));
                    r.told.entry(ConceptExpr::nominal(y)).or_default().push(ConceptExpr::nominal(x));
                    r.assertions.entry(x.clone()).or_default().push(ConceptExpr::nominal(y));
                    r.assertions.entry(y.clone()).or_default().push(ConceptExpr::nominal(x));
                }
                Axiom::RoleAssertion(role, x, y) => {
                    r.assertions.entry(x.clone()).or_default();
                    r.assertions.entry(y.clone()).or_default();
                    r.role_edges.push((role.clone(), x.clone(), y.clone()));
                }
                Axiom::DataAssertion(role, x, l) => {
                    r.assertions.entry(x.clone()).or_default();
                    r.data_edges.push((role.clone(), x.clone(), l.clone()));
                }
            }
            if a.exprs().iter().any(|e| has_nested_complement(e)) {
                r.flagged.push(axiom_to_dl(a));
            }
        }
        r.cycle = find_cycle(&definitions);
        r
    }

    fn add_sub(&mut self, lhs: ConceptExpr, rhs: ConceptExpr) {
        match lhs {
            ConceptExpr::Or(members) => {
                for m in members {
                    self.add_sub(m, rhs.clone());
                }
            }
            ConceptExpr::Bottom => {}
            l if is_atomic(&l) => self.told.entry(l).or_default().push(rhs),
            l => self.gcis.push(Gci { lhs: l, rhs }),
        }
    }

    /// `lhs ≡ ⊥`. A conjunction with exactly one negated member `¬Y` also
    /// yields `rest ⊑ Y`.
    fn add_constraint(&mut self, lhs: ConceptExpr) {
        if let ConceptExpr::And(ms) = &lhs {
            let negated: Vec<&ConceptExpr> = ms.iter().filter(|m| matches!(m, ConceptExpr::Not(_))).collect();
            if let [ConceptExpr::Not(y)] = negated.as_slice() {
                let rest: Vec<ConceptExpr> = ms.iter().filter(|m| !matches!(m, ConceptExpr::Not(_))).cloned().collect();
                self.add_sub(ConceptExpr::and(rest), (**y).clone());
            }
        }
        self.constraints.push(lhs.clone());
        self.add_sub(lhs, ConceptExpr::Bottom);
    }

    /// Axioms outside the fragment decided exactly (complements of
    /// complex expressions); they may be under-classified.
    pub fn flagged(&self) -> &[String] {
        &self.flagged
    }

    fn closure(&self, e: &ConceptExpr) -> Desc {
        let mut d = Desc::default();
        self.expand(&mut d, e);
        self.saturate(&mut d);
        d
    }

    fn expand(&self, d: &mut Desc, e: &ConceptExpr) {
        if !d.seen.insert(e.clone()) {
            return;
        }
        match e {
            ConceptExpr::Top => {}
            ConceptExpr::Bottom => d.bottom = true,
            ConceptExpr::Atom(n) => {
                d.atoms.insert(n.clone());
            }
            ConceptExpr::Nominal(n) => {
                d.nominals.insert(n.clone());
            }
            ConceptExpr::DataNominal(l) => {
                d.literals.insert(l.clone());
            }
            ConceptExpr::DataAll(r, dt) => {
                d.data_alls.entry(r.clone()).or_default().insert(dt.clone());
            }
            ConceptExpr::Not(x) => match &**x {
                ConceptExpr::Atom(n) => {
                    d.negs.insert(n.clone());
                }
                ConceptExpr::Top => d.bottom = true,
                ConceptExpr::Bottom => {}
                other => d.neg_exprs.push(other.clone()),
            },
            ConceptExpr::AllValues(r, x) => d.alls.entry(r.clone()).or_default().push((**x).clone()),
            ConceptExpr::And(ms) => {
                for m in ms {
                    self.expand(d, m);
                }
            }
            ConceptExpr::Or(ms) => d.ors.push(ms.clone()),
        }
        if let Some(sups) = self.told.get(e) {
            for s in sups {
                self.expand(d, s);
            }
        }
    }

    /// Applies general inclusions until nothing changes.
    fn saturate(&self, d: &mut Desc) {
        loop {
            let mut changed = false;
            for (i, g) in self.gcis.iter().enumerate() {
                if d.applied.contains(&i) {
                    continue;
                }
                if self.entails(d, &g.lhs, false) {
                    d.applied.insert(i);
                    self.expand(d, &g.rhs);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn fillers(&self, d: &Desc, role: &str) -> Vec<ConceptExpr> {
        role_chain(role).iter().filter_map(|r| d.alls.get(r)).flatten().cloned().collect()
    }

    /// Direct clashes only, unless `full`, which also splits on
    /// disjunctions.
    fn clash(&self, d: &Desc, full: bool) -> bool {
        let ints = d.literals.iter().filter(|l| matches!(l, Literal::Int(_))).count();
        if d.bottom || d.atoms.iter().any(|a| d.negs.contains(a)) || ints > 1 {
            return true;
        }
        if d.neg_exprs.iter().any(|x| self.entails(d, x, false)) {
            return true;
        }
        full && d.ors.iter().enumerate().any(|(i, ds)| {
            ds.iter().all(|x| {
                nested(|| {
                    let mut e = d.clone();
                    e.ors.remove(i);
                    self.expand(&mut e, x);
                    self.saturate(&mut e);
                    self.clash(&e, true)
                })
                .unwrap_or(false)
            })
        })
    }

    /// Whether every instance of `d` is an instance of `sup`. Saturation
    /// uses the direct structural test; `full` adds case splits and
    /// refutation of complements.
    fn entails(&self, d: &Desc, sup: &ConceptExpr, full: bool) -> bool {
        if d.bottom {
            return true;
        }
        let direct = match sup {
            ConceptExpr::Top => true,
            ConceptExpr::Bottom => false,
            ConceptExpr::Atom(n) => d.atoms.contains(n),
            ConceptExpr::Nominal(n) => d.nominals.contains(n),
            ConceptExpr::DataNominal(l) => d.literals.contains(l),
            ConceptExpr::DataAll(r, dt) => role_chain(r).iter().any(|r| {
                d.data_alls.get(r).is_some_and(|s| s.contains(dt))
                    || d.alls.get(r).is_some_and(|fs| {
                        fs.iter().any(|f| matches!(f, ConceptExpr::DataNominal(l) if literal_type(l) == dt))
                    })
            }),
            ConceptExpr::Not(x) => {
                let told = match &**x {
                    ConceptExpr::Atom(n) => d.negs.contains(n),
                    other => d.neg_exprs.contains(other),
                };
                told || (full && self.clashes_with(d, x))
            }
            ConceptExpr::AllValues(r, x) => {
                let fs = self.fillers(d, r);
                if fs.is_empty() {
                    **x == ConceptExpr::Top
                } else {
                    nested(|| self.entails(&self.closure(&ConceptExpr::and(fs)), x, full)).unwrap_or(false)
                }
            }
            ConceptExpr::And(ms) => ms.iter().all(|m| self.entails(d, m, full)),
            ConceptExpr::Or(ms) => ms.iter().any(|m| self.entails(d, m, full)),
        };
        direct || (full && self.entails_by_cases(d, sup))
    }

    /// A disjunction in `d` entails `sup` when each disjunct does.
    fn entails_by_cases(&self, d: &Desc, sup: &ConceptExpr) -> bool {
        d.ors.iter().enumerate().any(|(i, ds)| {
            ds.iter().all(|x| {
                nested(|| {
                    let mut e = d.clone();
                    e.ors.remove(i);
                    self.expand(&mut e, x);
                    self.saturate(&mut e);
                    self.clash(&e, true) || self.entails(&e, sup, true)
                })
                .unwrap_or(false)
            })
        })
    }

    fn clashes_with(&self, d: &Desc, x: &ConceptExpr) -> bool {
        nested(|| {
            let mut e = d.clone();
            self.expand(&mut e, x);
            self.saturate(&mut e);
            self.clash(&e, true)
        })
        .unwrap_or(false)
    }

    pub fn subsumes(&self, sup: &ConceptExpr, sub: &ConceptExpr) -> bool {
        let d = self.closure(&sub.canonical());
        self.clash(&d, true) || self.entails(&d, &sup.canonical(), true)
    }

    pub fn is_satisfiable(&self, e: &ConceptExpr) -> bool {
        !self.clash(&self.closure(&e.canonical()), true)
    }

    pub fn check_consistency(&self) -> ConsistencyReport {
        let names: Vec<&String> = self.names.iter().collect();
        let descs: Vec<(String, Desc)> =
            names.par_iter().map(|n| ((*n).clone(), self.closure(&ConceptExpr::atom(n.as_str())))).collect();
        let mut report = ConsistencyReport {
            definition_cycle: self.cycle.clone(),
            flagged: self.flagged.clone(),
            ..Default::default()
        };
        for (name, d) in &descs {
            if self.clash(d, true) {
                report.unsatisfiable.insert(name.clone());
            }
            for c in &self.constraints {
                if self.violates(d, c) {
                    report.violations.push(ConstraintViolation { constraint: format!("{} == bottom", expr_to_dl(c)), concept: name.clone() });
                }
            }
        }
        report.abox_clashes = self.abox_clashes();
        report
    }

    /// `d` falls under a `≡ ⊥` conjunction by told subsumption alone, i.e.
    /// before that constraint is applied.
    fn violates(&self, d: &Desc, constraint: &ConceptExpr) -> bool {
        let members = match constraint {
            ConceptExpr::And(ms) => ms.clone(),
            other => vec![other.clone()],
        };
        members.iter().all(|m| match m {
            ConceptExpr::Not(x) => match &**x {
                ConceptExpr::Atom(n) => d.negs.contains(n),
                other => d.neg_exprs.contains(other),
            },
            other => self.entails(d, other, true),
        })
    }

    fn individual_descs(&self) -> BTreeMap<String, Desc> {
        let mut types: BTreeMap<String, Vec<ConceptExpr>> = self.assertions.clone();
        for ind in types.clone().keys() {
            types.get_mut(ind).unwrap().push(ConceptExpr::nominal(ind.as_str()));
        }
        for _ in 0..=types.len() {
            let descs: BTreeMap<String, Desc> =
                types.iter().map(|(i, ts)| (i.clone(), self.closure(&ConceptExpr::and(ts.clone())))).collect();
            let mut changed = false;
            for (role, x, y) in &self.role_edges {
                for f in self.fillers(&descs[x], role) {
                    let ts = types.get_mut(y).unwrap();
                    if !ts.contains(&f) {
                        ts.push(f);
                        changed = true;
                    }
                }
            }
            if !changed {
                return descs;
            }
        }
        types.iter().map(|(i, ts)| (i.clone(), self.closure(&ConceptExpr::and(ts.clone())))).collect()
    }

    fn abox_clashes(&self) -> Vec<AboxClash> {
        let descs = self.individual_descs();
        let mut out = Vec::new();
        for (ind, d) in &descs {
            let mut reasons = Vec::new();
            if self.clash(d, true) {
                reasons.push("asserted types are disjoint".to_string());
            }
            for (role, x, l) in self.data_edges.iter().filter(|(_, x, _)| x == ind) {
                for f in self.fillers(d, role) {
                    match &f {
                        ConceptExpr::DataNominal(v @ Literal::Int(_)) if matches!(l, Literal::Int(_)) && v != l => {
                            reasons.push(format!("{role}({x}, {}) conflicts with {}", axiom_literal(l), expr_to_dl(&f)));
                        }
                        _ => {}
                    }
                }
                for r in role_chain(role) {
                    for dt in d.data_alls.get(&r).into_iter().flatten() {
                        if dt != literal_type(l) {
                            reasons.push(format!("{role}({x}, {}) is not of type {dt}", axiom_literal(l)));
                        }
                    }
                }
            }
            if !reasons.is_empty() {
                let mut concepts: Vec<String> = d.atoms.iter().cloned().collect();
                concepts.sort();
                out.push(AboxClash { individual: ind.clone(), concepts, reasons });
            }
        }
        out
    }

    /// Pairwise subsumption over named concepts, equivalence merge and
    /// transitive reduction.
    pub fn classify(&self) -> TaxonomyGraph {
        let names: Vec<String> = self.names.iter().cloned().collect();
        let descs: Vec<Desc> = names.par_iter().map(|n| self.closure(&ConceptExpr::atom(n.as_str()))).collect();
        let unsat: Vec<bool> = descs.par_iter().map(|d| self.clash(d, true)).collect();
        let n = names.len();
        let above: Vec<Vec<bool>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let d = &descs[i];
                (0..n)
                    .map(|j| {
                        i != j
                            && !unsat[i]
                            && !unsat[j]
                            && (d.atoms.contains(&names[j])
                                || (!d.ors.is_empty() && self.entails(d, &ConceptExpr::atom(names[j].as_str()), true)))
                    })
                    .collect()
            })
            .collect();
        build_taxonomy(&names, &unsat, &above)
    }
}

fn axiom_literal(l: &Literal) -> String {
    match l {
        Literal::Int(i) => i.to_string(),
        Literal::Symbol(s) => format!("\"{s}\""),
    }
}

/// First cycle among definitions `A ≡ D`, following named concepts in `D`
/// that are themselves defined.
fn find_cycle(defs: &BTreeMap<String, Vec<ConceptExpr>>) -> Option<Vec<String>> {
    fn visit(
        n: &str,
        defs: &BTreeMap<String, Vec<ConceptExpr>>,
        path: &mut Vec<String>,
        done: &mut BTreeSet<String>,
    ) -> Option<Vec<String>> {
        if let Some(p) = path.iter().position(|x| x == n) {
            let mut cycle = path[p..].to_vec();
            cycle.push(n.to_string());
            return Some(cycle);
        }
        if done.contains(n) {
            return None;
        }
        path.push(n.to_string());
        for d in defs.get(n).into_iter().flatten() {
            for m in d.atoms() {
                if defs.contains_key(&m) {
                    if let Some(c) = visit(&m, defs, path, done) {
                        return Some(c);
                    }
                }
            }
        }
        path.pop();
        done.insert(n.to_string());
        None
    }
    let mut done = BTreeSet::new();
    for n in defs.keys() {
        if let Some(c) = visit(n, defs, &mut Vec::new(), &mut done) {
            return Some(c);
        }
    }
    None
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConstraintViolation {
    pub constraint: String,
    pub concept: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AboxClash {
    pub individual: String,
    pub concepts: Vec<String>,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub unsatisfiable: BTreeSet<String>,
    pub violations: Vec<ConstraintViolation>,
    pub abox_clashes: Vec<AboxClash>,
    pub definition_cycle: Option<Vec<String>>,
    pub flagged: Vec<String>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.unsatisfiable.is_empty() && self.violations.is_empty() && self.abox_clashes.is_empty()
    }
}

/// Classified concept hierarchy. Nodes are equivalence classes named by
/// their least member; `owl:Thing` tops every root and unsatisfiable
/// concepts collapse into `owl:Nothing`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaxonomyGraph {
    pub nodes: Vec<String>,
    /// `(child, parent)` between node names, transitively reduced.
    pub edges: BTreeSet<(String, String)>,
    pub equivalence_classes: BTreeMap<String, BTreeSet<String>>,
    pub unsatisfiable: BTreeSet<String>,
}

/// Builds the graph from a subsumption matrix: `above[i][j]` iff concept
/// `j` strictly or equivalently subsumes concept `i`.
pub fn build_taxonomy(names: &[String], unsat: &[bool], above: &[Vec<bool>]) -> TaxonomyGraph {
    let n = names.len();
    let mut rep: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            if !unsat[i] && above[i][j] && above[j][i] && rep[i] == i {
                rep[i] = rep[j];
            }
        }
    }
    let mut classes: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    for i in (0..n).filter(|&i| !unsat[i]) {
        classes.entry(rep[i]).or_default().insert(names[i].clone());
    }
    let label = |i: usize| classes[&rep[i]].iter().next().unwrap().clone();
    let reps: Vec<usize> = classes.keys().copied().collect();
    let strictly = |a: usize, b: usize| a != b && above[a][b] && !above[b][a];
    let mut edges = BTreeSet::new();
    for &a in &reps {
        let mut has_parent = false;
        for &b in &reps {
            if !strictly(a, b) {
                continue;
            }
            has_parent = true;
            if !reps.iter().any(|&c| strictly(a, c) && strictly(c, b)) {
                edges.insert((label(a), label(b)));
            }
        }
        if !has_parent {
            edges.insert((label(a), TOP.to_string()));
        }
    }
    let unsatisfiable: BTreeSet<String> = (0..n).filter(|&i| unsat[i]).map(|i| names[i].clone()).collect();
    let mut nodes: Vec<String> = reps.iter().map(|&r| label(r)).collect();
    nodes.push(TOP.to_string());
    if !unsatisfiable.is_empty() {
        nodes.push(BOTTOM.to_string());
    }
    nodes.sort();
    let equivalence_classes = classes.values().map(|c| (c.iter().next().unwrap().clone(), c.clone())).collect();
    TaxonomyGraph { nodes, edges, equivalence_classes, unsatisfiable }
}

impl TaxonomyGraph {
    fn display(&self, node: &str) -> String {
        match self.equivalence_classes.get(node) {
            Some(c) if c.len() > 1 => c.iter().cloned().collect::<Vec<_>>().join("="),
            _ => node.to_string(),
        }
    }

    /// `child<TAB>parent` lines, sorted; equivalent concepts are joined
    /// with `=` and unsatisfiable ones sit under `owl:Nothing`.
    pub fn to_tsv(&self) -> String {
        let mut lines: Vec<String> =
            self.edges.iter().map(|(c, p)| format!("{}\t{}", self.display(c), self.display(p))).collect();
        lines.extend(self.unsatisfiable.iter().map(|u| format!("{u}\t{BOTTOM}")));
        lines.sort();
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph taxonomy {\n  rankdir=BT;\n  node [shape=box];\n");
        for n in &self.nodes {
            let style = if n == BOTTOM { ", color=red" } else { "" };
            let _ = writeln!(out, "  \"{}\" [label=\"{}\"{style}];", n, self.display(n));
        }
        for (c, p) in &self.edges {
            let _ = writeln!(out, "  \"{c}\" -> \"{p}\";");
        }
        for u in &self.unsatisfiable {
            let _ = writeln!(out, "  \"{u}\" -> \"{BOTTOM}\" [style=dashed];");
        }
        out.push_str("}\n");
        out
    }

    /// Parents of `node` (by node name).
    pub fn parents(&self, node: &str) -> Vec<&str> {
        self.edges.iter().filter(|(c, _)| c == node).map(|(_, p)| p.as_str()).collect()
    }
}

pub fn subsumes(sup: &ConceptExpr, sub: &ConceptExpr, onto: &Ontology) -> Result<bool, ReasonError> {
    Ok(Reasoner::new(onto)?.subsumes(sup, sub))
}

/// Never fails: a definition cycle is part of the report.
pub fn check_consistency(onto: &Ontology) -> ConsistencyReport {
    Reasoner::prepare(onto).check_consistency()
}

pub fn classify(onto: &Ontology) -> Result<TaxonomyGraph, ReasonError> {
    Ok(Reasoner::new(onto)?.classify())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::serialize::parse_dl_text;

    fn onto(text: &str) -> Ontology {
        parse_dl_text(text).unwrap()
    }

    fn a(n: &str) -> ConceptExpr {
        ConceptExpr::atom(n)
    }

    #[test]
    fn told_chain() {
        let o = onto("Cat <= Animal\nAnimal <= LivingThing\n");
        assert!(subsumes(&a("LivingThing"), &a("Cat"), &o).unwrap());
        assert!(!subsumes(&a("Cat"), &a("LivingThing"), &o).unwrap());
    }

    #[test]
    fn modified_concept_under_both_parents() {
        let o = onto("WildCat <= Cat\nWildCat <= Mammal\n");
        assert!(subsumes(&a("Mammal"), &a("WildCat"), &o).unwrap());
        assert!(!subsumes(&a("Mammal"), &a("Cat"), &o).unwrap());
    }

    #[test]
    fn universal_restrictions_are_monotone() {
        let o = onto("Beautiful <= Attribute\n");
        let sup = ConceptExpr::all("hasState", a("Attribute"));
        let sub = ConceptExpr::all("hasState", a("Beautiful"));
        assert!(subsumes(&sup, &sub, &o).unwrap());
        assert!(!subsumes(&sub, &sup, &o).unwrap());
    }

    #[test]
    fn definitions_unfold() {
        let o = onto("BeautifulThing == all hasState . Beautiful\nRose <= all hasState . Beautiful\n");
        assert!(subsumes(&a("BeautifulThing"), &a("Rose"), &o).unwrap());
    }

    #[test]
    fn dimension_roles_specialize_has_dim() {
        let o = onto("Short <= all hasDim . Height\n");
        let sup = ConceptExpr::all("hasHeight", a("Height"));
        assert!(subsumes(&sup, &a("Short"), &o).unwrap());
    }

    #[test]
    fn nominals_and_unions() {
        let o = onto("U == {John} or {Joe}\nJohn : Student\nJoe : Student\n");
        assert!(subsumes(&a("Student"), &a("U"), &o).unwrap());
        assert!(subsumes(&a("U"), &ConceptExpr::nominal("Joe"), &o).unwrap());
    }

    #[test]
    fn left_union_is_split() {
        let o = onto("Cat or Dog <= Pet\n");
        assert!(subsumes(&a("Pet"), &a("Dog"), &o).unwrap());
    }

    #[test]
    fn complement_clash() {
        let o = onto("Human <= not Fruit\nTomato <= Human\nTomato <= Fruit\n");
        let r = check_consistency(&o);
        assert_eq!(r.unsatisfiable.iter().collect::<Vec<_>>(), vec!["Tomato"]);
        assert!(!Reasoner::new(&o).unwrap().is_satisfiable(&a("Tomato")));
    }

    #[test]
    fn satisfied_only_constraint() {
        let o = onto("StudentPerson <= Student\n(StudentPerson and not Student) == bottom\n");
        assert!(check_consistency(&o).is_consistent());
    }

    #[test]
    fn violated_only_constraint() {
        let o = onto("(StudentPerson and not Student) == bottom\nStudentPerson <= not Student\n");
        let r = check_consistency(&o);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].concept, "StudentPerson");
    }

    #[test]
    fn empty_ontology_reports_nothing() {
        assert_eq!(check_consistency(&Ontology::new()), ConsistencyReport::default());
    }

    #[test]
    fn abox_clash_through_roles_and_literals() {
        let o = onto(
            "Tallest == all hasHeight . (Height and all hasRank . (all hasValue . {1}))\n\
             John : Tallest\nhasHeight(John, h)\nhasRank(h, r)\nhasValue(r, 2)\n",
        );
        let r = check_consistency(&o);
        assert_eq!(r.abox_clashes.len(), 1);
        assert_eq!(r.abox_clashes[0].individual, "r");
    }

    #[test]
    fn definition_cycle_is_reported() {
        let o = onto("A == B and all r . C\nC == A and D\n");
        let err = classify(&o).unwrap_err();
        assert!(matches!(err, ReasonError::DefinitionCycle(ref c) if c.first() == c.last()));
        assert!(check_consistency(&o).definition_cycle.is_some());
    }

    #[test]
    fn siblings_under_common_parent() {
        let t = classify(&onto("Cat <= Animal\nDog <= Animal\n")).unwrap();
        assert_eq!(t.to_tsv(), "Animal\towl:Thing\nCat\tAnimal\nDog\tAnimal\n");
    }

    #[test]
    fn equivalents_merge() {
        let t = classify(&onto("A == B\nB <= C\n")).unwrap();
        assert_eq!(t.equivalence_classes["A"], ["A", "B"].iter().map(|s| s.to_string()).collect());
        assert_eq!(t.to_tsv(), "A=B\tC\nC\towl:Thing\n");
    }

    #[test]
    fn transitive_edges_are_dropped() {
        let t = classify(&onto("A <= B\nB <= C\nA <= C\n")).unwrap();
        assert!(!t.edges.contains(&("A".into(), "C".into())));
        assert_eq!(t.parents("A"), vec!["B"]);
    }

    #[test]
    fn dot_export_lists_nodes_and_edges() {
        let t = classify(&onto("Cat <= Animal\n")).unwrap();
        let dot = t.to_dot();
        assert!(dot.starts_with("digraph taxonomy {"));
        assert!(dot.contains("\"Cat\" -> \"Animal\";"));
    }
}
