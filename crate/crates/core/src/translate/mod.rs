//! Rule catalog mapping characterized sentences to DL axioms.
//!
//! `trivial` holds membership, quantification, modification, clausal,
//! such-as and compound rules; `nontrivial` holds reification, gerunds,
//! equivalence, similarity, holonymy, ONLY, dimensions and modal roles.

mod nontrivial;
mod trivial;

use serde::Serialize;
use thiserror::Error;

use crate::characterize::{CharSentence, Connective, IsaKind, QuantifierKind, Term, Word};
use crate::dlmodel::{instance_name, mk_label, Axiom, ConceptExpr, LabelPart, Literal, Ontology, Provenance};
use crate::lexicon::Lexicon;

/// Axioms produced by one rule application.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Batch {
    pub rule_id: String,
    pub source_index: usize,
    pub expansion_id: usize,
    pub axioms: Vec<Axiom>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("sentence {source_index}: unsupported shape ({reason})")]
    UnsupportedShape { source_index: usize, reason: String },
    #[error("sentence {source_index}: equivalence between {s_tag} and {o_tag}")]
    PosMismatch { source_index: usize, s_tag: String, o_tag: String },
    #[error("sentence {source_index}: no dimension known for '{adjective}'")]
    UnknownDimension { source_index: usize, adjective: String },
}

impl TranslateError {
    pub fn source_index(&self) -> usize {
        match self {
            TranslateError::UnsupportedShape { source_index, .. }
            | TranslateError::PosMismatch { source_index, .. }
            | TranslateError::UnknownDimension { source_index, .. } => *source_index,
        }
    }
}

/// Translates one sentence. Counters are drawn from `onto` but no axiom
/// is added; see [`translate_into`].
pub fn translate(cs: &CharSentence, lex: &Lexicon, onto: &mut Ontology) -> Result<Batch, TranslateError> {
    let mut tx = Tx { cs, lex, onto, out: Vec::new() };
    let rule = dispatch(&mut tx)?;
    let mut axioms = Vec::new();
    for a in tx.out {
        if !axioms.contains(&a) {
            axioms.push(a);
        }
    }
    Ok(Batch { rule_id: rule.to_string(), source_index: cs.source_index, expansion_id: cs.expansion_id, axioms })
}

/// Translates and stores the batch; returns it with the number of axioms
/// that were new to the ontology.
pub fn translate_into(cs: &CharSentence, lex: &Lexicon, onto: &mut Ontology) -> Result<(Batch, usize), TranslateError> {
    let batch = translate(cs, lex, onto)?;
    let added = batch
        .axioms
        .iter()
        .filter(|a| onto.add_axiom((*a).clone(), Some(Provenance::new(batch.source_index, batch.rule_id.clone()))))
        .count();
    Ok((batch, added))
}

fn dispatch(tx: &mut Tx) -> Result<&'static str, TranslateError> {
    let cs = tx.cs;
    match cs.isa {
        IsaKind::SameAs => return nontrivial::equivalence(tx),
        IsaKind::Like => return Ok(nontrivial::similarity(tx)),
        IsaKind::Includes => {
            let nnp_objects = match &cs.object_list {
                Some(l) => l.members.iter().all(|m| m.head.tag == "NNP"),
                None => cs.object1.tag == "NNP",
            };
            return Ok(if nnp_objects { trivial::inverse_membership(tx) } else { nontrivial::holonymy(tx) });
        }
        IsaKind::SuchAs => return Ok(trivial::exemplified(tx)),
        _ => {}
    }
    if cs.such_as.is_some() {
        return Ok(trivial::such_as(tx));
    }
    if let Some(list) = cs.subject_list.as_ref().filter(|l| l.connective == Connective::And) {
        return per_subject(tx, &list.members);
    }
    let modal = cs.isa.is_modal() || cs.adverbial.is_some();
    if (modal || cs.only_position.is_some()) && cs.object_list.is_some() {
        return Err(tx.unsupported("coordinated object under a modal or restrictive IS-A"));
    }
    if modal {
        return Ok(nontrivial::modal(tx));
    }
    if cs.only_position.is_some() {
        return Ok(nontrivial::only(tx));
    }
    if let Some(marker) = nontrivial::dimension_marker(cs, tx.lex) {
        return nontrivial::dimension(tx, marker);
    }
    if cs.clause1.is_some() {
        return Ok(trivial::case3(tx));
    }
    if cs.clause2.is_some() {
        return Ok(trivial::case2(tx));
    }
    let or_list = |l: &Option<crate::characterize::TermList>| l.as_ref().is_some_and(|l| l.connective == Connective::Or);
    if or_list(&cs.subject_list) || or_list(&cs.object_list) {
        return Ok(trivial::compound(tx));
    }
    if let Some(list) = &cs.object_list {
        return Ok(trivial::per_object(tx, &list.members));
    }
    if cs.s_mods.iter().any(|m| m.tag == "VBG") {
        return Ok(nontrivial::gerund(tx));
    }
    if is_adjectival(&cs.object1) {
        return Ok(nontrivial::reify(tx));
    }
    Ok(trivial::plain(tx))
}

/// A conjunctive subject list left intact: each member is translated as
/// the subject of its own sentence.
fn per_subject(tx: &mut Tx, members: &[Term]) -> Result<&'static str, TranslateError> {
    let mut rule = "T-HYPO";
    for (i, m) in members.iter().enumerate() {
        let mut cs = tx.cs.clone();
        cs.subject_list = None;
        cs.s_mods = m.mods.clone();
        cs.subject = m.head.clone();
        let mut inner = Tx { cs: &cs, lex: tx.lex, onto: &mut *tx.onto, out: Vec::new() };
        let r = dispatch(&mut inner)?;
        tx.out.extend(inner.out);
        if i == 0 {
            rule = r;
        }
    }
    Ok(rule)
}

pub(crate) fn is_adjectival(w: &Word) -> bool {
    matches!(w.tag.as_str(), "JJ" | "RB")
}

fn part(w: &Word) -> LabelPart {
    LabelPart::word(w.lexeme.clone())
}

fn term_parts(t: &Term) -> Vec<LabelPart> {
    t.mods.iter().chain([&t.head]).map(part).collect()
}

/// Individual name of a proper noun, e.g. `IntelPentium4`.
pub(crate) fn individual(w: &Word) -> String {
    mk_label(&[part(w)])
}

/// A named concept together with the label pieces it was built from, so
/// that larger labels can be concatenated without re-splitting.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Concept {
    pub expr: ConceptExpr,
    pub label: Vec<LabelPart>,
}

impl Concept {
    fn named(label: Vec<LabelPart>) -> Self {
        Concept { expr: ConceptExpr::atom(mk_label(&label)), label }
    }

    fn name(&self) -> String {
        mk_label(&self.label)
    }

    /// `[self + other]`
    fn join(&self, other: &Concept) -> Concept {
        Concept::named(self.label.iter().chain(&other.label).cloned().collect())
    }

    fn prefixed(&self, prefix: &str) -> Concept {
        Concept::named(std::iter::once(LabelPart::word(prefix)).chain(self.label.iter().cloned()).collect())
    }

    fn suffixed(&self, suffix: &str) -> Concept {
        Concept::named(self.label.iter().cloned().chain([LabelPart::word(suffix)]).collect())
    }

    fn negated(&self) -> Concept {
        Concept {
            expr: ConceptExpr::not(self.expr.clone()),
            label: std::iter::once(LabelPart::word("Non")).chain(self.label.iter().cloned()).collect(),
        }
    }
}

pub(crate) struct Tx<'a> {
    pub cs: &'a CharSentence,
    pub lex: &'a Lexicon,
    onto: &'a mut Ontology,
    pub out: Vec<Axiom>,
}

impl Tx<'_> {
    fn sub(&mut self, a: &ConceptExpr, b: &ConceptExpr) {
        self.out.push(Axiom::sub(a.clone(), b.clone()));
    }

    fn equiv(&mut self, a: &ConceptExpr, b: &ConceptExpr) {
        self.out.push(Axiom::equiv(a.clone(), b.clone()));
    }

    fn member(&mut self, c: &ConceptExpr, ind: &str) {
        self.out.push(Axiom::member(c.clone(), ind));
    }

    fn role(&mut self, r: &str, a: &str, b: &str) {
        self.out.push(Axiom::RoleAssertion(r.into(), a.into(), b.into()));
    }

    fn data(&mut self, r: &str, a: &str, v: Literal) {
        self.out.push(Axiom::DataAssertion(r.into(), a.into(), v));
    }

    fn counter(&mut self, key: &str) -> u32 {
        self.onto.counter_for(key, self.cs.source_index, self.cs.expansion_id)
    }

    /// Nested modification: for modifiers m1..mk on S, `[mk S] ⊑ S` and
    /// each longer prefix `Ci ⊑ Ci-1`, `Ci ⊑ [m S]` for its new modifier.
    fn nest(&mut self, t: &Term) -> Concept {
        let head = Concept::named(vec![part(&t.head)]);
        let k = t.mods.len();
        let mut prev = head.clone();
        for i in 1..=k {
            let mut label: Vec<LabelPart> = t.mods[k - i..].iter().map(part).collect();
            label.push(part(&t.head));
            let ci = Concept::named(label);
            if i == 1 {
                self.sub(&ci.expr, &head.expr);
            } else {
                self.sub(&ci.expr, &prev.expr);
                let single = Concept::named(vec![part(&t.mods[k - i]), part(&t.head)]);
                self.sub(&ci.expr, &single.expr);
            }
            prev = ci;
        }
        prev
    }

    /// `[O+Thing] ≡ ∀hasState.O, O ⊑ Attribute`, or `[O+Activity] ⊑ Activity`.
    fn reify(&mut self, t: &Term, activity: bool) -> Concept {
        let adj = self.nest(t);
        if activity {
            let c = adj.suffixed("Activity");
            self.sub(&c.expr, &ConceptExpr::atom("Activity"));
            c
        } else {
            let c = adj.suffixed("Thing");
            self.equiv(&c.expr, &ConceptExpr::all("hasState", adj.expr.clone()));
            self.sub(&adj.expr, &ConceptExpr::atom("Attribute"));
            c
        }
    }

    fn gerundive_subject(&self) -> bool {
        self.cs.subject.tag == "VBG" || self.cs.s_mods.iter().any(|m| m.tag == "VBG")
    }

    /// Object concept before quantification: reified when adjectival,
    /// nested otherwise; a proper-noun object is a class under its apposition.
    fn object_concept(&mut self, t: &Term, apposition: Option<&Word>) -> Concept {
        if is_adjectival(&t.head) {
            let activity = self.gerundive_subject();
            return self.reify(t, activity);
        }
        let c = self.nest(t);
        if let (Some(app), "NNP") = (apposition, t.head.tag.as_str()) {
            let a = Concept::named(vec![part(app)]);
            self.sub(&c.expr, &a.expr);
        }
        c
    }

    fn main_object(&mut self) -> Concept {
        let t = self.cs.object_term();
        let app = self.cs.object_apposition.clone();
        self.object_concept(&t, app.as_ref())
    }

    fn subject_concept(&mut self) -> Concept {
        let t = self.cs.subject_term();
        self.nest(&t)
    }

    /// `O_N ⊑ O` with a fresh counter per object label.
    fn counted(&mut self, o: &Concept) -> Concept {
        let n = self.counter(&format!("object:{}", o.name()));
        let c = Concept::named(o.label.iter().cloned().chain([LabelPart::Counter(n)]).collect());
        self.sub(&c.expr, &o.expr);
        c
    }

    fn quantified(&mut self, o: Concept, q: Option<QuantifierKind>) -> Concept {
        match q {
            Some(QuantifierKind::Some | QuantifierKind::The) => self.counted(&o),
            Some(QuantifierKind::No) => o.negated(),
            _ => o,
        }
    }

    fn msp(&self, ind: &Word, apposition: Option<&Word>) -> Option<Concept> {
        if let Some(app) = apposition {
            return Some(Concept::named(vec![part(app)]));
        }
        self.lex.get_msp(&ind.lexeme).map(|m| Concept::named(vec![LabelPart::word(m)]))
    }

    /// `O(S)`, `[O+MSP](S)`, `[O+MSP] ⊑ O`, `[O+MSP] ⊑ MSP`; without an MSP
    /// the individual itself stands in as a nominal. Returns the induced concept.
    fn membership(&mut self, ind: &Word, o: &Concept, apposition: Option<&Word>) -> Concept {
        let name = individual(ind);
        self.member(&o.expr, &name);
        let induced = match self.msp(ind, apposition) {
            Some(m) => {
                let c = o.join(&m);
                self.sub(&c.expr, &m.expr);
                c
            }
            None => {
                let c = Concept::named(o.label.iter().cloned().chain([LabelPart::Nominal(name.clone())]).collect());
                self.sub(&c.expr, &ConceptExpr::nominal(name.clone()));
                c
            }
        };
        self.member(&induced.expr, &name);
        self.sub(&induced.expr, &o.expr);
        induced
    }

    /// `[O+S] ⊑ S`, `[O+S] ⊑ O`.
    fn intersect(&mut self, s: &Concept, o: &Concept) -> Concept {
        let c = o.join(s);
        self.sub(&c.expr, &s.expr);
        self.sub(&c.expr, &o.expr);
        c
    }

    /// Subject side of a plain IS-A against an unquantified object concept:
    /// membership for proper nouns, the quantifier rules otherwise.
    fn relate(&mut self, o: Concept, q2: Option<QuantifierKind>) -> &'static str {
        use QuantifierKind as Q;
        let cs = self.cs;
        let (q1, q2) = match (cs.q1, q2) {
            (Some(Q::No), Some(Q::No)) => (Some(Q::All), Some(Q::All)),
            p => p,
        };
        let counted = matches!(q2, Some(Q::Some | Q::The));
        let o = self.quantified(o, q2);
        if cs.subject.tag == "NNP" && cs.isa != IsaKind::Hypernymy {
            self.membership(&cs.subject, &o, cs.subject_apposition.as_ref());
            return "T-MEM";
        }
        let s = self.subject_concept();
        if cs.isa == IsaKind::Hypernymy {
            self.sub(&o.expr, &s.expr);
            return "T-HYPER";
        }
        match q1 {
            Some(Q::No) => {
                self.sub(&s.expr, &ConceptExpr::not(o.expr.clone()));
                "T-QNT-NO"
            }
            Some(Q::All) => {
                self.sub(&s.expr, &o.expr);
                "T-QNT-ALL"
            }
            Some(Q::Some) => {
                self.intersect(&s, &o);
                "T-QNT-SOME-SUBJ"
            }
            Some(Q::The) if cs.plurality.subject => {
                self.intersect(&s, &o);
                "T-QNT-SOME-SUBJ"
            }
            Some(q @ (Q::The | Q::A)) if q2 != Some(Q::All) => {
                let c = self.intersect(&s, &o);
                let n = self.counter(&format!("subject:{}", s.name()));
                let ind = instance_name(&s.label, n);
                self.member(&c.expr, &ind);
                if q == Q::The {
                    "T-QNT-THE-SUBJ"
                } else {
                    "T-QNT-A-SUBJ"
                }
            }
            _ if counted => {
                self.intersect(&s, &o);
                "T-QNT-SOME-OBJ"
            }
            _ => {
                self.sub(&s.expr, &o.expr);
                match q2 {
                    Some(Q::No) => "T-QNT-NO",
                    Some(Q::All) => "T-QNT-ALL",
                    _ if !cs.s_mods.is_empty() || !cs.o_mods.is_empty() => "T-MOD-NEST",
                    _ => "T-HYPO",
                }
            }
        }
    }

    /// `S ⊑ O`, or membership for a proper-noun subject.
    fn subsume_subject(&mut self, o: &Concept) -> Concept {
        let cs = self.cs;
        if cs.subject.tag == "NNP" {
            self.membership(&cs.subject, o, cs.subject_apposition.as_ref())
        } else {
            let s = self.subject_concept();
            self.sub(&s.expr, &o.expr);
            s
        }
    }

    fn unsupported(&self, reason: &str) -> TranslateError {
        TranslateError::UnsupportedShape { source_index: self.cs.source_index, reason: reason.to_string() }
    }
}
