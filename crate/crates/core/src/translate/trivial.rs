//! Membership, quantification, modification, clausal, such-as and
//! compound rules.

use super::{individual, term_parts, Concept, Tx};
use crate::characterize::{Connective, Term, TermList};
use crate::dlmodel::{ConceptExpr, LabelPart};

pub(super) fn plain(tx: &mut Tx) -> &'static str {
    let o = tx.main_object();
    tx.relate(o, tx.cs.q2)
}

/// A conjunctive object list that survived extraction: one IS-A per member.
pub(super) fn per_object(tx: &mut Tx, members: &[Term]) -> &'static str {
    let mut rule = "T-HYPO";
    for (i, m) in members.iter().enumerate() {
        let o = tx.object_concept(m, None);
        let r = tx.relate(o, tx.cs.q2);
        if i == 0 {
            rule = r;
        }
    }
    rule
}

/// "Carnivorous animal includes Kitty": the object individual is a member
/// of the subject concept.
pub(super) fn inverse_membership(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let s = tx.subject_concept();
    let members: Vec<Term> = match &cs.object_list {
        Some(l) => l.members.clone(),
        None => vec![cs.object_term()],
    };
    for m in &members {
        tx.membership(&m.head, &s, cs.object_apposition.as_ref());
    }
    "T-MEM-INV"
}

/// Case 2: `[O2+O1] ⊑ O1`, `[O2+O1] ⊑ O2`, `S ⊑ [O2+O1]`.
pub(super) fn case2(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let o1 = tx.main_object();
    let Some(t2) = cs.object2_term() else { return plain(tx) };
    let o2 = tx.object_concept(&t2, None);
    let o2 = tx.quantified(o2, cs.q3);
    let c = o2.join(&o1);
    tx.sub(&c.expr, &o1.expr);
    tx.sub(&c.expr, &o2.expr);
    tx.relate(c, None);
    "T-CLS-2"
}

/// Case 3: the clause predicate and the main object both subsume S.
pub(super) fn case3(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let o1 = tx.main_object();
    let o1 = tx.quantified(o1, cs.q2);
    tx.subsume_subject(&o1);
    if let Some(t2) = cs.object2_term() {
        let o2 = tx.object_concept(&t2, None);
        let o2 = tx.quantified(o2, cs.q3);
        tx.subsume_subject(&o2);
    }
    "T-CLS-3"
}

fn exemplar_parts(t: &Term) -> Vec<LabelPart> {
    term_parts(t)
}

/// Exemplars of S: `[E1..Ek+S]` for a conjunction, `⊔[Ei+S]` for a
/// disjunction, both under S and `target`; proper-noun exemplars are
/// asserted into their concept.
fn exemplify(tx: &mut Tx, list: &TermList, s: &Concept, target: Option<&Concept>) -> &'static str {
    let conj = list.connective == Connective::And || list.members.len() == 1;
    let mut assertions = Vec::new();
    let union = if conj {
        let label: Vec<LabelPart> = list.members.iter().flat_map(exemplar_parts).chain(s.label.iter().cloned()).collect();
        let c = Concept::named(label);
        for m in list.members.iter().filter(|m| m.head.tag == "NNP") {
            assertions.push((c.expr.clone(), individual(&m.head)));
        }
        c.expr
    } else {
        let mut parts = Vec::new();
        for m in &list.members {
            let c = Concept::named(exemplar_parts(m).into_iter().chain(s.label.iter().cloned()).collect());
            if m.head.tag == "NNP" {
                assertions.push((c.expr.clone(), individual(&m.head)));
            }
            parts.push(c.expr);
        }
        ConceptExpr::or(parts)
    };
    if let Some(t) = target {
        tx.sub(&union, &t.expr);
    }
    tx.sub(&union, &s.expr);
    for (c, ind) in assertions {
        tx.member(&c, &ind);
    }
    if conj {
        "T-SUCHAS-CONJ"
    } else {
        "T-SUCHAS-DISJ"
    }
}

/// "Boys, such as John and Joe, are students".
pub(super) fn such_as(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let Some(list) = cs.such_as.clone() else { return plain(tx) };
    let s = tx.subject_concept();
    let o = tx.main_object();
    exemplify(tx, &list, &s, Some(&o))
}

/// "Boys are exemplified by John and Joe": the objects are the exemplars.
pub(super) fn exemplified(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let list = cs.object_list.clone().unwrap_or(TermList { connective: Connective::And, members: vec![cs.object_term()] });
    let s = tx.subject_concept();
    exemplify(tx, &list, &s, None)
}

/// Disjunctive lists: `⊔Si ⊑ O` under a `UNION` label, `S ⊑ ⊔Oj`.
pub(super) fn compound(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let object = match cs.object_list.as_ref().filter(|l| l.connective == Connective::Or) {
        Some(list) => {
            let mut exprs = Vec::new();
            let mut label = Vec::new();
            for (i, m) in list.members.iter().enumerate() {
                let c = tx.object_concept(m, None);
                if i > 0 {
                    label.push(LabelPart::word("UNION"));
                }
                label.extend(c.label.iter().cloned());
                exprs.push(c.expr);
            }
            Concept { expr: ConceptExpr::or(exprs), label }
        }
        None => {
            let o = tx.main_object();
            tx.quantified(o, cs.q2)
        }
    };
    match cs.subject_list.as_ref().filter(|l| l.connective == Connective::Or) {
        Some(list) => {
            let mut exprs = Vec::new();
            let mut label = Vec::new();
            for (i, m) in list.members.iter().enumerate() {
                if i > 0 {
                    label.push(LabelPart::word("UNION"));
                }
                if m.head.tag == "NNP" {
                    let name = individual(&m.head);
                    label.push(LabelPart::Nominal(name.clone()));
                    exprs.push(ConceptExpr::nominal(name));
                } else {
                    let c = tx.nest(m);
                    label.extend(c.label.iter().cloned());
                    exprs.push(c.expr);
                }
            }
            let u = Concept::named(label);
            tx.equiv(&u.expr, &ConceptExpr::or(exprs));
            tx.sub(&u.expr, &object.expr);
            "T-CMP-UNION"
        }
        None => {
            if cs.subject.tag == "NNP" {
                tx.member(&object.expr, &individual(&cs.subject));
            } else {
                let s = tx.subject_concept();
                tx.sub(&s.expr, &object.expr);
            }
            "T-CMP-OBJOR"
        }
    }
}
