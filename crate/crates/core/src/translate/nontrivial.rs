//! Reification, gerunds, equivalence, similarity, holonymy, ONLY,
//! dimensional modifiers and temporal/epistemic roles.

use super::{individual, is_adjectival, part, term_parts, Concept, TranslateError, Tx};
use crate::characterize::{CharSentence, IsaKind, OnlyPosition, Term, Word};
use crate::dlmodel::{dimension_role, ConceptExpr, LabelPart, Literal};
use crate::lexicon::{Lexicon, Polarity};
use crate::tagger::{degree_stem, NUMBER_WORDS, ORDINALS};

pub(super) fn reify(tx: &mut Tx) -> &'static str {
    let o = tx.main_object();
    tx.relate(o, tx.cs.q2);
    "N-REIFY"
}

/// `[M+S] ⊑ O`, `[M+S] ⊑ (M ⊔ S)` for a gerund modifier M.
pub(super) fn gerund(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let t = cs.subject_term();
    let c = Concept::named(term_parts(&t));
    let m = Concept::named(t.mods.iter().map(part).collect());
    let s = Concept::named(vec![part(&t.head)]);
    tx.sub(&c.expr, &ConceptExpr::or(vec![m.expr, s.expr]));
    let o = tx.main_object();
    tx.sub(&c.expr, &o.expr);
    "N-GERUND"
}

pub(super) fn equivalence(tx: &mut Tx) -> Result<&'static str, TranslateError> {
    let cs = tx.cs;
    if cs.subject.tag != cs.object1.tag {
        return Err(TranslateError::PosMismatch {
            source_index: cs.source_index,
            s_tag: cs.subject.tag.clone(),
            o_tag: cs.object1.tag.clone(),
        });
    }
    if cs.subject.tag == "NNP" {
        tx.out.push(crate::dlmodel::Axiom::same(individual(&cs.subject), individual(&cs.object1)));
    } else {
        let s = tx.subject_concept();
        let o = tx.nest(&cs.object_term());
        tx.equiv(&s.expr, &o.expr);
    }
    Ok("N-EQUIV")
}

/// `S ⊑ [O+Like]`, `O ⊑ [O+Like]`.
pub(super) fn similarity(tx: &mut Tx) -> &'static str {
    let s = tx.subject_concept();
    let o = tx.nest(&tx.cs.object_term());
    let like = o.suffixed("Like");
    tx.sub(&s.expr, &like.expr);
    tx.sub(&o.expr, &like.expr);
    "N-LIKE"
}

/// Inclusion read as hypernymy when the lexicon backs it, as
/// `S ≡ ∀include.O` otherwise.
pub(super) fn holonymy(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let members: Vec<Term> = match &cs.object_list {
        Some(l) => l.members.clone(),
        None => vec![cs.object_term()],
    };
    let s = tx.subject_concept();
    let backed = members.iter().all(|m| tx.lex.is_hyponym(&m.head.lexeme, &cs.subject.lexeme));
    let objects: Vec<Concept> = members.iter().map(|m| tx.nest(m)).collect();
    if backed {
        for o in &objects {
            tx.sub(&o.expr, &s.expr);
        }
    } else {
        let target = ConceptExpr::or(objects.into_iter().map(|o| o.expr).collect());
        tx.equiv(&s.expr, &ConceptExpr::all("include", target));
    }
    "N-HOLO"
}

pub(super) fn only(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let o = tx.main_object();
    match cs.only_position {
        Some(OnlyPosition::Subject) | None => {
            tx.relate(o, None);
            "N-ONLY-2"
        }
        Some(pos) => {
            let s = tx.subsume_subject(&o);
            if pos == OnlyPosition::TheOnly {
                tx.equiv(&s.expr, &o.expr);
            }
            let rest = ConceptExpr::and(vec![s.expr.clone(), ConceptExpr::not(o.expr.clone())]);
            tx.equiv(&rest, &ConceptExpr::Bottom);
            if pos == OnlyPosition::TheOnly {
                "N-ONLY-3"
            } else {
                "N-ONLY-1"
            }
        }
    }
}

fn modal_shape(isa: IsaKind) -> (&'static str, &'static str, &'static str) {
    match isa {
        IsaKind::WasPast => ("N-PPR", "PPR", "PPR"),
        IsaKind::WillBeFuture => ("N-FPR", "FPR", "FPR"),
        IsaKind::MayBe => ("N-MAYBE", "MayBe", "mayBe"),
        IsaKind::CanBecome => ("N-CANBECOME", "CanBecome", "canBecome"),
        IsaKind::CanBe => ("N-CANBE", "CanBe", "canBe"),
        IsaKind::IsNow => ("N-ISNOW", "IsNow", "isNow"),
        IsaKind::IsStill => ("N-ISSTILL", "IsStill", "PPR"),
        _ => ("N-SOMETIMES", "IsSometimes", "isSometimes"),
    }
}

/// Past, future, epistemic and adverbial IS-A. Object quantifiers are
/// dropped; a proper-noun subject gets `[Prefix+O+MSP]` as its concept.
pub(super) fn modal(tx: &mut Tx) -> &'static str {
    let cs = tx.cs;
    let o = tx.main_object();
    if !cs.isa.is_modal() {
        let adv = cs.adverbial.clone().unwrap_or_default();
        let e = o.prefixed(&adv);
        tx.sub(&e.expr, &o.expr);
        let rhs = ConceptExpr::and(vec![e.expr, ConceptExpr::all("FPR", o.expr.clone())]);
        if cs.subject.tag == "NNP" {
            tx.member(&rhs, &individual(&cs.subject));
        } else {
            let s = tx.subject_concept();
            tx.sub(&s.expr, &rhs);
        }
        return "N-FPR";
    }
    let (rule, prefix, role) = modal_shape(cs.isa);
    let x = if cs.subject.tag == "NNP" {
        let name = individual(&cs.subject);
        let (c, parent) = match tx.msp(&cs.subject, cs.subject_apposition.as_ref()) {
            Some(m) => (o.prefixed(prefix).join(&m), m.expr),
            None => {
                let label = o.prefixed(prefix).label.into_iter().chain([LabelPart::Nominal(name.clone())]).collect();
                (Concept::named(label), ConceptExpr::nominal(name.clone()))
            }
        };
        tx.member(&c.expr, &name);
        if parent.as_atom().is_some() {
            tx.member(&parent, &name);
        }
        tx.sub(&c.expr, &parent);
        c
    } else {
        tx.subject_concept()
    };
    let back = ConceptExpr::all(role, o.expr.clone());
    match cs.isa {
        IsaKind::WasPast => {
            tx.sub(&x.expr, &ConceptExpr::or(vec![o.expr.clone(), back.clone()]));
            tx.sub(&o.expr, &ConceptExpr::not(back));
        }
        IsaKind::IsStill => tx.sub(&x.expr, &ConceptExpr::and(vec![o.expr.clone(), back])),
        _ => tx.equiv(&x.expr, &back),
    }
    rule
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum DimMarker {
    Numeric,
    Superlative,
    Comparative,
}

fn object_words(cs: &CharSentence) -> Vec<Word> {
    cs.o_mods.iter().chain([&cs.object1]).cloned().collect()
}

pub(super) fn dimension_marker(cs: &CharSentence, lex: &Lexicon) -> Option<DimMarker> {
    let words = object_words(cs);
    let has = |tag: &str| words.iter().any(|w| w.tag == tag);
    if cs.comparative_ref.is_some() || has("JJR") || has("RBR") {
        Some(DimMarker::Comparative)
    } else if has("JJS") || has("RBS") {
        Some(DimMarker::Superlative)
    } else if has("CD") && words.iter().any(|w| lex.dimensions_of(&w.lexeme).is_some()) {
        Some(DimMarker::Numeric)
    } else {
        None
    }
}

struct DimAdjective {
    index: usize,
    base: String,
    dimension: String,
    polarity: Polarity,
}

fn find_adjective(words: &[Word], lex: &Lexicon) -> Option<DimAdjective> {
    let flip = words.iter().any(|w| matches!(w.lexeme.to_lowercase().as_str(), "less" | "least"));
    for (index, w) in words.iter().enumerate() {
        let lower = w.lexeme.to_lowercase();
        let candidates = match w.tag.as_str() {
            "JJ" => vec![lower],
            "JJS" => degree_stem(&lower, "est"),
            "JJR" => degree_stem(&lower, "er"),
            _ => continue,
        };
        for base in candidates {
            if let Some((dimension, polarity)) = lex.dimensions_of(&base).and_then(|d| d.iter().next()) {
                let polarity = match (polarity, flip) {
                    (Polarity::Positive, true) => Polarity::Negative,
                    (Polarity::Negative, true) => Polarity::Positive,
                    (p, false) => *p,
                };
                return Some(DimAdjective { index, base, dimension: dimension.clone(), polarity });
            }
        }
    }
    None
}

fn number_value(w: &str) -> Literal {
    let l = w.to_lowercase();
    if let Some(i) = NUMBER_WORDS.iter().position(|n| *n == l) {
        return Literal::Int(i as i64);
    }
    l.parse::<i64>().map(Literal::Int).unwrap_or(Literal::Symbol(l))
}

/// Individual holding a subject's value on a dimension, e.g. `H_John`.
fn dimension_individual(dimension: &str, ind: &str) -> String {
    format!("{}_{ind}", dimension.chars().next().unwrap_or('D'))
}

/// Numeric, superlative and comparative object modifiers over a
/// dimensional adjective.
pub(super) fn dimension(tx: &mut Tx, marker: DimMarker) -> Result<&'static str, TranslateError> {
    let cs = tx.cs;
    let words = object_words(cs);
    let Some(adj) = find_adjective(&words, tx.lex) else {
        let adjective = words.iter().find(|w| w.tag.starts_with("JJ")).or(cs.o_mods.first()).unwrap_or(&cs.object1).lexeme.clone();
        return Err(TranslateError::UnknownDimension { source_index: cs.source_index, adjective });
    };
    let dim = ConceptExpr::atom(adj.dimension.clone());
    let has_dim = dimension_role(&adj.dimension);
    tx.sub(&dim, &ConceptExpr::atom("Dimension"));
    let head = (!is_adjectival(&cs.object1) && adj.index != words.len() - 1).then(|| Concept::named(vec![part(&cs.object1)]));
    let subject_ind = (cs.subject.tag == "NNP").then(|| individual(&cs.subject));
    let msp = match subject_ind {
        Some(_) => tx.msp(&cs.subject, cs.subject_apposition.as_ref()),
        None => None,
    };
    // the defined concept: object words (plus any reference) plus MSP, or the subject itself
    let defined = |extra: Vec<LabelPart>, tx: &mut Tx| -> Concept {
        match &subject_ind {
            Some(name) => {
                let mut label = term_parts(&cs.object_term());
                label.extend(extra);
                match &msp {
                    Some(m) => label.extend(m.label.iter().cloned()),
                    None => label.push(LabelPart::Nominal(name.clone())),
                }
                Concept::named(label)
            }
            None => tx.subject_concept(),
        }
    };
    let define = |tx: &mut Tx, d: &Concept, body: ConceptExpr| {
        if subject_ind.is_some() {
            tx.equiv(&d.expr, &body);
        } else {
            tx.sub(&d.expr, &body);
        }
    };
    let adj_term = Term { mods: vec![], head: Word::new(adj.base.clone(), "JJ") };

    match marker {
        DimMarker::Numeric => {
            let value = words.iter().find(|w| w.tag == "CD").map(|w| number_value(&w.lexeme)).unwrap_or(Literal::Int(0));
            let unit = words
                .iter()
                .find_map(|w| tx.lex.unit_for_surface(&w.lexeme))
                .or_else(|| tx.lex.default_unit(&adj.dimension))
                .cloned();
            let thing = tx.reify(&adj_term, false);
            let mut conj = vec![thing.expr];
            conj.extend(head.map(|h| h.expr));
            let value_expr = ConceptExpr::DataAll("hasValue".into(), "xsd:integer".into());
            let inner = match &unit {
                Some(u) => {
                    let ua = ConceptExpr::atom(u.name.clone());
                    tx.sub(&ua, &ConceptExpr::atom("Unit"));
                    ConceptExpr::all("hasUnit", ConceptExpr::and(vec![ua, value_expr]))
                }
                None => value_expr,
            };
            conj.push(ConceptExpr::all(has_dim.clone(), ConceptExpr::and(vec![dim.clone(), inner])));
            let d = defined(vec![], tx);
            define(tx, &d, ConceptExpr::and(conj));
            if let Some(ind) = &subject_ind {
                tx.member(&d.expr, ind);
                let di = dimension_individual(&adj.dimension, ind);
                tx.member(&dim, &di);
                tx.role(&has_dim, ind, &di);
                match &unit {
                    Some(u) => {
                        let ui = format!("{}_{ind}", u.abbrev);
                        tx.member(&ConceptExpr::atom(u.name.clone()), &ui);
                        tx.role("hasUnit", &di, &ui);
                        tx.data("hasValue", &ui, value);
                    }
                    None => tx.data("hasValue", &di, value),
                }
            }
            Ok("N-DIM-NUM")
        }
        DimMarker::Superlative => {
            let one_of = words.iter().any(|w| w.lexeme.eq_ignore_ascii_case("one of"));
            let ordinal = words.iter().find_map(|w| ORDINALS.iter().position(|o| w.lexeme.eq_ignore_ascii_case(o)).map(|i| i as i64 + 1));
            let negative = adj.polarity == Polarity::Negative;
            let (rank, rule) = match (one_of, ordinal) {
                (true, _) => (Literal::Symbol(if negative { "n-m".into() } else { "m".into() }), "N-DIM-RANKSUP"),
                (false, Some(k)) if negative => (Literal::Symbol(format!("n-{k}")), "N-DIM-RANKSUP"),
                (false, Some(k)) => (Literal::Int(k), "N-DIM-RANKSUP"),
                (false, None) if negative => (Literal::Symbol("n".into()), "N-DIM-SUP"),
                (false, None) => (Literal::Int(1), "N-DIM-SUP"),
            };
            let thing = tx.reify(&adj_term, false);
            let mut conj = vec![thing.expr];
            conj.extend(head.map(|h| h.expr));
            if subject_ind.is_some() {
                conj.extend(msp.as_ref().map(|m| m.expr.clone()));
            }
            let ranked = ConceptExpr::and(vec![
                ConceptExpr::atom("Rank"),
                ConceptExpr::all("hasValue", ConceptExpr::DataNominal(rank.clone())),
            ]);
            conj.push(ConceptExpr::all(has_dim.clone(), ConceptExpr::and(vec![dim.clone(), ConceptExpr::all("hasRank", ranked)])));
            let d = defined(vec![], tx);
            define(tx, &d, ConceptExpr::and(conj));
            if let Some(ind) = &subject_ind {
                tx.member(&d.expr, ind);
                let di = dimension_individual(&adj.dimension, ind);
                tx.member(&dim, &di);
                tx.role(&has_dim, ind, &di);
                let ri = format!("r_{di}");
                tx.member(&ConceptExpr::atom("Rank"), &ri);
                tx.role("hasRank", &di, &ri);
                tx.data("hasValue", &ri, rank);
            }
            Ok(rule)
        }
        DimMarker::Comparative => {
            let mut base_mods = vec![Word::new(adj.base.clone(), "JJ")];
            base_mods.extend(
                words[..words.len() - 1]
                    .iter()
                    .enumerate()
                    .filter(|(i, w)| *i != adj.index && !matches!(w.tag.as_str(), "RBR" | "JJR" | "DT"))
                    .map(|(_, w)| w.clone()),
            );
            let base = if adj.index == words.len() - 1 || is_adjectival(&cs.object1) {
                tx.reify(&adj_term, false)
            } else {
                tx.nest(&Term { mods: base_mods, head: cs.object1.clone() })
            };
            let unit = tx.lex.default_unit(&adj.dimension).cloned();
            let measured = |tx: &mut Tx, value: ConceptExpr| -> ConceptExpr {
                let inner = match &unit {
                    Some(u) => {
                        let ua = ConceptExpr::atom(u.name.clone());
                        tx.sub(&ua, &ConceptExpr::atom("Unit"));
                        ConceptExpr::all("hasUnit", ConceptExpr::and(vec![ua, ConceptExpr::all("hasValue", value)]))
                    }
                    None => ConceptExpr::all("hasValue", value),
                };
                ConceptExpr::all(has_dim.clone(), ConceptExpr::and(vec![dim.clone(), inner]))
            };
            let reference = cs.comparative_ref.as_ref().map(|r| {
                if r.tag == "NNP" {
                    let m = tx.msp(r, None);
                    let c = match &m {
                        Some(m) => Concept::named(vec![part(r)]).join(m),
                        None => Concept::named(vec![LabelPart::Nominal(individual(r))]),
                    };
                    (c, m, Some(individual(r)))
                } else {
                    (tx.nest(&Term { mods: vec![], head: r.clone() }), None, None)
                }
            });
            let extra: Vec<LabelPart> = cs.comparative_ref.iter().map(part).collect();
            let d = defined(extra, tx);
            let mut d_conj = vec![base.expr.clone()];
            if subject_ind.is_some() {
                d_conj.extend(msp.as_ref().map(|m| m.expr.clone()));
            }
            let greater = |d: &str| ConceptExpr::all("hasGreaterValue", ConceptExpr::nominal(d));
            if adj.polarity == Polarity::Positive {
                let marker = format!("d_{}", reference.as_ref().map(|r| r.0.name()).unwrap_or_else(|| base.name()));
                d_conj.push(measured(tx, greater(&marker)));
                define(tx, &d, ConceptExpr::and(d_conj));
                if let Some((r, r_msp, r_ind)) = &reference {
                    let mut r_conj = vec![base.expr.clone()];
                    r_conj.extend(r_msp.as_ref().map(|m| m.expr.clone()));
                    r_conj.push(measured(tx, ConceptExpr::nominal(marker.clone())));
                    define_reference(tx, r, r_ind.as_deref(), ConceptExpr::and(r_conj));
                }
            } else {
                // the reference side holds the greater value
                let marker = format!("d_{}", d.name());
                d_conj.push(measured(tx, ConceptExpr::nominal(marker.clone())));
                define(tx, &d, ConceptExpr::and(d_conj));
                let mut r_conj = vec![base.expr.clone()];
                match &reference {
                    Some((r, r_msp, r_ind)) => {
                        r_conj.extend(r_msp.as_ref().map(|m| m.expr.clone()));
                        r_conj.push(measured(tx, greater(&marker)));
                        define_reference(tx, r, r_ind.as_deref(), ConceptExpr::and(r_conj));
                    }
                    None => {
                        let body = measured(tx, greater(&marker));
                        tx.sub(&base.expr, &body);
                    }
                }
            }
            if let Some(ind) = &subject_ind {
                tx.member(&d.expr, ind);
            }
            Ok("N-DIM-CMP")
        }
    }
}

fn define_reference(tx: &mut Tx, r: &Concept, ind: Option<&str>, body: ConceptExpr) {
    match ind {
        Some(ind) => {
            tx.equiv(&r.expr, &body);
            tx.member(&r.expr, ind);
        }
        None => tx.sub(&r.expr, &body),
    }
}
