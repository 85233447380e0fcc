//! Gold-standard evaluation: characterization, lexical and taxonomic
//! precision/recall.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::dlmodel::{Axiom, Ontology};
use crate::inflect::singular;
use crate::pipeline::TraceEntry;
use crate::reason::{TaxonomyGraph, BOTTOM, TOP};
use crate::serialize::DlBlock;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{0} ontology has no concepts")]
    EmptyOntology(&'static str),
}

/// Splits camel case, digits and separators into lowercase singular
/// words: `StudentPerson` and `student persons` both give `student person`.
pub fn normalize_concept_name(name: &str) -> String {
    let chars: Vec<char> = name.chars().collect();
    let mut words: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if !c.is_alphanumeric() {
            if !cur.is_empty() {
                words.push(std::mem::take(&mut cur));
            }
            continue;
        }
        if let Some(&prev) = cur.chars().last().as_ref() {
            let next_lower = chars.get(i + 1).is_some_and(|n| n.is_lowercase());
            let boundary = (c.is_uppercase() && (prev.is_lowercase() || prev.is_ascii_digit()))
                || (c.is_uppercase() && prev.is_uppercase() && next_lower)
                || (c.is_ascii_digit() != prev.is_ascii_digit());
            if boundary {
                words.push(std::mem::take(&mut cur));
            }
        }
        cur.push(c);
    }
    if !cur.is_empty() {
        words.push(cur);
    }
    words.iter().map(|w| singular(&w.to_lowercase())).collect::<Vec<_>>().join(" ")
}

/// Harmonic mean, 0 when both are 0, kept within `[min, max]`.
pub fn harmonic(a: f64, b: f64) -> f64 {
    if a == b {
        return a;
    }
    if a + b == 0.0 {
        return 0.0;
    }
    (2.0 * a * b / (a + b)).clamp(a.min(b), a.max(b))
}

fn ratio(n: usize, d: usize) -> f64 {
    if d == 0 {
        0.0
    } else {
        n as f64 / d as f64
    }
}

pub fn lexicon(onto: &Ontology) -> BTreeSet<String> {
    onto.concept_names().iter().map(|n| normalize_concept_name(n)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LexicalMetrics {
    pub lp: f64,
    pub lr: f64,
    pub lf: f64,
    pub oi: f64,
    pub ol: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub learned: usize,
    pub gold: usize,
    pub common: usize,
}

pub fn lexical_sets(learned: &BTreeSet<String>, gold: &BTreeSet<String>) -> Result<(LexicalMetrics, Counts), EvalError> {
    if learned.is_empty() {
        return Err(EvalError::EmptyOntology("learned"));
    }
    if gold.is_empty() {
        return Err(EvalError::EmptyOntology("gold"));
    }
    let common = learned.intersection(gold).count();
    let extra = learned.len() - common;
    let lp = ratio(common, learned.len());
    let lr = ratio(common, gold.len());
    let m = LexicalMetrics { lp, lr, lf: harmonic(lp, lr), oi: ratio(extra, gold.len()), ol: 1.0 - lr };
    Ok((m, Counts { learned: learned.len(), gold: gold.len(), common }))
}

pub fn lexical_metrics(learned: &Ontology, gold: &Ontology) -> Result<LexicalMetrics, EvalError> {
    lexical_sets(&lexicon(learned), &lexicon(gold)).map(|(m, _)| m)
}

/// Concept hierarchy over normalized names: strict ancestors and
/// descendants per concept. Equivalent names count as both.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Hierarchy {
    pub up: BTreeMap<String, BTreeSet<String>>,
    pub down: BTreeMap<String, BTreeSet<String>>,
}

impl Hierarchy {
    /// From `(child, parent)` pairs; every name mentioned becomes a concept.
    pub fn from_edges<'a>(concepts: impl IntoIterator<Item = &'a str>, edges: impl IntoIterator<Item = (&'a str, &'a str)>) -> Self {
        let mut parents: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for c in concepts {
            parents.entry(c.to_string()).or_default();
        }
        for (c, p) in edges {
            parents.entry(p.to_string()).or_default();
            if c != p {
                parents.entry(c.to_string()).or_default().insert(p.to_string());
            }
        }
        let mut up: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for c in parents.keys() {
            let mut seen = BTreeSet::new();
            let mut stack: Vec<&String> = parents[c].iter().collect();
            while let Some(x) = stack.pop() {
                if seen.insert(x.clone()) {
                    stack.extend(parents[x].iter());
                }
            }
            seen.remove(c);
            up.insert(c.clone(), seen);
        }
        let mut down: BTreeMap<String, BTreeSet<String>> = up.keys().map(|k| (k.clone(), BTreeSet::new())).collect();
        for (c, ups) in &up {
            for u in ups {
                down.get_mut(u).unwrap().insert(c.clone());
            }
        }
        Hierarchy { up, down }
    }

    /// Normalized names; `owl:Thing`/`owl:Nothing` are dropped and
    /// unsatisfiable concepts kept as roots.
    pub fn from_taxonomy(t: &TaxonomyGraph) -> Self {
        let norm = |s: &str| normalize_concept_name(s);
        let mut concepts: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        for members in t.equivalence_classes.values() {
            let ms: Vec<String> = members.iter().map(|m| norm(m)).collect();
            concepts.extend(ms.iter().cloned());
            for a in &ms {
                for b in &ms {
                    edges.push((a.clone(), b.clone()));
                }
            }
        }
        concepts.extend(t.unsatisfiable.iter().map(|u| norm(u)));
        for (c, p) in &t.edges {
            if p == TOP || p == BOTTOM || c == BOTTOM {
                continue;
            }
            for a in &t.equivalence_classes[c] {
                for b in &t.equivalence_classes[p] {
                    edges.push((norm(a), norm(b)));
                }
            }
        }
        Hierarchy::from_edges(concepts.iter().map(String::as_str), edges.iter().map(|(a, b)| (a.as_str(), b.as_str())))
    }

    pub fn concepts(&self) -> BTreeSet<String> {
        self.up.keys().cloned().collect()
    }

    /// Common semantic cotopy of `c` here, restricted to `other`'s concepts.
    pub fn csc(&self, c: &str, other: &Hierarchy) -> BTreeSet<String> {
        let mut out: BTreeSet<String> = BTreeSet::new();
        out.insert(c.to_string());
        out.extend(self.up.get(c).into_iter().flatten().cloned());
        out.extend(self.down.get(c).into_iter().flatten().cloned());
        out.retain(|x| other.up.contains_key(x));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TaxonomicMetrics {
    pub tp: f64,
    pub tr: f64,
    pub tf: f64,
    pub tf_prime: f64,
}

/// Cotopy precision and recall averaged over shared concepts; `tf'`
/// combines `tf` with the lexical F-measure of the same concept sets.
pub fn taxonomic_hierarchies(learned: &Hierarchy, gold: &Hierarchy) -> Result<TaxonomicMetrics, EvalError> {
    let (lc, gc) = (learned.concepts(), gold.concepts());
    let (lex, _) = lexical_sets(&lc, &gc)?;
    let shared: Vec<&String> = lc.intersection(&gc).collect();
    let (mut p, mut r) = (0.0, 0.0);
    for c in &shared {
        let a = learned.csc(c, gold);
        let b = gold.csc(c, learned);
        let both = a.intersection(&b).count();
        p += ratio(both, a.len());
        r += ratio(both, b.len());
    }
    let n = shared.len().max(1) as f64;
    let (tp, tr) = if shared.is_empty() { (0.0, 0.0) } else { (p / n, r / n) };
    let tf = harmonic(tp, tr);
    Ok(TaxonomicMetrics { tp, tr, tf, tf_prime: harmonic(tf, lex.lf) })
}

pub fn taxonomic_metrics(learned: &TaxonomyGraph, gold: &TaxonomyGraph) -> Result<TaxonomicMetrics, EvalError> {
    taxonomic_hierarchies(&Hierarchy::from_taxonomy(learned), &Hierarchy::from_taxonomy(gold))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Correct,
    Incorrect,
    Rejected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SentenceVerdict {
    pub source_index: usize,
    pub verdict: Verdict,
    pub partial: bool,
}

/// Compares each traced sentence with the golden block of the same index:
/// characterized sentences are correct when their axiom set matches.
pub fn judge(trace: &[TraceEntry], golden: &[DlBlock]) -> Vec<SentenceVerdict> {
    let blocks: BTreeMap<usize, &DlBlock> = golden.iter().map(|b| (b.index, b)).collect();
    trace
        .iter()
        .map(|e| {
            let verdict = if !e.characterized() {
                Verdict::Rejected
            } else {
                let got: BTreeSet<Axiom> = e.axioms().into_iter().map(|a| a.canonical()).collect();
                match blocks.get(&e.source_index) {
                    Some(b) if e.rejection.is_none() && got == b.axioms.iter().map(Axiom::canonical).collect() => {
                        Verdict::Correct
                    }
                    _ => Verdict::Incorrect,
                }
            };
            SentenceVerdict { source_index: e.source_index, verdict, partial: e.partial }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CharacterizationMetrics {
    pub cp: f64,
    pub cr: f64,
    pub total: usize,
    pub characterized: usize,
    pub correct: usize,
}

pub fn characterization_metrics(verdicts: &[SentenceVerdict]) -> CharacterizationMetrics {
    let correct = verdicts.iter().filter(|v| v.verdict == Verdict::Correct).count();
    let characterized = verdicts.iter().filter(|v| v.verdict != Verdict::Rejected).count();
    CharacterizationMetrics {
        cp: ratio(correct, characterized),
        cr: ratio(correct, verdicts.len()),
        total: verdicts.len(),
        characterized,
        correct,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub cp: Option<f64>,
    pub cr: Option<f64>,
    pub lp: f64,
    pub lr: f64,
    pub lf: f64,
    pub oi: f64,
    pub ol: f64,
    pub tp: f64,
    pub tr: f64,
    pub tf: f64,
    pub tf_prime: f64,
    pub counts: Counts,
    pub sentences: Option<CharacterizationMetrics>,
}

/// Lexical and taxonomic comparison of two classified ontologies.
pub fn evaluate(
    learned: (&Ontology, &TaxonomyGraph),
    gold: (&Ontology, &TaxonomyGraph),
    sentences: Option<CharacterizationMetrics>,
) -> Result<EvalReport, EvalError> {
    let (lex, counts) = lexical_sets(&lexicon(learned.0), &lexicon(gold.0))?;
    let tax = taxonomic_metrics(learned.1, gold.1)?;
    Ok(EvalReport {
        cp: sentences.map(|s| s.cp),
        cr: sentences.map(|s| s.cr),
        lp: lex.lp,
        lr: lex.lr,
        lf: lex.lf,
        oi: lex.oi,
        ol: lex.ol,
        tp: tax.tp,
        tr: tax.tr,
        tf: tax.tf,
        tf_prime: harmonic(tax.tf, lex.lf),
        counts,
        sentences,
    })
}

impl EvalReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).unwrap_or_default();
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut rows: Vec<(&str, String)> = Vec::new();
        if let (Some(cp), Some(cr)) = (self.cp, self.cr) {
            rows.push(("CP", format!("{cp:.4}")));
            rows.push(("CR", format!("{cr:.4}")));
        }
        for (k, v) in [
            ("LP", self.lp),
            ("LR", self.lr),
            ("LF", self.lf),
            ("OI", self.oi),
            ("OL", self.ol),
            ("TP", self.tp),
            ("TR", self.tr),
            ("TF", self.tf),
            ("TF'", self.tf_prime),
        ] {
            rows.push((k, format!("{v:.4}")));
        }
        let mut out = format!("{:<8}{:>8}\n", "Metric", "Value");
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<8}{v:>8}");
        }
        let _ = writeln!(
            out,
            "concepts: learned {}, gold {}, common {}",
            self.counts.learned, self.counts.gold, self.counts.common
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn name_normalization() {
        assert_eq!(normalize_concept_name("StudentPerson"), "student person");
        assert_eq!(normalize_concept_name("student persons"), "student person");
        assert_eq!(normalize_concept_name("CatUNIONDog"), "cat union dog");
        assert_eq!(normalize_concept_name("IntelPentium4"), "intel pentium 4");
        assert_eq!(normalize_concept_name("Student_1Activist"), "student 1 activist");
    }

    #[test]
    fn identical_lexicons() {
        let (m, _) = lexical_sets(&names(&["a", "b"]), &names(&["a", "b"])).unwrap();
        assert_eq!((m.lp, m.lr, m.lf, m.oi, m.ol), (1.0, 1.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn hand_counted_lexicons() {
        let (m, c) = lexical_sets(&names(&["a", "b", "c", "x"]), &names(&["a", "b", "d"])).unwrap();
        assert_eq!(c, Counts { learned: 4, gold: 3, common: 2 });
        assert_eq!(m.lp, 0.5);
        assert_eq!(m.lr, 2.0 / 3.0);
        assert_eq!(m.oi, 2.0 / 3.0);
        assert_eq!(m.ol, 1.0 - 2.0 / 3.0);
    }

    #[test]
    fn empty_side_is_an_error() {
        assert_eq!(lexical_sets(&names(&[]), &names(&["a"])), Err(EvalError::EmptyOntology("learned")));
        assert_eq!(lexical_sets(&names(&["a"]), &names(&[])), Err(EvalError::EmptyOntology("gold")));
    }

    #[test]
    fn identical_taxonomies() {
        let h = Hierarchy::from_edges(["r", "a", "b"], [("a", "r"), ("b", "a")]);
        let m = taxonomic_hierarchies(&h, &h).unwrap();
        assert_eq!((m.tp, m.tr, m.tf, m.tf_prime), (1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn characterization_counts() {
        let v = |i, verdict| SentenceVerdict { source_index: i, verdict, partial: false };
        let all = [v(1, Verdict::Correct), v(2, Verdict::Correct)];
        let m = characterization_metrics(&all);
        assert_eq!((m.cp, m.cr), (1.0, 1.0));
        let mixed = [v(1, Verdict::Correct), v(2, Verdict::Incorrect), v(3, Verdict::Rejected), v(4, Verdict::Correct)];
        let m = characterization_metrics(&mixed);
        assert_eq!((m.cp, m.cr), (2.0 / 3.0, 0.5));
    }

    #[test]
    fn harmonic_mean_edges() {
        assert_eq!(harmonic(0.0, 0.0), 0.0);
        assert_eq!(harmonic(1.0, 0.0), 0.0);
        assert_eq!(harmonic(0.5, 0.5), 0.5);
    }

    #[test]
    fn table_has_metric_rows() {
        let h = Hierarchy::from_edges(["a"], []);
        let t = taxonomic_hierarchies(&h, &h).unwrap();
        let r = EvalReport {
            cp: Some(1.0),
            cr: Some(1.0),
            lp: 1.0,
            lr: 1.0,
            lf: 1.0,
            oi: 0.0,
            ol: 0.0,
            tp: t.tp,
            tr: t.tr,
            tf: t.tf,
            tf_prime: t.tf_prime,
            counts: Counts { learned: 1, gold: 1, common: 1 },
            sentences: None,
        };
        let table = r.to_table();
        for row in ["CP", "LP", "OL", "TF'"] {
            assert!(table.lines().any(|l| l.starts_with(row)), "{row}");
        }
    }
}
