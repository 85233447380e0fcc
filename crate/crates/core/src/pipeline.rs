//! Corpus ingestion and the tag → simplify → characterize → translate
//! pipeline, with a per-line trace.

use std::fs;
use std::io;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::characterize::{characterize, CharError, CharSentence};
use crate::dlmodel::{Axiom, Ontology};
use crate::lexicon::Lexicon;
use crate::preprocess::{canonicalize_objects, extract_triples, normalize, singularize, PreprocessError, SimpleSentence};
use crate::serialize::{axiom_to_dl, parse_axiom};
use crate::tagger::{parse_pretagged, render_pretagged, tag, Token};
use crate::translate::translate_into;

const PARTIAL_MARK: &str = "partial";

/// One sentence of a corpus file. `source_index` counts sentences from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusLine {
    pub source_index: usize,
    pub line: usize,
    pub text: String,
    pub partial: bool,
}

/// Blank lines and `#` lines are skipped; a trailing `# partial` sets the
/// flag and other trailing comments are dropped.
pub fn parse_corpus(text: &str) -> Vec<CorpusLine> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (body, comment) = match trimmed.split_once(" #") {
            Some((b, c)) => (b.trim(), Some(c.trim())),
            None => (trimmed, None),
        };
        out.push(CorpusLine {
            source_index: out.len() + 1,
            line: i + 1,
            text: body.to_string(),
            partial: comment == Some(PARTIAL_MARK),
        });
    }
    out
}

pub fn read_corpus(path: &Path) -> io::Result<Vec<CorpusLine>> {
    Ok(parse_corpus(&fs::read_to_string(path)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Tag,
    Simplify,
    Characterize,
    Translate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub stage: Stage,
    pub reason: String,
    /// The sentence has no IS-A reading at all (as opposed to a failure
    /// on an IS-A sentence).
    pub not_isa: bool,
}

/// Result of the stages before translation for one corpus line.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub line: CorpusLine,
    pub tokens: Vec<Token>,
    pub simple: Vec<SimpleSentence>,
    pub characterized: Vec<Result<CharSentence, CharError>>,
    pub rejection: Option<Rejection>,
}

pub fn analyze(line: &CorpusLine, lex: &Lexicon, pretagged: bool) -> Analysis {
    let mut a = Analysis { line: line.clone(), tokens: Vec::new(), simple: Vec::new(), characterized: Vec::new(), rejection: None };
    let tagged = if pretagged { parse_pretagged(&line.text) } else { tag(&line.text, lex) };
    a.tokens = match tagged {
        Ok(t) => t,
        Err(e) => {
            a.rejection = Some(Rejection { stage: Stage::Tag, reason: e.to_string(), not_isa: false });
            return a;
        }
    };
    let triples = match extract_triples(&a.tokens, line.source_index, lex) {
        Ok(t) => t,
        Err(e) => {
            let not_isa = matches!(e, PreprocessError::NotIsaSentence { .. } | PreprocessError::NotPureIsa { .. });
            a.rejection = Some(Rejection { stage: Stage::Simplify, reason: e.to_string(), not_isa });
            return a;
        }
    };
    a.simple = triples.iter().map(|s| normalize(&singularize(s, lex), lex)).collect();
    canonicalize_objects(&mut a.simple, lex);
    a.characterized = a.simple.iter().map(|s| characterize(s, lex)).collect();
    if let Some(Err(e)) = a.characterized.iter().find(|c| c.is_err()) {
        a.rejection = Some(Rejection { stage: Stage::Characterize, reason: e.to_string(), not_isa: false });
    }
    a
}

/// Analyzes every line, in parallel when `jobs > 1`; order is preserved.
pub fn analyze_all(lines: &[CorpusLine], lex: &Lexicon, pretagged: bool, jobs: usize) -> Vec<Analysis> {
    if jobs <= 1 {
        return lines.iter().map(|l| analyze(l, lex, pretagged)).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| lines.par_iter().map(|l| analyze(l, lex, pretagged)).collect()),
        Err(_) => lines.iter().map(|l| analyze(l, lex, pretagged)).collect(),
    }
}

fn dl_strings<S: Serializer>(axioms: &[Axiom], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(axioms.iter().map(axiom_to_dl))
}

fn parse_dl_strings<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Axiom>, D::Error> {
    let lines = Vec::<String>::deserialize(d)?;
    lines.iter().map(|l| parse_axiom(l).map_err(serde::de::Error::custom)).collect()
}

/// Reads a trace written by [`trace_json`].
pub fn parse_trace(text: &str) -> serde_json::Result<Vec<TraceEntry>> {
    serde_json::from_str(text)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTrace {
    pub expansion_id: usize,
    pub text: String,
    pub signature: Option<String>,
    pub rule_id: Option<String>,
    #[serde(serialize_with = "dl_strings", deserialize_with = "parse_dl_strings")]
    pub axioms: Vec<Axiom>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Translated,
    Rejected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub source_index: usize,
    pub line: usize,
    pub text: String,
    pub partial: bool,
    pub tagged: Option<String>,
    pub expansions: Vec<ExpansionTrace>,
    pub outcome: Outcome,
    pub rejection: Option<Rejection>,
    /// Axioms that were new to the ontology.
    pub added: usize,
}

impl TraceEntry {
    /// Union of the expansion batches, in emission order.
    pub fn axioms(&self) -> Vec<Axiom> {
        let mut out: Vec<Axiom> = Vec::new();
        for a in self.expansions.iter().flat_map(|e| &e.axioms) {
            if !out.contains(a) {
                out.push(a.clone());
            }
        }
        out
    }

    pub fn characterized(&self) -> bool {
        self.rejection.as_ref().is_none_or(|r| r.stage == Stage::Translate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub jobs: usize,
    pub pretagged: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { jobs: 1, pretagged: false }
    }
}

#[derive(Debug, Clone)]
pub struct Compiled {
    pub ontology: Ontology,
    pub trace: Vec<TraceEntry>,
}

/// Translates analyzed lines into `onto` strictly in corpus order, so
/// counters and axiom order do not depend on how analysis was scheduled.
pub fn translate_all(analyses: &[Analysis], lex: &Lexicon, onto: &mut Ontology) -> Vec<TraceEntry> {
    analyses.iter().map(|a| translate_one(a, lex, onto)).collect()
}

fn translate_one(a: &Analysis, lex: &Lexicon, onto: &mut Ontology) -> TraceEntry {
    let mut entry = TraceEntry {
        source_index: a.line.source_index,
        line: a.line.line,
        text: a.line.text.clone(),
        partial: a.line.partial,
        tagged: (!a.tokens.is_empty()).then(|| render_pretagged(&a.tokens)),
        expansions: Vec::new(),
        outcome: Outcome::Translated,
        rejection: a.rejection.clone(),
        added: 0,
    };
    for (s, c) in a.simple.iter().zip(&a.characterized) {
        let mut ex = ExpansionTrace {
            expansion_id: s.expansion_id,
            text: s.text(),
            signature: None,
            rule_id: None,
            axioms: Vec::new(),
            error: None,
        };
        match c {
            Ok(cs) => {
                ex.signature = Some(cs.signature());
                match translate_into(cs, lex, onto) {
                    Ok((batch, added)) => {
                        ex.rule_id = Some(batch.rule_id);
                        ex.axioms = batch.axioms;
                        entry.added += added;
                    }
                    Err(e) => {
                        ex.error = Some(e.to_string());
                        if entry.rejection.is_none() {
                            entry.rejection = Some(Rejection { stage: Stage::Translate, reason: e.to_string(), not_isa: false });
                        }
                    }
                }
            }
            Err(e) => ex.error = Some(e.to_string()),
        }
        entry.expansions.push(ex);
    }
    if entry.rejection.is_some() {
        entry.outcome = Outcome::Rejected;
    }
    entry
}

pub fn compile(lines: &[CorpusLine], lex: &Lexicon, opts: Options) -> Compiled {
    let analyses = analyze_all(lines, lex, opts.pretagged, opts.jobs);
    let mut ontology = Ontology::new();
    let trace = translate_all(&analyses, lex, &mut ontology);
    Compiled { ontology, trace }
}

pub fn trace_json(trace: &[TraceEntry]) -> String {
    let mut s = serde_json::to_string_pretty(trace).unwrap_or_else(|_| "[]".into());
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_comments_and_partial_marks() {
        let c = parse_corpus("# header\n\nCat is an animal\nMammoths were huge  # partial\nDog is a pet # note\n");
        assert_eq!(c.len(), 3);
        assert_eq!((c[0].source_index, c[0].line, c[0].partial), (1, 3, false));
        assert_eq!((c[1].text.as_str(), c[1].partial), ("Mammoths were huge", true));
        assert_eq!((c[2].text.as_str(), c[2].partial), ("Dog is a pet", false));
    }

    #[test]
    fn rejected_lines_stay_in_the_trace() {
        let lex = Lexicon::bundled();
        let lines = parse_corpus("Cat is an animal\nJohn runs fast\n");
        let out = compile(&lines, &lex, Options::default());
        assert_eq!(out.trace.len(), 2);
        assert_eq!(out.trace[0].outcome, Outcome::Translated);
        assert_eq!(out.trace[1].outcome, Outcome::Rejected);
        let r = out.trace[1].rejection.as_ref().unwrap();
        assert_eq!(r.stage, Stage::Simplify);
        assert!(r.not_isa);
    }

    #[test]
    fn parallel_analysis_matches_sequential() {
        let lex = Lexicon::bundled();
        let lines = parse_corpus(include_str!("../resources/corpus/nontrivial.txt"));
        let a = compile(&lines, &lex, Options { jobs: 1, pretagged: false });
        let b = compile(&lines, &lex, Options { jobs: 4, pretagged: false });
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.ontology, b.ontology);
    }

    #[test]
    fn pretagged_input() {
        let lex = Lexicon::bundled();
        let lines = parse_corpus("Cat_NN is_VBZ an_DT animal_NN\n");
        let out = compile(&lines, &lex, Options { jobs: 1, pretagged: true });
        assert_eq!(out.trace[0].outcome, Outcome::Translated);
        assert_eq!(out.trace[0].axioms().len(), 1);
    }

    #[test]
    fn trace_json_round_trips() {
        let lex = Lexicon::bundled();
        let lines = parse_corpus(include_str!("../resources/corpus/nontrivial.txt"));
        let out = compile(&lines, &lex, Options::default());
        assert_eq!(parse_trace(&trace_json(&out.trace)).unwrap(), out.trace);
    }
}
