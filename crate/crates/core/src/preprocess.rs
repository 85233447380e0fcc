//! Sentence simplification ahead of characterization: triple extraction,
//! singularization and normalization.
//!
//! Normalized sentences keep a token stream in which every IS-A span is a
//! single `VBX` token holding its normal form, every quantifier span is a
//! single `DT` token (`a`, `the`, `some`, `all`, `no`, `only`, `the only`,
//! or the rank marker `one of`), and every clause marker is a `WDT` token
//! (`that` followed by a `VBX` `is`, `when`, or `such as`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::inflect;
use crate::lexicon::{ClauseKind, IsaKind, Lexicon, QuantifierKind};
use crate::tagger::{Token, NUMBER_WORDS};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Plurality {
    pub subject: bool,
    pub object: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleSentence {
    pub tokens: Vec<Token>,
    /// `None` until [`singularize`] has run.
    pub plurality: Option<Plurality>,
    pub source_index: usize,
    pub expansion_id: usize,
}

impl SimpleSentence {
    pub fn new(tokens: Vec<Token>, source_index: usize, expansion_id: usize) -> Self {
        SimpleSentence { tokens: reindex(tokens), plurality: None, source_index, expansion_id }
    }

    pub fn text(&self) -> String {
        crate::tagger::detokenize(&self.tokens)
    }

    pub fn main_isa(&self) -> Option<usize> {
        main_isa_index(&self.tokens)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreprocessError {
    #[error("sentence {source_index}: no IS-A predicate found")]
    NotIsaSentence { source_index: usize },
    #[error("sentence {source_index}: not a pure IS-A sentence ({reason})")]
    NotPureIsa { source_index: usize, reason: String },
}

enum Reject {
    NoIsa,
    Impure(&'static str),
}

impl Reject {
    fn at(self, source_index: usize) -> PreprocessError {
        match self {
            Reject::NoIsa => PreprocessError::NotIsaSentence { source_index },
            Reject::Impure(r) => PreprocessError::NotPureIsa { source_index, reason: r.to_string() },
        }
    }
}

type Toks = Vec<Token>;

fn tok(lexeme: &str, tag: &str) -> Token {
    Token::new(lexeme, tag, 0)
}

fn reindex(mut tokens: Toks) -> Toks {
    for (i, t) in tokens.iter_mut().enumerate() {
        t.index = i;
    }
    tokens
}

fn words(tokens: &[Token]) -> Vec<String> {
    tokens.iter().map(Token::lower).collect()
}

fn merge(tokens: &[Token], tag: &str) -> Token {
    tok(&tokens.iter().map(|t| t.lexeme.as_str()).collect::<Vec<_>>().join(" "), tag)
}

/// Index of the top-level IS-A token: the first `VBX` not directly
/// introduced by a clause marker.
pub fn main_isa_index(tokens: &[Token]) -> Option<usize> {
    (0..tokens.len()).find(|&i| tokens[i].is("VBX") && (i == 0 || !tokens[i - 1].is("WDT")))
}

/// First IS-A variant at or after `from`, skipping the copula of a
/// restrictive clause.
fn find_isa(tokens: &[Token], from: usize, lex: &Lexicon) -> Option<(usize, usize)> {
    let w = words(tokens);
    let w: Vec<&str> = w.iter().map(String::as_str).collect();
    (from..tokens.len()).find_map(|i| {
        if i > 0 && tokens[i - 1].is("WDT") {
            return None;
        }
        let starts_ok = matches!(tokens[i].tag.as_str(), "VBX" | "MD" | "VB" | "VBZ" | "VBP" | "IN" | "NNS" | "NN" | "VBN" | "JJ");
        if !starts_ok && tokens[i].tag != "VBG" {
            return None;
        }
        lex.match_isa(&w, i).map(|(n, _)| (i, n))
    })
}

fn isa_at(tokens: &[Token], i: usize, lex: &Lexicon) -> Option<usize> {
    let w = words(tokens);
    let w: Vec<&str> = w.iter().map(String::as_str).collect();
    lex.match_isa(&w, i).map(|(n, _)| n)
}

fn is_such_as(t: &Token, lex: &Lexicon) -> bool {
    t.is("WDT")
        && (lex.quantifier_entry(&t.lexeme).is_some_and(|v| v.kind == QuantifierKind::SuchAs)
            || lex.clause_entry(&t.lexeme).is_some_and(|v| v.kind == ClauseKind::SuchAs))
}

fn clause_kind(t: &Token, lex: &Lexicon) -> Option<ClauseKind> {
    if !t.is("WDT") {
        return None;
    }
    if is_such_as(t, lex) {
        return Some(ClauseKind::SuchAs);
    }
    lex.clause_entry(&t.lexeme).map(|v| v.kind)
}

fn has_word(tokens: &[Token], w: &[&str]) -> bool {
    tokens.iter().any(|t| t.is("CC") && w.contains(&t.lower().as_str()))
}

// -- triple extraction -------------------------------------------------

pub fn extract_triples(tokens: &[Token], source_index: usize, lex: &Lexicon) -> Result<Vec<SimpleSentence>, PreprocessError> {
    let mut out = Vec::new();
    for part in tokens.split(|t| t.lower() == "whereas") {
        let part: Toks = part.iter().filter(|t| !(t.lexeme == "," && part.last() == Some(t))).cloned().collect();
        if part.is_empty() {
            continue;
        }
        for toks in extract_part(part, lex).map_err(|r| r.at(source_index))? {
            out.push(SimpleSentence::new(toks, source_index, out.len()));
        }
    }
    if out.is_empty() {
        return Err(PreprocessError::NotIsaSentence { source_index });
    }
    Ok(out)
}

fn extract_part(tokens: Toks, lex: &Lexicon) -> Result<Vec<Toks>, Reject> {
    let tokens = rewrite_such(tokens, lex);
    let Some(cl) = find_comma_clause(&tokens, lex)? else {
        return extract_simple(tokens, lex);
    };
    let marker = merge(&tokens[cl.marker.0..cl.marker.1], "WDT");
    match cl.kind {
        ClauseKind::SuchAs => {
            let mut t = tokens[..cl.comma].to_vec();
            t.push(tok(",", ","));
            t.push(marker);
            t.extend_from_slice(&tokens[cl.marker.1..cl.body_end]);
            t.push(tok(",", ","));
            t.extend_from_slice(&tokens[cl.main..]);
            extract_simple(t, lex)
        }
        ClauseKind::When | ClauseKind::Where | ClauseKind::Counterfactual => Err(Reject::Impure("subordinate clause")),
        ClauseKind::ThatIs => {
            let subject = &tokens[..cl.comma];
            let body = &tokens[cl.marker.1..cl.body_end];
            let (verb, predicate) = match find_isa(body, 0, lex).filter(|(i, _)| *i == 0) {
                Some((_, n)) => (merge(&body[..n], "VBX"), &body[n..]),
                None => (tok("is", "VBX"), body),
            };
            let plural_verb = matches!(verb.lower().split(' ').next(), Some("are" | "were"));
            let conj = has_word(subject, &["and"]);
            let disj = has_word(subject, &["or"]);
            let targets = if conj || (disj && plural_verb) { split_list(subject) } else { vec![subject.to_vec()] };
            let mut out = Vec::new();
            for target in targets {
                let mut t = target;
                t.push(verb.clone());
                t.extend_from_slice(predicate);
                out.extend(extract_simple(t, lex)?);
            }
            let mut main = subject.to_vec();
            main.extend_from_slice(&tokens[cl.main..]);
            out.extend(extract_simple(main, lex)?);
            Ok(out)
        }
    }
}

/// "Such X as Y IS-A Z" -> "X , such as Y , IS-A Z".
fn rewrite_such(tokens: Toks, lex: &Lexicon) -> Toks {
    if tokens.first().map(Token::lower).as_deref() != Some("such") {
        return tokens;
    }
    let Some(j) = (2..tokens.len()).find(|&j| tokens[j].lower() == "as") else { return tokens };
    let Some((p, _)) = find_isa(&tokens, j + 1, lex) else { return tokens };
    let mut t = tokens[1..j].to_vec();
    t.push(tok(",", ","));
    t.push(tok("such as", "WDT"));
    t.extend_from_slice(&tokens[j + 1..p]);
    t.push(tok(",", ","));
    t.extend_from_slice(&tokens[p..]);
    t
}

struct CommaClause {
    comma: usize,
    marker: (usize, usize),
    kind: ClauseKind,
    body_end: usize,
    main: usize,
}

fn find_comma_clause(tokens: &[Token], lex: &Lexicon) -> Result<Option<CommaClause>, Reject> {
    let w = words(tokens);
    let w: Vec<&str> = w.iter().map(String::as_str).collect();
    for i in 0..tokens.len() {
        if tokens[i].lexeme != "," {
            continue;
        }
        if find_isa(&tokens[..i], 0, lex).is_some() {
            return Ok(None);
        }
        let hit = match lex.match_quantifier(&w, i + 1) {
            Some((n, v)) if v.kind == QuantifierKind::SuchAs => Some((n, ClauseKind::SuchAs)),
            _ => lex.match_clause(&w, i + 1).map(|(n, v)| (n, v.kind)),
        };
        let Some((n, kind)) = hit else { continue };
        let m = i + 1 + n;
        let skip = match kind {
            ClauseKind::SuchAs => 0,
            _ => find_isa(tokens, m, lex).filter(|(p, _)| *p == m).map_or(0, |(_, n)| n),
        };
        let (main, _) = find_isa(tokens, m + skip, lex).ok_or(Reject::NoIsa)?;
        let body_end = if tokens[main - 1].lexeme == "," { main - 1 } else { main };
        return Ok(Some(CommaClause { comma: i, marker: (i + 1, m), kind, body_end, main }));
    }
    Ok(None)
}

fn extract_simple(tokens: Toks, lex: &Lexicon) -> Result<Vec<Toks>, Reject> {
    let (p, n) = find_isa(&tokens, 0, lex).ok_or(Reject::NoIsa)?;
    let verb = merge(&tokens[p..p + n], "VBX");
    let subject = tokens[..p].to_vec();
    let mut object: Toks = tokens[p + n..].iter().filter(|t| t.lexeme != ",").cloned().collect();

    for t in &subject {
        if matches!(clause_kind(t, lex), Some(ClauseKind::When | ClauseKind::Where | ClauseKind::Counterfactual)) {
            return Err(Reject::Impure("subordinate clause in subject"));
        }
    }

    let mut o2 = None;
    if let Some(k) = object.iter().position(|t| clause_kind(t, lex).is_some_and(|c| c != ClauseKind::SuchAs)) {
        match clause_kind(&object[k], lex).unwrap() {
            ClauseKind::When => {
                let pron = object.get(k + 1).is_some_and(|t| t.is("PRP"));
                let Some(n) = isa_at(&object, k + 2, lex).filter(|_| pron) else {
                    return Err(Reject::Impure("temporal clause with a distinct subject"));
                };
                let adj = object[k + 2 + n..].to_vec();
                object = merge_modifiers(&object[..k], &adj);
            }
            ClauseKind::ThatIs => {
                let rest_at = k + 1 + isa_at(&object, k + 1, lex).unwrap_or(0);
                o2 = Some((k, rest_at));
            }
            _ => return Err(Reject::Impure("subordinate clause in object")),
        }
    } else if let Some((j, n)) = find_isa(&object, 1, lex).filter(|(j, _)| object[*j].is("VBX")) {
        o2 = Some((j, j + n));
    }

    if let Some((k, rest_at)) = o2 {
        let o1 = object[..k].to_vec();
        let rest = object[rest_at..].to_vec();
        if is_adjectival(&rest) {
            let adj: Toks = rest.iter().filter(|t| !t.is("DT")).cloned().collect();
            let merged = merge_modifiers(&o1, &adj);
            let mut a = subject.clone();
            a.push(verb.clone());
            a.extend(merged.iter().cloned());
            let mut b: Toks = merged.into_iter().filter(|t| !t.is("DT")).collect();
            b.push(tok("is", "VBX"));
            b.extend(rest);
            let mut out = expand(subject, verb, a[p + 1..].to_vec(), lex);
            out.push(b);
            return Ok(out);
        }
        let mut t = subject;
        t.push(verb);
        t.extend(o1);
        if object[k].is("WDT") {
            t.push(object[k].clone());
            if rest_at > k + 1 {
                t.push(merge(&object[k + 1..rest_at], "VBX"));
            }
        } else {
            t.push(merge(&object[k..rest_at], "VBX"));
        }
        t.extend(rest);
        return Ok(vec![t]);
    }
    Ok(expand(subject, verb, object, lex))
}

fn is_adjectival(tokens: &[Token]) -> bool {
    let content: Vec<&Token> = tokens.iter().filter(|t| !t.is("DT")).collect();
    !content.is_empty()
        && content.iter().all(|t| matches!(t.tag.as_str(), "JJ" | "JJR" | "JJS" | "RB" | "VBN" | "CD"))
        && content.iter().any(|t| !t.is("RB"))
}

/// Inserts `adj` after the leading determiners of `phrase`.
fn merge_modifiers(phrase: &[Token], adj: &[Token]) -> Toks {
    let q = phrase.iter().take_while(|t| t.is("DT")).count();
    let mut out = phrase[..q].to_vec();
    out.extend_from_slice(adj);
    out.extend_from_slice(&phrase[q..]);
    out
}

fn split_list(tokens: &[Token]) -> Vec<Toks> {
    let body: Toks = tokens.iter().filter(|t| !(t.is("CC") && matches!(t.lower().as_str(), "either" | "neither"))).cloned().collect();
    let mut parts: Vec<Toks> = body
        .split(|t| t.lexeme == "," || (t.is("CC") && matches!(t.lower().as_str(), "and" | "or")))
        .filter(|p| !p.is_empty())
        .map(<[Token]>::to_vec)
        .collect();
    if parts.len() < 2 {
        return vec![tokens.to_vec()];
    }
    let lead: Toks = parts[0].iter().take_while(|t| t.is("DT")).cloned().collect();
    for p in parts.iter_mut().skip(1) {
        if !lead.is_empty() && !p[0].is("DT") {
            let mut q = lead.clone();
            q.append(p);
            *p = q;
        }
    }
    parts
}

fn expand(subject: Toks, verb: Token, object: Toks, lex: &Lexicon) -> Vec<Toks> {
    let kind = lex.isa_entry(&verb.lexeme).map(|v| v.kind);
    let similarity = object.len() == 1 && matches!(object[0].lower().as_str(), "same" | "similar" | "alike");
    let subjects = if similarity || subject.iter().any(|t| is_such_as(t, lex)) || has_word(&subject, &["or", "either", "neither"]) {
        vec![subject]
    } else {
        split_list(&subject)
    };
    let objects = if similarity
        || kind == Some(IsaKind::Includes)
        || has_word(&object, &["or", "either", "neither"])
        || object.iter().any(|t| t.is("WDT"))
    {
        vec![object]
    } else {
        distribute_head(split_list(&object))
    };
    let mut out = Vec::new();
    for s in &subjects {
        for o in &objects {
            let mut t = s.clone();
            t.push(verb.clone());
            t.extend(o.iter().cloned());
            out.push(t);
        }
    }
    out
}

/// "student body and greek house members": a plural head on the last
/// member is shared by earlier members lacking one.
fn distribute_head(mut parts: Vec<Toks>) -> Vec<Toks> {
    if parts.len() < 2 {
        return parts;
    }
    let head = parts.last().and_then(|p| p.last()).cloned();
    if let Some(h) = head.filter(|h| h.is("NNS")) {
        let n = parts.len() - 1;
        for p in parts.iter_mut().take(n) {
            if p.last().is_some_and(|t| !t.is("NNS") && !t.is("NNP")) {
                p.push(h.clone());
            }
        }
    }
    parts
}

// -- singularization ---------------------------------------------------

pub fn singularize(sentence: &SimpleSentence, lex: &Lexicon) -> SimpleSentence {
    let main = sentence.main_isa().unwrap_or(sentence.tokens.len());
    let mut plurality = Plurality::default();
    let mut tokens = sentence.tokens.clone();
    for (i, t) in tokens.iter_mut().enumerate() {
        match t.tag.as_str() {
            "NNS" => {
                if i < main {
                    plurality.subject = true;
                } else {
                    plurality.object = true;
                }
                t.lexeme = singular_noun(&t.lexeme, lex);
                t.tag = "NN".into();
            }
            "VBX" => t.lexeme = singular_copula(&t.lexeme, lex),
            _ => {}
        }
    }
    SimpleSentence { tokens, plurality: Some(sentence.plurality.unwrap_or(plurality)), ..sentence.clone() }
}

fn singular_noun(word: &str, lex: &Lexicon) -> String {
    let cands = inflect::singular_candidates(word);
    let known = |c: &String| {
        let l = c.to_lowercase();
        lex.pos_entry(&l).is_some() || lex.hypernym_graph().contains_key(&l) || lex.synonyms_of(&l).is_some()
    };
    cands.iter().find(|c| known(c)).or(cands.first()).cloned().unwrap_or_else(|| word.to_string())
}

fn singular_copula(surface: &str, lex: &Lexicon) -> String {
    let mut parts: Vec<&str> = surface.split(' ').collect();
    let first = parts[0].to_lowercase();
    let repl = match first.as_str() {
        "are" | "am" => "is",
        "were" => "was",
        _ => return surface.to_string(),
    };
    parts[0] = repl;
    let candidate = parts.join(" ");
    if parts.len() == 1 || lex.isa_entry(&candidate).is_some() {
        candidate
    } else {
        surface.to_string()
    }
}

// -- normalization -----------------------------------------------------

pub fn normalize(sentence: &SimpleSentence, lex: &Lexicon) -> SimpleSentence {
    let mut t = sentence.tokens.clone();
    t = spell_numbers(t, lex);
    t = join_numeric_adjectives(t);
    t = rewrite_similarity(t);
    t = lift_negation(t);
    t = normal_isa(t, lex);
    t = normal_clauses(t, lex);
    t = normal_quantifiers(t, lex);
    SimpleSentence { tokens: reindex(t), ..sentence.clone() }
}

fn number_word(n: u64) -> Option<&'static str> {
    NUMBER_WORDS.get(n as usize).copied()
}

fn spell_numbers(mut t: Toks, lex: &Lexicon) -> Toks {
    for i in 0..t.len() {
        if !t[i].is("CD") {
            continue;
        }
        let after_proper = i > 0 && t[i - 1].is("NNP");
        if !after_proper {
            if let Some(w) = t[i].lexeme.parse::<u64>().ok().and_then(number_word) {
                t[i].lexeme = w.to_string();
            }
        }
        if let Some(next) = t.get_mut(i + 1) {
            if let Some(u) = lex.unit_for_surface(&next.lexeme) {
                next.lexeme = u.spoken.clone();
                next.tag = "NN".into();
            }
        }
    }
    t
}

fn join_numeric_adjectives(t: Toks) -> Toks {
    let mut out: Toks = Vec::with_capacity(t.len());
    for tk in t {
        let joinable = tk.lower().ends_with("ed") && matches!(tk.tag.as_str(), "VBN" | "JJ" | "VBD");
        match out.last_mut() {
            Some(prev) if joinable && prev.is("CD") && NUMBER_WORDS.contains(&prev.lower().as_str()) => {
                prev.lexeme = format!("{}-{}", prev.lexeme, tk.lexeme);
                prev.tag = "JJ".into();
            }
            _ => out.push(tk),
        }
    }
    out
}

fn rewrite_similarity(t: Toks) -> Toks {
    let Some(v) = main_isa_index(&t) else { return t };
    let obj = &t[v + 1..];
    if obj.len() != 1 || !matches!(t[v].lower().as_str(), "is" | "are") {
        return t;
    }
    let rel = match obj[0].lower().as_str() {
        "same" => "same as",
        "similar" | "alike" => "like",
        _ => return t,
    };
    let subj = &t[..v];
    let Some(c) = subj.iter().position(|x| x.is("CC") && x.lower() == "and") else { return t };
    if c == 0 || c + 1 >= subj.len() {
        return t;
    }
    let mut out = subj[..c].to_vec();
    out.push(tok(rel, "VBX"));
    out.extend_from_slice(&subj[c + 1..]);
    out
}

fn lift_negation(mut t: Toks) -> Toks {
    let Some(v) = main_isa_index(&t) else { return t };
    if t.get(v + 1).map(Token::lower).as_deref() != Some("not") {
        return t;
    }
    t.remove(v + 1);
    if t[0].is("DT") {
        t[0] = tok("no", "DT");
    } else {
        t.insert(0, tok("no", "DT"));
    }
    t
}

fn normal_isa(mut t: Toks, lex: &Lexicon) -> Toks {
    for x in t.iter_mut().filter(|x| x.is("VBX")) {
        if let Some(v) = lex.isa_entry(&x.lexeme) {
            x.lexeme = v.normal.clone();
        }
    }
    t
}

fn normal_clauses(t: Toks, lex: &Lexicon) -> Toks {
    let w = words(&t);
    let w: Vec<&str> = w.iter().map(String::as_str).collect();
    let mut out: Toks = Vec::with_capacity(t.len());
    let mut i = 0;
    while i < t.len() {
        let after_comma = i > 0 && t[i - 1].lexeme == ",";
        let marker = if t[i].is("WDT") || after_comma {
            lex.match_clause(&w, i).filter(|(n, _)| t[i].is("WDT") || *n >= 1)
        } else {
            None
        };
        let quant_such = t[i].is("WDT") && is_such_as(&t[i], lex);
        match marker {
            _ if quant_such => {
                out.push(tok("such as", "WDT"));
                i += 1;
            }
            Some((n, v)) => {
                let word = v.kind.word();
                out.push(tok(word, "WDT"));
                i += n;
                if v.kind == ClauseKind::ThatIs && !t.get(i).is_some_and(|x| x.is("VBX")) {
                    out.push(tok("is", "VBX"));
                }
            }
            None => {
                out.push(t[i].clone());
                i += 1;
            }
        }
    }
    out
}

fn normal_quantifiers(t: Toks, lex: &Lexicon) -> Toks {
    let main = main_isa_index(&t).unwrap_or(t.len());
    let w = words(&t);
    let w: Vec<&str> = w.iter().map(String::as_str).collect();
    let mut out: Toks = Vec::with_capacity(t.len());
    let mut i = 0;
    while i < t.len() {
        let start = i == 0
            || matches!(t[i - 1].tag.as_str(), "VBX" | "CC" | ",")
            || (t[i - 1].is("DT") && matches!(t[i - 1].lower().as_str(), "only"));
        let hit = if start && !t[i].is("NNP") { lex.match_quantifier(&w, i) } else { None };
        let Some((n, v)) = hit.filter(|(_, v)| v.kind != QuantifierKind::SuchAs) else {
            out.push(t[i].clone());
            i += 1;
            continue;
        };
        let surface = w[i..i + n].join(" ");
        let numeric = n == 1 && (NUMBER_WORDS.contains(&surface.as_str()) || surface.chars().all(|c| c.is_ascii_digit()));
        if numeric && (i >= main || surface == "one") {
            out.push(t[i].clone());
            i += 1;
            continue;
        }
        let rank_marker = surface.starts_with("one of") && t.get(i + n).is_some_and(|x| x.is("JJS") || x.is("RBS"));
        let normal = if rank_marker {
            "one of".to_string()
        } else if surface == "one of" && t.get(i + n).is_some_and(|x| x.is("JJS") || x.is("RBS")) {
            surface.clone()
        } else {
            v.normal.clone()
        };
        out.push(tok(&normal, "DT"));
        i += n;
    }
    out
}

/// Rewrites each object head to the first-seen member of its synonym set,
/// walking sentences in corpus order.
pub fn canonicalize_objects(sentences: &mut [SimpleSentence], lex: &Lexicon) {
    let mut canon: BTreeMap<String, String> = BTreeMap::new();
    for s in sentences.iter_mut() {
        let Some(v) = s.main_isa() else { continue };
        let Some(h) = object_head(&s.tokens[v + 1..]).map(|h| h + v + 1) else { continue };
        let head = s.tokens[h].lower();
        let Some(set) = lex.synonyms_of(&head) else { continue };
        let key = set.iter().next().cloned().unwrap_or_default();
        match canon.get(&key) {
            Some(c) if *c != head => s.tokens[h].lexeme = c.clone(),
            Some(_) => {}
            None => {
                canon.insert(key, head);
            }
        }
    }
}

fn object_head(object: &[Token]) -> Option<usize> {
    let end = object.iter().position(|t| t.is("WDT") || t.is("IN")).unwrap_or(object.len());
    (0..end).rev().find(|&i| matches!(object[i].tag.as_str(), "NN" | "JJ" | "VBG"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tagger::tag;

    fn run(s: &str) -> Vec<String> {
        let lex = Lexicon::bundled();
        let t = tag(s, &lex).unwrap();
        extract_triples(&t, 0, &lex)
            .unwrap()
            .iter()
            .map(|x| normalize(&singularize(x, &lex), &lex).text())
            .collect()
    }

    fn extracted(s: &str) -> Vec<String> {
        let lex = Lexicon::bundled();
        let t = tag(s, &lex).unwrap();
        extract_triples(&t, 0, &lex).unwrap().iter().map(SimpleSentence::text).collect()
    }

    #[test]
    fn six_way_expansion() {
        let out = extracted("John and Joe, who are intelligent students, are student body and greek house members");
        assert_eq!(
            out,
            [
                "John are intelligent students",
                "Joe are intelligent students",
                "John are student body members",
                "John are greek house members",
                "Joe are student body members",
                "Joe are greek house members",
            ]
        );
    }

    #[test]
    fn disjunctive_subject_with_plural_clause() {
        let out = run("Either John or Joe, who are good students, is student body member");
        assert_eq!(out, ["John is good student", "Joe is good student", "Either John or Joe is student body member"]);
    }

    #[test]
    fn adjectival_object_clause() {
        let out = run("John is a student who is hard-working");
        assert_eq!(out, ["John is a hard-working student", "hard-working student is hard-working"]);
    }

    #[test]
    fn whereas_split() {
        let out = run("Apple is a fruit whereas cauliflower is a vegetable");
        assert_eq!(out, ["Apple is a fruit", "cauliflower is a vegetable"]);
    }

    #[test]
    fn singularize_examples() {
        let lex = Lexicon::bundled();
        let s = SimpleSentence::new(tag("Some men are hard working", &lex).unwrap(), 0, 0);
        let out = singularize(&s, &lex);
        assert_eq!(out.text(), "Some man is hard working");
        assert_eq!(out.plurality, Some(Plurality { subject: true, object: false }));
        let s = SimpleSentence::new(tag("Mammoths were huge", &lex).unwrap(), 0, 0);
        let out = singularize(&s, &lex);
        assert_eq!(out.text(), "Mammoth was huge");
        assert!(out.plurality.unwrap().subject);
        let s = SimpleSentence::new(tag("John is a student", &lex).unwrap(), 0, 0);
        assert_eq!(singularize(&s, &lex).plurality, Some(Plurality::default()));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(run("John happens to be a good student"), ["John is a good student"]);
        assert_eq!(run("Nearly all men are student"), ["some man is student"]);
        assert_eq!(run("Tangerine and orange are similar"), ["Tangerine like orange"]);
        assert_eq!(run("John is 5 ft. tall"), ["John is five foot tall"]);
        assert_eq!(run("Four wheeled vehicle includes sedan"), ["Four-wheeled vehicle includes sedan"]);
        assert_eq!(run("Men are not women"), ["no Man is woman"]);
        assert_eq!(run("John is one of the tallest students"), ["John is one of tallest student"]);
        assert_eq!(run("John is one of the students"), ["John is a student"]);
        let lex = Lexicon::bundled();
        let s = SimpleSentence::new(tag("Mary, as a student, is good", &lex).unwrap(), 0, 0);
        assert_eq!(normalize(&singularize(&s, &lex), &lex).text(), "Mary, that is a student, is good");
    }

    #[test]
    fn rejections() {
        let lex = Lexicon::bundled();
        let t = tag("John was a student when Elizabeth was queen", &lex).unwrap();
        assert!(matches!(extract_triples(&t, 3, &lex), Err(PreprocessError::NotPureIsa { source_index: 3, .. })));
        let t = tag("John runs fast", &lex).unwrap();
        assert_eq!(extract_triples(&t, 7, &lex), Err(PreprocessError::NotIsaSentence { source_index: 7 }));
    }

    #[test]
    fn temporal_modifier_merge() {
        assert_eq!(run("John was a student when he was young"), ["John was a young student"]);
    }

    #[test]
    fn object_synonyms_first_seen_wins() {
        let lex = Lexicon::bundled();
        let mut v: Vec<SimpleSentence> = ["John is hard-working", "Mary is diligent"]
            .iter()
            .enumerate()
            .map(|(i, s)| normalize(&singularize(&SimpleSentence::new(tag(s, &lex).unwrap(), i, 0), &lex), &lex))
            .collect();
        canonicalize_objects(&mut v, &lex);
        assert_eq!(v[1].text(), "Mary is hard-working");
    }
}
