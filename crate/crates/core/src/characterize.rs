//! Fits normalized sentences into the IS-A characterization templates.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use crate::lexicon::{ClauseKind, IsaKind, QuantifierKind, Tense};
use crate::lexicon::Lexicon;
use crate::preprocess::{main_isa_index, Plurality, SimpleSentence};
use crate::tagger::Token;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    pub lexeme: String,
    pub tag: String,
}

impl Word {
    pub fn new(lexeme: impl Into<String>, tag: impl Into<String>) -> Self {
        Word { lexeme: lexeme.into(), tag: tag.into() }
    }

    fn sig(&self) -> String {
        format!("{}/{}", self.lexeme, self.tag)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Connective {
    And,
    Or,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    pub mods: Vec<Word>,
    pub head: Word,
}

impl Term {
    fn sig(&self) -> String {
        self.mods.iter().chain([&self.head]).map(Word::sig).collect::<Vec<_>>().join("+")
    }

    fn text(&self) -> String {
        self.mods.iter().chain([&self.head]).map(|w| w.lexeme.as_str()).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermList {
    pub connective: Connective,
    pub members: Vec<Term>,
}

impl TermList {
    fn sig(&self) -> String {
        let c = match self.connective {
            Connective::And => "and",
            Connective::Or => "or",
        };
        format!("{c}({})", self.members.iter().map(Term::sig).collect::<Vec<_>>().join("|"))
    }

    fn text(&self) -> String {
        let items: Vec<String> = self.members.iter().map(Term::text).collect();
        match self.connective {
            Connective::And => items.join(" and "),
            Connective::Or => format!("either {}", items.join(" or ")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OnlyPosition {
    Subject,
    Object,
    TheOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharSentence {
    pub q1: Option<QuantifierKind>,
    pub s_mods: Vec<Word>,
    pub subject: Word,
    pub subject_list: Option<TermList>,
    pub subject_apposition: Option<Word>,
    /// Exemplification list attached to the subject by "such as".
    pub such_as: Option<TermList>,
    pub clause1: Option<ClauseKind>,
    pub isa: IsaKind,
    pub tense: Tense,
    /// Sentence adverb lifted off the subject ("eventually").
    pub adverbial: Option<String>,
    pub q2: Option<QuantifierKind>,
    pub o_mods: Vec<Word>,
    pub object1: Word,
    pub object_list: Option<TermList>,
    pub object_apposition: Option<Word>,
    pub comparative_ref: Option<Word>,
    pub clause2: Option<ClauseKind>,
    pub q3: Option<QuantifierKind>,
    pub o2_mods: Vec<Word>,
    pub object2: Option<Word>,
    pub only_position: Option<OnlyPosition>,
    pub plurality: Plurality,
    pub source_index: usize,
    pub expansion_id: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("sentence {source_index}: no template matches ({reason})")]
    NoTemplateMatch { source_index: usize, reason: String },
    #[error("sentence {source_index}: invalid subject/object pair {s_tag} -> {o_tag}")]
    InvalidPosDependency { source_index: usize, s_tag: String, o_tag: String },
}

impl CharError {
    pub fn source_index(&self) -> usize {
        match self {
            CharError::NoTemplateMatch { source_index, .. } | CharError::InvalidPosDependency { source_index, .. } => *source_index,
        }
    }
}

const FUTURE_ADVERBS: &[&str] = &["eventually", "ultimately", "someday", "soon", "later", "finally"];
const SUBJECT_TAGS: &[&str] = &["NN", "NNP", "JJ", "RB", "VBG"];
const OBJECT_TAGS: &[&str] = &["NN", "NNP", "JJ", "RB", "VBG"];
const MOD_TAGS: &[&str] = &["NN", "NNP", "JJ", "JJR", "JJS", "RB", "RBR", "RBS", "VBG", "CD", "DT"];

/// Rejects the six subject/object tag pairs that cannot stand in an IS-A
/// relation; a proper noun equated with a proper noun becomes `SameAs`.
pub fn validate_pos_dependency(s_tag: &str, o_tag: &str, isa: IsaKind) -> Result<IsaKind, (String, String)> {
    let bad = matches!(
        (s_tag, o_tag),
        ("NNP", "RB") | ("RB", "NNP") | ("NNP", "VBG") | ("VBG", "NNP") | ("JJ", "RB") | ("JJ", "VBG")
    );
    if bad {
        return Err((s_tag.to_string(), o_tag.to_string()));
    }
    if s_tag == "NNP" && o_tag == "NNP" && isa == IsaKind::Hyponymy {
        return Ok(IsaKind::SameAs);
    }
    Ok(isa)
}

#[derive(Debug, Default)]
struct Phrase {
    quantifier: Option<QuantifierKind>,
    only: Option<OnlyPosition>,
    term: Option<Term>,
    list: Option<TermList>,
    apposition: Option<Word>,
    comparative: Option<Word>,
}

struct Ctx<'a> {
    source_index: usize,
    lex: &'a Lexicon,
}

impl Ctx<'_> {
    fn reject(&self, reason: &str) -> CharError {
        CharError::NoTemplateMatch { source_index: self.source_index, reason: reason.to_string() }
    }

    fn isa_of(&self, tok: &Token) -> Result<(IsaKind, Tense), CharError> {
        let words: Vec<&str> = tok.lexeme.split(' ').collect();
        self.lex.classify_isa(&words).ok_or_else(|| self.reject("unknown IS-A form"))
    }

    fn quantifier(&self, t: &Token) -> Option<QuantifierKind> {
        match t.lower().as_str() {
            "a" => Some(QuantifierKind::A),
            "the" => Some(QuantifierKind::The),
            "some" => Some(QuantifierKind::Some),
            "all" => Some(QuantifierKind::All),
            "no" => Some(QuantifierKind::No),
            other => self.lex.quantifier_entry(other).map(|v| v.kind),
        }
    }

    fn phrase(&self, tokens: &[Token], subject_side: bool) -> Result<Phrase, CharError> {
        let mut p = Phrase::default();
        let mut toks: Vec<Token> = tokens.to_vec();
        while toks.last().is_some_and(|t| t.lexeme == ",") {
            toks.pop();
        }
        let mut disjunctive = false;
        if toks.first().is_some_and(|t| t.is("CC") && matches!(t.lower().as_str(), "either" | "neither")) {
            disjunctive = true;
            toks.remove(0);
        }
        while let Some(t) = toks.first().filter(|t| t.is("DT")) {
            match t.lower().as_str() {
                "one of" => break,
                "only" => p.only = Some(if subject_side { OnlyPosition::Subject } else { OnlyPosition::Object }),
                "the only" => p.only = Some(OnlyPosition::TheOnly),
                _ => {
                    if p.quantifier.is_none() {
                        p.quantifier = self.quantifier(t);
                    }
                }
            }
            toks.remove(0);
        }
        if toks.last().is_some_and(|t| t.is("RB") && t.lower() == "only") {
            toks.pop();
            p.only = Some(if subject_side { OnlyPosition::Subject } else { OnlyPosition::Object });
        }
        if let Some(k) = toks.iter().position(|t| t.is("IN") && t.lower() == "than") {
            let reference = self.term(&toks[k + 1..])?;
            p.comparative = Some(reference.0.head);
            toks.truncate(k);
        }
        let mut groups: Vec<Vec<Token>> = vec![Vec::new()];
        for t in toks {
            if t.lexeme == "," || (t.is("CC") && matches!(t.lower().as_str(), "and" | "or")) {
                disjunctive |= t.lower() == "or";
                groups.push(Vec::new());
            } else {
                groups.last_mut().unwrap().push(t);
            }
        }
        for g in groups.iter_mut().skip(1) {
            while g.first().is_some_and(|t| t.is("DT") && matches!(t.lower().as_str(), "a" | "an" | "the")) {
                g.remove(0);
            }
        }
        groups.retain(|g| !g.is_empty());
        if groups.is_empty() {
            return Err(self.reject("empty phrase"));
        }
        let mut terms = Vec::new();
        for g in &groups {
            let (term, app) = self.term(g)?;
            if app.is_some() {
                p.apposition = app;
                p.quantifier = None;
            }
            terms.push(term);
        }
        if terms.len() > 1 {
            // "either herbivorous or carnivorous animal": bare modifiers share the final head.
            let last_head = terms.last().map(|t| t.head.clone()).unwrap();
            let n = terms.len() - 1;
            if matches!(last_head.tag.as_str(), "NN" | "NNP") {
                for t in terms.iter_mut().take(n) {
                    if t.head.tag == "JJ" && last_head.tag == "NN" && terms_last_has_mods(&groups) {
                        let old = std::mem::replace(&mut t.head, last_head.clone());
                        t.mods.push(old);
                    }
                }
            }
            p.term = Some(terms[0].clone());
            p.list = Some(TermList { connective: if disjunctive { Connective::Or } else { Connective::And }, members: terms });
        } else {
            p.term = terms.pop();
        }
        Ok(p)
    }

    /// One list member: modifiers plus head, with proper-noun grouping,
    /// possessives and "[NN] NNP" apposition.
    fn term(&self, tokens: &[Token]) -> Result<(Term, Option<Word>), CharError> {
        let mut words: Vec<Word> = Vec::new();
        let mut i = 0;
        while i < tokens.len() {
            let t = &tokens[i];
            if t.is("NNP") {
                let mut parts = vec![t.lexeme.clone()];
                i += 1;
                while i < tokens.len() && (tokens[i].is("NNP") || (tokens[i].is("CD") && tokens[i - 1].is("NNP"))) {
                    parts.push(tokens[i].lexeme.clone());
                    i += 1;
                }
                if tokens.get(i).is_some_and(|x| x.is("POS")) {
                    words.push(Word::new(parts.join(" "), "NN"));
                    i += 1;
                } else {
                    words.push(Word::new(parts.join(" "), "NNP"));
                }
                continue;
            }
            if t.is("POS") {
                i += 1;
                continue;
            }
            let tag = match t.tag.as_str() {
                "VBN" | "VBD" => "JJ",
                "NNS" => "NN",
                other => other,
            };
            words.push(Word::new(t.lower(), tag));
            i += 1;
        }
        let Some(head) = words.pop() else { return Err(self.reject("phrase without head")) };
        if let Some(bad) = words.iter().find(|w| !MOD_TAGS.contains(&w.tag.as_str())) {
            return Err(self.reject(&format!("modifier tag {}", bad.tag)));
        }
        if head.tag == "NNP" && !words.is_empty() && words.iter().all(|w| w.tag == "NN") {
            let app = Word::new(words.iter().map(|w| w.lexeme.as_str()).collect::<Vec<_>>().join(" "), "NN");
            return Ok((Term { mods: Vec::new(), head }, Some(app)));
        }
        Ok((Term { mods: words, head }, None))
    }
}

fn terms_last_has_mods(groups: &[Vec<Token>]) -> bool {
    groups.last().is_some_and(|g| g.len() > 1)
}

pub fn characterize(sentence: &SimpleSentence, lex: &Lexicon) -> Result<CharSentence, CharError> {
    let cx = Ctx { source_index: sentence.source_index, lex };
    let tokens = &sentence.tokens;
    let v = main_isa_index(tokens).ok_or_else(|| cx.reject("no IS-A token"))?;
    let (kind, tense) = cx.isa_of(&tokens[v])?;
    let plurality = sentence.plurality.unwrap_or_default();

    let mut subj: Vec<Token> = tokens[..v].to_vec();
    let mut adverbial = None;
    if subj.first().is_some_and(|t| t.is("RB") && FUTURE_ADVERBS.contains(&t.lower().as_str())) {
        adverbial = Some(subj.remove(0).lower());
    }
    let mut object: Vec<Token> = tokens[v + 1..].to_vec();

    // Subject-side restrictive clause (complex Case 3) or exemplification list.
    let mut clause1 = None;
    let mut such_as = None;
    let mut clause_object: Option<Vec<Token>> = None;
    if let Some(w) = subj.iter().position(|t| t.is("WDT")) {
        match t_clause(&subj[w], lex) {
            Some(ClauseKind::SuchAs) => {
                let inner: Vec<Token> = subj[w + 1..].iter().filter(|t| t.lexeme != ",").cloned().collect();
                let list = cx.phrase(&inner, true)?;
                such_as = Some(list.list.unwrap_or_else(|| TermList { connective: Connective::And, members: list.term.into_iter().collect() }));
                subj.truncate(w);
            }
            Some(ClauseKind::ThatIs) => {
                if !subj.get(w + 1).is_some_and(|t| t.is("VBX")) {
                    return Err(cx.reject("clause without copula"));
                }
                clause1 = Some(ClauseKind::ThatIs);
                clause_object = Some(subj[w + 2..].to_vec());
                subj.truncate(w);
            }
            _ => return Err(cx.reject("unsupported subject clause")),
        }
    }

    // Object-side clause or second IS-A (complex Cases 1 and 2).
    let mut second: Option<Vec<Token>> = None;
    if let Some(k) = object.iter().position(|t| t.is("WDT") || t.is("VBX")) {
        let rest_at = if object[k].is("WDT") {
            if t_clause(&object[k], lex) != Some(ClauseKind::ThatIs) {
                return Err(cx.reject("unsupported object clause"));
            }
            k + 1 + usize::from(object.get(k + 1).is_some_and(|t| t.is("VBX")))
        } else {
            k + 1
        };
        second = Some(object[rest_at..].to_vec());
        object.truncate(k);
    }
    if clause1.is_some() && second.is_some() {
        return Err(cx.reject("two clauses"));
    }

    let s = cx.phrase(&subj, true)?;
    let s_term = s.term.clone().ok_or_else(|| cx.reject("missing subject"))?;

    let (o1_tokens, o2_tokens, clause2) = match (clause_object, second) {
        (Some(c), None) => (c, Some(object), None),
        (None, Some(o2)) => (object, Some(o2), Some(ClauseKind::ThatIs)),
        (None, None) => (object, None, None),
        (Some(_), Some(_)) => unreachable!(),
    };
    let o = cx.phrase(&o1_tokens, false)?;
    let o_term = o.term.clone().ok_or_else(|| cx.reject("missing object"))?;
    let o2 = o2_tokens.map(|t| cx.phrase(&t, false)).transpose()?;

    if !SUBJECT_TAGS.contains(&s_term.head.tag.as_str()) {
        return Err(cx.reject(&format!("subject tag {}", s_term.head.tag)));
    }
    if !OBJECT_TAGS.contains(&o_term.head.tag.as_str()) {
        return Err(cx.reject(&format!("object tag {}", o_term.head.tag)));
    }

    let mut isa = kind;
    if isa == IsaKind::Hyponymy && tense == Tense::Past {
        isa = IsaKind::WasPast;
    }
    let checked_object = o2.as_ref().filter(|_| clause1.is_some()).and_then(|p| p.term.as_ref()).unwrap_or(&o_term);
    isa = validate_pos_dependency(&s_term.head.tag, &checked_object.head.tag, isa).map_err(|(s_tag, o_tag)| {
        CharError::InvalidPosDependency { source_index: sentence.source_index, s_tag, o_tag }
    })?;

    let mut q1 = s.quantifier;
    if q1 == Some(QuantifierKind::The) && plurality.subject {
        q1 = Some(QuantifierKind::Some);
    }
    let only_position = s.only.or(o.only).or(o2.as_ref().and_then(|p| p.only));
    let (q3, o2_mods, object2) = match &o2 {
        Some(p) => {
            let t = p.term.clone().ok_or_else(|| cx.reject("missing second object"))?;
            (p.quantifier, t.mods, Some(t.head))
        }
        None => (None, Vec::new(), None),
    };

    Ok(CharSentence {
        q1,
        s_mods: s_term.mods,
        subject: s_term.head,
        subject_list: s.list,
        subject_apposition: s.apposition,
        such_as,
        clause1,
        isa,
        tense,
        adverbial,
        q2: o.quantifier,
        o_mods: o_term.mods,
        object1: o_term.head,
        object_list: o.list,
        object_apposition: o.apposition,
        comparative_ref: o.comparative,
        clause2,
        q3,
        o2_mods,
        object2,
        only_position,
        plurality,
        source_index: sentence.source_index,
        expansion_id: sentence.expansion_id,
    })
}

fn t_clause(t: &Token, lex: &Lexicon) -> Option<ClauseKind> {
    let l = t.lower();
    if l == "such as" {
        return Some(ClauseKind::SuchAs);
    }
    lex.clause_entry(&l).map(|v| v.kind).or_else(|| {
        lex.quantifier_entry(&l).filter(|v| v.kind == QuantifierKind::SuchAs).map(|_| ClauseKind::SuchAs)
    })
}

fn qword(q: QuantifierKind) -> &'static str {
    q.word()
}

fn only_name(o: OnlyPosition) -> &'static str {
    match o {
        OnlyPosition::Subject => "subject",
        OnlyPosition::Object => "object",
        OnlyPosition::TheOnly => "the-only",
    }
}

impl CharSentence {
    pub fn subject_term(&self) -> Term {
        Term { mods: self.s_mods.clone(), head: self.subject.clone() }
    }

    pub fn object_term(&self) -> Term {
        Term { mods: self.o_mods.clone(), head: self.object1.clone() }
    }

    pub fn object2_term(&self) -> Option<Term> {
        self.object2.clone().map(|head| Term { mods: self.o2_mods.clone(), head })
    }

    /// Compact field-by-field rendering used by golden comparisons.
    pub fn signature(&self) -> String {
        let mut f: Vec<String> = Vec::new();
        if let Some(q) = self.q1 {
            f.push(format!("q1={}", qword(q)));
        }
        f.push(format!("s={}", self.subject_list.as_ref().map_or_else(|| self.subject_term().sig(), TermList::sig)));
        if let Some(a) = &self.subject_apposition {
            f.push(format!("sapp={}", a.sig()));
        }
        if let Some(l) = &self.such_as {
            f.push(format!("ex={}", l.sig()));
        }
        if let Some(c) = self.clause1 {
            f.push(format!("cl1={c}"));
        }
        f.push(format!("isa={}", self.isa));
        if self.tense != Tense::Present {
            f.push(format!("tense={}", self.tense.name().to_lowercase()));
        }
        if let Some(a) = &self.adverbial {
            f.push(format!("adv={a}"));
        }
        if let Some(q) = self.q2 {
            f.push(format!("q2={}", qword(q)));
        }
        f.push(format!("o={}", self.object_list.as_ref().map_or_else(|| self.object_term().sig(), TermList::sig)));
        if let Some(a) = &self.object_apposition {
            f.push(format!("oapp={}", a.sig()));
        }
        if let Some(c) = &self.comparative_ref {
            f.push(format!("cmp={}", c.sig()));
        }
        if let Some(c) = self.clause2 {
            f.push(format!("cl2={c}"));
        }
        if let Some(q) = self.q3 {
            f.push(format!("q3={}", qword(q)));
        }
        if let Some(t) = self.object2_term() {
            f.push(format!("o2={}", t.sig()));
        }
        if let Some(o) = self.only_position {
            f.push(format!("only={}", only_name(o)));
        }
        f.join("; ")
    }

    /// Normal-form sentence text; characterizing it again yields the same record.
    pub fn render_text(&self, lex: &Lexicon) -> String {
        let mut s = String::new();
        let mut put = |x: &str| {
            if !x.is_empty() {
                if !s.is_empty() {
                    s.push(' ');
                }
                s.push_str(x);
            }
        };
        if let Some(a) = &self.adverbial {
            put(a);
        }
        if self.only_position == Some(OnlyPosition::Subject) {
            put("only");
        }
        if let Some(q) = self.q1 {
            put(qword(q));
        }
        if let Some(a) = &self.subject_apposition {
            put(&a.lexeme);
        }
        match &self.subject_list {
            Some(l) => put(&l.text()),
            None => put(&self.subject_term().text()),
        }
        if let Some(l) = &self.such_as {
            put(",");
            put("such as");
            put(&l.text());
            put(",");
        }
        let o1 = phrase_text(self.q2, self.object_apposition.as_ref(), &self.object_term(), self.object_list.as_ref(), self.only_position);
        let cmp = self.comparative_ref.as_ref().map(|c| format!("than {}", c.lexeme)).unwrap_or_default();
        let o2 = self.object2_term().map(|t| phrase_text(self.q3, None, &t, None, None)).unwrap_or_default();
        let isa = isa_text(self.isa, self.tense, lex);
        if self.clause1.is_some() {
            put("that is");
            put(&o1);
            put(&isa);
            put(&o2);
        } else {
            put(&isa);
            put(&o1);
            put(&cmp);
            if self.clause2.is_some() {
                put("that is");
                put(&o2);
            }
        }
        if self.only_position == Some(OnlyPosition::Object) && self.q2.is_none() {
            put("only");
        }
        s.replace(" ,", ",")
    }
}

fn phrase_text(q: Option<QuantifierKind>, app: Option<&Word>, term: &Term, list: Option<&TermList>, only: Option<OnlyPosition>) -> String {
    let mut s = String::new();
    match only {
        Some(OnlyPosition::TheOnly) => s.push_str("the only "),
        Some(OnlyPosition::Object) if q.is_some() => s.push_str("only "),
        _ => {}
    }
    if let Some(q) = q {
        let _ = write!(s, "{} ", qword(q));
    }
    if let Some(a) = app {
        let _ = write!(s, "{} ", a.lexeme);
    }
    match list {
        Some(l) => s.push_str(&l.text()),
        None => s.push_str(&term.text()),
    }
    s
}

fn isa_text(isa: IsaKind, tense: Tense, lex: &Lexicon) -> String {
    match isa {
        IsaKind::WasPast => "was".into(),
        IsaKind::Hyponymy => match tense {
            Tense::Past => "was".into(),
            _ => "is".into(),
        },
        k => lex
            .isa_variants()
            .values()
            .find(|v| v.kind == k)
            .map(|v| v.normal.clone())
            .unwrap_or_else(|| "is".into()),
    }
}
