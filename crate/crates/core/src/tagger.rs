//! Deterministic part-of-speech tagger over Penn tags, with `VBX` for the
//! copula, plus a reader for pre-tagged `lexeme_TAG` input.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::inflect;
use crate::lexicon::Lexicon;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    pub lexeme: String,
    pub tag: String,
    pub index: usize,
}

impl Token {
    pub fn new(lexeme: impl Into<String>, tag: impl Into<String>, index: usize) -> Self {
        Token { lexeme: lexeme.into(), tag: tag.into(), index }
    }

    pub fn is(&self, tag: &str) -> bool {
        self.tag == tag
    }

    pub fn lower(&self) -> String {
        self.lexeme.to_lowercase()
    }

    pub fn is_noun(&self) -> bool {
        matches!(self.tag.as_str(), "NN" | "NNS" | "NNP" | "NNPS")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TagError {
    #[error("empty sentence")]
    Empty,
    #[error("pre-tagged token `{0}` lacks a `_TAG` suffix")]
    MissingTag(String),
}

const DETERMINERS: &[&str] = &[
    "a", "an", "the", "some", "all", "no", "every", "each", "any", "many", "few", "several", "this", "these", "those",
    "both", "such", "another", "most",
];
const COPULAS: &[&str] = &["is", "are", "was", "were", "am"];
const BE_FORMS: &[&str] = &["be", "been"];
const MODALS: &[&str] = &["may", "might", "can", "could", "will", "shall", "would", "should", "must"];
const PREPOSITIONS: &[&str] = &[
    "of", "in", "on", "at", "by", "for", "with", "from", "to", "than", "as", "like", "into", "about", "under", "over",
    "among", "between", "within", "without", "upon", "via",
];
const CONJUNCTIONS: &[&str] = &["and", "or", "nor", "but", "whereas", "yet", "either", "neither"];
const WH_WORDS: &[&str] = &["that", "which", "who", "whom", "whose", "when", "where", "while", "whenever", "wherever"];
const PRONOUNS: &[&str] = &["he", "she", "it", "they", "we", "i", "you", "him", "her", "them", "us", "me"];
const ADVERBS: &[&str] = &[
    "not", "very", "now", "still", "sometimes", "eventually", "only", "especially", "nearly", "almost", "also",
    "always", "often", "never", "ultimately", "someday", "soon", "later", "finally", "once", "just", "quite",
    "rather", "too", "mostly", "generally", "usually", "typically", "really", "extremely", "particularly",
    "namely", "then", "ever", "already",
];
pub const NUMBER_WORDS: &[&str] = &[
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven", "twelve",
    "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty",
];
pub const ORDINALS: &[&str] = &[
    "first", "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth", "ninth", "tenth", "eleventh",
    "twelfth",
];

/// Splits on whitespace, detaches commas and possessive `'s`, drops the
/// sentence-final period, question or exclamation mark.
pub fn tokenize(sentence: &str) -> Vec<String> {
    let mut out = Vec::new();
    let words: Vec<&str> = sentence.split_whitespace().collect();
    for (i, raw) in words.iter().enumerate() {
        let mut w = *raw;
        if i + 1 == words.len() {
            w = w.trim_end_matches(['.', '?', '!']);
        }
        let mut trailing_comma = false;
        while let Some(stripped) = w.strip_suffix([',', ';']) {
            w = stripped;
            trailing_comma = true;
        }
        if let Some(stem) = w.strip_suffix("'s").or_else(|| w.strip_suffix("’s")) {
            if !stem.is_empty() {
                out.push(stem.to_string());
                out.push("'s".to_string());
            }
        } else if !w.is_empty() {
            out.push(w.to_string());
        }
        if trailing_comma {
            out.push(",".to_string());
        }
    }
    out
}

/// Inverse of [`tokenize`] up to whitespace.
pub fn detokenize(tokens: &[Token]) -> String {
    let mut s = String::new();
    for t in tokens {
        if !s.is_empty() && t.lexeme != "," && t.lexeme != "'s" {
            s.push(' ');
        }
        s.push_str(&t.lexeme);
    }
    s
}

pub fn tag(sentence: &str, lexicon: &Lexicon) -> Result<Vec<Token>, TagError> {
    let words = tokenize(sentence.trim());
    if words.is_empty() {
        return Err(TagError::Empty);
    }
    let tags: Vec<String> = (0..words.len()).map(|i| tag_word(&words, i, lexicon)).collect();
    Ok(words.into_iter().zip(tags).enumerate().map(|(i, (w, t))| Token::new(w, t, i)).collect())
}

fn tag_word(words: &[String], i: usize, lex: &Lexicon) -> String {
    let w = words[i].as_str();
    let lower = w.to_lowercase();
    let l = lower.as_str();
    let capitalized = w.chars().next().is_some_and(char::is_uppercase);
    let closed = match l {
        "," => Some(","),
        "'s" => Some("POS"),
        _ if DETERMINERS.contains(&l) => Some("DT"),
        _ if COPULAS.contains(&l) => Some("VBX"),
        _ if BE_FORMS.contains(&l) => Some("VB"),
        _ if MODALS.contains(&l) => Some("MD"),
        _ if PREPOSITIONS.contains(&l) => Some("IN"),
        _ if CONJUNCTIONS.contains(&l) => Some("CC"),
        _ if WH_WORDS.contains(&l) => Some("WDT"),
        _ if PRONOUNS.contains(&l) => Some("PRP"),
        _ if ADVERBS.contains(&l) => Some("RB"),
        "more" | "less" => Some("RBR"),
        "least" => Some("RBS"),
        _ if NUMBER_WORDS.contains(&l) || l.chars().all(|c| c.is_ascii_digit() || c == '.') && l.chars().any(|c| c.is_ascii_digit()) => Some("CD"),
        _ if ORDINALS.contains(&l) => Some("JJ"),
        _ => None,
    };
    // "most" is a determiner before a noun and a superlative marker before an adjective.
    if l == "most" {
        let next_adj = words.get(i + 1).is_some_and(|n| lex.is_adjective(n));
        return if next_adj { "RBS" } else { "DT" }.into();
    }
    if let Some(t) = closed {
        return t.into();
    }
    if capitalized && is_named_entity_word(w, lex) {
        return "NNP".into();
    }
    if let Some(e) = lex.pos_entry(l) {
        return e.tag.clone();
    }
    if lex.dimensions_of(l).is_some() {
        return "JJ".into();
    }
    if inflect::is_irregular_plural(l) {
        return "NNS".into();
    }
    if inflect::singular_candidates(l).iter().any(|s| lex.pos_entry(s).is_some_and(|e| e.tag == "NN")) {
        return "NNS".into();
    }
    let followed_by_than = words.get(i + 1).is_some_and(|n| n.eq_ignore_ascii_case("than"));
    if l.len() > 4 && l.ends_with("ing") {
        return "VBG".into();
    }
    if l.len() > 3 && l.ends_with("ly") {
        return "RB".into();
    }
    if l.len() > 4 && l.ends_with("est") && degree_stem(l, "est").iter().any(|s| lex.is_adjective(s)) {
        return "JJS".into();
    }
    if l.len() > 3 && l.ends_with("er") && (followed_by_than || degree_stem(l, "er").iter().any(|s| lex.is_adjective(s))) {
        return "JJR".into();
    }
    if l.len() > 3 && l.ends_with("ed") {
        return "VBN".into();
    }
    if capitalized {
        let initial = i == 0;
        let next_cap = words
            .get(i + 1)
            .is_some_and(|n| n.chars().next().is_some_and(char::is_uppercase) || n.chars().all(|c| c.is_ascii_digit()));
        if !initial || next_cap {
            return "NNP".into();
        }
        return "NN".into();
    }
    let pluralish = l.len() > 3 && l.ends_with('s') && !l.ends_with("ss") && !l.ends_with("us") && !l.ends_with("is");
    if pluralish {
        return "NNS".into();
    }
    "NN".into()
}

fn is_named_entity_word(w: &str, lex: &Lexicon) -> bool {
    lex.named_entities().keys().any(|k| k.split(' ').any(|p| p == w))
}

/// Base forms of a comparative or superlative: `taller` -> `tall`,
/// `bigger` -> `big`, `happier` -> `happy`, `nicer` -> `nice`.
pub fn degree_stem(word: &str, suffix: &str) -> Vec<String> {
    let Some(stem) = word.strip_suffix(suffix) else { return Vec::new() };
    let mut out = vec![stem.to_string(), format!("{stem}e")];
    if let Some(s) = stem.strip_suffix('i') {
        out.push(format!("{s}y"));
    }
    let b = stem.as_bytes();
    if b.len() >= 2 && b[b.len() - 1] == b[b.len() - 2] {
        out.push(stem[..stem.len() - 1].to_string());
    }
    out
}

/// Reads `lexeme_TAG` tokens. Copular VBZ/VBD/VBP become VBX; FW becomes NN.
pub fn parse_pretagged(line: &str) -> Result<Vec<Token>, TagError> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.is_empty() {
        return Err(TagError::Empty);
    }
    parts
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let (lex, tag) = p.rsplit_once('_').filter(|(l, t)| !l.is_empty() && !t.is_empty()).ok_or_else(|| TagError::MissingTag(p.to_string()))?;
            let copula = COPULAS.contains(&lex.to_lowercase().as_str());
            let tag = match tag {
                "FW" => "NN",
                "VBZ" | "VBD" | "VBP" if copula => "VBX",
                t => t,
            };
            Ok(Token::new(lex, tag, i))
        })
        .collect()
}

/// Renders tokens as `lexeme_TAG` text.
pub fn render_pretagged(tokens: &[Token]) -> String {
    tokens.iter().map(|t| format!("{}_{}", t.lexeme, t.tag)).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tags(s: &str) -> Vec<String> {
        tag(s, &Lexicon::bundled()).unwrap().into_iter().map(|t| format!("{}/{}", t.lexeme, t.tag)).collect()
    }

    #[test]
    fn basic_sentences() {
        assert_eq!(tags("John is a student"), ["John/NNP", "is/VBX", "a/DT", "student/NN"]);
        assert_eq!(tags("Some women are smokers"), ["Some/DT", "women/NNS", "are/VBX", "smokers/NNS"]);
        assert_eq!(tags("Glorblat is a vehicle"), ["Glorblat/NN", "is/VBX", "a/DT", "vehicle/NN"]);
    }

    #[test]
    fn possessive_comma_and_final_period() {
        assert_eq!(tags("John is Mary's brother."), ["John/NNP", "is/VBX", "Mary/NNP", "'s/POS", "brother/NN"]);
        let t = tags("Boys, such as John and Joe, are students");
        assert_eq!(t[1], ",/,");
        assert_eq!(t[7], ",/,");
    }

    #[test]
    fn degree_and_proper_nouns() {
        assert_eq!(tags("John is the tallest student")[3], "tallest/JJS");
        assert_eq!(tags("John is one of the taller students")[5], "taller/JJR");
        assert_eq!(tags("Intel Pentium 4 is a microprocessor")[..3], ["Intel/NNP", "Pentium/NNP", "4/CD"]);
        assert_eq!(tags("Cat is a member of the family Felidae")[7], "Felidae/NNP");
        assert_eq!(tags("Felidae is a family of cats")[0], "Felidae/NN");
        assert_eq!(tags("John is the third most popular student")[4], "most/RBS");
    }

    #[test]
    fn pretagged_rewrites() {
        let t = parse_pretagged("Glorblat_FW is_VBZ a_DT vehicle_NN").unwrap();
        assert_eq!(t[0].tag, "NN");
        assert_eq!(t[1].tag, "VBX");
        assert!(parse_pretagged("John is_VBZ").is_err());
        assert_eq!(render_pretagged(&t), "Glorblat_NN is_VBX a_DT vehicle_NN");
    }

    #[test]
    fn empty_is_rejected() {
        assert_eq!(tag("   ", &Lexicon::bundled()), Err(TagError::Empty));
    }

    #[test]
    fn corpus_retagging_is_stable() {
        let lex = Lexicon::bundled();
        let corpus = concat!(include_str!("../resources/corpus/trivial.txt"), include_str!("../resources/corpus/nontrivial.txt"));
        for line in corpus.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
            let line = line.split("  #").next().unwrap();
            let first = tag(line, &lex).unwrap();
            assert!(first.iter().all(|t| t.tag != "FW"));
            let second = tag(&detokenize(&first), &lex).unwrap();
            assert_eq!(first, second, "{line}");
        }
    }
}
