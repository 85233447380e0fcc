//! Lexical resources: IS-A, quantifier and clausal variant tables, the
//! hypernym/synonym graph, named entities, dimensional adjectives and units.

mod wordnet;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dlmodel::{mk_label, LabelPart};

pub use wordnet::WordNet;

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("{}: {source}", file.display())]
    Io { file: PathBuf, source: io::Error },
    #[error("{file}:{line}: {message}")]
    Malformed { file: String, line: usize, message: String },
    #[error("hypernym cycle: {0}")]
    Cycle(String),
}

macro_rules! name_enum {
    ($(#[$m:meta])* $name:ident { $($var:ident),+ $(,)? }) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        pub enum $name { $($var),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$var),+];

            pub fn name(self) -> &'static str {
                match self { $($name::$var => stringify!($var)),+ }
            }
        }

        impl FromStr for $name {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $(stringify!($var) => Ok($name::$var),)+
                    other => Err(format!("unknown {} `{}`", stringify!($name), other)),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

name_enum!(IsaKind {
    Hyponymy,
    Hypernymy,
    SameAs,
    Like,
    SuchAs,
    Includes,
    MayBe,
    CanBecome,
    CanBe,
    IsNow,
    IsStill,
    IsSometimes,
    WasPast,
    WillBeFuture,
});

name_enum!(QuantifierKind { A, The, Some, All, No, Only, SuchAs });

name_enum!(ClauseKind { ThatIs, When, Where, Counterfactual, SuchAs });

name_enum!(Tense { Past, Present, Future });

impl IsaKind {
    pub fn is_modal(self) -> bool {
        matches!(
            self,
            IsaKind::MayBe
                | IsaKind::CanBecome
                | IsaKind::CanBe
                | IsaKind::IsNow
                | IsaKind::IsStill
                | IsaKind::IsSometimes
                | IsaKind::WasPast
                | IsaKind::WillBeFuture
        )
    }
}

impl QuantifierKind {
    /// The normal-form word used in normalized text.
    pub fn word(self) -> &'static str {
        match self {
            QuantifierKind::A => "a",
            QuantifierKind::The => "the",
            QuantifierKind::Some => "some",
            QuantifierKind::All => "all",
            QuantifierKind::No => "no",
            QuantifierKind::Only => "only",
            QuantifierKind::SuchAs => "such as",
        }
    }
}

impl ClauseKind {
    pub fn word(self) -> &'static str {
        match self {
            ClauseKind::ThatIs => "that",
            ClauseKind::When => "when",
            ClauseKind::Where => "where",
            ClauseKind::Counterfactual => "although",
            ClauseKind::SuchAs => "such as",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Polarity {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variant<K> {
    pub normal: String,
    pub kind: K,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unit {
    pub name: String,
    /// First surface listed for the unit, used for individual names (`ft_John`).
    pub abbrev: String,
    /// Spelled-out surface used by normalization (`ft` -> `foot`).
    pub spoken: String,
    pub dimensions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosEntry {
    pub tag: String,
    pub lemma: Option<String>,
}

/// Raw text of every resource file; absent optional files are `None`.
#[derive(Debug, Clone, Default)]
pub struct Sources {
    pub isa_variants: Option<String>,
    pub quantifiers: Option<String>,
    pub clausals: Option<String>,
    pub synonyms: Option<String>,
    pub named_entities: Option<String>,
    pub dim_adjectives: Option<String>,
    pub units: Option<String>,
    pub pos: Option<String>,
}

const BUNDLED: [(&str, &str); 8] = [
    ("isa_variants.tsv", include_str!("../../resources/lexicon/isa_variants.tsv")),
    ("quantifiers.tsv", include_str!("../../resources/lexicon/quantifiers.tsv")),
    ("clausals.tsv", include_str!("../../resources/lexicon/clausals.tsv")),
    ("synonyms.tsv", include_str!("../../resources/lexicon/synonyms.tsv")),
    ("named_entities.tsv", include_str!("../../resources/lexicon/named_entities.tsv")),
    ("dim_adjectives.tsv", include_str!("../../resources/lexicon/dim_adjectives.tsv")),
    ("units.tsv", include_str!("../../resources/lexicon/units.tsv")),
    ("pos.tsv", include_str!("../../resources/lexicon/pos.tsv")),
];

/// Immutable after construction; all lookups are pure.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Lexicon {
    isa_variants: BTreeMap<String, Variant<IsaKind>>,
    quantifier_variants: BTreeMap<String, Variant<QuantifierKind>>,
    clausal_variants: BTreeMap<String, Variant<ClauseKind>>,
    hypernym_graph: BTreeMap<String, BTreeSet<String>>,
    synonyms: BTreeMap<String, BTreeSet<String>>,
    named_entities: BTreeMap<String, String>,
    dimensional_adjectives: BTreeMap<String, BTreeSet<(String, Polarity)>>,
    units: BTreeMap<String, Unit>,
    unit_surfaces: BTreeMap<String, String>,
    default_units: BTreeMap<String, String>,
    pos: BTreeMap<String, PosEntry>,
    max_isa_len: usize,
    max_quantifier_len: usize,
    max_clause_len: usize,
}

/// Lowercases and collapses whitespace.
pub fn norm_surface(s: &str) -> String {
    s.split_whitespace().map(str::to_lowercase).collect::<Vec<_>>().join(" ")
}

/// Graph key form: lowercase, spaces to underscores.
pub fn graph_key(s: &str) -> String {
    norm_surface(s).replace(' ', "_")
}

struct Rows<'a> {
    file: &'a str,
    text: &'a str,
}

impl<'a> Rows<'a> {
    fn each(&self, min_fields: usize, mut f: impl FnMut(usize, Vec<&'a str>) -> Result<(), String>) -> Result<(), LexiconError> {
        for (i, line) in self.text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            let malformed = |message: String| LexiconError::Malformed {
                file: self.file.to_string(),
                line: i + 1,
                message,
            };
            if fields.len() < min_fields || fields[..min_fields].iter().any(|f| f.is_empty()) {
                return Err(malformed(format!("expected {min_fields} tab-separated fields")));
            }
            f(i + 1, fields).map_err(malformed)?;
        }
        Ok(())
    }
}

fn variant_table<K: FromStr<Err = String>>(
    file: &str,
    text: &str,
) -> Result<(BTreeMap<String, Variant<K>>, usize), LexiconError> {
    let mut out = BTreeMap::new();
    let mut max_len = 0;
    Rows { file, text }.each(3, |_, f| {
        let kind = f[2].parse::<K>()?;
        let surface = norm_surface(f[0]);
        max_len = max_len.max(surface.split(' ').count());
        out.insert(surface, Variant { normal: norm_surface(f[1]), kind });
        Ok(())
    })?;
    Ok((out, max_len))
}

impl Lexicon {
    /// The resource set compiled into the binary.
    pub fn bundled() -> Self {
        let mut src = Sources::default();
        for (name, text) in BUNDLED {
            *src.slot(name).unwrap() = Some(text.to_string());
        }
        Self::from_sources(&src).expect("bundled lexicon is well-formed")
    }

    /// Loads every `*.tsv` resource in `dir`, then overlays WordNet
    /// `data.noun`/`index.noun` if present.
    pub fn load(dir: &Path) -> Result<Self, LexiconError> {
        let mut src = Sources::default();
        for (name, _) in BUNDLED {
            let path = dir.join(name);
            match fs::read_to_string(&path) {
                Ok(text) => *src.slot(name).unwrap() = Some(text),
                Err(e) if e.kind() == io::ErrorKind::NotFound => {}
                Err(source) => return Err(LexiconError::Io { file: path, source }),
            }
        }
        let mut lex = Self::from_sources(&src)?;
        if let Some(wn) = WordNet::load(dir)? {
            lex.overlay_wordnet(&wn);
        }
        Ok(lex)
    }

    pub fn from_sources(src: &Sources) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::default();
        if let Some(t) = &src.isa_variants {
            (lex.isa_variants, lex.max_isa_len) = variant_table("isa_variants.tsv", t)?;
        }
        if let Some(t) = &src.quantifiers {
            (lex.quantifier_variants, lex.max_quantifier_len) = variant_table("quantifiers.tsv", t)?;
        }
        if let Some(t) = &src.clausals {
            (lex.clausal_variants, lex.max_clause_len) = variant_table("clausals.tsv", t)?;
        }
        if let Some(t) = &src.synonyms {
            lex.load_synonyms(t)?;
        }
        if let Some(t) = &src.named_entities {
            Rows { file: "named_entities.tsv", text: t }.each(2, |_, f| {
                lex.named_entities.insert(f[0].split_whitespace().collect::<Vec<_>>().join(" "), f[1].to_string());
                Ok(())
            })?;
        }
        if let Some(t) = &src.units {
            lex.load_units(t)?;
        }
        if let Some(t) = &src.dim_adjectives {
            let default_units = lex.default_units.clone();
            Rows { file: "dim_adjectives.tsv", text: t }.each(3, |_, f| {
                let polarity = match f[2] {
                    "+" => Polarity::Positive,
                    "-" | "−" => Polarity::Negative,
                    other => return Err(format!("polarity must be + or -, got `{other}`")),
                };
                if !default_units.contains_key(f[1]) {
                    return Err(format!("dimension `{}` has no unit", f[1]));
                }
                lex.dimensional_adjectives
                    .entry(norm_surface(f[0]))
                    .or_default()
                    .insert((f[1].to_string(), polarity));
                Ok(())
            })?;
        }
        if let Some(t) = &src.pos {
            Rows { file: "pos.tsv", text: t }.each(2, |_, f| {
                let lemma = f.get(2).filter(|l| !l.is_empty()).map(|l| l.to_lowercase());
                lex.pos.insert(f[0].to_lowercase(), PosEntry { tag: f[1].to_string(), lemma });
                Ok(())
            })?;
        }
        lex.check_acyclic()?;
        Ok(lex)
    }

    fn load_synonyms(&mut self, text: &str) -> Result<(), LexiconError> {
        let mut pairs = Vec::new();
        Rows { file: "synonyms.tsv", text }.each(3, |_, f| {
            let (a, b) = (graph_key(f[0]), graph_key(f[1]));
            match f[2] {
                "synonym" => pairs.push((a, b)),
                "hypernym" => {
                    self.hypernym_graph.entry(a).or_default().insert(b);
                }
                other => return Err(format!("relation must be synonym or hypernym, got `{other}`")),
            }
            Ok(())
        })?;
        for (a, b) in pairs {
            self.add_synonym_pair(&a, &b);
        }
        Ok(())
    }

    fn add_synonym_pair(&mut self, a: &str, b: &str) {
        let mut set: BTreeSet<String> = [a.to_string(), b.to_string()].into();
        for w in [a, b] {
            if let Some(existing) = self.synonyms.get(w) {
                set.extend(existing.iter().cloned());
            }
        }
        for w in &set {
            self.synonyms.insert(w.clone(), set.clone());
        }
    }

    fn load_units(&mut self, text: &str) -> Result<(), LexiconError> {
        Rows { file: "units.tsv", text }.each(3, |_, f| {
            let surface = norm_surface(f[0]);
            let dims: Vec<String> = f[2].split(',').map(|d| d.trim().to_string()).filter(|d| !d.is_empty()).collect();
            if dims.is_empty() {
                return Err("unit without dimension".into());
            }
            let unit = self.units.entry(f[1].to_string()).or_insert_with(|| Unit {
                name: f[1].to_string(),
                abbrev: surface.clone(),
                spoken: surface.clone(),
                dimensions: dims.clone(),
            });
            if unit.spoken == unit.abbrev && surface != unit.abbrev {
                unit.spoken = surface.clone();
            }
            for d in dims {
                self.default_units.entry(d).or_insert_with(|| f[1].to_string());
            }
            self.unit_surfaces.insert(surface, f[1].to_string());
            Ok(())
        })
    }

    fn overlay_wordnet(&mut self, wn: &WordNet) {
        for (word, parents) in wn.hypernyms() {
            if self.hypernym_graph.contains_key(&word) {
                continue;
            }
            for p in parents {
                if !self.reaches(&p, &word) {
                    self.hypernym_graph.entry(word.clone()).or_default().insert(p);
                }
            }
        }
        for set in wn.synonym_sets() {
            if set.iter().any(|w| self.synonyms.contains_key(w)) {
                continue;
            }
            for w in &set {
                self.synonyms.insert(w.clone(), set.clone());
            }
        }
    }

    fn check_acyclic(&self) -> Result<(), LexiconError> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Open,
            Done,
        }
        fn visit<'a>(
            g: &'a BTreeMap<String, BTreeSet<String>>,
            n: &'a str,
            marks: &mut BTreeMap<&'a str, Mark>,
            path: &mut Vec<&'a str>,
        ) -> Result<(), LexiconError> {
            match marks.get(n) {
                Some(Mark::Done) => return Ok(()),
                Some(Mark::Open) => {
                    let start = path.iter().position(|p| *p == n).unwrap_or(0);
                    let mut cycle: Vec<&str> = path[start..].to_vec();
                    cycle.push(n);
                    return Err(LexiconError::Cycle(cycle.join(" -> ")));
                }
                None => {}
            }
            marks.insert(n, Mark::Open);
            path.push(n);
            if let Some(ps) = g.get(n) {
                for p in ps {
                    visit(g, p, marks, path)?;
                }
            }
            path.pop();
            marks.insert(n, Mark::Done);
            Ok(())
        }
        let mut marks = BTreeMap::new();
        for n in self.hypernym_graph.keys() {
            visit(&self.hypernym_graph, n, &mut marks, &mut Vec::new())?;
        }
        Ok(())
    }

    fn reaches(&self, from: &str, to: &str) -> bool {
        let mut stack = vec![from.to_string()];
        let mut seen = BTreeSet::new();
        while let Some(n) = stack.pop() {
            if n == to {
                return true;
            }
            if !seen.insert(n.clone()) {
                continue;
            }
            if let Some(ps) = self.hypernym_graph.get(&n) {
                stack.extend(ps.iter().cloned());
            }
        }
        false
    }

    // -- lookups -------------------------------------------------------

    pub fn isa_variants(&self) -> &BTreeMap<String, Variant<IsaKind>> {
        &self.isa_variants
    }

    pub fn quantifier_variants(&self) -> &BTreeMap<String, Variant<QuantifierKind>> {
        &self.quantifier_variants
    }

    pub fn clausal_variants(&self) -> &BTreeMap<String, Variant<ClauseKind>> {
        &self.clausal_variants
    }

    pub fn hypernym_graph(&self) -> &BTreeMap<String, BTreeSet<String>> {
        &self.hypernym_graph
    }

    pub fn named_entities(&self) -> &BTreeMap<String, String> {
        &self.named_entities
    }

    pub fn dimensional_adjectives(&self) -> &BTreeMap<String, BTreeSet<(String, Polarity)>> {
        &self.dimensional_adjectives
    }

    pub fn units(&self) -> &BTreeMap<String, Unit> {
        &self.units
    }

    pub fn isa_entry(&self, surface: &str) -> Option<&Variant<IsaKind>> {
        self.isa_variants.get(&norm_surface(surface))
    }

    pub fn quantifier_entry(&self, surface: &str) -> Option<&Variant<QuantifierKind>> {
        self.quantifier_variants.get(&norm_surface(surface))
    }

    pub fn clause_entry(&self, surface: &str) -> Option<&Variant<ClauseKind>> {
        self.clausal_variants.get(&norm_surface(surface))
    }

    /// Longest IS-A variant starting at `words[start]`; returns its token length.
    pub fn match_isa(&self, words: &[&str], start: usize) -> Option<(usize, &Variant<IsaKind>)> {
        longest(&self.isa_variants, self.max_isa_len, words, start)
    }

    pub fn match_quantifier(&self, words: &[&str], start: usize) -> Option<(usize, &Variant<QuantifierKind>)> {
        longest(&self.quantifier_variants, self.max_quantifier_len, words, start)
    }

    pub fn match_clause(&self, words: &[&str], start: usize) -> Option<(usize, &Variant<ClauseKind>)> {
        longest(&self.clausal_variants, self.max_clause_len, words, start)
    }

    /// Longest-prefix classification of a predicate span, with tense read
    /// off the auxiliary.
    pub fn classify_isa(&self, phrase: &[&str]) -> Option<(IsaKind, Tense)> {
        let (_, v) = self.match_isa(phrase, 0).or_else(|| {
            // `was a kind of` and friends share the present-tense entry.
            let first = phrase.first()?.to_lowercase();
            if first == "was" || first == "were" {
                let mut alt: Vec<&str> = phrase.to_vec();
                alt[0] = "is";
                let (n, v) = self.match_isa(&alt, 0)?;
                (n > 1).then_some((n, v))
            } else {
                None
            }
        })?;
        let first = phrase[0].to_lowercase();
        let tense = match v.kind {
            IsaKind::WasPast => Tense::Past,
            IsaKind::WillBeFuture => Tense::Future,
            _ if first == "was" || first == "were" => Tense::Past,
            _ if first == "will" || first == "shall" => Tense::Future,
            _ => Tense::Present,
        };
        Some((v.kind, tense))
    }

    /// Most specific parent concept of a proper noun.
    pub fn get_msp(&self, proper_noun: &str) -> Option<String> {
        let key = proper_noun.split_whitespace().collect::<Vec<_>>().join(" ");
        if let Some(p) = self.named_entities.get(&key) {
            return Some(p.clone());
        }
        if let Some((_, p)) = self.named_entities.iter().find(|(k, _)| k.eq_ignore_ascii_case(&key)) {
            return Some(p.clone());
        }
        let parent = self.hypernym_graph.get(&graph_key(&key))?.iter().next()?;
        Some(mk_label(&[LabelPart::word(parent.clone())]))
    }

    /// True if `word` reaches `ancestor` through one or more hypernym edges.
    pub fn is_hyponym(&self, word: &str, ancestor: &str) -> bool {
        let (w, a) = (graph_key(word), graph_key(ancestor));
        w != a && self.reaches(&w, &a)
    }

    pub fn synonyms_of(&self, word: &str) -> Option<&BTreeSet<String>> {
        self.synonyms.get(&graph_key(word))
    }

    pub fn dimensions_of(&self, adjective: &str) -> Option<&BTreeSet<(String, Polarity)>> {
        self.dimensional_adjectives.get(&adjective.to_lowercase())
    }

    pub fn default_unit(&self, dimension: &str) -> Option<&Unit> {
        self.units.get(self.default_units.get(dimension)?)
    }

    pub fn unit_for_surface(&self, surface: &str) -> Option<&Unit> {
        let s = surface.trim_end_matches('.').to_lowercase();
        self.units.get(self.unit_surfaces.get(&s)?)
    }

    pub fn pos_entry(&self, word: &str) -> Option<&PosEntry> {
        self.pos.get(&word.to_lowercase())
    }

    pub fn is_adjective(&self, word: &str) -> bool {
        self.pos_entry(word).is_some_and(|e| e.tag == "JJ") || self.dimensions_of(word).is_some()
    }
}

impl Sources {
    fn slot(&mut self, name: &str) -> Option<&mut Option<String>> {
        Some(match name {
            "isa_variants.tsv" => &mut self.isa_variants,
            "quantifiers.tsv" => &mut self.quantifiers,
            "clausals.tsv" => &mut self.clausals,
            "synonyms.tsv" => &mut self.synonyms,
            "named_entities.tsv" => &mut self.named_entities,
            "dim_adjectives.tsv" => &mut self.dim_adjectives,
            "units.tsv" => &mut self.units,
            "pos.tsv" => &mut self.pos,
            _ => return None,
        })
    }
}

fn longest<'a, V>(
    table: &'a BTreeMap<String, V>,
    max_len: usize,
    words: &[&str],
    start: usize,
) -> Option<(usize, &'a V)> {
    let avail = words.len().saturating_sub(start).min(max_len);
    (1..=avail).rev().find_map(|n| {
        let key = norm_surface(&words[start..start + n].join(" "));
        table.get(&key).map(|v| (n, v))
    })
}
