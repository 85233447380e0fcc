//! Reader for the WordNet 3.x noun database (`data.noun`, `index.noun`).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::io;
use std::path::Path;

use super::LexiconError;

#[derive(Debug, Clone, Default)]
pub struct WordNet {
    synsets: HashMap<u64, Synset>,
    /// lemma -> synset offsets in sense order
    index: BTreeMap<String, Vec<u64>>,
}

#[derive(Debug, Clone, Default)]
struct Synset {
    words: Vec<String>,
    hypernyms: Vec<u64>,
}

impl WordNet {
    /// `Ok(None)` when `data.noun` is absent.
    pub fn load(dir: &Path) -> Result<Option<Self>, LexiconError> {
        let data = match read_opt(&dir.join("data.noun"))? {
            Some(d) => d,
            None => return Ok(None),
        };
        let index = read_opt(&dir.join("index.noun"))?;
        Self::parse(&data, index.as_deref()).map(Some)
    }

    pub fn parse(data: &str, index: Option<&str>) -> Result<Self, LexiconError> {
        let mut wn = WordNet::default();
        for (i, line) in data.lines().enumerate() {
            if line.starts_with(' ') || line.trim().is_empty() {
                continue;
            }
            let bad = |m: &str| LexiconError::Malformed { file: "data.noun".into(), line: i + 1, message: m.into() };
            let body = line.split(" | ").next().unwrap_or(line);
            let f: Vec<&str> = body.split_whitespace().collect();
            if f.len() < 4 {
                return Err(bad("short synset record"));
            }
            let offset: u64 = f[0].parse().map_err(|_| bad("bad offset"))?;
            let w_cnt = usize::from_str_radix(f[3], 16).map_err(|_| bad("bad word count"))?;
            let mut pos = 4;
            let mut syn = Synset::default();
            for _ in 0..w_cnt {
                let w = f.get(pos).ok_or_else(|| bad("truncated word list"))?;
                syn.words.push(clean(w));
                pos += 2;
            }
            let p_cnt: usize = f.get(pos).ok_or_else(|| bad("missing pointer count"))?.parse().map_err(|_| bad("bad pointer count"))?;
            pos += 1;
            for _ in 0..p_cnt {
                let sym = *f.get(pos).ok_or_else(|| bad("truncated pointer list"))?;
                let target: u64 = f.get(pos + 1).ok_or_else(|| bad("truncated pointer"))?.parse().map_err(|_| bad("bad pointer offset"))?;
                let pos_char = f.get(pos + 2).copied().unwrap_or("n");
                if (sym == "@" || sym == "@i") && pos_char == "n" {
                    syn.hypernyms.push(target);
                }
                pos += 4;
            }
            wn.synsets.insert(offset, syn);
        }
        if let Some(index) = index {
            for (i, line) in index.lines().enumerate() {
                if line.starts_with(' ') || line.trim().is_empty() {
                    continue;
                }
                let bad = |m: &str| LexiconError::Malformed { file: "index.noun".into(), line: i + 1, message: m.into() };
                let f: Vec<&str> = line.split_whitespace().collect();
                if f.len() < 4 {
                    return Err(bad("short index record"));
                }
                let synset_cnt: usize = f[2].parse().map_err(|_| bad("bad synset count"))?;
                let p_cnt: usize = f[3].parse().map_err(|_| bad("bad pointer count"))?;
                let start = 4 + p_cnt + 2;
                let offsets = f
                    .get(start..start + synset_cnt)
                    .ok_or_else(|| bad("truncated offsets"))?
                    .iter()
                    .map(|o| o.parse::<u64>().map_err(|_| bad("bad offset")))
                    .collect::<Result<Vec<_>, _>>()?;
                wn.index.insert(clean(f[0]), offsets);
            }
        }
        Ok(wn)
    }

    /// Word-level hypernym edges. With an index, only each lemma's first
    /// sense contributes.
    pub fn hypernyms(&self) -> BTreeMap<String, BTreeSet<String>> {
        let mut out: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        let mut add = |word: &str, syn: &Synset| {
            for h in &syn.hypernyms {
                if let Some(parent) = self.synsets.get(h).and_then(|s| s.words.first()) {
                    if parent != word {
                        out.entry(word.to_string()).or_default().insert(parent.clone());
                    }
                }
            }
        };
        if self.index.is_empty() {
            for syn in self.synsets.values() {
                for w in &syn.words {
                    add(w, syn);
                }
            }
        } else {
            for (lemma, offsets) in &self.index {
                if let Some(syn) = offsets.first().and_then(|o| self.synsets.get(o)) {
                    add(lemma, syn);
                }
            }
        }
        out
    }

    pub fn synonym_sets(&self) -> Vec<BTreeSet<String>> {
        let mut out: Vec<BTreeSet<String>> = self
            .synsets
            .values()
            .filter(|s| s.words.len() > 1)
            .map(|s| s.words.iter().cloned().collect())
            .collect();
        out.sort();
        out
    }
}

fn clean(w: &str) -> String {
    let w = w.split('(').next().unwrap_or(w);
    w.to_lowercase()
}

fn read_opt(path: &Path) -> Result<Option<String>, LexiconError> {
    match fs::read_to_string(path) {
        Ok(s) => Ok(Some(s)),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
        Err(source) => Err(LexiconError::Io { file: path.to_path_buf(), source }),
    }
}
