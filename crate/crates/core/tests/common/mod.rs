//! Shared strategies and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use isaonto::dlmodel::Ontology;
use isaonto::serialize::parse_dl_text;

pub const TRIVIAL: &str = include_str!("../../resources/corpus/trivial.txt");
pub const NONTRIVIAL: &str = include_str!("../../resources/corpus/nontrivial.txt");
pub const CORPUS: &str = include_str!("../../resources/corpus/corpus.txt");
pub const TRIVIAL_GOLD: &str = include_str!("../../resources/golden/trivial.dlt");
pub const NONTRIVIAL_GOLD: &str = include_str!("../../resources/golden/nontrivial.dlt");

/// Deterministic runner so acceptance counts are reproducible.
pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

#[derive(Debug, Clone, Copy)]
pub enum Told {
    Sub(usize, usize),
    Equiv(usize, usize),
    SubBoth(usize, usize, usize),
}

/// Ontology of told atomic subsumptions over `K00`, `K01`, ...
#[derive(Debug, Clone)]
pub struct ToldOntology {
    pub n: usize,
    pub axioms: Vec<Told>,
}

pub fn concept(i: usize) -> String {
    format!("K{i:02}")
}

impl ToldOntology {
    pub fn dl_text(&self) -> String {
        let (c, mut out) = (concept, String::new());
        for a in &self.axioms {
            let line = match *a {
                Told::Sub(x, y) => format!("{} <= {}", c(x), c(y)),
                Told::Equiv(x, y) => format!("{} == {}", c(x), c(y)),
                Told::SubBoth(x, y, z) => format!("{} <= {} and {}", c(x), c(y), c(z)),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn ontology(&self) -> Ontology {
        parse_dl_text(&self.dl_text()).unwrap()
    }

    /// Indices mentioned by at least one axiom.
    pub fn used(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for a in &self.axioms {
            match *a {
                Told::Sub(x, y) | Told::Equiv(x, y) => s.extend([x, y]),
                Told::SubBoth(x, y, z) => s.extend([x, y, z]),
            }
        }
        s
    }

    /// Reflexive-transitive closure of the told edges (Warshall).
    pub fn closure(&self) -> Vec<Vec<bool>> {
        let n = self.n;
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for a in &self.axioms {
            match *a {
                Told::Sub(x, y) => r[x][y] = true,
                Told::Equiv(x, y) => {
                    r[x][y] = true;
                    r[y][x] = true;
                }
                Told::SubBoth(x, y, z) => {
                    r[x][y] = true;
                    r[x][z] = true;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        r
    }
}

pub fn told_ontology(max_concepts: usize) -> impl Strategy<Value = ToldOntology> {
    (2..=max_concepts).prop_flat_map(|n| {
        let told = prop_oneof![
            6 => (0..n, 0..n).prop_map(|(a, b)| Told::Sub(a, b)),
            1 => (0..n, 0..n).prop_map(|(a, b)| Told::Equiv(a, b)),
            1 => (0..n, 0..n, 0..n).prop_map(|(a, b, c)| Told::SubBoth(a, b, c)),
        ];
        prop::collection::vec(told, 1..=2 * n).prop_map(move |axioms| ToldOntology { n, axioms })
    })
}

pub type Edges = BTreeSet<(String, String)>;
pub type Classes = BTreeMap<String, BTreeSet<String>>;

/// Expected taxonomy straight from the definition: equivalence classes
/// are mutual reachability, edges join classes with nothing strictly
/// between them, and parentless classes sit under `owl:Thing`.
pub fn expected_taxonomy(t: &ToldOntology) -> (Edges, Classes) {
    let r = t.closure();
    let used: Vec<usize> = t.used().into_iter().collect();
    let class_of = |i: usize| -> BTreeSet<String> { used.iter().filter(|&&j| r[i][j] && r[j][i]).map(|&j| concept(j)).collect() };
    let name = |i: usize| class_of(i).into_iter().next().unwrap();
    let strict = |i: usize, j: usize| r[i][j] && !r[j][i];
    let mut edges = BTreeSet::new();
    let mut classes = BTreeMap::new();
    for &i in &used {
        classes.insert(name(i), class_of(i));
        let parents: Vec<usize> = used.iter().copied().filter(|&j| strict(i, j)).collect();
        if parents.is_empty() {
            edges.insert((name(i), "owl:Thing".to_string()));
        }
        for &j in &parents {
            if !used.iter().any(|&k| strict(i, k) && strict(k, j)) {
                edges.insert((name(i), name(j)));
            }
        }
    }
    (edges, classes)
}

/// Names whose normalized forms stay distinct.
pub const WORDS: [&str; 10] = ["Apple", "Birch", "Cedar", "Daisy", "Elm", "Fern", "Grape", "Hazel", "Ivy", "Juniper"];

/// A small DAG over a subset of [`WORDS`]; edges only point from a later
/// word to an earlier one.
#[derive(Debug, Clone)]
pub struct SmallTaxonomy {
    pub concepts: BTreeSet<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

pub fn small_taxonomy() -> impl Strategy<Value = SmallTaxonomy> {
    (prop::collection::btree_set(0..WORDS.len(), 1..=WORDS.len()), prop::collection::vec((0..WORDS.len(), 0..WORDS.len()), 0..15))
        .prop_map(|(concepts, pairs)| {
            let edges = pairs
                .into_iter()
                .filter(|(a, b)| a != b && concepts.contains(a) && concepts.contains(b))
                .map(|(a, b)| (a.max(b), a.min(b)))
                .collect();
            SmallTaxonomy { concepts, edges }
        })
}

impl SmallTaxonomy {
    /// Told subsumptions as DL text; isolated concepts are declared under `top`.
    pub fn dl_text(&self) -> String {
        let mut out = String::new();
        for &(c, p) in &self.edges {
            out.push_str(&format!("{} <= {}\n", WORDS[c], WORDS[p]));
        }
        for &c in &self.concepts {
            if !self.edges.iter().any(|&(a, b)| a == c || b == c) {
                out.push_str(&format!("{} <= top\n", WORDS[c]));
            }
        }
        out
    }

    /// Every path from `c` upward, enumerated explicitly.
    pub fn ancestors(&self, c: usize) -> BTreeSet<usize> {
        fn walk(t: &SmallTaxonomy, c: usize, seen: &mut BTreeSet<usize>) {
            for &(a, b) in &t.edges {
                if a == c {
                    seen.insert(b);
                    walk(t, b, seen);
                }
            }
        }
        let mut seen = BTreeSet::new();
        walk(self, c, &mut seen);
        seen
    }

    pub fn descendants(&self, c: usize) -> BTreeSet<usize> {
        self.concepts.iter().copied().filter(|&d| self.ancestors(d).contains(&c)).collect()
    }
}

/// Lexical precision/recall and cotopy precision/recall by enumeration.
pub struct OracleMetrics {
    pub lp: f64,
    pub lr: f64,
    pub tp: f64,
    pub tr: f64,
}

pub fn oracle_metrics(learned: &SmallTaxonomy, gold: &SmallTaxonomy) -> OracleMetrics {
    let common: Vec<usize> = learned.concepts.intersection(&gold.concepts).copied().collect();
    let csc = |t: &SmallTaxonomy, other: &SmallTaxonomy, c: usize| -> BTreeSet<usize> {
        let mut s = t.ancestors(c);
        s.extend(t.descendants(c));
        s.insert(c);
        s.into_iter().filter(|x| other.concepts.contains(x)).collect()
    };
    let (mut p, mut r) = (0.0, 0.0);
    for &c in &common {
        let a = csc(learned, gold, c);
        let b = csc(gold, learned, c);
        let both = a.intersection(&b).count() as f64;
        p += both / a.len() as f64;
        r += both / b.len() as f64;
    }
    let k = common.len() as f64;
    OracleMetrics {
        lp: k / learned.concepts.len() as f64,
        lr: k / gold.concepts.len() as f64,
        tp: if common.is_empty() { 0.0 } else { p / k },
        tr: if common.is_empty() { 0.0 } else { r / k },
    }
}

const SYLLABLES: [&str; 12] = ["ka", "lo", "mi", "ner", "po", "ru", "ta", "ven", "zo", "bel", "dar", "fin"];
const ADJECTIVES: [&str; 8] = ["brave", "clever", "happy", "hungry", "rich", "smart", "weak", "wild"];

fn noun(i: usize) -> String {
    let (a, b, c) = (i % 12, (i / 12) % 12, (i / 144) % 12);
    format!("{}{}{}t", SYLLABLES[a], SYLLABLES[b], SYLLABLES[c])
}

/// `n` sentences: the bundled corpus followed by generated ones over a
/// tree of invented nouns (`noun(i)` sits under `noun(i / 3)`).
pub fn synthetic_corpus(n: usize) -> String {
    let mut out: Vec<String> = CORPUS.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).map(str::to_owned).collect();
    let mut i = 1;
    while out.len() < n {
        let (child, parent, adj) = (noun(i), noun(i / 3), ADJECTIVES[i % ADJECTIVES.len()]);
        let mut cap = child.clone();
        cap[..1].make_ascii_uppercase();
        let line = match i % 4 {
            0 => format!("{cap} is a kind of {parent}"),
            1 => format!("Some {child}s are {adj} {parent}s"),
            2 => format!("{} {child} is a {parent}", {
                let mut a = adj.to_string();
                a[..1].make_ascii_uppercase();
                a
            }),
            _ => format!("All {child}s are {parent}s"),
        };
        out.push(line);
        i += 1;
    }
    out.join("\n") + "\n"
}
