use std::collections::BTreeSet;

use isaonto::dlmodel::Axiom;
use isaonto::lexicon::Lexicon;
use isaonto::pipeline::{compile, parse_corpus, Options, Outcome};
use isaonto::serialize::{axiom_to_dl, parse_dl_blocks};

const TRIVIAL: &str = include_str!("../resources/corpus/trivial.txt");
const NONTRIVIAL: &str = include_str!("../resources/corpus/nontrivial.txt");
const TRIVIAL_GOLD: &str = include_str!("../resources/golden/trivial.dlt");
const NONTRIVIAL_GOLD: &str = include_str!("../resources/golden/nontrivial.dlt");

fn show(set: &BTreeSet<Axiom>) -> Vec<String> {
    set.iter().map(axiom_to_dl).collect()
}

fn check(corpus: &str, gold: &str) {
    let lex = Lexicon::bundled();
    let lines = parse_corpus(corpus);
    let blocks = parse_dl_blocks(gold).unwrap();
    assert_eq!(lines.len(), blocks.len());
    let out = compile(&lines, &lex, Options::default());
    let mut failures = Vec::new();
    for ((line, entry), block) in lines.iter().zip(&out.trace).zip(&blocks) {
        assert_eq!(block.index, line.source_index);
        assert_eq!(block.title, line.text, "block {} titles the wrong sentence", block.index);
        assert_eq!(entry.outcome, Outcome::Translated, "{}: {:?}", line.text, entry.rejection);
        let got: BTreeSet<Axiom> = entry.axioms().into_iter().collect();
        let want: BTreeSet<Axiom> = block.axioms.iter().cloned().collect();
        if got != want {
            failures.push(format!(
                "{} {}\n  missing: {:?}\n  extra:   {:?}",
                line.source_index,
                line.text,
                show(&want.difference(&got).cloned().collect()),
                show(&got.difference(&want).cloned().collect()),
            ));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn trivial_corpus_matches_golden() {
    check(TRIVIAL, TRIVIAL_GOLD);
}

#[test]
fn nontrivial_corpus_matches_golden() {
    check(NONTRIVIAL, NONTRIVIAL_GOLD);
}

#[test]
fn partial_rows_are_the_marked_ones() {
    let partial: Vec<usize> = parse_corpus(NONTRIVIAL).iter().filter(|l| l.partial).map(|l| l.source_index).collect();
    assert_eq!(partial, vec![8, 30, 33]);
}
