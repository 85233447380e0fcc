use std::collections::BTreeSet;

use isaonto::dlmodel::{Axiom, Ontology};
use isaonto::lexicon::Lexicon;
use isaonto::pipeline::{compile, parse_corpus, Options};
use isaonto::preprocess::extract_triples;
use isaonto::serialize::{parse_axiom, to_owl_functional};
use isaonto::tagger::tag;

fn learn(text: &str) -> Ontology {
    compile(&parse_corpus(text), &Lexicon::bundled(), Options::default()).ontology
}

fn axioms(lines: &[&str]) -> BTreeSet<Axiom> {
    lines.iter().map(|l| parse_axiom(l).unwrap()).collect()
}

#[test]
fn height_with_unit_builds_the_abox_chain() {
    let onto = learn("John is 5 foot tall\n");
    let abox: BTreeSet<Axiom> = onto.abox().cloned().collect();
    assert_eq!(
        abox,
        axioms(&[
            "John : FiveFootTallPerson",
            "H_John : Height",
            "hasHeight(John, H_John)",
            "ft_John : Feet",
            "hasUnit(H_John, ft_John)",
            "hasValue(ft_John, 5)",
        ])
    );
}

#[test]
fn superlative_defines_the_tallest_student() {
    let onto = learn("John is the tallest student\n");
    let def = parse_axiom(
        "TallestStudentPerson == Person and Student and TallThing and all hasHeight . (Height and all hasRank . (Rank and all hasValue . {1}))",
    )
    .unwrap();
    assert!(onto.contains(&def));
    assert!(onto.contains(&parse_axiom("John : TallestStudentPerson").unwrap()));
    assert!(onto.contains(&parse_axiom("hasValue(r_H_John, 1)").unwrap()));
}

#[test]
fn some_women_are_smokers() {
    let onto = learn("Some women are smokers\n");
    let all: BTreeSet<Axiom> = onto.axioms().cloned().collect();
    assert_eq!(all, axioms(&["SmokerWoman <= Woman", "SmokerWoman <= Smoker"]));
    assert_eq!(to_owl_functional(&onto), include_str!("../resources/golden/smoker_woman.ofn"));
}

fn expansions(s: &str) -> usize {
    let lex = Lexicon::bundled();
    extract_triples(&tag(s, &lex).unwrap(), 1, &lex).unwrap().len()
}

#[test]
fn triple_extraction_counts() {
    assert_eq!(expansions("John and Joe, who are intelligent students, are student body and greek house members"), 6);
    assert_eq!(expansions("Either John or Joe, who are good students, is student body member"), 3);
    assert_eq!(expansions("John is a student who is hard-working"), 2);
}
