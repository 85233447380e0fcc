mod common;

use proptest::prelude::*;

use common::{expected_taxonomy, told_ontology};
use isaonto::lexicon::Lexicon;
use isaonto::pipeline::{compile, parse_corpus, Options};
use isaonto::reason::classify;
use isaonto::serialize::{parse_dl_text, parse_owl_functional, to_dl_text, to_owl_functional};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classify_matches_transitive_closure(t in told_ontology(30)) {
        let got = classify(&t.ontology()).unwrap();
        let (edges, classes) = expected_taxonomy(&t);
        prop_assert_eq!(&got.edges, &edges, "{}", t.dl_text());
        prop_assert_eq!(&got.equivalence_classes, &classes);
        prop_assert!(got.unsatisfiable.is_empty());
    }

    #[test]
    fn classification_survives_serialization(t in told_ontology(12)) {
        let onto = t.ontology();
        let tax = classify(&onto).unwrap();
        let via_dl = parse_dl_text(&to_dl_text(&onto)).unwrap();
        let via_owl = parse_owl_functional(&to_owl_functional(&onto)).unwrap();
        prop_assert_eq!(&classify(&via_dl).unwrap(), &tax);
        prop_assert_eq!(&classify(&via_owl).unwrap(), &tax);
    }
}

#[test]
fn trivial_taxonomy_matches_golden() {
    let out = compile(&parse_corpus(common::TRIVIAL), &Lexicon::bundled(), Options::default());
    let tax = classify(&out.ontology).unwrap();
    assert_eq!(tax.to_tsv(), include_str!("../resources/golden/trivial_taxonomy.tsv"));
}

#[test]
fn classifying_twice_is_stable() {
    let out = compile(&parse_corpus(common::CORPUS), &Lexicon::bundled(), Options::default());
    let a = classify(&out.ontology).unwrap();
    let b = classify(&parse_dl_text(&to_dl_text(&out.ontology)).unwrap()).unwrap();
    assert_eq!(a.to_tsv(), b.to_tsv());
    assert_eq!(a.to_dot(), b.to_dot());
}
