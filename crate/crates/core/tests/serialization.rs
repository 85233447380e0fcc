use proptest::prelude::*;

use isaonto::lexicon::Lexicon;
use isaonto::pipeline::{compile, parse_corpus, Options};
use isaonto::serialize::{parse_dl_text, parse_owl_functional, to_dl_text, to_owl_functional};

fn corpus_ontology() -> isaonto::dlmodel::Ontology {
    compile(&parse_corpus(include_str!("../resources/corpus/corpus.txt")), &Lexicon::bundled(), Options::default()).ontology
}

#[test]
fn corpus_round_trips_through_both_formats() {
    let onto = corpus_ontology();
    let owl = to_owl_functional(&onto);
    let back = parse_owl_functional(&owl).unwrap();
    assert!(back.same_axioms(&onto));
    assert_eq!(to_owl_functional(&back), owl);
    let dlt = to_dl_text(&onto);
    let back = parse_dl_text(&dlt).unwrap();
    assert!(back.same_axioms(&onto));
    assert_eq!(to_dl_text(&back), dlt);
}

#[test]
fn trivial_corpus_owl_is_byte_stable() {
    let onto = compile(&parse_corpus(include_str!("../resources/corpus/trivial.txt")), &Lexicon::bundled(), Options::default()).ontology;
    assert_eq!(to_owl_functional(&onto), include_str!("../resources/golden/trivial.ofn"));
}

proptest! {
    #[test]
    fn sentence_subsets_round_trip(mask in prop::collection::vec(any::<bool>(), 68)) {
        let lines: Vec<_> = parse_corpus(include_str!("../resources/corpus/corpus.txt"))
            .into_iter()
            .zip(&mask)
            .filter(|(_, keep)| **keep)
            .map(|(l, _)| l)
            .collect();
        let onto = compile(&lines, &Lexicon::bundled(), Options::default()).ontology;
        let back = parse_owl_functional(&to_owl_functional(&onto)).unwrap();
        prop_assert!(back.same_axioms(&onto));
        let back = parse_dl_text(&to_dl_text(&onto)).unwrap();
        prop_assert!(back.same_axioms(&onto));
    }
}
