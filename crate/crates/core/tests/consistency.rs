use isaonto::reason::check_consistency;
use isaonto::serialize::parse_dl_text;

fn report(text: &str) -> isaonto::reason::ConsistencyReport {
    check_consistency(&parse_dl_text(text).unwrap())
}

#[test]
fn direct_complement_clash() {
    let r = report("C <= D\nC <= not D\n");
    assert_eq!(r.unsatisfiable.iter().collect::<Vec<_>>(), ["C"]);
    assert!(!r.is_consistent());
}

#[test]
fn inherited_complement_clash() {
    let r = report("A <= B\nB <= C\nA <= D\nD <= not C\n");
    assert_eq!(r.unsatisfiable.iter().collect::<Vec<_>>(), ["A"]);
}

#[test]
fn only_constraint_violation() {
    let r = report("(StudentPerson and not Student) == bottom\nStudentPerson <= Person\nStudentPerson <= not Student\n");
    assert_eq!(r.violations.len(), 1);
    assert_eq!(r.violations[0].concept, "StudentPerson");
}

#[test]
fn membership_clash_on_an_individual() {
    let r = report("Human <= not Fruit\nTomato : Human\nTomato : Fruit\n");
    assert_eq!(r.abox_clashes.len(), 1);
    assert_eq!(r.abox_clashes[0].individual, "Tomato");
}

#[test]
fn clash_free_fixtures_report_nothing() {
    for text in [
        "C <= D\nE <= not D\n",
        "StudentPerson <= Student\nStudentPerson <= Person\n(StudentPerson and not Student) == bottom\n",
        "Man <= not Woman\nJohn : Man\nMary : Woman\n",
        "TallThing == all hasState . Tall\nJohn : TallThing\n",
    ] {
        let r = report(text);
        assert!(r.is_consistent(), "{text}: {r:?}");
        assert!(r.unsatisfiable.is_empty() && r.violations.is_empty() && r.abox_clashes.is_empty());
    }
}

#[test]
fn bundled_corpus_is_consistent() {
    use isaonto::lexicon::Lexicon;
    use isaonto::pipeline::{compile, parse_corpus, Options};
    let out = compile(&parse_corpus(include_str!("../resources/corpus/corpus.txt")), &Lexicon::bundled(), Options::default());
    let r = check_consistency(&out.ontology);
    assert!(r.is_consistent(), "{r:?}");
    assert_eq!(r.flagged.len(), 2);
}
