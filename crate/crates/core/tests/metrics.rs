mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{oracle_metrics, small_taxonomy, SmallTaxonomy, WORDS};
use isaonto::evaluate::{evaluate, harmonic, lexical_metrics, normalize_concept_name, EvalReport};
use isaonto::reason::classify;
use isaonto::serialize::parse_dl_text;

fn report(learned: &SmallTaxonomy, gold: &SmallTaxonomy) -> EvalReport {
    let l = parse_dl_text(&learned.dl_text()).unwrap();
    let g = parse_dl_text(&gold.dl_text()).unwrap();
    evaluate((&l, &classify(&l).unwrap()), (&g, &classify(&g).unwrap()), None).unwrap()
}

fn within(x: f64, a: f64, b: f64) -> bool {
    a.min(b) <= x && x <= a.max(b)
}

fn taxonomy(edges: &[(usize, usize)], concepts: &[usize]) -> SmallTaxonomy {
    SmallTaxonomy { concepts: concepts.iter().copied().collect(), edges: edges.iter().copied().collect() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn metric_identities(l in small_taxonomy(), g in small_taxonomy()) {
        let r = report(&l, &g);
        prop_assert_eq!(r.ol, 1.0 - r.lr);
        prop_assert!(within(r.lf, r.lp, r.lr));
        prop_assert!(within(r.tf, r.tp, r.tr));
        prop_assert!(within(r.tf_prime, r.tf, r.lf));
        for v in [r.lp, r.lr, r.lf, r.ol, r.tp, r.tr, r.tf, r.tf_prime] {
            prop_assert!((0.0..=1.0).contains(&v));
        }
        let s = report(&g, &l);
        prop_assert_eq!((s.lp, s.lr), (r.lr, r.lp));
        prop_assert_eq!((s.tp, s.tr), (r.tr, r.tp));
    }

    #[test]
    fn cotopy_matches_enumeration(l in small_taxonomy(), g in small_taxonomy()) {
        let r = report(&l, &g);
        let o = oracle_metrics(&l, &g);
        prop_assert_eq!((r.lp, r.lr), (o.lp, o.lr));
        prop_assert!((r.tp - o.tp).abs() < 1e-12, "tp {} vs {}", r.tp, o.tp);
        prop_assert!((r.tr - o.tr).abs() < 1e-12, "tr {} vs {}", r.tr, o.tr);
    }

    #[test]
    fn harmonic_mean_bounds(a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        let h = harmonic(a, b);
        prop_assert!(within(h, a, b) || (h == 0.0 && a.min(b) == 0.0));
        prop_assert_eq!(h, harmonic(b, a));
    }

    #[test]
    fn normalization_is_idempotent(words in prop::collection::vec("[A-Z][a-z]{2,7}", 1..4)) {
        let once = normalize_concept_name(&words.concat());
        prop_assert_eq!(normalize_concept_name(&once), once.clone());
    }
}

#[test]
fn hand_counted_lexical_sets() {
    let l = parse_dl_text("Apple <= top\nBirch <= top\nCedar <= top\nXylophone <= top\n").unwrap();
    let g = parse_dl_text("Apple <= top\nBirch <= top\nDaisy <= top\n").unwrap();
    let m = lexical_metrics(&l, &g).unwrap();
    assert_eq!((m.lp, m.lr, m.oi, m.ol), (0.5, 2.0 / 3.0, 2.0 / 3.0, 1.0 - 2.0 / 3.0));
}

#[test]
fn identical_ontologies_score_one() {
    let t = taxonomy(&[(1, 0), (2, 0), (3, 1)], &[0, 1, 2, 3]);
    let r = report(&t, &t);
    assert_eq!((r.lp, r.lr, r.lf, r.oi, r.ol), (1.0, 1.0, 1.0, 0.0, 0.0));
    assert_eq!((r.tp, r.tr, r.tf, r.tf_prime), (1.0, 1.0, 1.0, 1.0));
}

#[test]
fn extra_hyponym_edge_costs_precision_only() {
    let gold = taxonomy(&[(1, 0), (2, 0), (3, 1), (4, 2)], &[0, 1, 2, 3, 4]);
    let learned = taxonomy(&[(1, 0), (2, 0), (3, 1), (4, 2), (3, 2)], &[0, 1, 2, 3, 4]);
    let r = report(&learned, &gold);
    let o = oracle_metrics(&learned, &gold);
    assert!(r.tp < 1.0);
    assert_eq!(r.tr, 1.0);
    assert!((r.tp - o.tp).abs() < 1e-12);
}

#[test]
fn extra_leaf_outside_gold_is_invisible_to_cotopy() {
    let gold = taxonomy(&[(1, 0), (2, 0), (3, 1)], &[0, 1, 2, 3]);
    let learned = taxonomy(&[(1, 0), (2, 0), (3, 1), (4, 3)], &[0, 1, 2, 3, 4]);
    let r = report(&learned, &gold);
    assert_eq!((r.tp, r.tr), (1.0, 1.0));
    assert_eq!(r.lp, 0.8);
}

#[test]
fn chain_versus_star() {
    let chain = taxonomy(&[(1, 0), (2, 1), (3, 2)], &[0, 1, 2, 3]);
    let star = taxonomy(&[(1, 0), (2, 0), (3, 0)], &[0, 1, 2, 3]);
    let r = report(&chain, &star);
    let o = oracle_metrics(&chain, &star);
    assert!((r.tp - o.tp).abs() < 1e-12 && (r.tr - o.tr).abs() < 1e-12);
    assert!(r.tp < 1.0 && r.tr == 1.0);
}

#[test]
fn learned_labels_match_spaced_gold_names() {
    assert_eq!(normalize_concept_name("StudentPerson"), normalize_concept_name("student persons"));
    let names: BTreeSet<String> = WORDS.iter().map(|w| normalize_concept_name(w)).collect();
    assert_eq!(names.len(), WORDS.len());
}
