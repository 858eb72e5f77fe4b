mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::gen::{all_strings, raw_regex};
use resyn::canon::{anonymize_literals, canonical_if_valid, canonicalize, extract_subregexes, Mode};
use resyn::cost::{decomposition_cost, optimal_alignment, scs_length};
use resyn::eval::{mcc, ConfusionCounts};
use resyn::examplegen::{mutate_negatives, sample_positives, RandomGt};
use resyn::synth::{
    fallback_candidates, fallback_synthesize, heuristic_partition, heuristic_segment,
    oracle_partition, oracle_segment,
};
use resyn::syntax::{enumerate_language, escape_literal, matches, parse, serialize, Matcher, RegexAst};

fn small_string(max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop::sample::select(vec!['a', 'b', 'c']), 0..=max)
        .prop_map(|v| v.into_iter().collect())
}

fn printable(max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec((32u8..127).prop_map(char::from), 0..=max)
        .prop_map(|v| v.into_iter().collect())
}

fn raw(seed: u64, depth: usize) -> RegexAst {
    raw_regex(&mut ChaCha8Rng::seed_from_u64(seed), &['a', 'b', 'c'], depth)
}

fn generated(seed: u64) -> RegexAst {
    RandomGt::default().generate(&mut ChaCha8Rng::seed_from_u64(seed), 1 + (seed % 5) as usize)
}

fn owned(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn escape_round_trips(w in printable(12)) {
        let ast = parse(&escape_literal(&w)).unwrap();
        prop_assert!(matches(&ast, &w));
        prop_assert_eq!(ast, RegexAst::literal(w));
    }

    #[test]
    fn canonical_forms_are_stable(seed in any::<u64>()) {
        let r = raw(seed, 5);
        if let Ok(c) = canonical_if_valid(&serialize(&r)) {
            prop_assert_eq!(parse(&serialize(&c)).unwrap(), c.clone());
            prop_assert_eq!(canonicalize(&c, Mode::Full).unwrap(), c);
        }
    }

    #[test]
    fn preserving_mode_keeps_language(seed in any::<u64>()) {
        let r = raw(seed, 4);
        let p = canonicalize(&r, Mode::Preserving).unwrap();
        let (a, b) = (Matcher::new(&r), Matcher::new(&p));
        for w in all_strings(&['a', 'b', 'c'], 5) {
            prop_assert_eq!(a.is_match(&w), b.is_match(&w), "{} vs {} on {:?}", serialize(&r), serialize(&p), w);
        }
    }

    #[test]
    fn matcher_agrees_with_enumeration(seed in any::<u64>()) {
        let r = raw(seed, 4);
        let e = enumerate_language(&r, 5, 100_000);
        prop_assert!(!e.overflow);
        let m = Matcher::new(&r);
        for w in all_strings(&['a', 'b', 'c'], 5) {
            prop_assert_eq!(m.is_match(&w), e.strings.contains(&w));
        }
    }

    #[test]
    fn subregexes_are_canonical(seed in any::<u64>()) {
        let gt = generated(seed);
        let subs = extract_subregexes(&gt);
        prop_assert_eq!(&subs[0], &gt);
        for s in &subs {
            prop_assert_eq!(&canonicalize(s, Mode::Preserving).unwrap(), s);
        }
    }

    #[test]
    fn anonymization_restores(seed in any::<u64>(), key in any::<u64>()) {
        let gt = generated(seed);
        let (anon, map) = anonymize_literals(&gt, key).unwrap();
        prop_assert_eq!(map.restore(&anon), gt);
    }

    #[test]
    fn scs_bounds_and_symmetry(x in small_string(6), y in small_string(6)) {
        let s = scs_length(&x, &y);
        prop_assert_eq!(s, scs_length(&y, &x));
        prop_assert!(s >= x.len().max(y.len()) && s <= x.len() + y.len());
        prop_assert_eq!(optimal_alignment(&[&x, &y]).unwrap().cost(), s);
    }

    #[test]
    fn witnesses_are_valid(set in proptest::collection::vec(small_string(4), 1..=3)) {
        let a = optimal_alignment(&set).unwrap();
        prop_assert!(a.is_valid());
        let d = decomposition_cost(&set).unwrap();
        prop_assert!(d.is_valid());
        prop_assert_eq!(a.cost(), d.cost());
    }

    #[test]
    fn samples_match_and_mutants_do_not(seed in any::<u64>()) {
        let gt = generated(seed);
        if let Ok(pos) = sample_positives(&gt, 6, seed) {
            let m = Matcher::new(&gt);
            prop_assert!(pos.iter().all(|p| m.is_match(p)));
            let neg = mutate_negatives(&gt, &pos, 6, seed, &[]);
            prop_assert!(neg.strings.iter().all(|n| !m.is_match(n)));
        }
    }

    #[test]
    fn oracle_splits_preserve_strings(seed in any::<u64>()) {
        let gt = generated(seed);
        let Ok(pos) = sample_positives(&gt, 6, seed) else { return Ok(()) };
        match &gt {
            RegexAst::Concat(children) => {
                let rows = oracle_segment(&gt, &pos).unwrap();
                for (row, w) in rows.iter().zip(&pos) {
                    prop_assert_eq!(row.len(), children.len());
                    prop_assert_eq!(&row.concat(), w);
                    for (seg, child) in row.iter().zip(children) {
                        prop_assert!(matches(child, seg));
                    }
                }
            }
            RegexAst::Union(_) => {
                let groups = oracle_partition(&gt, &pos).unwrap();
                let mut all: Vec<String> = groups.into_iter().flat_map(|(_, g)| g).collect();
                let mut want = pos.clone();
                all.sort();
                want.sort();
                prop_assert_eq!(all, want);
            }
            _ => {}
        }
    }

    #[test]
    fn heuristic_splits_obey_laws(pos in proptest::collection::vec(printable(8), 1..6)) {
        let mut pos = pos;
        pos.sort();
        pos.dedup();
        if let Some(rows) = heuristic_segment(&pos) {
            let k = rows[0].len();
            for (row, w) in rows.iter().zip(&pos) {
                prop_assert_eq!(row.len(), k);
                prop_assert_eq!(&row.concat(), w);
            }
        }
        let groups = heuristic_partition(&pos);
        prop_assert!(groups.iter().all(|g| !g.is_empty()));
        let mut all: Vec<String> = groups.concat();
        all.sort();
        prop_assert_eq!(all, pos);
    }

    #[test]
    fn fallback_returns_first_consistent(
        pos in proptest::collection::vec(printable(5), 1..4),
        neg in proptest::collection::vec(printable(5), 0..4),
    ) {
        let neg: Vec<String> = neg.into_iter().filter(|n| !pos.contains(n)).collect();
        let cands = fallback_candidates();
        let ok = |h: &RegexAst| {
            pos.iter().all(|p| matches(h, p)) && neg.iter().all(|n| !matches(h, n))
        };
        match fallback_synthesize(&pos, &neg) {
            Some(h) => {
                let i = cands.iter().position(|c| *c == h).unwrap();
                prop_assert!(ok(&h));
                prop_assert!(cands[..i].iter().all(|c| !ok(c)));
            }
            None => prop_assert!(cands.iter().all(|c| !ok(c))),
        }
    }

    #[test]
    fn mcc_is_bounded(tp in 0u64..50, tn in 0u64..50, fp in 0u64..50, fn_ in 0u64..50) {
        let v = mcc(ConfusionCounts { tp, tn, fp, fn_ });
        prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&v));
    }
}

#[test]
fn fallback_known_cases() {
    let h = fallback_synthesize(&owned(&["abc", "XYZ"]), &owned(&["a b"])).unwrap();
    assert_eq!(serialize(&h), "[A-Za-z]+");
}
