use std::fs;
use std::path::PathBuf;

use grr_census::census::{sample_counts, SetSpace};
use grr_census::{bounds, exhaustive_census, monte_carlo_census, parse_manifest, unlabeled_census, Mode};
use grr_core::aut::{canonical_form, is_grr};
use grr_core::cayley::build_cayley;
use grr_core::{load_group, ElementSet, HalfInt};
use proptest::prelude::*;

#[test]
fn empty_and_complete_graphs_are_distinct_classes() {
    let g = load_group("cyclic:5").unwrap();
    let empty = build_cayley(&g, ElementSet::EMPTY).unwrap();
    let complete = build_cayley(&g, g.all() - ElementSet::singleton(0)).unwrap();
    assert_ne!(canonical_form(&empty.digraph).unwrap(), canonical_form(&complete.digraph).unwrap());
    let u = unlabeled_census(&g).unwrap();
    assert_eq!(u.labeled_total, 8);
    assert!(u.iso_classes >= 2 && u.iso_classes <= 8);
    assert_eq!(u.grr_classes, 0);
}

#[test]
fn unlabeled_counts_on_elem2_3() {
    let g = load_group("elem2:3").unwrap();
    let u = unlabeled_census(&g).unwrap();
    // independent: bucket by canonical form directly
    let mut forms = std::collections::HashSet::new();
    let mut grr = 0;
    for bits in 0..1u64 << 8 {
        let d = build_cayley(&g, ElementSet(bits)).unwrap();
        forms.insert(canonical_form(&d.digraph).unwrap());
        grr += u64::from(is_grr(&g, ElementSet(bits)).unwrap());
    }
    assert_eq!(u.iso_classes, forms.len() as u64);
    assert_eq!(u.labeled_grr, grr);
    assert_eq!(u.aut_r, 168);
}

#[test]
fn serial_and_parallel_agree() {
    for d in ["dihedral:6", "product:cyclic:4,elem2:2", "alt:4"] {
        let g = load_group(d).unwrap();
        for mode in [Mode::Graph, Mode::Digraph] {
            let a = exhaustive_census(&g, mode, Some(1)).unwrap().without_timing();
            let b = exhaustive_census(&g, mode, Some(3)).unwrap().without_timing();
            assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap(), "{d} {mode}");
        }
    }
}

#[test]
fn graph_census_partitions_the_sets() {
    for d in ["cyclic:3", "sym:3", "dihedral:5", "elem2:3"] {
        let g = load_group(d).unwrap();
        let rec = exhaustive_census(&g, Mode::Graph, None).unwrap();
        assert_eq!(rec.total, 1 << SetSpace::new(&g, Mode::Graph).unwrap().bits());
        assert_eq!(rec.counts.drr_or_grr + rec.counts.non_regular, rec.total);
        assert!(rec.counts.drr_or_grr <= rec.counts.normal);
    }
    let rec = exhaustive_census(&load_group("cyclic:3").unwrap(), Mode::Graph, None).unwrap();
    assert_eq!((rec.total, rec.counts.drr_or_grr), (4, 0));
}

#[test]
fn half_samples_merge_to_the_full_run() {
    let g = load_group("dihedral:5").unwrap();
    let (seed, n) = (99, 5000);
    let full = monte_carlo_census(&g, Mode::Graph, n, seed, Some(1)).unwrap();
    let lo = sample_counts(&g, Mode::Graph, seed, 0..n / 2 + 7, Some(2)).unwrap();
    let hi = sample_counts(&g, Mode::Graph, seed, n / 2 + 7..n, Some(1)).unwrap();
    assert_eq!(full.counts.drr_or_grr, lo.drr_or_grr + hi.drr_or_grr);
    assert_eq!(full.counts.normal, lo.normal + hi.normal);
    assert_eq!(full.counts.non_regular, lo.non_regular + hi.non_regular);
}

#[test]
fn one_sample_is_zero_or_one() {
    let g = load_group("sym:3").unwrap();
    for seed in 0..8 {
        let v = monte_carlo_census(&g, Mode::Digraph, 1, seed, None).unwrap().proportion.value();
        assert!(v == 0.0 || v == 1.0);
    }
    assert!(monte_carlo_census(&g, Mode::Digraph, 0, 0, None).is_err());
}

#[test]
fn bounds_are_vacuous_at_every_feasible_order() {
    for r in 3..=1u64 << 20 {
        let t = bounds::evaluate(r, HalfInt::from_int(r as i64)).unwrap();
        assert!(t.grr_proportion.vacuous && t.unlabeled_ratio.vacuous && t.normal_proportion.vacuous, "r = {r}");
    }
    let t = bounds::evaluate(1 << 40, HalfInt::from_int(1 << 40)).unwrap();
    assert!(t.grr_proportion.vacuous);
}

#[test]
fn manifest_seeds() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/corpus_manifest_parse");
    let mut accepted = 0;
    for e in fs::read_dir(dir).unwrap() {
        let text = fs::read_to_string(e.unwrap().path()).unwrap();
        if let Ok(m) = parse_manifest(&text) {
            accepted += 1;
            let mut out = m.version.map(|v| format!("version {v}\n")).unwrap_or_default();
            for entry in &m.entries {
                out.push_str(entry);
                out.push('\n');
            }
            assert_eq!(parse_manifest(&out).unwrap(), m);
        }
    }
    assert!(accepted >= 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sampling_is_seed_deterministic(seed in any::<u64>(), n in 1u64..3000, jobs in 1usize..4) {
        let g = load_group("dihedral:4").unwrap();
        let a = monte_carlo_census(&g, Mode::Digraph, n, seed, Some(1)).unwrap().without_timing();
        let b = monte_carlo_census(&g, Mode::Digraph, n, seed, Some(jobs)).unwrap().without_timing();
        prop_assert_eq!(a, b);
    }
}
