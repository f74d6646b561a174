mod common;

use std::collections::HashSet;

use common::{chi, strings};
use topaut_core::language::{builtin_language, Alphabet, LanguageSpec, Word};
use topaut_core::topology::{
    nerode_classes, orbit_closure_report, point_transition, refinement_map, residual_truncation,
    stabilization_check, StabilizationVerdict,
};

/// Number of distinct tables u ↦ χ_L(wu), |u| ≤ depth, over |w| ≤ horizon,
/// computed on plain strings.
fn brute_force_class_count(spec: &LanguageSpec, depth: usize, horizon: usize) -> usize {
    let suffixes = strings(spec.alphabet(), depth);
    strings(spec.alphabet(), horizon)
        .iter()
        .map(|w| suffixes.iter().map(|u| chi(spec, &format!("{w}{u}"))).collect::<Vec<_>>())
        .collect::<HashSet<_>>()
        .len()
}

fn specs() -> Vec<LanguageSpec> {
    let mut v = common::regex_corpus();
    v.push(builtin_language("anbn", &[]).unwrap());
    v.push(builtin_language("dyck1", &[]).unwrap());
    v.push(builtin_language("unary_powers_of_two", &[]).unwrap());
    v.push(builtin_language("champernowne_unary", &[]).unwrap());
    v
}

#[test]
fn anbn_class_counts_match_brute_force() {
    let anbn = builtin_language("anbn", &[]).unwrap();
    // Frozen from the string oracle: 2d + 1 classes (a^k with k ≤ d−2,
    // pending-b residuals {b^m} for m ≤ d, and the dead class).
    let expected = [3, 5, 7, 9, 11, 13];
    for (d, &count) in (1..=6).zip(&expected) {
        let horizon = d + 4;
        assert_eq!(brute_force_class_count(&anbn, d, horizon), count, "oracle at depth {d}");
        assert_eq!(nerode_classes(&anbn, d, horizon).unwrap().num_classes(), count, "depth {d}");
    }
}

#[test]
fn desk_class_counts() {
    let anbn = builtin_language("anbn", &[]).unwrap();
    assert_eq!(nerode_classes(&anbn, 1, 4).unwrap().num_classes(), 3);
    assert_eq!(nerode_classes(&anbn, 2, 6).unwrap().num_classes(), 5);
    let even = LanguageSpec::regex(Alphabet::new("a").unwrap(), "(aa)*").unwrap();
    assert_eq!(nerode_classes(&even, 1, 4).unwrap().num_classes(), 2);
}

#[test]
fn anbn_is_growing() {
    let anbn = builtin_language("anbn", &[]).unwrap();
    assert_eq!(
        stabilization_check(&anbn, 3, 8).unwrap(),
        StabilizationVerdict::Growing { counts: vec![7, 9] }
    );
}

#[test]
fn class_counts_match_brute_force_across_corpus() {
    for spec in specs() {
        for d in 0..=3 {
            let h = d + 3;
            assert_eq!(
                nerode_classes(&spec, d, h).unwrap().num_classes(),
                brute_force_class_count(&spec, d, h),
                "{}",
                spec.to_spec_text()
            );
        }
    }
}

#[test]
fn action_compatibility() {
    for spec in specs() {
        let k = spec.alphabet().len();
        for w in strings(spec.alphabet(), if k == 1 { 6 } else { 5 }) {
            for d in 1..=4 {
                let p = residual_truncation(&spec, &Word::new(w.clone()), d).unwrap();
                for (a, c) in spec.alphabet().symbols().iter().enumerate() {
                    let wa = Word::new(format!("{w}{c}"));
                    assert_eq!(
                        point_transition(&p, a).unwrap(),
                        residual_truncation(&spec, &wa, d - 1).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn residual_tables_agree_with_membership() {
    let anbn = builtin_language("anbn", &[]).unwrap();
    for w in strings(anbn.alphabet(), 4) {
        let p = residual_truncation(&anbn, &Word::new(w.clone()), 3).unwrap();
        for (i, u) in strings(anbn.alphabet(), 3).iter().enumerate() {
            assert_eq!(p.bits()[i], chi(&anbn, &format!("{w}{u}")));
        }
        // Depth 0 is the acceptance test x₀w ∈ T.
        let p0 = residual_truncation(&anbn, &Word::new(w.clone()), 0).unwrap();
        assert_eq!(p0.at_empty(), chi(&anbn, &w));
    }
}

#[test]
fn accepting_classes_are_those_set_at_epsilon() {
    for spec in specs() {
        let a = nerode_classes(&spec, 2, 5).unwrap();
        let expected: Vec<usize> = (0..a.num_classes()).filter(|&c| a.classes[c].at_empty()).collect();
        assert_eq!(a.accepting, expected);
        for (c, w) in a.witnesses.iter().enumerate() {
            assert_eq!(residual_truncation(&spec, w, 2).unwrap(), a.classes[c]);
        }
    }
}

#[test]
fn deeper_partitions_refine_shallower_ones() {
    for spec in specs() {
        let h = if spec.is_unary() { 12 } else { 7 };
        for d in 0..5 {
            let coarse = nerode_classes(&spec, d, h).unwrap();
            let fine = nerode_classes(&spec, d + 1, h).unwrap();
            let map = refinement_map(&fine, &coarse).expect("restrictions are classes");
            // Word-by-word: equal fine classes imply equal coarse classes.
            for w in strings(spec.alphabet(), h) {
                let w = Word::new(w);
                let f = fine.class_of_point(&residual_truncation(&spec, &w, d + 1).unwrap()).unwrap();
                let c = coarse.class_of_point(&residual_truncation(&spec, &w, d).unwrap()).unwrap();
                assert_eq!(map[f], c);
            }
        }
    }
}

#[test]
fn rational_specs_stabilize_to_the_minimal_dfa() {
    for spec in common::regex_corpus() {
        let min = spec.minimal_dfa().unwrap();
        let n = min.num_states();
        let verdict = stabilization_check(&spec, n - 1, n + 1).unwrap();
        match verdict {
            StabilizationVerdict::Stabilized { classes, quotient } => {
                assert_eq!(classes, n);
                assert!(quotient.is_isomorphic(&min));
            }
            other => panic!("{}: {other:?}", spec.to_spec_text()),
        }
    }
}

#[test]
fn closure_evidence_is_monotone_in_horizon() {
    for spec in specs() {
        let mut previous: Vec<(String, usize)> = Vec::new();
        for h in 2..8 {
            let r = orbit_closure_report(&spec, 2, h).unwrap();
            let total: usize = r.patterns.iter().map(|p| p.occurrences).sum();
            assert_eq!(total, r.words_enumerated);
            assert_eq!(total, spec.alphabet().count_up_to(h));
            let now: Vec<(String, usize)> =
                r.patterns.iter().map(|p| (p.point.bit_string(), p.occurrences)).collect();
            for (pattern, count) in &previous {
                let later = now.iter().find(|(p, _)| p == pattern).map(|(_, c)| *c).unwrap();
                assert!(later >= *count);
            }
            previous = now;
        }
    }
}
