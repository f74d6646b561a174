mod common;

use topaut_core::language::{Alphabet, Dfa, LanguageSpec};
use topaut_core::monoid::{recognizing_subset, syntactic_monoid, transition_monoid, FiniteMonoid};
use topaut_core::recognition::{
    check_morphism, forced_morphism, induced_hom, minimal_monoid_hom, minimization_morphism,
    verify_recognition, MorphismTarget,
};
use topaut_core::Error;

#[test]
fn random_trim_dfas_map_uniquely_onto_the_minimal_dfa() {
    let mut rng = common::rng(11);
    for alphabet in common::alphabets() {
        for _ in 0..50 {
            let d = common::random_trim_dfa(&mut rng, 8, &alphabet);
            let spec = LanguageSpec::dfa(d.clone());
            let phi = minimization_morphism(&d, &spec).unwrap();
            assert!(check_morphism(&phi).passed());
            assert_eq!(forced_morphism(&phi.source, &phi.target), Some(phi.map.clone()));
        }
    }
}

#[test]
fn single_entry_perturbations_are_detected() {
    let mut rng = common::rng(12);
    for alphabet in common::alphabets() {
        for _ in 0..30 {
            let d = common::random_trim_dfa(&mut rng, 6, &alphabet);
            let phi = minimization_morphism(&d, &LanguageSpec::dfa(d.clone())).unwrap();
            for y in 0..d.num_states() {
                for t in 0..phi.target.num_states() {
                    if t == phi.map[y] {
                        continue;
                    }
                    let mut bad = phi.clone();
                    bad.map[y] = t;
                    assert!(!check_morphism(&bad).passed(), "map[{y}] := {t} went unnoticed");
                }
            }
        }
    }
}

#[test]
fn induced_homomorphisms_commute_with_transition_maps() {
    let mut rng = common::rng(13);
    for alphabet in common::alphabets() {
        for _ in 0..25 {
            let d = common::random_trim_dfa(&mut rng, 6, &alphabet);
            let phi = minimization_morphism(&d, &LanguageSpec::dfa(d.clone())).unwrap();
            let psi = induced_hom(&phi).unwrap();
            assert!(psi.verify().is_empty());
            let MorphismTarget::Dfa(min) = &phi.target else { unreachable!() };
            for w in alphabet.words_up_to(6) {
                let source_elem = psi.source.evaluate(&w);
                let target_elem = psi.target.evaluate(&w);
                assert_eq!(psi.image(source_elem), Some(target_elem));
                // λ*(w) acts on the minimal DFA exactly as w does.
                for q in 0..min.num_states() {
                    assert_eq!(psi.target.element(target_elem).apply(q), min.run_from(q, &w));
                }
            }
        }
    }
}

#[test]
fn transition_monoids_map_onto_syntactic_monoids() {
    let mut rng = common::rng(14);
    for alphabet in common::alphabets() {
        for _ in 0..25 {
            let d = common::random_trim_dfa(&mut rng, 6, &alphabet);
            let spec = LanguageSpec::dfa(d.clone());
            let m = transition_monoid(&d).unwrap();
            let f = recognizing_subset(&d, &m);
            assert!(verify_recognition(&m, m.generators(), &f, &spec, 10).unwrap().passed());
            let psi = minimal_monoid_hom(&m, m.generators(), &f, &spec, 10).unwrap();
            assert!(psi.verify().is_empty());
            assert!(psi.ungenerated.is_empty());
            let eta = syntactic_monoid(&spec).unwrap();
            for w in alphabet.words_up_to(6) {
                assert_eq!(psi.image(m.evaluate(&w)), Some(eta.eta(&w)));
            }
        }
    }
}

#[test]
fn syntactic_monoid_maps_to_itself_by_the_identity() {
    for spec in common::regex_corpus() {
        let s = syntactic_monoid(&spec).unwrap();
        let psi =
            minimal_monoid_hom(&s.monoid, s.monoid.generators(), &s.accepting, &spec, 8).unwrap();
        let identity: Vec<Option<usize>> = (0..s.monoid.order()).map(Some).collect();
        assert_eq!(psi.map, identity);
    }
}

#[test]
fn non_recognizing_subsets_are_rejected() {
    let even = LanguageSpec::regex(Alphabet::new("a").unwrap(), "(aa)*").unwrap();
    let z3 = FiniteMonoid::cyclic_group(3);
    let report = verify_recognition(&z3, &[1], &[0], &even, 10).unwrap();
    assert_eq!(report.violations[0].word.as_str(), "aa");
    assert!(report.violations[0].in_language);
    assert!(matches!(
        minimal_monoid_hom(&z3, &[1], &[0], &even, 10),
        Err(Error::RecognitionMismatch { .. })
    ));
    let oracle = topaut_core::language::builtin_language("even_length", &[]).unwrap();
    assert!(matches!(
        minimal_monoid_hom(&FiniteMonoid::cyclic_group(2), &[1, 1], &[0], &oracle, 10),
        Err(Error::UnsupportedPresentation(_))
    ));
}

#[test]
fn approximate_targets_for_oracle_languages() {
    // A DFA for (ab)* checked against dyck1 up to a short bound would be a
    // mismatch; against even_length over {a,b} a two-state cycle matches.
    let ab = Alphabet::new("ab").unwrap();
    let cycle = Dfa::new(ab.clone(), 0, [0, 2], vec![vec![1, 1], vec![2, 2], vec![1, 1]]).unwrap();
    let spec = LanguageSpec::oracle(ab.clone(), "even_length", &[]).unwrap();
    let phi = minimization_morphism(&cycle, &spec).unwrap();
    assert_eq!(phi.map, vec![0, 1, 0]);
    assert!(check_morphism(&phi).passed());

    let dyck = LanguageSpec::oracle(ab.clone(), "dyck1", &[]).unwrap();
    let ab_star = LanguageSpec::regex(ab, "(ab)*").unwrap().minimal_dfa().unwrap();
    assert_eq!(
        minimization_morphism(&ab_star, &dyck).unwrap_err(),
        Error::RecognitionMismatch { witness: "aabb".into() }
    );
}
