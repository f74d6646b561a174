//! The structural maps of the minimal-automaton and minimal-monoid theory,
//! constructed and verified at finite scale:
//!
//! * the unique morphism from a trim automaton onto the minimal automaton
//!   of its language, sending finals exactly onto the accepting set;
//! * the surjective homomorphism of transition monoids induced by a
//!   surjective automaton morphism;
//! * the surjective homomorphism from any recognizing monoid onto the
//!   syntactic monoid.
//!
//! In the finite setting every subset is clopen and every map is
//! continuous, so the topological clauses hold vacuously. "Trim" means
//! every state is reachable, and "φ(A*) dense" means the monoid is generated
//! by the images of the letters.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::language::{Dfa, LanguageSpec, Word};
use crate::monoid::{syntactic_monoid, transition_monoid, FiniteMonoid};
use crate::topology::{nerode_classes, ApproxAutomaton, TruncatedPoint};

/// Default word-length bound for bounded language and recognition checks.
pub const DEFAULT_WORD_BOUND: usize = 12;

/// Codomain of an automaton morphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "automaton", rename_all = "snake_case")]
pub enum MorphismTarget {
    Dfa(Dfa),
    Approx(ApproxAutomaton),
}

impl MorphismTarget {
    pub fn num_states(&self) -> usize {
        match self {
            MorphismTarget::Dfa(d) => d.num_states(),
            MorphismTarget::Approx(a) => a.num_classes(),
        }
    }

    pub fn initial(&self) -> usize {
        match self {
            MorphismTarget::Dfa(d) => d.initial(),
            MorphismTarget::Approx(a) => a.initial(),
        }
    }

    pub fn step(&self, state: usize, symbol: usize) -> Option<usize> {
        match self {
            MorphismTarget::Dfa(d) => Some(d.step(state, symbol)),
            MorphismTarget::Approx(a) => a.transitions[state][symbol].target,
        }
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        match self {
            MorphismTarget::Dfa(d) => d.is_final(state),
            MorphismTarget::Approx(a) => a.is_accepting(state),
        }
    }
}

/// A state map from a DFA into a (possibly approximate) minimal automaton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonMorphism {
    pub source: Dfa,
    pub target: MorphismTarget,
    pub map: Vec<usize>,
}

impl AutomatonMorphism {
    /// Wraps a map without checking it; use [`check_morphism`] to verify.
    pub fn from_parts(source: Dfa, target: MorphismTarget, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.num_states() {
            return Err(Error::Input(format!(
                "map has {} entries for {} states",
                map.len(),
                source.num_states()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= target.num_states()) {
            return Err(Error::Input(format!("map image {bad} is not a target state")));
        }
        Ok(AutomatonMorphism { source, target, map })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// The initial state is not sent to the target's initial state.
    Initial,
    /// φ(y·a) ≠ φ(y)·a.
    Equivariance,
    /// A final state is sent outside the accepting set.
    FinalNotAccepting,
    /// A non-final state is sent into the accepting set.
    NonFinalAccepting,
    /// An accepting target state is not the image of any final state.
    AcceptingUncovered,
    /// A target state is not in the image.
    NotSurjective,
}

/// One failed condition, located by a witness word: the access word of the
/// offending source state (extended by the offending symbol for
/// equivariance), or the witness of an uncovered target state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismReport {
    pub violations: Vec<Violation>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

/// Verifies the initial-state condition, equivariance on every (state,
/// symbol), both inclusions of φ(F) = T_L, and surjectivity.
pub fn check_morphism(phi: &AutomatonMorphism) -> MorphismReport {
    let source = &phi.source;
    let alphabet = source.alphabet();
    let mut access: Vec<Option<Vec<usize>>> = vec![None; source.num_states()];
    for (q, w) in source.access_words() {
        access[q] = Some(w);
    }
    let access_of = |q: usize| -> Vec<usize> { access[q].clone().unwrap_or_default() };
    let mut violations = Vec::new();
    let mut push = |kind, letters: &[usize]| {
        violations.push(Violation { kind, witness: alphabet.decode(letters) });
    };

    if phi.map[source.initial()] != phi.target.initial() {
        push(ViolationKind::Initial, &[]);
    }
    for y in 0..source.num_states() {
        for a in 0..alphabet.len() {
            let expected = phi.target.step(phi.map[y], a);
            if expected != Some(phi.map[source.step(y, a)]) {
                let mut w = access_of(y);
                w.push(a);
                push(ViolationKind::Equivariance, &w);
            }
        }
    }
    for y in 0..source.num_states() {
        let accepting = phi.target.is_accepting(phi.map[y]);
        match (source.is_final(y), accepting) {
            (true, false) => push(ViolationKind::FinalNotAccepting, &access_of(y)),
            (false, true) => push(ViolationKind::NonFinalAccepting, &access_of(y)),
            _ => {}
        }
    }
    let target_witness = |t: usize| -> Word {
        match &phi.target {
            MorphismTarget::Dfa(d) => d
                .access_words()
                .into_iter()
                .find(|(q, _)| *q == t)
                .map(|(_, w)| d.alphabet().decode(&w))
                .unwrap_or_default(),
            MorphismTarget::Approx(a) => a.witnesses[t].clone(),
        }
    };
    for t in 0..phi.target.num_states() {
        let preimage: Vec<usize> = (0..source.num_states()).filter(|&y| phi.map[y] == t).collect();
        if preimage.is_empty() {
            violations.push(Violation { kind: ViolationKind::NotSurjective, witness: target_witness(t) });
        }
        if phi.target.is_accepting(t) && !preimage.iter().any(|&y| source.is_final(y)) {
            violations
                .push(Violation { kind: ViolationKind::AcceptingUncovered, witness: target_witness(t) });
        }
    }
    MorphismReport { violations }
}

/// The morphism forced by equivariance: φ(y₀) = target initial, propagated
/// along transitions. `None` if propagation hits a conflict or an undefined
/// target transition.
pub fn forced_morphism(source: &Dfa, target: &MorphismTarget) -> Option<Vec<usize>> {
    let mut map = vec![None; source.num_states()];
    map[source.initial()] = Some(target.initial());
    let mut queue = VecDeque::from([source.initial()]);
    while let Some(y) = queue.pop_front() {
        let image = map[y]?;
        for a in 0..source.alphabet().len() {
            let next = source.step(y, a);
            let t = target.step(image, a)?;
            match map[next] {
                None => {
                    map[next] = Some(t);
                    queue.push_back(next);
                }
                Some(existing) if existing != t => return None,
                Some(_) => {}
            }
        }
    }
    map.into_iter().collect()
}

/// Checks L(dfa) = L(spec): exactly for rational specs, else on all words
/// of length ≤ `bound`. Returns the first distinguishing word.
pub fn language_difference(dfa: &Dfa, spec: &LanguageSpec, bound: usize) -> Result<Option<Word>> {
    if dfa.alphabet() != spec.alphabet() {
        return Err(Error::Input("automaton and language use different alphabets".into()));
    }
    if spec.is_rational() {
        let min = spec.minimal_dfa()?;
        return Ok(dfa.find_difference(&min).map(|w| dfa.alphabet().decode(&w)));
    }
    Ok(dfa
        .alphabet()
        .words_up_to(bound)
        .find(|w| dfa.accepts(w) != spec.contains(w))
        .map(|w| dfa.alphabet().decode(&w)))
}

/// Parameters for [`minimization_morphism_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismOptions {
    /// Word bound for the language check against oracle specs.
    pub bound: usize,
    /// Truncation depth of the approximate target for oracle specs.
    pub depth: usize,
    /// Enumeration horizon of the approximate target for oracle specs.
    pub horizon: usize,
}

impl Default for MorphismOptions {
    fn default() -> Self {
        MorphismOptions { bound: DEFAULT_WORD_BOUND, depth: 3, horizon: 8 }
    }
}

pub fn minimization_morphism(dfa: &Dfa, spec: &LanguageSpec) -> Result<AutomatonMorphism> {
    minimization_morphism_with(dfa, spec, MorphismOptions::default())
}

/// The morphism y ↦ (u ↦ χ_F(y·u)) from a trim DFA accepting L onto the
/// minimal automaton of L.
///
/// For rational specs the target is the minimal DFA and y is sent to the
/// state with the same residual language (decided exactly). For oracle
/// specs the target is the depth-d quotient and y is sent to the class of
/// its depth-d residual truncation.
pub fn minimization_morphism_with(
    dfa: &Dfa,
    spec: &LanguageSpec,
    options: MorphismOptions,
) -> Result<AutomatonMorphism> {
    if let Some(state) = dfa.unreachable_state() {
        return Err(Error::NotTrim { state });
    }
    if let Some(witness) = language_difference(dfa, spec, options.bound)? {
        return Err(Error::RecognitionMismatch { witness: witness.as_str().to_string() });
    }
    if spec.is_rational() {
        let min = spec.minimal_dfa()?;
        let map = (0..dfa.num_states())
            .map(|y| {
                (0..min.num_states())
                    .find(|&t| dfa.difference_from(y, &min, t).is_none())
                    .expect("equal languages give every residual a minimal state")
            })
            .collect();
        return AutomatonMorphism::from_parts(dfa.clone(), MorphismTarget::Dfa(min), map);
    }

    let horizon = options.horizon.max(options.depth).max(dfa.num_states());
    let approx = nerode_classes(spec, options.depth, horizon)?;
    let arity = dfa.alphabet().len();
    let map = (0..dfa.num_states())
        .map(|y| {
            let bits = dfa
                .alphabet()
                .words_up_to(options.depth)
                .map(|u| dfa.is_final(dfa.run_from(y, &u)))
                .collect();
            let point = TruncatedPoint::new(arity, options.depth, bits)?;
            approx.class_of_point(&point).ok_or_else(|| {
                Error::Input(format!("residual of state {y} lies outside the enumerated classes"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    AutomatonMorphism::from_parts(dfa.clone(), MorphismTarget::Approx(approx), map)
}

/// A homomorphism between finite monoids, possibly defined only on the
/// submonoid generated by the letter images (`None` elsewhere).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidHom {
    pub source: FiniteMonoid,
    pub target: FiniteMonoid,
    pub map: Vec<Option<usize>>,
    /// Source elements outside the generated submonoid.
    pub ungenerated: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomViolationKind {
    Identity,
    Multiplicative,
    NotSurjective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomViolation {
    pub kind: HomViolationKind,
    /// Source elements involved (one or two), or the missed target element.
    pub elements: Vec<usize>,
}

impl MonoidHom {
    pub fn image(&self, element: usize) -> Option<usize> {
        self.map[element]
    }

    /// Identity, multiplicativity on the defined part, and surjectivity.
    pub fn verify(&self) -> Vec<HomViolation> {
        let mut violations = Vec::new();
        if self.map[self.source.identity()] != Some(self.target.identity()) {
            violations.push(HomViolation { kind: HomViolationKind::Identity, elements: vec![0] });
        }
        for s in 0..self.source.order() {
            for t in 0..self.source.order() {
                if let (Some(ps), Some(pt)) = (self.map[s], self.map[t]) {
                    let st = self.source.multiply(s, t);
                    if self.map[st] != Some(self.target.multiply(ps, pt)) {
                        violations.push(HomViolation {
                            kind: HomViolationKind::Multiplicative,
                            elements: vec![s, t],
                        });
                    }
                }
            }
        }
        let mut hit = vec![false; self.target.order()];
        for m in self.map.iter().flatten() {
            hit[*m] = true;
        }
        for (t, _) in hit.iter().enumerate().filter(|(_, &h)| !h) {
            violations.push(HomViolation { kind: HomViolationKind::NotSurjective, elements: vec![t] });
        }
        violations
    }

    pub fn is_surjective(&self) -> bool {
        !self.verify().iter().any(|v| v.kind == HomViolationKind::NotSurjective)
    }
}

/// Simultaneous BFS over pairs (φ(w), η(w)); defines ψ(φ(w)) = η(w) and
/// fails with a witness pair if that is not a function.
fn pair_closure(
    source: &FiniteMonoid,
    source_gens: &[usize],
    target: &FiniteMonoid,
    target_gens: &[usize],
    alphabet: &crate::language::Alphabet,
) -> Result<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; source.order()];
    let mut word_of: HashMap<usize, Vec<usize>> = HashMap::new();
    map[source.identity()] = Some(target.identity());
    word_of.insert(source.identity(), Vec::new());
    let mut seen = std::collections::HashSet::from([(source.identity(), target.identity())]);
    let mut queue = VecDeque::from([(source.identity(), target.identity(), Vec::new())]);
    while let Some((s, t, w)) = queue.pop_front() {
        for a in 0..alphabet.len() {
            let ns = source.multiply(s, source_gens[a]);
            let nt = target.multiply(t, target_gens[a]);
            let mut nw = w.clone();
            nw.push(a);
            match map[ns] {
                Some(existing) if existing != nt => {
                    return Err(Error::IllDefined {
                        left: alphabet.decode(&word_of[&ns]).as_str().to_string(),
                        right: alphabet.decode(&nw).as_str().to_string(),
                    });
                }
                Some(_) => {}
                None => {
                    map[ns] = Some(nt);
                    word_of.insert(ns, nw.clone());
                }
            }
            if seen.insert((ns, nt)) {
                queue.push_back((ns, nt, nw));
            }
        }
    }
    Ok(map)
}

/// ψ: M(source) → M(target) with ψ(δ*(w)) = λ*(w), induced by a surjective
/// morphism of DFAs.
pub fn induced_hom(phi: &AutomatonMorphism) -> Result<MonoidHom> {
    let MorphismTarget::Dfa(target_dfa) = &phi.target else {
        return Err(Error::UnsupportedPresentation(
            "induced homomorphisms need a finite automaton as target".into(),
        ));
    };
    let report = check_morphism(phi);
    if report.has(ViolationKind::Equivariance) || report.has(ViolationKind::NotSurjective) {
        return Err(Error::Input("morphism must be equivariant and surjective".into()));
    }
    let source = transition_monoid(&phi.source)?;
    let target = transition_monoid(target_dfa)?;
    let map = pair_closure(&source, source.generators(), &target, target.generators(), source.alphabet())?;
    debug_assert!(map.iter().all(Option::is_some), "transition monoids are generated");
    Ok(MonoidHom { source, target, map, ungenerated: Vec::new() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionViolation {
    pub word: Word,
    pub in_language: bool,
    pub image: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    pub bound: usize,
    pub violations: Vec<RecognitionViolation>,
}

impl RecognitionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_images(monoid: &FiniteMonoid, gen_images: &[usize], spec: &LanguageSpec) -> Result<()> {
    if gen_images.len() != spec.alphabet().len() {
        return Err(Error::Input(format!(
            "expected {} generator images, got {}",
            spec.alphabet().len(),
            gen_images.len()
        )));
    }
    if let Some(&bad) = gen_images.iter().find(|&&m| m >= monoid.order()) {
        return Err(Error::Input(format!("generator image {bad} is not an element")));
    }
    Ok(())
}

/// Checks φ(w) ∈ F ⟺ w ∈ L for all |w| ≤ `bound`, where φ sends each
/// letter to its image in `gen_images`. Every subset of a finite monoid is
/// clopen, so F needs no further condition.
pub fn verify_recognition(
    monoid: &FiniteMonoid,
    gen_images: &[usize],
    accepting: &[usize],
    spec: &LanguageSpec,
    bound: usize,
) -> Result<RecognitionReport> {
    check_images(monoid, gen_images, spec)?;
    let k = spec.alphabet().len();
    let mut images: Vec<usize> = Vec::with_capacity(spec.alphabet().count_up_to(bound));
    let mut violations = Vec::new();
    for w in spec.alphabet().words_up_to(bound) {
        let image = match w.split_last() {
            None => monoid.identity(),
            Some((&a, prefix)) => {
                let parent = images[crate::language::length_lex_rank(k, prefix)];
                monoid.multiply(parent, gen_images[a])
            }
        };
        images.push(image);
        let in_language = spec.contains(&w);
        if accepting.contains(&image) != in_language {
            violations.push(RecognitionViolation {
                word: spec.alphabet().decode(&w),
                in_language,
                image,
            });
        }
    }
    Ok(RecognitionReport { bound, violations })
}

/// ψ: M → M_L with ψ∘φ = η, for φ recognizing a rational L through F.
///
/// Elements of M outside the submonoid generated by `gen_images` are left
/// unmapped and listed in [`MonoidHom::ungenerated`].
pub fn minimal_monoid_hom(
    monoid: &FiniteMonoid,
    gen_images: &[usize],
    accepting: &[usize],
    spec: &LanguageSpec,
    bound: usize,
) -> Result<MonoidHom> {
    let syntactic = syntactic_monoid(spec)?;
    let report = verify_recognition(monoid, gen_images, accepting, spec, bound)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::RecognitionMismatch { witness: v.word.as_str().to_string() });
    }
    let map = pair_closure(
        monoid,
        gen_images,
        &syntactic.monoid,
        syntactic.monoid.generators(),
        spec.alphabet(),
    )?;
    let ungenerated = (0..monoid.order()).filter(|&m| map[m].is_none()).collect();
    Ok(MonoidHom { source: monoid.clone(), target: syntactic.monoid, map, ungenerated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::{builtin_language, Alphabet};

    fn unary() -> Alphabet {
        Alphabet::new("a").unwrap()
    }

    fn even() -> LanguageSpec {
        LanguageSpec::regex(unary(), "(aa)*").unwrap()
    }

    fn chain() -> Dfa {
        Dfa::new(unary(), 0, [0, 2], vec![vec![1], vec![2], vec![1]]).unwrap()
    }

    fn four_cycle() -> Dfa {
        Dfa::new(unary(), 0, [0, 2], vec![vec![1], vec![2], vec![3], vec![0]]).unwrap()
    }

    #[test]
    fn chain_morphism() {
        let phi = minimization_morphism(&chain(), &even()).unwrap();
        assert_eq!(phi.map, vec![0, 1, 0]);
        assert!(check_morphism(&phi).passed());
        assert_eq!(forced_morphism(&phi.source, &phi.target), Some(phi.map.clone()));
    }

    #[test]
    fn minimal_dfa_maps_bijectively() {
        let min = even().minimal_dfa().unwrap();
        let phi = minimization_morphism(&min, &even()).unwrap();
        assert_eq!(phi.map, vec![0, 1]);
    }

    #[test]
    fn precondition_errors() {
        let untrim = Dfa::new(unary(), 0, [0, 2], vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(
            minimization_morphism(&untrim, &even()).unwrap_err(),
            Error::NotTrim { state: 1 }
        );
        let odd = Dfa::new(unary(), 0, [1], vec![vec![1], vec![0]]).unwrap();
        assert_eq!(
            minimization_morphism(&odd, &even()).unwrap_err(),
            Error::RecognitionMismatch { witness: String::new() }
        );
    }

    #[test]
    fn perturbations_are_reported() {
        let phi = minimization_morphism(&chain(), &even()).unwrap();
        let mut swapped = phi.clone();
        swapped.map.swap(1, 2);
        let report = check_morphism(&swapped);
        assert!(report.has(ViolationKind::Equivariance));

        let finals_moved =
            Dfa::new(unary(), 0, [0, 1], vec![vec![1], vec![2], vec![1]]).unwrap();
        let bad = AutomatonMorphism::from_parts(finals_moved, phi.target.clone(), phi.map.clone())
            .unwrap();
        let report = check_morphism(&bad);
        assert!(!report.has(ViolationKind::Equivariance));
        assert!(report.has(ViolationKind::FinalNotAccepting));
        assert!(report.has(ViolationKind::NonFinalAccepting));
    }

    #[test]
    fn oracle_target_uses_depth_classes() {
        // Over {a,b}, a DFA for "even length" against the builtin oracle.
        let ab = Alphabet::new("ab").unwrap();
        let dfa = Dfa::new(ab.clone(), 0, [0], vec![vec![1, 1], vec![0, 0]]).unwrap();
        let spec = LanguageSpec::oracle(ab, "even_length", &[]).unwrap();
        let phi = minimization_morphism(&dfa, &spec).unwrap();
        assert!(matches!(phi.target, MorphismTarget::Approx(_)));
        assert_eq!(phi.map, vec![0, 1]);
        assert!(check_morphism(&phi).passed());

        let anbn = builtin_language("anbn", &[]).unwrap();
        assert!(matches!(
            minimization_morphism(&dfa, &anbn),
            Err(Error::RecognitionMismatch { .. })
        ));
    }

    #[test]
    fn chain_induces_reduction() {
        let phi = minimization_morphism(&chain(), &even()).unwrap();
        let psi = induced_hom(&phi).unwrap();
        assert_eq!(psi.source.order(), 3);
        assert_eq!(psi.target.order(), 2);
        // source: 0 = 1, 1 = a, 2 = a²; target: 0 = id, 1 = swap.
        assert_eq!(psi.map, vec![Some(0), Some(1), Some(0)]);
        assert!(psi.verify().is_empty());
    }

    #[test]
    fn four_cycle_induces_z4_to_z2() {
        let phi = minimization_morphism(&four_cycle(), &even()).unwrap();
        let psi = induced_hom(&phi).unwrap();
        assert_eq!(psi.source.order(), 4);
        assert_eq!(psi.map, vec![Some(0), Some(1), Some(0), Some(1)]);
        assert!(psi.verify().is_empty());
    }

    #[test]
    fn recognition_desk_values() {
        let z2 = FiniteMonoid::cyclic_group(2);
        assert!(verify_recognition(&z2, &[1], &[0], &even(), 10).unwrap().passed());
        let bad = verify_recognition(&z2, &[1], &[1], &even(), 10).unwrap();
        assert_eq!(bad.violations[0].word, Word::empty());

        let trivial = FiniteMonoid::cyclic_group(1);
        let empty = LanguageSpec::empty(unary());
        assert!(verify_recognition(&trivial, &[0], &[], &empty, 10).unwrap().passed());
    }

    #[test]
    fn minimal_hom_desk_values() {
        let z4 = FiniteMonoid::cyclic_group(4);
        let psi = minimal_monoid_hom(&z4, &[1], &[0, 2], &even(), 12).unwrap();
        assert_eq!(psi.map, vec![Some(0), Some(1), Some(0), Some(1)]);
        assert!(psi.verify().is_empty());

        let z3 = FiniteMonoid::cyclic_group(3);
        assert_eq!(
            minimal_monoid_hom(&z3, &[1], &[0], &even(), 12).unwrap_err(),
            Error::RecognitionMismatch { witness: "aa".into() }
        );
    }

    #[test]
    fn ungenerated_part_is_reported() {
        // a ↦ g² only reaches {0, 2} in ℤ/4.
        let z4 = FiniteMonoid::cyclic_group(4);
        let spec = LanguageSpec::regex(unary(), "(aa)*|a(aa)*").unwrap();
        let psi = minimal_monoid_hom(&z4, &[2], &[0, 2], &spec, 12).unwrap();
        assert_eq!(psi.ungenerated, vec![1, 3]);
        assert_eq!(psi.map[0], Some(0));
    }
}
