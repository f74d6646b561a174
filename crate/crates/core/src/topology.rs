//! Finite-depth shadows of the Cantor space {0,1}^{A*}, the orbit of χ_L
//! under the right action `(f·a)(w) = f(aw)`, and its closure.
//!
//! A point is only ever seen through its restriction to words of length at
//! most `d`. Two words are identified at depth `d` when their residuals
//! agree on all such words. This identification is not a right congruence,
//! so quotient transitions are computed from shortest witnesses and then
//! cross-checked against every enumerated member of the class.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::language::{count_up_to, length_lex_rank, Alphabet, Dfa, LanguageSpec, Word};

/// Restriction of a point of {0,1}^{A*} to words of length ≤ `depth`,
/// stored in length-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedPoint {
    arity: usize,
    depth: usize,
    bits: Vec<bool>,
}

impl TruncatedPoint {
    pub fn new(arity: usize, depth: usize, bits: Vec<bool>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Input("alphabet size must be at least 1".into()));
        }
        let expected = count_up_to(arity, depth);
        if bits.len() != expected {
            return Err(Error::Input(format!(
                "depth-{depth} table over {arity} symbols needs {expected} bits, got {}",
                bits.len()
            )));
        }
        Ok(TruncatedPoint { arity, depth, bits })
    }

    pub fn zero(arity: usize, depth: usize) -> Self {
        TruncatedPoint { arity, depth, bits: vec![false; count_up_to(arity, depth)] }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// f(u) for a word given as symbol indices, |u| ≤ depth.
    pub fn value(&self, letters: &[usize]) -> bool {
        assert!(letters.len() <= self.depth, "word longer than the truncation depth");
        self.bits[length_lex_rank(self.arity, letters)]
    }

    /// The bit at ε; the point lies in the accepting clopen iff it is set.
    pub fn at_empty(&self) -> bool {
        self.bits[0]
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    /// Restriction to a smaller depth.
    pub fn restrict(&self, depth: usize) -> TruncatedPoint {
        assert!(depth <= self.depth);
        TruncatedPoint {
            arity: self.arity,
            depth,
            bits: self.bits[..count_up_to(self.arity, depth)].to_vec(),
        }
    }

    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct TruncatedPointRepr {
    arity: usize,
    depth: usize,
    bits: String,
}

impl Serialize for TruncatedPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TruncatedPointRepr { arity: self.arity, depth: self.depth, bits: self.bit_string() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TruncatedPointRepr::deserialize(d)?;
        let bits = repr
            .bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(serde::de::Error::custom(format!("invalid bit {other:?}"))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        TruncatedPoint::new(repr.arity, repr.depth, bits).map_err(serde::de::Error::custom)
    }
}

/// Depth-`depth` truncation of the residual χ_L·w, from symbol indices.
pub(crate) fn residual_bits(spec: &LanguageSpec, word: &[usize], depth: usize) -> TruncatedPoint {
    let arity = spec.alphabet().len();
    let mut buf = word.to_vec();
    let bits = spec
        .alphabet()
        .words_up_to(depth)
        .map(|u| {
            buf.truncate(word.len());
            buf.extend_from_slice(&u);
            spec.contains(&buf)
        })
        .collect();
    TruncatedPoint { arity, depth, bits }
}

/// Depth-`depth` truncation of χ_L·w: the table u ↦ χ_L(wu) for |u| ≤ depth.
pub fn residual_truncation(spec: &LanguageSpec, word: &Word, depth: usize) -> Result<TruncatedPoint> {
    let letters = spec.alphabet().encode(word)?;
    Ok(residual_bits(spec, &letters, depth))
}

/// (f·a)(w) = f(aw), losing one level of depth.
pub fn point_transition(point: &TruncatedPoint, symbol: usize) -> Result<TruncatedPoint> {
    if point.depth == 0 {
        return Err(Error::DepthExhausted);
    }
    if symbol >= point.arity {
        return Err(Error::Input(format!("symbol index {symbol} out of range")));
    }
    let depth = point.depth - 1;
    let mut buf = vec![symbol];
    let bits = crate::language::LengthLex::new(point.arity, depth)
        .map(|u| {
            buf.truncate(1);
            buf.extend_from_slice(&u);
            point.value(&buf)
        })
        .collect();
    Ok(TruncatedPoint { arity: point.arity, depth, bits })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransitionStatus {
    /// Every enumerated member of the source class moves to the target class.
    Consistent,
    /// Members disagree, or no member could be checked inside the horizon.
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxTransition {
    /// `None` when the witness successor falls outside every enumerated class.
    pub target: Option<usize>,
    pub status: TransitionStatus,
}

/// Depth-d quotient of the orbit χ_L·A* (words up to `horizon`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxAutomaton {
    pub alphabet: Alphabet,
    pub depth: usize,
    pub horizon: usize,
    pub classes: Vec<TruncatedPoint>,
    pub witnesses: Vec<Word>,
    pub transitions: Vec<Vec<ApproxTransition>>,
    pub accepting: Vec<usize>,
}

impl ApproxAutomaton {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// The class of ε.
    pub fn initial(&self) -> usize {
        0
    }

    pub fn is_accepting(&self, class: usize) -> bool {
        self.classes[class].at_empty()
    }

    pub fn all_consistent(&self) -> bool {
        self.transitions.iter().flatten().all(|t| {
            t.target.is_some() && t.status == TransitionStatus::Consistent
        })
    }

    pub fn class_of_point(&self, point: &TruncatedPoint) -> Option<usize> {
        self.classes.iter().position(|c| c == point)
    }

    /// The quotient as a DFA, when every transition is present and consistent.
    pub fn to_dfa(&self) -> Option<Dfa> {
        if !self.all_consistent() {
            return None;
        }
        let rows = self
            .transitions
            .iter()
            .map(|row| row.iter().map(|t| t.target.unwrap()).collect())
            .collect();
        Dfa::new(self.alphabet.clone(), 0, self.accepting.iter().copied(), rows).ok()
    }
}

/// Per-word depth-d class assignment over all words up to a horizon.
struct Enumeration {
    classes: Vec<TruncatedPoint>,
    witnesses: Vec<Vec<usize>>,
    /// Class of every enumerated word, indexed by length-lex rank.
    class_of: Vec<usize>,
    /// Number of enumerated words per class, and shortest/longest witness length.
    stats: Vec<(usize, usize, usize)>,
}

fn enumerate(spec: &LanguageSpec, depth: usize, horizon: usize) -> Enumeration {
    let mut index: HashMap<TruncatedPoint, usize> = HashMap::new();
    let mut classes = Vec::new();
    let mut witnesses = Vec::new();
    let mut class_of = Vec::with_capacity(spec.alphabet().count_up_to(horizon));
    let mut stats: Vec<(usize, usize, usize)> = Vec::new();
    for w in spec.alphabet().words_up_to(horizon) {
        let point = residual_bits(spec, &w, depth);
        let id = match index.get(&point) {
            Some(&id) => id,
            None => {
                let id = classes.len();
                index.insert(point.clone(), id);
                classes.push(point);
                witnesses.push(w.clone());
                stats.push((0, w.len(), w.len()));
                id
            }
        };
        stats[id].0 += 1;
        stats[id].2 = w.len();
        class_of.push(id);
    }
    Enumeration { classes, witnesses, class_of, stats }
}

fn check_horizon(depth: usize, horizon: usize, min_gap: usize) -> Result<()> {
    if horizon < depth + min_gap {
        return Err(Error::Input(format!(
            "horizon {horizon} must be at least depth + {min_gap} = {}",
            depth + min_gap
        )));
    }
    Ok(())
}

/// Depth-`depth` indistinguishability classes of all residuals χ_L·w with
/// |w| ≤ `horizon`, with witness-derived transitions.
pub fn nerode_classes(spec: &LanguageSpec, depth: usize, horizon: usize) -> Result<ApproxAutomaton> {
    check_horizon(depth, horizon, 0)?;
    let k = spec.alphabet().len();
    let en = enumerate(spec, depth, horizon);
    let lookup: HashMap<&TruncatedPoint, usize> =
        en.classes.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let mut transitions = Vec::with_capacity(en.classes.len());
    for witness in &en.witnesses {
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let mut wa = witness.clone();
            wa.push(a);
            let target = if wa.len() <= horizon {
                Some(en.class_of[length_lex_rank(k, &wa)])
            } else {
                lookup.get(&residual_bits(spec, &wa, depth)).copied()
            };
            row.push(ApproxTransition { target, status: TransitionStatus::Consistent });
        }
        transitions.push(row);
    }

    // Cross-check: every member u with ua still enumerated must agree.
    let mut checked = vec![vec![false; k]; en.classes.len()];
    for u in spec.alphabet().words_up_to(horizon.saturating_sub(1)) {
        if horizon == 0 {
            break;
        }
        let c = en.class_of[length_lex_rank(k, &u)];
        let mut ua = u;
        for a in 0..k {
            ua.push(a);
            let target = en.class_of[length_lex_rank(k, &ua)];
            ua.pop();
            checked[c][a] = true;
            if transitions[c][a].target != Some(target) {
                transitions[c][a].status = TransitionStatus::Unverified;
            }
        }
    }
    for (c, row) in transitions.iter_mut().enumerate() {
        for (a, t) in row.iter_mut().enumerate() {
            if !checked[c][a] || t.target.is_none() {
                t.status = TransitionStatus::Unverified;
            }
        }
    }

    let accepting = en.classes.iter().enumerate().filter(|(_, p)| p.at_empty()).map(|(i, _)| i).collect();
    Ok(ApproxAutomaton {
        alphabet: spec.alphabet().clone(),
        depth,
        horizon,
        witnesses: en.witnesses.iter().map(|w| spec.alphabet().decode(w)).collect(),
        classes: en.classes,
        transitions,
        accepting,
    })
}

/// Maps each class of `finer` to the class of `coarser` containing its
/// restriction. `None` if some restriction is not a class of `coarser`.
pub fn refinement_map(finer: &ApproxAutomaton, coarser: &ApproxAutomaton) -> Option<Vec<usize>> {
    if finer.depth < coarser.depth {
        return None;
    }
    finer
        .classes
        .iter()
        .map(|p| coarser.class_of_point(&p.restrict(coarser.depth)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum StabilizationVerdict {
    /// Depths d and d+1 give the same classes and a consistent quotient.
    Stabilized { classes: usize, quotient: Dfa },
    /// Class counts at depths d and d+1, or an inconsistent quotient.
    Growing { counts: Vec<usize> },
}

/// Heuristic test of whether the depth tower has collapsed at `depth`.
///
/// A stabilized verdict is exact only when the language is known to be
/// rational; for other languages it is evidence, not proof.
pub fn stabilization_check(
    spec: &LanguageSpec,
    depth: usize,
    horizon: usize,
) -> Result<StabilizationVerdict> {
    check_horizon(depth, horizon, 1)?;
    let coarse = nerode_classes(spec, depth, horizon)?;
    let fine = nerode_classes(spec, depth + 1, horizon)?;
    let counts = vec![coarse.num_classes(), fine.num_classes()];
    let bijective = counts[0] == counts[1]
        && refinement_map(&fine, &coarse).is_some_and(|m| {
            let mut seen = vec![false; counts[0]];
            m.iter().all(|&c| !std::mem::replace(&mut seen[c], true))
        });
    match coarse.to_dfa() {
        Some(quotient) if bijective => {
            Ok(StabilizationVerdict::Stabilized { classes: counts[0], quotient })
        }
        _ => Ok(StabilizationVerdict::Growing { counts }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternStat {
    pub point: TruncatedPoint,
    pub first_witness_len: usize,
    pub last_witness_len: usize,
    pub occurrences: usize,
    /// Witnessed by some word longer than half the horizon.
    pub recurrent: bool,
}

/// Finite evidence about which depth-d patterns lie in the orbit closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub depth: usize,
    pub horizon: usize,
    pub words_enumerated: usize,
    pub patterns: Vec<PatternStat>,
}

/// Buckets the depth-d truncations of all χ_L·w with |w| ≤ `horizon`.
///
/// A pattern is called recurrent when it is still witnessed in the top half
/// of the horizon, a finite proxy for being a limit point of the orbit.
pub fn orbit_closure_report(spec: &LanguageSpec, depth: usize, horizon: usize) -> Result<ClosureReport> {
    if horizon < 2 {
        return Err(Error::Input("horizon must be at least 2".into()));
    }
    let en = enumerate(spec, depth, horizon);
    let patterns = en
        .classes
        .into_iter()
        .zip(en.stats)
        .map(|(point, (occurrences, first, last))| PatternStat {
            point,
            first_witness_len: first,
            last_witness_len: last,
            occurrences,
            recurrent: 2 * last > horizon,
        })
        .collect();
    Ok(ClosureReport { depth, horizon, words_enumerated: en.class_of.len(), patterns })
}

/// Strong connectivity of a minimal DFA.
///
/// For rational L this decides whether the dynamical system on the orbit
/// closure of χ_L is minimal (every orbit dense). The same question for
/// non-rational L is open-ended and not attempted here.
pub fn is_strongly_connected(dfa: &Dfa) -> bool {
    dfa.is_strongly_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::builtin_language;

    fn even() -> LanguageSpec {
        LanguageSpec::regex(Alphabet::new("a").unwrap(), "(aa)*").unwrap()
    }

    fn anbn() -> LanguageSpec {
        builtin_language("anbn", &[]).unwrap()
    }

    fn bits(p: &TruncatedPoint) -> String {
        p.bit_string()
    }

    #[test]
    fn residual_desk_values() {
        assert_eq!(bits(&residual_truncation(&even(), &"a".into(), 1).unwrap()), "01");
        assert_eq!(bits(&residual_truncation(&anbn(), &Word::empty(), 1).unwrap()), "100");
        let empty = LanguageSpec::empty(Alphabet::new("ab").unwrap());
        assert!(residual_truncation(&empty, &"abba".into(), 3).unwrap().is_zero());
    }

    #[test]
    fn point_transition_desk_values() {
        let p = TruncatedPoint::new(1, 1, vec![false, true]).unwrap();
        assert_eq!(bits(&point_transition(&p, 0).unwrap()), "1");
        let z = TruncatedPoint::zero(2, 3);
        assert_eq!(point_transition(&z, 1).unwrap(), TruncatedPoint::zero(2, 2));
        let root = residual_truncation(&anbn(), &Word::empty(), 2).unwrap();
        assert_eq!(
            point_transition(&root, 0).unwrap(),
            residual_truncation(&anbn(), &"a".into(), 1).unwrap()
        );
    }

    #[test]
    fn depth_zero_transition_is_an_error() {
        let p = TruncatedPoint::zero(2, 0);
        assert_eq!(point_transition(&p, 0), Err(Error::DepthExhausted));
    }

    #[test]
    fn truncated_point_validates_length() {
        assert!(TruncatedPoint::new(2, 1, vec![true; 2]).is_err());
        assert!(TruncatedPoint::new(2, 1, vec![true; 3]).is_ok());
    }

    #[test]
    fn json_shape() {
        let p = residual_truncation(&anbn(), &Word::empty(), 1).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"arity":2,"depth":1,"bits":"100"}"#);
        assert_eq!(serde_json::from_str::<TruncatedPoint>(&json).unwrap(), p);
        assert!(serde_json::from_str::<TruncatedPoint>(r#"{"arity":2,"depth":1,"bits":"10"}"#)
            .is_err());
    }

    #[test]
    fn even_length_classes() {
        let a = nerode_classes(&even(), 1, 4).unwrap();
        assert_eq!(a.num_classes(), 2);
        assert!(a.all_consistent());
        assert_eq!(a.accepting, vec![0]);
        assert_eq!(a.witnesses, vec![Word::empty(), Word::from("a")]);
    }

    #[test]
    fn unverified_transitions_are_flagged() {
        // At depth 0 the classes of aⁿbⁿ are just "in L" / "not in L",
        // which is far from a right congruence.
        let a = nerode_classes(&anbn(), 0, 4).unwrap();
        assert_eq!(a.num_classes(), 2);
        assert!(!a.all_consistent());
        assert!(a.to_dfa().is_none());
    }

    #[test]
    fn horizon_precondition() {
        assert!(nerode_classes(&even(), 3, 2).is_err());
        assert!(stabilization_check(&even(), 3, 3).is_err());
        assert!(orbit_closure_report(&even(), 1, 1).is_err());
    }

    #[test]
    fn stabilization_desk_values() {
        match stabilization_check(&even(), 1, 6).unwrap() {
            StabilizationVerdict::Stabilized { classes, quotient } => {
                assert_eq!(classes, 2);
                assert!(quotient.is_isomorphic(&even().minimal_dfa().unwrap()));
            }
            other => panic!("unexpected {other:?}"),
        }
        let full = LanguageSpec::regex(Alphabet::new("ab").unwrap(), "(a|b)*").unwrap();
        assert!(matches!(
            stabilization_check(&full, 2, 5).unwrap(),
            StabilizationVerdict::Stabilized { classes: 1, .. }
        ));
    }

    #[test]
    fn closure_report_desk_values() {
        let r = orbit_closure_report(&even(), 2, 10).unwrap();
        assert_eq!(r.patterns.len(), 2);
        assert!(r.patterns.iter().all(|p| p.recurrent));

        let single = LanguageSpec::regex(Alphabet::new("a").unwrap(), "a").unwrap();
        let r = orbit_closure_report(&single, 1, 5).unwrap();
        assert_eq!(r.patterns.len(), 3);
        let rec: Vec<(String, bool)> =
            r.patterns.iter().map(|p| (bits(&p.point), p.recurrent)).collect();
        assert_eq!(rec, [("01".into(), false), ("10".into(), false), ("00".into(), true)]);
        assert_eq!(r.patterns.iter().map(|p| p.occurrences).sum::<usize>(), 6);

        let empty = LanguageSpec::empty(Alphabet::new("a").unwrap());
        let r = orbit_closure_report(&empty, 1, 5).unwrap();
        assert_eq!(r.patterns.len(), 1);
        assert!(r.patterns[0].recurrent && r.patterns[0].point.is_zero());
    }

    #[test]
    fn strong_connectivity_desk_values() {
        let ab = Alphabet::new("ab").unwrap();
        assert!(is_strongly_connected(&even().minimal_dfa().unwrap()));
        let suffix = LanguageSpec::regex(ab.clone(), "(a|b)*ab").unwrap();
        assert!(is_strongly_connected(&suffix.minimal_dfa().unwrap()));
        let prefix = LanguageSpec::regex(ab, "a(a|b)*").unwrap();
        assert!(!is_strongly_connected(&prefix.minimal_dfa().unwrap()));
    }
}
