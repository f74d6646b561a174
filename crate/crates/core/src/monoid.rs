//! Finite transformation monoids acting on the right of a finite state set.
//!
//! Throughout, `multiply(i, j)` means "apply element `i`, then element `j`",
//! matching the right action of A* on states.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::language::{length_lex_rank, Alphabet, Dfa, LanguageSpec, Word};

pub const DEFAULT_MONOID_CAP: usize = 10_000;

/// A total map on `0..degree`, stored as its image tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Transformation(Vec<usize>);

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if let Some(&bad) = images.iter().find(|&&i| i >= n) {
            return Err(Error::Input(format!("image {bad} out of range 0..{n}")));
        }
        Ok(Transformation(images))
    }

    pub fn identity(degree: usize) -> Self {
        Transformation((0..degree).collect())
    }

    pub fn constant(degree: usize, value: usize) -> Self {
        Transformation(vec![value; degree])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, state: usize) -> usize {
        self.0[state]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation(self.0.iter().map(|&q| other.0[q]).collect())
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

/// A finite monoid of transformations generated by one transformation per
/// alphabet symbol. Element 0 is the identity; elements are numbered in the
/// length-lex order of their shortest witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteMonoid {
    alphabet: Alphabet,
    elements: Vec<Transformation>,
    table: Vec<Vec<usize>>,
    generators: Vec<usize>,
    witnesses: Vec<Word>,
}

impl FiniteMonoid {
    /// BFS closure of `generators` (one per symbol) under composition.
    pub fn generated(alphabet: Alphabet, generators: Vec<Transformation>, cap: usize) -> Result<Self> {
        if generators.len() != alphabet.len() {
            return Err(Error::Input(format!(
                "expected {} generators, got {}",
                alphabet.len(),
                generators.len()
            )));
        }
        let degree = generators[0].degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::Input("generators act on different state sets".into()));
        }
        let identity = Transformation::identity(degree);
        let mut index: HashMap<Transformation, usize> = HashMap::from([(identity.clone(), 0)]);
        let mut elements = vec![identity];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        // right[i][a]: element i followed by generator a.
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            let mut row = Vec::with_capacity(generators.len());
            for (a, g) in generators.iter().enumerate() {
                let next = current.then(g);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::MonoidCap { cap });
                        }
                        let id = elements.len();
                        index.insert(next.clone(), id);
                        elements.push(next);
                        let mut w = words[head].clone();
                        w.push(a);
                        words.push(w);
                        id
                    }
                };
                row.push(id);
            }
            right.push(row);
            head += 1;
        }
        let table = (0..elements.len())
            .map(|i| {
                words.iter().map(|w| w.iter().fold(i, |e, &a| right[e][a])).collect()
            })
            .collect();
        let gens = right[0].clone();
        Ok(FiniteMonoid {
            witnesses: words.iter().map(|w| alphabet.decode(w)).collect(),
            alphabet,
            elements,
            table,
            generators: gens,
        })
    }

    /// The cyclic group ℤ/n, generated by the rotation `g` (symbol `g`).
    pub fn cyclic_group(n: usize) -> Self {
        let rotation = Transformation((0..n).map(|i| (i + 1) % n).collect());
        FiniteMonoid::generated(Alphabet::new("g").expect("valid"), vec![rotation], n + 1)
            .expect("ℤ/n has n elements")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Transformation {
        &self.elements[i]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn multiply(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// Element of generator symbol `a`.
    pub fn generator(&self, a: usize) -> usize {
        self.generators[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn witness(&self, i: usize) -> &Word {
        &self.witnesses[i]
    }

    pub fn witnesses(&self) -> &[Word] {
        &self.witnesses
    }

    /// Image of a word over the generator alphabet.
    pub fn evaluate(&self, letters: &[usize]) -> usize {
        letters.iter().fold(0, |e, &a| self.table[e][self.generators[a]])
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.elements.iter().position(|e| e == t)
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.table[i][i] == i
    }
}

/// M(𝒜) = δ*(A*), the transition monoid of a DFA.
pub fn transition_monoid(dfa: &Dfa) -> Result<FiniteMonoid> {
    transition_monoid_capped(dfa, DEFAULT_MONOID_CAP)
}

pub fn transition_monoid_capped(dfa: &Dfa, cap: usize) -> Result<FiniteMonoid> {
    let gens = (0..dfa.alphabet().len())
        .map(|a| Transformation(dfa.transitions().iter().map(|row| row[a]).collect()))
        .collect();
    FiniteMonoid::generated(dfa.alphabet().clone(), gens, cap)
}

/// The syntactic monoid M_L of a rational language with its recognizing
/// subset F_L = {s : initial·s is final}.
///
/// For rational L the enveloping syntactic monoid E_L is finite and equals
/// M_L, so this is an exact computation of E_L as well.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyntacticMonoid {
    pub monoid: FiniteMonoid,
    pub accepting: Vec<usize>,
    pub minimal_dfa: Dfa,
}

impl SyntacticMonoid {
    /// η(w).
    pub fn eta(&self, letters: &[usize]) -> usize {
        self.monoid.evaluate(letters)
    }

    pub fn is_accepting(&self, element: usize) -> bool {
        self.accepting.binary_search(&element).is_ok()
    }
}

pub fn syntactic_monoid(spec: &LanguageSpec) -> Result<SyntacticMonoid> {
    syntactic_monoid_capped(spec, DEFAULT_MONOID_CAP)
}

pub fn syntactic_monoid_capped(spec: &LanguageSpec, cap: usize) -> Result<SyntacticMonoid> {
    let dfa = spec.minimal_dfa()?;
    let monoid = transition_monoid_capped(&dfa, cap)?;
    let accepting = recognizing_subset(&dfa, &monoid);
    Ok(SyntacticMonoid { monoid, accepting, minimal_dfa: dfa })
}

/// {s : initial·s is final}; δ* recognizes L(dfa) through this subset.
pub fn recognizing_subset(dfa: &Dfa, monoid: &FiniteMonoid) -> Vec<usize> {
    (0..monoid.order())
        .filter(|&s| dfa.is_final(monoid.element(s).apply(dfa.initial())))
        .collect()
}

/// s^k for the least k ≥ 1 with s^k idempotent.
pub fn idempotent_power(monoid: &FiniteMonoid, s: usize) -> usize {
    let mut power = s;
    // The powers of s enter a cycle after at most |M| steps, and the cycle
    // contains exactly one idempotent.
    for _ in 0..=monoid.order() {
        if monoid.is_idempotent(power) {
            return power;
        }
        power = monoid.multiply(power, s);
    }
    unreachable!("finite monoids always contain an idempotent power")
}

/// Words |u| ≤ `bound` grouped by the contexts (x, y), |x| ≤ left,
/// |y| ≤ right, with xuy ∈ L.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextClassTable {
    pub left: usize,
    pub right: usize,
    pub bound: usize,
    /// Shortest length-lex member of each class, in order of first appearance.
    pub representatives: Vec<Word>,
    pub sizes: Vec<usize>,
    /// Class of every word |u| ≤ bound, indexed by length-lex rank.
    #[serde(skip)]
    pub assignment: Vec<usize>,
}

impl ContextClassTable {
    pub fn num_classes(&self) -> usize {
        self.representatives.len()
    }
}

pub fn context_classes(
    spec: &LanguageSpec,
    left: usize,
    right: usize,
    bound: usize,
) -> Result<ContextClassTable> {
    if bound < 1 {
        return Err(Error::Input("word bound must be at least 1".into()));
    }
    let alphabet = spec.alphabet();
    let lefts: Vec<Vec<usize>> = alphabet.words_up_to(left).collect();
    let rights: Vec<Vec<usize>> = alphabet.words_up_to(right).collect();
    let mut index: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    let mut assignment = Vec::new();
    let mut buf = Vec::new();
    for u in alphabet.words_up_to(bound) {
        let mut signature = Vec::with_capacity(lefts.len() * rights.len());
        for x in &lefts {
            for y in &rights {
                buf.clear();
                buf.extend_from_slice(x);
                buf.extend_from_slice(&u);
                buf.extend_from_slice(y);
                signature.push(spec.contains(&buf));
            }
        }
        let fresh = index.len();
        let id = *index.entry(signature).or_insert(fresh);
        if id == fresh {
            representatives.push(alphabet.decode(&u));
            sizes.push(0);
        }
        sizes[id] += 1;
        assignment.push(id);
    }
    Ok(ContextClassTable { left, right, bound, representatives, sizes, assignment })
}

impl ContextClassTable {
    /// Class of a word given as symbol indices.
    pub fn class_of(&self, arity: usize, letters: &[usize]) -> usize {
        self.assignment[length_lex_rank(arity, letters)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthProfile {
    pub bound: usize,
    /// Class counts at (k, k) for k = 1..=kmax.
    pub counts: Vec<usize>,
    /// True when the last two counts agree (consistent with rationality).
    pub bounded: bool,
}

pub fn growth_profile(spec: &LanguageSpec, kmax: usize, bound: usize) -> Result<GrowthProfile> {
    if kmax < 1 || bound < kmax {
        return Err(Error::Input("growth profile needs 1 ≤ kmax ≤ bound".into()));
    }
    let counts = (1..=kmax)
        .map(|k| context_classes(spec, k, k, bound).map(|t| t.num_classes()))
        .collect::<Result<Vec<_>>>()?;
    let bounded = counts.len() >= 2 && counts[counts.len() - 1] == counts[counts.len() - 2];
    Ok(GrowthProfile { bound, counts, bounded })
}
