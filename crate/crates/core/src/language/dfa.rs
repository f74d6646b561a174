use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};

/// A complete deterministic finite automaton.
///
/// States are `0..num_states`; `transitions[q][a]` is the successor of `q`
/// on the symbol with index `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: usize,
    finals: BTreeSet<usize>,
    transitions: Vec<Vec<usize>>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
        transitions: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = transitions.len();
        if n == 0 {
            return Err(Error::Input("a DFA needs at least one state".into()));
        }
        if initial >= n {
            return Err(Error::Input(format!("initial state {initial} out of range 0..{n}")));
        }
        let finals: BTreeSet<usize> = finals.into_iter().collect();
        if let Some(&f) = finals.iter().find(|&&f| f >= n) {
            return Err(Error::Input(format!("final state {f} out of range 0..{n}")));
        }
        for (q, row) in transitions.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::Input(format!(
                    "state {q} has {} transitions, expected {}",
                    row.len(),
                    alphabet.len()
                )));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= n) {
                return Err(Error::Input(format!("transition target {t} out of range 0..{n}")));
            }
        }
        Ok(Dfa { alphabet, initial, finals, transitions })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals.contains(&state)
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.transitions
    }

    pub fn step(&self, state: usize, symbol: usize) -> usize {
        self.transitions[state][symbol]
    }

    pub fn run_from(&self, state: usize, letters: &[usize]) -> usize {
        letters.iter().fold(state, |q, &a| self.transitions[q][a])
    }

    pub fn run(&self, letters: &[usize]) -> usize {
        self.run_from(self.initial, letters)
    }

    pub fn accepts(&self, letters: &[usize]) -> bool {
        self.is_final(self.run(letters))
    }

    pub fn accepts_word(&self, word: &Word) -> Result<bool> {
        Ok(self.accepts(&self.alphabet.encode(word)?))
    }

    /// Shortest length-lex access word for every reachable state, in BFS order.
    pub fn access_words(&self) -> Vec<(usize, Vec<usize>)> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![(self.initial, Vec::new())];
        seen[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let (q, word) = order[head].clone();
            head += 1;
            for (a, &t) in self.transitions[q].iter().enumerate() {
                if !seen[t] {
                    seen[t] = true;
                    let mut w = word.clone();
                    w.push(a);
                    order.push((t, w));
                }
            }
        }
        order
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        for (q, _) in self.access_words() {
            seen[q] = true;
        }
        seen
    }

    /// First state not reachable from the initial state, if any.
    pub fn unreachable_state(&self) -> Option<usize> {
        self.reachable().iter().position(|&r| !r)
    }

    /// Renumbers the reachable part by shortest length-lex access word.
    pub fn canonical(&self) -> Dfa {
        let order = self.access_words();
        let mut index = vec![usize::MAX; self.num_states()];
        for (i, (q, _)) in order.iter().enumerate() {
            index[*q] = i;
        }
        let transitions = order
            .iter()
            .map(|(q, _)| self.transitions[*q].iter().map(|&t| index[t]).collect())
            .collect();
        let finals = order.iter().enumerate().filter(|(_, (q, _))| self.is_final(*q)).map(|(i, _)| i);
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals: finals.collect(),
            transitions,
        }
    }

    /// Minimal complete DFA of the same language, canonically numbered.
    pub fn minimize(&self) -> Dfa {
        let trimmed = self.canonical();
        let n = trimmed.num_states();
        let mut block: Vec<usize> = (0..n).map(|q| usize::from(trimmed.is_final(q))).collect();
        let mut num_blocks = block.iter().collect::<BTreeSet<_>>().len();
        // Moore refinement: split by (block, successor blocks) until stable.
        loop {
            let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let next: Vec<usize> = (0..n)
                .map(|q| {
                    let sig = (block[q], trimmed.transitions[q].iter().map(|&t| block[t]).collect());
                    let fresh = ids.len();
                    *ids.entry(sig).or_insert(fresh)
                })
                .collect();
            block = next;
            if ids.len() == num_blocks {
                break;
            }
            num_blocks = ids.len();
        }
        let mut transitions = vec![Vec::new(); num_blocks];
        let mut finals = BTreeSet::new();
        for q in 0..n {
            let b = block[q];
            if transitions[b].is_empty() {
                transitions[b] = trimmed.transitions[q].iter().map(|&t| block[t]).collect();
            }
            if trimmed.is_final(q) {
                finals.insert(b);
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: block[trimmed.initial],
            finals,
            transitions,
        }
        .canonical()
    }

    /// True iff the reachable parts are equal up to renaming of states.
    pub fn is_isomorphic(&self, other: &Dfa) -> bool {
        self.alphabet == other.alphabet && self.canonical() == other.canonical()
    }

    /// Shortest length-lex word accepted by exactly one of the two automata.
    pub fn find_difference(&self, other: &Dfa) -> Option<Vec<usize>> {
        self.difference_from(self.initial, other, other.initial)
    }

    /// Shortest word `u` such that exactly one of `state·u` (here) and
    /// `other_state·u` (in `other`) is final.
    pub fn difference_from(&self, state: usize, other: &Dfa, other_state: usize) -> Option<Vec<usize>> {
        assert_eq!(self.alphabet.len(), other.alphabet.len(), "alphabet size mismatch");
        let start = (state, other_state);
        type Pair = (usize, usize);
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some(pair) = queue.pop_front() {
            if self.is_final(pair.0) != other.is_final(pair.1) {
                let mut word = Vec::new();
                let mut cur = pair;
                while let Some(Some((prev, a))) = parent.get(&cur) {
                    word.push(*a);
                    cur = *prev;
                }
                word.reverse();
                return Some(word);
            }
            for a in 0..self.alphabet.len() {
                let next = (self.step(pair.0, a), other.step(pair.1, a));
                if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry(next) {
                    slot.insert(Some((pair, a)));
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// True iff every state reaches every other state.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.num_states();
        let forward = reach(n, 0, |q| self.transitions[q].clone());
        let mut reverse = vec![Vec::new(); n];
        for (q, row) in self.transitions.iter().enumerate() {
            for &t in row {
                reverse[t].push(q);
            }
        }
        let backward = reach(n, 0, |q| reverse[q].clone());
        forward.iter().all(|&r| r) && backward.iter().all(|&r| r)
    }

    /// Rows as used by the spec-file `dfa:` line.
    pub fn to_spec_line(&self) -> String {
        let finals = if self.finals.is_empty() {
            "-".to_string()
        } else {
            self.finals.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(",")
        };
        let rows: Vec<String> = self
            .transitions
            .iter()
            .map(|row| row.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        format!("{} {} {} {}", self.num_states(), self.initial, finals, rows.join(" "))
    }
}

fn reach(n: usize, start: usize, succ: impl Fn(usize) -> Vec<usize>) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(q) = stack.pop() {
        for t in succ(q) {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen
}
