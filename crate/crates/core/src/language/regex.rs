//! The star/union/concatenation regex fragment and its compilation to a
//! minimal DFA (Thompson construction, subset construction, minimization).

use std::collections::{BTreeSet, HashMap};

use super::alphabet::Alphabet;
use super::dfa::Dfa;
use crate::error::{Error, Result};

/// Regex syntax tree over symbol indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Epsilon,
    Symbol(usize),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
}

/// Parses `pattern`. Grammar:
///
/// ```text
/// union  := concat ('|' concat)*
/// concat := repeat*            (empty concat is ε)
/// repeat := atom '*'*
/// atom   := symbol | '(' union ')'
/// ```
pub fn parse(pattern: &str, alphabet: &Alphabet) -> Result<Regex> {
    let chars: Vec<char> = pattern.chars().collect();
    let mut parser = Parser { chars: &chars, pos: 0, alphabet };
    let re = parser.union()?;
    if parser.pos < chars.len() {
        return Err(parser.error(format!("unexpected {:?}", chars[parser.pos])));
    }
    Ok(re)
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn error(&self, message: String) -> Error {
        Error::Regex { position: self.pos, message }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn union(&mut self) -> Result<Regex> {
        let mut branches = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            branches.push(self.concat()?);
        }
        Ok(if branches.len() == 1 { branches.pop().unwrap() } else { Regex::Union(branches) })
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            parts.push(self.repeat()?);
        }
        Ok(match parts.len() {
            0 => Regex::Epsilon,
            1 => parts.pop().unwrap(),
            _ => Regex::Concat(parts),
        })
    }

    fn repeat(&mut self) -> Result<Regex> {
        let mut re = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            re = Regex::Star(Box::new(re));
        }
        Ok(re)
    }

    fn atom(&mut self) -> Result<Regex> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('*') => Err(self.error("'*' with nothing to repeat".into())),
            Some(c) => match self.alphabet.index_of(c) {
                Some(a) => {
                    self.pos += 1;
                    Ok(Regex::Symbol(a))
                }
                None => Err(self.error(format!("symbol {c:?} is not in the alphabet"))),
            },
            None => Err(self.error("unexpected end of pattern".into())),
        }
    }
}

/// Thompson NFA: `eps[q]` are ε-successors, `moves[q]` labelled successors.
struct Nfa {
    eps: Vec<Vec<usize>>,
    moves: Vec<Vec<(usize, usize)>>,
}

impl Nfa {
    fn add_state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.moves.push(Vec::new());
        self.eps.len() - 1
    }

    /// Returns (entry, exit) for the fragment recognizing `re`.
    fn build(&mut self, re: &Regex) -> (usize, usize) {
        match re {
            Regex::Epsilon => {
                let s = self.add_state();
                (s, s)
            }
            Regex::Symbol(a) => {
                let s = self.add_state();
                let t = self.add_state();
                self.moves[s].push((*a, t));
                (s, t)
            }
            Regex::Concat(parts) => {
                let (entry, mut exit) = self.build(&parts[0]);
                for part in &parts[1..] {
                    let (s, t) = self.build(part);
                    self.eps[exit].push(s);
                    exit = t;
                }
                (entry, exit)
            }
            Regex::Union(branches) => {
                let s = self.add_state();
                let t = self.add_state();
                for branch in branches {
                    let (bs, bt) = self.build(branch);
                    self.eps[s].push(bs);
                    self.eps[bt].push(t);
                }
                (s, t)
            }
            Regex::Star(inner) => {
                let s = self.add_state();
                let (is, it) = self.build(inner);
                self.eps[s].push(is);
                self.eps[it].push(s);
                (s, s)
            }
        }
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &t in &self.eps[q] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }
}

/// Subset construction over the Thompson NFA of `re`, without minimization.
pub fn subset_dfa(re: &Regex, alphabet: &Alphabet) -> Dfa {
    let mut nfa = Nfa { eps: Vec::new(), moves: Vec::new() };
    let (entry, exit) = nfa.build(re);
    let mut start = BTreeSet::from([entry]);
    nfa.closure(&mut start);

    let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut sets = vec![start];
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < sets.len() {
        let current = sets[head].clone();
        head += 1;
        let mut row = Vec::with_capacity(alphabet.len());
        for a in 0..alphabet.len() {
            let mut next: BTreeSet<usize> = current
                .iter()
                .flat_map(|&q| nfa.moves[q].iter().filter(|(b, _)| *b == a).map(|&(_, t)| t))
                .collect();
            nfa.closure(&mut next);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    index.insert(next.clone(), sets.len());
                    sets.push(next);
                    sets.len() - 1
                }
            };
            row.push(id);
        }
        rows.push(row);
    }
    let finals = sets.iter().enumerate().filter(|(_, s)| s.contains(&exit)).map(|(i, _)| i);
    Dfa::new(alphabet.clone(), 0, finals, rows).expect("subset construction yields a complete DFA")
}

/// Parses and compiles `pattern` to its minimal, canonically numbered DFA.
pub fn compile_regex(pattern: &str, alphabet: &Alphabet) -> Result<Dfa> {
    let re = parse(pattern, alphabet)?;
    Ok(subset_dfa(&re, alphabet).minimize())
}
