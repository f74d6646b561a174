use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite, ordered alphabet of single-character symbols.
///
/// The symbol order fixes the length-lexicographic order used by every
/// enumeration in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self> {
        let symbols: Vec<char> = symbols.chars().collect();
        if symbols.is_empty() {
            return Err(Error::Input("alphabet must contain at least one symbol".into()));
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::Input(format!("duplicate alphabet symbol {c:?}")));
            }
            if c.is_whitespace() || "()|*".contains(*c) {
                return Err(Error::Input(format!("symbol {c:?} is reserved")));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn index_of(&self, symbol: char) -> Option<usize> {
        self.symbols.iter().position(|&c| c == symbol)
    }

    /// Converts a word into symbol indices, rejecting foreign letters.
    pub fn encode(&self, word: &Word) -> Result<Vec<usize>> {
        word.0
            .chars()
            .map(|c| {
                self.index_of(c).ok_or_else(|| {
                    Error::Input(format!("symbol {c:?} is not in the alphabet {self}"))
                })
            })
            .collect()
    }

    pub fn decode(&self, letters: &[usize]) -> Word {
        Word(letters.iter().map(|&i| self.symbols[i]).collect())
    }

    /// Number of words of length at most `depth`.
    pub fn count_up_to(&self, depth: usize) -> usize {
        count_up_to(self.len(), depth)
    }

    /// All words of length at most `max_len`, in length-lexicographic order.
    pub fn words_up_to(&self, max_len: usize) -> LengthLex {
        LengthLex::new(self.len(), max_len)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Alphabet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Alphabet::new(&s).map_err(serde::de::Error::custom)
    }
}

/// A finite word; the empty word is ε.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(String);

impl Word {
    pub fn new(letters: impl Into<String>) -> Self {
        Word(letters.into())
    }

    pub fn empty() -> Self {
        Word(String::new())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.chars().count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.to_string())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.0)
        }
    }
}

/// Σ_{i ≤ depth} k^i.
pub fn count_up_to(k: usize, depth: usize) -> usize {
    let mut total = 0usize;
    let mut layer = 1usize;
    for _ in 0..=depth {
        total += layer;
        layer *= k;
    }
    total
}

/// Position of `letters` in the length-lexicographic enumeration of words
/// over a `k`-letter alphabet.
pub fn length_lex_rank(k: usize, letters: &[usize]) -> usize {
    let offset = count_up_to(k, letters.len()) - k.pow(letters.len() as u32);
    offset + letters.iter().fold(0, |acc, &a| acc * k + a)
}

/// Length-lexicographic iterator over words of bounded length, yielding
/// symbol-index vectors.
#[derive(Debug, Clone)]
pub struct LengthLex {
    k: usize,
    max_len: usize,
    next: Option<Vec<usize>>,
}

impl LengthLex {
    pub fn new(k: usize, max_len: usize) -> Self {
        LengthLex { k, max_len, next: Some(Vec::new()) }
    }
}

impl Iterator for LengthLex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                if succ.len() < self.max_len {
                    self.next = Some(vec![0; succ.len() + 1]);
                }
                break;
            }
            i -= 1;
            if succ[i] + 1 < self.k {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Alphabet::new("").is_err());
        assert!(Alphabet::new("aba").is_err());
        assert!(Alphabet::new("a*").is_err());
        assert_eq!(Alphabet::new("ab").unwrap().len(), 2);
    }

    #[test]
    fn encode_rejects_foreign_letters() {
        let ab = Alphabet::new("ab").unwrap();
        assert_eq!(ab.encode(&"ba".into()).unwrap(), vec![1, 0]);
        assert!(matches!(ab.encode(&"ac".into()), Err(Error::Input(_))));
    }

    #[test]
    fn length_lex_order_and_ranks() {
        let ab = Alphabet::new("ab").unwrap();
        let words: Vec<String> =
            ab.words_up_to(2).map(|w| ab.decode(&w).as_str().to_string()).collect();
        assert_eq!(words, ["", "a", "b", "aa", "ab", "ba", "bb"]);
        for (i, w) in ab.words_up_to(4).enumerate() {
            assert_eq!(length_lex_rank(2, &w), i);
        }
        assert_eq!(ab.count_up_to(3), 15);
        assert_eq!(count_up_to(1, 3), 4);
        assert_eq!(LengthLex::new(1, 3).count(), 4);
    }
}
