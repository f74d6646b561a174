//! Unary languages as points of {0,1}^ℕ under the shift.
//!
//! With a one-letter alphabet A* is identified with ℕ by word length, χ_L
//! becomes an infinite bit sequence, and the letter acts by deleting the
//! first bit. The depth-d truncation of the residual of a^m is then the
//! window of length d+1 starting at position m.
//!
//! The concatenation 0·1·00·01·10·11·000·… of the length-lex enumeration of
//! {0,1}* contains every finite bit string as a factor, so its shift orbit
//! is dense and the orbit closure is the whole space. The enveloping
//! monoid of the full shift is βℕ, so such a language admits no metrizable
//! recognizer; that identification is not built here, only its finite
//! shadow: factor counts.

use std::collections::HashSet;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::language::{champernowne_bit, LanguageSpec};

/// First `n` bits of 0·1·00·01·10·11·000·….
pub fn champernowne_prefix(n: usize) -> String {
    (0..n as u64).map(|i| if champernowne_bit(i) { '1' } else { '0' }).collect()
}

enum Source {
    Champernowne,
    Language(LanguageSpec),
}

/// The characteristic sequence of a unary language, with a prefix cache
/// that only ever grows.
pub struct BitStream {
    source: Source,
    cache: RwLock<Vec<bool>>,
}

impl BitStream {
    pub fn champernowne() -> Self {
        BitStream { source: Source::Champernowne, cache: RwLock::new(Vec::new()) }
    }

    pub fn from_spec(spec: LanguageSpec) -> Result<Self> {
        if !spec.is_unary() {
            return Err(Error::Input("bit streams need a unary language".into()));
        }
        Ok(BitStream { source: Source::Language(spec), cache: RwLock::new(Vec::new()) })
    }

    fn compute(&self, i: usize) -> bool {
        match &self.source {
            Source::Champernowne => champernowne_bit(i as u64),
            Source::Language(spec) => spec.contains(&vec![0; i]),
        }
    }

    /// The first `n` bits.
    pub fn prefix(&self, n: usize) -> Vec<bool> {
        {
            let cache = self.cache.read().expect("cache lock poisoned");
            if cache.len() >= n {
                return cache[..n].to_vec();
            }
        }
        let mut cache = self.cache.write().expect("cache lock poisoned");
        while cache.len() < n {
            let i = cache.len();
            let bit = self.compute(i);
            cache.push(bit);
        }
        cache[..n].to_vec()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.prefix(i + 1)[i]
    }

    pub fn cached_len(&self) -> usize {
        self.cache.read().expect("cache lock poisoned").len()
    }
}

fn render(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub k: usize,
    pub prefix_len: usize,
    pub found: usize,
    /// Length-k patterns absent from the prefix, in lexicographic order.
    pub missing: Vec<String>,
    pub passed: bool,
}

/// Which length-k patterns occur as factors of the length-N prefix.
pub fn density_check(stream: &BitStream, k: usize, prefix_len: usize) -> Result<DensityReport> {
    if k < 1 || prefix_len < k {
        return Err(Error::Input("density check needs 1 ≤ k ≤ N".into()));
    }
    if k >= usize::BITS as usize {
        return Err(Error::Input(format!("window length {k} is too large")));
    }
    let bits = stream.prefix(prefix_len);
    let seen: HashSet<usize> = bits
        .windows(k)
        .map(|w| w.iter().fold(0usize, |acc, &b| (acc << 1) | usize::from(b)))
        .collect();
    let missing: Vec<String> = (0..1usize << k)
        .filter(|p| !seen.contains(p))
        .map(|p| (0..k).map(|j| if (p >> (k - 1 - j)) & 1 == 1 { '1' } else { '0' }).collect())
        .collect();
    Ok(DensityReport {
        k,
        prefix_len,
        found: seen.len(),
        passed: missing.is_empty(),
        missing,
    })
}

/// Smallest prefix length at which every length-k pattern occurs, searched
/// up to `limit`.
pub fn dense_prefix_length(stream: &BitStream, k: usize, limit: usize) -> Option<usize> {
    let bits = stream.prefix(limit);
    let mut seen = HashSet::new();
    for end in k..=limit {
        seen.insert(render(&bits[end - k..end]));
        if seen.len() == 1 << k {
            return Some(end);
        }
    }
    None
}

/// Number of distinct depth-d residual truncations of a^m, m ≤ horizon:
/// the distinct windows of length d+1 starting at positions 0..=horizon.
pub fn unary_residual_count(spec: &LanguageSpec, depth: usize, horizon: usize) -> Result<usize> {
    if !spec.is_unary() {
        return Err(Error::Input("unary residual counts need a unary language".into()));
    }
    if horizon < depth {
        return Err(Error::Input("horizon must be at least the depth".into()));
    }
    let stream = BitStream::from_spec(spec.clone())?;
    let bits = stream.prefix(horizon + depth + 1);
    let windows: HashSet<&[bool]> = (0..=horizon).map(|m| &bits[m..m + depth + 1]).collect();
    Ok(windows.len())
}
