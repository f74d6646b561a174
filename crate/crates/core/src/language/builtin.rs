//! Registry of oracle-backed (mostly non-rational) test languages.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 5] =
    ["anbn", "dyck1", "unary_powers_of_two", "champernowne_unary", "even_length"];

/// A decidable language given by a membership procedure on symbol indices.
///
/// For the two-letter languages the first alphabet symbol plays the role of
/// `a` (or the opening bracket) and the second that of `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Builtin {
    /// aⁿbⁿ, n ≥ 0.
    AnBn,
    /// Balanced words, `a` opening and `b` closing.
    Dyck1,
    /// a^(base^k), k ≥ 0.
    UnaryPowers { base: u64 },
    /// a^i ∈ L iff bit i of the length-lex concatenation 0·1·00·01·… is 1.
    ChampernowneUnary,
    /// Words whose length is divisible by `modulus`.
    LengthMultiple { modulus: u64 },
}

impl Builtin {
    /// Resolves a registered name with its integer parameters.
    pub fn lookup(name: &str, params: &[i64]) -> Result<Self> {
        let no_params = |b: Builtin| {
            if params.is_empty() {
                Ok(b)
            } else {
                Err(Error::Config(format!("builtin {name} takes no parameters")))
            }
        };
        let one_param = |default: u64, min: u64| -> Result<u64> {
            match params {
                [] => Ok(default),
                [p] if *p >= min as i64 => Ok(*p as u64),
                [p] => Err(Error::Config(format!("builtin {name}: parameter {p} must be ≥ {min}"))),
                _ => Err(Error::Config(format!("builtin {name} takes at most one parameter"))),
            }
        };
        match name {
            "anbn" => no_params(Builtin::AnBn),
            "dyck1" => no_params(Builtin::Dyck1),
            "champernowne_unary" => no_params(Builtin::ChampernowneUnary),
            "unary_powers_of_two" => Ok(Builtin::UnaryPowers { base: one_param(2, 2)? }),
            "even_length" => Ok(Builtin::LengthMultiple { modulus: one_param(2, 1)? }),
            _ => Err(Error::Config(format!(
                "unknown builtin {name:?}; expected one of {}",
                BUILTIN_NAMES.join(", ")
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::AnBn => "anbn",
            Builtin::Dyck1 => "dyck1",
            Builtin::UnaryPowers { .. } => "unary_powers_of_two",
            Builtin::ChampernowneUnary => "champernowne_unary",
            Builtin::LengthMultiple { .. } => "even_length",
        }
    }

    /// Parameters in the form accepted by [`Builtin::lookup`]; defaults are omitted.
    pub fn params(&self) -> Vec<i64> {
        match *self {
            Builtin::UnaryPowers { base } if base != 2 => vec![base as i64],
            Builtin::LengthMultiple { modulus } if modulus != 2 => vec![modulus as i64],
            _ => Vec::new(),
        }
    }

    pub fn default_alphabet(&self) -> &'static str {
        match self {
            Builtin::AnBn | Builtin::Dyck1 | Builtin::LengthMultiple { .. } => "ab",
            Builtin::UnaryPowers { .. } | Builtin::ChampernowneUnary => "a",
        }
    }

    /// Checks that an alphabet of the given size suits this oracle.
    pub fn check_alphabet_size(&self, size: usize) -> Result<()> {
        match self {
            Builtin::AnBn | Builtin::Dyck1 if size < 2 => Err(Error::Config(format!(
                "builtin {} needs at least two symbols",
                self.name()
            ))),
            Builtin::UnaryPowers { .. } | Builtin::ChampernowneUnary if size != 1 => {
                Err(Error::Config(format!("builtin {} needs a unary alphabet", self.name())))
            }
            _ => Ok(()),
        }
    }

    pub fn contains(&self, letters: &[usize]) -> bool {
        match *self {
            Builtin::AnBn => {
                let n = letters.len();
                n.is_multiple_of(2)
                    && letters[..n / 2].iter().all(|&x| x == 0)
                    && letters[n / 2..].iter().all(|&x| x == 1)
            }
            Builtin::Dyck1 => {
                let mut depth = 0i64;
                for &x in letters {
                    match x {
                        0 => depth += 1,
                        1 => depth -= 1,
                        _ => return false,
                    }
                    if depth < 0 {
                        return false;
                    }
                }
                depth == 0
            }
            Builtin::UnaryPowers { base } => {
                let mut n = letters.len() as u64;
                if n == 0 {
                    return false;
                }
                while n.is_multiple_of(base) {
                    n /= base;
                }
                n == 1
            }
            Builtin::ChampernowneUnary => champernowne_bit(letters.len() as u64),
            Builtin::LengthMultiple { modulus } => (letters.len() as u64).is_multiple_of(modulus),
        }
    }
}

/// Bit `i` of 0·1·00·01·10·11·000·…, the concatenation of the
/// length-lexicographic enumeration of {0,1}* (ε contributes nothing).
pub fn champernowne_bit(mut i: u64) -> bool {
    let mut k = 1u32;
    loop {
        let block = (k as u64) << k;
        if i < block {
            let word = i / k as u64;
            let pos = i % k as u64;
            return (word >> (k as u64 - 1 - pos)) & 1 == 1;
        }
        i -= block;
        k += 1;
    }
}
