//! Languages over a finite alphabet and their characteristic functions.

mod alphabet;
mod builtin;
mod dfa;
pub mod regex;
mod specfile;

pub use alphabet::{count_up_to, length_lex_rank, Alphabet, LengthLex, Word};
pub use builtin::{champernowne_bit, Builtin, BUILTIN_NAMES};
pub use dfa::Dfa;
pub use regex::compile_regex;
pub use specfile::parse_spec_file;

use crate::error::{Error, Result};

/// How a language is presented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presentation {
    /// A regex together with its compiled minimal DFA.
    Regex { pattern: String, dfa: Dfa },
    Dfa(Dfa),
    Oracle { builtin: Builtin },
}

/// A language L ⊆ A* with its membership function χ_L.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageSpec {
    alphabet: Alphabet,
    presentation: Presentation,
}

impl LanguageSpec {
    pub fn regex(alphabet: Alphabet, pattern: &str) -> Result<Self> {
        let dfa = compile_regex(pattern, &alphabet)?;
        Ok(LanguageSpec {
            alphabet,
            presentation: Presentation::Regex { pattern: pattern.to_string(), dfa },
        })
    }

    pub fn dfa(dfa: Dfa) -> Self {
        LanguageSpec { alphabet: dfa.alphabet().clone(), presentation: Presentation::Dfa(dfa) }
    }

    pub fn oracle(alphabet: Alphabet, name: &str, params: &[i64]) -> Result<Self> {
        let builtin = Builtin::lookup(name, params)?;
        builtin.check_alphabet_size(alphabet.len())?;
        Ok(LanguageSpec { alphabet, presentation: Presentation::Oracle { builtin } })
    }

    /// The empty language over `alphabet`, as a one-state DFA.
    pub fn empty(alphabet: Alphabet) -> Self {
        let rows = vec![vec![0; alphabet.len()]];
        LanguageSpec::dfa(Dfa::new(alphabet, 0, [], rows).expect("well-formed"))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn is_rational(&self) -> bool {
        !matches!(self.presentation, Presentation::Oracle { .. })
    }

    pub fn is_unary(&self) -> bool {
        self.alphabet.len() == 1
    }

    /// χ_L on symbol indices. Callers guarantee the indices are in range.
    pub fn contains(&self, letters: &[usize]) -> bool {
        match &self.presentation {
            Presentation::Regex { dfa, .. } | Presentation::Dfa(dfa) => dfa.accepts(letters),
            Presentation::Oracle { builtin } => builtin.contains(letters),
        }
    }

    /// Minimal canonical DFA; only available for rational presentations.
    pub fn minimal_dfa(&self) -> Result<Dfa> {
        match &self.presentation {
            Presentation::Regex { dfa, .. } => Ok(dfa.clone()),
            Presentation::Dfa(dfa) => Ok(dfa.minimize()),
            Presentation::Oracle { builtin } => Err(Error::UnsupportedPresentation(format!(
                "builtin oracle {} has no finite automaton; use context classes instead",
                builtin.name()
            ))),
        }
    }

    /// Serializes to the spec-file format accepted by [`parse_spec_file`].
    pub fn to_spec_text(&self) -> String {
        let body = match &self.presentation {
            Presentation::Regex { pattern, .. } => format!("regex: {pattern}"),
            Presentation::Dfa(dfa) => format!("dfa: {}", dfa.to_spec_line()),
            Presentation::Oracle { builtin } => {
                let mut line = format!("builtin: {}", builtin.name());
                for p in builtin.params() {
                    line.push_str(&format!(" {p}"));
                }
                line
            }
        };
        format!("alphabet: {}\n{body}\n", self.alphabet)
    }
}

/// χ_L(w).
pub fn membership(spec: &LanguageSpec, word: &Word) -> Result<bool> {
    Ok(spec.contains(&spec.alphabet().encode(word)?))
}

/// A registered oracle language over its default alphabet.
pub fn builtin_language(name: &str, params: &[i64]) -> Result<LanguageSpec> {
    let builtin = Builtin::lookup(name, params)?;
    LanguageSpec::oracle(Alphabet::new(builtin.default_alphabet())?, name, params)
}
