#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use topaut_core::language::{Alphabet, Dfa, LanguageSpec};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random complete DFA with at most `max_states` states over `alphabet`,
/// restricted to its reachable part (hence trim).
pub fn random_trim_dfa(rng: &mut StdRng, max_states: usize, alphabet: &Alphabet) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let rows = (0..n).map(|_| (0..alphabet.len()).map(|_| rng.gen_range(0..n)).collect()).collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Dfa::new(alphabet.clone(), 0, finals, rows).unwrap().canonical()
}

pub fn alphabets() -> [Alphabet; 2] {
    [Alphabet::new("a").unwrap(), Alphabet::new("ab").unwrap()]
}

/// Regex corpus used by the property and acceptance suites.
pub fn regex_corpus() -> Vec<LanguageSpec> {
    let cases = [
        ("a", "(aa)*"),
        ("a", "a*"),
        ("a", "a(aaa)*"),
        ("a", "aaa*"),
        ("a", "(aa|aaa)*"),
        ("ab", "(a|b)*ab"),
        ("ab", "a(a|b)*"),
        ("ab", "(ab|ba)*"),
        ("ab", "a*b*"),
        ("ab", "(a|b)*a(a|b)"),
        ("ab", "((a|b)(a|b))*"),
        ("ab", "b*(ab*ab*)*"),
        ("ab", "(a|b)*aa(a|b)*"),
        ("ab", ""),
        ("abc", "(a|bc)*c"),
    ];
    cases
        .iter()
        .map(|(alpha, re)| LanguageSpec::regex(Alphabet::new(alpha).unwrap(), re).unwrap())
        .collect()
}

/// Direct evaluation of χ_L on strings, bypassing symbol-index plumbing.
pub fn chi(spec: &LanguageSpec, word: &str) -> bool {
    topaut_core::language::membership(spec, &word.into()).unwrap()
}

/// All strings over `alphabet` of length ≤ `max_len`, in length-lex order.
pub fn strings(alphabet: &Alphabet, max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.symbols().iter().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
