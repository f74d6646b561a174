//! Line-oriented spec files:
//!
//! ```text
//! alphabet: ab
//! regex: (a|b)*ab            # or
//! builtin: even_length 3     # or
//! dfa: 3 0 2 1,0 1,2 1,0     # states, initial, finals csv ('-' if none), one row per state
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use super::{Alphabet, Dfa, LanguageSpec};
use crate::error::{Error, Result};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::SpecSyntax { line, message: message.into() }
}

pub fn parse_spec_file(text: &str) -> Result<LanguageSpec> {
    let mut alphabet: Option<Alphabet> = None;
    let mut spec: Option<LanguageSpec> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) =
            line.split_once(':').ok_or_else(|| syntax(line_no, "expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(syntax(line_no, "duplicate alphabet line"));
                }
                alphabet = Some(Alphabet::new(value).map_err(|e| syntax(line_no, e.to_string()))?);
            }
            kind @ ("regex" | "builtin" | "dfa") => {
                let alphabet = alphabet
                    .clone()
                    .ok_or_else(|| syntax(line_no, "the alphabet line must come first"))?;
                if spec.is_some() {
                    return Err(syntax(line_no, "more than one language line"));
                }
                let parsed = match kind {
                    "regex" => LanguageSpec::regex(alphabet, value),
                    "builtin" => parse_builtin(alphabet, value, line_no),
                    _ => parse_dfa(alphabet, value, line_no).map(LanguageSpec::dfa),
                };
                spec = Some(parsed.map_err(|e| match e {
                    Error::SpecSyntax { .. } => e,
                    other => syntax(line_no, other.to_string()),
                })?);
            }
            other => return Err(syntax(line_no, format!("unknown key {other:?}"))),
        }
    }
    spec.ok_or_else(|| syntax(text.lines().count().max(1), "missing regex, builtin or dfa line"))
}

fn parse_builtin(alphabet: Alphabet, value: &str, line: usize) -> Result<LanguageSpec> {
    let mut tokens = value.split_whitespace();
    let name = tokens.next().ok_or_else(|| syntax(line, "missing builtin name"))?;
    let params = tokens
        .map(|t| t.parse::<i64>().map_err(|_| syntax(line, format!("bad parameter {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    LanguageSpec::oracle(alphabet, name, &params)
}

fn parse_dfa(alphabet: Alphabet, value: &str, line: usize) -> Result<Dfa> {
    let tokens: Vec<&str> = value.split_whitespace().collect();
    let number = |t: &str| t.parse::<usize>().map_err(|_| syntax(line, format!("bad number {t:?}")));
    if tokens.len() < 3 {
        return Err(syntax(line, "expected `<n> <initial> <finals> <rows...>`"));
    }
    let n = number(tokens[0])?;
    let initial = number(tokens[1])?;
    let finals = if tokens[2] == "-" {
        Vec::new()
    } else {
        tokens[2].split(',').map(number).collect::<Result<Vec<_>>>()?
    };
    let rows = &tokens[3..];
    if rows.len() != n {
        return Err(syntax(line, format!("expected {n} transition rows, found {}", rows.len())));
    }
    let rows = rows
        .iter()
        .map(|r| r.split(',').map(number).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Dfa::new(alphabet, initial, finals, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::Presentation;

    #[test]
    fn parses_each_presentation() {
        let re = parse_spec_file("alphabet: ab\nregex: (a|b)*ab").unwrap();
        assert!(matches!(re.presentation(), Presentation::Regex { .. }));
        let or = parse_spec_file("alphabet: ab\nbuiltin: anbn").unwrap();
        assert!(matches!(or.presentation(), Presentation::Oracle { .. }));
        let dfa = parse_spec_file("# chain\nalphabet: a\n\ndfa: 3 0 0,2 1 2 1\n").unwrap();
        assert!(matches!(dfa.presentation(), Presentation::Dfa(d) if d.num_states() == 3));
        let empty = parse_spec_file("alphabet: a\ndfa: 1 0 - 0").unwrap();
        assert!(!empty.contains(&[]));
    }

    #[test]
    fn syntax_errors_name_the_line() {
        assert!(matches!(
            parse_spec_file("alphabet: ab\nregex: ("),
            Err(Error::SpecSyntax { line: 2, .. })
        ));
        assert!(matches!(parse_spec_file("regex: a"), Err(Error::SpecSyntax { line: 1, .. })));
        assert!(matches!(
            parse_spec_file("alphabet: ab\nbuiltin: nosuch"),
            Err(Error::SpecSyntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_spec_file("alphabet: a\ndfa: 2 0 1 1"),
            Err(Error::SpecSyntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_spec_file("alphabet: a\nregex: a\nregex: a"),
            Err(Error::SpecSyntax { line: 3, .. })
        ));
        assert!(matches!(parse_spec_file("alphabet: a"), Err(Error::SpecSyntax { .. })));
        assert!(matches!(parse_spec_file("nonsense"), Err(Error::SpecSyntax { line: 1, .. })));
    }

    #[test]
    fn round_trips() {
        for text in [
            "alphabet: ab\nregex: (a|b)*ab\n",
            "alphabet: ab\nbuiltin: anbn\n",
            "alphabet: abc\nbuiltin: even_length 3\n",
            "alphabet: a\ndfa: 3 0 0,2 1 2 1\n",
            "alphabet: ab\ndfa: 2 0 - 1,0 0,1\n",
        ] {
            let spec = parse_spec_file(text).unwrap();
            assert_eq!(spec.to_spec_text(), text);
            assert_eq!(parse_spec_file(&spec.to_spec_text()).unwrap(), spec);
        }
    }
}
