//! JSON and DOT renderings of library results.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use topaut_core::language::{Dfa, Word};
use topaut_core::topology::{ApproxAutomaton, TransitionStatus};

/// Pretty JSON with sorted keys and a `schema` tag `topaut/<kind>/v1`.
///
/// Non-object payloads are wrapped as `{"schema": .., "value": ..}`.
pub fn export_json<T: Serialize + ?Sized>(kind: &str, result: &T) -> String {
    let value = serde_json::to_value(result).expect("library results serialize to JSON");
    let mut object = match value {
        Value::Object(map) => map,
        other => {
            let mut map = serde_json::Map::new();
            map.insert("value".into(), other);
            map
        }
    };
    object.insert("schema".into(), Value::String(format!("topaut/{kind}/v1")));
    // serde_json's default map is ordered by key, so this is canonical.
    let mut text = serde_json::to_string_pretty(&Value::Object(object)).expect("valid JSON");
    text.push('\n');
    text
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

fn header(out: &mut String, name: &str) {
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  start [shape=point];");
}

fn node(out: &mut String, index: usize, witness: Option<&Word>, accepting: bool) {
    let witness = witness.map_or_else(|| "unreachable".to_string(), |w| w.to_string());
    let shape = if accepting { "doublecircle" } else { "circle" };
    let _ = writeln!(out, "  q{index} [label=\"{index}\\n{}\", shape={shape}];", escape(&witness));
}

/// Edges grouped by (source, target, dashed), labels joined in symbol order.
fn edges(out: &mut String, grouped: BTreeMap<(usize, usize, bool), Vec<char>>) {
    for ((from, to, dashed), symbols) in grouped {
        let label: Vec<String> = symbols.iter().map(char::to_string).collect();
        let style = if dashed { ", style=dashed" } else { "" };
        let _ = writeln!(out, "  q{from} -> q{to} [label=\"{}\"{style}];", escape(&label.join(",")));
    }
}

pub fn dfa_dot(dfa: &Dfa) -> String {
    let mut witnesses: Vec<Option<Word>> = vec![None; dfa.num_states()];
    for (state, letters) in dfa.access_words() {
        witnesses[state] = Some(dfa.alphabet().decode(&letters));
    }
    let mut out = String::new();
    header(&mut out, "dfa");
    for (q, witness) in witnesses.iter().enumerate() {
        node(&mut out, q, witness.as_ref(), dfa.is_final(q));
    }
    let _ = writeln!(out, "  start -> q{};", dfa.initial());
    let mut grouped: BTreeMap<(usize, usize, bool), Vec<char>> = BTreeMap::new();
    for (q, row) in dfa.transitions().iter().enumerate() {
        for (a, &t) in row.iter().enumerate() {
            grouped.entry((q, t, false)).or_default().push(dfa.alphabet().symbol(a));
        }
    }
    edges(&mut out, grouped);
    out.push_str("}\n");
    out
}

/// Transitions whose target lies outside the enumerated classes are omitted.
pub fn approx_dot(approx: &ApproxAutomaton) -> String {
    let mut out = String::new();
    header(&mut out, "approx");
    for c in 0..approx.num_classes() {
        node(&mut out, c, Some(&approx.witnesses[c]), approx.is_accepting(c));
    }
    let _ = writeln!(out, "  start -> q{};", approx.initial());
    let mut grouped: BTreeMap<(usize, usize, bool), Vec<char>> = BTreeMap::new();
    for (c, row) in approx.transitions.iter().enumerate() {
        for (a, tr) in row.iter().enumerate() {
            if let Some(t) = tr.target {
                let dashed = tr.status == TransitionStatus::Unverified;
                grouped.entry((c, t, dashed)).or_default().push(approx.alphabet.symbol(a));
            }
        }
    }
    edges(&mut out, grouped);
    out.push_str("}\n");
    out
}
