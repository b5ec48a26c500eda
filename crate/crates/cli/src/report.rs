use serde::Serialize;
use serde_json::{Map, Value};
use triplewise::conditions::Witness;
use triplewise::{AlternativeSet, Triple, TripleOrdering, VoterId};

pub const SCHEMA: u32 = 1;

/// Top-level JSON document written by every command.
#[derive(Serialize)]
pub struct JsonReport<'a> {
    pub schema: u32,
    pub command: &'a str,
    pub triple: Option<[String; 3]>,
    pub result: Value,
    pub witnesses: Vec<Value>,
}

/// What a command produces before formatting.
pub struct Output {
    pub text: String,
    pub result: Value,
    pub witnesses: Vec<Value>,
}

impl Output {
    pub fn new(text: String, result: Value) -> Self {
        Output {
            text,
            result,
            witnesses: Vec::new(),
        }
    }
}

pub fn names(alts: &AlternativeSet, triple: Triple) -> [String; 3] {
    alts.labels(triple)
}

pub fn triple_text(labels: &[String; 3]) -> String {
    format!("({}, {}, {})", labels[0], labels[1], labels[2])
}

pub fn ordering(t: TripleOrdering, labels: &[String; 3]) -> String {
    t.display(labels).to_string()
}

pub fn ids(voters: &[VoterId]) -> Vec<i64> {
    voters.iter().map(|v| v.0).collect()
}

pub fn id_list(voters: &[VoterId]) -> String {
    if voters.is_empty() {
        return "none".into();
    }
    voters
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Witness as JSON with triple positions replaced by alternative names and
/// ordering slots by ordering text.
pub fn labeled_witness(w: &Witness, labels: &[String; 3]) -> Value {
    let raw = serde_json::to_value(w).expect("witnesses serialize");
    relabel(raw, labels)
}

fn relabel(value: Value, labels: &[String; 3]) -> Value {
    let name = |v: &Value| match v.as_u64() {
        Some(p) if (p as usize) < 3 => Value::String(labels[p as usize].clone()),
        _ => v.clone(),
    };
    match value {
        Value::Object(map) => {
            let mut out = Map::new();
            for (k, v) in map {
                let v = match k.as_str() {
                    "arrangement" | "pair" => match v {
                        Value::Array(items) => Value::Array(items.iter().map(name).collect()),
                        other => other,
                    },
                    "alternative" => name(&v),
                    "ordering" => v
                        .as_u64()
                        .and_then(|i| TripleOrdering::from_index(i as usize))
                        .map(|t| Value::String(ordering(t, labels)))
                        .unwrap_or(v),
                    _ => relabel(v, labels),
                };
                out.insert(k, v);
            }
            Value::Object(out)
        }
        Value::Array(items) => {
            Value::Array(items.into_iter().map(|v| relabel(v, labels)).collect())
        }
        other => other,
    }
}

/// Fixed-width table with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
