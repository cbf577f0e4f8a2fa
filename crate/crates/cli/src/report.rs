//! Rendering of reports as JSON, plain text or LaTeX.

use cherlink_core::laurent::laurent_to_json;
use cherlink_core::{LaurentAQ, RationalAQ};
use serde_json::{json, Map, Value};

use crate::Format;

/// One section of a report body.
#[derive(Clone, Debug)]
pub enum Item {
    Rational(RationalAQ),
    Laurent(LaurentAQ),
    Table { header: Vec<String>, rows: Vec<Vec<String>> },
    Json(Value),
    Text(String),
}

impl Item {
    fn to_json(&self) -> Value {
        match self {
            Item::Rational(r) => json!({ "display": r.to_string(), "exact": r.to_json() }),
            Item::Laurent(p) => json!({ "display": p.to_string(), "exact": laurent_to_json(p) }),
            Item::Table { header, rows } => {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|r| Value::Object(header.iter().cloned().zip(r.iter().map(|c| Value::String(c.clone()))).collect()))
                    .collect();
                Value::Array(rows)
            }
            Item::Json(v) => v.clone(),
            Item::Text(s) => Value::String(s.clone()),
        }
    }

    fn to_text(&self) -> String {
        match self {
            Item::Rational(r) => r.to_string(),
            Item::Laurent(p) => p.to_string(),
            Item::Table { header, rows } => {
                let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
                for r in rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |cells: &[String]| -> String {
                    let padded: Vec<String> =
                        cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
                    padded.join("  ").trim_end().to_string()
                };
                let mut out = vec![line(header)];
                out.extend(rows.iter().map(|r| line(r)));
                out.join("\n")
            }
            Item::Json(v) => serde_json::to_string(v).expect("json"),
            Item::Text(s) => s.clone(),
        }
    }

    fn to_latex(&self) -> Option<String> {
        match self {
            Item::Rational(r) => Some(r.to_latex()),
            Item::Laurent(p) => Some(p.to_latex()),
            Item::Table { header, rows } => {
                let mut out = format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "c".repeat(header.len()));
                out.push_str(&format!("{} \\\\\n\\hline\n", header.join(" & ")));
                for r in rows {
                    let cells: Vec<String> = r.iter().map(|c| format!("${c}$")).collect();
                    out.push_str(&format!("{} \\\\\n", cells.join(" & ")));
                }
                out.push_str("\\hline\n\\end{tabular}");
                Some(out)
            }
            Item::Json(_) | Item::Text(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub formula: String,
    pub normalization: Vec<String>,
    pub sections: Vec<(String, Item)>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, formula: &str) -> Self {
        Report { command: command.into(), inputs, formula: formula.into(), normalization: Vec::new(), sections: Vec::new() }
    }

    pub fn normalize(mut self, note: &str) -> Self {
        self.normalization.push(note.into());
        self
    }

    pub fn section(mut self, name: &str, item: Item) -> Self {
        self.sections.push((name.into(), item));
        self
    }

    pub fn to_json(&self) -> Value {
        let mut body = Map::new();
        for (name, item) in &self.sections {
            body.insert(name.clone(), item.to_json());
        }
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "formula": self.formula,
            "normalization": self.normalization,
            "result": Value::Object(body),
        })
    }

    /// `None` when the report has no LaTeX-renderable section.
    pub fn render(&self, format: Format) -> Option<String> {
        match format {
            Format::Json => Some(serde_json::to_string_pretty(&self.to_json()).expect("json")),
            Format::Text => {
                let mut out = vec![
                    format!("command: {}", self.command),
                    format!("inputs: {}", serde_json::to_string(&self.inputs).expect("json")),
                    format!("formula: {}", self.formula),
                ];
                for n in &self.normalization {
                    out.push(format!("normalization: {n}"));
                }
                for (name, item) in &self.sections {
                    let body = item.to_text();
                    if body.contains('\n') {
                        out.push(format!("{name}:\n{body}"));
                    } else {
                        out.push(format!("{name}: {body}"));
                    }
                }
                Some(out.join("\n"))
            }
            Format::Latex => {
                let parts: Vec<String> = self
                    .sections
                    .iter()
                    .filter_map(|(name, item)| item.to_latex().map(|l| format!("% {name}\n{l}")))
                    .collect();
                if parts.is_empty() {
                    None
                } else {
                    Some(format!("% {}: {}\n{}", self.command, self.formula, parts.join("\n")))
                }
            }
        }
    }
}
