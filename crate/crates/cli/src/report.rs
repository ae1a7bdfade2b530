//! A format-neutral report and its text, Markdown, CSV and JSON emitters.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Block {
    Fields { heading: Option<String>, fields: Vec<(String, Value)> },
    Table { heading: Option<String>, columns: Vec<String>, rows: Vec<Vec<Value>> },
    Lines { heading: Option<String>, lines: Vec<String> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub title: String,
    pub blocks: Vec<Block>,
    /// Every verification in the report passed.
    pub ok: bool,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), blocks: Vec::new(), ok: true }
    }

    pub fn fields(&mut self, heading: Option<&str>, fields: Vec<(&str, Value)>) -> &mut Self {
        let fields = fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        self.blocks.push(Block::Fields { heading: heading.map(str::to_string), fields });
        self
    }

    pub fn table(&mut self, heading: Option<&str>, columns: &[&str], rows: Vec<Vec<Value>>) -> &mut Self {
        let columns = columns.iter().map(|c| c.to_string()).collect();
        self.blocks.push(Block::Table { heading: heading.map(str::to_string), columns, rows });
        self
    }

    pub fn lines(&mut self, heading: Option<&str>, lines: Vec<String>) -> &mut Self {
        self.blocks.push(Block::Lines { heading: heading.map(str::to_string), lines });
        self
    }

    pub fn require(&mut self, ok: bool) -> &mut Self {
        self.ok &= ok;
        self
    }

    pub fn append(&mut self, other: Report) {
        self.ok &= other.ok;
        self.blocks.push(Block::Lines { heading: Some(other.title), lines: Vec::new() });
        self.blocks.extend(other.blocks);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Markdown => self.markdown(),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn text(&self) -> String {
        let mut out = format!("{}\n", self.title);
        for b in &self.blocks {
            out.push('\n');
            match b {
                Block::Fields { heading, fields } => {
                    push_heading(&mut out, heading, "");
                    let width = fields.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                    for (k, v) in fields {
                        let pad = width - k.chars().count();
                        let _ = writeln!(out, "{k}{}  {}", " ".repeat(pad), plain(v));
                    }
                }
                Block::Table { heading, columns, rows } => {
                    push_heading(&mut out, heading, "");
                    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(plain).collect()).collect();
                    let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
                    for r in &cells {
                        for (w, c) in widths.iter_mut().zip(r) {
                            *w = (*w).max(c.chars().count());
                        }
                    }
                    let line = |items: &[String]| {
                        let padded: Vec<String> =
                            items.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
                        format!("{}\n", padded.join("  ").trim_end())
                    };
                    out.push_str(&line(columns));
                    out.push_str(&line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
                    for r in &cells {
                        out.push_str(&line(r));
                    }
                }
                Block::Lines { heading, lines } => {
                    push_heading(&mut out, heading, "");
                    for l in lines {
                        let _ = writeln!(out, "{l}");
                    }
                }
            }
        }
        out
    }

    fn markdown(&self) -> String {
        let mut out = format!("# {}\n", self.title);
        for b in &self.blocks {
            out.push('\n');
            match b {
                Block::Fields { heading, fields } => {
                    push_heading(&mut out, heading, "## ");
                    for (k, v) in fields {
                        let _ = writeln!(out, "- **{k}**: {}", escape_md(&plain(v)));
                    }
                }
                Block::Table { heading, columns, rows } => {
                    push_heading(&mut out, heading, "## ");
                    let _ = writeln!(out, "| {} |", columns.join(" | "));
                    let _ = writeln!(out, "|{}|", columns.iter().map(|_| "---").collect::<Vec<_>>().join("|"));
                    for r in rows {
                        let cells: Vec<String> = r.iter().map(|v| escape_md(&plain(v))).collect();
                        let _ = writeln!(out, "| {} |", cells.join(" | "));
                    }
                }
                Block::Lines { heading, lines } => {
                    push_heading(&mut out, heading, "## ");
                    for l in lines {
                        let _ = writeln!(out, "- {}", escape_md(l));
                    }
                }
            }
        }
        out
    }

    /// One CSV table per block, separated by blank lines. Field blocks
    /// become `key,value` tables and line blocks a single `line` column.
    fn csv(&self) -> String {
        let mut parts = Vec::new();
        for b in &self.blocks {
            let mut w = csv::Writer::from_writer(Vec::new());
            let result = match b {
                Block::Fields { fields, .. } => w
                    .write_record(["key", "value"])
                    .and_then(|_| fields.iter().try_for_each(|(k, v)| w.write_record([k.as_str(), plain(v).as_str()]))),
                Block::Table { columns, rows, .. } => {
                    w.write_record(columns).and_then(|_| rows.iter().try_for_each(|r| w.write_record(r.iter().map(plain))))
                }
                Block::Lines { lines, .. } if lines.is_empty() => continue,
                Block::Lines { lines, .. } => w.write_record(["line"]).and_then(|_| lines.iter().try_for_each(|l| w.write_record([l]))),
            };
            result.expect("writing to memory");
            let bytes = w.into_inner().expect("writing to memory");
            parts.push(String::from_utf8(bytes).expect("UTF-8 input"));
        }
        parts.join("\n")
    }

    fn json(&self) -> String {
        let blocks: Vec<Value> = self
            .blocks
            .iter()
            .map(|b| match b {
                Block::Fields { heading, fields } => {
                    let map: Map<String, Value> = fields.iter().cloned().collect();
                    json!({ "heading": heading, "fields": map })
                }
                Block::Table { heading, columns, rows } => {
                    let rows: Vec<Value> =
                        rows.iter().map(|r| Value::Object(columns.iter().cloned().zip(r.iter().cloned()).collect())).collect();
                    json!({ "heading": heading, "columns": columns, "rows": rows })
                }
                Block::Lines { heading, lines } => json!({ "heading": heading, "lines": lines }),
            })
            .collect();
        let doc = json!({ "title": self.title, "ok": self.ok, "blocks": blocks });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }
}

fn push_heading(out: &mut String, heading: &Option<String>, prefix: &str) {
    if let Some(h) = heading {
        let _ = writeln!(out, "{prefix}{h}");
        if prefix.is_empty() {
            let _ = writeln!(out, "{}", "=".repeat(h.chars().count()));
        } else {
            out.push('\n');
        }
    }
}

/// A JSON value as plain text: strings unquoted, objects flattened to
/// `key: value` pairs.
pub fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::from("-"),
        Value::Array(items) if items.is_empty() => String::from("none"),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(", "),
        Value::Object(map) if map.len() == 2 && map.contains_key("text") && map.contains_key("status") => {
            let text = plain(&map["text"]);
            match map["status"].as_str() {
                Some("verified") => format!("{text} ✓"),
                Some("errata") => format!("{text} ✗"),
                _ => text,
            }
        }
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k}: {}", plain(v))).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn escape_md(s: &str) -> String {
    s.replace('|', "\\|")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("sample");
        r.fields(None, vec![("d", json!(12)), ("name", json!("a|b"))]);
        r.table(Some("rows"), &["x", "y"], vec![vec![json!(1), json!("one, two")], vec![json!(2), Value::Null]]);
        r
    }

    #[test]
    fn text_aligns_columns() {
        let t = sample().render(Format::Text);
        assert!(t.contains("d     12\nname  a|b\n"), "{t}");
        assert!(t.contains("x  y\n-  --------\n1  one, two\n2  -\n"), "{t}");
    }

    #[test]
    fn markdown_escapes_pipes() {
        let m = sample().render(Format::Markdown);
        assert!(m.contains("- **name**: a\\|b"));
        assert!(m.contains("| x | y |\n|---|---|\n| 1 | one, two |"));
    }

    #[test]
    fn csv_quotes_commas() {
        let c = sample().render(Format::Csv);
        assert_eq!(c, "key,value\nd,12\nname,a|b\n\nx,y\n1,\"one, two\"\n2,-\n");
    }

    #[test]
    fn json_keeps_field_order() {
        let j = sample().render(Format::Json);
        let v: Value = serde_json::from_str(&j).unwrap();
        let keys: Vec<&String> = v["blocks"][0]["fields"].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["d", "name"]);
        assert_eq!(v["blocks"][1]["rows"][0]["y"], "one, two");
        assert_eq!(v["ok"], true);
    }
}
