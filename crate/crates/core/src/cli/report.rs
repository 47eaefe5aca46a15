use std::fmt::Write as _;

use clap::ValueEnum;
use sha2::{Digest, Sha256};

use crate::exactalg::Betti;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Aligned columns plus a summary.
    #[default]
    Table,
    /// One `key=value` record per line, stable across runs.
    Records,
}

/// One row of a report: ordered `key=value` fields. Values never contain
/// whitespace.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record(pub Vec<(String, String)>);

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        let v: String = value.to_string().split_whitespace().collect::<Vec<_>>().join("_");
        self.0.push((key.to_string(), v));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    /// Parameters and provenance of the run.
    pub header: Record,
    pub records: Vec<Record>,
    /// Human-readable lines, shown in table format only.
    pub summary: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            header: Record::new().with("version", VERSION).with("command", command),
            records: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.header = self.header.with(key, value);
        self
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.summary.push(line.into());
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Records => self.render_records(),
            OutputFormat::Table => self.render_table(),
        }
    }

    fn render_records(&self) -> String {
        let mut out = String::new();
        let line = |r: &Record| r.0.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
        writeln!(out, "{}", line(&self.header)).unwrap();
        for r in &self.records {
            writeln!(out, "{}", line(r)).unwrap();
        }
        out
    }

    fn render_table(&self) -> String {
        let mut out = format!("ichom {VERSION} {}\n", self.command);
        for (k, v) in self.header.0.iter().skip(2) {
            writeln!(out, "  {k}: {v}").unwrap();
        }
        // Group consecutive records with the same keys into one table.
        let mut i = 0;
        while i < self.records.len() {
            let keys: Vec<&str> = self.records[i].0.iter().map(|(k, _)| k.as_str()).collect();
            let mut j = i;
            while j < self.records.len() && self.records[j].0.iter().map(|(k, _)| k.as_str()).eq(keys.iter().copied()) {
                j += 1;
            }
            let rows = &self.records[i..j];
            let widths: Vec<usize> = keys
                .iter()
                .enumerate()
                .map(|(c, k)| rows.iter().map(|r| r.0[c].1.len()).max().unwrap_or(0).max(k.len()))
                .collect();
            out.push('\n');
            let cells = |vals: Vec<&str>| {
                vals.iter()
                    .zip(&widths)
                    .map(|(v, w)| format!("{v:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", cells(keys.clone())).unwrap();
            for r in rows {
                writeln!(out, "{}", cells(r.0.iter().map(|(_, v)| v.as_str()).collect())).unwrap();
            }
            i = j;
        }
        if !self.summary.is_empty() {
            out.push('\n');
            for s in &self.summary {
                writeln!(out, "{s}").unwrap();
            }
        }
        out
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// `{0:1,1:0,2:0}`.
pub fn fmt_betti(b: &Betti) -> String {
    let parts: Vec<String> = b.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn fmt_pair(p: (usize, usize)) -> String {
    format!("({},{})", p.0, p.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_single_lines() {
        let mut r = Report::new("betti").param("sha256", "abc");
        r.push(Record::new().with("degree", 0).with("rank", 1));
        r.push(Record::new().with("note", "two words"));
        let text = r.render(OutputFormat::Records);
        assert_eq!(
            text,
            format!("version={VERSION} command=betti sha256=abc\ndegree=0 rank=1\nnote=two_words\n")
        );
        let table = r.render(OutputFormat::Table);
        assert!(table.contains("degree  rank\n0       1\n"), "{table}");
    }

    #[test]
    fn digest_and_betti_text() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
        assert_eq!(fmt_betti(&Betti::from([(0, 1), (1, 0)])), "{0:1,1:0}");
    }
}
