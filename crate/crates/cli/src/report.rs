//! Command output: aligned text tables with an identical JSON mirror.

use cotor_core::{CheckReport, GradedDims};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Text(String),
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Table { title: title.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// One row per degree.
    pub fn graded(title: impl Into<String>, dims: &GradedDims) -> Self {
        let mut t = Table::new(title, &["degree", "dim"]);
        for (deg, d) in dims.degrees().zip(&dims.dims) {
            t.push(vec![deg.into(), (*d).into()]);
        }
        t
    }

    /// One row per check, with both compared numbers when present.
    pub fn check(rep: &CheckReport) -> Self {
        let mut t = Table::new(rep.name.clone(), &["check", "left", "right", "status", "detail"]);
        for r in &rep.rows {
            let num = |v: Option<i64>| v.map_or(Cell::Text("-".into()), Cell::Int);
            t.push(vec![
                r.label.clone().into(),
                num(r.left),
                num(r.right),
                (if r.passed { "ok" } else { "FAIL" }).into(),
                r.detail.clone().into(),
            ]);
        }
        t
    }

    /// A `[p][q]` grid with `p` across and `q` down.
    pub fn grid(title: impl Into<String>, grid: &[Vec<usize>]) -> Self {
        let width = grid.len();
        let height = grid.first().map_or(0, Vec::len);
        let mut cols = vec!["q\\p".to_string()];
        cols.extend((0..width).map(|p| p.to_string()));
        let mut t = Table { title: title.into(), columns: cols, rows: Vec::new() };
        for q in (0..height).rev() {
            let mut row: Vec<Cell> = vec![q.into()];
            row.extend(grid.iter().map(|col| Cell::from(col[q])));
            t.rows.push(row);
        }
        t
    }

    fn render(&self, out: &mut String) {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        for r in &cells {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |parts: &[String]| -> String {
            let padded: Vec<String> =
                parts.iter().zip(&widths).map(|(p, w)| format!("{p}{}", " ".repeat(w - p.chars().count()))).collect();
            padded.join("  ").trim_end().to_string()
        };
        out.push_str(&format!("{}\n", self.title));
        out.push_str(&line(&self.columns));
        out.push('\n');
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&rule.join("  "));
        out.push('\n');
        for r in &cells {
            out.push_str(&line(r));
            out.push('\n');
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub tables: Vec<Table>,
    /// Present for check commands only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip)]
    pub failed: bool,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), tables: Vec::new(), verdict: None, failed: false }
    }

    pub fn table(&mut self, t: Table) {
        self.tables.push(t);
    }

    /// Adds the report's table and records its verdict.
    pub fn check(&mut self, rep: &CheckReport) {
        self.table(Table::check(rep));
        self.verdict_from(rep.passed(), if rep.passed() { "pass" } else { "fail" });
    }

    /// Combines with any earlier verdict: one failure fails the command.
    pub fn verdict_from(&mut self, passed: bool, word: &str) {
        if self.failed {
            return;
        }
        self.failed = !passed;
        self.verdict = Some(word.to_string());
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("$ cotor {}\n", self.command);
        for t in &self.tables {
            out.push('\n');
            t.render(&mut out);
        }
        if let Some(v) = &self.verdict {
            out.push_str(&format!("\nverdict: {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cotor_core::CheckRow;

    #[test]
    fn table_aligns_columns() {
        let mut t = Table::new("t", &["a", "long"]);
        t.push(vec![12usize.into(), "x".into()]);
        let mut out = String::new();
        t.render(&mut out);
        assert_eq!(out, "t\na   long\n--  ----\n12  x\n");
    }

    #[test]
    fn failed_check_sets_verdict() {
        let mut rep = CheckReport::new("c");
        rep.push(CheckRow::compare("degree 0", 1, 2));
        let mut r = Report::new("x");
        r.check(&rep);
        assert!(r.failed);
        assert_eq!(r.verdict.as_deref(), Some("fail"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["tables"][0]["rows"][0][1], 1);
        assert_eq!(json["tables"][0]["rows"][0][2], 2);
    }

    #[test]
    fn grid_puts_q_down() {
        let t = Table::grid("g", &[vec![1, 2], vec![3, 4]]);
        assert_eq!(t.rows[0], vec![Cell::Int(1), Cell::Int(2), Cell::Int(4)]);
        assert_eq!(t.rows[1], vec![Cell::Int(0), Cell::Int(1), Cell::Int(3)]);
    }
}
