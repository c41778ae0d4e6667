use std::fmt;

/// One line of evidence in a [`CheckReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub label: String,
    pub left: Option<i64>,
    pub right: Option<i64>,
    pub passed: bool,
    pub detail: String,
}

impl CheckRow {
    pub fn axiom(label: impl Into<String>, failure: Option<String>) -> Self {
        CheckRow {
            label: label.into(),
            left: None,
            right: None,
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        }
    }

    /// A row comparing two numbers; passes iff they agree.
    pub fn compare(label: impl Into<String>, left: usize, right: usize) -> Self {
        CheckRow {
            label: label.into(),
            left: Some(left as i64),
            right: Some(right as i64),
            passed: left == right,
            detail: String::new(),
        }
    }

    pub fn flag(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckRow { label: label.into(), left: None, right: None, passed, detail: detail.into() }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

/// Verdict plus per-row evidence. The verdict is derived, never stored: a
/// report passes iff every row passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub rows: Vec<CheckRow>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: CheckRow) {
        self.rows.push(row);
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.passed)
    }

    pub fn row(&self, label: &str) -> Option<&CheckRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.rows.extend(other.rows);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.name, if self.passed() { "pass" } else { "fail" })?;
        for r in &self.rows {
            let mark = if r.passed { "ok  " } else { "FAIL" };
            write!(f, "  {mark} {}", r.label)?;
            if let (Some(l), Some(rt)) = (r.left, r.right) {
                write!(f, " ({l} vs {rt})")?;
            }
            if !r.detail.is_empty() {
                write!(f, " {}", r.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Degree-indexed dimension report.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedDims {
    pub start_degree: i64,
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn new(start_degree: i64, dims: Vec<usize>) -> Self {
        GradedDims { start_degree, dims }
    }

    /// Dimension in `degree`, zero outside the computed range.
    pub fn at(&self, degree: i64) -> usize {
        let i = degree - self.start_degree;
        if i < 0 {
            return 0;
        }
        self.dims.get(i as usize).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.dims.len() as i64).map(move |i| i + self.start_degree)
    }
}
