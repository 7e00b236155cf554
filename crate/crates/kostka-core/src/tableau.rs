//! Column-strict tableaux of straight or skew shape.
//!
//! Rows are stored top row first. A skew tableau keeps, for each row, the
//! number of missing cells on the left (the inner shape); straight shapes are
//! the all-zero case. Trailing rows without cells are trimmed so that equal
//! fillings compare equal.
//!
//! Text format: one row per line, space-separated letters, top row first;
//! inner cells are written as `.`. JSON format:
//! `{"shape": [...], "inner": [...], "rows": [[...], ...]}`.

use crate::error::Error;
use crate::partition::Partition;
use crate::word;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A column-strict tableau: rows weakly increase left to right, columns
/// strictly increase top to bottom.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Build a skew tableau from per-row inner offsets and row fillings.
    pub fn new(inner: Vec<usize>, rows: Vec<Vec<usize>>) -> Result<Self> {
        if inner.len() > rows.len() && inner[rows.len()..].iter().any(|&x| x > 0) {
            return Err(Error::InnerNotContained {
                inner,
                outer: rows.iter().map(Vec::len).collect(),
            });
        }
        let mut inner = inner;
        inner.resize(rows.len(), 0);
        let mut t = Tableau { inner, rows };
        t.trim();
        t.validate()?;
        Ok(t)
    }

    /// Build a straight-shape tableau.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(Vec::new(), rows)
    }

    /// The empty tableau.
    pub fn empty() -> Self {
        Tableau::default()
    }

    /// The key tableau of a rectangle: `height` rows of `width` copies of the
    /// letters `lo, lo+1, ...` (row i filled with the i-th letter from `lo`).
    pub fn key_rect(height: usize, width: usize, lo: usize) -> Self {
        let rows = (0..height).map(|i| vec![lo + i; width]).collect();
        Tableau { inner: vec![0; height], rows }
    }

    /// The key tableau of a partition: row i filled with the letter i.
    pub fn key(shape: &crate::partition::Partition) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![i + 1; len])
            .collect();
        Tableau { inner: vec![0; shape.len()], rows }
    }

    fn trim(&mut self) {
        while let Some(last) = self.rows.last() {
            if last.is_empty() && self.inner.last() == Some(&0) {
                self.rows.pop();
                self.inner.pop();
            } else if last.is_empty() && self.rows.iter().all(Vec::is_empty) {
                // only inner cells remain anywhere: the filling is empty
                self.rows.clear();
                self.inner.clear();
            } else {
                break;
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let outer: Vec<usize> = (0..self.rows.len())
            .map(|i| self.inner[i] + self.rows[i].len())
            .collect();
        if outer.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotColumnStrict(format!(
                "outer shape {outer:?} is not a partition"
            )));
        }
        if self.inner.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotColumnStrict(format!(
                "inner shape {:?} is not a partition",
                self.inner
            )));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::LetterOutOfRange { letter: 0, alphabet: 0 });
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NotColumnStrict(format!(
                    "row {i} is not weakly increasing: {row:?}"
                )));
            }
        }
        for i in 1..self.rows.len() {
            for j in self.inner[i]..self.inner[i] + self.rows[i].len() {
                if let Some(above) = self.letter_at(i - 1, j) {
                    let here = self.letter_at(i, j).unwrap();
                    if above >= here {
                        return Err(Error::NotColumnStrict(format!(
                            "column {j} has {above} above {here}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Letter at (row, col) in absolute 0-indexed coordinates, if the cell is
    /// part of the filling.
    pub fn letter_at(&self, row: usize, col: usize) -> Option<usize> {
        let r = self.rows.get(row)?;
        if col < self.inner[row] {
            return None;
        }
        r.get(col - self.inner[row]).copied()
    }

    /// The outer shape.
    pub fn shape(&self) -> Partition {
        Partition::new(
            (0..self.rows.len())
                .map(|i| self.inner[i] + self.rows[i].len())
                .collect::<Vec<_>>(),
        )
        .expect("outer shape validated at construction")
    }

    /// The inner shape (empty for straight tableaux).
    pub fn inner_shape(&self) -> Partition {
        Partition::new(self.inner.clone()).expect("inner shape validated at construction")
    }

    /// Row fillings, top row first (without inner offsets).
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Per-row inner offsets.
    pub fn inner_offsets(&self) -> &[usize] {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&x| x == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of cells in the filling.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Largest letter (0 if empty).
    pub fn max_letter(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Row-reading word: rows bottom to top, each left to right.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Column-reading word: columns left to right, each bottom to top.
    pub fn col_word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.size());
        let cols = self.rows.first().map_or(0, |r| self.inner[0] + r.len());
        for j in 0..cols {
            for i in (0..self.rows.len()).rev() {
                if let Some(x) = self.letter_at(i, j) {
                    w.push(x);
                }
            }
        }
        w
    }

    /// Content vector over [1, alphabet].
    pub fn content(&self, alphabet: usize) -> Vec<usize> {
        let mut c = vec![0usize; alphabet];
        for &x in self.rows.iter().flatten() {
            if x >= 1 && x <= alphabet {
                c[x - 1] += 1;
            }
        }
        c
    }

    /// True for a straight tableau with letters exactly 1..=size, each once.
    pub fn is_standard(&self) -> bool {
        if !self.is_straight() {
            return false;
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &x in self.rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// Restriction to the letters in [lo, hi]: the sub-filling at its original
    /// cell positions, as a (generally skew) tableau.
    pub fn restrict(&self, lo: usize, hi: usize) -> Tableau {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let start = row.iter().take_while(|&&x| x < lo).count();
            let stop = row.iter().take_while(|&&x| x <= hi).count();
            inner.push(self.inner[i] + start);
            rows.push(row[start..stop].to_vec());
        }
        let mut t = Tableau { inner, rows };
        t.trim();
        debug_assert!(t.validate().is_ok());
        t
    }

    /// The same filling with every letter shifted by `delta`; cell positions
    /// are unchanged. Panics on letter underflow (letters stay >= 1).
    pub fn shift_letters(&self, delta: i64) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| {
                        let y = x as i64 + delta;
                        assert!(y >= 1, "letter shift below 1");
                        y as usize
                    })
                    .collect()
            })
            .collect();
        Tableau { inner: self.inner.clone(), rows }
    }

    /// Render in the text format (rows top first, inner cells as `.`).
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return String::new();
        }
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut toks: Vec<String> = vec![".".into(); self.inner[i]];
            toks.extend(row.iter().map(|x| x.to_string()));
            out.push_str(&toks.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse the text format. Blank input parses as the empty tableau.
    pub fn parse_text(s: &str) -> Result<Self> {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut off = 0usize;
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                if tok == "." {
                    if !row.is_empty() {
                        return Err(Error::Parse("'.' after a letter in a tableau row".into()));
                    }
                    off += 1;
                } else {
                    let x = tok
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad tableau entry {tok:?}")))?;
                    row.push(x);
                }
            }
            inner.push(off);
            rows.push(row);
        }
        Tableau::new(inner, rows)
    }

    /// Serialize to the JSON object format.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableauJson {
            shape: self.shape().parts().to_vec(),
            inner: self.inner.clone(),
            rows: self.rows.clone(),
        })
        .expect("tableau serialization cannot fail")
    }

    /// Parse the JSON object format; the redundant `shape` field is checked.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let tj: TableauJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("bad tableau JSON: {e}")))?;
        let t = Tableau::new(tj.inner, tj.rows)?;
        if t.shape().parts() != tj.shape.as_slice() {
            return Err(Error::Parse(format!(
                "declared shape {:?} does not match rows (computed {:?})",
                tj.shape,
                t.shape().parts()
            )));
        }
        Ok(t)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    #[serde(default)]
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            shape: self.shape().parts().to_vec(),
            inner: self.inner.clone(),
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let tj = TableauJson::deserialize(d)?;
        Tableau::new(tj.inner, tj.rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "[empty tableau]");
        }
        let text = self.to_text();
        write!(f, "[{}]", text.trim_end().replace('\n', " / "))
    }
}

/// All column-strict tableaux of the given straight shape and exact content
/// (entry i-1 = multiplicity of letter i). Output is ordered by the
/// top-to-bottom concatenation of rows, lexicographically.
pub fn enumerate_cst(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    if shape.size() != content.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    if shape.is_empty() {
        out.push(Tableau::empty());
        return out;
    }
    let parts = shape.parts().to_vec();
    let n = content.len();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&p| vec![0; p]).collect();
    let mut budget = content.to_vec();

    fn rec(
        parts: &[usize],
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        budget: &mut Vec<usize>,
        i: usize,
        j: usize,
        out: &mut Vec<Tableau>,
    ) {
        if i == parts.len() {
            out.push(Tableau {
                inner: vec![0; parts.len()],
                rows: rows.clone(),
            });
            return;
        }
        let (ni, nj) = if j + 1 < parts[i] { (i, j + 1) } else { (i + 1, 0) };
        let min_left = if j > 0 { rows[i][j - 1] } else { 1 };
        let min_above = if i > 0 && j < parts[i - 1] { rows[i - 1][j] + 1 } else { 1 };
        let lo = min_left.max(min_above);
        for x in lo..=n {
            if budget[x - 1] == 0 {
                continue;
            }
            budget[x - 1] -= 1;
            rows[i][j] = x;
            rec(parts, n, rows, budget, ni, nj, out);
            budget[x - 1] += 1;
        }
    }
    rec(&parts, n, &mut rows, &mut budget, 0, 0, &mut out);
    out
}

/// All standard tableaux of the given straight shape.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    enumerate_cst(shape, &vec![1; shape.size()])
}

/// Content of a word as a full vector over its own maximal letter.
pub fn word_content(w: &[usize]) -> Vec<usize> {
    word::content(w, word::max_letter(w))
}
