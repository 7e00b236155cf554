//! Sequences of rectangular shapes: subalphabets, key tableaux, derived
//! statistics (γ, ξ, n), the pseudo order generated by splitting and
//! reordering rectangles, and explicit chains of elementary steps between
//! comparable sequences.

use crate::error::Error;
use crate::partition::Partition;
use crate::tableau::Tableau;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A rectangular partition with `rows` rows and `cols` columns.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rect {
    pub rows: usize,
    pub cols: usize,
}

impl Rect {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Parse(format!("degenerate rectangle {rows}x{cols}")));
        }
        Ok(Rect { rows, cols })
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    pub fn transpose(&self) -> Rect {
        Rect { rows: self.cols, cols: self.rows }
    }

    /// Cellwise containment of rectangles.
    pub fn contains(&self, other: &Rect) -> bool {
        self.rows >= other.rows && self.cols >= other.cols
    }

    /// Number of cells shared by two rectangles anchored at the origin.
    pub fn intersection(&self, other: &Rect) -> usize {
        self.rows.min(other.rows) * self.cols.min(other.cols)
    }

    pub fn as_partition(&self) -> Partition {
        Partition::new(vec![self.cols; self.rows]).expect("rectangles are partitions")
    }
}

impl fmt::Debug for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// An ordered sequence of rectangles R = (R_1, ..., R_t). The alphabet
/// [1, n], n = Σ rows(R_j), splits into consecutive subalphabets A_j of sizes
/// rows(R_1), rows(R_2), ....
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RectSeq {
    rects: Vec<Rect>,
}

impl RectSeq {
    pub fn new(rects: Vec<Rect>) -> Self {
        RectSeq { rects }
    }

    /// Parse the `ηxμ` comma list, e.g. `2x3,2x3,3x2` (rows x cols per item).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RectSeq::default());
        }
        let rects = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (r, c) = tok
                    .split_once(['x', 'X'])
                    .ok_or_else(|| Error::Parse(format!("bad rectangle {tok:?}, want RxC")))?;
                let rows = r
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row count {r:?}")))?;
                let cols = c
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad column count {c:?}")))?;
                Rect::new(rows, cols)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RectSeq { rects })
    }

    /// Render as the `ηxμ` comma list.
    pub fn to_spec_string(&self) -> String {
        self.rects
            .iter()
            .map(|r| format!("{}x{}", r.rows, r.cols))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn rect(&self, i: usize) -> Rect {
        self.rects[i]
    }

    /// Size of the alphabet: total number of rectangle rows.
    pub fn alphabet(&self) -> usize {
        self.rects.iter().map(|r| r.rows).sum()
    }

    /// Total number of cells.
    pub fn cells(&self) -> usize {
        self.rects.iter().map(Rect::cells).sum()
    }

    /// The subalphabet interval (lo, hi) of the i-th rectangle, 1-indexed
    /// letters, i 0-indexed.
    pub fn subalphabet(&self, i: usize) -> (usize, usize) {
        let lo: usize = 1 + self.rects[..i].iter().map(|r| r.rows).sum::<usize>();
        (lo, lo + self.rects[i].rows - 1)
    }

    /// Index of the rectangle whose subalphabet contains the letter.
    pub fn block_of_letter(&self, x: usize) -> Option<usize> {
        let mut hi = 0;
        for (i, r) in self.rects.iter().enumerate() {
            hi += r.rows;
            if x <= hi {
                return if x >= 1 { Some(i) } else { None };
            }
        }
        None
    }

    /// The key tableau Y_i: the unique column-strict filling of R_i by the
    /// letters of its subalphabet.
    pub fn key(&self, i: usize) -> Tableau {
        let (lo, _) = self.subalphabet(i);
        let r = self.rects[i];
        Tableau::key_rect(r.rows, r.cols, lo)
    }

    /// The content vector γ(R) = (μ_1^{η_1}, μ_2^{η_2}, ...), length n.
    pub fn gamma(&self) -> Vec<usize> {
        self.rects
            .iter()
            .flat_map(|r| std::iter::repeat(r.cols).take(r.rows))
            .collect()
    }

    /// γ(R) sorted into a partition.
    pub fn gamma_partition(&self) -> Partition {
        Partition::from_multiset(self.gamma())
    }

    /// Split every rectangle into its single rows.
    pub fn rows_seq(&self) -> RectSeq {
        RectSeq {
            rects: self
                .rects
                .iter()
                .flat_map(|r| std::iter::repeat(Rect { rows: 1, cols: r.cols }).take(r.rows))
                .collect(),
        }
    }

    /// Transpose every rectangle in place.
    pub fn transpose_seq(&self) -> RectSeq {
        RectSeq { rects: self.rects.iter().map(Rect::transpose).collect() }
    }

    /// Per-width statistics ξ(R): for each width k, the partition of heights
    /// of the width-k rectangles.
    pub fn xi(&self) -> MultiType {
        let max_w = self.rects.iter().map(|r| r.cols).max().unwrap_or(0);
        let mut per_width: Vec<Vec<usize>> = vec![Vec::new(); max_w];
        for r in &self.rects {
            per_width[r.cols - 1].push(r.rows);
        }
        MultiType::new(per_width.into_iter().map(Partition::from_multiset).collect())
    }

    /// Widths weakly decreasing along the sequence.
    pub fn is_dominant(&self) -> bool {
        self.rects.windows(2).all(|w| w[0].cols >= w[1].cols)
    }

    /// Rectangle containment weakly decreasing along the sequence.
    pub fn is_nested(&self) -> bool {
        self.rects.windows(2).all(|w| w[0].contains(&w[1]))
    }

    /// Canonical dominant rearrangement: sort by width descending, then by
    /// height descending.
    pub fn dominant_canonical(&self) -> RectSeq {
        let mut rects = self.rects.clone();
        rects.sort_by(|a, b| b.cols.cmp(&a.cols).then(b.rows.cmp(&a.rows)));
        RectSeq { rects }
    }

    /// Maximal rectangle width (0 for the empty sequence).
    pub fn max_width(&self) -> usize {
        self.rects.iter().map(|r| r.cols).max().unwrap_or(0)
    }

    /// Maximal rectangle height (0 for the empty sequence).
    pub fn max_height(&self) -> usize {
        self.rects.iter().map(|r| r.rows).max().unwrap_or(0)
    }

    /// Swap adjacent rectangles p and p+1 (0-indexed).
    pub fn swap_adjacent(&self, p: usize) -> Result<RectSeq> {
        if p + 1 >= self.rects.len() {
            return Err(Error::PositionOutOfRange { pos: p, len: self.rects.len() });
        }
        let mut rects = self.rects.clone();
        rects.swap(p, p + 1);
        Ok(RectSeq { rects })
    }

    /// The statistic n(R) = Σ_cells C(r_{i,j}(R), 2) where r_{i,j} counts the
    /// rectangles containing the cell (i, j).
    pub fn n_stat(&self) -> usize {
        let mut total = 0;
        for i in 1..=self.max_height() {
            for j in 1..=self.max_width() {
                let r = self
                    .rects
                    .iter()
                    .filter(|rc| rc.rows >= i && rc.cols >= j)
                    .count();
                total += r * (r.saturating_sub(1)) / 2;
            }
        }
        total
    }
}

impl fmt::Debug for RectSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_spec_string())
    }
}

impl fmt::Display for RectSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_spec_string())
    }
}

/// Per-width partitions ξ^1, ξ^2, ... (index k-1 holds ξ^k). Trailing empty
/// components are trimmed so equal statistics compare equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiType {
    per_width: Vec<Partition>,
}

impl MultiType {
    pub fn new(mut per_width: Vec<Partition>) -> Self {
        while per_width.last().is_some_and(Partition::is_empty) {
            per_width.pop();
        }
        MultiType { per_width }
    }

    /// ξ^k (k >= 1), empty beyond the stored range.
    pub fn component(&self, k: usize) -> Partition {
        self.per_width.get(k - 1).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> &[Partition] {
        &self.per_width
    }

    pub fn max_width(&self) -> usize {
        self.per_width.len()
    }

    /// Componentwise dominance with `self` on the dominant side. Components
    /// whose cell totals differ make the pair incomparable (both splitting
    /// and reordering preserve per-width totals).
    pub fn geq(&self, other: &MultiType) -> bool {
        let kmax = self.max_width().max(other.max_width());
        (1..=kmax).all(|k| self.component(k).dominates(&other.component(k)))
    }
}

impl fmt::Debug for MultiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .per_width
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        write!(f, "{body}")
    }
}

/// The pseudo order on rectangle sequences: R ⊵ S iff every ξ^k(R)
/// dominates ξ^k(S) (with matching per-width cell totals).
pub fn pseudo_geq(r: &RectSeq, s: &RectSeq) -> bool {
    r.xi().geq(&s.xi())
}

/// An elementary step between rectangle sequences, each strictly decreasing
/// in the pseudo order or reordering:
///
/// - `Transfer` moves one row of the rectangle at `pos` to the equal-width
///   rectangle at pos+1: heights (a, b) become (a-1, b+1), requiring
///   a-1 >= b+1;
/// - `SplitOff` carves a new single-row rectangle of the same width out of
///   the rectangle at `pos`, inserting it at pos+1 (the b = 0 case of
///   `Transfer`);
/// - `Swap` exchanges the rectangles at (pos, pos+1).
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ElemStep {
    Transfer { pos: usize },
    SplitOff { pos: usize },
    Swap { pos: usize },
}

/// Replay one elementary step on a sequence.
pub fn apply_step(seq: &RectSeq, step: ElemStep) -> Result<RectSeq> {
    match step {
        ElemStep::Swap { pos } => seq.swap_adjacent(pos),
        ElemStep::Transfer { pos } => {
            if pos + 1 >= seq.len() {
                return Err(Error::PositionOutOfRange { pos, len: seq.len() });
            }
            let (a, b) = (seq.rect(pos), seq.rect(pos + 1));
            if a.cols != b.cols || a.rows < b.rows + 2 {
                return Err(Error::Parse(format!(
                    "transfer step needs an equal-width pair with height gap >= 2, got {a:?},{b:?}"
                )));
            }
            let mut rects = seq.rects().to_vec();
            rects[pos] = Rect { rows: a.rows - 1, cols: a.cols };
            rects[pos + 1] = Rect { rows: b.rows + 1, cols: b.cols };
            Ok(RectSeq::new(rects))
        }
        ElemStep::SplitOff { pos } => {
            if pos >= seq.len() {
                return Err(Error::PositionOutOfRange { pos, len: seq.len() });
            }
            let a = seq.rect(pos);
            if a.rows < 2 {
                return Err(Error::Parse(format!(
                    "split-off step needs at least two rows, got {a:?}"
                )));
            }
            let mut rects = seq.rects().to_vec();
            rects[pos] = Rect { rows: a.rows - 1, cols: a.cols };
            rects.insert(pos + 1, Rect { rows: 1, cols: a.cols });
            Ok(RectSeq::new(rects))
        }
    }
}

/// Record adjacent swaps that sort `cur` into its canonical dominant order.
fn sort_steps(cur: &mut RectSeq, steps: &mut Vec<ElemStep>) {
    let mut rects = cur.rects().to_vec();
    let order = |a: &Rect, b: &Rect| b.cols.cmp(&a.cols).then(b.rows.cmp(&a.rows));
    loop {
        let mut swapped = false;
        for p in 0..rects.len().saturating_sub(1) {
            if order(&rects[p], &rects[p + 1]) == std::cmp::Ordering::Greater {
                rects.swap(p, p + 1);
                steps.push(ElemStep::Swap { pos: p });
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    *cur = RectSeq::new(rects);
}

/// Record adjacent swaps that rearrange `cur` (a permutation of `target`)
/// into exactly `target`.
fn match_order_steps(cur: &mut RectSeq, target: &RectSeq, steps: &mut Vec<ElemStep>) {
    let mut rects = cur.rects().to_vec();
    for idx in 0..target.len() {
        let want = target.rect(idx);
        let found = (idx..rects.len())
            .find(|&q| rects[q] == want)
            .expect("cur is a permutation of target");
        for q in (idx..found).rev() {
            rects.swap(q, q + 1);
            steps.push(ElemStep::Swap { pos: q });
        }
    }
    *cur = RectSeq::new(rects);
}

/// A chain of elementary steps transforming R into exactly S. Requires
/// R ⊵ S in the pseudo order. The canonical chain first sorts into dominant
/// order, then performs splits within width classes (reordering as needed to
/// make the split pair adjacent), and finally permutes into S's ordering.
pub fn chain_between(r: &RectSeq, s: &RectSeq) -> Result<Vec<ElemStep>> {
    if !pseudo_geq(r, s) {
        return Err(Error::NotComparable(r.to_spec_string(), s.to_spec_string()));
    }
    let mut steps = Vec::new();
    let mut cur = r.clone();
    let target_xi = s.xi();
    loop {
        sort_steps(&mut cur, &mut steps);
        let cur_xi = cur.xi();
        let kmax = cur_xi.max_width().max(target_xi.max_width());
        let Some(k) = (1..=kmax).find(|&k| cur_xi.component(k) != target_xi.component(k)) else {
            break;
        };
        let h = cur_xi.component(k);
        let g = target_xi.component(k);
        // first index where h exceeds g, and first later index where it lags
        let rows = h.len().max(g.len());
        let i = (0..rows)
            .find(|&i| h.part(i) > g.part(i))
            .ok_or_else(|| Error::Internal("dominance walk lost excess".into()))?;
        let j = (i + 1..rows)
            .find(|&j| h.part(j) < g.part(j))
            .ok_or_else(|| Error::Internal("dominance walk lost deficit".into()))?;
        // in dominant order the width-k class is contiguous, heights descending
        let class_start = cur
            .rects()
            .iter()
            .position(|rc| rc.cols == k)
            .ok_or_else(|| Error::Internal("width class vanished".into()))?;
        let step = if j < h.len() {
            // bring the deficit rectangle next to the excess one, then move a row
            let (p_i, p_j) = (class_start + i, class_start + j);
            for q in (p_i + 1..p_j).rev() {
                cur = apply_step(&cur, ElemStep::Swap { pos: q })?;
                steps.push(ElemStep::Swap { pos: q });
            }
            ElemStep::Transfer { pos: p_i }
        } else {
            // the deficit is a part the current class does not have yet
            ElemStep::SplitOff { pos: class_start + i }
        };
        cur = apply_step(&cur, step)?;
        steps.push(step);
    }
    match_order_steps(&mut cur, s, &mut steps);
    debug_assert_eq!(&cur, s);
    Ok(steps)
}
