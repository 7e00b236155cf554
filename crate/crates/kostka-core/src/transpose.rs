//! The shape-transposing bijection on LR words and tableaux, and the
//! generalized standardization maps that characterize it.

use crate::error::Error;
use crate::lrwords::{is_lr_tableau, is_lr_word};
use crate::partition::Partition;
use crate::rects::RectSeq;
use crate::rsk::{inverse_rsk, p_tab, rsk};
use crate::tableau::Tableau;
use crate::word;
use crate::Result;
use std::collections::BTreeSet;

/// The transpose of an LR word: within each subalphabet, the c-th copy
/// (from the left) of every letter is relabeled to the c-th smallest letter
/// of the transposed subalphabet, and the relabeled word is reversed. The
/// result is an LR word for the transposed rectangles.
pub fn tr_word(w: &[usize], r: &RectSeq) -> Result<Vec<usize>> {
    if !is_lr_word(w, r) {
        return Err(Error::NotLrWord(format!("{w:?} for {}", r.to_spec_string())));
    }
    let rt = r.transpose_seq();
    let mut seen = vec![0usize; r.alphabet() + 1];
    let mut out = Vec::with_capacity(w.len());
    for &x in w {
        let block = r
            .block_of_letter(x)
            .ok_or(Error::LetterOutOfRange { letter: x, alphabet: r.alphabet() })?;
        let (tlo, thi) = rt.subalphabet(block);
        seen[x] += 1;
        let y = tlo + seen[x] - 1;
        if y > thi {
            return Err(Error::Internal(format!(
                "letter {x} occurs more than {} times in an LR word",
                thi - tlo + 1
            )));
        }
        out.push(y);
    }
    out.reverse();
    if !is_lr_word(&out, &rt) {
        return Err(Error::Internal(format!(
            "transpose left the LR word set: {w:?} -> {out:?}"
        )));
    }
    Ok(out)
}

/// The transpose of an LR tableau: the tableau of transposed shape whose
/// column word is the transpose of the row word.
pub fn tr_tab(t: &Tableau, r: &RectSeq) -> Result<Tableau> {
    if !is_lr_tableau(t, r) {
        return Err(Error::NotLrWord(format!(
            "tableau is not an LR tableau for {}",
            r.to_spec_string()
        )));
    }
    let out = p_tab(&tr_word(&t.row_word(), r)?);
    if out.shape() != t.shape().conjugate() {
        return Err(Error::Internal(format!(
            "transpose did not transpose the shape:\n{}",
            out.to_text()
        )));
    }
    Ok(out)
}

/// A segmented alphabet with one column-strict anchor tableau per block.
/// A word is anchored when each block restriction inserts to the block's
/// anchor; relabeling maps between two anchor systems of equal block
/// shapes fix the positions of each block and the per-block recording
/// tableaux.
#[derive(Clone, Debug)]
pub struct Anchors {
    blocks: Vec<(usize, usize)>,
    tabs: Vec<Tableau>,
}

/// The standard tableau of the given shape whose rows are consecutive runs
/// starting at `lo`.
fn rowwise_tab(shape: &Partition, lo: usize) -> Tableau {
    let mut next = lo;
    let rows = shape
        .parts()
        .iter()
        .map(|&len| {
            (0..len)
                .map(|_| {
                    let v = next;
                    next += 1;
                    v
                })
                .collect()
        })
        .collect();
    Tableau::straight(rows).expect("rowwise filling is column-strict")
}

/// The standard tableau of the given shape whose columns are consecutive
/// runs starting at `lo`.
fn columnwise_tab(shape: &Partition, lo: usize) -> Tableau {
    let conj = shape.conjugate();
    let col_start: Vec<usize> = conj
        .parts()
        .iter()
        .scan(lo, |acc, &h| {
            let s = *acc;
            *acc += h;
            Some(s)
        })
        .collect();
    let rows = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| (0..len).map(|j| col_start[j] + i).collect())
        .collect();
    Tableau::straight(rows).expect("columnwise filling is column-strict")
}

impl Anchors {
    pub fn new(blocks: Vec<(usize, usize)>, tabs: Vec<Tableau>) -> Result<Self> {
        if blocks.len() != tabs.len() {
            return Err(Error::Parse("one anchor tableau per block is required".into()));
        }
        let mut next = 1;
        for ((lo, hi), tab) in blocks.iter().zip(&tabs) {
            if *lo != next || hi < lo {
                return Err(Error::Parse(format!(
                    "blocks must be consecutive intervals covering the alphabet: [{lo}, {hi}]"
                )));
            }
            if !tab.is_straight() || tab.is_empty() {
                return Err(Error::Parse("anchors must be nonempty straight tableaux".into()));
            }
            let word = tab.row_word();
            if word.iter().any(|&x| x < *lo || x > *hi) {
                return Err(Error::LetterOutOfRange { letter: 0, alphabet: *hi });
            }
            next = hi + 1;
        }
        Ok(Anchors { blocks, tabs })
    }

    /// Anchors of the LR words of `r`: the subalphabets with their
    /// rectangular key tableaux.
    pub fn keys(r: &RectSeq) -> Self {
        let blocks = (0..r.len()).map(|i| r.subalphabet(i)).collect();
        let tabs = (0..r.len()).map(|i| r.key(i)).collect();
        Anchors { blocks, tabs }
    }

    fn standard(r: &RectSeq, columnwise: bool) -> Self {
        let mut blocks = Vec::with_capacity(r.len());
        let mut tabs = Vec::with_capacity(r.len());
        let mut lo = 1;
        for i in 0..r.len() {
            let rect = r.rect(i);
            let size = rect.rows * rect.cols;
            let shape = Partition::new(vec![rect.cols; rect.rows]).expect("rectangle shape");
            blocks.push((lo, lo + size - 1));
            tabs.push(if columnwise {
                columnwise_tab(&shape, lo)
            } else {
                rowwise_tab(&shape, lo)
            });
            lo += size;
        }
        Anchors { blocks, tabs }
    }

    /// Blocks sized by the cell counts of `r`, each anchored by the rowwise
    /// standard filling of the rectangle.
    pub fn rowwise(r: &RectSeq) -> Self {
        Self::standard(r, false)
    }

    /// Blocks sized by the cell counts of `r`, each anchored by the
    /// columnwise standard filling of the rectangle.
    pub fn columnwise(r: &RectSeq) -> Self {
        Self::standard(r, true)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block(&self, i: usize) -> (usize, usize) {
        self.blocks[i]
    }

    pub fn tab(&self, i: usize) -> &Tableau {
        &self.tabs[i]
    }

    /// Whether every block restriction of `w` inserts to the block anchor.
    pub fn contains(&self, w: &[usize]) -> bool {
        let hi = self.blocks.last().map_or(0, |&(_, h)| h);
        if w.iter().any(|&x| x == 0 || x > hi) {
            return false;
        }
        self.blocks
            .iter()
            .zip(&self.tabs)
            .all(|(&(lo, hi), tab)| p_tab(&word::restrict(w, lo, hi)) == *tab)
    }
}

/// Relabel an anchored word from one anchor system to another with the
/// same block shapes: each block restriction keeps its positions and its
/// recording tableau while its insertion tableau becomes the target
/// anchor. This is the unique such bijection.
pub fn std_general(w: &[usize], from: &Anchors, to: &Anchors) -> Result<Vec<usize>> {
    if from.len() != to.len() {
        return Err(Error::Parse("anchor systems must have the same block count".into()));
    }
    for i in 0..from.len() {
        if from.tabs[i].shape() != to.tabs[i].shape() {
            return Err(Error::Parse(format!("anchor shapes differ in block {i}")));
        }
    }
    let mut out = vec![0usize; w.len()];
    for i in 0..from.len() {
        let (lo, hi) = from.blocks[i];
        let positions: Vec<usize> =
            (0..w.len()).filter(|&k| (lo..=hi).contains(&w[k])).collect();
        let sub: Vec<usize> = positions.iter().map(|&k| w[k]).collect();
        let (p, q) = rsk(&sub);
        if p != from.tabs[i] {
            return Err(Error::ContentMismatch(format!(
                "restriction to [{lo}, {hi}] does not insert to its anchor"
            )));
        }
        let replacement = inverse_rsk(&to.tabs[i], &q)?;
        for (k, y) in positions.into_iter().zip(replacement) {
            out[k] = y;
        }
    }
    if out.iter().any(|&x| x == 0) {
        return Err(Error::ContentMismatch("word uses letters outside the alphabet".into()));
    }
    Ok(out)
}

/// Schensted's standardization: ties between equal letters are broken left
/// to right.
pub fn std(w: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0usize; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    out
}

/// The column standardization of an LR word: the relabeling from the
/// rectangular key anchors to the columnwise standard anchors. Its
/// reversal equals the standardization of the transposed word.
pub fn cstd(w: &[usize], r: &RectSeq) -> Result<Vec<usize>> {
    if !is_lr_word(w, r) {
        return Err(Error::NotLrWord(format!("{w:?} for {}", r.to_spec_string())));
    }
    std_general(w, &Anchors::keys(r), &Anchors::columnwise(r))
}

/// Whether the standard word `v` is the standardization of some (then
/// unique) word of content `alpha`: every descent value i (where i+1
/// precedes i) must be a prefix sum of `alpha`.
pub fn std_image_check(v: &[usize], alpha: &[usize]) -> Result<bool> {
    let n = v.len();
    let mut pos = vec![usize::MAX; n + 2];
    for (i, &x) in v.iter().enumerate() {
        if x == 0 || x > n || pos[x] != usize::MAX {
            return Err(Error::NotStandard);
        }
        pos[x] = i;
    }
    if alpha.iter().sum::<usize>() != n {
        return Ok(false);
    }
    let prefixes: BTreeSet<usize> = alpha
        .iter()
        .scan(0usize, |acc, &a| {
            *acc += a;
            Some(*acc)
        })
        .collect();
    for i in 1..n {
        if pos[i + 1] < pos[i] && !prefixes.contains(&i) {
            return Ok(false);
        }
    }
    Ok(true)
}
