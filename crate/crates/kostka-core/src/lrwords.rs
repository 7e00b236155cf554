//! Words and tableaux compatible with a rectangle sequence: a word w is
//! compatible with R when, for every block i, the insertion tableau of the
//! subword of w in the i-th subalphabet is the key tableau Y_i. The
//! column-strict tableaux whose row word is compatible generalize
//! Littlewood-Richardson fillings.

use crate::partition::Partition;
use crate::rects::RectSeq;
use crate::rsk::{p_tab, words_of_tableau};
use crate::tableau::{enumerate_cst, Tableau};
use crate::word::{content, restrict};

/// Does every subalphabet restriction of w insert to the corresponding key
/// tableau?
pub fn is_lr_word(w: &[usize], r: &RectSeq) -> bool {
    if content(w, r.alphabet()) != r.gamma() {
        return false;
    }
    (0..r.len()).all(|i| {
        let (lo, hi) = r.subalphabet(i);
        p_tab(&restrict(w, lo, hi)) == r.key(i)
    })
}

/// Is the row word of T compatible with R? (T must be straight.)
pub fn is_lr_tableau(t: &Tableau, r: &RectSeq) -> bool {
    t.is_straight() && is_lr_word(&t.row_word(), r)
}

/// All straight column-strict tableaux of the given shape whose row word is
/// compatible with R, in the lex order of the underlying enumeration.
pub fn enumerate_lrt(shape: &Partition, r: &RectSeq) -> Vec<Tableau> {
    if shape.size() != r.cells() {
        return Vec::new();
    }
    enumerate_cst(shape, &r.gamma())
        .into_iter()
        .filter(|t| is_lr_word(&t.row_word(), r))
        .collect()
}

/// All compatible tableaux of every shape, grouped as (shape, tableaux) with
/// shapes in the descending lex order of partition enumeration. Shapes with
/// no compatible tableau are omitted.
pub fn enumerate_lrt_all(r: &RectSeq) -> Vec<(Partition, Vec<Tableau>)> {
    let gamma = r.gamma_partition();
    Partition::all_of(r.cells())
        .into_iter()
        .filter(|lam| lam.dominates(&gamma))
        .filter_map(|lam| {
            let ts = enumerate_lrt(&lam, r);
            (!ts.is_empty()).then_some((lam, ts))
        })
        .collect()
}

/// Every word compatible with R: one word per pair (compatible tableau,
/// standard tableau of its shape), via the inverse of row insertion.
pub fn lr_words(r: &RectSeq) -> Vec<Vec<usize>> {
    enumerate_lrt_all(r)
        .into_iter()
        .flat_map(|(_, ts)| ts)
        .flat_map(|t| words_of_tableau(&t))
        .collect()
}
