//! Exhaustive desk-scale catalogs of rectangles and rectangle sequences,
//! used by the verification suites and the property tests.

use crate::partition::Partition;
use crate::rects::{pseudo_geq, Rect, RectSeq};
use std::collections::BTreeMap;

/// All rectangles with at most `max_cells` cells, in (rows, cols) lex order.
pub fn all_rects(max_cells: usize) -> Vec<Rect> {
    let mut out = Vec::new();
    for rows in 1..=max_cells {
        for cols in 1..=max_cells / rows {
            out.push(Rect { rows, cols });
        }
    }
    out.sort();
    out
}

/// All nonempty ordered sequences with `min_cells <= total cells <=
/// max_cells` and at most `max_rects` rectangles, in lex order.
pub fn all_seqs(max_cells: usize, max_rects: usize) -> Vec<RectSeq> {
    let mut out = Vec::new();
    let mut stack: Vec<Rect> = Vec::new();
    fn go(
        stack: &mut Vec<Rect>,
        used: usize,
        max_cells: usize,
        max_rects: usize,
        out: &mut Vec<RectSeq>,
    ) {
        if !stack.is_empty() {
            out.push(RectSeq::new(stack.clone()));
        }
        if stack.len() == max_rects {
            return;
        }
        for r in all_rects(max_cells - used) {
            stack.push(r);
            go(stack, used + r.cells(), max_cells, max_rects, out);
            stack.pop();
        }
    }
    go(&mut stack, 0, max_cells, max_rects, &mut out);
    out.sort();
    out
}

/// The dominant members of `all_seqs`.
pub fn dominant_seqs(max_cells: usize, max_rects: usize) -> Vec<RectSeq> {
    all_seqs(max_cells, max_rects)
        .into_iter()
        .filter(RectSeq::is_dominant)
        .collect()
}

/// Sequences weakly decreasing under rectangle containment, up to the cell
/// bound (no length cap: containment already forces few rectangles).
pub fn nested_seqs(max_cells: usize) -> Vec<RectSeq> {
    let mut out = Vec::new();
    let mut stack: Vec<Rect> = Vec::new();
    fn go(stack: &mut Vec<Rect>, used: usize, max_cells: usize, out: &mut Vec<RectSeq>) {
        if !stack.is_empty() {
            out.push(RectSeq::new(stack.clone()));
        }
        for r in all_rects(max_cells - used) {
            if stack.last().is_some_and(|top| !top.contains(&r)) {
                continue;
            }
            stack.push(r);
            go(stack, used + r.cells(), max_cells, out);
            stack.pop();
        }
    }
    go(&mut stack, 0, max_cells, &mut out);
    out.sort();
    out
}

/// The per-width height totals of a sequence (width -> summed heights).
/// Splitting and reordering preserve this profile, so only sequences with
/// equal profiles are comparable in the pseudo order.
pub fn width_profile(r: &RectSeq) -> BTreeMap<usize, usize> {
    let mut prof = BTreeMap::new();
    for rect in r.rects() {
        *prof.entry(rect.cols).or_insert(0) += rect.rows;
    }
    prof
}

/// All canonical dominant sequences R with the given sorted content
/// γ(R) = gamma: one choice of height partition per distinct width.
pub fn gamma_class(gamma: &Partition) -> Vec<RectSeq> {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &part in gamma.parts() {
        *mult.entry(part).or_insert(0) += 1;
    }
    // widths descending, as in the canonical dominant order
    let widths: Vec<(usize, usize)> = mult.into_iter().rev().collect();
    let mut out: Vec<RectSeq> = vec![RectSeq::default()];
    for (width, m) in widths {
        let mut next = Vec::new();
        for heights in Partition::all_of(m) {
            for prefix in &out {
                let mut rects = prefix.rects().to_vec();
                rects.extend(heights.parts().iter().map(|&h| Rect { rows: h, cols: width }));
                next.push(RectSeq::new(rects));
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Ordered pairs (i, j), i != j, with seqs[i] pseudo-dominating seqs[j].
pub fn comparable_pairs(seqs: &[RectSeq]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..seqs.len() {
        for j in 0..seqs.len() {
            if i != j && seqs[i].xi() != seqs[j].xi() && pseudo_geq(&seqs[i], &seqs[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rect_counts() {
        assert_eq!(all_rects(1).len(), 1);
        // cells <= 4: 1x1..; count shapes r*c <= 4: (1,1),(1,2),(1,3),(1,4),(2,1),(2,2),(3,1),(4,1)
        assert_eq!(all_rects(4).len(), 8);
    }

    #[test]
    fn seq_enumeration_bounds() {
        let seqs = all_seqs(3, 2);
        assert!(seqs.iter().all(|s| s.cells() <= 3 && s.len() <= 2 && !s.is_empty()));
        // singles: cells<=3 -> 5 rects; pairs with cells<=3: (1,1)+5 choices... count directly
        let singles = seqs.iter().filter(|s| s.len() == 1).count();
        assert_eq!(singles, 5);
        let mut dedup = seqs.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), seqs.len());
    }

    #[test]
    fn nested_sequences_are_nested() {
        for s in nested_seqs(6) {
            assert!(s.is_nested(), "{s:?}");
            assert!(s.is_dominant());
        }
        // a known member
        assert!(nested_seqs(8).contains(&RectSeq::parse("2x2,2x2").unwrap()));
        assert!(!nested_seqs(8).contains(&RectSeq::parse("2x2,1x3").unwrap()));
    }

    #[test]
    fn gamma_class_of_standard_content() {
        let gamma = Partition::new(vec![1, 1, 1]).unwrap();
        let class = gamma_class(&gamma);
        assert_eq!(class.len(), 3);
        for r in &class {
            assert_eq!(r.gamma_partition(), gamma);
            assert!(r.is_dominant());
        }
    }

    #[test]
    fn gamma_class_mixed_widths() {
        // gamma = (2,2,1): width 2 with multiplicity 2, width 1 with 1
        let gamma = Partition::new(vec![2, 2, 1]).unwrap();
        let class = gamma_class(&gamma);
        // heights for width 2: (2) or (1,1); width 1: (1)
        assert_eq!(class.len(), 2);
        assert!(class.contains(&RectSeq::parse("2x2,1x1").unwrap()));
        assert!(class.contains(&RectSeq::parse("1x2,1x2,1x1").unwrap()));
    }

    #[test]
    fn comparable_pairs_are_strict() {
        let gamma = Partition::new(vec![1; 4]).unwrap();
        let class = gamma_class(&gamma);
        let pairs = comparable_pairs(&class);
        for &(i, j) in &pairs {
            assert!(pseudo_geq(&class[i], &class[j]));
            assert!(!pseudo_geq(&class[j], &class[i]));
        }
        // (4x1) dominates (3x1,1x1) dominates (2x1,2x1) etc.
        let top = class.iter().position(|r| r.len() == 1).unwrap();
        let bottom = class.iter().position(|r| r.len() == 4).unwrap();
        assert!(pairs.contains(&(top, bottom)));
    }

    #[test]
    fn width_profile_groups() {
        let a = RectSeq::parse("2x3,1x2").unwrap();
        let b = RectSeq::parse("1x3,1x3,1x2").unwrap();
        let c = RectSeq::parse("2x3,2x2").unwrap();
        assert_eq!(width_profile(&a), width_profile(&b));
        assert_ne!(width_profile(&a), width_profile(&c));
    }
}
