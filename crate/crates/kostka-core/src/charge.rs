//! Grading statistics on LR words: the two-rectangle statistics d and d̃,
//! the orbit-averaged generalized charge and cocharge, and the classical
//! Lascoux–Schützenberger charge for words of partition content.

use crate::embed::{arrangement_orbit, arrangement_stabilizer};
use crate::error::Error;
use crate::lrwords::is_lr_word;
use crate::partition::Partition;
use crate::rects::{Rect, RectSeq};
use crate::rsk::p_tab;
use crate::word;
use crate::Result;

/// Cells of `shape` strictly east of column `col` (columns 1-indexed).
fn cells_east_of(shape: &Partition, col: usize) -> usize {
    shape.parts().iter().map(|&p| p.saturating_sub(col)).sum()
}

/// Cells of `shape` strictly south of row `row` (rows 1-indexed).
fn cells_south_of(shape: &Partition, row: usize) -> usize {
    shape.parts().iter().skip(row).sum()
}

/// (d, d̃) for a two-rectangle LR word over letters based at 1, without
/// validating membership. The complementarity d + d̃ = |R1 ∩ R2| is a
/// theorem; it is asserted so a definition drift would surface immediately.
fn pair_stats_unchecked(w: &[usize], r1: Rect, r2: Rect) -> (usize, usize) {
    let shape = p_tab(w).shape();
    let east = cells_east_of(&shape, r1.cols.max(r2.cols));
    let south = cells_south_of(&shape, r1.rows.max(r2.rows));
    debug_assert_eq!(
        east + south,
        r1.rows.min(r2.rows) * r1.cols.min(r2.cols),
        "d + d̃ must equal the cell count of the rectangle intersection"
    );
    (east, south)
}

fn validate_pair(w: &[usize], r1: Rect, r2: Rect) -> Result<()> {
    if !is_lr_word(w, &RectSeq::new(vec![r1, r2])) {
        return Err(Error::NotLrWord(format!("{w:?} for the pair {r1:?},{r2:?}")));
    }
    Ok(())
}

/// Number of cells of the shape of P(w) strictly east of the column
/// max(cols(R1), cols(R2)), for w an LR word of the pair (R1, R2).
pub fn d_pair(w: &[usize], r1: Rect, r2: Rect) -> Result<usize> {
    validate_pair(w, r1, r2)?;
    Ok(pair_stats_unchecked(w, r1, r2).0)
}

/// Number of cells of the shape of P(w) strictly south of the row
/// max(rows(R1), rows(R2)); complementary to `d_pair` within |R1 ∩ R2|.
pub fn dtilde_pair(w: &[usize], r1: Rect, r2: Rect) -> Result<usize> {
    validate_pair(w, r1, r2)?;
    Ok(pair_stats_unchecked(w, r1, r2).1)
}

const MAX_RECTS: usize = 10;
const MAX_ARRANGEMENTS: usize = 100_000;

#[derive(Clone, Copy, PartialEq, Eq)]
enum PairStat {
    East,
    South,
}

/// Average of the weighted adjacent-pair statistic over the symmetric-group
/// orbit of (R, w) under the adjacent-swap bijections. Since swapping equal
/// rectangles is the identity, the sum runs over distinct arrangements and
/// divides by their number; the result is asserted to be an exact integer.
fn orbit_average(w: &[usize], r: &RectSeq, stat: PairStat) -> Result<usize> {
    if !is_lr_word(w, r) {
        return Err(Error::NotLrWord(format!("{w:?} for {}", r.to_spec_string())));
    }
    let t = r.len();
    if t <= 1 {
        return Ok(0);
    }
    if t > MAX_RECTS {
        return Err(Error::SizeGuard(format!(
            "orbit average over {t} rectangles exceeds the limit of {MAX_RECTS}"
        )));
    }
    let factorial: usize = (1..=t).product();
    let expected = factorial / arrangement_stabilizer(r);
    if expected > MAX_ARRANGEMENTS {
        return Err(Error::SizeGuard(format!(
            "{expected} distinct arrangements exceed the limit of {MAX_ARRANGEMENTS}"
        )));
    }
    let mut total = 0usize;
    let visited = arrangement_orbit(w, r, |seq, word| {
        for i in 0..t - 1 {
            let (lo, _) = seq.subalphabet(i);
            let (_, hi) = seq.subalphabet(i + 1);
            let sub: Vec<usize> =
                word::restrict(word, lo, hi).iter().map(|&x| x - lo + 1).collect();
            let (east, south) = pair_stats_unchecked(&sub, seq.rect(i), seq.rect(i + 1));
            let value = if stat == PairStat::East { east } else { south };
            total += (t - 1 - i) * value;
        }
    })?;
    if visited != expected {
        return Err(Error::Internal(format!(
            "orbit visited {visited} arrangements, expected {expected}"
        )));
    }
    if total % visited != 0 {
        return Err(Error::Internal(format!(
            "orbit sum {total} is not divisible by the orbit size {visited}"
        )));
    }
    Ok(total / visited)
}

/// Generalized charge of an LR word: the orbit average of the weighted
/// east statistics of adjacent pairs.
pub fn charge_r(w: &[usize], r: &RectSeq) -> Result<usize> {
    orbit_average(w, r, PairStat::East)
}

/// Generalized cocharge: the same average with the complementary south
/// statistic; charge_r + cocharge_r = n(R).
pub fn cocharge_r(w: &[usize], r: &RectSeq) -> Result<usize> {
    orbit_average(w, r, PairStat::South)
}

/// Charge of a tableau as the charge of its row word.
pub fn charge_tab(t: &crate::tableau::Tableau, r: &RectSeq) -> Result<usize> {
    charge_r(&t.row_word(), r)
}

/// Cocharge of a tableau as the cocharge of its row word.
pub fn cocharge_tab(t: &crate::tableau::Tableau, r: &RectSeq) -> Result<usize> {
    cocharge_r(&t.row_word(), r)
}

fn partition_content(w: &[usize]) -> Result<Partition> {
    let content = word::content(w, word::max_letter(w));
    Partition::new(content.clone())
        .map_err(|_| Error::ContentMismatch(format!("content {content:?} is not a partition")))
}

/// Classical Lascoux–Schützenberger charge of a word of partition content:
/// repeatedly extract a standard subword (rightmost 1, then for each next
/// letter the rightmost occurrence strictly left of the cursor, wrapping to
/// the rightmost overall when none) and add its index sum, where the index
/// starts at 0 on letter 1 and increments exactly when the next letter lies
/// to the right of the previous one.
pub fn ls_charge(w: &[usize]) -> Result<usize> {
    partition_content(w)?;
    let mut remaining: Vec<(usize, usize)> = w.iter().copied().enumerate().collect();
    let mut total = 0;
    while !remaining.is_empty() {
        let mut picked: Vec<usize> = Vec::new(); // indices into `remaining`
        let mut cursor = match remaining.iter().rposition(|&(_, x)| x == 1) {
            Some(i) => i,
            None => {
                return Err(Error::Internal(
                    "nonempty remainder without the letter 1".into(),
                ))
            }
        };
        picked.push(cursor);
        let mut letter = 1;
        loop {
            let target = letter + 1;
            let next = remaining[..cursor]
                .iter()
                .rposition(|&(_, x)| x == target)
                .or_else(|| remaining.iter().rposition(|&(_, x)| x == target));
            match next {
                Some(i) => {
                    picked.push(i);
                    cursor = i;
                    letter = target;
                }
                None => break,
            }
        }
        // positions in the original order determine the index increments
        let mut by_letter = picked.clone();
        by_letter.sort_unstable_by_key(|&i| remaining[i].1);
        let mut index = 0;
        for pair in by_letter.windows(2) {
            if remaining[pair[1]].0 > remaining[pair[0]].0 {
                index += 1;
            }
            total += index;
        }
        picked.sort_unstable();
        for i in picked.into_iter().rev() {
            remaining.remove(i);
        }
    }
    Ok(total)
}

/// Classical cocharge: n(content) − charge.
pub fn ls_cocharge(w: &[usize]) -> Result<usize> {
    let mu = partition_content(w)?;
    Ok(mu.n_stat() - ls_charge(w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lrwords::lr_words;
    use crate::tableau::Tableau;
    use crate::word;

    fn seq(s: &str) -> RectSeq {
        RectSeq::parse(s).unwrap()
    }

    #[test]
    fn pair_statistics_on_the_printed_transfer_example() {
        let t = Tableau::parse_text("1 1 1 5 5\n2 2 2 6\n3 3 3\n4 4 4\n5 6\n6").unwrap();
        let w = t.row_word();
        let (a, b) = (Rect::new(4, 3).unwrap(), Rect::new(2, 3).unwrap());
        // shape (5,4,3,3,2,1): cells east of column 3 are 2 + 1 = 3,
        // cells south of row 4 are 2 + 1 = 3, intersection (2,3) has 6 cells
        assert_eq!(d_pair(&w, a, b).unwrap(), 3);
        assert_eq!(dtilde_pair(&w, a, b).unwrap(), 3);
        assert_eq!(charge_r(&w, &seq("4x3,2x3")).unwrap(), 3);
        assert_eq!(cocharge_r(&w, &seq("4x3,2x3")).unwrap(), 3);
    }

    #[test]
    fn rectangular_stack_has_no_east_cells() {
        // the full key stack of (3^6) for heights (4,2)
        let t = Tableau::parse_text("1 1 1\n2 2 2\n3 3 3\n4 4 4\n5 5 5\n6 6 6").unwrap();
        let w = t.row_word();
        let (a, b) = (Rect::new(4, 3).unwrap(), Rect::new(2, 3).unwrap());
        assert_eq!(d_pair(&w, a, b).unwrap(), 0);
        assert_eq!(dtilde_pair(&w, a, b).unwrap(), 6);
    }

    #[test]
    fn complementarity_is_exhaustive_on_small_pairs() {
        for r in ["1x2,2x1", "2x2,1x2", "2x1,1x3", "2x2,2x2", "3x1,1x2"].map(seq) {
            let (a, b) = (r.rect(0), r.rect(1));
            let meet = a.rows.min(b.rows) * a.cols.min(b.cols);
            for w in lr_words(&r) {
                assert_eq!(
                    d_pair(&w, a, b).unwrap() + dtilde_pair(&w, a, b).unwrap(),
                    meet,
                    "{w:?}"
                );
            }
        }
    }

    #[test]
    fn single_rectangle_charge_is_zero() {
        let r = seq("2x2");
        let w = vec![2, 2, 1, 1];
        assert_eq!(charge_r(&w, &r).unwrap(), 0);
        assert_eq!(cocharge_r(&w, &r).unwrap(), 0);
    }

    #[test]
    fn two_singleton_rows_give_the_classical_values() {
        let r = seq("1x1,1x1");
        assert_eq!(charge_r(&[1, 2], &r).unwrap(), 1);
        assert_eq!(charge_r(&[2, 1], &r).unwrap(), 0);
        assert_eq!(cocharge_r(&[1, 2], &r).unwrap(), 0);
        assert_eq!(cocharge_r(&[2, 1], &r).unwrap(), 1);
    }

    #[test]
    fn charge_plus_cocharge_is_the_grading_constant() {
        for r in ["1x2,2x1", "2x2,1x2,1x1", "1x1,1x1,1x1", "2x1,1x2,1x1"].map(seq) {
            let n = r.n_stat();
            for w in lr_words(&r) {
                assert_eq!(
                    charge_r(&w, &r).unwrap() + cocharge_r(&w, &r).unwrap(),
                    n,
                    "{w:?} for {}",
                    r.to_spec_string()
                );
            }
        }
    }

    #[test]
    fn charge_agrees_with_ls_charge_in_the_kostka_case() {
        for mu in [vec![2, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1]] {
            let mu = Partition::new(mu).unwrap();
            let rows = RectSeq::new(
                mu.parts().iter().map(|&c| Rect::new(1, c).unwrap()).collect(),
            );
            for w in word::all_words(mu.size(), mu.len()) {
                if word::content(&w, mu.len()) != mu.parts() {
                    continue;
                }
                assert_eq!(
                    charge_r(&w, &rows).unwrap(),
                    ls_charge(&w).unwrap(),
                    "{w:?} content {:?}",
                    mu.parts()
                );
            }
        }
    }

    #[test]
    fn ls_charge_hand_values() {
        assert_eq!(ls_charge(&[3, 1, 2]).unwrap(), 2);
        assert_eq!(ls_charge(&[2, 1, 3]).unwrap(), 1);
        assert_eq!(ls_charge(&[1, 2, 3]).unwrap(), 3);
        assert_eq!(ls_charge(&[3, 2, 1]).unwrap(), 0);
        assert_eq!(ls_charge(&[1, 1, 2]).unwrap(), 1);
        assert_eq!(ls_charge(&[2, 1, 1]).unwrap(), 0);
        assert_eq!(ls_charge(&[2, 1, 1, 2]).unwrap(), 1);
        assert_eq!(ls_charge(&[1, 1, 2, 2]).unwrap(), 2);
        assert_eq!(ls_charge(&[2, 2, 1, 1]).unwrap(), 0);
    }

    #[test]
    fn key_words_have_charge_zero_and_rows_the_maximum() {
        for mu in [vec![3, 2], vec![2, 2, 1], vec![4, 1]] {
            let mu = Partition::new(mu).unwrap();
            let key = Tableau::key(&mu).row_word();
            assert_eq!(ls_charge(&key).unwrap(), 0);
            assert_eq!(ls_cocharge(&key).unwrap(), mu.n_stat());
            // one-row arrangement: all copies of i precede all copies of i+1
            let sorted: Vec<usize> = {
                let mut v = Vec::new();
                for (i, &m) in mu.parts().iter().enumerate() {
                    v.extend(std::iter::repeat(i + 1).take(m));
                }
                v
            };
            assert_eq!(ls_charge(&sorted).unwrap(), mu.n_stat());
        }
    }

    #[test]
    fn charge_is_constant_on_knuth_classes() {
        let r = seq("2x2,1x2,1x1");
        let mut by_p: std::collections::HashMap<Vec<Vec<usize>>, usize> =
            std::collections::HashMap::new();
        for w in lr_words(&r) {
            let p = p_tab(&w).rows().to_vec();
            let c = charge_r(&w, &r).unwrap();
            if let Some(&prev) = by_p.get(&p) {
                assert_eq!(prev, c, "{w:?}");
            } else {
                by_p.insert(p, c);
            }
        }
    }

    #[test]
    fn charge_is_invariant_under_adjacent_swap() {
        for r in ["1x2,2x1", "2x2,1x2", "2x1,1x1,1x2"].map(seq) {
            for w in lr_words(&r) {
                for pos in 0..r.len() - 1 {
                    let v = crate::embed::tau_word(&w, &r, pos).unwrap();
                    let r2 = r.swap_adjacent(pos).unwrap();
                    assert_eq!(
                        charge_r(&w, &r).unwrap(),
                        charge_r(&v, &r2).unwrap(),
                        "{w:?} pos {pos}"
                    );
                }
            }
        }
    }

    #[test]
    fn theta_preserves_charge() {
        for (from, to) in [
            ("4x1,2x1", "3x1,3x1"),
            ("4x1,2x1", "3x1,2x1,1x1"),
            ("2x2,2x2", "2x2,1x2,1x2"),
            ("3x2,1x2", "2x2,2x2"),
        ] {
            let (from, to) = (seq(from), seq(to));
            for w in lr_words(&from) {
                let v = crate::embed::theta_word(&w, &from, &to).unwrap();
                assert_eq!(
                    charge_r(&w, &from).unwrap(),
                    charge_r(&v, &to).unwrap(),
                    "{w:?} {} -> {}",
                    from.to_spec_string(),
                    to.to_spec_string()
                );
            }
        }
    }

    #[test]
    fn non_partition_content_is_rejected() {
        assert!(ls_charge(&[2, 2, 1]).is_err());
        assert!(ls_charge(&[2]).is_err());
    }

    #[test]
    fn non_lr_words_are_rejected() {
        // content (2,1) disagrees with gamma = (1,2)
        assert!(charge_r(&[1, 1, 2], &seq("1x1,1x2")).is_err());
        // the second block is missing its letter 3
        assert!(d_pair(&[1, 2], Rect::new(1, 1).unwrap(), Rect::new(2, 1).unwrap()).is_err());
    }
}
