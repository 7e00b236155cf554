//! Row and column catabolism, catabolizability with step traces, and the
//! catabolism type of a tableau with partition content.

use crate::error::Error;
use crate::partition::Partition;
use crate::rects::{MultiType, Rect, RectSeq};
use crate::rsk::p_tab;
use crate::tableau::Tableau;
use crate::word;
use crate::Result;

/// Which slice operator drives the catabolism recursion.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CatMode {
    Row,
    Col,
}

fn rows_word(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().rev().flatten().copied().collect()
}

/// The word of the horizontal slicing of `t` between rows r and r+1:
/// north subtableau's row word followed by the south's.
fn h_slice_word(t: &Tableau, r: usize) -> Vec<usize> {
    let rows = t.rows();
    let split = r.min(rows.len());
    let mut w = rows_word(&rows[..split]);
    w.extend(rows_word(&rows[split..]));
    w
}

/// The word of the vertical slicing of `t` between columns c and c+1:
/// east subtableau's row word followed by the west's. Column indices are
/// absolute (inner cells of a skew tableau count).
fn v_slice_word(t: &Tableau, c: usize) -> Vec<usize> {
    let mut east = Vec::new();
    let mut west = Vec::new();
    for (i, row) in t.rows().iter().enumerate().rev() {
        let inn = t.inner_offsets().get(i).copied().unwrap_or(0);
        let split = c.saturating_sub(inn).min(row.len());
        west.extend_from_slice(&row[..split]);
        east.extend_from_slice(&row[split..]);
    }
    east.extend(west);
    east
}

/// Straighten `t` by the horizontal slice product between rows r and r+1.
pub fn h_op(t: &Tableau, r: usize) -> Tableau {
    p_tab(&h_slice_word(t, r))
}

/// Straighten `t` by the vertical slice product between columns c and c+1.
pub fn v_op(t: &Tableau, c: usize) -> Tableau {
    p_tab(&v_slice_word(t, c))
}

/// One catabolism step: require `s` restricted to [lo, lo+rect.rows-1] to be
/// the key of `rect` based at `lo`, remove it, and straighten the remainder
/// by the slice product (rows for `Row`, columns for `Col`).
pub fn cat_step(s: &Tableau, rect: Rect, lo: usize, mode: CatMode) -> Result<Tableau> {
    let hi = lo + rect.rows - 1;
    let found = s.restrict(lo, hi);
    let key = Tableau::key_rect(rect.rows, rect.cols, lo);
    if found != key {
        return Err(Error::ContentMismatch(format!(
            "letters [{lo}, {hi}] do not fill the {}x{} key based at {lo}",
            rect.rows, rect.cols
        )));
    }
    let rest = s.restrict(hi + 1, usize::MAX);
    Ok(match mode {
        CatMode::Row => h_op(&rest, rect.rows),
        CatMode::Col => v_op(&rest, rect.cols),
    })
}

/// One recorded step of a catabolism run.
#[derive(Clone, Debug)]
pub struct CatStep {
    /// Base letter of the key removed at this step.
    pub lo: usize,
    pub rect: Rect,
    /// The straightened remainder after the step.
    pub after: Tableau,
}

/// Outcome of a catabolizability test, with the per-step tableaux.
#[derive(Clone, Debug)]
pub struct CatTrace {
    pub ok: bool,
    pub steps: Vec<CatStep>,
    /// Present when `ok` is false: why the recursion stopped.
    pub reason: Option<String>,
}

/// Run the catabolism recursion for `r` on `s` (letters of the j-th key stay
/// at their original subalphabet). Succeeds iff every key is in place and the
/// final remainder is empty.
pub fn is_catabolizable(s: &Tableau, r: &RectSeq, mode: CatMode) -> Result<CatTrace> {
    if !s.is_straight() {
        return Err(Error::Internal("catabolizability needs a straight tableau".into()));
    }
    let mut steps = Vec::new();
    let mut cur = s.clone();
    for j in 0..r.len() {
        let (lo, _) = r.subalphabet(j);
        match cat_step(&cur, r.rect(j), lo, mode) {
            Ok(next) => {
                steps.push(CatStep { lo, rect: r.rect(j), after: next.clone() });
                cur = next;
            }
            Err(e) => {
                return Ok(CatTrace { ok: false, steps, reason: Some(format!("step {}: {e}", j + 1)) });
            }
        }
    }
    if cur.is_empty() {
        Ok(CatTrace { ok: true, steps, reason: None })
    } else {
        Ok(CatTrace {
            ok: false,
            steps,
            reason: Some("remainder after the last rectangle is nonempty".into()),
        })
    }
}

/// Largest j such that the letters [1, j] of `s` (shifted so `base` plays the
/// role of 1) exactly fill the top-left j x k key.
pub fn y_stat(s: &Tableau, k: usize) -> usize {
    let n = s.max_letter();
    let content = s.content(n);
    let rows = s.rows();
    let mut j = 0;
    while j < rows.len() {
        let v = j + 1;
        let filled = rows[j].len() >= k && rows[j][..k].iter().all(|&x| x == v);
        if filled && content[v - 1] == k {
            j += 1;
        } else {
            break;
        }
    }
    j
}

/// The catabolism type of a straight tableau with partition content: one
/// partition per column width, computed by iterating the vertical slice
/// operator at the current maximal width and peeling the stabilized key.
pub fn ctype(s: &Tableau) -> Result<MultiType> {
    let mut per_width: Vec<Partition> = Vec::new();
    let mut cur = s.clone();
    if !cur.is_straight() {
        return Err(Error::Internal("catabolism type needs a straight tableau".into()));
    }
    while !cur.is_empty() {
        let gamma = word::content(&cur.row_word(), cur.max_letter());
        if gamma.windows(2).any(|p| p[0] < p[1]) || gamma.last() == Some(&0) {
            return Err(Error::ContentMismatch(format!(
                "catabolism type needs partition content, got {gamma:?}"
            )));
        }
        let k = gamma[0];
        let m = gamma.iter().filter(|&&g| g == k).count();
        let mut parts = Vec::new();
        let mut prev = y_stat(&cur, k);
        if prev > 0 {
            parts.push(prev);
        }
        let mut guard = 2 * cur.size() + 4;
        loop {
            let next = v_op(&cur, k);
            if next == cur {
                break;
            }
            cur = next;
            let y = y_stat(&cur, k);
            if y > prev {
                parts.push(y - prev);
                prev = y;
            }
            guard = guard.checked_sub(1).ok_or_else(|| {
                Error::Internal("vertical slice iteration failed to stabilize".into())
            })?;
        }
        if prev != m {
            return Err(Error::Internal(format!(
                "stabilized tableau exposes a {prev} x {k} key, expected {m} rows"
            )));
        }
        let xi_k = Partition::new(parts).map_err(|_| {
            Error::Internal(format!("width-{k} type of\n{}is not a partition", s.to_text()))
        })?;
        if per_width.len() < k {
            per_width.resize(k, Partition::empty());
        }
        per_width[k - 1] = xi_k;
        // peel the stabilized key: the remaining rows are straight on their own
        let below: Vec<Vec<usize>> = cur.rows()[m..].to_vec();
        cur = Tableau::straight(below)?.shift_letters(-(m as i64));
    }
    Ok(MultiType::new(per_width))
}

/// Whether ctype(s) dominates the multitype of `r`, componentwise.
pub fn ctype_dominates(s: &Tableau, r: &RectSeq) -> Result<bool> {
    Ok(ctype(s)?.geq(&r.xi()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::enumerate_cst;

    fn running_s() -> Tableau {
        Tableau::parse_text("1 1 1 3 4 5\n2 2 2 4 5 6\n3 3 6\n4 7 7").unwrap()
    }

    #[test]
    fn printed_column_catabolism() {
        let s = running_s();
        let r1 = Rect::new(2, 3).unwrap();
        let got = cat_step(&s, r1, 1, CatMode::Col).unwrap();
        let want = Tableau::parse_text("3 3 3 6 7\n4 4 4 7\n5 5\n6").unwrap();
        assert_eq!(got, want);
        // the row catabolism coincides here: the top strip sits entirely east
        // of column 3 and the lower rows entirely west of it
        assert_eq!(cat_step(&s, r1, 1, CatMode::Row).unwrap(), want);
    }

    #[test]
    fn running_example_is_catabolizable_both_ways() {
        let s = running_s();
        let r = RectSeq::parse("2x3,2x3,3x2").unwrap();
        for mode in [CatMode::Row, CatMode::Col] {
            let trace = is_catabolizable(&s, &r, mode).unwrap();
            assert!(trace.ok, "{mode:?}: {:?}", trace.reason);
            assert_eq!(trace.steps.len(), 3);
            assert!(trace.steps[2].after.is_empty());
        }
    }

    #[test]
    fn second_step_reaches_third_key_class() {
        let s = running_s();
        let r = RectSeq::parse("2x3,2x3,3x2").unwrap();
        let trace = is_catabolizable(&s, &r, CatMode::Row).unwrap();
        // after removing the second key the remainder straightens to the
        // third key itself
        assert_eq!(trace.steps[1].after, r.key(2));
    }

    #[test]
    fn misplaced_key_fails_with_reason() {
        // content (3,3) but the letters do not fill the 2x3 key
        let s = Tableau::parse_text("1 1 1 2\n2 2").unwrap();
        let r = RectSeq::parse("2x3").unwrap();
        let trace = is_catabolizable(&s, &r, CatMode::Row).unwrap();
        assert!(!trace.ok);
        assert!(trace.reason.unwrap().contains("step 1"));
    }

    #[test]
    fn dominant_single_rows_admit_every_tableau() {
        let r = RectSeq::parse("1x2,1x1").unwrap();
        let gamma = r.gamma();
        for shape in Partition::all_of(3) {
            for t in enumerate_cst(&shape, &gamma) {
                let trace = is_catabolizable(&t, &r, CatMode::Row).unwrap();
                assert!(trace.ok, "{}", t.to_text());
            }
        }
    }

    #[test]
    fn wrong_content_is_rejected() {
        let t = Tableau::parse_text("1 1\n2").unwrap();
        let r = RectSeq::parse("1x1,1x1,1x1").unwrap();
        assert!(!is_catabolizable(&t, &r, CatMode::Row).unwrap().ok);
        assert!(!is_catabolizable(&t, &r, CatMode::Col).unwrap().ok);
    }

    #[test]
    fn printed_vertical_slice_iteration() {
        let s = running_s();
        let v1 = v_op(&s, 3);
        assert_eq!(v1, Tableau::parse_text("1 1 1 6 7\n2 2 2 7\n3 3 3\n4 4 4\n5 5\n6").unwrap());
        let v2 = v_op(&v1, 3);
        assert_eq!(
            v2,
            Tableau::parse_text("1 1 1\n2 2 2\n3 3 3\n4 4 4\n5 5\n6 6\n7 7").unwrap()
        );
        // stable from here on
        assert_eq!(v_op(&v2, 3), v2);
        assert_eq!(y_stat(&s, 3), 2);
        assert_eq!(y_stat(&v1, 3), 4);
    }

    #[test]
    fn printed_catabolism_type() {
        let s = running_s();
        let t = ctype(&s).unwrap();
        assert_eq!(t.component(3), Partition::new(vec![2, 2]).unwrap());
        assert_eq!(t.component(2), Partition::new(vec![3]).unwrap());
        assert_eq!(t.component(1), Partition::empty());
        // equals the multitype of the running sequence
        let r = RectSeq::parse("2x3,2x3,3x2").unwrap();
        assert_eq!(t, r.xi());
        assert!(ctype_dominates(&s, &r).unwrap());
    }

    #[test]
    fn ctype_of_key_stack() {
        // a stack of keys has type exactly the key heights
        let r = RectSeq::parse("2x3,1x2").unwrap();
        let t = Tableau::parse_text("1 1 1\n2 2 2\n3 3").unwrap();
        assert_eq!(ctype(&t).unwrap(), r.xi());
    }

    #[test]
    fn ctype_components_are_partitions_small_exhaustive() {
        for gamma in Partition::all_of(6) {
            let content = gamma.parts().to_vec();
            for shape in Partition::all_of(6) {
                if !shape.dominates(&gamma) {
                    continue;
                }
                for t in enumerate_cst(&shape, &content) {
                    // ctype must compute without internal errors
                    let ct = ctype(&t).unwrap();
                    let per_width_total: usize =
                        ct.components().iter().enumerate().map(|(i, p)| (i + 1) * p.size()).sum();
                    assert_eq!(per_width_total, 6, "{}", t.to_text());
                }
            }
        }
    }

    #[test]
    fn ctype_respects_content_guard() {
        let t = Tableau::parse_text("1 2\n2").unwrap(); // content (1,2): not a partition
        assert!(ctype(&t).is_err());
    }
}
