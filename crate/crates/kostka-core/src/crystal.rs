//! Crystal reflection operators on words and the longest-element action on a
//! subalphabet.
//!
//! For the reflection σ_r, letters r+1 are matched with unmatched letters r
//! occurring later in the word (reading left to right, an r closes the most
//! recent open r+1). The unmatched letters always form a subword
//! r^a (r+1)^b, which is replaced in place by r^b (r+1)^a. This is the unique
//! convention compatible with row insertion: σ_r preserves the recording
//! tableau and the shape of the insertion tableau.

use crate::Result;
use crate::error::Error;

/// The reflection σ_r swapping the multiplicities of r and r+1.
pub fn crystal_reflection(w: &[usize], r: usize) -> Vec<usize> {
    let mut out = w.to_vec();
    let mut open_r1: Vec<usize> = Vec::new(); // positions of currently unmatched r+1
    let mut unmatched_r: Vec<usize> = Vec::new();
    for (pos, &x) in w.iter().enumerate() {
        if x == r + 1 {
            open_r1.push(pos);
        } else if x == r {
            if open_r1.pop().is_none() {
                unmatched_r.push(pos);
            }
        }
    }
    // unmatched r's all precede unmatched (r+1)'s; rewrite them as r^b (r+1)^a
    let a = unmatched_r.len();
    let b = open_r1.len();
    let positions: Vec<usize> = unmatched_r.into_iter().chain(open_r1).collect();
    for (idx, pos) in positions.into_iter().enumerate() {
        out[pos] = if idx < b { r } else { r + 1 };
    }
    let _ = a;
    out
}

/// Apply the longest element of the symmetric group of the interval [lo, hi]
/// through crystal reflections (reduced word s_lo, s_lo+1 s_lo, ...). Letters
/// outside the interval are untouched; the content of [lo, hi] is reversed.
pub fn w0_action(w: &[usize], lo: usize, hi: usize) -> Vec<usize> {
    if hi <= lo {
        return w.to_vec();
    }
    let m = hi - lo + 1;
    let mut out = w.to_vec();
    for i in 1..m {
        for j in (1..=i).rev() {
            out = crystal_reflection(&out, lo + j - 1);
        }
    }
    out
}

/// Check that the interval bounds make sense for the word.
pub fn check_interval(lo: usize, hi: usize) -> Result<()> {
    if lo == 0 || hi < lo {
        return Err(Error::Parse(format!("bad letter interval [{lo}, {hi}]")));
    }
    Ok(())
}
