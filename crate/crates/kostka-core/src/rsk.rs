//! Schensted row insertion, the RSK correspondence and its inverse, Knuth
//! equivalence, and the Schützenberger operators (evacuation, promotion) on
//! standard tableaux.

use crate::error::Error;
use crate::tableau::{standard_tableaux, Tableau};
use crate::Result;

/// Insert a letter into raw rows by Schensted bumping; returns the new cell.
pub(crate) fn insert_raw(rows: &mut Vec<Vec<usize>>, x: usize) -> (usize, usize) {
    let mut x = x;
    let mut i = 0;
    loop {
        if i == rows.len() {
            rows.push(vec![x]);
            return (i, 0);
        }
        // bump the leftmost entry strictly greater than x
        let j = rows[i].partition_point(|&y| y <= x);
        if j == rows[i].len() {
            rows[i].push(x);
            return (i, j);
        }
        std::mem::swap(&mut x, &mut rows[i][j]);
        i += 1;
    }
}

/// Row-insert a letter into a straight tableau; returns the grown tableau and
/// the added cell (0-indexed row, col).
pub fn row_insert(t: &Tableau, x: usize) -> Result<(Tableau, (usize, usize))> {
    if !t.is_straight() {
        return Err(Error::NotColumnStrict("row insertion needs a straight shape".into()));
    }
    if x == 0 {
        return Err(Error::LetterOutOfRange { letter: 0, alphabet: 0 });
    }
    let mut rows = t.rows().to_vec();
    let cell = insert_raw(&mut rows, x);
    Ok((Tableau::straight(rows)?, cell))
}

/// The insertion tableau P(w).
pub fn p_tab(w: &[usize]) -> Tableau {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in w {
        insert_raw(&mut rows, x);
    }
    Tableau::straight(rows).expect("Schensted insertion yields a column-strict tableau")
}

/// RSK: the insertion tableau P(w) and the standard recording tableau Q(w).
pub fn rsk(w: &[usize]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (k, &x) in w.iter().enumerate() {
        let (i, j) = insert_raw(&mut p, x);
        if i == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(q[i].len(), j);
        q[i].push(k + 1);
    }
    (
        Tableau::straight(p).expect("P is column-strict"),
        Tableau::straight(q).expect("Q is standard"),
    )
}

/// Reverse one Schensted bump starting from the corner cell in `row`;
/// returns the shrunken tableau and the letter that exits at the top.
pub fn reverse_bump(t: &Tableau, row: usize) -> Result<(Tableau, usize)> {
    if !t.is_straight() {
        return Err(Error::NotColumnStrict("reverse bumping needs a straight shape".into()));
    }
    let mut rows = t.rows().to_vec();
    if row >= rows.len() || (row + 1 < rows.len() && rows[row].len() <= rows[row + 1].len()) {
        return Err(Error::InvalidRskPair(format!("row {row} has no corner cell")));
    }
    let mut y = rows[row].pop().expect("corner row is nonempty");
    if rows[row].is_empty() {
        rows.pop();
    }
    for r in (0..row).rev() {
        // displace the rightmost entry strictly less than y
        let j = rows[r].partition_point(|&z| z < y);
        if j == 0 {
            return Err(Error::InvalidRskPair(format!(
                "cannot reverse-bump {y} through row {r}"
            )));
        }
        std::mem::swap(&mut y, &mut rows[r][j - 1]);
    }
    Ok((Tableau::straight(rows)?, y))
}

/// Inverse RSK: recover the unique word with insertion tableau `p` and
/// recording tableau `q`.
pub fn inverse_rsk(p: &Tableau, q: &Tableau) -> Result<Vec<usize>> {
    if !p.is_straight() || !q.is_straight() {
        return Err(Error::InvalidRskPair("both tableaux must be straight".into()));
    }
    if p.shape() != q.shape() {
        return Err(Error::InvalidRskPair(format!(
            "shapes differ: {} vs {}",
            p.shape(),
            q.shape()
        )));
    }
    if !q.is_standard() {
        return Err(Error::NotStandard);
    }
    let n = q.size();
    let mut pos = vec![(0usize, 0usize); n + 1];
    for (i, row) in q.rows().iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            pos[x] = (i, j);
        }
    }
    let mut cur = p.clone();
    let mut out = vec![0usize; n];
    for k in (1..=n).rev() {
        let (i, j) = pos[k];
        if cur.shape().part(i) != j + 1 {
            return Err(Error::InvalidRskPair(format!("entry {k} of Q is not at a corner")));
        }
        let (next, y) = reverse_bump(&cur, i)?;
        cur = next;
        out[k - 1] = y;
    }
    Ok(out)
}

/// Words with equal insertion tableaux.
pub fn knuth_equivalent(v: &[usize], w: &[usize]) -> bool {
    p_tab(v) == p_tab(w)
}

/// Every word Knuth-equivalent to the tableau (one per standard recording
/// tableau of its shape), in the enumeration order of the recording tableaux.
pub fn words_of_tableau(t: &Tableau) -> Vec<Vec<usize>> {
    standard_tableaux(&t.shape())
        .iter()
        .map(|q| inverse_rsk(t, q).expect("valid pair by construction"))
        .collect()
}

/// Transpose a standard tableau (rows become columns).
pub fn transpose_standard(q: &Tableau) -> Result<Tableau> {
    if !q.is_standard() {
        return Err(Error::NotStandard);
    }
    let shape = q.shape();
    let cols = shape.part(0);
    let rows: Vec<Vec<usize>> = (0..cols)
        .map(|j| {
            (0..shape.len())
                .filter_map(|i| q.letter_at(i, j))
                .collect::<Vec<usize>>()
        })
        .collect();
    Tableau::straight(rows)
}

/// Schützenberger evacuation of a standard tableau, computed as the insertion
/// tableau of the reversed complement of its reading word.
pub fn evacuation(q: &Tableau) -> Result<Tableau> {
    if !q.is_standard() {
        return Err(Error::NotStandard);
    }
    let n = q.size();
    let w = q.row_word();
    let v: Vec<usize> = w.iter().rev().map(|&x| n + 1 - x).collect();
    Ok(p_tab(&v))
}

/// Jeu-de-taquin promotion of a standard tableau: delete the entry 1, slide
/// the hole outward (into the smaller of its east/south neighbors), write
/// n+1 in the vacated corner, then decrement every entry.
pub fn promotion(q: &Tableau) -> Result<Tableau> {
    if !q.is_standard() {
        return Err(Error::NotStandard);
    }
    if q.is_empty() {
        return Ok(Tableau::empty());
    }
    let n = q.size();
    let mut rows = q.rows().to_vec();
    let (mut i, mut j) = (0usize, 0usize);
    debug_assert_eq!(rows[0][0], 1);
    loop {
        let east = rows[i].get(j + 1).copied();
        let south = rows.get(i + 1).and_then(|r| r.get(j)).copied();
        match (east, south) {
            (Some(e), Some(s)) if e < s => {
                rows[i][j] = e;
                j += 1;
            }
            (Some(_), Some(s)) => {
                rows[i][j] = s;
                i += 1;
            }
            (Some(e), None) => {
                rows[i][j] = e;
                j += 1;
            }
            (None, Some(s)) => {
                rows[i][j] = s;
                i += 1;
            }
            (None, None) => break,
        }
    }
    rows[i][j] = n + 1;
    for row in &mut rows {
        for x in row {
            *x -= 1;
        }
    }
    Tableau::straight(rows)
}

/// Inverse of [`promotion`]: delete the entry n, slide the hole inward (into
/// the larger of its west/north neighbors), write 0 at the origin, then
/// increment every entry.
pub fn promotion_inverse(q: &Tableau) -> Result<Tableau> {
    if !q.is_standard() {
        return Err(Error::NotStandard);
    }
    if q.is_empty() {
        return Ok(Tableau::empty());
    }
    let n = q.size();
    let mut rows = q.rows().to_vec();
    let (mut i, mut j) = (0, 0);
    'find: for (r, row) in rows.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            if x == n {
                (i, j) = (r, c);
                break 'find;
            }
        }
    }
    loop {
        let west = if j > 0 { Some(rows[i][j - 1]) } else { None };
        let north = if i > 0 { Some(rows[i - 1][j]) } else { None };
        match (west, north) {
            (Some(w), Some(nv)) if w > nv => {
                rows[i][j] = w;
                j -= 1;
            }
            (Some(_), Some(nv)) => {
                rows[i][j] = nv;
                i -= 1;
            }
            (Some(w), None) => {
                rows[i][j] = w;
                j -= 1;
            }
            (None, Some(nv)) => {
                rows[i][j] = nv;
                i -= 1;
            }
            (None, None) => break,
        }
    }
    rows[0][0] = 0;
    for row in &mut rows {
        for x in row {
            *x += 1;
        }
    }
    Tableau::straight(rows)
}
