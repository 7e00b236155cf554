//! The rotation operator χ on LR words, the cocyclage / strong cocyclage /
//! cyclage cover relations on LR tableaux, the weak one-sided orders, and
//! graded poset construction with export formats.

use crate::charge::{charge_tab, cocharge_tab};
use crate::crystal::w0_action;
use crate::embed::arrangement_orbit;
use crate::error::Error;
use crate::lrwords::{enumerate_lrt_all, is_lr_tableau, is_lr_word};
use crate::partition::Partition;
use crate::rects::RectSeq;
use crate::rsk::{p_tab, reverse_bump, words_of_tableau};
use crate::tableau::Tableau;
use crate::Result;
use std::collections::{BTreeMap, BTreeSet};

/// The longest-element action for the parabolic of `r`: each subalphabet is
/// acted on by its own longest element (the blocks are disjoint, so the
/// order does not matter). On a full LR word this is the identity, since
/// every restriction is a highest-weight word of rectangular content; it
/// acts nontrivially on words with a deficient block.
pub fn w0r_word(w: &[usize], r: &RectSeq) -> Vec<usize> {
    let mut out = w.to_vec();
    for i in 0..r.len() {
        let (lo, hi) = r.subalphabet(i);
        out = w0_action(&out, lo, hi);
    }
    out
}

/// The rotation operator on LR words: the last letter is reflected within
/// its subalphabet and moved to the front, and the remaining word is acted
/// on by the parabolic longest element (which only changes letters in the
/// reflected letter's subalphabet). The result is again an LR word; for a
/// sequence of single rows this is a right circular rotation.
pub fn chi(w: &[usize], r: &RectSeq) -> Result<Vec<usize>> {
    if w.is_empty() {
        return Err(Error::Parse("chi of the empty word".into()));
    }
    if !is_lr_word(w, r) {
        return Err(Error::NotLrWord(format!("{w:?} for {}", r.to_spec_string())));
    }
    let (u, x) = (&w[..w.len() - 1], w[w.len() - 1]);
    let block = r
        .block_of_letter(x)
        .ok_or(Error::LetterOutOfRange { letter: x, alphabet: r.alphabet() })?;
    let (lo, hi) = r.subalphabet(block);
    let mut out = Vec::with_capacity(w.len());
    out.push(lo + hi - x);
    out.extend(w0r_word(u, r));
    if !is_lr_word(&out, r) {
        return Err(Error::Internal(format!(
            "chi left the LR word set: {w:?} -> {out:?} for {}",
            r.to_spec_string()
        )));
    }
    Ok(out)
}

/// Inverse rotation: the first letter is reflected within its subalphabet
/// and moved to the back, and the rest is acted on by the parabolic longest
/// element (an involution).
pub fn chi_inv(z: &[usize], r: &RectSeq) -> Result<Vec<usize>> {
    if z.is_empty() {
        return Err(Error::Parse("chi_inv of the empty word".into()));
    }
    if !is_lr_word(z, r) {
        return Err(Error::NotLrWord(format!("{z:?} for {}", r.to_spec_string())));
    }
    let (z0, rest) = (z[0], &z[1..]);
    let block = r
        .block_of_letter(z0)
        .ok_or(Error::LetterOutOfRange { letter: z0, alphabet: r.alphabet() })?;
    let (lo, hi) = r.subalphabet(block);
    let mut out = w0r_word(rest, r);
    out.push(lo + hi - z0);
    if !is_lr_word(&out, r) {
        return Err(Error::Internal(format!(
            "chi_inv left the LR word set: {z:?} -> {out:?} for {}",
            r.to_spec_string()
        )));
    }
    Ok(out)
}

/// The unique cell of `upper` minus `lower` (shapes differing by one cell),
/// as (1-indexed row, 1-indexed column).
fn diff_cell(upper: &Partition, lower: &Partition) -> Result<(usize, usize)> {
    debug_assert_eq!(upper.size(), lower.size() + 1);
    for i in 0..upper.len() {
        let small = lower.part(i);
        if upper.part(i) != small {
            return Ok((i + 1, upper.part(i)));
        }
    }
    Err(Error::Internal("shapes do not differ by one cell".into()))
}

/// The cocyclage covers below `t`: one for each corner of the shape
/// strictly east of column a (the maximum rectangle width), obtained by
/// reverse-bumping the corner and rotating. Returns the covered tableau
/// with the corner it starts from, northeast corners first. Empty exactly
/// when `t` has a columns.
pub fn cocyclage_covers(t: &Tableau, r: &RectSeq) -> Result<Vec<(Tableau, (usize, usize))>> {
    if !is_lr_tableau(t, r) {
        return Err(Error::NotLrWord(format!(
            "tableau is not an LR tableau for {}",
            r.to_spec_string()
        )));
    }
    let a = r.max_width();
    let shape = t.shape();
    let mut out = Vec::new();
    for i in 0..shape.len() {
        let len = shape.part(i);
        let is_corner = len > shape.part(i + 1);
        if !is_corner || len <= a {
            continue;
        }
        let (u_tab, x) = reverse_bump(t, i)?;
        let mut word = u_tab.row_word();
        word.push(x);
        let lower = p_tab(&chi(&word, r)?);
        if !is_lr_tableau(&lower, r) {
            return Err(Error::Internal(format!(
                "cocyclage left LRT({}):\n{}",
                r.to_spec_string(),
                lower.to_text()
            )));
        }
        out.push((lower, (i + 1, len)));
    }
    Ok(out)
}

/// The strong-cocyclage condition on the factorization u·x: in every
/// rearrangement of the rectangles, the image of the word must end with a
/// letter outside the first subalphabet. For containment-nested sequences
/// this reduces to checking the single given word.
pub fn is_strong_cover(u: &[usize], x: usize, r: &RectSeq) -> Result<bool> {
    let mut w = u.to_vec();
    w.push(x);
    if !is_lr_word(&w, r) {
        return Err(Error::NotLrWord(format!("{w:?} for {}", r.to_spec_string())));
    }
    if r.is_nested() {
        return Ok(x > r.rect(0).rows);
    }
    let mut ok = true;
    arrangement_orbit(&w, r, |seq, word| {
        if word.last().copied().unwrap_or(0) <= seq.rect(0).rows {
            ok = false;
        }
    })?;
    Ok(ok)
}

/// All tableaux lying under `t` by one strong-cocyclage relation: the
/// rotations of every word of `t` whose factorization passes the orbit
/// condition. The relation drops the generalized charge by exactly one, so
/// each is an edge of the graded strong poset.
pub fn strong_lowers(t: &Tableau, r: &RectSeq) -> Result<Vec<Tableau>> {
    if !is_lr_tableau(t, r) {
        return Err(Error::NotLrWord(format!(
            "tableau is not an LR tableau for {}",
            r.to_spec_string()
        )));
    }
    let mut out = BTreeSet::new();
    for w in words_of_tableau(t) {
        let (u, x) = (&w[..w.len() - 1], w[w.len() - 1]);
        if is_strong_cover(u, x, r)? {
            out.insert(p_tab(&chi(&w, r)?));
        }
    }
    Ok(out.into_iter().collect())
}

/// The cyclage covers below `t`: for every word x·u of `t` whose first
/// letter records a cell strictly south of row b (the maximum rectangle
/// height) when removed, the inverse rotation of x·u lies below `t`. For
/// single-row rectangles the inverse rotation is the plain rotation u·x;
/// in general the letter must be reflected and the rest acted on by the
/// parabolic longest element to stay inside the LR word set. Minimal
/// elements are exactly the tableaux with b rows.
pub fn cyclage_covers(t: &Tableau, r: &RectSeq) -> Result<Vec<Tableau>> {
    if !is_lr_tableau(t, r) {
        return Err(Error::NotLrWord(format!(
            "tableau is not an LR tableau for {}",
            r.to_spec_string()
        )));
    }
    let b = r.max_height();
    let shape = t.shape();
    let mut out = BTreeSet::new();
    for w in words_of_tableau(t) {
        let u = &w[1..];
        let (row, _) = diff_cell(&shape, &p_tab(u).shape())?;
        if row <= b {
            continue;
        }
        out.insert(p_tab(&chi_inv(&w, r)?));
    }
    Ok(out.into_iter().collect())
}

/// One-sided weak cover tests on arbitrary words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeakMode {
    /// the cell of P(u·x) minus P(u) lies strictly east of this column
    Column(usize),
    /// the cell of P(x·u) minus P(u) lies strictly south of this row
    Row(usize),
}

/// Whether adjoining the letter `x` to the word `u` is a weak cover in the
/// requested one-sided order.
pub fn weak_cover(u: &[usize], x: usize, mode: WeakMode) -> bool {
    let base = p_tab(u).shape();
    match mode {
        WeakMode::Column(c) => {
            let mut w = u.to_vec();
            w.push(x);
            match diff_cell(&p_tab(&w).shape(), &base) {
                Ok((_, col)) => col > c,
                Err(_) => false,
            }
        }
        WeakMode::Row(rr) => {
            let mut w = vec![x];
            w.extend_from_slice(u);
            match diff_cell(&p_tab(&w).shape(), &base) {
                Ok((row, _)) => row > rr,
                Err(_) => false,
            }
        }
    }
}

/// Which cover relation a graded poset is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetKind {
    Cocyclage,
    StrongCocyclage,
    Cyclage,
}

impl PosetKind {
    pub fn name(self) -> &'static str {
        match self {
            PosetKind::Cocyclage => "cocyclage",
            PosetKind::StrongCocyclage => "strong-cocyclage",
            PosetKind::Cyclage => "cyclage",
        }
    }
}

/// A graded poset on the LR tableaux of a rectangle sequence: covers are
/// stored as (lower, upper) index pairs and every cover raises the grade by
/// exactly one.
#[derive(Clone, Debug)]
pub struct GradedPoset {
    pub kind: PosetKind,
    pub seq: RectSeq,
    pub nodes: Vec<Tableau>,
    pub grades: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
}

/// Hard ceiling on cells for poset construction; enumerations beyond this
/// are too large to be useful interactively.
pub const MAX_POSET_CELLS: usize = 14;

/// Build the graded poset of the chosen kind over all of LRT(r). The grade
/// is the generalized charge for the cocyclage orders and the generalized
/// cocharge for the cyclage; gradedness of every cover is verified.
pub fn build_poset(r: &RectSeq, kind: PosetKind) -> Result<GradedPoset> {
    if r.cells() > MAX_POSET_CELLS {
        return Err(Error::SizeGuard(format!(
            "poset over {} cells exceeds the limit of {MAX_POSET_CELLS}",
            r.cells()
        )));
    }
    let mut nodes: Vec<Tableau> = Vec::new();
    for (_, tabs) in enumerate_lrt_all(r) {
        nodes.extend(tabs);
    }
    nodes.sort();
    let index: BTreeMap<&Tableau, usize> =
        nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut grades = Vec::with_capacity(nodes.len());
    for t in &nodes {
        grades.push(match kind {
            PosetKind::Cocyclage | PosetKind::StrongCocyclage => charge_tab(t, r)?,
            PosetKind::Cyclage => cocharge_tab(t, r)?,
        });
    }
    let mut covers = Vec::new();
    for (upper_idx, t) in nodes.iter().enumerate() {
        let lowers: Vec<Tableau> = match kind {
            PosetKind::Cocyclage => cocyclage_covers(t, r)?
                .into_iter()
                .map(|(s, _)| s)
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect(),
            PosetKind::StrongCocyclage => strong_lowers(t, r)?,
            PosetKind::Cyclage => cyclage_covers(t, r)?,
        };
        for s in lowers {
            let lower_idx = *index.get(&s).ok_or_else(|| {
                Error::Internal(format!("cover target missing from LRT:\n{}", s.to_text()))
            })?;
            if grades[upper_idx] != grades[lower_idx] + 1 {
                return Err(Error::Internal(format!(
                    "cover does not drop the grade by one: {} -> {} ({} -> {})",
                    grades[upper_idx],
                    grades[lower_idx],
                    nodes[upper_idx].to_text().replace('\n', " / "),
                    nodes[lower_idx].to_text().replace('\n', " / "),
                )));
            }
            covers.push((lower_idx, upper_idx));
        }
    }
    covers.sort_unstable();
    covers.dedup();
    Ok(GradedPoset { kind, seq: r.clone(), nodes, grades, covers })
}

impl GradedPoset {
    /// Indices of the minimal elements (no cover below them).
    pub fn minimal_indices(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.nodes.len()];
        for &(_, upper) in &self.covers {
            has_lower[upper] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_lower[i]).collect()
    }

    /// GraphViz DOT rendering: one node per tableau labeled with its rows
    /// and grade, edges drawn downward from covering to covered element.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "digraph {{\n  label=\"{} poset for {}\";\n  node [shape=box, fontname=\"monospace\"];\n",
            self.kind.name(),
            self.seq.to_spec_string()
        ));
        for (i, t) in self.nodes.iter().enumerate() {
            let label = format!("{}\\ngrade {}", t.to_text().replace('\n', "\\n"), self.grades[i]);
            out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
        }
        for &(lower, upper) in &self.covers {
            out.push_str(&format!("  n{upper} -> n{lower} [kind=\"{}\"];\n", self.kind.name()));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering with nodes (rows and grade) and cover index pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.kind.name(),
            "rects": self.seq.to_spec_string(),
            "nodes": self.nodes.iter().zip(&self.grades).map(|(t, &g)| serde_json::json!({
                "rows": t.rows(),
                "shape": t.shape().parts(),
                "grade": g,
            })).collect::<Vec<_>>(),
            "covers": self.covers.iter().map(|&(lo, up)| serde_json::json!({
                "lower": lo,
                "upper": up,
            })).collect::<Vec<_>>(),
        })
    }
}
