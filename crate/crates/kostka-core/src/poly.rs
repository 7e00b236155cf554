//! Polynomials in q with integer coefficients, the charge-generating
//! Kostka polynomials for rectangle sequences, the classical normalized
//! Kostka–Foulkes polynomials, an independent Littlewood–Richardson
//! multiplicity oracle, and the monotonicity / duality checkers.

use crate::charge::{charge_tab, ls_cocharge};
use crate::error::Error;
use crate::lrwords::{enumerate_lrt, enumerate_lrt_all};
use crate::partition::Partition;
use crate::rects::{pseudo_geq, RectSeq};
use crate::tableau::enumerate_cst;
use crate::Result;
use std::collections::BTreeMap;
use std::fmt;

/// A sparse polynomial in q with exact integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPoly {
    coeffs: BTreeMap<usize, i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    /// The single term q^deg.
    pub fn monomial(deg: usize) -> Self {
        let mut p = QPoly::default();
        p.add_term(deg, 1);
        p
    }

    pub fn add_term(&mut self, deg: usize, c: i64) {
        let entry = self.coeffs.entry(deg).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&deg);
        }
    }

    pub fn coeff(&self, deg: usize) -> i64 {
        self.coeffs.get(&deg).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest degree with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    /// Coefficientwise comparison.
    pub fn leq(&self, other: &QPoly) -> bool {
        let max = self.degree().max(other.degree()).unwrap_or(0);
        (0..=max).all(|d| self.coeff(d) <= other.coeff(d))
    }

    /// Degree reflection q^n · P(1/q); the degree of P must not exceed n.
    pub fn reflect(&self, n: usize) -> Result<QPoly> {
        if self.degree().unwrap_or(0) > n {
            return Err(Error::Parse(format!(
                "cannot reflect a degree-{} polynomial at {n}",
                self.degree().unwrap_or(0)
            )));
        }
        let mut out = QPoly::default();
        for (d, c) in self.terms() {
            out.add_term(n - d, c);
        }
        Ok(out)
    }

    /// Dense list of coefficients from degree 0 up.
    pub fn dense(&self) -> Vec<i64> {
        match self.degree() {
            None => vec![0],
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.dense())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a} ")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl std::ops::AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (d, c) in rhs.terms() {
            self.add_term(d, c);
        }
    }
}

/// The generalized Kostka polynomial K_{λ;R}(q): the charge-generating
/// function over the LR tableaux of shape λ for the dominant rearrangement
/// of R (reordering the rectangles does not change the polynomial).
pub fn kostka_poly(shape: &Partition, r: &RectSeq) -> Result<QPoly> {
    let rd = r.dominant_canonical();
    let mut out = QPoly::zero();
    for t in enumerate_lrt(shape, &rd) {
        out.add_term(charge_tab(&t, &rd)?, 1);
    }
    Ok(out)
}

/// The normalized Kostka–Foulkes polynomial K̃_{λ,μ}(q): the LS-cocharge
/// generating function over column-strict tableaux of shape λ and content
/// μ. Zero when the sizes differ.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    let mut out = QPoly::zero();
    if lambda.size() != mu.size() {
        return Ok(out);
    }
    let content: Vec<usize> = mu.parts().to_vec();
    for t in enumerate_cst(lambda, &content) {
        out.add_term(ls_cocharge(&t.row_word())?, 1);
    }
    Ok(out)
}

/// Count the lattice column-strict fillings of the skew shape outer/inner
/// with the given content (the skew LR coefficient). Cells are filled in
/// the reverse reading order — rows top to bottom, right to left — so the
/// lattice condition is a running prefix constraint.
fn lattice_fillings(outer: &[usize], inner: &[usize], content: &[usize]) -> usize {
    let rows = outer.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| {
            let lo = inner.get(i).copied().unwrap_or(0);
            (lo..outer[i]).rev().map(move |j| (i, j))
        })
        .collect();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        content: &[usize],
    ) -> usize {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let right = grid[i].get(j + 1).copied().unwrap_or(0);
        let above = if i > 0 { grid[i - 1].get(j).copied().unwrap_or(0) } else { 0 };
        let mut total = 0;
        for v in 1..=content.len() {
            if counts[v] >= content[v - 1] {
                continue;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            if right != 0 && v > right {
                continue;
            }
            if above != 0 && v <= above {
                continue;
            }
            grid[i][j] = v;
            counts[v] += 1;
            total += fill(k + 1, cells, grid, counts, content);
            counts[v] -= 1;
            grid[i][j] = 0;
        }
        total
    }
    let mut grid: Vec<Vec<usize>> = outer.iter().map(|&len| vec![0; len]).collect();
    let mut counts = vec![0usize; content.len() + 1];
    fill(0, &cells, &mut grid, &mut counts, content)
}

/// All partitions ν with inner ⊆ ν ⊆ bound and |ν| = |inner| + gain.
fn partitions_between(inner: &Partition, bound: &Partition, gain: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = bound.len();
    let mut parts = vec![0usize; rows];
    fn rec(
        i: usize,
        remaining: usize,
        prev: usize,
        parts: &mut Vec<usize>,
        inner: &Partition,
        bound: &Partition,
        out: &mut Vec<Partition>,
    ) {
        if i == parts.len() {
            if remaining == 0 {
                let trimmed: Vec<usize> =
                    parts.iter().copied().take_while(|&p| p > 0).collect();
                out.push(Partition::new(trimmed).expect("constructed weakly decreasing"));
            }
            return;
        }
        let lo = inner.part(i);
        let hi = bound.part(i).min(prev);
        for p in lo..=hi {
            let take = p - lo;
            if take > remaining {
                break;
            }
            parts[i] = p;
            rec(i + 1, remaining - take, p, parts, inner, bound, out);
        }
        parts[i] = 0;
    }
    rec(0, gain, usize::MAX, &mut parts, inner, bound, &mut out);
    out
}

/// The multiplicity of the Schur function of `shape` in the product of the
/// rectangular Schur functions of `r`, computed by iterated skew lattice
/// fillings. This deliberately shares nothing with the LR-tableau or
/// charge machinery so it can serve as an independent q = 1 oracle.
pub fn lr_mult(shape: &Partition, r: &RectSeq) -> usize {
    if shape.size() != r.cells() || shape.len() > r.alphabet() {
        return 0;
    }
    let mut layers: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    layers.insert(Vec::new(), 1);
    for i in 0..r.len() {
        let rect = r.rect(i);
        let content = vec![rect.cols; rect.rows];
        let gain = rect.rows * rect.cols;
        let mut next: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (inner_parts, count) in layers {
            let inner = Partition::new(inner_parts).expect("stored canonical");
            for outer in partitions_between(&inner, shape, gain) {
                let fills = lattice_fillings(outer.parts(), inner.parts(), &content);
                if fills > 0 {
                    *next.entry(outer.parts().to_vec()).or_insert(0) += count * fills;
                }
            }
        }
        layers = next;
    }
    layers.get(shape.parts()).copied().unwrap_or(0)
}

/// Outcome of one polynomial comparison.
#[derive(Clone, Debug)]
pub struct ShapeCheck {
    pub shape: Partition,
    pub lhs: QPoly,
    pub rhs: QPoly,
    pub ok: bool,
}

/// Report of a theorem-level polynomial verification over all shapes.
#[derive(Clone, Debug)]
pub struct PolyReport {
    pub description: String,
    pub checks: Vec<ShapeCheck>,
}

impl PolyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ShapeCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// Check coefficientwise monotonicity K_{λ;R}(q) ≤ K_{λ;S}(q) for every
/// shape, for dominant R above S in the pseudo-order.
pub fn verify_monotonicity(r: &RectSeq, s: &RectSeq) -> Result<PolyReport> {
    let rd = r.dominant_canonical();
    let sd = s.dominant_canonical();
    if !pseudo_geq(&rd, &sd) {
        return Err(Error::NotComparable(rd.to_spec_string(), sd.to_spec_string()));
    }
    let mut shapes: Vec<Partition> = enumerate_lrt_all(&sd).into_iter().map(|(p, _)| p).collect();
    for (p, _) in enumerate_lrt_all(&rd) {
        if !shapes.contains(&p) {
            shapes.push(p);
        }
    }
    shapes.sort();
    let mut checks = Vec::new();
    for shape in shapes {
        let lhs = kostka_poly(&shape, &rd)?;
        let rhs = kostka_poly(&shape, &sd)?;
        let ok = lhs.leq(&rhs);
        checks.push(ShapeCheck { shape, lhs, rhs, ok });
    }
    Ok(PolyReport {
        description: format!(
            "K(λ; {}) ≤ K(λ; {}) coefficientwise",
            rd.to_spec_string(),
            sd.to_spec_string()
        ),
        checks,
    })
}

/// Check the transpose duality K_{λ^t;R'}(q) = q^{n(R)} K_{λ;R}(1/q) for
/// every shape of LRT(R), where R' is the dominant rearrangement of the
/// transposed rectangles.
pub fn verify_duality(r: &RectSeq) -> Result<PolyReport> {
    let rd = r.dominant_canonical();
    let rt = rd.transpose_seq().dominant_canonical();
    let n = rd.n_stat();
    let mut checks = Vec::new();
    for (shape, _) in enumerate_lrt_all(&rd) {
        let lhs = kostka_poly(&shape.conjugate(), &rt)?;
        let rhs = kostka_poly(&shape, &rd)?.reflect(n)?;
        let ok = lhs == rhs;
        checks.push(ShapeCheck { shape, lhs, rhs, ok });
    }
    Ok(PolyReport {
        description: format!(
            "K(λ^t; {}) = q^{n} K(λ; {})(1/q)",
            rt.to_spec_string(),
            rd.to_spec_string()
        ),
        checks,
    })
}
