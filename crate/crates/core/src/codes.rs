//! Parameter-matrix algebra, periodic codes, and exact verification of
//! complete regularity on quotient tori.
//!
//! A tridiagonal parameter matrix is written compactly as the sequence of its
//! tridiagonal elements, `[a0,b0|c1,a1,b1|...|c_rho,a_rho]`. A periodic code
//! is given by per-axis periods and a residue set; verification realizes it
//! on a torus large enough that the distance partition there agrees with the
//! grid and checks the partition is equitable with a tridiagonal matrix.
//! Every comparison is exact integer equality.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::{self, BoxTorus, LatticeError, Word};

/// Torus axes are never inflated beyond this length during verification.
pub const AXIS_CAP: u32 = 4096;
/// Verification tori are capped at this many vertices.
pub const VERTEX_CAP: usize = 16_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodesError {
    Parse { message: String },
    RowSumMismatch { row: usize, sum: u32, valency: u32 },
    BadShape { message: String },
    ExtensionNotTridiagonal { row: usize },
    EmptyResidues,
    ResidueDimensionMismatch { expected: usize, got: usize },
    ZeroPeriod { axis: usize },
    AxisInflationOverflow { axis: usize, required: u32, cap: u32 },
    TorusTooLarge { vertices: usize, cap: usize },
    Lattice(LatticeError),
}

impl fmt::Display for CodesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Parse { message } => write!(f, "parse error: {message}"),
            Self::RowSumMismatch { row, sum, valency } => {
                write!(f, "row {row} sums to {sum}, expected valency {valency}")
            }
            Self::BadShape { message } => write!(f, "bad shape: {message}"),
            Self::ExtensionNotTridiagonal { row } => {
                write!(f, "extension would place a nonzero entry off the band in row {row}")
            }
            Self::EmptyResidues => write!(f, "a periodic code needs at least one residue"),
            Self::ResidueDimensionMismatch { expected, got } => {
                write!(f, "residue of length {got}, expected {expected}")
            }
            Self::ZeroPeriod { axis } => write!(f, "period on axis {axis} must be positive"),
            Self::AxisInflationOverflow { axis, required, cap } => {
                write!(f, "axis {axis} needs length {required}, above the cap {cap}")
            }
            Self::TorusTooLarge { vertices, cap } => {
                write!(f, "verification torus with {vertices} vertices exceeds cap {cap}")
            }
            Self::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CodesError {}

impl From<LatticeError> for CodesError {
    fn from(e: LatticeError) -> Self {
        Self::Lattice(e)
    }
}

/// A full tridiagonal parameter matrix `[a0,b0|c1,a1,b1|...|c_rho,a_rho]`.
///
/// Row sums all equal the valency; `rho >= 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamMatrix {
    valency: u32,
    a: Vec<u32>, // a_0 ..= a_rho
    b: Vec<u32>, // b_0 ..= b_{rho-1}
    c: Vec<u32>, // c_1 ..= c_rho
}

impl ParamMatrix {
    pub fn new(valency: u32, a: Vec<u32>, b: Vec<u32>, c: Vec<u32>) -> Result<Self, CodesError> {
        if a.is_empty() || a.len() < 2 {
            return Err(CodesError::BadShape { message: "need rho >= 1".to_owned() });
        }
        let rho = a.len() - 1;
        if b.len() != rho || c.len() != rho {
            return Err(CodesError::BadShape {
                message: format!("lengths a={}, b={}, c={} inconsistent", a.len(), b.len(), c.len()),
            });
        }
        let m = Self { valency, a, b, c };
        for i in 0..=rho {
            let sum = m.row_sum(i);
            if sum != valency {
                return Err(CodesError::RowSumMismatch { row: i, sum, valency });
            }
        }
        Ok(m)
    }

    pub fn rho(&self) -> usize {
        self.a.len() - 1
    }

    pub fn valency(&self) -> u32 {
        self.valency
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn c(&self) -> &[u32] {
        &self.c
    }

    /// The matrix entry `alpha_{ij}`.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        if j + 1 == i {
            self.c[j]
        } else if j == i {
            self.a[i]
        } else if j == i + 1 {
            self.b[i]
        } else {
            0
        }
    }

    fn row_sum(&self, i: usize) -> u32 {
        let rho = self.rho();
        let mut sum = self.a[i];
        if i >= 1 {
            sum += self.c[i - 1];
        }
        if i < rho {
            sum += self.b[i];
        }
        sum
    }

    /// Nonzero entries of column `j` as `(row, value)` pairs.
    pub fn column(&self, j: usize) -> Vec<(usize, u32)> {
        let mut terms = Vec::with_capacity(3);
        if j >= 1 && self.b[j - 1] != 0 {
            terms.push((j - 1, self.b[j - 1]));
        }
        if self.a[j] != 0 {
            terms.push((j, self.a[j]));
        }
        if j < self.rho() && self.c[j] != 0 {
            terms.push((j + 1, self.c[j]));
        }
        terms
    }

    /// Compact text form, e.g. `[0,6|1,0,5|6,0]`.
    pub fn compact(&self) -> String {
        let rho = self.rho();
        let mut s = String::new();
        s.push('[');
        s.push_str(&format!("{},{}", self.a[0], self.b[0]));
        for i in 1..rho {
            s.push_str(&format!("|{},{},{}", self.c[i - 1], self.a[i], self.b[i]));
        }
        s.push_str(&format!("|{},{}", self.c[rho - 1], self.a[rho]));
        s.push(']');
        s
    }

    /// The parameter matrix of the opposite code: the tridiagonal sequence
    /// reversed, with the sub- and superdiagonals swapped.
    pub fn opposite(&self) -> Self {
        let rho = self.rho();
        let a = self.a.iter().rev().copied().collect();
        let b = (0..rho).map(|i| self.c[rho - 1 - i]).collect();
        let c = (0..rho).map(|i| self.b[rho - 1 - i]).collect();
        Self { valency: self.valency, a, b, c }
    }

    /// The necessary conditions `c_1 <= ... <= c_rho` and
    /// `b_0 >= ... >= b_{rho-1}`.
    pub fn is_monotone(&self) -> bool {
        self.c.windows(2).all(|p| p[0] <= p[1]) && self.b.windows(2).all(|p| p[0] >= p[1])
    }

    /// True when the first `r` diagonal entries are zero.
    pub fn is_r_null(&self, r: usize) -> bool {
        r <= self.a.len() && self.a[..r].iter().all(|&x| x == 0)
    }

    /// The upper-left `(rho+1) x rho` block, for `1 <= rho <= self.rho()`.
    pub fn truncate(&self, rho: usize) -> PartialMatrix {
        assert!(rho >= 1 && rho <= self.rho());
        PartialMatrix::new(
            self.valency,
            self.a[..rho].to_vec(),
            self.b[..rho - 1].to_vec(),
            self.c[..rho].to_vec(),
        )
        .expect("blocks of a full matrix are valid")
    }
}

impl fmt::Debug for ParamMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

impl fmt::Display for ParamMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

impl Serialize for ParamMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.compact())
    }
}

impl<'de> Deserialize<'de> for ParamMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_compact(&s).map_err(D::Error::custom)
    }
}

fn split_rows(text: &str) -> Result<Vec<Vec<u32>>, CodesError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| CodesError::Parse { message: format!("expected [..], got {trimmed:?}") })?;
    let mut rows = Vec::new();
    for row_text in inner.split('|') {
        let mut row = Vec::new();
        for entry in row_text.split(',') {
            let entry = entry.trim();
            let value: u32 = entry.parse().map_err(|_| CodesError::Parse {
                message: format!("bad entry {entry:?}"),
            })?;
            row.push(value);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Parses the compact form `[a0,b0|c1,a1,b1|...|c_rho,a_rho]`.
pub fn parse_compact(text: &str) -> Result<ParamMatrix, CodesError> {
    let rows = split_rows(text)?;
    if rows.len() < 2 {
        return Err(CodesError::Parse { message: "need at least two rows".to_owned() });
    }
    let rho = rows.len() - 1;
    let mut a = Vec::with_capacity(rho + 1);
    let mut b = Vec::with_capacity(rho);
    let mut c = Vec::with_capacity(rho);
    for (i, row) in rows.iter().enumerate() {
        let expected = if i == 0 || i == rho { 2 } else { 3 };
        if row.len() != expected {
            return Err(CodesError::Parse {
                message: format!("row {i} has {} entries, expected {expected}", row.len()),
            });
        }
        if i == 0 {
            a.push(row[0]);
            b.push(row[1]);
        } else if i == rho {
            c.push(row[0]);
            a.push(row[1]);
        } else {
            c.push(row[0]);
            a.push(row[1]);
            b.push(row[2]);
        }
    }
    ParamMatrix::new(a[0] + b[0], a, b, c)
}

/// Formats a matrix in the compact form; inverse of [`parse_compact`].
pub fn format_compact(matrix: &ParamMatrix) -> String {
    matrix.compact()
}

/// The upper-left `(rho+1) x rho` block of a would-be parameter matrix:
/// `a_0..a_{rho-1}`, the in-block superdiagonal `b_0..b_{rho-2}`, and the
/// full subdiagonal `c_1..c_rho`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialMatrix {
    valency: u32,
    a: Vec<u32>, // a_0 ..= a_{rho-1}
    b: Vec<u32>, // b_0 ..= b_{rho-2}
    c: Vec<u32>, // c_1 ..= c_rho
}

impl PartialMatrix {
    pub fn new(valency: u32, a: Vec<u32>, b: Vec<u32>, c: Vec<u32>) -> Result<Self, CodesError> {
        if a.is_empty() {
            return Err(CodesError::BadShape { message: "need rho >= 1".to_owned() });
        }
        let rho = a.len();
        if c.len() != rho || b.len() + 1 != rho {
            return Err(CodesError::BadShape {
                message: format!("lengths a={}, b={}, c={} inconsistent", a.len(), b.len(), c.len()),
            });
        }
        let m = Self { valency, a, b, c };
        for i in 0..=rho {
            let sum = m.row_sum(i);
            if sum > valency {
                return Err(CodesError::RowSumMismatch { row: i, sum, valency });
            }
        }
        Ok(m)
    }

    pub fn rho(&self) -> usize {
        self.a.len()
    }

    pub fn valency(&self) -> u32 {
        self.valency
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn c(&self) -> &[u32] {
        &self.c
    }

    /// Sum of the in-block entries of row `i`.
    pub fn row_sum(&self, i: usize) -> u32 {
        let rho = self.rho();
        let mut sum = 0;
        if i >= 1 {
            sum += self.c[i - 1];
        }
        if i < rho {
            sum += self.a[i];
        }
        if i + 1 < rho {
            sum += self.b[i];
        }
        sum
    }

    /// `b_i` as forced by the row sums of any completing full matrix,
    /// defined for rows `0..rho`.
    pub fn implied_b(&self, i: usize) -> u32 {
        debug_assert!(i < self.rho());
        let c = if i >= 1 { self.c[i - 1] } else { 0 };
        self.valency - c - self.a[i]
    }

    /// Nonzero entries of column `j` (over rows `0..=rho`) as `(row, value)`.
    pub fn column(&self, j: usize) -> Vec<(usize, u32)> {
        let rho = self.rho();
        debug_assert!(j < rho);
        let mut terms = Vec::with_capacity(3);
        if j >= 1 && self.b[j - 1] != 0 {
            terms.push((j - 1, self.b[j - 1]));
        }
        if self.a[j] != 0 {
            terms.push((j, self.a[j]));
        }
        if self.c[j] != 0 {
            terms.push((j + 1, self.c[j]));
        }
        terms
    }

    /// Compact rectangular form listing all `rho` columns of every row,
    /// e.g. `[0,6|2,0|0,3]` for rows (0,6), (2,0), (0,3).
    pub fn compact(&self) -> String {
        let rho = self.rho();
        let mut s = String::new();
        s.push('[');
        for i in 0..=rho {
            if i > 0 {
                s.push('|');
            }
            for j in 0..rho {
                if j > 0 {
                    s.push(',');
                }
                let value = if j + 1 == i {
                    self.c[i - 1]
                } else if j == i {
                    self.a[i]
                } else if j == i + 1 {
                    self.b[i]
                } else {
                    0
                };
                s.push_str(&format!("{value}"));
            }
        }
        s.push(']');
        s
    }

    /// Appends the column of row-sum completions: the extension of the block.
    /// Fails when a completed entry would land off the tridiagonal band.
    pub fn extension(&self) -> Result<ParamMatrix, CodesError> {
        let rho = self.rho();
        for i in 0..rho.saturating_sub(1) {
            if self.row_sum(i) != self.valency {
                return Err(CodesError::ExtensionNotTridiagonal { row: i });
            }
        }
        let mut a = self.a.clone();
        a.push(self.valency - self.row_sum(rho));
        let mut b = self.b.clone();
        b.push(self.valency - self.row_sum(rho - 1));
        ParamMatrix::new(self.valency, a, b, self.c.clone())
    }

    /// Theorem-1 monotonicity on the in-block entries.
    pub fn is_monotone(&self) -> bool {
        self.c.windows(2).all(|p| p[0] <= p[1]) && self.b.windows(2).all(|p| p[0] >= p[1])
    }

    pub fn is_r_null(&self, r: usize) -> bool {
        r <= self.a.len() && self.a[..r].iter().all(|&x| x == 0)
    }
}

impl fmt::Debug for PartialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

impl fmt::Display for PartialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

impl Serialize for PartialMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.compact())
    }
}

/// Parses the rectangular form produced by [`PartialMatrix::compact`];
/// entries off the tridiagonal band must be zero. The valency is needed to
/// validate row sums.
pub fn parse_partial(text: &str, valency: u32) -> Result<PartialMatrix, CodesError> {
    let rows = split_rows(text)?;
    if rows.len() < 2 {
        return Err(CodesError::Parse { message: "need at least two rows".to_owned() });
    }
    let rho = rows.len() - 1;
    let mut a = vec![0u32; rho];
    let mut b = vec![0u32; rho.saturating_sub(1)];
    let mut c = vec![0u32; rho];
    for (i, row) in rows.iter().enumerate() {
        if row.len() != rho {
            return Err(CodesError::Parse {
                message: format!("row {i} has {} entries, expected {rho}", row.len()),
            });
        }
        for (j, &value) in row.iter().enumerate() {
            if j + 1 == i {
                c[i - 1] = value;
            } else if j == i {
                a[i] = value;
            } else if j == i + 1 {
                b[i] = value;
            } else if value != 0 {
                return Err(CodesError::Parse {
                    message: format!("nonzero entry {value} off the band at ({i},{j})"),
                });
            }
        }
    }
    PartialMatrix::new(valency, a, b, c)
}

/// A code in the grid given by per-axis periods and a residue set on the
/// quotient box; membership of `x` depends only on `x_i mod q_i`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicCode {
    n: usize,
    periods: Vec<u32>,
    residues: BTreeSet<Vec<i64>>,
}

impl PeriodicCode {
    pub fn new<I>(n: usize, periods: Vec<u32>, residues: I) -> Result<Self, CodesError>
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        if periods.len() != n {
            return Err(CodesError::BadShape {
                message: format!("{} periods for dimension {n}", periods.len()),
            });
        }
        if let Some(axis) = periods.iter().position(|&q| q == 0) {
            return Err(CodesError::ZeroPeriod { axis });
        }
        let mut canonical = BTreeSet::new();
        for r in residues {
            if r.len() != n {
                return Err(CodesError::ResidueDimensionMismatch { expected: n, got: r.len() });
            }
            let reduced: Vec<i64> = r
                .iter()
                .zip(&periods)
                .map(|(&x, &q)| x.rem_euclid(i64::from(q)))
                .collect();
            canonical.insert(reduced);
        }
        if canonical.is_empty() {
            return Err(CodesError::EmptyResidues);
        }
        Ok(Self { n, periods, residues: canonical })
    }

    /// The code `q_1 Z x ... x q_n Z` translates of nothing: all of `Z^n`.
    pub fn all(n: usize) -> Self {
        Self { n, periods: vec![1; n], residues: BTreeSet::from([vec![0; n]]) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn periods(&self) -> &[u32] {
        &self.periods
    }

    pub fn residues(&self) -> &BTreeSet<Vec<i64>> {
        &self.residues
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        debug_assert_eq!(coords.len(), self.n);
        let reduced: Vec<i64> = coords
            .iter()
            .zip(&self.periods)
            .map(|(&x, &q)| x.rem_euclid(i64::from(q)))
            .collect();
        self.residues.contains(reduced.as_slice())
    }

    /// The code shifted so that the old vertex `t` lands at the origin:
    /// the result contains `x` exactly when `self` contains `x + t`.
    pub fn translate(&self, t: &[i64]) -> Self {
        debug_assert_eq!(t.len(), self.n);
        let residues = self
            .residues
            .iter()
            .map(|r| {
                r.iter()
                    .zip(t)
                    .zip(&self.periods)
                    .map(|((&x, &s), &q)| (x - s).rem_euclid(i64::from(q)))
                    .collect()
            })
            .collect();
        Self { n: self.n, periods: self.periods.clone(), residues }
    }

    /// Smallest divisor `d` of the period on `axis` such that the residue
    /// set is invariant under the shift `+d e_axis`.
    pub fn minimal_period(&self, axis: usize) -> u32 {
        let q = self.periods[axis];
        'outer: for d in 1..=q {
            if q % d != 0 {
                continue;
            }
            for r in &self.residues {
                let mut shifted = r.clone();
                shifted[axis] = (shifted[axis] + i64::from(d)).rem_euclid(i64::from(q));
                if !self.residues.contains(shifted.as_slice()) {
                    continue 'outer;
                }
            }
            return d;
        }
        q
    }

    /// The same code with every axis period scaled by `factor` (the residue
    /// set is lifted accordingly). Verification results must not change.
    pub fn refine(&self, factor: u32) -> Self {
        assert!(factor >= 1);
        let periods: Vec<u32> = self.periods.iter().map(|&q| q * factor).collect();
        let mut residues = BTreeSet::new();
        let mut shifts = vec![0u32; self.n];
        loop {
            for r in &self.residues {
                let lifted: Vec<i64> = r
                    .iter()
                    .zip(&shifts)
                    .zip(&self.periods)
                    .map(|((&x, &k), &q)| x + i64::from(k) * i64::from(q))
                    .collect();
                residues.insert(lifted);
            }
            let mut axis = self.n;
            loop {
                if axis == 0 {
                    return Self { n: self.n, periods, residues };
                }
                axis -= 1;
                shifts[axis] += 1;
                if shifts[axis] < factor {
                    break;
                }
                shifts[axis] = 0;
            }
        }
    }
}

impl fmt::Debug for PeriodicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PeriodicCode(n={}, periods={:?}, {} residues)",
            self.n,
            self.periods,
            self.residues.len()
        )
    }
}

/// Why a coloring failed to be completely regular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VerifyFailure {
    /// A single color class covers everything.
    RhoZero,
    /// Labels are not the contiguous range `0..=rho`.
    NonContiguousLabels,
    /// Two vertices with the same label disagree on neighbor color counts.
    Irregular { vertex: u32, word: Option<Word>, label: u32, counts: Vec<u32> },
    /// A vertex sees a color more than one class away.
    NotTridiagonal { vertex: u32, word: Option<Word>, label: u32, counts: Vec<u32> },
    /// A class with no neighbors one step closer to the code.
    NoDescent { label: u32 },
    /// Neighbor counts do not add up to the valency.
    RowSum { label: u32, sum: u32 },
}

/// Outcome of a complete-regularity check.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub is_crc: bool,
    pub covering_radius: u32,
    pub matrix: Option<ParamMatrix>,
    pub failure: Option<VerifyFailure>,
    /// Set when an expected matrix was supplied for comparison.
    pub matches_expected: Option<bool>,
}

impl Verdict {
    fn failed(covering_radius: u32, failure: VerifyFailure) -> Self {
        Self { is_crc: false, covering_radius, matrix: None, failure: Some(failure), matches_expected: None }
    }
}

/// Checks that `labels` is an equitable partition of the graph with a
/// tridiagonal parameter matrix whose rows sum to `valency`, i.e. that the
/// class of label 0 is a completely regular code with `labels` its distance
/// partition. A constant labeling is rejected.
pub fn verify_coloring(adjacency: &[Vec<u32>], valency: u32, labels: &[u32]) -> Verdict {
    assert_eq!(adjacency.len(), labels.len(), "labels must cover all vertices");
    let k = labels.iter().copied().max().map_or(0, |m| m as usize + 1);
    if k <= 1 {
        return Verdict::failed(0, VerifyFailure::RhoZero);
    }
    let mut seen = vec![false; k];
    for &l in labels {
        seen[l as usize] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Verdict::failed(k as u32 - 1, VerifyFailure::NonContiguousLabels);
    }
    let rho = k - 1;

    let mut reference: Vec<Option<Vec<u32>>> = vec![None; k];
    let mut counts = vec![0u32; k];
    for (v, nbrs) in adjacency.iter().enumerate() {
        counts.iter_mut().for_each(|c| *c = 0);
        for &u in nbrs {
            counts[labels[u as usize] as usize] += 1;
        }
        let label = labels[v];
        match &reference[label as usize] {
            Some(expected) if *expected == counts => {}
            Some(_) => {
                return Verdict::failed(
                    rho as u32,
                    VerifyFailure::Irregular { vertex: v as u32, word: None, label, counts },
                );
            }
            None => {
                let off_band = counts
                    .iter()
                    .enumerate()
                    .any(|(j, &c)| c != 0 && (j as i64 - label as i64).abs() > 1);
                if off_band {
                    return Verdict::failed(
                        rho as u32,
                        VerifyFailure::NotTridiagonal { vertex: v as u32, word: None, label, counts },
                    );
                }
                reference[label as usize] = Some(counts.clone());
            }
        }
    }

    let rows: Vec<Vec<u32>> = reference.into_iter().map(|r| r.expect("label occupied")).collect();
    for (i, row) in rows.iter().enumerate() {
        let sum: u32 = row.iter().sum();
        if sum != valency {
            return Verdict::failed(rho as u32, VerifyFailure::RowSum { label: i as u32, sum });
        }
        if i >= 1 && row[i - 1] == 0 {
            return Verdict::failed(rho as u32, VerifyFailure::NoDescent { label: i as u32 });
        }
    }
    let a: Vec<u32> = (0..k).map(|i| rows[i][i]).collect();
    let b: Vec<u32> = (0..rho).map(|i| rows[i][i + 1]).collect();
    let c: Vec<u32> = (1..k).map(|i| rows[i][i - 1]).collect();
    let matrix = ParamMatrix::new(valency, a, b, c).expect("row sums checked");
    Verdict {
        is_crc: true,
        covering_radius: rho as u32,
        matrix: Some(matrix),
        failure: None,
        matches_expected: None,
    }
}

/// A periodic code realized on a torus large enough for its distance
/// partition to agree with the grid.
pub(crate) struct Realization {
    pub torus: BoxTorus,
    pub labels: Vec<u32>,
    pub rho: u32,
}

impl Realization {
    pub fn label_of(&self, coords: &[i64]) -> u32 {
        self.labels[self.torus.index(coords) as usize]
    }
}

fn lift_lengths(periods: &[u32], minimum: u32) -> Result<Vec<u32>, CodesError> {
    let mut lengths = Vec::with_capacity(periods.len());
    for (axis, &q) in periods.iter().enumerate() {
        let factor = minimum.div_ceil(q);
        let length = q.checked_mul(factor).filter(|&l| l <= AXIS_CAP).ok_or(
            CodesError::AxisInflationOverflow { axis, required: minimum, cap: AXIS_CAP },
        )?;
        lengths.push(length);
    }
    let vertices = lengths.iter().try_fold(1usize, |acc, &l| acc.checked_mul(l as usize));
    match vertices {
        Some(v) if v <= VERTEX_CAP => Ok(lengths),
        v => Err(CodesError::TorusTooLarge { vertices: v.unwrap_or(usize::MAX), cap: VERTEX_CAP }),
    }
}

/// Realizes the code on tori of growing axis length until every axis is at
/// least `max(3, 2 rho + 2)` for the observed covering radius `rho`.
pub(crate) fn realize(code: &PeriodicCode) -> Result<Realization, CodesError> {
    let mut minimum = 3u32;
    loop {
        let lengths = lift_lengths(code.periods(), minimum)?;
        let torus = BoxTorus::new(&lengths);
        let mut seeds = Vec::new();
        let mut coords = vec![0i64; code.n()];
        for idx in 0..torus.len() as u32 {
            decode_into(&torus, idx, &mut coords);
            if code.contains(&coords) {
                seeds.push(idx);
            }
        }
        let adjacency = torus.adjacency();
        let labels = lattice::distance_partition(&adjacency, &seeds)?;
        let rho = labels.iter().copied().max().unwrap_or(0);
        let required = 3.max(2 * rho + 2);
        if lengths.iter().all(|&l| l >= required) {
            return Ok(Realization { torus, labels, rho });
        }
        minimum = required;
    }
}

fn decode_into(torus: &BoxTorus, mut idx: u32, coords: &mut [i64]) {
    for (axis, &l) in torus.lengths().iter().enumerate().rev() {
        coords[axis] = i64::from(idx % l);
        idx /= l;
        let _ = axis;
    }
}

/// Verifies complete regularity of a periodic code by realizing it on a
/// sufficiently large torus and checking its distance partition there.
/// When `expected` is given, the verdict also records whether the verified
/// matrix equals it exactly.
pub fn verify_periodic(
    code: &PeriodicCode,
    expected: Option<&ParamMatrix>,
) -> Result<Verdict, CodesError> {
    let realization = realize(code)?;
    let adjacency = realization.torus.adjacency();
    let valency = 2 * code.n() as u32;
    let mut verdict = verify_coloring(&adjacency, valency, &realization.labels);
    if let Some(failure) = &mut verdict.failure {
        match failure {
            VerifyFailure::Irregular { vertex, word, .. }
            | VerifyFailure::NotTridiagonal { vertex, word, .. } => {
                *word = Some(Word(realization.torus.decode(*vertex)));
            }
            _ => {}
        }
    }
    if let Some(expected) = expected {
        verdict.matches_expected = Some(verdict.matrix.as_ref() == Some(expected));
    }
    Ok(verdict)
}

/// Grid distance labels (distance to the code) for a list of grid words.
pub fn grid_labels(code: &PeriodicCode, words: &[Word]) -> Result<Vec<u32>, CodesError> {
    let realization = realize(code)?;
    Ok(words.iter().map(|w| realization.label_of(w.coords())).collect())
}

/// The opposite code: all vertices at maximal distance from `code`,
/// translated so the origin lies inside it. It is periodic with the same
/// periods, and a CRC exactly when `code` is, with the reversed matrix.
pub fn opposite_code(code: &PeriodicCode) -> Result<PeriodicCode, CodesError> {
    let realization = realize(code)?;
    let mut residues = Vec::new();
    let mut r = vec![0i64; code.n()];
    loop {
        if realization.label_of(&r) == realization.rho {
            residues.push(r.clone());
        }
        let mut axis = code.n();
        loop {
            if axis == 0 {
                let first = residues.first().cloned().expect("rho is attained");
                let opposite = PeriodicCode::new(code.n(), code.periods().to_vec(), residues)?;
                return Ok(opposite.translate(&first));
            }
            axis -= 1;
            r[axis] += 1;
            if r[axis] < i64::from(code.periods()[axis]) {
                break;
            }
            r[axis] = 0;
        }
    }
}

/// Outcome of the Theorem-2 style reducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reducibility {
    /// No pair of equal interior triples.
    NotReducible,
    /// Two interior triples coincide and every entry is divisible by `n`:
    /// the scaled-down matrix of the underlying one-dimensional code.
    Reduced(ParamMatrix),
    /// Equal interior triples but entries not divisible by `n`.
    Inconsistent,
}

/// When two interior rows `(c_i, a_i, b_i)` of `matrix` coincide, the code is
/// the `n`-fold multiple of a one-dimensional code; returns that code's
/// matrix when `n` divides every entry.
pub fn reducible_check(matrix: &ParamMatrix, n: u32) -> Reducibility {
    let rho = matrix.rho();
    if rho < 3 {
        return Reducibility::NotReducible;
    }
    let triple = |i: usize| (matrix.c()[i - 1], matrix.a()[i], matrix.b()[i]);
    let mut repeating = false;
    'outer: for i in 1..rho {
        for j in (i + 1)..rho {
            if triple(i) == triple(j) {
                repeating = true;
                break 'outer;
            }
        }
    }
    if !repeating {
        return Reducibility::NotReducible;
    }
    let divisible = matrix.a().iter().chain(matrix.b()).chain(matrix.c()).all(|&x| x % n == 0);
    if !divisible || matrix.valency() % n != 0 {
        return Reducibility::Inconsistent;
    }
    let a = matrix.a().iter().map(|&x| x / n).collect();
    let b = matrix.b().iter().map(|&x| x / n).collect();
    let c = matrix.c().iter().map(|&x| x / n).collect();
    Reducibility::Reduced(ParamMatrix::new(matrix.valency() / n, a, b, c).expect("scaled rows"))
}
