//! Generators for completely regular code families in the grid: quotient
//! lifts from tori and Hamming graphs, the Gray-map lift from binary Hamming
//! graphs, the triangular-grid lift, coordinate multiplication, perfect and
//! diameter perfect codes and their derived families.
//!
//! Every generator returns a [`PeriodicCode`]; its claimed parameter matrix
//! is exposed alongside so callers can confirm it with
//! [`crate::codes::verify_periodic`].

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::codes::{CodesError, ParamMatrix, PeriodicCode};
use crate::lattice::{self, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    Codes(CodesError),
    Lattice(LatticeError),
    /// The source code must be a nonempty proper subset of its space.
    ImproperSource { size: usize, space: usize },
    ResidueOutOfRange { value: i64, q: u32 },
    /// No frozen diameter generator for this dimension.
    NoDiameterGenerator { n: usize },
    /// The frozen diameter vector failed its exhaustive validation.
    DiameterOracleFailed { n: usize, reason: String },
    BadParameter { message: String },
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Codes(e) => write!(f, "{e}"),
            Self::Lattice(e) => write!(f, "{e}"),
            Self::ImproperSource { size, space } => {
                write!(f, "source code with {size} words of {space} must be a proper nonempty subset")
            }
            Self::ResidueOutOfRange { value, q } => {
                write!(f, "residue {value} out of range 0..{q}")
            }
            Self::NoDiameterGenerator { n } => {
                write!(f, "no diameter lattice generator configured for n = {n}")
            }
            Self::DiameterOracleFailed { n, reason } => {
                write!(f, "diameter lattice validation failed for n = {n}: {reason}")
            }
            Self::BadParameter { message } => write!(f, "{message}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<CodesError> for ConstructionError {
    fn from(e: CodesError) -> Self {
        Self::Codes(e)
    }
}

impl From<LatticeError> for ConstructionError {
    fn from(e: LatticeError) -> Self {
        Self::Lattice(e)
    }
}

/// Lifts a code in the torus `G_{n,q}` to the grid along componentwise
/// reduction mod q; the lift keeps the parameter matrix.
pub fn from_quotient<I>(n: usize, q: u32, residues: I) -> Result<PeriodicCode, ConstructionError>
where
    I: IntoIterator<Item = Vec<i64>>,
{
    if q < 3 {
        return Err(ConstructionError::BadParameter {
            message: format!("quotient lifts need q >= 3, got {q}"),
        });
    }
    let mut checked = Vec::new();
    for r in residues {
        if let Some(&bad) = r.iter().find(|&&x| x < 0 || x >= i64::from(q)) {
            return Err(ConstructionError::ResidueOutOfRange { value: bad, q });
        }
        checked.push(r);
    }
    Ok(PeriodicCode::new(n, vec![q; n], checked)?)
}

/// Lifts a code in the ternary Hamming graph `H(n,3) = G_{n,3}`.
pub fn from_ternary_hamming<I>(n: usize, words: I) -> Result<PeriodicCode, ConstructionError>
where
    I: IntoIterator<Item = Vec<i64>>,
{
    from_quotient(n, 3, words)
}

/// Lifts a code in the binary Hamming graph `H(2n,2)` through the Gray map:
/// the resulting grid code has period 4 on every axis and the same
/// parameter matrix.
pub fn from_binary_hamming(
    n: usize,
    words: &BTreeSet<Vec<i64>>,
) -> Result<PeriodicCode, ConstructionError> {
    let space = 1usize << (2 * n);
    if words.is_empty() || words.len() >= space {
        return Err(ConstructionError::ImproperSource { size: words.len(), space });
    }
    for w in words {
        if w.len() != 2 * n {
            return Err(ConstructionError::BadParameter {
                message: format!("binary word of length {}, expected {}", w.len(), 2 * n),
            });
        }
        if let Some(&bad) = w.iter().find(|&&x| x != 0 && x != 1) {
            return Err(ConstructionError::ResidueOutOfRange { value: bad, q: 2 });
        }
    }
    let mut residues = Vec::new();
    let mut r = vec![0i64; n];
    loop {
        let gray = lattice::gray_word(&r)?;
        if words.contains(gray.coords()) {
            residues.push(r.clone());
        }
        let mut axis = n;
        loop {
            if axis == 0 {
                return Ok(PeriodicCode::new(n, vec![4; n], residues)?);
            }
            axis -= 1;
            r[axis] += 1;
            if r[axis] < 4 {
                break;
            }
            r[axis] = 0;
        }
    }
}

/// A periodic set in the triangular grid: period `q` in both directions and
/// a residue set on the `q x q` quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularCode {
    pub q: u32,
    pub residues: BTreeSet<(i64, i64)>,
}

impl TriangularCode {
    pub fn new<I>(q: u32, residues: I) -> Result<Self, ConstructionError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        if q == 0 {
            return Err(ConstructionError::BadParameter { message: "period must be positive".into() });
        }
        let qq = i64::from(q);
        let residues: BTreeSet<(i64, i64)> = residues
            .into_iter()
            .map(|(u, v)| (u.rem_euclid(qq), v.rem_euclid(qq)))
            .collect();
        if residues.is_empty() {
            return Err(ConstructionError::Codes(CodesError::EmptyResidues));
        }
        Ok(Self { q, residues })
    }

    pub fn contains(&self, u: i64, v: i64) -> bool {
        let q = i64::from(self.q);
        self.residues.contains(&(u.rem_euclid(q), v.rem_euclid(q)))
    }
}

/// Lifts a periodic triangular-grid set to `Z^3` along the covering
/// `x -> (x1 - x2, x3 - x2)`; complete regularity and the matrix carry over.
pub fn from_triangular(code: &TriangularCode) -> PeriodicCode {
    let q = code.q;
    let qq = i64::from(q);
    let mut residues = Vec::new();
    for x1 in 0..qq {
        for x2 in 0..qq {
            for x3 in 0..qq {
                if code.contains(x1 - x2, x3 - x2) {
                    residues.push(vec![x1, x2, x3]);
                }
            }
        }
    }
    PeriodicCode::new(3, vec![q; 3], residues).expect("nonempty lift")
}

/// Coordinate multiplication: membership of `x` in the result is membership
/// of the vector of block sums (k consecutive coordinates per block) in the
/// source. A code in `G_n` becomes one in `G_{kn}` with matrix `k A`.
pub fn multiply(code: &PeriodicCode, k: usize) -> PeriodicCode {
    assert!(k >= 1, "multiplication factor must be positive");
    if k == 1 {
        return code.clone();
    }
    let n = code.n();
    let mut periods = Vec::with_capacity(n * k);
    for &q in code.periods() {
        periods.extend(core::iter::repeat(q).take(k));
    }
    let mut residues = Vec::new();
    let mut r = vec![0i64; n * k];
    'enumerate: loop {
        let sums: Vec<i64> = (0..n).map(|j| r[j * k..(j + 1) * k].iter().sum()).collect();
        if code.contains(&sums) {
            residues.push(r.clone());
        }
        let mut axis = n * k;
        loop {
            if axis == 0 {
                break 'enumerate;
            }
            axis -= 1;
            r[axis] += 1;
            if r[axis] < i64::from(periods[axis]) {
                break;
            }
            r[axis] = 0;
        }
    }
    PeriodicCode::new(n * k, periods, residues).expect("nonempty block preimage")
}

/// Scales a matrix entrywise; the claimed matrix of [`multiply`].
pub fn scale_matrix(matrix: &ParamMatrix, k: u32) -> ParamMatrix {
    let a = matrix.a().iter().map(|&x| x * k).collect();
    let b = matrix.b().iter().map(|&x| x * k).collect();
    let c = matrix.c().iter().map(|&x| x * k).collect();
    ParamMatrix::new(matrix.valency() * k, a, b, c).expect("scaled rows")
}

/// The lattice perfect code `{x : sum i x_i = 0 mod 2n+1}`: one codeword in
/// every radius-one ball.
pub fn golomb_welch_perfect(n: usize) -> PeriodicCode {
    let q = 2 * n as u32 + 1;
    let qq = i64::from(q);
    let residues = box_words(&vec![q; n])
        .into_iter()
        .filter(|r| {
            r.iter()
                .enumerate()
                .map(|(i, &x)| (i as i64 + 1) * x)
                .sum::<i64>()
                .rem_euclid(qq)
                == 0
        })
        .collect::<Vec<_>>();
    PeriodicCode::new(n, vec![q; n], residues).expect("lattice code")
}

/// `[0,2n|1,2n-1]`.
pub fn perfect_matrix(n: usize) -> ParamMatrix {
    let k = 2 * n as u32;
    ParamMatrix::new(k, vec![0, k - 1], vec![k], vec![1]).expect("perfect matrix")
}

/// The even-weight words of the perfect code; period doubles.
pub fn halved_perfect(n: usize) -> PeriodicCode {
    let doubled = golomb_welch_perfect(n).refine(2);
    let residues: Vec<Vec<i64>> = doubled
        .residues()
        .iter()
        .filter(|r| r.iter().sum::<i64>() % 2 == 0)
        .cloned()
        .collect();
    PeriodicCode::new(n, doubled.periods().to_vec(), residues).expect("even half")
}

/// `[0,2n|1,0,2n-1|2n-1,0,1|2n,0]`.
pub fn halved_matrix(n: usize) -> ParamMatrix {
    let k = 2 * n as u32;
    ParamMatrix::new(k, vec![0, 0, 0, 0], vec![k, k - 1, 1], vec![1, k - 1, k])
        .expect("halved matrix")
}

/// Frozen weight vectors for the diameter perfect lattices, one per
/// dimension; modulus `4n`. Found by bounded search and validated by the
/// exhaustive anticode oracle on every construction.
const DIAMETER_VECTORS: [&[i64]; 4] = [&[1], &[1, 3], &[1, 3, 5], &[1, 3, 5, 7]];

pub fn diameter_vector(n: usize) -> Result<&'static [i64], ConstructionError> {
    DIAMETER_VECTORS
        .get(n.wrapping_sub(1))
        .copied()
        .ok_or(ConstructionError::NoDiameterGenerator { n })
}

/// The index-`4n` sublattice `{x : w.x = 0 mod 4n}` whose words have even
/// weight and pairwise distance at least four; every union of two radius-one
/// balls with adjacent centers holds exactly one codeword. The oracle runs
/// on every call.
pub fn diameter_lattice(n: usize) -> Result<PeriodicCode, ConstructionError> {
    diameter_vector(n)?;
    let code = diameter_coset_union(n, 1)?;
    validate_diameter(n, &code)?;
    Ok(code)
}

fn diameter_coset_union(n: usize, t: u32) -> Result<PeriodicCode, ConstructionError> {
    let w = diameter_vector(n)?;
    let q = 4 * n as u32;
    let qq = i64::from(q);
    let classes: BTreeSet<i64> = (0..t).map(|s| i64::from(2 * s)).collect();
    let residues: Vec<Vec<i64>> = box_words(&vec![q; n])
        .into_iter()
        .filter(|r| {
            let dot = r.iter().zip(w).map(|(&x, &wi)| x * wi).sum::<i64>().rem_euclid(qq);
            classes.contains(&dot)
        })
        .collect();
    Ok(PeriodicCode::new(n, vec![q; n], residues)?)
}

fn validate_diameter(n: usize, code: &PeriodicCode) -> Result<(), ConstructionError> {
    let q = 4 * n as u32;
    let fail = |reason: String| ConstructionError::DiameterOracleFailed { n, reason };

    // Index 4n and even weight.
    let expected = (q as usize).pow(n as u32) / (q as usize);
    if code.residues().len() != expected {
        return Err(fail(format!("index: {} residues, expected {expected}", code.residues().len())));
    }
    if let Some(r) = code.residues().iter().find(|r| r.iter().sum::<i64>() % 2 != 0) {
        return Err(fail(format!("odd-weight residue {r:?}")));
    }

    // Minimum Manhattan weight four: no nonzero word of weight <= 3.
    for word in lattice::ball_graph(n, 3).vertices() {
        if word.weight() > 0 && code.contains(word.coords()) {
            return Err(fail(format!("word {word:?} of weight {} in the lattice", word.weight())));
        }
    }

    // Anticode oracle: every two radius-one balls with adjacent centers
    // hold exactly one codeword between them. Exhaustive on the 4n-torus.
    let torus = crate::lattice::BoxTorus::new(&vec![q; n]);
    let mut member = vec![false; torus.len()];
    for idx in 0..torus.len() as u32 {
        member[idx as usize] = code.contains(&torus.decode(idx));
    }
    let ball_count = |coords: &mut Vec<i64>| -> u32 {
        let mut count = u32::from(member[torus.index(coords) as usize]);
        for axis in 0..n {
            for delta in [-1i64, 1] {
                coords[axis] += delta;
                count += u32::from(member[torus.index(coords) as usize]);
                coords[axis] -= delta;
            }
        }
        count
    };
    for idx in 0..torus.len() as u32 {
        let mut u = torus.decode(idx);
        let in_u = u32::from(member[idx as usize]);
        let count_u = ball_count(&mut u);
        for axis in 0..n {
            u[axis] += 1;
            let in_v = u32::from(member[torus.index(&u) as usize]);
            let count_v = ball_count(&mut u);
            u[axis] -= 1;
            // The two balls overlap exactly in their centers.
            let union = count_u + count_v - in_u - in_v;
            if union != 1 {
                return Err(fail(format!("ball pair at {u:?} axis {axis} holds {union} codewords")));
            }
        }
    }
    Ok(())
}

/// The union of `t` even cosets of the diameter lattice. For `t < 2n` the
/// matrix is `[0,2n|t,0,2n-t|2n,0]`; at `t = 2n` the union degenerates into
/// the even-weight code `[0,2n|2n,0]`.
pub fn diameter_union(n: usize, t: u32) -> Result<PeriodicCode, ConstructionError> {
    if t == 0 || t > 2 * n as u32 {
        return Err(ConstructionError::BadParameter {
            message: format!("need 1 <= t <= 2n = {}, got {t}", 2 * n),
        });
    }
    diameter_lattice(n)?; // validates the frozen vector
    diameter_coset_union(n, t)
}

pub fn diameter_union_matrix(n: usize, t: u32) -> ParamMatrix {
    let k = 2 * n as u32;
    if t == k {
        ParamMatrix::new(k, vec![0, 0], vec![k], vec![k]).expect("even-weight matrix")
    } else {
        ParamMatrix::new(k, vec![0, 0, 0], vec![k, k - t], vec![t, k]).expect("union matrix")
    }
}

/// The all-nulls code `{x : x_i = 0 mod 4}` with covering radius `2n`
/// (the Gray preimage of a singleton binary word).
pub fn distance_code(n: usize) -> PeriodicCode {
    PeriodicCode::new(n, vec![4; n], [vec![0; n]]).expect("singleton residue")
}

/// `[0,2n|1,0,2n-1|2,0,2n-2|...|2n,0]`.
pub fn distance_matrix(n: usize) -> ParamMatrix {
    let k = 2 * n as u32;
    let rho = k as usize;
    let a = vec![0; rho + 1];
    let b = (0..rho).map(|i| k - i as u32).collect();
    let c = (1..=rho).map(|i| i as u32).collect();
    ParamMatrix::new(k, a, b, c).expect("distance matrix")
}

/// The union of the all-nulls code and its opposite: covering radius `n`.
pub fn distance_anticode(n: usize) -> PeriodicCode {
    PeriodicCode::new(n, vec![4; n], [vec![0; n], vec![2; n]]).expect("two residues")
}

/// `[0,2n|1,0,2n-1|...|n-1,0,n+1|2n,0]`.
pub fn anticode_matrix(n: usize) -> ParamMatrix {
    let k = 2 * n as u32;
    let rho = n;
    let a = vec![0; rho + 1];
    let mut b: Vec<u32> = (0..rho).map(|i| k - i as u32).collect();
    let mut c: Vec<u32> = (1..=rho).map(|i| i as u32).collect();
    c[rho - 1] = k;
    b[rho - 1] = k - (rho as u32 - 1);
    ParamMatrix::new(k, a, b, c).expect("anticode matrix")
}

/// An all-ones code: slice pairs `{x : x_i = 0 mod 4 for i < n, x_n mod 4 in {0,3}}`,
/// covering radius `2n - 1`.
pub fn all_ones_code(n: usize) -> PeriodicCode {
    let mut first = vec![0i64; n];
    let mut second = vec![0i64; n];
    first[n - 1] = 0;
    second[n - 1] = 3;
    PeriodicCode::new(n, vec![4; n], [first, second]).expect("slice pair")
}

/// `[1,2n-1|1,1,2n-2|2,1,2n-3|...|2n-1,1]`.
pub fn all_ones_matrix(n: usize) -> ParamMatrix {
    let k = 2 * n as u32;
    let rho = k as usize - 1;
    let a = vec![1; rho + 1];
    let b = (0..rho).map(|i| k - 1 - i as u32).collect();
    let c = (1..=rho).map(|i| i as u32).collect();
    ParamMatrix::new(k, a, b, c).expect("all-ones matrix")
}

/// The distance partition matrix of `qZ` in the one-dimensional grid.
pub fn cyclic_matrix(q: u32) -> ParamMatrix {
    assert!(q >= 3);
    let rho = (q / 2) as usize;
    let mut a = vec![0; rho + 1];
    let mut b = vec![1; rho];
    let mut c = vec![1; rho];
    b[0] = 2;
    if q % 2 == 0 {
        c[rho - 1] = 2;
    } else {
        a[rho] = 1;
    }
    ParamMatrix::new(2, a, b, c).expect("cyclic matrix")
}

fn box_words(lengths: &[u32]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut r = vec![0i64; lengths.len()];
    loop {
        out.push(r.clone());
        let mut axis = lengths.len();
        loop {
            if axis == 0 {
                return out;
            }
            axis -= 1;
            r[axis] += 1;
            if r[axis] < i64::from(lengths[axis]) {
                break;
            }
            r[axis] = 0;
        }
    }
}

/// Block-sum preimage of a binary code: `{y in H(kn,2) : block sums in C}`.
/// The binary-Hamming side of coordinate multiplication.
pub fn binary_block_preimage(words: &BTreeSet<Vec<i64>>, k: usize) -> BTreeSet<Vec<i64>> {
    let n = words.iter().next().map_or(0, Vec::len);
    box_words(&vec![2; n * k])
        .into_iter()
        .filter(|y| {
            let sums: Vec<i64> = (0..n).map(|j| y[j * k..(j + 1) * k].iter().sum::<i64>() % 2).collect();
            words.contains(&sums)
        })
        .collect()
}

/// `{000, 111}`: the perfect code in `H(3,2)`.
pub fn h32_perfect() -> BTreeSet<Vec<i64>> {
    BTreeSet::from([vec![0, 0, 0], vec![1, 1, 1]])
}

/// The shortened Hamming code of length 6: eight words, minimum distance 3.
/// Shipped as a fixed table.
pub fn h62_shortened_perfect() -> BTreeSet<Vec<i64>> {
    BTreeSet::from([
        vec![0, 0, 0, 0, 0, 0],
        vec![1, 1, 1, 0, 0, 0],
        vec![1, 0, 0, 1, 1, 0],
        vec![0, 1, 0, 1, 0, 1],
        vec![0, 1, 1, 1, 1, 0],
        vec![1, 0, 1, 1, 0, 1],
        vec![1, 1, 0, 0, 1, 1],
        vec![0, 0, 1, 0, 1, 1],
    ])
}

pub fn h62_singleton() -> BTreeSet<Vec<i64>> {
    BTreeSet::from([vec![0; 6]])
}

/// Two words at full Hamming distance in `H(6,2)`.
pub fn h62_pair() -> BTreeSet<Vec<i64>> {
    BTreeSet::from([vec![0; 6], vec![1; 6]])
}

pub fn h33_repetition() -> BTreeSet<Vec<i64>> {
    BTreeSet::from([vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]])
}

pub fn h33_singleton() -> BTreeSet<Vec<i64>> {
    BTreeSet::from([vec![0, 0, 0]])
}

/// One catalog row: a concrete generator instantiation together with the
/// matrix it is claimed to verify to.
#[derive(Clone, Debug)]
pub struct ConstructionSpec {
    pub id: String,
    pub n: usize,
    pub code: PeriodicCode,
    pub claimed: ParamMatrix,
}

impl ConstructionSpec {
    fn new(id: &str, n: usize, code: PeriodicCode, claimed: ParamMatrix) -> Self {
        debug_assert_eq!(claimed.valency(), 2 * n as u32);
        Self { id: String::from(id), n, code, claimed }
    }
}

/// Every shipped construction instance in dimension `n`, with claimed
/// matrices. The classification drivers use this to mark realizations.
pub fn catalog(n: usize) -> Result<Vec<ConstructionSpec>, ConstructionError> {
    assert!((1..=4).contains(&n));
    let mut out = Vec::new();
    let mut push = |id: &str, code: PeriodicCode, claimed: ParamMatrix| {
        out.push(ConstructionSpec::new(id, n, code, claimed));
    };

    push("perfect", golomb_welch_perfect(n), perfect_matrix(n));
    push("halved-perfect", halved_perfect(n), halved_matrix(n));
    push("distance", distance_code(n), distance_matrix(n));
    push("distance-anticode", distance_anticode(n), anticode_matrix(n));
    push("all-ones", all_ones_code(n), all_ones_matrix(n));
    for t in 1..=2 * n as u32 {
        push(&format!("diameter-union-t{t}"), diameter_union(n, t)?, diameter_union_matrix(n, t));
    }
    push("even-weight", diameter_union(n, 2 * n as u32)?, diameter_union_matrix(n, 2 * n as u32));

    // Multiples of lower-dimensional perfect codes.
    for k in 2..=n {
        if n % k == 0 {
            let m = n / k;
            push(
                &format!("times{k}-perfect-g{m}"),
                multiply(&golomb_welch_perfect(m), k),
                scale_matrix(&perfect_matrix(m), k as u32),
            );
        }
    }
    // Multiples of the one-dimensional cyclic codes qZ.
    if n >= 2 {
        for q in 4..=9u32 {
            let base = from_quotient(1, q, [vec![0]])?;
            push(
                &format!("times{n}-{q}z"),
                multiply(&base, n),
                scale_matrix(&cyclic_matrix(q), n as u32),
            );
        }
    }

    if n == 3 {
        push(
            "repetition-h33",
            from_ternary_hamming(3, h33_repetition().into_iter().collect::<Vec<_>>())?,
            crate::codes::parse_compact("[0,6|1,3,2|6,0]")?,
        );
        push(
            "singleton-h33",
            from_ternary_hamming(3, h33_singleton().into_iter().collect::<Vec<_>>())?,
            crate::codes::parse_compact("[0,6|1,1,4|2,2,2|3,3]")?,
        );
        push(
            "shortened-perfect-h62",
            from_binary_hamming(3, &h62_shortened_perfect())?,
            crate::codes::parse_compact("[0,6|1,4,1|6,0]")?,
        );
        push(
            "pair-h62",
            from_binary_hamming(3, &h62_pair())?,
            crate::codes::parse_compact("[0,6|1,0,5|2,0,4|6,0]")?,
        );
        push(
            "singleton-h62",
            from_binary_hamming(3, &h62_singleton())?,
            distance_matrix(3),
        );
        push(
            "doubled-perfect-h32",
            from_binary_hamming(3, &binary_block_preimage(&h32_perfect(), 2))?,
            crate::codes::parse_compact("[0,6|2,4]")?,
        );
        push(
            "doubled-singleton-h32",
            from_binary_hamming(3, &binary_block_preimage(&BTreeSet::from([vec![0, 0, 0]]), 2))?,
            crate::codes::parse_compact("[0,6|2,0,4|4,0,2|6,0]")?,
        );
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{parse_compact, verify_periodic};

    fn assert_verifies(code: &PeriodicCode, expected: &str) {
        let expected = parse_compact(expected).unwrap();
        let verdict = verify_periodic(code, Some(&expected)).unwrap();
        assert!(verdict.is_crc, "not a CRC: {:?}", verdict.failure);
        let got = verdict.matrix.unwrap();
        assert_eq!(got, expected, "got {got}");
    }

    #[test]
    fn quotient_examples() {
        let repetition =
            from_quotient(3, 3, h33_repetition().into_iter().collect::<Vec<_>>()).unwrap();
        assert_verifies(&repetition, "[0,6|1,3,2|6,0]");

        let g1 = from_quotient(1, 3, [vec![0]]).unwrap();
        assert_verifies(&g1, "[0,2|1,1]");

        let gw2 = from_quotient(
            2,
            5,
            (0..5).flat_map(|x| (0..5).map(move |y| vec![x, y]))
                .filter(|c| (c[0] + 2 * c[1]) % 5 == 0)
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_verifies(&gw2, "[0,4|1,3]");

        assert!(from_quotient(2, 4, [vec![0, 5]]).is_err());
        assert!(from_quotient(2, 2, [vec![0, 0]]).is_err());
    }

    #[test]
    fn ternary_hamming_examples() {
        let singleton =
            from_ternary_hamming(3, h33_singleton().into_iter().collect::<Vec<_>>()).unwrap();
        assert_verifies(&singleton, "[0,6|1,1,4|2,2,2|3,3]");

        // The whole space is not a CRC.
        let whole: Vec<Vec<i64>> =
            (0..27).map(|i| vec![i / 9 % 3, i / 3 % 3, i % 3]).collect();
        let code = from_ternary_hamming(3, whole).unwrap();
        let verdict = verify_periodic(&code, None).unwrap();
        assert!(!verdict.is_crc);
    }

    #[test]
    fn binary_hamming_examples() {
        assert_verifies(
            &from_binary_hamming(3, &h62_singleton()).unwrap(),
            "[0,6|1,0,5|2,0,4|3,0,3|4,0,2|5,0,1|6,0]",
        );
        assert_verifies(
            &from_binary_hamming(3, &h62_pair()).unwrap(),
            "[0,6|1,0,5|2,0,4|6,0]",
        );
        assert_verifies(
            &from_binary_hamming(3, &h62_shortened_perfect()).unwrap(),
            "[0,6|1,4,1|6,0]",
        );
        assert!(from_binary_hamming(2, &BTreeSet::new()).is_err());
    }

    #[test]
    fn triangular_lift() {
        // {u + 2v = 0 mod 7} is a perfect code in the triangular grid; its
        // lift is a perfect code in the three-dimensional grid.
        let tri = TriangularCode::new(
            7,
            (0..7i64).flat_map(|u| (0..7i64).map(move |v| (u, v))).filter(|(u, v)| (u + 2 * v) % 7 == 0),
        )
        .unwrap();
        let lifted = from_triangular(&tri);
        assert_verifies(&lifted, "[0,6|1,5]");

        // Membership commutes with the covering on a sample of points.
        for x in -3..3i64 {
            for y in -3..3 {
                for z in -3..3 {
                    assert_eq!(lifted.contains(&[x, y, z]), tri.contains(x - y, z - y));
                }
            }
        }

        // The whole plane lifts to the whole grid, which is rejected.
        let all = TriangularCode::new(
            2,
            (0..2i64).flat_map(|u| (0..2i64).map(move |v| (u, v))),
        )
        .unwrap();
        let verdict = verify_periodic(&from_triangular(&all), None).unwrap();
        assert!(!verdict.is_crc);
    }

    #[test]
    fn multiply_examples() {
        let g1 = from_quotient(1, 3, [vec![0]]).unwrap();
        assert_verifies(&multiply(&g1, 3), "[0,6|3,3]");
        assert_eq!(multiply(&g1, 1), g1);

        let z6 = from_quotient(1, 6, [vec![0]]).unwrap();
        assert_verifies(&multiply(&z6, 3), "[0,6|3,0,3|3,0,3|6,0]");
        let z7 = from_quotient(1, 7, [vec![0]]).unwrap();
        assert_verifies(&multiply(&z7, 3), "[0,6|3,0,3|3,0,3|3,3]");
    }

    #[test]
    fn golomb_welch_examples() {
        assert_verifies(&golomb_welch_perfect(1), "[0,2|1,1]");
        assert_verifies(&golomb_welch_perfect(2), "[0,4|1,3]");
        assert_verifies(&golomb_welch_perfect(3), "[0,6|1,5]");
    }

    #[test]
    fn halved_perfect_examples() {
        assert_verifies(&halved_perfect(2), "[0,4|1,0,3|3,0,1|4,0]");
        assert_verifies(&halved_perfect(3), "[0,6|1,0,5|5,0,1|6,0]");
        // Every residue has even weight and lies in the lifted perfect code.
        let halved = halved_perfect(2);
        let full = golomb_welch_perfect(2).refine(2);
        for r in halved.residues() {
            assert_eq!(r.iter().sum::<i64>() % 2, 0);
            assert!(full.residues().contains(r));
        }
        assert_eq!(halved.residues().len() * 2, full.residues().len());
    }

    #[test]
    fn diameter_lattice_examples() {
        // n = 2 freezes {x : x1 + 3 x2 = 0 mod 8}.
        let d2 = diameter_lattice(2).unwrap();
        for x in 0..8i64 {
            for y in 0..8 {
                assert_eq!(d2.contains(&[x, y]), (x + 3 * y) % 8 == 0);
            }
        }
        for n in 1..=4 {
            let lattice = diameter_lattice(n).unwrap();
            let q = 4 * n;
            assert_eq!(lattice.residues().len() * q, q.pow(n as u32));
        }
        assert!(diameter_lattice(5).is_err());
    }

    /// Bounded search oracle: the frozen vectors are the first nondecreasing
    /// odd vectors starting at 1 that pass the validation.
    #[test]
    fn diameter_vectors_are_search_minimal() {
        for n in 1..=4usize {
            let q = 4 * n as u32;
            let mut found = None;
            let mut w = vec![1i64; n];
            'search: loop {
                let code = {
                    let qq = i64::from(q);
                    let residues: Vec<Vec<i64>> = box_words(&vec![q; n])
                        .into_iter()
                        .filter(|r| {
                            r.iter().zip(&w).map(|(&x, &wi)| x * wi).sum::<i64>().rem_euclid(qq)
                                == 0
                        })
                        .collect();
                    PeriodicCode::new(n, vec![q; n], residues).unwrap()
                };
                if validate_diameter(n, &code).is_ok() {
                    found = Some(w.clone());
                    break 'search;
                }
                // next nondecreasing odd vector
                let mut axis = n;
                loop {
                    if axis == 0 {
                        break 'search;
                    }
                    axis -= 1;
                    w[axis] += 2;
                    if w[axis] < i64::from(q) {
                        for j in axis + 1..n {
                            w[j] = w[axis];
                        }
                        break;
                    }
                }
            }
            assert_eq!(found.as_deref(), Some(diameter_vector(n).unwrap()));
        }
    }

    #[test]
    fn diameter_union_examples() {
        assert_verifies(&diameter_union(3, 1).unwrap(), "[0,6|1,0,5|6,0]");
        assert_verifies(&diameter_union(3, 2).unwrap(), "[0,6|2,0,4|6,0]");
        // t = 2n degenerates into the even-weight code.
        assert_verifies(&diameter_union(2, 4).unwrap(), "[0,4|4,0]");
        assert!(diameter_union(2, 5).is_err());
    }

    #[test]
    fn distance_family_examples() {
        assert_verifies(&distance_code(3), "[0,6|1,0,5|2,0,4|3,0,3|4,0,2|5,0,1|6,0]");
        assert_verifies(&distance_anticode(3), "[0,6|1,0,5|2,0,4|6,0]");
        assert_verifies(&all_ones_code(2), "[1,3|1,1,2|2,1,1|3,1]");
        assert_eq!(all_ones_matrix(2).rho(), 3);
    }

    #[test]
    fn construction_minimal_periods() {
        let code = distance_code(3);
        for axis in 0..3 {
            assert_eq!(code.minimal_period(axis), 4);
        }
        let ternary = from_ternary_hamming(3, h33_singleton().into_iter().collect::<Vec<_>>()).unwrap();
        for axis in 0..3 {
            assert_eq!(ternary.minimal_period(axis), 3);
        }
        assert_eq!(PeriodicCode::all(2).minimal_period(0), 1);
    }

    #[test]
    fn catalog_is_well_formed() {
        for n in 1..=2 {
            let entries = catalog(n).unwrap();
            assert!(!entries.is_empty());
            for e in &entries {
                assert_eq!(e.claimed.valency(), 2 * n as u32);
            }
        }
    }
}
