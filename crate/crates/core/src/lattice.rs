//! Finite realizations of the infinite rectangular grid and its quotients:
//! ball subgraphs, tori, Hamming graphs, the triangular torus, the Gray
//! mapping, and local-structure utilities (caps, interval graphs, word types).
//!
//! The infinite grid on `Z^n` has an edge between words at Manhattan distance
//! one. Everything here realizes pieces of it on finitely many vertices with
//! a canonical vertex order (by weight, then lexicographic) so that problem
//! encodings downstream are deterministic.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// Errors from lattice constructions and local-structure queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// `word_type` is only defined for words of weight at most four.
    UnsupportedWeight { weight: u64 },
    /// Caps do not exist in dimension one.
    EmptyCap,
    /// Quotient parameter below the smallest admissible value.
    DomainTooSmall { graph: &'static str, q: u32, min: u32 },
    /// A residue outside the expected range.
    ResidueOutOfRange { value: i64 },
    /// Gray preimages need an even number of bits.
    OddLength { len: usize },
    /// A coordinate that should have been a bit.
    NotABit { value: i64 },
    /// Distance partitions need a nonempty seed set.
    EmptySeed,
    /// A seed index outside the vertex range.
    SeedOutOfRange { index: u32 },
    /// A vertex unreachable from the seed set.
    Disconnected { index: u32 },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnsupportedWeight { weight } => {
                write!(f, "word type undefined for weight {weight} (max 4)")
            }
            Self::EmptyCap => write!(f, "caps are empty in dimension 1"),
            Self::DomainTooSmall { graph, q, min } => {
                write!(f, "{graph} requires q >= {min}, got {q}")
            }
            Self::ResidueOutOfRange { value } => write!(f, "residue {value} out of range"),
            Self::OddLength { len } => write!(f, "expected an even number of bits, got {len}"),
            Self::NotABit { value } => write!(f, "expected a 0/1 coordinate, got {value}"),
            Self::EmptySeed => write!(f, "seed set is empty"),
            Self::SeedOutOfRange { index } => write!(f, "seed index {index} out of range"),
            Self::Disconnected { index } => {
                write!(f, "vertex {index} unreachable from the seed set")
            }
        }
    }
}

impl core::error::Error for LatticeError {}

/// A point of `Z^n`; the universal vertex currency.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<i64>);

impl Word {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    /// The all-zero word of dimension `n`.
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The word `e_axis` of weight one (zero-based axis).
    pub fn unit(n: usize, axis: usize) -> Self {
        let mut coords = vec![0; n];
        coords[axis] = 1;
        Self(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Manhattan distance to the all-zero word.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).sum()
    }

    /// The type of a word of weight at most four: absolute values of the
    /// symbols in descending order, zero-padded to four characters.
    /// `(1,0,0,0,-2,1)` has type `"2110"`.
    pub fn word_type(&self) -> Result<String, LatticeError> {
        let weight = self.weight();
        if weight > 4 {
            return Err(LatticeError::UnsupportedWeight { weight });
        }
        let mut abs: Vec<u64> = self.0.iter().map(|c| c.unsigned_abs()).collect();
        abs.sort_unstable_by(|x, y| y.cmp(x));
        abs.resize(4, 0);
        abs.truncate(4);
        let mut s = String::with_capacity(4);
        for d in abs {
            s.push(char::from(b'0' + d as u8));
        }
        Ok(s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Manhattan distance between two words of equal dimension.
pub fn distance(x: &Word, y: &Word) -> u64 {
    debug_assert_eq!(x.dim(), y.dim());
    x.0.iter()
        .zip(&y.0)
        .map(|(a, b)| a.abs_diff(*b))
        .sum()
}

fn canonical_sort(words: &mut [Word]) {
    words.sort_unstable_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.0.cmp(&b.0)));
}

/// The subgraph of the grid induced by all words of weight at most `radius`,
/// with the interior mask marking vertices of full degree `2n`.
#[derive(Clone, Serialize)]
pub struct BallGraph {
    n: usize,
    radius: u32,
    vertices: Vec<Word>,
    adjacency: Vec<Vec<u32>>,
    interior: Vec<bool>,
    #[serde(skip)]
    index: BTreeMap<Vec<i64>, u32>,
}

impl BallGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn valency(&self) -> u32 {
        2 * self.n as u32
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    /// True exactly on vertices of degree `2n`, i.e. weight at most `radius - 1`.
    pub fn interior(&self) -> &[bool] {
        &self.interior
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<u32> {
        self.index.get(coords).copied()
    }
}

fn enumerate_ball_words(n: usize, radius: u32, pos: usize, current: &mut Vec<i64>, out: &mut Vec<Word>) {
    if pos == n {
        out.push(Word(current.clone()));
        return;
    }
    let r = radius as i64;
    for v in -r..=r {
        current[pos] = v;
        enumerate_ball_words(n, radius - v.unsigned_abs() as u32, pos + 1, current, out);
    }
    current[pos] = 0;
}

/// Builds the ball subgraph of radius `radius` in dimension `n`, vertices in
/// canonical order (weight, then lexicographic); vertex 0 is the zero word.
pub fn ball_graph(n: usize, radius: u32) -> BallGraph {
    assert!(n >= 1, "dimension must be positive");
    assert!(radius >= 1, "radius must be positive");
    let mut vertices = Vec::new();
    enumerate_ball_words(n, radius, 0, &mut vec![0i64; n], &mut vertices);
    canonical_sort(&mut vertices);

    let index: BTreeMap<Vec<i64>, u32> = vertices
        .iter()
        .enumerate()
        .map(|(i, w)| (w.0.clone(), i as u32))
        .collect();

    let mut adjacency = Vec::with_capacity(vertices.len());
    let mut interior = Vec::with_capacity(vertices.len());
    let mut probe = vec![0i64; n];
    for w in &vertices {
        let mut nbrs = Vec::with_capacity(2 * n);
        probe.copy_from_slice(&w.0);
        for axis in 0..n {
            for delta in [-1i64, 1] {
                probe[axis] += delta;
                if let Some(&u) = index.get(&probe) {
                    nbrs.push(u);
                }
                probe[axis] -= delta;
            }
        }
        nbrs.sort_unstable();
        interior.push(nbrs.len() == 2 * n);
        adjacency.push(nbrs);
    }

    BallGraph { n, radius, vertices, adjacency, interior, index }
}

/// Which quotient a [`QuotientGraph`] realizes.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuotientKind {
    Torus,
    Hamming,
    TriangularTorus,
}

/// A finite quotient of the grid (torus), a Hamming graph, or the
/// triangular torus. Vertices are residue words in lexicographic order.
#[derive(Clone, Serialize)]
pub struct QuotientGraph {
    kind: QuotientKind,
    n: usize,
    q: u32,
    vertices: Vec<Word>,
    adjacency: Vec<Vec<u32>>,
}

impl QuotientGraph {
    pub fn kind(&self) -> QuotientKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn valency(&self) -> u32 {
        match self.kind {
            QuotientKind::Torus => 2 * self.n as u32,
            QuotientKind::Hamming => self.n as u32 * (self.q - 1),
            QuotientKind::TriangularTorus => 6,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    /// Index of a grid word after componentwise reduction mod q.
    pub fn index_of(&self, coords: &[i64]) -> u32 {
        debug_assert_eq!(coords.len(), self.n);
        let q = i64::from(self.q);
        let mut idx: u64 = 0;
        for &c in coords {
            idx = idx * u64::from(self.q) + c.rem_euclid(q) as u64;
        }
        idx as u32
    }
}

fn quotient_vertices(n: usize, q: u32) -> Vec<Word> {
    let count = (q as u64).pow(n as u32) as usize;
    let mut vertices = Vec::with_capacity(count);
    let mut coords = vec![0i64; n];
    for _ in 0..count {
        vertices.push(Word(coords.clone()));
        for axis in (0..n).rev() {
            coords[axis] += 1;
            if coords[axis] < i64::from(q) {
                break;
            }
            coords[axis] = 0;
        }
    }
    vertices
}

/// The torus `G_{n,q}`: componentwise residues mod q with the grid metric.
/// Rejects q < 3 (q = 2 would create double edges).
pub fn torus_graph(n: usize, q: u32) -> Result<QuotientGraph, LatticeError> {
    if q < 3 {
        return Err(LatticeError::DomainTooSmall { graph: "torus", q, min: 3 });
    }
    let vertices = quotient_vertices(n, q);
    let graph_q = i64::from(q);
    let adjacency = vertices
        .iter()
        .map(|w| {
            let mut nbrs = Vec::with_capacity(2 * n);
            for axis in 0..n {
                for delta in [-1i64, 1] {
                    let mut c = w.0.clone();
                    c[axis] = (c[axis] + delta).rem_euclid(graph_q);
                    nbrs.push(mixed_radix_index(&c, q));
                }
            }
            nbrs.sort_unstable();
            nbrs
        })
        .collect();
    Ok(QuotientGraph { kind: QuotientKind::Torus, n, q, vertices, adjacency })
}

/// The Hamming graph `H(n,q)`: words adjacent when they differ in one position.
pub fn hamming_graph(n: usize, q: u32) -> Result<QuotientGraph, LatticeError> {
    if q < 2 {
        return Err(LatticeError::DomainTooSmall { graph: "hamming", q, min: 2 });
    }
    let vertices = quotient_vertices(n, q);
    let adjacency = vertices
        .iter()
        .map(|w| {
            let mut nbrs = Vec::with_capacity(n * (q as usize - 1));
            for axis in 0..n {
                for value in 0..i64::from(q) {
                    if value != w.0[axis] {
                        let mut c = w.0.clone();
                        c[axis] = value;
                        nbrs.push(mixed_radix_index(&c, q));
                    }
                }
            }
            nbrs.sort_unstable();
            nbrs
        })
        .collect();
    Ok(QuotientGraph { kind: QuotientKind::Hamming, n, q, vertices, adjacency })
}

/// The quotient of the infinite triangular grid by `qZ^2`; generators
/// `±(1,0)`, `±(0,1)`, `±(1,1)`.
pub fn triangular_torus(q: u32) -> Result<QuotientGraph, LatticeError> {
    if q < 3 {
        return Err(LatticeError::DomainTooSmall { graph: "triangular-torus", q, min: 3 });
    }
    let vertices = quotient_vertices(2, q);
    let graph_q = i64::from(q);
    let generators: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)];
    let adjacency = vertices
        .iter()
        .map(|w| {
            let mut nbrs: Vec<u32> = generators
                .iter()
                .map(|(du, dv)| {
                    let c = [(w.0[0] + du).rem_euclid(graph_q), (w.0[1] + dv).rem_euclid(graph_q)];
                    mixed_radix_index(&c, q)
                })
                .collect();
            nbrs.sort_unstable();
            nbrs
        })
        .collect();
    Ok(QuotientGraph { kind: QuotientKind::TriangularTorus, n: 2, q, vertices, adjacency })
}

fn mixed_radix_index(coords: &[i64], q: u32) -> u32 {
    let mut idx: u64 = 0;
    for &c in coords {
        debug_assert!(c >= 0 && c < i64::from(q));
        idx = idx * u64::from(q) + c as u64;
    }
    idx as u32
}

/// The cap at `±3 e_axis` (zero-based axis): all weight-four words with
/// absolute value 3 in that position, `{3s·e_axis ± e_j : j != axis}`.
pub fn cap(n: usize, axis: usize, positive: bool) -> Result<Vec<Word>, LatticeError> {
    if n < 2 {
        return Err(LatticeError::EmptyCap);
    }
    assert!(axis < n, "axis out of range");
    let tip = if positive { 3 } else { -3 };
    let mut words = Vec::with_capacity(2 * (n - 1));
    for j in 0..n {
        if j == axis {
            continue;
        }
        for delta in [1i64, -1] {
            let mut coords = vec![0i64; n];
            coords[axis] = tip;
            coords[j] = delta;
            words.push(Word(coords));
        }
    }
    canonical_sort(&mut words);
    Ok(words)
}

/// The subgraph induced by the metric interval between the zero word and `x`:
/// all `y` with `d(y,0) + d(y,x) = d(0,x)`, i.e. the coordinate box spanned
/// by 0 and `x`, with the grid edges.
#[derive(Clone, Debug)]
pub struct IntervalGraph {
    pub vertices: Vec<Word>,
    pub edges: Vec<(u32, u32)>,
}

pub fn interval_graph(x: &Word) -> IntervalGraph {
    let n = x.dim();
    let mut vertices = Vec::new();
    let mut current = vec![0i64; n];
    fn rec(x: &[i64], pos: usize, current: &mut Vec<i64>, out: &mut Vec<Word>) {
        if pos == x.len() {
            out.push(Word(current.clone()));
            return;
        }
        let (lo, hi) = if x[pos] >= 0 { (0, x[pos]) } else { (x[pos], 0) };
        for v in lo..=hi {
            current[pos] = v;
            rec(x, pos + 1, current, out);
        }
        current[pos] = 0;
    }
    rec(&x.0, 0, &mut current, &mut vertices);
    canonical_sort(&mut vertices);

    let index: BTreeMap<&[i64], u32> = vertices
        .iter()
        .enumerate()
        .map(|(i, w)| (w.0.as_slice(), i as u32))
        .collect();
    let mut edges = Vec::new();
    let mut probe = vec![0i64; n];
    for (i, w) in vertices.iter().enumerate() {
        probe.copy_from_slice(&w.0);
        for axis in 0..n {
            for delta in [-1i64, 1] {
                probe[axis] += delta;
                if let Some(&j) = index.get(probe.as_slice()) {
                    if (i as u32) < j {
                        edges.push((i as u32, j));
                    }
                }
                probe[axis] -= delta;
            }
        }
    }
    edges.sort_unstable();
    IntervalGraph { vertices, edges }
}

/// The Gray mapping on residues mod 4, componentwise:
/// `0 -> 00, 1 -> 10, 2 -> 11, 3 -> 01`. Turns a length-n word of residues
/// into a binary word of length 2n.
pub fn gray_word(residues: &[i64]) -> Result<Word, LatticeError> {
    let mut bits = Vec::with_capacity(2 * residues.len());
    for &r in residues {
        let pair = match r {
            0 => (0, 0),
            1 => (1, 0),
            2 => (1, 1),
            3 => (0, 1),
            _ => return Err(LatticeError::ResidueOutOfRange { value: r }),
        };
        bits.push(pair.0);
        bits.push(pair.1);
    }
    Ok(Word(bits))
}

/// Inverse of [`gray_word`]: a binary word of length 2n back to residues mod 4.
pub fn gray_inverse(bits: &[i64]) -> Result<Word, LatticeError> {
    if bits.len() % 2 != 0 {
        return Err(LatticeError::OddLength { len: bits.len() });
    }
    let mut residues = Vec::with_capacity(bits.len() / 2);
    for pair in bits.chunks_exact(2) {
        for &b in pair {
            if b != 0 && b != 1 {
                return Err(LatticeError::NotABit { value: b });
            }
        }
        residues.push(match (pair[0], pair[1]) {
            (0, 0) => 0,
            (1, 0) => 1,
            (1, 1) => 2,
            (0, 1) => 3,
            _ => unreachable!(),
        });
    }
    Ok(Word(residues))
}

/// The covering homomorphism from `Z^3` onto the triangular grid:
/// `(x1, x2, x3) -> (x1 - x2, x3 - x2)`. Maps grid generators to
/// triangular generators.
pub fn triangular_covering(x: &Word) -> Word {
    assert_eq!(x.dim(), 3, "the triangular covering is defined on Z^3");
    Word(vec![x.0[0] - x.0[1], x.0[2] - x.0[1]])
}

/// Multi-source BFS distance labels; label 0 exactly on the seed set.
pub fn distance_partition(adjacency: &[Vec<u32>], seeds: &[u32]) -> Result<Vec<u32>, LatticeError> {
    if seeds.is_empty() {
        return Err(LatticeError::EmptySeed);
    }
    const UNSEEN: u32 = u32::MAX;
    let mut labels = vec![UNSEEN; adjacency.len()];
    let mut queue = VecDeque::new();
    for &s in seeds {
        if s as usize >= adjacency.len() {
            return Err(LatticeError::SeedOutOfRange { index: s });
        }
        if labels[s as usize] == UNSEEN {
            labels[s as usize] = 0;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        let next = labels[v as usize] + 1;
        for &u in &adjacency[v as usize] {
            if labels[u as usize] == UNSEEN {
                labels[u as usize] = next;
                queue.push_back(u);
            }
        }
    }
    if let Some(i) = labels.iter().position(|&l| l == UNSEEN) {
        return Err(LatticeError::Disconnected { index: i as u32 });
    }
    Ok(labels)
}

/// A product of cycles with per-axis lengths, used to realize periodic codes.
/// Vertices are residue words in row-major order.
pub(crate) struct BoxTorus {
    lengths: Vec<u32>,
    len: usize,
}

impl BoxTorus {
    /// Every axis length must be at least 3 so the quotient is a simple graph.
    pub(crate) fn new(lengths: &[u32]) -> Self {
        assert!(!lengths.is_empty());
        assert!(lengths.iter().all(|&l| l >= 3));
        let len = lengths.iter().try_fold(1usize, |acc, &l| acc.checked_mul(l as usize));
        Self { lengths: lengths.to_vec(), len: len.expect("torus too large") }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    /// Index of a grid word after per-axis reduction.
    pub(crate) fn index(&self, coords: &[i64]) -> u32 {
        debug_assert_eq!(coords.len(), self.lengths.len());
        let mut idx: u64 = 0;
        for (c, &l) in coords.iter().zip(&self.lengths) {
            idx = idx * u64::from(l) + c.rem_euclid(i64::from(l)) as u64;
        }
        idx as u32
    }

    pub(crate) fn decode(&self, mut idx: u32) -> Vec<i64> {
        let mut coords = vec![0i64; self.lengths.len()];
        for axis in (0..self.lengths.len()).rev() {
            let l = self.lengths[axis];
            coords[axis] = i64::from(idx % l);
            idx /= l;
        }
        coords
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<u32>> {
        let n = self.lengths.len();
        let mut adjacency = Vec::with_capacity(self.len);
        let mut coords = vec![0i64; n];
        for _ in 0..self.len {
            let mut nbrs = Vec::with_capacity(2 * n);
            for axis in 0..n {
                let l = i64::from(self.lengths[axis]);
                for delta in [-1i64, 1] {
                    let save = coords[axis];
                    coords[axis] = (save + delta).rem_euclid(l);
                    nbrs.push(self.index(&coords));
                    coords[axis] = save;
                }
            }
            nbrs.sort_unstable();
            adjacency.push(nbrs);
            for axis in (0..n).rev() {
                coords[axis] += 1;
                if coords[axis] < i64::from(self.lengths[axis]) {
                    break;
                }
                coords[axis] = 0;
            }
        }
        adjacency
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn w(coords: &[i64]) -> Word {
        Word(coords.to_vec())
    }

    #[test]
    fn weight_examples() {
        assert_eq!(w(&[0, 0, 0]).weight(), 0);
        assert_eq!(w(&[1, 0, 0, 0, -2, 1]).weight(), 4);
        assert_eq!(w(&[3, -1]).weight(), 4);
    }

    #[test]
    fn word_type_examples() {
        assert_eq!(w(&[1, 0, 0, 0, -2, 1]).word_type().unwrap(), "2110");
        assert_eq!(w(&[0, 0, 0]).word_type().unwrap(), "0000");
        assert_eq!(w(&[3, 1, 0, 0]).word_type().unwrap(), "3100");
        assert_eq!(
            w(&[3, 2]).word_type(),
            Err(LatticeError::UnsupportedWeight { weight: 5 })
        );
    }

    #[test]
    fn cap_examples() {
        let c = cap(3, 0, true).unwrap();
        let expect: BTreeSet<Word> =
            [w(&[3, 1, 0]), w(&[3, -1, 0]), w(&[3, 0, 1]), w(&[3, 0, -1])].into_iter().collect();
        assert_eq!(c.iter().cloned().collect::<BTreeSet<_>>(), expect);

        let c = cap(2, 1, false).unwrap();
        let expect: BTreeSet<Word> = [w(&[1, -3]), w(&[-1, -3])].into_iter().collect();
        assert_eq!(c.iter().cloned().collect::<BTreeSet<_>>(), expect);

        assert_eq!(cap(4, 0, true).unwrap().len(), 6);
        assert_eq!(cap(1, 0, true), Err(LatticeError::EmptyCap));
    }

    #[test]
    fn interval_graph_weight_four_sizes() {
        // One representative per weight-four type.
        let cases = [
            (w(&[4, 0, 0, 0]), 5usize),
            (w(&[3, 1, 0, 0]), 8),
            (w(&[2, -2, 0, 0]), 9),
            (w(&[2, 1, -1, 0]), 12),
            (w(&[1, 1, 1, 1]), 16),
        ];
        for (word, size) in cases {
            assert_eq!(interval_graph(&word).vertices.len(), size, "interval of {word:?}");
        }
    }

    #[test]
    fn interval_graph_path_and_hypercube() {
        let path = interval_graph(&w(&[4, 0, 0, 0]));
        assert_eq!(path.vertices.len(), 5);
        assert_eq!(path.edges.len(), 4);

        let cube = interval_graph(&w(&[1, 1, 1, 1]));
        assert_eq!(cube.vertices.len(), 16);
        assert_eq!(cube.edges.len(), 32); // 4-dimensional hypercube
    }

    /// Independent oracle: breadth-first walk from the origin, truncated at
    /// distance `radius`, counting what it reaches.
    fn bfs_ball_size(n: usize, radius: u32) -> usize {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier = vec![vec![0i64; n]];
        seen.insert(frontier[0].clone());
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in frontier {
                for axis in 0..n {
                    for delta in [-1i64, 1] {
                        let mut y = x.clone();
                        y[axis] += delta;
                        if seen.insert(y.clone()) {
                            next.push(y);
                        }
                    }
                }
            }
            frontier = next;
        }
        seen.len()
    }

    #[test]
    fn ball_sizes_match_bfs_oracle() {
        for n in 1..=4 {
            for radius in 1..=7 {
                if n == 4 && radius == 7 {
                    continue; // covered below, kept cheap here
                }
                let ball = ball_graph(n, radius);
                assert_eq!(ball.vertex_count(), bfs_ball_size(n, radius), "ball({n},{radius})");
            }
        }
        assert_eq!(ball_graph(4, 7).vertex_count(), bfs_ball_size(4, 7));
    }

    #[test]
    fn ball_examples() {
        let b = ball_graph(1, 6);
        assert_eq!(b.vertex_count(), 13);
        assert_eq!(b.interior().iter().filter(|&&i| i).count(), 11);

        let b = ball_graph(3, 6);
        assert_eq!(b.vertex_count(), 377);
        assert_eq!(b.interior().iter().filter(|&&i| i).count(), 231);

        assert_eq!(ball_graph(4, 6).vertex_count(), 1289);
    }

    #[test]
    fn ball_structure() {
        let b = ball_graph(3, 4);
        assert_eq!(b.vertices()[0], Word::zero(3));
        for v in 0..b.vertex_count() as u32 {
            let word = &b.vertices()[v as usize];
            let full = b.degree(v) == 2 * b.n();
            assert_eq!(b.interior()[v as usize], full);
            assert_eq!(full, word.weight() + 1 <= b.radius() as u64);
            for &u in &b.adjacency()[v as usize] {
                assert_ne!(u, v);
                assert!(b.adjacency()[u as usize].contains(&v));
                assert_eq!(distance(word, &b.vertices()[u as usize]), 1);
            }
        }
        // Degree accounting: 2n minus the moves that leave the ball.
        for v in 0..b.vertex_count() as u32 {
            let word = &b.vertices()[v as usize];
            let leaving = (0..b.n())
                .flat_map(|axis| [-1i64, 1].map(|d| (axis, d)))
                .filter(|(axis, d)| {
                    let mut c = word.0.clone();
                    c[*axis] += d;
                    Word(c).weight() > b.radius() as u64
                })
                .count();
            assert_eq!(b.degree(v), 2 * b.n() - leaving);
        }
    }

    #[test]
    fn ball_adjacency_is_complete_in_dimension_four() {
        // Exhaustive: a pair is adjacent exactly when at Manhattan distance 1.
        let b = ball_graph(4, 3);
        let n = b.vertex_count();
        for v in 0..n {
            for u in (v + 1)..n {
                let adjacent = b.adjacency()[v].contains(&(u as u32));
                let unit = distance(&b.vertices()[v], &b.vertices()[u]) == 1;
                assert_eq!(adjacent, unit, "pair {v},{u}");
            }
        }
    }

    #[test]
    fn torus_examples() {
        let t = torus_graph(3, 3).unwrap();
        assert_eq!(t.vertex_count(), 27);
        assert!(t.adjacency().iter().all(|nbrs| nbrs.len() == 6));
        // G_{3,3} and H(3,3) coincide: any two distinct residues mod 3 differ by ±1.
        let h = hamming_graph(3, 3).unwrap();
        assert_eq!(t.adjacency(), h.adjacency());

        let t = torus_graph(2, 4).unwrap();
        assert_eq!(t.vertex_count(), 16);
        assert!(t.adjacency().iter().all(|nbrs| nbrs.len() == 4));

        assert!(torus_graph(2, 2).is_err());
        assert!(hamming_graph(3, 1).is_err());
    }

    #[test]
    fn triangular_torus_is_six_regular() {
        let t = triangular_torus(4).unwrap();
        assert_eq!(t.vertex_count(), 16);
        assert!(t.adjacency().iter().all(|nbrs| nbrs.len() == 6));
        assert!(triangular_torus(2).is_err());
    }

    #[test]
    fn gray_examples() {
        assert_eq!(gray_word(&[0, 3]).unwrap(), w(&[0, 0, 0, 1]));
        assert_eq!(gray_word(&[2]).unwrap(), w(&[1, 1]));
        assert!(gray_word(&[4]).is_err());
        for a in 0..4i64 {
            for b in 0..4i64 {
                let g = gray_word(&[a, b]).unwrap();
                assert_eq!(gray_inverse(g.coords()).unwrap(), w(&[a, b]));
            }
        }
    }

    #[test]
    fn gray_preserves_one_adjacency() {
        // (0,0) ~ (1,0) in the 4-torus maps to a Hamming-distance-1 pair.
        let g0 = gray_word(&[0, 0]).unwrap();
        let g1 = gray_word(&[1, 0]).unwrap();
        let diff = g0.coords().iter().zip(g1.coords()).filter(|(a, b)| a != b).count();
        assert_eq!(diff, 1);
    }

    #[test]
    fn covering_examples() {
        assert_eq!(triangular_covering(&Word::unit(3, 0)), w(&[1, 0]));
        assert_eq!(triangular_covering(&Word::unit(3, 1)), w(&[-1, -1]));
        assert_eq!(triangular_covering(&Word::unit(3, 2)), w(&[0, 1]));
        assert_eq!(triangular_covering(&Word::zero(3)), w(&[0, 0]));
    }

    #[test]
    fn covering_is_locally_bijective() {
        // The six neighbors of any grid vertex map to six distinct
        // triangular-grid neighbors of the image.
        let x = w(&[5, -2, 3]);
        let fx = triangular_covering(&x);
        let mut images = BTreeSet::new();
        for axis in 0..3 {
            for delta in [-1i64, 1] {
                let mut c = x.0.clone();
                c[axis] += delta;
                let img = triangular_covering(&Word(c));
                let du = img.0[0] - fx.0[0];
                let dv = img.0[1] - fx.0[1];
                assert!(matches!((du, dv), (1, 0) | (-1, 0) | (0, 1) | (0, -1) | (1, 1) | (-1, -1)));
                images.insert(img);
            }
        }
        assert_eq!(images.len(), 6);
    }

    #[test]
    fn distance_partition_on_segment() {
        let b = ball_graph(1, 2);
        let zero = b.index_of(&[0]).unwrap();
        let labels = distance_partition(b.adjacency(), &[zero]).unwrap();
        for (coord, expect) in [(-2i64, 2u32), (-1, 1), (0, 0), (1, 1), (2, 2)] {
            let v = b.index_of(&[coord]).unwrap();
            assert_eq!(labels[v as usize], expect);
        }
    }

    #[test]
    fn distance_partition_parity_seed() {
        let t = torus_graph(3, 4).unwrap();
        let seeds: Vec<u32> = (0..t.vertex_count() as u32)
            .filter(|&v| t.vertices()[v as usize].weight() % 2 == 0)
            .collect();
        let labels = distance_partition(t.adjacency(), &seeds).unwrap();
        assert!(labels.iter().all(|&l| l <= 1));
    }

    #[test]
    fn distance_partition_golomb_welch_seed() {
        // {x : x1 + 2 x2 = 0 mod 5} tiles the plane with radius-1 balls.
        let t = torus_graph(2, 5).unwrap();
        let seeds: Vec<u32> = (0..t.vertex_count() as u32)
            .filter(|&v| {
                let c = t.vertices()[v as usize].coords();
                (c[0] + 2 * c[1]).rem_euclid(5) == 0
            })
            .collect();
        let labels = distance_partition(t.adjacency(), &seeds).unwrap();
        assert_eq!(labels.iter().max(), Some(&1));
        // Brute-force perfectness: every non-seed vertex has exactly one seed neighbor.
        for v in 0..t.vertex_count() as u32 {
            let seed_nbrs = t.adjacency()[v as usize]
                .iter()
                .filter(|&&u| labels[u as usize] == 0)
                .count();
            if labels[v as usize] == 0 {
                assert_eq!(seed_nbrs, 0);
            } else {
                assert_eq!(seed_nbrs, 1);
            }
        }
    }

    #[test]
    fn distance_partition_empty_seed_is_an_error() {
        let b = ball_graph(2, 2);
        assert_eq!(distance_partition(b.adjacency(), &[]), Err(LatticeError::EmptySeed));
    }

    #[test]
    fn box_torus_roundtrip() {
        let t = BoxTorus::new(&[3, 5, 4]);
        assert_eq!(t.len(), 60);
        for idx in 0..60u32 {
            let coords = t.decode(idx);
            assert_eq!(t.index(&coords), idx);
        }
        let adj = t.adjacency();
        assert!(adj.iter().all(|nbrs| nbrs.len() == 6));
    }
}
