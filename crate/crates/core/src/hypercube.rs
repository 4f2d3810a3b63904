//! Induced subgraphs of the hypercube `{0,1}^d`.
//!
//! A vertex is stored as its index `j = Σ a_k 2^k`, so bit `k` of the index
//! is coordinate `x_k` and the leftmost coordinate `x_{d-1}` is the highest
//! bit. Two vertices are adjacent when their indices differ in one bit.
//!
//! For `d ≥ 2` the top two coordinates split the cube into four blocks,
//! laid out as a 2×2 array:
//!
//! ```text
//!            x_{d-2}=0   x_{d-2}=1
//! x_{d-1}=0  A           B            <- top row    (V_AB)
//! x_{d-1}=1  C           D            <- bottom row (V_CD)
//!            ^ left column (V_AC)
//!                        ^ right column (V_BD)
//! ```
//!
//! Edges between the rows are *vertical*, edges between the columns are
//! *horizontal*. [`total_arrange`] rearranges any vertex set into the
//! prefix `{0, …, n-1}` through a sequence of operations that never lowers
//! the edge count, which is the constructive content of the edge-isoperimetric
//! inequality on the cube.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported cube dimension (indices fit one machine word).
pub const MAX_DIM: u32 = 62;

// Dimensions up to this use a bitset; above it a sorted index list.
const DENSE_MAX_DIM: u32 = 20;

/// Trace snapshots are kept only for sets at most this large.
pub const SNAPSHOT_LIMIT: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Storage {
    Dense(Vec<u64>),
    Sparse(Vec<u64>),
}

/// A set of vertices of `{0,1}^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeVertexSet {
    dim: u32,
    len: usize,
    storage: Storage,
}

fn check_dim(dim: u32) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::OutOfRange {
            what: "cube dimension",
            value: u64::from(dim),
            range: "1..=62",
        });
    }
    Ok(())
}

impl CubeVertexSet {
    /// Builds a set, rejecting out-of-range and repeated indices.
    pub fn new(dim: u32, indices: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_dim(dim)?;
        let mut v: Vec<u64> = indices.into_iter().collect();
        let limit = 1u64 << dim;
        if let Some(&bad) = v.iter().find(|&&i| i >= limit) {
            return Err(Error::VertexOutOfRange { index: bad, dim });
        }
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(format!("vertex {}", w[0])));
        }
        Ok(Self::from_sorted(dim, v))
    }

    pub fn empty(dim: u32) -> Result<Self> {
        Self::new(dim, std::iter::empty())
    }

    /// The totally arranged set `{0, …, n-1}`.
    pub fn prefix(dim: u32, n: u64) -> Result<Self> {
        check_dim(dim)?;
        if n > 1u64 << dim {
            return Err(Error::OutOfRange {
                what: "prefix size",
                value: n,
                range: "0..=2^dim",
            });
        }
        Ok(Self::from_sorted(dim, (0..n).collect()))
    }

    // `sorted` must be strictly increasing and below 2^dim.
    fn from_sorted(dim: u32, sorted: Vec<u64>) -> Self {
        debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
        let len = sorted.len();
        let storage = if dim <= DENSE_MAX_DIM {
            let mut words = vec![0u64; (1usize << dim).div_ceil(64)];
            for i in sorted {
                words[(i >> 6) as usize] |= 1 << (i & 63);
            }
            Storage::Dense(words)
        } else {
            Storage::Sparse(sorted)
        };
        CubeVertexSet { dim, len, storage }
    }

    fn from_unsorted(dim: u32, mut indices: Vec<u64>) -> Self {
        indices.sort_unstable();
        Self::from_sorted(dim, indices)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, index: u64) -> bool {
        if index >> self.dim != 0 {
            return false;
        }
        match &self.storage {
            Storage::Dense(words) => words[(index >> 6) as usize] >> (index & 63) & 1 == 1,
            Storage::Sparse(v) => v.binary_search(&index).is_ok(),
        }
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        match &self.storage {
            Storage::Dense(words) => Iter::Dense {
                words,
                word: 0,
                bits: words.first().copied().unwrap_or(0),
            },
            Storage::Sparse(v) => Iter::Sparse(v.iter()),
        }
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    /// Number of Hamming-distance-1 pairs inside the set.
    pub fn edge_count(&self) -> u64 {
        let mut edges = 0u64;
        for v in self.iter() {
            for k in 0..self.dim {
                let u = v ^ (1 << k);
                if u > v && self.contains(u) {
                    edges += 1;
                }
            }
        }
        edges
    }

    /// Degree of `v` inside the set (`v` itself need not belong to it).
    pub fn degree_of(&self, v: u64) -> u32 {
        (0..self.dim)
            .filter(|&k| self.contains(v ^ (1 << k)))
            .count() as u32
    }

    fn check_coordinate(&self, i: u32) -> Result<()> {
        if i >= self.dim {
            return Err(Error::CoordinateOutOfRange {
                index: i as usize,
                dim: self.dim as usize,
            });
        }
        Ok(())
    }

    fn require_blocks(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::DimensionTooSmall {
                dim: self.dim as usize,
                min: 2,
            });
        }
        Ok(())
    }

    // Images under a bijection of the index space.
    fn map(&self, f: impl Fn(u64) -> u64) -> Self {
        Self::from_unsorted(self.dim, self.iter().map(f).collect())
    }

    /// The automorphism `λ_i`: toggles coordinate `x_i` of every vertex.
    pub fn flip_coordinate(&self, i: u32) -> Result<Self> {
        self.check_coordinate(i)?;
        Ok(self.map(|v| v ^ (1 << i)))
    }

    /// The automorphism `σ_{i,j}`: exchanges coordinates `x_i` and `x_j`.
    pub fn swap_coordinates(&self, i: u32, j: u32) -> Result<Self> {
        self.check_coordinate(i)?;
        self.check_coordinate(j)?;
        let mask = (1u64 << i) | (1u64 << j);
        Ok(self.map(|v| {
            if (v >> i ^ v >> j) & 1 == 1 {
                v ^ mask
            } else {
                v
            }
        }))
    }

    /// Moves the content of block C to block D and vice versa, leaving the
    /// top row alone. Not a cube automorphism.
    pub fn swap_blocks_cd(&self) -> Result<Self> {
        self.require_blocks()?;
        let top = 1u64 << (self.dim - 1);
        let col = 1u64 << (self.dim - 2);
        Ok(self.map(|v| if v & top != 0 { v ^ col } else { v }))
    }

    pub fn blocks(&self) -> Result<BlockDecomposition> {
        self.require_blocks()?;
        let mut parts: [Vec<u64>; 4] = Default::default();
        for v in self.iter() {
            parts[block_of(v, self.dim) as usize].push(v);
        }
        let [a, b, c, d] = parts.map(|p| Self::from_sorted(self.dim, p));
        Ok(BlockDecomposition { a, b, c, d })
    }

    /// Splits the edge set along both 2×2 decompositions.
    pub fn partition_edges(&self) -> Result<EdgePartition> {
        self.require_blocks()?;
        let row_bit = self.dim - 1;
        let col_bit = self.dim - 2;
        let mut p = EdgePartition::default();
        for v in self.iter() {
            for k in 0..self.dim {
                let u = v ^ (1 << k);
                if u < v || !self.contains(u) {
                    continue;
                }
                let top = v >> row_bit & 1 == 0;
                let left = v >> col_bit & 1 == 0;
                if k == row_bit {
                    p.vert += 1;
                } else if top {
                    p.ab += 1;
                } else {
                    p.cd += 1;
                }
                if k == col_bit {
                    p.hor += 1;
                } else if left {
                    p.ac += 1;
                } else {
                    p.bd += 1;
                }
            }
        }
        Ok(p)
    }

    /// Replaces each row by the prefix of that row with the same size.
    pub fn horizontal_arrange(&self) -> Result<Self> {
        self.require_blocks()?;
        let half = 1u64 << (self.dim - 1);
        let bottom = self.iter().filter(|&v| v >= half).count() as u64;
        let top = self.len as u64 - bottom;
        Ok(Self::from_sorted(
            self.dim,
            (0..top).chain(half..half + bottom).collect(),
        ))
    }

    /// Replaces each column by the prefix of that column with the same size.
    ///
    /// A column is read downward: the left column visits
    /// `v_0 … v_{2^{d-2}-1}` and then `v_{2^{d-1}} … v_{2^{d-1}+2^{d-2}-1}`,
    /// the right column the same positions shifted by `2^{d-2}`.
    pub fn vertical_arrange(&self) -> Result<Self> {
        self.require_blocks()?;
        let col = 1u64 << (self.dim - 2);
        let right = self.iter().filter(|&v| v & col != 0).count() as u64;
        let left = self.len as u64 - right;
        let mut out: Vec<u64> = (0..left)
            .map(|p| column_position_to_index(self.dim, false, p))
            .collect();
        out.extend((0..right).map(|p| column_position_to_index(self.dim, true, p)));
        Ok(Self::from_unsorted(self.dim, out))
    }

    pub fn is_totally_arranged(&self) -> bool {
        self.iter().zip(0u64..).all(|(v, i)| v == i)
    }

    pub fn is_horizontally_arranged(&self) -> bool {
        self.horizontal_arrange().is_ok_and(|h| &h == self)
    }

    pub fn is_vertically_arranged(&self) -> bool {
        self.vertical_arrange().is_ok_and(|h| &h == self)
    }

    /// Row `bottom` (`x_{d-1} = bottom`) as a set in `{0,1}^{d-1}`; the top
    /// coordinate is dropped.
    pub fn restrict_row(&self, bottom: bool) -> Result<Self> {
        self.require_blocks()?;
        let half = 1u64 << (self.dim - 1);
        let sub = self
            .iter()
            .filter(|&v| (v >= half) == bottom)
            .map(|v| v & (half - 1))
            .collect();
        Ok(Self::from_sorted(self.dim - 1, sub))
    }

    /// Inverse of [`restrict_row`](Self::restrict_row) for a `(d-1)`-set.
    pub fn embed_row(sub: &Self, bottom: bool) -> Result<Self> {
        let dim = sub.dim + 1;
        check_dim(dim)?;
        let offset = if bottom { 1u64 << sub.dim } else { 0 };
        Ok(Self::from_sorted(
            dim,
            sub.iter().map(|v| v + offset).collect(),
        ))
    }

    /// Column `right` (`x_{d-2} = right`) as a set in `{0,1}^{d-1}`. The
    /// coordinate `x_{d-2}` is dropped and `x_{d-1}` becomes the top
    /// coordinate of the subcube, so subcube order is the downward order.
    pub fn restrict_column(&self, right: bool) -> Result<Self> {
        self.require_blocks()?;
        let col = 1u64 << (self.dim - 2);
        let sub = self
            .iter()
            .filter(|&v| (v & col != 0) == right)
            .map(|v| index_to_column_position(self.dim, v))
            .collect();
        Ok(Self::from_sorted(self.dim - 1, sub))
    }

    /// Inverse of [`restrict_column`](Self::restrict_column).
    pub fn embed_column(sub: &Self, right: bool) -> Result<Self> {
        let dim = sub.dim + 1;
        check_dim(dim)?;
        if dim < 2 {
            return Err(Error::DimensionTooSmall {
                dim: dim as usize,
                min: 2,
            });
        }
        Ok(Self::from_sorted(
            dim,
            sub.iter()
                .map(|p| column_position_to_index(dim, right, p))
                .collect(),
        ))
    }
}

impl fmt::Display for CubeVertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}} ⊆ {{0,1}}^{}", self.dim)
    }
}

/// Iterator over the indices of a [`CubeVertexSet`].
pub enum Iter<'a> {
    Dense {
        words: &'a [u64],
        word: usize,
        bits: u64,
    },
    Sparse(std::slice::Iter<'a, u64>),
}

impl Iterator for Iter<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        match self {
            Iter::Dense { words, word, bits } => loop {
                if *bits != 0 {
                    let t = bits.trailing_zeros();
                    *bits &= *bits - 1;
                    return Some(((*word as u64) << 6) | u64::from(t));
                }
                *word += 1;
                *bits = *words.get(*word)?;
            },
            Iter::Sparse(it) => it.next().copied(),
        }
    }
}

/// Which of A, B, C, D contains `v` (0..4).
fn block_of(v: u64, dim: u32) -> u8 {
    (v >> (dim - 2) & 0b11) as u8
}

fn column_position_to_index(dim: u32, right: bool, p: u64) -> u64 {
    let quarter = 1u64 << (dim - 2);
    let low = p & (quarter - 1);
    let row = p >> (dim - 2);
    (row << (dim - 1)) | low | if right { quarter } else { 0 }
}

fn index_to_column_position(dim: u32, v: u64) -> u64 {
    let quarter = 1u64 << (dim - 2);
    (v >> (dim - 1) << (dim - 2)) | (v & (quarter - 1))
}

/// The four blocks of a set, each stored as a subset of the parent cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub a: CubeVertexSet,
    pub b: CubeVertexSet,
    pub c: CubeVertexSet,
    pub d: CubeVertexSet,
}

impl BlockDecomposition {
    /// Vertices per block, `2^{d-2}`.
    pub fn capacity(&self) -> u64 {
        1 << (self.a.dim - 2)
    }

    pub fn ab(&self) -> usize {
        self.a.len + self.b.len
    }

    pub fn cd(&self) -> usize {
        self.c.len + self.d.len
    }

    pub fn ac(&self) -> usize {
        self.a.len + self.c.len
    }

    pub fn bd(&self) -> usize {
        self.b.len + self.d.len
    }

    pub fn is_full(&self, block: &CubeVertexSet) -> bool {
        block.len as u64 == self.capacity()
    }
}

/// Edge counts of the two three-way splits
/// `E = E_AB ∪ E_CD ∪ E^vert = E_AC ∪ E_BD ∪ E^hor`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    pub ab: u64,
    pub cd: u64,
    pub vert: u64,
    pub ac: u64,
    pub bd: u64,
    pub hor: u64,
}

impl EdgePartition {
    pub fn row_total(&self) -> u64 {
        self.ab + self.cd + self.vert
    }

    pub fn column_total(&self) -> u64 {
        self.ac + self.bd + self.hor
    }
}

/// One arrangement operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrangeOp {
    VerticalArrange,
    HorizontalArrange,
    Flip(u32),
    Swap(u32, u32),
    SwapBlocksCd,
    CompleteArrangeBase,
}

impl fmt::Display for ArrangeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrangeOp::VerticalArrange => f.write_str("vertical_arrange"),
            ArrangeOp::HorizontalArrange => f.write_str("horizontal_arrange"),
            ArrangeOp::Flip(i) => write!(f, "flip({i})"),
            ArrangeOp::Swap(i, j) => write!(f, "swap({i},{j})"),
            ArrangeOp::SwapBlocksCd => f.write_str("swap_blocks_CD"),
            ArrangeOp::CompleteArrangeBase => f.write_str("complete_arrange_base"),
        }
    }
}

impl Serialize for ArrangeOp {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangeStep {
    pub op: ArrangeOp,
    pub edges: u64,
    /// Omitted for sets larger than [`SNAPSHOT_LIMIT`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ArrangeTrace {
    pub initial_edges: u64,
    pub steps: Vec<ArrangeStep>,
    pub final_edges: u64,
}

impl ArrangeTrace {
    fn record(&mut self, op: ArrangeOp, set: &CubeVertexSet) {
        let edges = set.edge_count();
        let vertices = (set.len() <= SNAPSHOT_LIMIT).then(|| set.to_vec());
        self.steps.push(ArrangeStep {
            op,
            edges,
            vertices,
        });
        self.final_edges = edges;
    }

    /// Edge counts never drop from the initial set through every step.
    pub fn is_monotone(&self) -> bool {
        let mut prev = self.initial_edges;
        self.steps.iter().all(|s| {
            let ok = s.edges >= prev;
            prev = s.edges;
            ok
        })
    }
}

/// Rearranges `set` into `{0, …, n-1}` without ever decreasing the edge
/// count, recording every operation.
///
/// Works on the 2×2 block array: arrange the columns, put the fuller column
/// on the left with `λ_{d-2}`, then finish by the case analysis on which
/// blocks are full or empty. Row and column arrangements are the
/// `(d-1)`-dimensional result applied to each half (see
/// [`CubeVertexSet::restrict_row`] and [`CubeVertexSet::restrict_column`]
/// for the subcube embeddings), which is why they reduce to prefix fills.
pub fn total_arrange(set: &CubeVertexSet) -> (CubeVertexSet, ArrangeTrace) {
    let dim = set.dim();
    let n = set.len() as u64;
    let initial_edges = set.edge_count();
    let mut trace = ArrangeTrace {
        initial_edges,
        steps: Vec::new(),
        final_edges: initial_edges,
    };
    if n == 0 {
        return (set.clone(), trace);
    }
    if dim <= 1 {
        let out = CubeVertexSet::from_sorted(dim, (0..n).collect());
        trace.record(ArrangeOp::CompleteArrangeBase, &out);
        return (out, trace);
    }
    // unwraps below: dim >= 2 and coordinates d-1, d-2 are in range.
    let step = |trace: &mut ArrangeTrace, op: ArrangeOp, next: CubeVertexSet| {
        trace.record(op, &next);
        next
    };

    let mut g = step(
        &mut trace,
        ArrangeOp::VerticalArrange,
        set.vertical_arrange().unwrap(),
    );
    let blocks = g.blocks().unwrap();
    if blocks.ac() < blocks.bd() {
        let flipped = g.flip_coordinate(dim - 2).unwrap();
        g = step(&mut trace, ArrangeOp::Flip(dim - 2), flipped);
    }

    let blocks = g.blocks().unwrap();
    let b_full = blocks.is_full(&blocks.b);
    if b_full || blocks.c.is_empty() {
        // Case 1 (B full, hence A full) or case 2a (C empty).
        let arranged = g.horizontal_arrange().unwrap();
        g = step(&mut trace, ArrangeOp::HorizontalArrange, arranged);
    } else {
        // Case 2b: A full, B partial, C non-empty, D empty.
        assert!(
            blocks.is_full(&blocks.a) && blocks.d.is_empty(),
            "unexpected block shape before case 2b: {g}"
        );
        if blocks.b.len() < blocks.c.len() {
            let swapped = g.swap_coordinates(dim - 2, dim - 1).unwrap();
            g = step(&mut trace, ArrangeOp::Swap(dim - 2, dim - 1), swapped);
        }
        let blocks = g.blocks().unwrap();
        if blocks.is_full(&blocks.b) || blocks.c.is_empty() {
            // The old C was a prefix of its block, so this is already total.
            assert!(
                g.is_totally_arranged(),
                "case 2b expected a totally arranged set, got {g}"
            );
        } else {
            let before = g.edge_count();
            let moved = g.swap_blocks_cd().unwrap();
            debug_assert_eq!(moved.edge_count(), before, "C/D interchange lost edges");
            g = step(&mut trace, ArrangeOp::SwapBlocksCd, moved);
            let arranged = g.vertical_arrange().unwrap();
            g = step(&mut trace, ArrangeOp::VerticalArrange, arranged);
            let blocks = g.blocks().unwrap();
            if blocks.is_full(&blocks.b) {
                let arranged = g.horizontal_arrange().unwrap();
                g = step(&mut trace, ArrangeOp::HorizontalArrange, arranged);
            }
        }
    }
    assert!(
        g.is_totally_arranged(),
        "arrangement did not reach the prefix set: {g}"
    );
    (g, trace)
}
