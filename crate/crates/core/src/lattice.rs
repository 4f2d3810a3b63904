//! Finite point sets of the integer lattice `Z^m` with `ℓ1`-adjacency, and
//! their compression onto a hypercube with the same vertex and edge counts.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypercube::{CubeVertexSet, MAX_DIM};

/// Coordinates must satisfy `|x| < COORD_LIMIT`.
pub const COORD_LIMIT: i64 = 1 << 20;

/// A set of points of `Z^m`; adjacency is `ℓ1` distance exactly 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePointSet {
    dim: usize,
    points: BTreeSet<Vec<i64>>,
}

impl LatticePointSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::OutOfRange {
                what: "lattice dimension",
                value: 0,
                range: "1..",
            });
        }
        let mut set = BTreeSet::new();
        for p in points {
            if p.len() != dim {
                return Err(Error::PointArity(format!("{p:?}")));
            }
            if let Some(&x) = p.iter().find(|x| x.abs() >= COORD_LIMIT) {
                return Err(Error::OutOfRange {
                    what: "lattice coordinate",
                    value: x.unsigned_abs(),
                    range: "|x| < 2^20",
                });
            }
            let shown = format!("{p:?}");
            if !set.insert(p) {
                return Err(Error::Duplicate(format!("point {shown}")));
            }
        }
        Ok(LatticePointSet { dim, points: set })
    }

    /// Parses `"x,y;x,y;…"`.
    pub fn parse(text: &str) -> Result<Self> {
        let points = text
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|p| {
                p.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|e| Error::InvalidArgument(format!("{x:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let dim = points.first().map_or(1, Vec::len);
        Self::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.points.iter()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    /// Number of pairs at `ℓ1` distance 1.
    pub fn edge_count(&self) -> u64 {
        let mut edges = 0;
        let mut probe = Vec::with_capacity(self.dim);
        for p in &self.points {
            for k in 0..self.dim {
                probe.clear();
                probe.extend_from_slice(p);
                probe[k] += 1;
                if self.points.contains(&probe) {
                    edges += 1;
                }
            }
        }
        edges
    }

    /// Translates each coordinate independently so that its minimum is 0.
    pub fn normalize(&self) -> Self {
        let Some(first) = self.points.first() else {
            return self.clone();
        };
        let mut mins = first.clone();
        for p in &self.points {
            for (m, &x) in mins.iter_mut().zip(p) {
                *m = (*m).min(x);
            }
        }
        let points = self
            .points
            .iter()
            .map(|p| p.iter().zip(&mins).map(|(x, m)| x - m).collect())
            .collect();
        LatticePointSet {
            dim: self.dim,
            points,
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.points.iter().flatten().all(|&x| x >= 0)
    }

    /// Per-coordinate maxima `M_j` and their maximum `M`.
    pub fn coordinate_max(&self) -> Result<CoordinateMax> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        let mut per_coordinate = vec![0i64; self.dim];
        for p in &self.points {
            for (m, &x) in per_coordinate.iter_mut().zip(p) {
                *m = (*m).max(x);
            }
        }
        let max = per_coordinate.iter().copied().max().unwrap_or(0);
        Ok(CoordinateMax {
            per_coordinate,
            max,
        })
    }

    /// One compression step on coordinate `j` (0-based), which must attain
    /// `M ≥ 2`.
    ///
    /// A new leading coordinate is prepended. Points with `x_j = M` map to
    /// `(1, …, x_j = M - 1, …)`, all others to `(0, …)`. Vertex count and
    /// edge count are unchanged and `M_j` drops by one.
    pub fn compress_once(&self, j: usize) -> Result<Self> {
        if j >= self.dim {
            return Err(Error::CoordinateOutOfRange {
                index: j,
                dim: self.dim,
            });
        }
        let maxes = self.coordinate_max()?;
        let m = maxes.max;
        if m < 2 || maxes.per_coordinate[j] != m {
            return Err(Error::CompressionPrecondition {
                coordinate: j,
                coordinate_max: maxes.per_coordinate[j],
                max: m,
            });
        }
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut q = Vec::with_capacity(self.dim + 1);
                if p[j] == m {
                    q.push(1);
                    q.extend_from_slice(p);
                    q[j + 1] = m - 1;
                } else {
                    q.push(0);
                    q.extend_from_slice(p);
                }
                q
            })
            .collect();
        Ok(LatticePointSet {
            dim: self.dim + 1,
            points,
        })
    }

    /// Normalizes, compresses until every coordinate is 0 or 1, drops
    /// all-zero coordinates and encodes the result as a cube vertex set
    /// (first remaining coordinate = highest bit).
    pub fn compress_to_cube(&self) -> Result<CubeVertexSet> {
        Ok(self.compress_with_history()?.cube)
    }

    /// Same as [`compress_to_cube`](Self::compress_to_cube), keeping every
    /// intermediate set.
    pub fn compress_with_history(&self) -> Result<Compression> {
        let mut current = self.normalize();
        let mut history = Vec::new();
        loop {
            let maxes = current.coordinate_max()?;
            if maxes.max <= 1 {
                break;
            }
            // lowest coordinate attaining M first
            let j = maxes
                .per_coordinate
                .iter()
                .position(|&x| x == maxes.max)
                .expect("max is attained");
            current = current.compress_once(j)?;
            if current.nonzero_coordinates().len() > MAX_DIM as usize {
                return Err(Error::CubeTooLarge { max: MAX_DIM });
            }
            history.push(CompressStep {
                coordinate: j,
                set: current.clone(),
            });
        }
        let cube = current.encode_binary()?;
        Ok(Compression { cube, history })
    }

    fn nonzero_coordinates(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|&k| self.points.iter().any(|p| p[k] != 0))
            .collect()
    }

    // Requires a 0/1 set.
    fn encode_binary(&self) -> Result<CubeVertexSet> {
        let keep = self.nonzero_coordinates();
        let dim = keep.len().max(1) as u32;
        if dim > MAX_DIM {
            return Err(Error::CubeTooLarge { max: MAX_DIM });
        }
        let indices = self
            .points
            .iter()
            .map(|p| keep.iter().fold(0u64, |acc, &k| (acc << 1) | p[k] as u64));
        CubeVertexSet::new(dim, indices)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateMax {
    pub per_coordinate: Vec<i64>,
    pub max: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompressStep {
    /// Coordinate of the set before this step that was compressed.
    pub coordinate: usize,
    pub set: LatticePointSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compression {
    pub cube: CubeVertexSet,
    pub history: Vec<CompressStep>,
}
