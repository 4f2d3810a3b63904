//! Exhaustive maximisation of induced edge counts on small graphs.
//!
//! Used as the independent check on `T(n)`: it knows nothing about the
//! closed form or about arrangements, it just tries every `n`-subset.
//! Enumeration is a depth-first walk over combinations in lexicographic
//! order that keeps the running edge count up to date as vertices are added
//! and removed. Requests whose subset count exceeds the budget are refused
//! outright.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypercube::CubeVertexSet;
use crate::lattice::LatticePointSet;

pub const DEFAULT_BUDGET: u64 = 20_000_000;

pub const MAX_CUBE_DIM: u32 = 5;

pub const MAX_BOX_CELLS: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Domain {
    Cube { d: u32 },
    Box { extents: Vec<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ArgmaxExample {
    Cube(Vec<u64>),
    Box(Vec<Vec<i64>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub domain: Domain,
    pub n: usize,
    pub max_edges: u64,
    /// Lexicographically least subset attaining `max_edges`.
    pub argmax_example: ArgmaxExample,
    pub subsets_examined: u64,
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(u128::from(n - i)) {
            Some(v) => v / u128::from(i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

struct Best {
    edges: u64,
    subset: Vec<usize>,
    examined: u64,
}

/// Maximum number of edges induced by `k` of the vertices of the graph with
/// adjacency bitmasks `adj` (at most 64 vertices).
fn max_induced_edges(adj: &[u64], k: usize, budget: u64) -> Result<Best> {
    let needed = binomial(adj.len() as u64, k as u64);
    if needed > u128::from(budget) {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut search = Search {
        adj,
        k,
        chosen: Vec::with_capacity(k),
        mask: 0,
        edges: 0,
        best: None,
        examined: 0,
    };
    if k == 0 {
        search.leaf();
    } else {
        search.descend(0);
    }
    let (edges, subset) = search.best.expect("at least one subset");
    Ok(Best {
        edges,
        subset,
        examined: search.examined,
    })
}

struct Search<'a> {
    adj: &'a [u64],
    k: usize,
    chosen: Vec<usize>,
    mask: u64,
    edges: u64,
    best: Option<(u64, Vec<usize>)>,
    examined: u64,
}

impl Search<'_> {
    fn descend(&mut self, start: usize) {
        let remaining = self.k - self.chosen.len();
        for v in start..=self.adj.len() - remaining {
            let delta = u64::from((self.adj[v] & self.mask).count_ones());
            self.chosen.push(v);
            self.mask |= 1 << v;
            self.edges += delta;
            if remaining == 1 {
                self.leaf();
            } else {
                self.descend(v + 1);
            }
            self.edges -= delta;
            self.mask &= !(1 << v);
            self.chosen.pop();
        }
    }

    fn leaf(&mut self) {
        self.examined += 1;
        #[cfg(debug_assertions)]
        if self.examined % 101 == 1 {
            debug_assert_eq!(self.edges, self.recount(), "incremental count drifted");
        }
        if self.best.as_ref().is_none_or(|(e, _)| self.edges > *e) {
            self.best = Some((self.edges, self.chosen.clone()));
        }
    }

    #[cfg(debug_assertions)]
    fn recount(&self) -> u64 {
        let mut e = 0;
        for (i, &a) in self.chosen.iter().enumerate() {
            for &b in &self.chosen[i + 1..] {
                if self.adj[a] >> b & 1 == 1 {
                    e += 1;
                }
            }
        }
        e
    }
}

pub fn cube_max_edges(d: u32, n: usize) -> Result<OracleResult> {
    cube_max_edges_with_budget(d, n, DEFAULT_BUDGET)
}

/// Exhaustive maximum over all `n`-subsets of `{0,1}^d`, `d ≤ 5`.
pub fn cube_max_edges_with_budget(d: u32, n: usize, budget: u64) -> Result<OracleResult> {
    if d == 0 || d > MAX_CUBE_DIM {
        return Err(Error::OutOfRange {
            what: "oracle cube dimension",
            value: u64::from(d),
            range: "1..=5",
        });
    }
    let size = 1usize << d;
    if n > size {
        return Err(Error::OutOfRange {
            what: "subset size",
            value: n as u64,
            range: "0..=2^d",
        });
    }
    let adj: Vec<u64> = (0..size)
        .map(|v| (0..d).fold(0u64, |m, k| m | 1 << (v ^ (1 << k))))
        .collect();
    let best = max_induced_edges(&adj, n, budget)?;
    let example: Vec<u64> = best.subset.iter().map(|&v| v as u64).collect();
    let check = CubeVertexSet::new(d, example.iter().copied())?;
    assert_eq!(check.len(), n);
    assert_eq!(
        check.edge_count(),
        best.edges,
        "argmax re-verification failed"
    );
    Ok(OracleResult {
        domain: Domain::Cube { d },
        n,
        max_edges: best.edges,
        argmax_example: ArgmaxExample::Cube(example),
        subsets_examined: best.examined,
    })
}

pub fn box_max_edges(extents: &[u32], n: usize) -> Result<OracleResult> {
    box_max_edges_with_budget(extents, n, DEFAULT_BUDGET)
}

/// Exhaustive maximum over `n`-subsets of the box `{0..e_1} × … × {0..e_m}`
/// (at most 16 cells), with `ℓ1` adjacency.
pub fn box_max_edges_with_budget(extents: &[u32], n: usize, budget: u64) -> Result<OracleResult> {
    if extents.is_empty() {
        return Err(Error::InvalidArgument("box needs at least one axis".into()));
    }
    let cells = extents
        .iter()
        .try_fold(1u64, |acc, &e| acc.checked_mul(u64::from(e) + 1))
        .filter(|&c| c <= MAX_BOX_CELLS)
        .ok_or(Error::OutOfRange {
            what: "box cell count",
            value: extents.iter().map(|&e| u64::from(e) + 1).product(),
            range: "1..=16",
        })?;
    if n as u64 > cells {
        return Err(Error::OutOfRange {
            what: "subset size",
            value: n as u64,
            range: "0..=cells",
        });
    }
    // First axis is the most significant digit, so cell order is point order.
    let points: Vec<Vec<i64>> = (0..cells)
        .map(|mut c| {
            let mut p = vec![0i64; extents.len()];
            for (x, &e) in p.iter_mut().zip(extents).rev() {
                let r = u64::from(e) + 1;
                *x = (c % r) as i64;
                c /= r;
            }
            p
        })
        .collect();
    let adj: Vec<u64> = points
        .iter()
        .map(|p| {
            points.iter().enumerate().fold(0u64, |m, (j, q)| {
                let l1: i64 = p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum();
                if l1 == 1 {
                    m | 1 << j
                } else {
                    m
                }
            })
        })
        .collect();
    let best = max_induced_edges(&adj, n, budget)?;
    let example: Vec<Vec<i64>> = best.subset.iter().map(|&i| points[i].clone()).collect();
    let check = LatticePointSet::new(extents.len(), example.iter().cloned())?;
    assert_eq!(
        check.edge_count(),
        best.edges,
        "argmax re-verification failed"
    );
    Ok(OracleResult {
        domain: Domain::Box {
            extents: extents.to_vec(),
        },
        n,
        max_edges: best.edges,
        argmax_example: ArgmaxExample::Box(example),
        subsets_examined: best.examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(binomial(9, 4), 126);
        assert_eq!(binomial(32, 8), 10_518_300);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(5, 0), 1);
    }

    #[test]
    fn cube_examples() {
        let r = cube_max_edges(4, 8).unwrap();
        assert_eq!(r.max_edges, 12);
        assert_eq!(r.subsets_examined, 12870);
        assert_eq!(cube_max_edges(2, 3).unwrap().max_edges, 2);
        for d in 1..=5 {
            assert_eq!(cube_max_edges(d, 1).unwrap().max_edges, 0);
        }
    }

    #[test]
    fn argmax_is_lexicographically_least() {
        // {0,1,2} is the first 3-subset of the square with two edges.
        let r = cube_max_edges(2, 3).unwrap();
        assert_eq!(r.argmax_example, ArgmaxExample::Cube(vec![0, 1, 2]));
        let r = cube_max_edges(3, 4).unwrap();
        assert_eq!(r.argmax_example, ArgmaxExample::Cube(vec![0, 1, 2, 3]));
    }

    #[test]
    fn box_examples() {
        assert_eq!(box_max_edges(&[2, 2], 4).unwrap().max_edges, 4);
        assert_eq!(box_max_edges(&[2, 2], 5).unwrap().max_edges, 5);
        let r = box_max_edges(&[3, 3], 8).unwrap();
        assert_eq!(r.max_edges, 10);
        assert_eq!(r.subsets_examined, 12870);
    }

    #[test]
    fn refusals() {
        assert!(matches!(
            cube_max_edges_with_budget(5, 16, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            cube_max_edges(5, 16),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(cube_max_edges(6, 2).is_err());
        assert!(cube_max_edges(2, 5).is_err());
        assert!(box_max_edges(&[4, 3], 2).is_err());
        assert!(box_max_edges(&[], 1).is_err());
        assert!(box_max_edges(&[1], 3).is_err());
    }

    #[test]
    fn empty_subset() {
        let r = cube_max_edges(3, 0).unwrap();
        assert_eq!((r.max_edges, r.subsets_examined), (0, 1));
    }

    #[test]
    fn json_shape() {
        let r = box_max_edges(&[1, 1], 2).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["domain"]["kind"], "box");
        assert_eq!(v["argmax_example"], serde_json::json!([[0, 0], [0, 1]]));
    }
}
