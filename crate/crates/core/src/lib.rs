//! Extremal edge counts for unit-distance configurations, hypercubes and
//! integer lattices.
//!
//! The central quantity is `T(n)`: the maximum number of unit distances `n`
//! planar points can determine when their unit directions are
//! `Q`-independent. The same number is the maximum edge count of an
//! `n`-vertex induced subgraph of the integer lattice `Z^∞` and of the
//! hypercube `{0,1}^∞`. This crate computes it, builds configurations that
//! attain it and checks every link of that chain against brute force.
//!
//! | module        | what it does                                             |
//! |---------------|----------------------------------------------------------|
//! | [`tcount`]    | closed form, Hamming-sum and recurrence values of `T(n)` |
//! | [`hypercube`] | vertex sets of `{0,1}^d`, block machinery, arrangement   |
//! | [`lattice`]   | `Z^m` point sets and compression onto a hypercube        |
//! | [`directions`]| bounded-coefficient certification of direction sets      |
//! | [`planar`]    | the planar construction and its unit-distance count      |
//! | [`oracle`]    | exhaustive maximisation over small cubes and boxes       |
//! | [`verify`]    | the composite self-check behind `edgemax verify-all`     |
//!
//! See `examples/` for one runnable program per module.

pub mod directions;
pub mod error;
pub mod hypercube;
pub mod lattice;
pub mod oracle;
pub mod planar;
pub mod tcount;
pub mod verify;

pub use directions::{CertifiedDirections, DirectionSet, GoodnessCertificate, Verdict};
pub use error::{Error, Result};
pub use hypercube::{total_arrange, ArrangeOp, ArrangeStep, ArrangeTrace, CubeVertexSet};
pub use lattice::LatticePointSet;
pub use oracle::{box_max_edges, cube_max_edges, OracleResult};
pub use planar::{build_config, count_unit_distances, verify_extremal, PlanarConfig};
pub use tcount::{hamming_weight, t_bounds, t_closed, t_hamming_sum, t_recurrence, TCountReport};
pub use verify::{verify_all, RunConfig, VerifyReport};
