//! Workbench for read-once branching program lower bounds on monotone 2-CNFs.
//!
//! The crate builds the objects involved in size lower bounds for
//! nondeterministic read-once branching programs (NROBPs) realizing the
//! monotone 2-CNF `phi(G)` of a graph `G`:
//!
//! * [`graph`], [`cnf`], [`catalog`]: graphs, their 2-CNFs, matchings,
//!   distant independent sets and exhaustive graph catalogues.
//! * [`width`]: exact matching width and distant matching width.
//! * [`family`]: tree products `T(H)`, the hard family `T_r(P_m)` and its
//!   canonical tree decomposition.
//! * [`bp`]: NROBPs, NFBDDs, uniformization and order-based compilation.
//! * [`cover`]: path weights, relative weights, DIS covers and cut-cover
//!   certificates.
//! * [`io`]: text formats; [`experiment`]: verification suites and sweeps.

pub mod bp;
pub mod catalog;
pub mod cnf;
pub mod cover;
pub mod error;
pub mod experiment;
pub mod family;
pub mod graph;
pub mod io;
pub mod width;

pub use error::{Error, Result};
