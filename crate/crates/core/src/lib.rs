//! Bounds, constructions and exact verification for the multipartite Turán
//! minimum-degree problem: the largest minimum degree `f(n, r, t+1)` of an
//! r-partite graph with parts of size `n` that contains no `K_{t+1}`.
//!
//! - [`graph`]: multipartite graphs on a dense bit matrix.
//! - [`bounds`]: every closed-form bound, evaluated exactly, and the
//!   aggregate [`bounds::best_known_bounds`].
//! - [`constructions`]: explicit graphs attaining the lower bounds.
//! - [`verifier`]: clique, crossing-independent-set and colouring searches
//!   and machine-checked certificates.
//! - [`oracle`]: exhaustive search on tiny instances.
//! - [`io`]: JSON and DIMACS graph files.

pub mod bitset;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod verifier;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{ColorPartition, CrossingSet, GraphBuilder, MultipartiteGraph};
pub use rational::Rational;
