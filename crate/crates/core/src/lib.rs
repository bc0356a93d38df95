//! Combinatorics of level-1 affine sl(n) branching functions.
//!
//! The coefficients of `b^{Λ_k+Λ_{j−k}}_{Λ_j,Λ_0}(q)` are computed by four
//! independent routes: dominance of partition paths, the FOW chain
//! condition, ε-profiles in the Fock-space crystal, and a fermionic lattice
//! sum. The same partitions are the Jantzen-Seitz labels for Hecke algebras
//! at an n-th root of unity; [`js`] enumerates them by n-core and n-weight.
//!
//! Heavy sweeps fan out over rayon when the `parallel` feature is on (the
//! default) and run sequentially otherwise. Output order never depends on
//! the thread count.

pub mod cores;
pub mod crystal;
mod error;
pub mod js;
pub mod par;
pub mod partition;
pub mod paths;
pub mod qseries;
pub mod verify;
pub mod weight;

pub use error::Error;
pub use partition::{Partition, PartitionFilter};
pub use paths::{BranchingSeries, Method};
pub use qseries::TruncatedSeries;
pub use weight::AffineWeight;
