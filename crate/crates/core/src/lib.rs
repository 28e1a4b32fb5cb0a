//! Exact combinatorics of symplectic resolutions of nilpotent orbit closures
//! in the classical Lie algebras, and the conjugacy-class test for uniqueness
//! of symplectic resolutions of `(T*V)/G`.
//!
//! Everything here is exact: partitions and flag types are integer data,
//! linear algebra runs over the rationals or over cyclotomic fields, and no
//! floating point appears anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command
//! line live in the companion `met-atlas` crate.
//!
//! Module map:
//!
//! - [`partition`] — partitions, duals, dominance, the parity classes
//!   `P_eps(n)` / `Pai(n,q)` and the Spaltenstein map with its fibers.
//! - [`linalg`] — dense exact linear algebra (RREF, rank, nullspace,
//!   inverse) over any [`linalg::FieldOps`] implementation.
//! - [`orbit`] — nilpotent orbits as data: dimension formulas, an
//!   independent centralizer oracle, closure strata, and the two-column /
//!   type-D classifications.
//! - [`polarization`] — flag types of the symplectic resolutions
//!   `T*(G/P) -> closure(O)` for a given orbit.
//! - [`graph`] — the graph of resolutions of a fixed orbit closure with
//!   edges classified as isomorphism / isomorphism in codimension 2 / MET
//!   with explicit center, plus path search and net-center reduction.
//! - [`cyclo`] — the cyclotomic field `Q(zeta_m)` with exact arithmetic.
//! - [`group`] — finite matrix groups over a cyclotomic field: closure,
//!   conjugacy classes, fixed subspaces, and the codimension-2
//!   single-class verdicts.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cyclo;
pub mod error;
pub mod graph;
pub mod group;
pub mod linalg;
pub mod orbit;
pub mod partition;
pub mod polarization;

pub use error::Error;
pub use graph::{build_graph, connect, net_centers, GraphEdge, GraphPath, Move, ResolutionGraph};

pub use orbit::{Algebra, AlgebraKind, EdgeClass, NilpotentOrbit};
pub use partition::{Epsilon, Partition};
pub use polarization::{polarizations, FlagType, Resolution, Sign};
