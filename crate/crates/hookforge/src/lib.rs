//! Exact combinatorics of Young-diagram hooks.
//!
//! The crate is organised around a few cooperating subsystems:
//!
//! - [`partition`]: partitions, cells, internal/external hooks, and the
//!   distinct-part band subdivision with its thinness predicate.
//! - [`hooks`]: hook enumeration, hook-type multisets, and the multiset
//!   verifier relating external hooks of a diagram to external hooks of the
//!   empty diagram plus its internal hooks.
//! - [`tectonic`]: the tectonic movement of plates for thin partitions and a
//!   coverage verifier for the constructive bijection it induces.
//! - [`hook_strip`]: the hook-to-strip correspondence between internal hooks
//!   of partitions of `d` and external hooks of partitions of `d - l`,
//!   realised by bead moves on the beta-number encoding.
//! - [`pp`]: brute-force enumerators for reverse and skew plane partitions,
//!   the Hillman-Grassl decomposition, and box duality.
//! - [`series`]: truncated sparse series over content-indexed variables (and
//!   bivariate/weighted variants) with checkers for every product identity.
//! - [`fock`]: a Maya-diagram model of the charge-zero semi-infinite wedge
//!   with fermion bilinears, free bosons, and their q-twisted refinement.
//!
//! Everything is exact integer arithmetic; there is no floating point in the
//! crate.

pub mod fock;
pub mod hook_strip;
pub mod hooks;
pub mod partition;
pub mod pp;
pub mod series;
pub mod tectonic;

pub use partition::{Cell, HookSide, HookStats, Partition, Subdivision};

use thiserror::Error;

/// Errors raised by precondition violations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cell ({row},{col}) lies outside the partition; {context} requires an inside cell")]
    CellOutside {
        row: usize,
        col: usize,
        context: &'static str,
    },
    #[error("cell ({row},{col}) lies inside the partition; {context} requires an outside cell")]
    CellInside {
        row: usize,
        col: usize,
        context: &'static str,
    },
    #[error("the empty partition has no band subdivision")]
    EmptySubdivision,
    #[error("partition is not thin: {axis}_1+...+{axis}_{n} = {lhs} > {axis}_{m} = {rhs}")]
    NotThin {
        axis: char,
        n: usize,
        m: usize,
        lhs: usize,
        rhs: usize,
    },
    #[error("band ({i},{j}) is not a tectonic plate (i+j must be at least K+2 = {min})")]
    NotAPlate { i: usize, j: usize, min: usize },
    #[error("band coordinate ({i},{j}) out of range for K = {k}")]
    BandOutOfRange { i: usize, j: usize, k: usize },
    #[error("bound {bound} is smaller than the largest internal hook length {max_hook}; the comparison would be lossy")]
    BoundTooSmall { bound: usize, max_hook: usize },
    #[error(
        "box size {box_size} is too small; need more than {min} to expose a nonempty safe region"
    )]
    BoxTooSmall { box_size: usize, min: usize },
    #[error("partition does not fit in the {n}x{n} box")]
    BoxTooSmallForDual { n: usize },
    #[error("cannot expand the geometric series of the unit monomial")]
    UnitMonomial,
    #[error("series caps differ: {0} vs {1}")]
    CapMismatch(usize, usize),
    #[error("{0}")]
    Precondition(String),
}
