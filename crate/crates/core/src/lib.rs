//! Partial order alignment.
//!
//! Linearize two partial orders over one marker set so that the resulting
//! permutations share as many adjacencies (equivalently, as few breakpoints)
//! as possible. The crate provides
//!
//! - the order hierarchy (linear, weak, semiorder, interval, partial) with
//!   recognition, conversion and linear extension enumeration ([`order`]),
//! - adjacency and breakpoint counts ([`metrics`]),
//! - an exact polynomial DP for a linear order against a weak order and an
//!   exact exponential oracle for all other pairs ([`solve`]),
//! - the two gadget reductions from MIS on degree-3 graphs and from 2SAT with
//!   three occurrences per variable, with forward and backward solution maps
//!   ([`reduce`]),
//! - empirical checks of the L-reduction inequalities ([`lred`]),
//! - text formats and seeded generators ([`io`]).

pub mod error;
pub mod io;
pub mod lred;
pub mod marker;
pub mod metrics;
pub mod order;
pub mod reduce;
pub mod solve;

pub use error::{Error, Result};
pub use marker::{Marker, MarkerSet};
pub use metrics::{adjacency_set, count_adjacencies, count_breakpoints};
pub use order::{
    classify, enumerate_linear_extensions, is_linear_extension, to_interval_representation,
    to_weak, DagOrder, IntervalOrder, LinearOrder, Order, OrderFamily, Precedence, WeakOrder,
};
pub use solve::{
    dp_align_linear_weak, oracle_align, solve, AlignmentInstance, AlignmentSolution, Method,
};
