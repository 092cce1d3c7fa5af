//! The two gadget reductions and their solution maps.
//!
//! [`mis3`] compiles a graph of maximum degree 3 into a (linear, interval)
//! alignment instance whose optimum is `m + k*`; [`sat32`] compiles a 2SAT
//! instance with three mixed-polarity occurrences per variable into a
//! (weak, weak) instance whose optimum is `4n + k*`. Each side comes with a
//! forward map (source solution → alignment) and a backward map (alignment →
//! source solution, repairing conflicts first).

mod graph;
pub mod mis3;
mod sat;
pub mod sat32;

pub use graph::{Graph, IndependentSet, VertexIncidence};
pub use mis3::{
    extract_independent_set, extract_independent_set_with_repair, reduce_mis3,
    solution_from_independent_set, Mis3Certificate, MisExtraction,
};
pub use sat::{normalize_sat32, Assignment, Literal, Occurrence, Sat32Instance};
pub use sat32::{
    extract_assignment, extract_assignment_with_repair, reduce_sat32, solution_from_assignment,
    Sat32Certificate, SatExtraction,
};
