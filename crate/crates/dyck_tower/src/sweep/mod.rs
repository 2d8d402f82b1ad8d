//! The sweep over a single path, the coloring recursion and assembly of the
//! compositional sums.

pub mod assemble;
pub mod coloring;
pub mod events;

pub use assemble::assemble_composition;
pub use coloring::{
    composition_coloring, recursion_dp, sweep_points, truncated_sweep, Coloring, DpResult, DpStratum, Interval,
    Transition,
};
pub use events::{apply_rule, corner_op, event_sequence, sweep_path, EventKind, SweepEvent};
