//! Rational Dyck paths, their statistics, attack graphs, characteristic
//! functions and the compositional parking-function sums.

pub mod marked;
pub mod path;
pub mod rhs;
pub mod slope;

pub use marked::{char_function, char_function_words, fully_marked, MarkedSquarePath, CHAR_BUDGET};
pub use path::{check_composition, enumerate_paths, reading_order, DyckPath, Point, Statistics};
pub(crate) use rhs::check_slope;
pub use rhs::{parking_sum, path_weight, rhs_compositional};
pub use slope::SlopeValue;
