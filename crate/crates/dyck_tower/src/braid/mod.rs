//! The positive braid monoid of the punctured torus, special braids traced
//! by points moving at a fixed slope, and their action on `V_*`.

mod coloring;
mod rewrite;
mod special;
mod word;

pub use coloring::{braid_on_dplus_power, check_braid_rules, check_theorem_main, theorem_main_eval, BraidCheck, ColoringBraid, SweepLine};
pub use rewrite::{rewrite_trains, sigma, Piece, RewriteRule, TrainWord};
pub use special::{is_order_for, opnext, single_strand_braid, single_strand_family, Coord, PointConfig};
pub use word::{star, train_down, train_up, BraidGen, BraidWord, CreationHom};
