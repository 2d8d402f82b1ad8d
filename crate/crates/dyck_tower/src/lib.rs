//! Exact computer algebra for the double Dyck path algebra, its tower of
//! slope actions, rational parking-function combinatorics and torus braids.

pub mod actions;
pub mod braid;
pub mod coeffring;
pub mod combinat;
pub mod error;
pub mod symfunc;
pub mod sweep;
pub mod verify;
pub mod vkspace;

pub use error::{Error, Result};
