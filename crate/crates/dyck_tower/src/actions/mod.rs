//! The tower of actions indexed by coprime slopes and the operators built
//! from it.

mod operators;
mod tower;

pub use operators::{
    c_alpha_identity_check, composition_word, lhs_compositional, nabla_conjugation_check, nabla_conjugation_pair, op_c, op_d, path_word_eval,
};
pub use tower::{mediant_decompose, ActionHandle, MediantStep, MediantWord, Slope, Tower};
