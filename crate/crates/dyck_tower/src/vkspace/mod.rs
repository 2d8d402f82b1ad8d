//! The spaces `V_k`, the base operators on them, generator words and the
//! relation catalog.

pub mod ops;
pub mod relations;
pub mod velem;
pub mod words;

pub use ops::{
    act_dminus, act_dplus, act_dplus_star, act_t, act_y, act_y_commutator, act_ytilde, act_z, derived_first,
    derived_index, train_down, train_up, AlgebraKind,
};
pub use relations::{
    algebra_relations, hecke_y_relations, intertwining_relations, relation_check, spanning_set, ytilde_relations,
    Family, OpSum, Relation, RelationReport, Witness,
};
pub use velem::{Key, VElem};
pub use words::{Gen, IndexedOp, Interp, Op, Word};
