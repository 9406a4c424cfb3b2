//! Dicritical foliations `ω = H₁ω_ij + dH₂` at a triple point of the dual
//! graph: the criterion, the family of separatrices through the dicritical
//! component, the special member `ψ⋆`, and the contact and value identities
//! relating them to the branch.

mod contact;
mod d1;
mod problem;
mod solver;

pub use contact::{
    contact, contact_value_formula, lambda_g1_identity_check, merle_intersection, special_intersection,
    special_separatrix, specialize_family, ContactValue, GenusOneIdentity,
};
pub use d1::{d1_membership, d1_search_equality, d1_zariski_bound_check, D1Report};
pub use problem::{dicritical_test, DicriticalProblem, DicriticalVerdict};
pub use solver::{solve_separatrix_family, solver_shift, SeparatrixFamily};

#[cfg(test)]
mod tests;
