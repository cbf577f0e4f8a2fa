//! Singular polynomials, Dunkl operators, the type-A Koszul-BGG complex, the
//! symmetrized system and the `H_2` action on invariant forms.

mod complex;
mod forms;
pub mod linalg;
mod poly;
mod symmetrized;

pub use complex::{
    class_representative, koszul_homology, ChainElem, HomologyPiece, KoszulComplex, KoszulDegreePiece, KoszulHomology,
};
pub use forms::{
    basis_forms, contract_components, dunkl_apply_verma, h2_apply, h2_apply_verma, h2_commutation_check, h2_ideal_check, h2_iota_commute, symmetric_to_power_sums, Components,
    Contraction, InvariantForm, PowerSums,
};
pub use poly::{calogero_moser, dunkl_apply, dunkl_apply_h, singular_polynomials, singular_potential, MultiPoly};
pub use symmetrized::{invariant_hilbert_series, symmetrized_hilbert_series, symmetrized_system, symmetrized_weights};
