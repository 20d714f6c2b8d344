//! Frobenius bases at the MUM point and the invariants derived from
//! them: mirror map q, Yukawa coupling K(q), instanton numbers, the
//! K(q)-equivalence relation, and series-based operator fitting.

pub mod annihilator;
pub mod basis;
pub mod mirror;

pub use annihilator::series_annihilator;
pub use basis::{frobenius_basis, indicial_shift, mum_check, power_series_solution, FrobeniusBasis};
pub use mirror::{
    equivalence_transformation, equivalent_k, equivalent_k_orientation, instanton_numbers, k_from_instantons, mirror_from_basis,
    mirror_map, yukawa_coupling, yukawa_from_basis, MirrorData,
};
