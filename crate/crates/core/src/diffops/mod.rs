//! Difference-operator algebra, the difference / differential
//! correspondence, holonomic enumeration, and the quadratic-discriminant
//! recursion classifier.

pub mod convert;
pub mod diffop;
pub mod enumerate;
pub mod superseeker;

pub use convert::{boundary_defect, de_to_diff, diff_to_de};
pub use diffop::DifferenceOperator;
pub use enumerate::holonomic_enumerate;
pub use superseeker::{superseeker_signature, superseeker_signature_of_de, QuadraticSignature};
