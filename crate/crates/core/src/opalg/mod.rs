//! Differential operators in theta form and monic d/dx form, with Weyl
//! algebra arithmetic: noncommutative multiplication, right division,
//! argument shifts, basis conversion, and gauge transformation.

pub mod dform;
pub mod monic;
pub mod theta;
pub mod transform;

pub use dform::{weyl_right_divide, DOperator, RightDivision};
pub use monic::{monic_to_theta, theta_to_monic, MonicOperator};
pub use theta::ThetaOperator;
pub use transform::{f_ratios, gauge_transform};
