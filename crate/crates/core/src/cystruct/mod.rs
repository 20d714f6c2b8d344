//! CY structure theory for order-4 and order-5 operators: the CY2 and
//! fifth-order conditions, the a/b coefficient bridge, the Wronskian lift
//! and the Yang pullback, the Wronskian identity verifier, and exterior
//! powers.

pub mod bridge;
pub mod conditions;
pub mod exterior;
pub mod identities;
pub mod lift;
pub mod pullback;

pub use bridge::{a_from_b, b_from_a};
pub use conditions::{cy2_check, cy5_check, monic_a, monic_b};
pub use exterior::{exterior_power_operator, mum_normalize};
pub use identities::{lifted_basis, verify_identities, verify_identities_unchecked, IdentityReport};
pub use lift::{wedge_square_annihilator, wronskian_lift};
pub use pullback::{pullback_inverse, yang_pullback};
