//! Exact arithmetic: rationals, integer Laurent polynomials and the
//! cyclotomic fields Q(zeta_m).

mod cyclo;
mod laurent;
mod rat;

pub use cyclo::{cyclotomic_poly, euler_phi, root_of_unity_sum, CycloNum};
pub use laurent::LaurentPoly;
pub use rat::Rat;
