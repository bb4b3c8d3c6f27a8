//! Exact arithmetic in `Z[q^{±1/2}]`: Laurent polynomials in `v = q^{1/2}`,
//! balanced quantum integers and binomials, and membership in the ideals `I_n`
//! used by the congruence screens.

mod ideal;
mod poly;
mod quantum;

pub use ideal::{congruent_mod_ideal, is_prime, membership, FpPoly, IdealSpec, Membership};
pub use poly::LaurentPoly;
pub use quantum::{quantum_binomial, quantum_integer};
