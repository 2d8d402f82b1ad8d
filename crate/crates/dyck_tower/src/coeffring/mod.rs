//! Scalar arithmetic: exact rational functions in `u = q^(1/2)` and `t`, and
//! a fast modular image used for screening.

mod coefrat;
mod fast;
mod gcd;
mod laurent;
mod scalar;
mod text;

pub use coefrat::CoefRat;
pub use fast::{Fp, MODULUS, SEED_ENV};
pub use gcd::poly_gcd;
pub use laurent::{Int, Laurent, Mono};
pub use scalar::Scalar;
pub use text::{format_laurent, parse_coefrat};
