//! Divisors of the coordinate functions of a rationally parametrized curve,
//! the "no constant monomial" hypothesis, and the finite set of primitive
//! characters whose restriction becomes a power map after a Möbius change of
//! parameter.

mod bivariate;
mod character;
mod curve;
mod divisor;
mod phi;

pub use character::{Character, NormalizedCharacter};
pub use curve::{character_restrict, check_assumption, map_degree, Assumption, CurveData};
pub use divisor::{divisor_of, Divisor, Place};
pub use phi::{cyclotomic_realizable, normalize_character, phi_enumerate, phi_oracle};
