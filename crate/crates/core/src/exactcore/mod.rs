//! Exact arithmetic substrate: rationals, polynomials over `Q` and their
//! factorization, reduced rational functions and Möbius maps.

mod cyclotomic;
mod factor;
mod intfactor;
mod mobius;
mod modp;
mod poly;
mod ratfunc;
mod rational;

pub use cyclotomic::{cyclotomic_poly, euler_totient, is_cyclotomic};
pub use factor::{factor_poly, squarefree_decomposition, Factorization};
pub use intfactor::{factor_integer, is_probable_prime};
pub use mobius::Mobius;
pub use poly::Poly;
pub use ratfunc::{monomial_product, RatFunc};
pub use rational::{format_pq, nth_power_in_q, parse_rational, rat, rat_frac, Rational};
