//! Exact computation of multiplicatively dependent points on rational curves
//! in the torus `G_m^n` over `Q`.
//!
//! The crate is split into five layers:
//!
//! * [`exactcore`]: rationals, univariate polynomials with factorization over
//!   `Q`, reduced rational functions and Möbius transformations.
//! * [`intlattice`]: Hermite normal form, integer kernels and lattice content.
//! * [`curvegeom`]: divisors of the coordinate functions, the
//!   "no constant monomial" hypothesis, and the enumeration of the finite set
//!   of primitive characters whose restriction is an isogeny after a change of
//!   parameter.
//! * [`multdep`]: relation lattices, (primitive) dependence, torsion/free
//!   decomposition and heights of rational points.
//! * [`explorer`]: curve parsing, torsion fibers, bounded-height scans and
//!   JSON/text reports.
//!
//! With the default `parallel` feature the per-item loops (place pairs,
//! parameter scans, oracle sweeps) run on rayon; without it every loop is
//! sequential and produces the same output.

pub mod curvegeom;
pub mod error;
pub mod exactcore;
pub mod explorer;
pub mod intlattice;
pub mod multdep;
pub mod par;

pub use error::{Error, Result};
