//! Multiplicative relations among the coordinates of points with rational
//! coordinates: relation lattices, (primitive) dependence, the torsion/free
//! decomposition and Weil heights.

mod decompose;
mod factored;
mod height;
mod point;
mod relations;

pub use decompose::{decompose, Decomposition};
pub use factored::{factor_rational, FactoredRational};
pub use height::{height_budget, point_height, root_of_unity_order, weil_height};
pub use point::PointQ;
pub use relations::{dependence_oracle, is_dependent, is_primitively_dependent, relation_lattice};
