//! phi-adic Newton polygons, residual polynomials and prime decomposition.

pub mod engine;
pub mod expansion;
pub mod ore;
pub mod polygon;
pub mod residual;
pub mod splitting;

pub use engine::{decompose, decompose_with_key, Decomposition, PrimeIdeal, TraceEntry};
pub use expansion::{phi_expansion, PhiExpansion};
pub use ore::{is_p_regular, ore_factorization, second_order_refine, OreFactorization, SecondOrderCase};
pub use polygon::{lower_hull, polygon_index, principal_polygon, PolygonPoint, PrincipalPolygon, Side};
pub use residual::{residual_polynomial, ResidualPoly};
pub use splitting::SplittingType;
