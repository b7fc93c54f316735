//! Exact integer and polynomial arithmetic.

pub mod fp;
pub mod gf;
pub mod integer;
pub mod irreducible;
pub mod poly;
pub mod resultant;
pub mod valuation;

pub use fp::PolyModP;
pub use gf::{factor_over_fp, FieldPoly, ResidualFieldElement, ResidueField};
pub use irreducible::{is_irreducible_over_q, Certificate, Irreducibility};
pub use poly::PolyZ;
pub use resultant::{charpoly_of_element, discriminant_poly, resultant};
pub use valuation::{padic_valuation, unit_part, Valuation};
