//! Partial-dual genus polynomials of bouquets (one-vertex ribbon graphs),
//! their signed intersection graphs and intersection polynomials, and
//! exhaustive checks of the structural results relating them.

pub mod error;
pub mod genuspoly;
pub mod intersection;
pub mod ipoly;
pub mod limits;
pub mod mutation;
pub mod poly;
pub mod rotation;
pub mod surface;
pub mod toolkit;

pub use error::{Error, ParseError, Result};
pub use genuspoly::{
    bt_bouquet, bt_closed_form, join_concat, partial_dual_euler_polynomial,
    partial_dual_orientable_polynomial, poly_multiply,
};
pub use intersection::{signed_intersection_graph, SignedGraph};
pub use ipoly::{intersection_polynomial, realize};
pub use limits::Limits;
pub use poly::{GenusPolynomial, PolyKind};
pub use rotation::{canonical_form, equivalent, parse_rotation, Bouquet, EdgeSubset, Sign};
pub use surface::{count_boundary_components, euler_genus, is_orientable};
