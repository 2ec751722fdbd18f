//! Extremal radii of polytopes in generalized Minkowski spaces.
//!
//! Bodies are V-polytopes; the unit ball `C` of the gauge may be any
//! full-dimensional polytope, centered or not. The crate computes the
//! circumradius `R(K, C)`, inradius `r(K, C)`, diameter `D(K, C)` and minimum
//! width `ω(K, C)` by linear programming, together with the support, width,
//! gauge, radial and chord-length functions they are built from, and checks
//! the inequality chain relating diameter and circumradius.
//!
//! ```
//! use gauge_radii::{worked, radii};
//!
//! let (square, triangle) = worked::triangle_square();
//! let d = radii::diameter(&square, &triangle).unwrap();
//! assert!((d.value - worked::triangle_square_diameter()).abs() < 1e-7);
//! ```

pub mod bodies;
pub mod chain;
pub mod cli;
pub mod containment;
pub mod error;
pub mod functionals;
pub mod hull;
pub mod lp;
pub mod polytope;
pub mod radii;
pub mod report;
pub mod tol;
pub mod vector;
pub mod worked;

pub use bodies::{make_body, BodyKind, BodySpec};
pub use chain::{verify_chain, width_numbers, ChainReport, WidthNumbers};
pub use error::{GeometryError, Result};
pub use functionals::{FunctionalValue, GaugeBody};
pub use polytope::{HPolytope, Halfspace, VPolytope};
pub use radii::{Quantity, RadiiResult, Witness};
pub use vector::Vector;
