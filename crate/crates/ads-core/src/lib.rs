//! Numerical kernel for three-dimensional Anti-de Sitter geometry.
//!
//! The crate implements the explicit constructions of AdS³ geometry:
//! the quadric and PSL(2,ℝ) matrix models with their conversions, the
//! closed-form exponential map and point/plane/geodesic duality, the
//! boundary ℝP¹×ℝP¹ with achronal meridians and their 1-Lipschitz lifts,
//! invisible domains and convex hulls with width estimates, fundamental
//! forms and the Gauss map of spacelike surfaces, explicit maximal
//! globally hyperbolic spacetimes (genus 1 via the lightlike tetrahedron,
//! genus 2 via Fuchsian pairs and limit-curve sampling), and the pleated
//! surface → earthquake dictionary with quasiconformal diagnostics.
//!
//! Everything is plain `f64` numerics with explicit tolerances; see
//! [`tol::Tolerances`]. All types are immutable values and all operations
//! are pure, so the whole API is safe to use from multiple threads.

pub mod boundary;
pub mod config;
pub mod domains;
pub mod earthquake;
pub mod error;
pub mod figures;
pub mod geodesics;
pub mod hull;
pub mod hyper;
pub mod mgh;
pub mod models;
pub mod surfaces;
pub mod tol;
pub mod verify;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
