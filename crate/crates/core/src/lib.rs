//! Equilateral triangles in the triangular grid with `n` vertices per side.
//!
//! There are `C(n+2, 4)` of them. This crate counts them three ways (closed
//! form, a sum over circumscribing triangles, and brute force), maps each
//! 4-subset of `{1, …, n+2}` to a distinct triangle and back, and draws the
//! correspondence as SVG or TikZ.
//!
//! ```
//! use trigrid::{bijection, GridSpec, Subset4};
//!
//! let grid = GridSpec::new(10).unwrap();
//! let subset = Subset4::new([4, 5, 8, 11], &grid).unwrap();
//! let triangle = bijection::encode(subset, &grid).unwrap();
//! assert_eq!(triangle.side_sq(), 4);
//! assert_eq!(bijection::decode(&triangle, &grid).unwrap(), subset);
//! ```

pub mod bijection;
pub mod cli;
pub mod counting;
pub mod error;
pub mod lattice;
pub mod render;
pub mod triangles;

pub use bijection::{GapVector, InscribedParams, Subset4};
pub use error::{Error, Result};
pub use lattice::{Delta, GridSpec, LatticePoint, Orientation};
pub use triangles::Triangle;
