//! Fold equilateral convex polygons into convex polyhedra by perimeter
//! halving, then check that the zipper path is made of polyhedron edges.
//!
//! The pipeline for one hexagon and one halving is:
//!
//! 1. [`polygon`]: build or sample the source polygon and check its hypotheses.
//! 2. [`gluing`]: zip one half of the boundary onto the other, giving the
//!    cone points and curvatures of the glued surface.
//! 3. [`geodesic`]: measure distances between cone points by unrolling copies
//!    of the polygon into the plane.
//! 4. [`embed`]: realize the six distances as a tetrahedron in space.
//! 5. [`net`]: cut the tetrahedron along the zipper and lay it flat again.
//!
//! [`pipeline`] strings these together into a per-polygon audit.

pub mod embed;
pub mod error;
#[doc(hidden)]
pub mod fuzzing;
pub mod geodesic;
pub mod geom;
pub mod gluing;
pub mod net;
pub mod pipeline;
pub mod polygon;
pub mod svg;
pub mod tolerance;

pub use error::{Error, Result};
pub use tolerance::Tolerances;
