//! Construction and exact verification of polyhedral surfaces whose
//! polygons touch along complete sides, realizing prescribed adjacency
//! graphs.

pub mod constructions;
pub mod geometry;
pub mod graphs;
pub mod io;
pub mod surface;

pub use geometry::{ExactScalar, Plane, Point3, Polygon, PolygonId};
pub use graphs::Graph;
pub use surface::{Mode, Realization, Surface, VerificationReport};
