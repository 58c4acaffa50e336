//! Exact rational geometry: scalars, points, planes, polygons, contact
//! classification, half-space cuts and projective maps.

pub mod contact;
pub mod cut;
pub mod distance;
pub mod planar2d;
pub mod plane;
pub mod point;
pub mod polygon;
pub mod projective;
pub mod scalar;

pub use contact::{classify_contact, Contact, ContactTag, ViolationReason, ViolationWitness};
pub use cut::cut_polygon_by_halfspace;
pub use distance::{squared_distance_to_polygon, squared_distance_to_segment};
pub use plane::{HalfSpace, Plane, Side};
pub use point::{Aabb, Point3};
pub use polygon::{orient3d, supporting_plane, GeometryError, Polygon, PolygonId};
pub use projective::{apply_projective, circle_direction, Projective};
pub use scalar::{frac, int, parse_scalar, ExactScalar};
