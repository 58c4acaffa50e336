//! Polyhedral surfaces: validation against the contact model, adjacency
//! graphs, realization checks and local editing operations.

mod ops;
mod validate;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{classify_contact, Contact, GeometryError, Point3, Polygon, PolygonId};
use crate::graphs::{find_isomorphism, Graph};

pub use ops::{safe_corner_eps, safe_side_eps};
pub use validate::{halfspace_violations, ValidationOptions, Violation, ViolationKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Every polygon must be strictly convex.
    Convex,
    /// Simple polygons, convex or not.
    General,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Convex => "convex",
            Mode::General => "general",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("duplicate polygon id {0}")]
    DuplicateId(PolygonId),
    #[error("surface is invalid: {0}")]
    InvalidSurface(String),
    #[error("{0} is not a corner of any polygon")]
    NotACorner(Point3),
    #[error("{0}-{1} is not a side of any polygon")]
    NotASide(Point3, Point3),
    #[error("trim distance {eps} is too large: {reason}")]
    EpsTooLarge { eps: String, reason: String },
    #[error("side {0}-{1} belongs to a single polygon")]
    NoSecondPolygon(Point3, Point3),
    #[error("side {0}-{1} belongs to more than two polygons")]
    TooManyPolygons(Point3, Point3),
    #[error("polygon {0} must be strictly convex for this operation")]
    NotConvex(PolygonId),
    #[error("no offset below the trim distance yields a valid subdivision polygon")]
    DeltaInfeasible,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// An indexed collection of polygons with a validity mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surface {
    polygons: Vec<Polygon>,
    mode: Mode,
}

impl Surface {
    /// Builds a surface; ids must be unique. Geometric validity is checked
    /// by [`Surface::validate`], not here.
    pub fn new(polygons: Vec<Polygon>, mode: Mode) -> Result<Surface, SurfaceError> {
        let mut seen = HashSet::new();
        for p in &polygons {
            if !seen.insert(p.id()) {
                return Err(SurfaceError::DuplicateId(p.id()));
            }
        }
        Ok(Surface { polygons, mode })
    }

    /// Polygons from corner lists, with ids `0..n` in order.
    pub fn from_corners(corner_lists: Vec<Vec<Point3>>, mode: Mode) -> Result<Surface, SurfaceError> {
        let polygons = corner_lists
            .into_iter()
            .enumerate()
            .map(|(i, c)| Polygon::new(PolygonId(i as u32), c))
            .collect::<Result<Vec<_>, _>>()?;
        Surface::new(polygons, mode)
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn polygon(&self, index: usize) -> &Polygon {
        &self.polygons[index]
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn with_mode(&self, mode: Mode) -> Surface {
        Surface { polygons: self.polygons.clone(), mode }
    }

    pub fn index_of(&self, id: PolygonId) -> Option<usize> {
        self.polygons.iter().position(|p| p.id() == id)
    }

    pub fn get(&self, id: PolygonId) -> Option<&Polygon> {
        self.polygons.iter().find(|p| p.id() == id)
    }

    /// An id not used by any polygon.
    pub fn fresh_id(&self) -> PolygonId {
        PolygonId(self.polygons.iter().map(|p| p.id().0 + 1).max().unwrap_or(0))
    }

    /// Same surface with polygons removed.
    pub fn without(&self, ids: &[PolygonId]) -> Surface {
        let polygons = self.polygons.iter().filter(|p| !ids.contains(&p.id())).cloned().collect();
        Surface { polygons, mode: self.mode }
    }

    /// Same surface with polygons renumbered `0..n` in order.
    pub fn renumbered(&self) -> Surface {
        let polygons = self.polygons.iter().enumerate().map(|(i, p)| p.with_id(PolygonId(i as u32))).collect();
        Surface { polygons, mode: self.mode }
    }

    /// The side shared by two polygons, if they meet in a complete side.
    pub fn shared_side(&self, a: PolygonId, b: PolygonId) -> Option<(Point3, Point3)> {
        match classify_contact(self.get(a)?, self.get(b)?) {
            Contact::SharedSide(p, q) => Some((p, q)),
            _ => None,
        }
    }

    pub fn validate(&self) -> VerificationReport {
        validate::validate(self, &ValidationOptions::default())
    }

    pub fn validate_with(&self, options: &ValidationOptions) -> VerificationReport {
        validate::validate(self, options)
    }

    /// Adjacency graph; vertex `i` is polygon `i` of [`Surface::polygons`].
    pub fn adjacency_graph(&self) -> Result<Graph, SurfaceError> {
        let report = self.validate();
        if !report.valid {
            return Err(SurfaceError::InvalidSurface(report.summary()));
        }
        Ok(report.adjacency)
    }

    /// An isomorphism from `g` to the adjacency graph, if one exists.
    pub fn realizes(&self, g: &Graph) -> Result<Option<Realization>, SurfaceError> {
        let adjacency = self.adjacency_graph()?;
        Ok(realization_from_adjacency(self, &adjacency, g))
    }

    pub fn corner_trim(&self, corner: &Point3, eps: &crate::ExactScalar) -> Result<Surface, SurfaceError> {
        ops::corner_trim(self, corner, eps)
    }

    /// Side trim with the safe trim distance, halved until the result
    /// passes local revalidation.
    pub fn side_trim(&self, a: &Point3, b: &Point3) -> Result<Surface, SurfaceError> {
        ops::side_trim(self, a, b)
    }

    pub fn side_trim_with_eps(&self, a: &Point3, b: &Point3, eps: &crate::ExactScalar) -> Result<Surface, SurfaceError> {
        ops::side_trim_with_eps(self, a, b, eps)
    }

    /// Replaces the adjacency across side `ab` by a new polygon touching
    /// both former neighbors. Returns the surface and the new polygon's id.
    pub fn subdivide_side(&self, a: &Point3, b: &Point3) -> Result<(Surface, PolygonId), SurfaceError> {
        ops::subdivide_side(self, a, b)
    }
}

/// Isomorphism from `g` onto a known adjacency graph of `s`.
pub(crate) fn realization_from_adjacency(s: &Surface, adjacency: &Graph, g: &Graph) -> Option<Realization> {
    let map = if adjacency == g { (0..g.n()).collect() } else { find_isomorphism(g, adjacency)? };
    Some(Realization { surface: s.clone(), vertex_map: map.into_iter().map(|i| s.polygon(i).id()).collect() })
}

/// A surface together with the polygon representing each graph vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub surface: Surface,
    /// `vertex_map[v]` is the polygon of graph vertex `v`.
    pub vertex_map: Vec<PolygonId>,
}

/// Outcome of [`Surface::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    /// Every pair of polygons that is not disjoint, keyed by ids (smaller
    /// first). Pairs missing from the map are disjoint.
    pub contacts: BTreeMap<(PolygonId, PolygonId), Contact>,
    pub violations: Vec<Violation>,
    /// One vertex per polygon (in surface order), an edge per shared side.
    pub adjacency: Graph,
}

impl VerificationReport {
    /// One line per violation (at most five), for error messages.
    pub fn summary(&self) -> String {
        let mut lines: Vec<String> = self.violations.iter().take(5).map(|v| v.to_string()).collect();
        if self.violations.len() > 5 {
            lines.push(format!("... and {} more", self.violations.len() - 5));
        }
        lines.join("; ")
    }

    pub fn contact(&self, a: PolygonId, b: PolygonId) -> Contact {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.contacts.get(&key).cloned().unwrap_or(Contact::Disjoint)
    }
}
