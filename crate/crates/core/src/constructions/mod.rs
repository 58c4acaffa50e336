//! Realization algorithms. Every construction runs the verifier and the
//! isomorphism check before returning; a failure there is reported as
//! [`ConstructionError::VerificationFailed`].

mod comb;
mod cylinder;
mod density;
mod hypercube;
mod k35;
mod k44;
mod planar;

use serde::Serialize;
use thiserror::Error;

use crate::geometry::scalar::bit_length;
use crate::geometry::GeometryError;
use crate::graphs::Graph;
use crate::surface::{realization_from_adjacency, Realization, Surface, SurfaceError};

pub use comb::realize_comb;
pub use cylinder::realize_subdivision_cylinder;
pub use density::{density_family, density_report, DensityReport};
pub use hypercube::realize_hypercube;
pub use k44::{k44_raw, k44_slab_clipped, k44_untrimmed, realize_k44};
pub use planar::realize_planar_flat;
pub use k35::{k35_certificates, k35_surface, realize_k35, realize_k35_with, search_k35_parameters, K35Certificate, K35Parameters, K35_PARAMETERS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph needs at least 2 edges, has {0}")]
    TooFewEdges(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("frozen coordinates failed verification: {0}")]
    CoordinateDerivationFailed(String),
    #[error("constructed surface failed verification: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionStats {
    pub polygons: usize,
    pub max_corners: usize,
    /// Largest bit length of any numerator or denominator of a coordinate.
    pub max_coordinate_bits: u64,
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub surface: Surface,
    pub realization: Realization,
    pub stats: ConstructionStats,
}

pub fn surface_stats(s: &Surface) -> ConstructionStats {
    let mut max_corners = 0;
    let mut bits = 0;
    for p in s.polygons() {
        max_corners = max_corners.max(p.len());
        for c in p.corners() {
            for v in [&c.x, &c.y, &c.z] {
                bits = bits.max(bit_length(v));
            }
        }
    }
    ConstructionStats { polygons: s.len(), max_corners, max_coordinate_bits: bits }
}

/// Validates `surface` and matches its adjacency graph against `target`.
pub(crate) fn finish(surface: Surface, target: &Graph) -> Result<ConstructionResult, ConstructionError> {
    let report = surface.validate();
    if !report.valid {
        return Err(ConstructionError::VerificationFailed(report.summary()));
    }
    let realization = realization_from_adjacency(&surface, &report.adjacency, target).ok_or_else(|| {
        ConstructionError::VerificationFailed(format!(
            "adjacency graph ({} vertices, {} edges) is not isomorphic to the target ({} vertices, {} edges)",
            report.adjacency.n(),
            report.adjacency.m(),
            target.n(),
            target.m()
        ))
    })?;
    let stats = surface_stats(&surface);
    Ok(ConstructionResult { surface, realization, stats })
}
