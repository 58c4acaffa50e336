//! File formats: the exact surface file (JSON) and lossy mesh export.

mod mesh;
mod surface_file;

pub use mesh::{export_obj, export_off, MeshStats};
pub use surface_file::{parse_surface, write_surface, SurfaceFileError, SURFACE_FILE_VERSION};
