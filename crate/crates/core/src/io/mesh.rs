//! Lossy mesh export (OFF and OBJ) with exact vertex deduplication.

use std::collections::HashMap;

use crate::geometry::scalar::to_decimal;
use crate::geometry::Point3;
use crate::surface::Surface;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeshStats {
    pub vertices: usize,
    pub faces: usize,
}

/// Distinct corners in first-appearance order, and each face as indices.
fn indexed(s: &Surface) -> (Vec<&Point3>, Vec<Vec<usize>>) {
    let mut index: HashMap<&Point3, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let faces = s
        .polygons()
        .iter()
        .map(|p| {
            p.corners()
                .iter()
                .map(|c| {
                    *index.entry(c).or_insert_with(|| {
                        vertices.push(c);
                        vertices.len() - 1
                    })
                })
                .collect()
        })
        .collect();
    (vertices, faces)
}

fn coords(p: &Point3, digits: usize) -> String {
    format!("{} {} {}", to_decimal(&p.x, digits), to_decimal(&p.y, digits), to_decimal(&p.z, digits))
}

/// OFF text with coordinates rounded to `digits` decimals.
pub fn export_off(s: &Surface, digits: usize) -> (String, MeshStats) {
    let (vertices, faces) = indexed(s);
    let mut out = format!("OFF\n{} {} 0\n", vertices.len(), faces.len());
    for v in &vertices {
        out.push_str(&coords(v, digits));
        out.push('\n');
    }
    for f in &faces {
        let idx: Vec<String> = f.iter().map(|i| i.to_string()).collect();
        out.push_str(&format!("{} {}\n", f.len(), idx.join(" ")));
    }
    (out, MeshStats { vertices: vertices.len(), faces: faces.len() })
}

/// OBJ text with coordinates rounded to `digits` decimals.
pub fn export_obj(s: &Surface, digits: usize) -> (String, MeshStats) {
    let (vertices, faces) = indexed(s);
    let mut out = String::new();
    for v in &vertices {
        out.push_str(&format!("v {}\n", coords(v, digits)));
    }
    for f in &faces {
        let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
        out.push_str(&format!("f {}\n", idx.join(" ")));
    }
    (out, MeshStats { vertices: vertices.len(), faces: faces.len() })
}
