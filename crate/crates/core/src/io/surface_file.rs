//! Surface file: JSON with a version tag, a mode and polygons given as
//! lists of corner triples. Coordinates are exact strings such as `"-23/5"`
//! (plain JSON integers are accepted on input).
//!
//! ```text
//! {"version": 1, "mode": "convex", "ids": [0, 1],
//!  "polygons": [[["0","0","0"], ["1","0","0"], ["0","1","0"]], ...]}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{parse_scalar, ExactScalar, Point3, Polygon, PolygonId};
use crate::surface::{Mode, Surface};

pub const SURFACE_FILE_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct SurfaceFileError {
    pub line: usize,
    pub message: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceFile {
    version: u32,
    mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ids: Option<Vec<u32>>,
    polygons: Vec<Vec<[Coordinate; 3]>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coordinate {
    Text(String),
    Integer(i64),
}

impl Coordinate {
    fn value(&self) -> Option<ExactScalar> {
        match self {
            Coordinate::Text(s) => parse_scalar(s),
            Coordinate::Integer(i) => Some(ExactScalar::from_integer((*i).into())),
        }
    }
}

pub fn write_surface(s: &Surface) -> String {
    let file = SurfaceFile {
        version: SURFACE_FILE_VERSION,
        mode: s.mode(),
        ids: Some(s.polygons().iter().map(|p| p.id().0).collect()),
        polygons: s
            .polygons()
            .iter()
            .map(|p| {
                p.corners()
                    .iter()
                    .map(|c| [&c.x, &c.y, &c.z].map(|v| Coordinate::Text(v.to_string())))
                    .collect()
            })
            .collect(),
    };
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"version\": {},\n", file.version));
    out.push_str(&format!("  \"mode\": \"{}\",\n", file.mode));
    out.push_str(&format!("  \"ids\": {},\n", serde_json::to_string(&file.ids).expect("serializable")));
    out.push_str("  \"polygons\": [\n");
    for (k, poly) in file.polygons.iter().enumerate() {
        let line = serde_json::to_string(poly).expect("serializable");
        let sep = if k + 1 < file.polygons.len() { "," } else { "" };
        out.push_str(&format!("    {line}{sep}\n"));
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn parse_surface(text: &str) -> Result<Surface, SurfaceFileError> {
    let file: SurfaceFile =
        serde_json::from_str(text).map_err(|e| SurfaceFileError { line: e.line().max(1), message: e.to_string() })?;
    let starts = polygon_start_lines(text);
    let line_of = |k: usize| starts.get(k).copied().unwrap_or(1);
    if file.version != SURFACE_FILE_VERSION {
        return Err(SurfaceFileError { line: 1, message: format!("unsupported version {}", file.version) });
    }
    if let Some(ids) = &file.ids {
        if ids.len() != file.polygons.len() {
            return Err(SurfaceFileError {
                line: 1,
                message: format!("{} ids for {} polygons", ids.len(), file.polygons.len()),
            });
        }
    }
    let mut polygons = Vec::with_capacity(file.polygons.len());
    for (k, raw) in file.polygons.iter().enumerate() {
        let err = |message: String| SurfaceFileError { line: line_of(k), message: format!("polygon {k}: {message}") };
        let mut corners = Vec::with_capacity(raw.len());
        for triple in raw {
            let mut xyz = Vec::with_capacity(3);
            for c in triple {
                let v = c.value().ok_or_else(|| {
                    let shown = match c {
                        Coordinate::Text(s) => s.clone(),
                        Coordinate::Integer(i) => i.to_string(),
                    };
                    err(format!("`{shown}` is not an exact rational"))
                })?;
                xyz.push(v);
            }
            let z = xyz.pop().expect("three");
            let y = xyz.pop().expect("three");
            let x = xyz.pop().expect("three");
            corners.push(Point3::new(x, y, z));
        }
        let id = file.ids.as_ref().map_or(k as u32, |ids| ids[k]);
        polygons.push(Polygon::new(PolygonId(id), corners).map_err(|e| err(e.to_string()))?);
    }
    Surface::new(polygons, file.mode).map_err(|e| SurfaceFileError { line: 1, message: e.to_string() })
}

/// Line numbers on which each element of the top-level `polygons` array
/// begins.
fn polygon_start_lines(text: &str) -> Vec<usize> {
    let mut lines = Vec::new();
    let mut depth = 0usize;
    let mut line = 1;
    let mut in_string = false;
    let mut escaped = false;
    let mut current = String::new();
    let mut last_key = String::new();
    for ch in text.chars() {
        if ch == '\n' {
            line += 1;
        }
        if in_string {
            if escaped {
                escaped = false;
            } else if ch == '\\' {
                escaped = true;
            } else if ch == '"' {
                in_string = false;
                if depth == 1 {
                    last_key = std::mem::take(&mut current);
                }
            } else if depth == 1 {
                current.push(ch);
            }
            continue;
        }
        match ch {
            '"' => {
                in_string = true;
                current.clear();
            }
            '{' | '[' => {
                if ch == '[' && depth == 2 && last_key == "polygons" {
                    lines.push(line);
                }
                depth += 1;
            }
            '}' | ']' => depth = depth.saturating_sub(1),
            _ => {}
        }
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::frac;

    fn sample() -> Surface {
        let tri = vec![
            Point3::new(frac(-23, 5), frac(7, 5), frac(106, 11)),
            Point3::from_ints(1, 0, 0),
            Point3::from_ints(0, 1, 0),
        ];
        let p = Polygon::new(PolygonId(7), tri).unwrap();
        Surface::new(vec![p], Mode::Convex).unwrap()
    }

    #[test]
    fn round_trip_is_exact() {
        let s = sample();
        let text = write_surface(&s);
        assert!(text.contains("\"-23/5\""));
        assert_eq!(parse_surface(&text).unwrap(), s);
    }

    #[test]
    fn accepts_integers_and_default_ids() {
        let text = r#"{"version": 1, "mode": "general", "polygons": [[[0, 0, 0], ["1", 0, 0], [0, "1/1", 0]]]}"#;
        let s = parse_surface(text).unwrap();
        assert_eq!(s.polygon(0).id(), PolygonId(0));
        assert_eq!(s.mode(), Mode::General);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "{\n\"version\": 1,\n\"mode\": \"convex\",\n\"polygons\": [\n[[\"0\",\"0\",\"0\"],[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"]],\n[[\"0\",\"0\",\"0\"],[\"1\",\"0\",\"0\"],[\"2\",\"0\",\"0\"]]\n]\n}";
        let e = parse_surface(text).unwrap_err();
        assert_eq!(e.line, 6);
        assert!(e.message.contains("polygon 1"));
        let e = parse_surface("{\n\"version\": 1,\n\"mode\": \"round\"\n}").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_surface("{\"version\": 1, \"mode\": \"convex\", \"polygons\": [[[\"a\",\"0\",\"0\"]]]}").unwrap_err();
        assert!(e.message.contains("`a`"));
    }
}
