use num_traits::{One, Zero};

use super::point::Point3;
use super::polygon::{GeometryError, Polygon};
use super::scalar::ExactScalar;

/// A 4x4 matrix acting on homogeneous coordinates `(x, y, z, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projective(pub [[ExactScalar; 4]; 4]);

impl Projective {
    pub fn identity() -> Projective {
        let mut m: [[ExactScalar; 4]; 4] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = if i == j { ExactScalar::one() } else { ExactScalar::zero() };
            }
        }
        Projective(m)
    }

    pub fn scale(s: &ExactScalar) -> Projective {
        let mut t = Projective::identity();
        for i in 0..3 {
            t.0[i][i] = s.clone();
        }
        t
    }

    /// Maps a point, failing when its image is at infinity.
    pub fn apply(&self, p: &Point3) -> Result<Point3, GeometryError> {
        let h = [&p.x, &p.y, &p.z];
        let mut out: [ExactScalar; 4] = Default::default();
        for (i, o) in out.iter_mut().enumerate() {
            let row = &self.0[i];
            *o = &row[0] * h[0] + &row[1] * h[1] + &row[2] * h[2] + &row[3];
        }
        if out[3].is_zero() {
            return Err(GeometryError::MapsToInfinity { point: p.clone() });
        }
        let w = &out[3];
        Ok(Point3::new(&out[0] / w, &out[1] / w, &out[2] / w))
    }

    /// Determinant, for invertibility checks.
    pub fn determinant(&self) -> ExactScalar {
        let m = &self.0;
        let mut det = ExactScalar::zero();
        for c in 0..4 {
            let minor: Vec<Vec<&ExactScalar>> =
                (1..4).map(|r| (0..4).filter(|&k| k != c).map(|k| &m[r][k]).collect()).collect();
            let d3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1])
                - minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0])
                + minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
            let term = &m[0][c] * d3;
            if c % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }
}

/// Applies `t` to every corner of `poly`, keeping its id.
pub fn apply_projective(t: &Projective, poly: &Polygon) -> Result<Polygon, GeometryError> {
    let corners = poly.corners().iter().map(|c| t.apply(c)).collect::<Result<Vec<_>, _>>()?;
    Polygon::new(poly.id(), corners)
}

/// Rational point on the unit circle, `((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`.
pub fn circle_direction(t: &ExactScalar) -> (ExactScalar, ExactScalar) {
    let one = ExactScalar::one();
    let t2 = t * t;
    let den = &one + &t2;
    ((&one - &t2) / &den, (t + t) / &den)
}
