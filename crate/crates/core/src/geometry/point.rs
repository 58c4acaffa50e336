use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::scalar::{int, ExactScalar};

/// A point (or vector) in 3-space with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3 {
    pub x: ExactScalar,
    pub y: ExactScalar,
    pub z: ExactScalar,
}

impl Point3 {
    pub fn new(x: ExactScalar, y: ExactScalar, z: ExactScalar) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Point3::new(int(x), int(y), int(z))
    }

    pub fn origin() -> Self {
        Point3::from_ints(0, 0, 0)
    }

    pub fn coord(&self, axis: usize) -> &ExactScalar {
        match axis {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("axis out of range: {axis}"),
        }
    }

    pub fn dot(&self, other: &Point3) -> ExactScalar {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, other: &Point3) -> Point3 {
        Point3::new(
            &self.y * &other.z - &self.z * &other.y,
            &self.z * &other.x - &self.x * &other.z,
            &self.x * &other.y - &self.y * &other.x,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, s: &ExactScalar) -> Point3 {
        Point3::new(&self.x * s, &self.y * s, &self.z * s)
    }

    /// Maximum absolute coordinate. Used as an exactly computable length.
    pub fn max_norm(&self) -> ExactScalar {
        let ax = self.x.abs();
        let ay = self.y.abs();
        let az = self.z.abs();
        ax.max(ay).max(az)
    }

    pub fn squared_norm(&self) -> ExactScalar {
        self.dot(self)
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point3, t: &ExactScalar) -> Point3 {
        self + &(other - self).scale(t)
    }

    pub fn midpoint(&self, other: &Point3) -> Point3 {
        self.lerp(other, &super::scalar::frac(1, 2))
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl<'a> Add<&'a Point3> for &'a Point3 {
    type Output = Point3;
    fn add(self, o: &Point3) -> Point3 {
        Point3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl<'a> Sub<&'a Point3> for &'a Point3 {
    type Output = Point3;
    fn sub(self, o: &Point3) -> Point3 {
        Point3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a Point3 {
    type Output = Point3;
    fn mul(self, s: &ExactScalar) -> Point3 {
        self.scale(s)
    }
}

impl Neg for &Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        Point3::new(-&self.x, -&self.y, -&self.z)
    }
}

/// Axis-aligned bounding box used to skip obviously disjoint pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Aabb {
    pub min: Point3,
    pub max: Point3,
}

impl Aabb {
    pub fn of_points<'a>(points: impl IntoIterator<Item = &'a Point3>) -> Option<Aabb> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let mut min = first.clone();
        let mut max = first.clone();
        for p in it {
            for (lo, hi, v) in [
                (&mut min.x, &mut max.x, &p.x),
                (&mut min.y, &mut max.y, &p.y),
                (&mut min.z, &mut max.z, &p.z),
            ] {
                if v < lo {
                    *lo = v.clone();
                }
                if v > hi {
                    *hi = v.clone();
                }
            }
        }
        Some(Aabb { min, max })
    }

    /// Max-norm distance from `p` to the box; zero inside.
    pub fn max_norm_distance(&self, p: &Point3) -> ExactScalar {
        let mut best = ExactScalar::zero();
        for a in 0..3 {
            let (lo, hi, v) = (self.min.coord(a), self.max.coord(a), p.coord(a));
            let gap = if v < lo {
                lo - v
            } else if v > hi {
                v - hi
            } else {
                continue;
            };
            if gap > best {
                best = gap;
            }
        }
        best
    }

    /// Closed boxes intersect.
    pub fn intersects(&self, other: &Aabb) -> bool {
        (0..3).all(|a| self.min.coord(a) <= other.max.coord(a) && other.min.coord(a) <= self.max.coord(a))
    }
}
