use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::point::Point3;
use super::scalar::{sign, ExactScalar};

/// Which closed side of a plane to keep or test against, relative to the
/// canonical coefficients `a x + b y + c z + d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `a x + b y + c z + d <= 0`
    NonPositive,
    /// `a x + b y + c z + d >= 0`
    NonNegative,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::NonPositive => Side::NonNegative,
            Side::NonNegative => Side::NonPositive,
        }
    }

    /// Whether a value with the given sign lies in this closed side.
    pub fn admits(self, s: i8) -> bool {
        match self {
            Side::NonPositive => s <= 0,
            Side::NonNegative => s >= 0,
        }
    }
}

/// The plane `a x + b y + c z + d = 0` in canonical form: coprime integer
/// coefficients whose first nonzero entry is positive. Two planes are equal
/// as sets iff they are equal as values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Plane {
    pub a: ExactScalar,
    pub b: ExactScalar,
    pub c: ExactScalar,
    pub d: ExactScalar,
}

impl Plane {
    /// Canonical plane with the given coefficients. Returns `None` when the
    /// normal `(a, b, c)` vanishes. The boolean is true when canonicalization
    /// negated the coefficients, so callers can translate half-space sides.
    pub fn canonical(
        a: &ExactScalar,
        b: &ExactScalar,
        c: &ExactScalar,
        d: &ExactScalar,
    ) -> Option<(Plane, bool)> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return None;
        }
        let coeffs = [a, b, c, d];
        let mut lcm = BigInt::one();
        for v in coeffs {
            lcm = lcm.lcm(v.denom());
        }
        let ints: Vec<BigInt> = coeffs.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        let first_negative = ints.iter().find(|v| !v.is_zero()).map_or(false, |v| v.is_negative());
        let scaled: Vec<ExactScalar> = ints
            .into_iter()
            .map(|v| {
                let q = v / &g;
                ExactScalar::from_integer(if first_negative { -q } else { q })
            })
            .collect();
        let [a, b, c, d]: [ExactScalar; 4] = scaled.try_into().expect("four coefficients");
        Some((Plane { a, b, c, d }, first_negative))
    }

    /// Plane through three points, or `None` if they are collinear.
    pub fn through(p: &Point3, q: &Point3, r: &Point3) -> Option<Plane> {
        let n = (q - p).cross(&(r - p));
        if n.is_zero() {
            return None;
        }
        let d = -n.dot(p);
        Plane::canonical(&n.x, &n.y, &n.z, &d).map(|(pl, _)| pl)
    }

    /// Plane with the given normal through the given point.
    pub fn with_normal(normal: &Point3, point: &Point3) -> Option<Plane> {
        let d = -normal.dot(point);
        Plane::canonical(&normal.x, &normal.y, &normal.z, &d).map(|(pl, _)| pl)
    }

    pub fn normal(&self) -> Point3 {
        Point3::new(self.a.clone(), self.b.clone(), self.c.clone())
    }

    /// `a x + b y + c z + d` at `p`.
    pub fn eval(&self, p: &Point3) -> ExactScalar {
        &self.a * &p.x + &self.b * &p.y + &self.c * &p.z + &self.d
    }

    pub fn side_of(&self, p: &Point3) -> i8 {
        sign(&self.eval(p))
    }

    pub fn contains(&self, p: &Point3) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel_to(&self, other: &Plane) -> bool {
        self.normal().cross(&other.normal()).is_zero()
    }

    /// Index of the normal component with the largest magnitude. Dropping this
    /// coordinate projects the plane bijectively onto a coordinate plane.
    pub fn dominant_axis(&self) -> usize {
        let (aa, ab, ac) = (self.a.abs(), self.b.abs(), self.c.abs());
        if aa >= ab && aa >= ac {
            0
        } else if ab >= ac {
            1
        } else {
            2
        }
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {}z + {} = 0", self.a, self.b, self.c, self.d)
    }
}

/// A closed half-space `{p : a x + b y + c z + d >= 0}` given by raw
/// coefficients, stored as a canonical plane plus the side to keep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub plane: Plane,
    pub keep: Side,
}

impl HalfSpace {
    /// `{p : a x + b y + c z + d >= 0}`. Panics if `(a, b, c) = 0`.
    pub fn nonnegative(a: &ExactScalar, b: &ExactScalar, c: &ExactScalar, d: &ExactScalar) -> HalfSpace {
        let (plane, flipped) = Plane::canonical(a, b, c, d).expect("half-space needs a nonzero normal");
        let keep = if flipped { Side::NonPositive } else { Side::NonNegative };
        HalfSpace { plane, keep }
    }

    /// `{p : a x + b y + c z + d <= 0}`.
    pub fn nonpositive(a: &ExactScalar, b: &ExactScalar, c: &ExactScalar, d: &ExactScalar) -> HalfSpace {
        let mut h = HalfSpace::nonnegative(a, b, c, d);
        h.keep = h.keep.opposite();
        h
    }

    pub fn contains(&self, p: &Point3) -> bool {
        self.keep.admits(self.plane.side_of(p))
    }
}
