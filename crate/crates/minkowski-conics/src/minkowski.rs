//! Exact primitives of the two-dimensional Minkowski plane.
//!
//! The plane carries the indefinite metric `g(u, v) = u.x * v.x - u.y * v.y`,
//! so squared distances may be negative (timelike) or zero (null) as well as
//! positive (spacelike). Everything here is computed in exact rationals;
//! floats appear only in the convenience `*_f64` helpers.

use std::ops::{Add, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::ConicError;
use crate::rational::{rat_int, rat_to_f64, Rat};

/// Sign of an exact rational quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    /// Stable identifier used in reports.
    pub fn id(&self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        }
    }
}

/// A point of the Minkowski plane with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Point {
        Point { x, y }
    }

    /// Integer-coordinate point, mostly for tests and examples.
    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::new(rat_int(x), rat_int(y))
    }

    pub fn origin() -> Point {
        Point::new(Rat::zero(), Rat::zero())
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [rat_to_f64(&self.x), rat_to_f64(&self.y)]
    }

    pub fn translate(&self, v: &Point) -> Point {
        self + v
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

/// A parametric line `t -> (a t + b, c t + d)` with exact rational
/// parameters and a genuine direction `(a, c) != (0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamLine {
    a: Rat,
    b: Rat,
    c: Rat,
    d: Rat,
}

impl ParamLine {
    /// Rejects the degenerate "line" with zero direction.
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<ParamLine, ConicError> {
        if a.is_zero() && c.is_zero() {
            return Err(ConicError::DegenerateDirectrix);
        }
        Ok(ParamLine { a, b, c, d })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<ParamLine, ConicError> {
        ParamLine::new(rat_int(a), rat_int(b), rat_int(c), rat_int(d))
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }
    pub fn b(&self) -> &Rat {
        &self.b
    }
    pub fn c(&self) -> &Rat {
        &self.c
    }
    pub fn d(&self) -> &Rat {
        &self.d
    }

    /// Point at parameter `t`.
    pub fn at(&self, t: &Rat) -> Point {
        Point::new(&self.a * t + &self.b, &self.c * t + &self.d)
    }

    /// `a^2 - c^2`, the denominator of the foot parameter. Zero exactly
    /// when the direction is lightlike.
    pub fn direction_interval(&self) -> Rat {
        &self.a * &self.a - &self.c * &self.c
    }

    /// True when the direction is lightlike (`a^2 = c^2`), in which case
    /// the squared distance to the line has no critical point.
    pub fn has_null_direction(&self) -> bool {
        self.direction_interval().is_zero()
    }

    pub fn translate(&self, v: &Point) -> ParamLine {
        ParamLine {
            a: self.a.clone(),
            b: &self.b + &v.x,
            c: self.c.clone(),
            d: &self.d + &v.y,
        }
    }

    pub fn params_f64(&self) -> [f64; 4] {
        [
            rat_to_f64(&self.a),
            rat_to_f64(&self.b),
            rat_to_f64(&self.c),
            rat_to_f64(&self.d),
        ]
    }
}

/// A squared Minkowski distance together with its causal character.
///
/// Positive values are spacelike separations, negative ones timelike, zero
/// null; the sign is always derived from the stored value, so it cannot go
/// stale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval2 {
    value: Rat,
}

impl Interval2 {
    pub fn new(value: Rat) -> Interval2 {
        Interval2 { value }
    }

    pub fn value(&self) -> &Rat {
        &self.value
    }

    pub fn into_value(self) -> Rat {
        self.value
    }

    pub fn sign(&self) -> Sign {
        Sign::of(&self.value)
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.value)
    }
}

/// The Minkowski inner product `u.x v.x - u.y v.y` of two points read as
/// vectors.
pub fn metric(u: &Point, v: &Point) -> Rat {
    &u.x * &v.x - &u.y * &v.y
}

/// Squared Minkowski distance `(x1 - p1)^2 - (x2 - p2)^2`.
pub fn dist2(x: &Point, p: &Point) -> Interval2 {
    let dx = &x.x - &p.x;
    let dy = &x.y - &p.y;
    Interval2::new(&dx * &dx - &dy * &dy)
}

/// Squared Minkowski distance on float pairs (sampler/report boundary).
pub fn dist2_f64(x: [f64; 2], p: [f64; 2]) -> f64 {
    let dx = x[0] - p[0];
    let dy = x[1] - p[1];
    dx * dx - dy * dy
}

/// Parameter of the critical point of `t -> dist2(x, line(t))`.
///
/// For a spacelike direction this is the closest point of the line, for a
/// timelike direction the farthest; the definition keeps the critical point
/// either way. Fails with [`ConicError::NullDirectrix`] when `a^2 = c^2`.
pub fn foot_param(x: &Point, line: &ParamLine) -> Result<Rat, ConicError> {
    let denom = line.direction_interval();
    if denom.is_zero() {
        return Err(ConicError::NullDirectrix);
    }
    let numer = line.a() * &x.x - line.c() * &x.y - line.a() * line.b() + line.c() * line.d();
    Ok(numer / denom)
}

/// The critical ("foot") point of the line for `x`.
pub fn foot_point(x: &Point, line: &ParamLine) -> Result<Point, ConicError> {
    let t0 = foot_param(x, line)?;
    Ok(line.at(&t0))
}

/// Signed squared point-line distance, `dist2(x, foot_point(x, line))`.
///
/// Algebraically this equals `-w^2 / (a^2 - c^2)` with
/// `w = c x - a y + a d - b c`; the two routes are kept equal by tests.
pub fn dist2_point_line(x: &Point, line: &ParamLine) -> Result<Interval2, ConicError> {
    let foot = foot_point(x, line)?;
    Ok(dist2(x, &foot))
}

/// The residual `w = c x - a y + a d - b c` of `x` against the line; zero
/// exactly when `x` lies on the line.
pub fn line_residual(x: &Point, line: &ParamLine) -> Rat {
    line.c() * &x.x - line.a() * &x.y + line.a() * line.d() - line.b() * line.c()
}

/// Hyperbolic rotation by float rapidity; returns float coordinates.
///
/// `(x, y) -> (x cosh phi + y sinh phi, x sinh phi + y cosh phi)`.
pub fn boost_approx(p: &Point, rapidity: f64) -> [f64; 2] {
    let [x, y] = p.to_f64();
    let ch = rapidity.cosh();
    let sh = rapidity.sinh();
    [x * ch + y * sh, x * sh + y * ch]
}

/// An exact hyperbolic rotation given by a rational pair `(lambda, mu)`
/// with `lambda^2 - mu^2 = 1`, playing the role of `(cosh, sinh)`.
///
/// Applying it preserves every squared distance exactly, which removes all
/// tolerance tuning from invariance tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalBoost {
    lambda: Rat,
    mu: Rat,
}

impl RationalBoost {
    pub fn new(lambda: Rat, mu: Rat) -> Result<RationalBoost, ConicError> {
        if &lambda * &lambda - &mu * &mu != Rat::one() {
            return Err(ConicError::InvalidBoost);
        }
        Ok(RationalBoost { lambda, mu })
    }

    pub fn identity() -> RationalBoost {
        RationalBoost {
            lambda: Rat::one(),
            mu: Rat::zero(),
        }
    }

    /// Boost from the rational parameter `m` (`m^2 != 1`):
    /// `lambda = (m^2 + 1)/(m^2 - 1)`, `mu = 2m/(m^2 - 1)`, normalized to
    /// `lambda > 0`. Returns `None` for `m = +-1`.
    pub fn from_parameter(m: &Rat) -> Option<RationalBoost> {
        let m2 = m * m;
        let denom = &m2 - Rat::one();
        if denom.is_zero() {
            return None;
        }
        let mut lambda = (&m2 + Rat::one()) / &denom;
        let mut mu = (m + m) / denom;
        if lambda.is_negative() {
            lambda = -lambda;
            mu = -mu;
        }
        Some(RationalBoost { lambda, mu })
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }
    pub fn mu(&self) -> &Rat {
        &self.mu
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.lambda * &p.x + &self.mu * &p.y,
            &self.mu * &p.x + &self.lambda * &p.y,
        )
    }

    /// Boosting a line gives another line; the direction interval
    /// `a^2 - c^2` is preserved exactly, so lightlike directrices stay
    /// lightlike.
    pub fn apply_line(&self, line: &ParamLine) -> ParamLine {
        ParamLine {
            a: &self.lambda * line.a() + &self.mu * line.c(),
            b: &self.lambda * line.b() + &self.mu * line.d(),
            c: &self.mu * line.a() + &self.lambda * line.c(),
            d: &self.mu * line.b() + &self.lambda * line.d(),
        }
    }
}
