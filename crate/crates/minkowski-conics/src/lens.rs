//! Classification of an implicit quadric "with Euclidean eyes".
//!
//! The discriminant convention is `B^2 - 4AC`: with the quadric at the
//! double-squaring scale it reproduces the two-focus discriminant formula
//! `64 k^2 ((p2-q2)^2 - (p1-q1)^2 + k^2)` exactly. Degenerate kinds are
//! separated with the standard rank tests on the 3x3 coefficient matrix,
//! all in exact rationals, so classification is deterministic and invariant
//! under nonzero rescaling of the quadric.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::ConicError;
use crate::minkowski::Sign;
use crate::quadric::ImplicitQuadric;
use crate::rational::Rat;

/// Euclidean kind of the real locus of a quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicKind {
    RealEllipse,
    ImaginaryEllipse,
    Parabola,
    Hyperbola,
    IntersectingLines,
    ParallelLines,
    CoincidentLines,
    Point,
    EmptyParallel,
}

impl ConicKind {
    /// Stable identifier used in reports and CLI output.
    pub fn id(&self) -> &'static str {
        match self {
            ConicKind::RealEllipse => "real-ellipse",
            ConicKind::ImaginaryEllipse => "imaginary-ellipse",
            ConicKind::Parabola => "parabola",
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::IntersectingLines => "intersecting-lines",
            ConicKind::ParallelLines => "parallel-lines",
            ConicKind::CoincidentLines => "coincident-lines",
            ConicKind::Point => "point",
            ConicKind::EmptyParallel => "empty-parallel",
        }
    }
}

/// Full exact classification of a nonzero quadric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclideanClass {
    pub kind: ConicKind,
    /// `B^2 - 4AC`.
    pub delta: Rat,
    /// Determinant of `[[A, B/2, D/2], [B/2, C, E/2], [D/2, E/2, F]]`.
    pub det3: Rat,
}

/// Geometric completeness verdict, operationalized as the connected
/// component count of the real locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    Complete,
    Incomplete,
    Empty,
}

impl Completeness {
    pub fn id(&self) -> &'static str {
        match self {
            Completeness::Complete => "complete",
            Completeness::Incomplete => "incomplete",
            Completeness::Empty => "empty",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletenessVerdict {
    pub value: Completeness,
    /// Connected components of the real locus; the rationale for `value`.
    pub components: usize,
}

/// `B^2 - 4AC`, exact.
pub fn discriminant(q: &ImplicitQuadric) -> Rat {
    let four = Rat::from_integer(BigInt::from(4));
    &q.b * &q.b - four * &q.a * &q.c
}

/// Determinant of the symmetric 3x3 coefficient matrix, exact.
pub fn det3(q: &ImplicitQuadric) -> Rat {
    let half = Rat::new(BigInt::from(1), BigInt::from(2));
    let b2 = &q.b * &half;
    let d2 = &q.d * &half;
    let e2 = &q.e * &half;
    let m00 = &q.a;
    let m11 = &q.c;
    let m22 = &q.f;
    m00 * (m11 * m22 - &e2 * &e2) - &b2 * (&b2 * m22 - &e2 * &d2) + &d2 * (&b2 * &e2 - m11 * &d2)
}

/// Exact Euclidean classification. Errs on the all-zero quadric, which
/// describes the whole plane rather than a conic.
pub fn classify(q: &ImplicitQuadric) -> Result<EuclideanClass, ConicError> {
    if q.is_zero() {
        return Err(ConicError::DegeneratePlane);
    }
    let delta = discriminant(q);
    let det = det3(q);

    let degree_two = !(q.a.is_zero() && q.b.is_zero() && q.c.is_zero());
    let kind = if !degree_two {
        if q.d.is_zero() && q.e.is_zero() {
            // A nonzero constant: no real solutions.
            ConicKind::EmptyParallel
        } else {
            // Degree-one input: the locus is a single line, which shares
            // the coincident-lines bucket.
            ConicKind::CoincidentLines
        }
    } else {
        match Sign::of(&delta) {
            Sign::Negative => {
                if det.is_zero() {
                    ConicKind::Point
                } else {
                    // Elliptic with full rank: real iff (A + C) and det3
                    // have opposite signs (scalar-invariant: both flip
                    // together under negation of the quadric).
                    let trace = &q.a + &q.c;
                    if (trace * &det).is_negative() {
                        ConicKind::RealEllipse
                    } else {
                        ConicKind::ImaginaryEllipse
                    }
                }
            }
            Sign::Positive => {
                if det.is_zero() {
                    ConicKind::IntersectingLines
                } else {
                    ConicKind::Hyperbola
                }
            }
            Sign::Zero => {
                if !det.is_zero() {
                    ConicKind::Parabola
                } else {
                    parallel_family_kind(q)
                }
            }
        }
    };

    Ok(EuclideanClass {
        kind,
        delta,
        det3: det,
    })
}

/// Sub-classification for `delta = 0`, `det3 = 0`, degree two: the quadric
/// reduces to a univariate quadratic `A u^2 + D u + F` along the repeated
/// axis direction; its discriminant separates parallel, coincident, and
/// empty.
fn parallel_family_kind(q: &ImplicitQuadric) -> ConicKind {
    let four = Rat::from_integer(BigInt::from(4));
    let disc = if !q.a.is_zero() {
        // u = x + (B / 2A) y; det3 = 0 forces E = BD / 2A.
        &q.d * &q.d - &four * &q.a * &q.f
    } else {
        // A = 0 with B^2 = 4AC forces B = 0, C != 0; det3 = 0 forces D = 0.
        &q.e * &q.e - &four * &q.c * &q.f
    };
    match Sign::of(&disc) {
        Sign::Positive => ConicKind::ParallelLines,
        Sign::Zero => ConicKind::CoincidentLines,
        Sign::Negative => ConicKind::EmptyParallel,
    }
}

/// The completeness verdict attached to each Euclidean kind: one-component
/// loci are complete, two-component loci incomplete, empty loci empty.
pub fn completeness(kind: ConicKind) -> CompletenessVerdict {
    let (value, components) = match kind {
        ConicKind::RealEllipse
        | ConicKind::Parabola
        | ConicKind::IntersectingLines
        | ConicKind::CoincidentLines
        | ConicKind::Point => (Completeness::Complete, 1),
        ConicKind::Hyperbola | ConicKind::ParallelLines => (Completeness::Incomplete, 2),
        ConicKind::ImaginaryEllipse | ConicKind::EmptyParallel => (Completeness::Empty, 0),
    };
    CompletenessVerdict { value, components }
}

/// Extracts the exact affine factor of a quadric whose locus is a single
/// line: either a perfect square `lambda * (u x + v y + w)^2` (coincident
/// lines) or a degree-one polynomial. Returns the line coefficients
/// `(u, v, w)`; `None` when the quadric is not of that shape.
pub fn coincident_line_factor(q: &ImplicitQuadric) -> Option<(Rat, Rat, Rat)> {
    use crate::quadric::AffineForm;
    if q.is_zero() {
        return None;
    }
    if q.a.is_zero() && q.b.is_zero() && q.c.is_zero() {
        if q.d.is_zero() && q.e.is_zero() {
            return None;
        }
        return Some((q.d.clone(), q.e.clone(), q.f.clone()));
    }
    let two = Rat::from_integer(BigInt::from(2));
    let candidate = if !q.a.is_zero() {
        AffineForm::new(
            Rat::from_integer(BigInt::from(1)),
            &q.b / (&two * &q.a),
            &q.d / (&two * &q.a),
        )
    } else if !q.c.is_zero() {
        AffineForm::new(
            Rat::zero(),
            Rat::from_integer(BigInt::from(1)),
            &q.e / (&two * &q.c),
        )
    } else {
        return None;
    };
    let lambda = if !q.a.is_zero() {
        q.a.clone()
    } else {
        q.c.clone()
    };
    let reconstructed = candidate.square().scale(&lambda);
    if &reconstructed == q {
        Some((candidate.cx, candidate.cy, candidate.c0))
    } else {
        None
    }
}
