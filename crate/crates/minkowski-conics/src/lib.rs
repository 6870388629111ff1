//! Conics on the two-dimensional Minkowski plane.
//!
//! The plane `R^2` with the indefinite metric `g(u, v) = u1 v1 - u2 v2`
//! supports the classical distance definitions of the conics — sum,
//! difference, and point-line equality of (squared) distances — but the
//! implicit equations they produce look nothing like their Euclidean
//! counterparts: a Minkowski circle is a Euclidean hyperbola, a Minkowski
//! ellipse can be any Euclidean kind, and geometric completeness is not
//! preserved when the equation is read "with Euclidean eyes".
//!
//! The crate keeps every construction in exact rational arithmetic:
//!
//! * [`minkowski`] — metric, squared distances, point-line feet, boosts;
//! * [`quadric`] — the degree-2 polynomial kernel and canonical forms;
//! * [`conic`] — implicit quadrics derived from the distance definitions,
//!   plus the sign-consistency membership classifier;
//! * [`lens`] — exact Euclidean classification and completeness verdicts;
//! * [`audit`] — verbatim transcriptions of the published closed-form
//!   equations diffed against the derived ones, with oracle-verified
//!   member-point probes;
//! * [`sampler`] — marching-squares extraction of the real locus with
//!   CSV/SVG output.
//!
//! Floats appear only at the sampling and reporting boundary.

pub mod audit;
pub mod conic;
pub mod error;
pub mod lens;
pub mod minkowski;
pub mod quadric;
pub mod rational;
pub mod sampler;

pub use conic::{
    circle_implicit, classify_membership, default_membership_epsilon, ellipse_implicit,
    ellipse_implicit_raw, focal_difference_form, hyperbola_implicit, hyperbola_implicit_raw,
    parabola_implicit, parabola_implicit_raw, Branch, ConicSpec, MembershipVerdict,
};
pub use error::ConicError;
pub use lens::{
    classify, completeness, discriminant, Completeness, CompletenessVerdict, ConicKind,
    EuclideanClass,
};
pub use minkowski::{
    boost_approx, dist2, dist2_f64, dist2_point_line, foot_param, foot_point, metric, Interval2,
    ParamLine, Point, RationalBoost, Sign,
};
pub use quadric::{AffineForm, ImplicitQuadric};
pub use rational::{format_rational, parse_rational, rat, rat_int, rat_to_f64, Rat};
