//! Conic synthesis from the Minkowski distance definitions.
//!
//! Each conic is *defined* by a distance equation (sum, difference, or
//! point-line equality of squared distances). The implicit quadrics here are
//! produced by symbolically eliminating the square roots from those
//! definitions — squaring twice for the two-focus conics, clearing one
//! denominator for the parabola — never by transcribing the printed
//! closed forms, which the audit module compares separately.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ConicError;
use crate::minkowski::{dist2, Interval2, ParamLine, Point, RationalBoost, Sign};
use crate::quadric::{AffineForm, ImplicitQuadric};
use crate::rational::{exact_sqrt, rat_to_f64, Rat};

/// A conic given by the data of its defining distance equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConicSpec {
    /// `dist2(x, center) = k^2`.
    Circle { center: Point, k2: Rat },
    /// `d(x, focus1) + d(x, focus2) = k` with `k^2` real (possibly negative).
    Ellipse {
        focus1: Point,
        focus2: Point,
        k2: Rat,
    },
    /// `d(x, focus1) - d(x, focus2) = k`; squaring twice yields the same
    /// polynomial as the ellipse.
    Hyperbola {
        focus1: Point,
        focus2: Point,
        k2: Rat,
    },
    /// `dist2(x, focus) = dist2(x, directrix)` for a non-null directrix.
    Parabola { focus: Point, directrix: ParamLine },
}

impl ConicSpec {
    pub fn circle(center: Point, k2: Rat) -> ConicSpec {
        ConicSpec::Circle { center, k2 }
    }

    /// Rejects coincident foci with `k^2 = 0`: that equation is satisfied by
    /// the whole plane and has no quadric representation.
    pub fn ellipse(focus1: Point, focus2: Point, k2: Rat) -> Result<ConicSpec, ConicError> {
        if focus1 == focus2 && k2.is_zero() {
            return Err(ConicError::DegeneratePlane);
        }
        Ok(ConicSpec::Ellipse { focus1, focus2, k2 })
    }

    pub fn hyperbola(focus1: Point, focus2: Point, k2: Rat) -> Result<ConicSpec, ConicError> {
        if focus1 == focus2 && k2.is_zero() {
            return Err(ConicError::DegeneratePlane);
        }
        Ok(ConicSpec::Hyperbola { focus1, focus2, k2 })
    }

    /// Rejects lightlike directrix directions (`a^2 = c^2`); the point-line
    /// distance is undefined there.
    pub fn parabola(focus: Point, directrix: ParamLine) -> Result<ConicSpec, ConicError> {
        if directrix.has_null_direction() {
            return Err(ConicError::NullDirectrix);
        }
        Ok(ConicSpec::Parabola { focus, directrix })
    }

    pub fn kind_id(&self) -> &'static str {
        match self {
            ConicSpec::Circle { .. } => "circle",
            ConicSpec::Ellipse { .. } => "ellipse",
            ConicSpec::Hyperbola { .. } => "hyperbola",
            ConicSpec::Parabola { .. } => "parabola",
        }
    }

    /// Implicit quadric at definition scale (see the free functions).
    pub fn implicit_raw(&self) -> Result<ImplicitQuadric, ConicError> {
        match self {
            ConicSpec::Circle { center, k2 } => Ok(circle_implicit(center, k2)),
            ConicSpec::Ellipse { focus1, focus2, k2 } => ellipse_implicit_raw(focus1, focus2, k2),
            ConicSpec::Hyperbola { focus1, focus2, k2 } => {
                hyperbola_implicit_raw(focus1, focus2, k2)
            }
            ConicSpec::Parabola { focus, directrix } => parabola_implicit_raw(focus, directrix),
        }
    }

    /// Canonicalized implicit quadric.
    pub fn implicit(&self) -> Result<ImplicitQuadric, ConicError> {
        Ok(self.implicit_raw()?.canonicalized())
    }

    pub fn translate(&self, v: &Point) -> ConicSpec {
        match self {
            ConicSpec::Circle { center, k2 } => ConicSpec::Circle {
                center: center.translate(v),
                k2: k2.clone(),
            },
            ConicSpec::Ellipse { focus1, focus2, k2 } => ConicSpec::Ellipse {
                focus1: focus1.translate(v),
                focus2: focus2.translate(v),
                k2: k2.clone(),
            },
            ConicSpec::Hyperbola { focus1, focus2, k2 } => ConicSpec::Hyperbola {
                focus1: focus1.translate(v),
                focus2: focus2.translate(v),
                k2: k2.clone(),
            },
            ConicSpec::Parabola { focus, directrix } => ConicSpec::Parabola {
                focus: focus.translate(v),
                directrix: directrix.translate(v),
            },
        }
    }

    pub fn boost(&self, b: &RationalBoost) -> ConicSpec {
        match self {
            ConicSpec::Circle { center, k2 } => ConicSpec::Circle {
                center: b.apply(center),
                k2: k2.clone(),
            },
            ConicSpec::Ellipse { focus1, focus2, k2 } => ConicSpec::Ellipse {
                focus1: b.apply(focus1),
                focus2: b.apply(focus2),
                k2: k2.clone(),
            },
            ConicSpec::Hyperbola { focus1, focus2, k2 } => ConicSpec::Hyperbola {
                focus1: b.apply(focus1),
                focus2: b.apply(focus2),
                k2: k2.clone(),
            },
            ConicSpec::Parabola { focus, directrix } => ConicSpec::Parabola {
                focus: b.apply(focus),
                directrix: b.apply_line(directrix),
            },
        }
    }
}

/// Which branch of the shared two-focus equation a point satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    OnEllipseBranch,
    OnHyperbolaBranch,
    OnBoth,
    SignInconsistent,
    NotOnConic,
}

impl Branch {
    pub fn id(&self) -> &'static str {
        match self {
            Branch::OnEllipseBranch => "on-ellipse-branch",
            Branch::OnHyperbolaBranch => "on-hyperbola-branch",
            Branch::OnBoth => "on-both",
            Branch::SignInconsistent => "sign-inconsistent",
            Branch::NotOnConic => "not-on-conic",
        }
    }
}

/// Outcome of the sign-consistency and branch-residual test for a point
/// against a two-focus spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub d1_sq: Interval2,
    pub d2_sq: Interval2,
    pub branch: Branch,
}

fn two() -> Rat {
    Rat::from_integer(BigInt::from(2))
}

fn four() -> Rat {
    Rat::from_integer(BigInt::from(4))
}

/// The affine form `dist2(x, f1) - dist2(x, f2)`; the quadratic terms cancel
/// between the two squared distances, which is what makes the double
/// squaring close at degree two.
pub fn focal_difference_form(f1: &Point, f2: &Point) -> AffineForm {
    let cx = two() * (&f2.x - &f1.x);
    let cy = two() * (&f1.y - &f2.y);
    let c0 = &f1.x * &f1.x - &f2.x * &f2.x + &f2.y * &f2.y - &f1.y * &f1.y;
    AffineForm::new(cx, cy, c0)
}

/// The quadric `dist2(x, f1) + dist2(x, f2)` (as a polynomial in `x`).
fn focal_sum_quadric(f1: &Point, f2: &Point) -> ImplicitQuadric {
    ImplicitQuadric::from_coeffs([
        two(),
        Rat::zero(),
        -two(),
        -two() * (&f1.x + &f2.x),
        two() * (&f1.y + &f2.y),
        &f1.x * &f1.x + &f2.x * &f2.x - &f1.y * &f1.y - &f2.y * &f2.y,
    ])
}

/// Shared double-squaring expansion of `d1 +- d2 = k`:
/// `k^4 - 2 k^2 (d1^2 + d2^2) + (d1^2 - d2^2)^2`.
fn double_square_quadric(f1: &Point, f2: &Point, k2: &Rat) -> ImplicitQuadric {
    let k4 = k2 * k2;
    let sum = focal_sum_quadric(f1, f2);
    let diff_sq = focal_difference_form(f1, f2).square();
    let constant = ImplicitQuadric::from_coeffs([
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
        k4,
    ]);
    constant.add(&sum.scale(&(-two() * k2))).add(&diff_sq)
}

/// Ellipse quadric at definition scale: the direct double squaring of
/// `d(x,f1) + d(x,f2) = k`, with no rescaling. At this scale the
/// discriminant `B^2 - 4AC` equals `64 k^2 ((p2-q2)^2 - (p1-q1)^2 + k^2)`.
pub fn ellipse_implicit_raw(
    f1: &Point,
    f2: &Point,
    k2: &Rat,
) -> Result<ImplicitQuadric, ConicError> {
    let q = double_square_quadric(f1, f2, k2);
    if q.is_zero() {
        return Err(ConicError::DegeneratePlane);
    }
    Ok(q)
}

/// Canonicalized ellipse quadric.
pub fn ellipse_implicit(f1: &Point, f2: &Point, k2: &Rat) -> Result<ImplicitQuadric, ConicError> {
    Ok(ellipse_implicit_raw(f1, f2, k2)?.canonicalized())
}

/// Identical to [`ellipse_implicit_raw`]: squaring `d1 - d2 = k` twice
/// produces the same polynomial as squaring `d1 + d2 = k` twice.
pub fn hyperbola_implicit_raw(
    f1: &Point,
    f2: &Point,
    k2: &Rat,
) -> Result<ImplicitQuadric, ConicError> {
    ellipse_implicit_raw(f1, f2, k2)
}

pub fn hyperbola_implicit(f1: &Point, f2: &Point, k2: &Rat) -> Result<ImplicitQuadric, ConicError> {
    ellipse_implicit(f1, f2, k2)
}

/// Parabola quadric at definition scale:
/// `(a^2 - c^2) * (dist2(x, focus)) + w^2` with `w = c x - a y + a d - b c`,
/// i.e. the defining equation `dist2(x, focus) = -w^2/(a^2 - c^2)` with the
/// denominator cleared. Its quadratic part is exactly `(a x - c y)^2`.
pub fn parabola_implicit_raw(
    focus: &Point,
    directrix: &ParamLine,
) -> Result<ImplicitQuadric, ConicError> {
    let m = directrix.direction_interval();
    if m.is_zero() {
        return Err(ConicError::NullDirectrix);
    }
    // dist2(x, focus) as a polynomial: x^2 - y^2 - 2 p1 x + 2 p2 y + p1^2 - p2^2
    let focal = ImplicitQuadric::from_coeffs([
        Rat::one(),
        Rat::zero(),
        -Rat::one(),
        -two() * &focus.x,
        two() * &focus.y,
        &focus.x * &focus.x - &focus.y * &focus.y,
    ]);
    let w = AffineForm::new(
        directrix.c().clone(),
        -directrix.a().clone(),
        directrix.a() * directrix.d() - directrix.b() * directrix.c(),
    );
    Ok(focal.scale(&m).add(&w.square()))
}

/// Canonicalized parabola quadric.
pub fn parabola_implicit(
    focus: &Point,
    directrix: &ParamLine,
) -> Result<ImplicitQuadric, ConicError> {
    Ok(parabola_implicit_raw(focus, directrix)?.canonicalized())
}

/// Circle quadric from a single squaring of `dist2(x, center) = k^2`:
/// `(1, 0, -1, -2 p1, 2 p2, p1^2 - p2^2 - k^2)`.
pub fn circle_implicit(center: &Point, k2: &Rat) -> ImplicitQuadric {
    ImplicitQuadric::from_coeffs([
        Rat::one(),
        Rat::zero(),
        -Rat::one(),
        -two() * &center.x,
        two() * &center.y,
        &center.x * &center.x - &center.y * &center.y - k2,
    ])
}

/// Square root that is exact when the radicand is a perfect rational
/// square, and a float otherwise.
enum RootValue {
    Exact(Rat),
    Approx(f64),
}

fn sqrt_nonneg(v: &Rat) -> RootValue {
    match exact_sqrt(v) {
        Some(r) => RootValue::Exact(r),
        None => RootValue::Approx(rat_to_f64(v).max(0.0).sqrt()),
    }
}

/// Classifies a point against a two-focus spec.
///
/// Computes `d1^2`, `d2^2`, and `k^2` exactly. A sign conflict among the
/// nonzero values short-circuits to `SignInconsistent` (zero values are
/// compatible with either sign; the all-zero case answers `OnBoth`).
/// Otherwise the common sign is factored out of the defining equation and
/// the branch residuals `|r1 + r2 - kappa|` and `||r1 - r2| - kappa|` are
/// tested against `epsilon` — exactly when all three square roots are
/// rational (so `epsilon = 0` is meaningful), in floats otherwise.
pub fn classify_membership(
    x: &Point,
    spec: &ConicSpec,
    epsilon: f64,
) -> Result<MembershipVerdict, ConicError> {
    let (f1, f2, k2) = match spec {
        ConicSpec::Ellipse { focus1, focus2, k2 } | ConicSpec::Hyperbola { focus1, focus2, k2 } => {
            (focus1, focus2, k2)
        }
        _ => return Err(ConicError::UnsupportedSpec),
    };
    let d1 = dist2(x, f1);
    let d2 = dist2(x, f2);

    let mut common = Sign::Zero;
    for s in [d1.sign(), d2.sign(), Sign::of(k2)] {
        if s == Sign::Zero {
            continue;
        }
        if common == Sign::Zero {
            common = s;
        } else if common != s {
            return Ok(MembershipVerdict {
                d1_sq: d1,
                d2_sq: d2,
                branch: Branch::SignInconsistent,
            });
        }
    }
    if common == Sign::Zero {
        // d1^2 = d2^2 = k^2 = 0: the point satisfies both branches trivially.
        return Ok(MembershipVerdict {
            d1_sq: d1,
            d2_sq: d2,
            branch: Branch::OnBoth,
        });
    }

    let oriented = |v: &Rat| {
        if common == Sign::Negative {
            -v
        } else {
            v.clone()
        }
    };
    let roots = (
        sqrt_nonneg(&oriented(d1.value())),
        sqrt_nonneg(&oriented(d2.value())),
        sqrt_nonneg(&oriented(k2)),
    );

    let (on_ellipse, on_hyperbola) = match roots {
        (RootValue::Exact(r1), RootValue::Exact(r2), RootValue::Exact(kap)) => {
            let eps = Rat::from_float(epsilon.abs()).unwrap_or_else(Rat::zero);
            let sum_res = (&r1 + &r2 - &kap).abs();
            let diff_res = ((&r1 - &r2).abs() - &kap).abs();
            (sum_res <= eps, diff_res <= eps)
        }
        (r1, r2, kap) => {
            let r1 = approx(r1);
            let r2 = approx(r2);
            let kap = approx(kap);
            (
                (r1 + r2 - kap).abs() <= epsilon,
                ((r1 - r2).abs() - kap).abs() <= epsilon,
            )
        }
    };

    let branch = match (on_ellipse, on_hyperbola) {
        (true, true) => Branch::OnBoth,
        (true, false) => Branch::OnEllipseBranch,
        (false, true) => Branch::OnHyperbolaBranch,
        (false, false) => Branch::NotOnConic,
    };
    Ok(MembershipVerdict {
        d1_sq: d1,
        d2_sq: d2,
        branch,
    })
}

fn approx(r: RootValue) -> f64 {
    match r {
        RootValue::Exact(v) => rat_to_f64(&v),
        RootValue::Approx(v) => v,
    }
}

/// Default float tolerance for branch residual checks: double-precision
/// roundoff scale, relative to the magnitude of `kappa = sqrt(|k^2|)`.
pub fn default_membership_epsilon(k2: &Rat) -> f64 {
    1e-9 * (1.0 + rat_to_f64(k2).abs().sqrt())
}

/// Closed forms of the raw quadratic part, used as an independent route in
/// tests: `A = 4((q1-p1)^2 - k^2)`, `B = 8(q1-p1)(p2-q2)`,
/// `C = 4((p2-q2)^2 + k^2)`.
pub fn quadratic_part_closed_form(f1: &Point, f2: &Point, k2: &Rat) -> (Rat, Rat, Rat) {
    let dx = &f2.x - &f1.x;
    let dy = &f1.y - &f2.y;
    (
        four() * (&dx * &dx - k2),
        two() * four() * &dx * &dy,
        four() * (&dy * &dy + k2),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn witness_ellipse() -> (Point, Point, Rat) {
        (Point::origin(), Point::from_ints(2, 0), rat_int(16))
    }

    #[test]
    fn ellipse_witness_quadric() {
        let (p, q, k2) = witness_ellipse();
        let raw = ellipse_implicit_raw(&p, &q, &k2).unwrap();
        assert_eq!(raw, ImplicitQuadric::from_ints([-48, 0, 64, 96, 0, 144]));
        let target = ImplicitQuadric::from_ints([-3, 0, 4, 6, 0, 9]);
        assert!(raw.scalar_equivalent(&target));
        assert!(ellipse_implicit(&p, &q, &k2)
            .unwrap()
            .scalar_equivalent(&target));
        // (3, 0) satisfies d1 + d2 = 3 + 1 = 4 = k.
        assert!(raw.eval(&Point::from_ints(3, 0)).is_zero());
    }

    #[test]
    fn coincident_foci_reduce_to_circle() {
        let p = Point::origin();
        let q = ellipse_implicit(&p, &p, &rat_int(4)).unwrap();
        // 2 d1 = k collapses to dist2 = k^2 / 4 = 1.
        assert!(q.scalar_equivalent(&ImplicitQuadric::from_ints([1, 0, -1, 0, 0, -1])));
        assert!(q.eval(&Point::from_ints(1, 0)).is_zero());
    }

    #[test]
    fn zero_k_leaves_perfect_square() {
        let q = ellipse_implicit(&Point::origin(), &Point::from_ints(2, 0), &rat_int(0)).unwrap();
        assert!(q.scalar_equivalent(&ImplicitQuadric::from_ints([1, 0, 0, -2, 0, 1])));
    }

    #[test]
    fn degenerate_plane_rejected() {
        let p = Point::from_ints(1, 2);
        assert_eq!(
            ellipse_implicit(&p, &p, &rat_int(0)),
            Err(ConicError::DegeneratePlane)
        );
        assert_eq!(
            ConicSpec::ellipse(p.clone(), p.clone(), rat_int(0)),
            Err(ConicError::DegeneratePlane)
        );
    }

    #[test]
    fn hyperbola_equals_ellipse_and_hits_both_vertices() {
        let p = Point::origin();
        let q = Point::from_ints(2, 0);
        let k2 = rat_int(1);
        let h = hyperbola_implicit_raw(&p, &q, &k2).unwrap();
        assert_eq!(h, ellipse_implicit_raw(&p, &q, &k2).unwrap());
        // d1 - d2 = 1 at (3/2, 0); d2 - d1 = 1 at (1/2, 0).
        assert!(h.eval(&Point::new(rat(3, 2), rat_int(0))).is_zero());
        assert!(h.eval(&Point::new(rat(1, 2), rat_int(0))).is_zero());
    }

    #[test]
    fn parabola_figure_one() {
        let focus = Point::from_ints(2, 3);
        let line = ParamLine::from_ints(1, 0, 2, 0).unwrap();
        let raw = parabola_implicit_raw(&focus, &line).unwrap();
        assert_eq!(raw, ImplicitQuadric::from_ints([1, -4, 4, 12, -18, 15]));
        assert_eq!(parabola_implicit(&focus, &line).unwrap(), raw);
    }

    #[test]
    fn parabola_focus_on_directrix() {
        let line = ParamLine::from_ints(1, 0, 2, 0).unwrap();
        let focus = line.at(&rat_int(1)); // (1, 2)
        let q = parabola_implicit(&focus, &line).unwrap();
        assert!(q.eval(&focus).is_zero());
    }

    #[test]
    fn parabola_horizontal_directrix_is_euclidean() {
        let focus = Point::from_ints(0, 1);
        let line = ParamLine::from_ints(1, 0, 0, 0).unwrap();
        let raw = parabola_implicit_raw(&focus, &line).unwrap();
        assert_eq!(raw, ImplicitQuadric::from_ints([1, 0, 0, 0, 2, -1]));
        // Quadratic part degenerates to the single x^2 term.
        assert!(raw.b.is_zero() && raw.c.is_zero());
    }

    #[test]
    fn parabola_null_directrix_rejected() {
        let line = ParamLine::from_ints(1, 0, 1, 0).unwrap();
        assert_eq!(
            parabola_implicit(&Point::origin(), &line),
            Err(ConicError::NullDirectrix)
        );
        assert_eq!(
            ConicSpec::parabola(Point::origin(), line),
            Err(ConicError::NullDirectrix)
        );
    }

    #[test]
    fn circle_examples() {
        assert_eq!(
            circle_implicit(&Point::origin(), &rat_int(1)),
            ImplicitQuadric::from_ints([1, 0, -1, 0, 0, -1])
        );
        assert_eq!(
            circle_implicit(&Point::origin(), &rat_int(0)),
            ImplicitQuadric::from_ints([1, 0, -1, 0, 0, 0])
        );
        let q = circle_implicit(&Point::from_ints(1, 1), &rat_int(-4));
        assert!(q.eval(&Point::from_ints(1, 3)).is_zero());
    }

    #[test]
    fn membership_examples() {
        let spec =
            ConicSpec::ellipse(Point::origin(), Point::from_ints(2, 0), rat_int(16)).unwrap();

        let v = classify_membership(&Point::from_ints(3, 0), &spec, 0.0).unwrap();
        assert_eq!(v.d1_sq.value(), &rat_int(9));
        assert_eq!(v.d2_sq.value(), &rat_int(1));
        assert_eq!(v.branch, Branch::OnEllipseBranch);

        let hyp =
            ConicSpec::hyperbola(Point::origin(), Point::from_ints(2, 0), rat_int(1)).unwrap();
        let v = classify_membership(&Point::new(rat(3, 2), rat_int(0)), &hyp, 0.0).unwrap();
        assert_eq!(v.branch, Branch::OnHyperbolaBranch);

        let v = classify_membership(&Point::from_ints(0, 3), &spec, 1e-9).unwrap();
        assert_eq!(v.d1_sq.value(), &rat_int(-9));
        assert_eq!(v.d2_sq.value(), &rat_int(-5));
        assert_eq!(v.branch, Branch::SignInconsistent);
    }

    #[test]
    fn membership_negative_common_sign() {
        // Timelike separations with negative k^2: (0, 1/2) against foci
        // (0,0), (0,2) has d1 = 1/2 i, d2 = 3/2 i, so |d1 - d2| = 1 * i = k.
        let spec =
            ConicSpec::ellipse(Point::origin(), Point::from_ints(0, 2), rat_int(-1)).unwrap();
        let v = classify_membership(&Point::new(rat_int(0), rat(1, 2)), &spec, 0.0).unwrap();
        assert_eq!(v.branch, Branch::OnHyperbolaBranch);
    }

    #[test]
    fn membership_all_zero_is_on_both() {
        // Point on both null cones with k^2 = 0.
        let spec = ConicSpec::ellipse(Point::origin(), Point::from_ints(2, 2), rat_int(0)).unwrap();
        let v = classify_membership(&Point::from_ints(1, 1), &spec, 0.0).unwrap();
        assert_eq!(v.d1_sq.sign(), Sign::Zero);
        assert_eq!(v.d2_sq.sign(), Sign::Zero);
        assert_eq!(v.branch, Branch::OnBoth);
    }

    #[test]
    fn membership_requires_two_focus_spec() {
        let circle = ConicSpec::circle(Point::origin(), rat_int(1));
        assert_eq!(
            classify_membership(&Point::from_ints(1, 0), &circle, 0.0),
            Err(ConicError::UnsupportedSpec)
        );
    }

    #[test]
    fn quadratic_part_closed_form_matches_expansion() {
        let f1 = Point::new(rat(1, 2), rat_int(-3));
        let f2 = Point::new(rat(-5, 4), rat(2, 3));
        let k2 = rat(7, 5);
        let raw = ellipse_implicit_raw(&f1, &f2, &k2).unwrap();
        let (a, b, c) = quadratic_part_closed_form(&f1, &f2, &k2);
        assert_eq!(raw.a, a);
        assert_eq!(raw.b, b);
        assert_eq!(raw.c, c);
    }

    #[test]
    fn swapping_foci_preserves_quadric() {
        let f1 = Point::from_ints(-1, 4);
        let f2 = Point::from_ints(3, -2);
        let k2 = rat(5, 3);
        assert_eq!(
            ellipse_implicit_raw(&f1, &f2, &k2).unwrap(),
            ellipse_implicit_raw(&f2, &f1, &k2).unwrap()
        );
    }
}
