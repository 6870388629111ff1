//! Audit of the published closed-form conic equations.
//!
//! The derived quadrics in [`crate::conic`] come from symbolic expansion of
//! the distance definitions. The closed forms these conics circulate with
//! were typeset by hand, and desk checking shows several of their
//! coefficients disagree with the definitions they were expanded from. This
//! module transcribes those closed forms *verbatim* — typos included —
//! evaluates them, diffs them against the derived quadrics, and verifies
//! both against independently root-found member points. Nothing is silently
//! corrected: the output is a machine-readable discrepancy report.

use num_traits::Zero;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::conic::ConicSpec;
use crate::error::ConicError;
use crate::lens::discriminant;
use crate::minkowski::{dist2_f64, ParamLine, Point, Sign};
use crate::quadric::ImplicitQuadric;
use crate::rational::{format_rational, rat_int, rat_to_f64, Rat};

fn two() -> Rat {
    rat_int(2)
}
fn four() -> Rat {
    rat_int(4)
}

/// The published two-focus equation, coefficient by coefficient as typeset.
///
/// The x-term's inner factor reads `q2^2 - p1^2 + q2^2 - p2^2 - k^2` (with
/// `q2^2` appearing twice); see [`printed_ellipse_quadric_variant`] for the
/// plausible intended reading. No typo correction is applied here.
pub fn printed_ellipse_quadric(f1: &Point, f2: &Point, k2: &Rat) -> ImplicitQuadric {
    printed_ellipse_with_x_factor(f1, f2, k2, false)
}

/// The alternative reading of the published x-term, with the first `q2^2`
/// replaced by `q1^2` to match the pattern of the printed y-term. Also
/// fails the membership oracle; recorded in reports as a secondary variant.
pub fn printed_ellipse_quadric_variant(f1: &Point, f2: &Point, k2: &Rat) -> ImplicitQuadric {
    printed_ellipse_with_x_factor(f1, f2, k2, true)
}

fn printed_ellipse_with_x_factor(
    f1: &Point,
    f2: &Point,
    k2: &Rat,
    corrected_x_factor: bool,
) -> ImplicitQuadric {
    let (p1, p2) = (&f1.x, &f1.y);
    let (q1, q2) = (&f2.x, &f2.y);
    let dq = q1 - p1; // q1 - p1
    let dp = p2 - q2; // p2 - q2
    let p1s = p1 * p1;
    let p2s = p2 * p2;
    let q1s = q1 * q1;
    let q2s = q2 * q2;

    let a = four() * (&dq * &dq - k2);
    let b = four() * two() * &dq * &dp;
    let c = four() * (&dp * &dp + k2);

    // x-term inner factor as typeset: q2^2 - p1^2 + q2^2 - p2^2 - k^2
    // (variant replaces the leading q2^2 with q1^2).
    let x_factor = if corrected_x_factor {
        &q1s - &p1s + &q2s - &p2s - k2
    } else {
        &q2s - &p1s + &q2s - &p2s - k2
    };
    let d = four() * (&dq * x_factor + two() * k2 * q1);

    // y-term inner factor as typeset: q1^2 - p1^2 + q2^2 - p2^2 - k^2.
    let y_factor = &q1s - &p1s + &q2s - &p2s - k2;
    let e = four() * (&dp * &y_factor - two() * k2 * q2);

    let f_head = &q1s - &p1s + &q2s - &p2s - k2;
    let f = &f_head * &f_head - four() * k2 * &q1s + four() * k2 * &q2s;

    ImplicitQuadric::from_coeffs([a, b, c, d, e, f])
}

/// The published parabola equation, coefficient by coefficient as typeset
/// (for example the y^2 coefficient `c^2 (3a^2 - c^2)`).
pub fn printed_parabola_quadric(
    focus: &Point,
    line: &ParamLine,
) -> Result<ImplicitQuadric, ConicError> {
    let m = line.direction_interval();
    if m.is_zero() {
        return Err(ConicError::NullDirectrix);
    }
    let (p1, p2) = (&focus.x, &focus.y);
    let (la, lb, lc, ld) = (line.a(), line.b(), line.c(), line.d());
    let a2 = la * la;
    let a3 = &a2 * la;
    let a4 = &a2 * &a2;
    let c2 = lc * lc;
    let c3 = &c2 * lc;
    let c4 = &c2 * &c2;
    let three = rat_int(3);

    let a = &a2 * &m;
    let b = -two() * la * lc * &m;
    let c = &c2 * (&three * &a2 - &c2);
    let d = two() * (&a3 * lc * ld - lb * &c4 - la * &c3 * ld - &a2 * lb * &c2 - &m * &m * p1);
    let e = two() * (&m * p2 + &a3 * lb * lc - &a4 * ld + &a2 * &c2 * ld - la * lb * &c3);
    let f = &m * (p1 * p1 - p2 * p2) + &a2 * lb * lb * &c2 + &a4 * ld * ld
        - two() * &a3 * lb * lc * ld
        - &a2 * &c2 * ld * ld
        + lb * lb * &c4
        + two() * la * lb * &c3 * ld;

    Ok(ImplicitQuadric::from_coeffs([a, b, c, d, e, f]))
}

/// The worked example the audited figure illustrates: focus `(2, 3)`,
/// directrix `t -> (t, 2t)`.
pub fn figure1_spec() -> ConicSpec {
    ConicSpec::Parabola {
        focus: Point::from_ints(2, 3),
        directrix: ParamLine::from_ints(1, 0, 2, 0).expect("non-degenerate"),
    }
}

/// The equation printed in the figure caption for that example,
/// `-3x^2 - 12xy - 4y^2 - 36x - 18y + 15 = 0`. Its xy coefficient differs
/// in sign from what the printed general formula yields at the same
/// parameters; the audit records the inconsistency.
pub fn figure1_caption_quadric() -> ImplicitQuadric {
    ImplicitQuadric::from_ints([-3, -12, -4, -36, -18, 15])
}

/// Published two-focus discriminant,
/// `64 k^2 ((p2 - q2)^2 - (p1 - q1)^2 + k^2)`.
pub fn printed_delta_ellipse(f1: &Point, f2: &Point, k2: &Rat) -> Rat {
    let dx = &f1.x - &f2.x;
    let dy = &f1.y - &f2.y;
    rat_int(64) * k2 * (&dy * &dy - &dx * &dx + k2)
}

/// Published parabola discriminant, `8 a^4 c^2 (c^2 - a^2)`.
pub fn printed_delta_parabola(line: &ParamLine) -> Rat {
    let a2 = line.a() * line.a();
    let c2 = line.c() * line.c();
    rat_int(8) * &a2 * &a2 * &c2 * (&c2 - &a2)
}

/// Discrepancy codes a report can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finding {
    EllipseLinearTermMismatch,
    EllipseVariantLinearTermMismatch,
    EllipseDeltaMismatch,
    ParabolaY2Mismatch,
    ParabolaXTermMismatch,
    ParabolaYTermMismatch,
    ParabolaConstantMismatch,
    ParabolaDeltaMismatch,
    Figure1CaptionMismatch,
    PrintedMembershipFailure,
}

impl Finding {
    pub fn code(&self) -> &'static str {
        match self {
            Finding::EllipseLinearTermMismatch => "ELLIPSE_LINEAR_TERM_MISMATCH",
            Finding::EllipseVariantLinearTermMismatch => "ELLIPSE_VARIANT_LINEAR_TERM_MISMATCH",
            Finding::EllipseDeltaMismatch => "ELLIPSE_DELTA_MISMATCH",
            Finding::ParabolaY2Mismatch => "PARABOLA_Y2_MISMATCH",
            Finding::ParabolaXTermMismatch => "PARABOLA_X_TERM_MISMATCH",
            Finding::ParabolaYTermMismatch => "PARABOLA_Y_TERM_MISMATCH",
            Finding::ParabolaConstantMismatch => "PARABOLA_CONSTANT_MISMATCH",
            Finding::ParabolaDeltaMismatch => "PARABOLA_DELTA_MISMATCH",
            Finding::Figure1CaptionMismatch => "FIGURE1_CAPTION_MISMATCH",
            Finding::PrintedMembershipFailure => "PRINTED_MEMBERSHIP_FAILURE",
        }
    }
}

/// One probe point and the value of the audited (printed) quadric there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeResidual {
    pub x: f64,
    pub y: f64,
    pub residual: f64,
}

/// Structured comparison of a printed equation against the derived one.
///
/// For specs with no printed counterpart (circles), the printed side is
/// absent and the residuals are measured against the derived quadric; the
/// vacuous comparison flags stay `true` so that "no findings" keeps meaning
/// "nothing wrong".
#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub case_id: String,
    pub seed: u64,
    pub probe_count: usize,
    pub printed_quadric: Option<ImplicitQuadric>,
    pub printed_variant_quadric: Option<ImplicitQuadric>,
    pub caption_quadric: Option<ImplicitQuadric>,
    /// Canonicalized derived quadric.
    pub derived_quadric: ImplicitQuadric,
    pub scalar_equivalent: bool,
    pub printed_delta: Option<Rat>,
    /// `B^2 - 4AC` of the derived quadric at definition scale.
    pub derived_delta: Rat,
    pub delta_sign_match: bool,
    pub membership_residuals: Vec<ProbeResidual>,
    pub findings: Vec<Finding>,
}

impl AuditReport {
    pub fn has_finding(&self, finding: Finding) -> bool {
        self.findings.contains(&finding)
    }

    /// Stable JSON rendering: struct field order, exact rationals as
    /// `"num/den"` strings, findings as their code tokens.
    pub fn to_json(&self) -> String {
        let json = ReportJson::from(self);
        let mut text = serde_json::to_string_pretty(&json).expect("report serializes");
        text.push('\n');
        text
    }
}

#[derive(Serialize)]
struct QuadricJson {
    a: String,
    b: String,
    c: String,
    d: String,
    e: String,
    f: String,
    equation: String,
}

impl From<&ImplicitQuadric> for QuadricJson {
    fn from(q: &ImplicitQuadric) -> QuadricJson {
        QuadricJson {
            a: format_rational(&q.a),
            b: format_rational(&q.b),
            c: format_rational(&q.c),
            d: format_rational(&q.d),
            e: format_rational(&q.e),
            f: format_rational(&q.f),
            equation: q.to_string(),
        }
    }
}

#[derive(Serialize)]
struct ResidualJson {
    x: f64,
    y: f64,
    residual: f64,
}

#[derive(Serialize)]
struct ReportJson {
    case_id: String,
    seed: u64,
    probe_count: usize,
    printed_quadric: Option<QuadricJson>,
    printed_variant_quadric: Option<QuadricJson>,
    caption_quadric: Option<QuadricJson>,
    derived_quadric: QuadricJson,
    scalar_equivalent: bool,
    printed_delta: Option<String>,
    derived_delta: String,
    delta_sign_match: bool,
    membership_residuals: Vec<ResidualJson>,
    findings: Vec<&'static str>,
}

impl From<&AuditReport> for ReportJson {
    fn from(r: &AuditReport) -> ReportJson {
        ReportJson {
            case_id: r.case_id.clone(),
            seed: r.seed,
            probe_count: r.probe_count,
            printed_quadric: r.printed_quadric.as_ref().map(QuadricJson::from),
            printed_variant_quadric: r.printed_variant_quadric.as_ref().map(QuadricJson::from),
            caption_quadric: r.caption_quadric.as_ref().map(QuadricJson::from),
            derived_quadric: QuadricJson::from(&r.derived_quadric),
            scalar_equivalent: r.scalar_equivalent,
            printed_delta: r.printed_delta.as_ref().map(format_rational),
            derived_delta: format_rational(&r.derived_delta),
            delta_sign_match: r.delta_sign_match,
            membership_residuals: r
                .membership_residuals
                .iter()
                .map(|p| ResidualJson {
                    x: p.x,
                    y: p.y,
                    residual: p.residual,
                })
                .collect(),
            findings: r.findings.iter().map(Finding::code).collect(),
        }
    }
}

fn point_id(p: &Point) -> String {
    format!("({},{})", format_rational(&p.x), format_rational(&p.y))
}

fn case_id(spec: &ConicSpec) -> String {
    match spec {
        ConicSpec::Circle { center, k2 } => {
            format!(
                "circle center={} k2={}",
                point_id(center),
                format_rational(k2)
            )
        }
        ConicSpec::Ellipse { focus1, focus2, k2 } => format!(
            "ellipse focus1={} focus2={} k2={}",
            point_id(focus1),
            point_id(focus2),
            format_rational(k2)
        ),
        ConicSpec::Hyperbola { focus1, focus2, k2 } => format!(
            "hyperbola focus1={} focus2={} k2={}",
            point_id(focus1),
            point_id(focus2),
            format_rational(k2)
        ),
        ConicSpec::Parabola { focus, directrix } => format!(
            "parabola focus={} directrix=({},{},{},{})",
            point_id(focus),
            format_rational(directrix.a()),
            format_rational(directrix.b()),
            format_rational(directrix.c()),
            format_rational(directrix.d()),
        ),
    }
}

/// Residuals beyond this bound (on unit-normalized coefficients) count as a
/// membership failure of the audited equation.
pub const MEMBERSHIP_RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Builds the full report for one spec: derived and printed quadrics,
/// exact scalar-equivalence and discriminant comparison, and evaluation of
/// the audited equation on `probe_count` oracle-found member points.
///
/// Deterministic: the same `(spec, probe_count, seed)` triple always
/// produces an identical report.
pub fn audit(spec: &ConicSpec, probe_count: usize, seed: u64) -> Result<AuditReport, ConicError> {
    let derived_raw = spec.implicit_raw()?;
    let derived = derived_raw.canonicalized();
    let derived_delta = discriminant(&derived_raw);

    let mut findings = Vec::new();
    let mut printed_quadric = None;
    let mut printed_variant_quadric = None;
    let mut caption_quadric = None;
    let mut printed_delta = None;

    match spec {
        ConicSpec::Ellipse { focus1, focus2, k2 } | ConicSpec::Hyperbola { focus1, focus2, k2 } => {
            let printed = printed_ellipse_quadric(focus1, focus2, k2);
            let variant = printed_ellipse_quadric_variant(focus1, focus2, k2);
            if !printed.scalar_equivalent(&derived_raw) {
                findings.push(Finding::EllipseLinearTermMismatch);
            }
            if !variant.scalar_equivalent(&derived_raw) {
                findings.push(Finding::EllipseVariantLinearTermMismatch);
            }
            printed_delta = Some(printed_delta_ellipse(focus1, focus2, k2));
            printed_quadric = Some(printed);
            printed_variant_quadric = Some(variant);
        }
        ConicSpec::Parabola { focus, directrix } => {
            let printed = printed_parabola_quadric(focus, directrix)?;
            // The printed equation carries one extra factor of a^2 - c^2
            // relative to the definition-scale expansion; compare at that
            // matched scale so each coefficient diffs meaningfully.
            let matched = derived_raw.scale(&directrix.direction_interval());
            debug_assert_eq!(printed.a, matched.a);
            debug_assert_eq!(printed.b, matched.b);
            if printed.c != matched.c {
                findings.push(Finding::ParabolaY2Mismatch);
            }
            if printed.d != matched.d {
                findings.push(Finding::ParabolaXTermMismatch);
            }
            if printed.e != matched.e {
                findings.push(Finding::ParabolaYTermMismatch);
            }
            if printed.f != matched.f {
                findings.push(Finding::ParabolaConstantMismatch);
            }
            if spec == &figure1_spec() {
                let caption = figure1_caption_quadric();
                if caption != printed {
                    findings.push(Finding::Figure1CaptionMismatch);
                }
                caption_quadric = Some(caption);
            }
            printed_delta = Some(printed_delta_parabola(directrix));
            printed_quadric = Some(printed);
        }
        ConicSpec::Circle { .. } => {}
    }

    let scalar_equivalent = printed_quadric
        .as_ref()
        .map(|p| p.scalar_equivalent(&derived_raw))
        .unwrap_or(true);
    let delta_sign_match = printed_delta
        .as_ref()
        .map(|pd| Sign::of(pd) == Sign::of(&derived_delta))
        .unwrap_or(true);
    if !delta_sign_match {
        match spec {
            ConicSpec::Parabola { .. } => findings.push(Finding::ParabolaDeltaMismatch),
            _ => findings.push(Finding::EllipseDeltaMismatch),
        }
    }

    // Evaluate the audited equation on oracle-verified member points. The
    // reported residual is the raw printed value; the failure check runs on
    // unit-normalized coefficients.
    let audited = printed_quadric.as_ref().unwrap_or(&derived);
    let audited_raw_coeffs = audited.coeffs_f64();
    let audited_unit_coeffs = audited.unit_coeffs_f64();
    let probes = oracle_member_points(spec, probe_count, seed);
    let mut membership_failed = false;
    let membership_residuals: Vec<ProbeResidual> = probes
        .iter()
        .map(|p| {
            let residual = eval_coeffs(&audited_raw_coeffs, *p);
            if eval_coeffs(&audited_unit_coeffs, *p).abs() > MEMBERSHIP_RESIDUAL_TOLERANCE {
                membership_failed = true;
            }
            ProbeResidual {
                x: p[0],
                y: p[1],
                residual,
            }
        })
        .collect();
    if membership_failed {
        findings.push(Finding::PrintedMembershipFailure);
    }

    Ok(AuditReport {
        case_id: case_id(spec),
        seed,
        probe_count,
        printed_quadric,
        printed_variant_quadric,
        caption_quadric,
        derived_quadric: derived,
        scalar_equivalent,
        printed_delta,
        derived_delta,
        delta_sign_match,
        membership_residuals,
        findings,
    })
}

fn eval_coeffs(c: &[f64; 6], p: [f64; 2]) -> f64 {
    let [x, y] = p;
    c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x + c[4] * y + c[5]
}

/// The defining one-dimensional equation along a ray, in floats.
enum DefiningEquation {
    TwoFocus {
        f1: [f64; 2],
        f2: [f64; 2],
        k2: f64,
        sum_branch: bool,
    },
    Circle {
        center: [f64; 2],
        k2: f64,
    },
    Parabola {
        focus: [f64; 2],
        line: [f64; 4],
        direction_interval: f64,
    },
}

impl DefiningEquation {
    /// Value of the branch equation at a point, or `None` where the sign
    /// pattern makes the equation meaningless (two-focus case only).
    fn eval(&self, p: [f64; 2]) -> Option<f64> {
        match self {
            DefiningEquation::TwoFocus {
                f1,
                f2,
                k2,
                sum_branch,
            } => {
                let d1 = dist2_f64(p, *f1);
                let d2 = dist2_f64(p, *f2);
                let mut sign = 0f64;
                for v in [d1, d2, *k2] {
                    if v > 0.0 {
                        if sign < 0.0 {
                            return None;
                        }
                        sign = 1.0;
                    } else if v < 0.0 {
                        if sign > 0.0 {
                            return None;
                        }
                        sign = -1.0;
                    }
                }
                let r1 = d1.abs().sqrt();
                let r2 = d2.abs().sqrt();
                let kappa = k2.abs().sqrt();
                Some(if *sum_branch {
                    r1 + r2 - kappa
                } else {
                    (r1 - r2).abs() - kappa
                })
            }
            DefiningEquation::Circle { center, k2 } => Some(dist2_f64(p, *center) - k2),
            DefiningEquation::Parabola {
                focus,
                line,
                direction_interval,
            } => {
                let [a, b, c, d] = *line;
                let w = c * p[0] - a * p[1] + (a * d - b * c);
                let line_dist2 = -(w * w) / direction_interval;
                Some(dist2_f64(p, *focus) - line_dist2)
            }
        }
    }
}

fn rng_range(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    debug_assert!(lo < hi);
    let span = (hi - lo + 1) as u64;
    lo + (rng.next_u64() % span) as i64
}

/// Points on the conic found by bisecting the defining distance equation
/// along seeded pseudo-random rays from a focus, to an interval of `1e-12`.
///
/// The root finding runs on the definition itself (square roots of exact
/// squared distances), fully independent of the symbolic expansion it is
/// used to check. Rays use integer direction vectors, so the whole
/// computation is IEEE-deterministic: same spec, count, and seed — same
/// points, bit for bit.
pub fn oracle_member_points(spec: &ConicSpec, count: usize, seed: u64) -> Vec<[f64; 2]> {
    let mut points = Vec::with_capacity(count);
    if count == 0 {
        return points;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let origins: Vec<[f64; 2]> = match spec {
        ConicSpec::Circle { center, .. } => vec![center.to_f64()],
        ConicSpec::Ellipse { focus1, focus2, .. } | ConicSpec::Hyperbola { focus1, focus2, .. } => {
            vec![focus1.to_f64(), focus2.to_f64()]
        }
        ConicSpec::Parabola { focus, .. } => vec![focus.to_f64()],
    };

    let make_equation = |sum_branch: bool| -> DefiningEquation {
        match spec {
            ConicSpec::Circle { center, k2 } => DefiningEquation::Circle {
                center: center.to_f64(),
                k2: rat_to_f64(k2),
            },
            ConicSpec::Ellipse { focus1, focus2, k2 }
            | ConicSpec::Hyperbola { focus1, focus2, k2 } => DefiningEquation::TwoFocus {
                f1: focus1.to_f64(),
                f2: focus2.to_f64(),
                k2: rat_to_f64(k2),
                sum_branch,
            },
            ConicSpec::Parabola { focus, directrix } => DefiningEquation::Parabola {
                focus: focus.to_f64(),
                line: directrix.params_f64(),
                direction_interval: rat_to_f64(&directrix.direction_interval()),
            },
        }
    };

    let mut reach = 24.0f64;
    let max_attempts = count * 96 + 96;
    let mut attempts = 0usize;
    while points.len() < count && attempts < max_attempts {
        attempts += 1;
        let dx = rng_range(&mut rng, -48, 48);
        let dy = rng_range(&mut rng, -48, 48);
        if dx == 0 && dy == 0 {
            continue;
        }
        let origin = origins[(rng.next_u64() % origins.len() as u64) as usize];
        let equation = make_equation(rng.next_u64() & 1 == 1);

        let dir = [dx as f64, dy as f64];
        let norm = (dir[0] * dir[0] + dir[1] * dir[1]).sqrt();
        let tmax = reach / norm;
        const STEPS: usize = 512;
        let h = tmax / STEPS as f64;
        let at = |t: f64| [origin[0] + t * dir[0], origin[1] + t * dir[1]];

        let mut prev: Option<(f64, f64)> = None;
        for i in 1..=STEPS {
            if points.len() >= count {
                break;
            }
            let t = i as f64 * h;
            match equation.eval(at(t)) {
                None => prev = None,
                Some(g) => {
                    if g == 0.0 {
                        points.push(at(t));
                        prev = None;
                        continue;
                    }
                    if let Some((t0, g0)) = prev {
                        if g0 * g < 0.0 {
                            if let Some(root) = bisect(&equation, &at, t0, g0, t) {
                                points.push(at(root));
                            }
                        }
                    }
                    prev = Some((t, g));
                }
            }
        }

        // Nothing within reach after a fair number of rays: widen the scan.
        if points.is_empty() && attempts.is_multiple_of(24) && reach < 200.0 {
            reach *= 2.0;
        }
    }
    points
}

/// Bisection on the defining equation; bails out if the bracket midpoint
/// falls in a sign-inconsistent region (possible only near a bracket that
/// straddles a null cone).
fn bisect(
    equation: &DefiningEquation,
    at: &impl Fn(f64) -> [f64; 2],
    mut lo: f64,
    mut g_lo: f64,
    mut hi: f64,
) -> Option<f64> {
    for _ in 0..128 {
        if (hi - lo).abs() <= 1e-12 * hi.abs().max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let g_mid = equation.eval(at(mid))?;
        if g_mid == 0.0 {
            return Some(mid);
        }
        if g_lo * g_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            g_lo = g_mid;
        }
    }
    Some(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{ellipse_implicit_raw, parabola_implicit_raw};
    use crate::rational::rat;

    fn witness() -> (Point, Point, Rat) {
        (Point::origin(), Point::from_ints(2, 0), rat_int(16))
    }

    #[test]
    fn printed_ellipse_witness_values() {
        let (p, q, k2) = witness();
        let printed = printed_ellipse_quadric(&p, &q, &k2);
        // x coefficient as typeset: 4 * ((2)(0 - 0 + 0 - 0 - 16) + 2*16*2) = 128.
        assert_eq!(printed.d, rat_int(128));
        // The quadratic part matches the derived expansion...
        let derived = ellipse_implicit_raw(&p, &q, &k2).unwrap();
        assert_eq!(printed.a, derived.a);
        assert_eq!(printed.b, derived.b);
        assert_eq!(printed.c, derived.c);
        // ...but the equation fails on a genuine member point.
        let residual = printed.eval(&Point::from_ints(3, 0));
        assert_eq!(residual, rat_int(-160));
    }

    #[test]
    fn printed_ellipse_coincident_foci_degenerate_consistently() {
        let p = Point::from_ints(1, -2);
        let k2 = rat(7, 3);
        let printed = printed_ellipse_quadric(&p, &p, &k2);
        let derived = ellipse_implicit_raw(&p, &p, &k2).unwrap();
        assert_eq!(printed, derived);
        assert_eq!(printed.a, rat_int(-4) * &k2);
        assert_eq!(printed.c, rat_int(4) * &k2);
    }

    #[test]
    fn printed_parabola_figure1_values() {
        let focus = Point::from_ints(2, 3);
        let line = ParamLine::from_ints(1, 0, 2, 0).unwrap();
        let printed = printed_parabola_quadric(&focus, &line).unwrap();
        assert_eq!(
            printed,
            ImplicitQuadric::from_ints([-3, 12, -4, -36, -18, 15])
        );
        // y^2 coefficient differs from the derived value at matched scale.
        let matched = parabola_implicit_raw(&focus, &line)
            .unwrap()
            .scale(&line.direction_interval());
        assert_eq!(printed.c, rat_int(-4));
        assert_eq!(matched.c, rat_int(-12));
    }

    #[test]
    fn printed_parabola_zero_offsets_constant_vanishes() {
        use num_traits::Zero;
        let line = ParamLine::from_ints(1, 0, 2, 0).unwrap();
        let printed = printed_parabola_quadric(&Point::origin(), &line).unwrap();
        let derived = parabola_implicit_raw(&Point::origin(), &line).unwrap();
        assert!(printed.f.is_zero());
        assert!(derived.f.is_zero());
    }

    #[test]
    fn printed_deltas() {
        let (p, q, k2) = witness();
        assert_eq!(printed_delta_ellipse(&p, &q, &k2), rat_int(12288));
        assert_eq!(printed_delta_ellipse(&p, &q, &rat_int(0)), rat_int(0));
        assert_eq!(
            printed_delta_ellipse(&Point::origin(), &Point::from_ints(0, 2), &rat_int(-1)),
            rat_int(-192)
        );

        let line = ParamLine::from_ints(1, 0, 2, 0).unwrap();
        assert_eq!(printed_delta_parabola(&line), rat_int(96));
        let horizontal = ParamLine::from_ints(1, 0, 0, 0).unwrap();
        assert_eq!(printed_delta_parabola(&horizontal), rat_int(0));
        let steep = ParamLine::from_ints(2, 0, 1, 0).unwrap();
        assert_eq!(printed_delta_parabola(&steep), rat_int(-384));
    }

    #[test]
    fn audit_ellipse_witness() {
        let (p, q, k2) = witness();
        let spec = ConicSpec::ellipse(p, q, k2).unwrap();
        let report = audit(&spec, 8, 7).unwrap();
        assert!(report.has_finding(Finding::EllipseLinearTermMismatch));
        assert!(report.has_finding(Finding::EllipseVariantLinearTermMismatch));
        assert!(!report.scalar_equivalent);
        // The printed discriminant formula is provably the discriminant of
        // the correct quadratic part, so the signs always agree.
        assert!(report.delta_sign_match);
        assert_eq!(report.printed_delta, Some(rat_int(12288)));
        assert_eq!(report.derived_delta, rat_int(12288));
        assert!(report.has_finding(Finding::PrintedMembershipFailure));
        assert_eq!(report.membership_residuals.len(), 8);
    }

    #[test]
    fn audit_figure1_parabola() {
        let report = audit(&figure1_spec(), 6, 1).unwrap();
        assert!(report.has_finding(Finding::ParabolaY2Mismatch));
        assert!(report.has_finding(Finding::ParabolaDeltaMismatch));
        assert!(report.has_finding(Finding::Figure1CaptionMismatch));
        assert_eq!(report.printed_delta, Some(rat_int(96)));
        assert_eq!(report.derived_delta, rat_int(0));
        assert!(report
            .derived_quadric
            .scalar_equivalent(&ImplicitQuadric::from_ints([1, -4, 4, 12, -18, 15])));
    }

    #[test]
    fn audit_circle_has_no_findings() {
        let spec = ConicSpec::circle(Point::origin(), rat_int(1));
        let report = audit(&spec, 12, 3).unwrap();
        assert!(report.printed_quadric.is_none());
        assert!(report.printed_delta.is_none());
        assert!(report.scalar_equivalent);
        assert!(report.delta_sign_match);
        assert!(report.findings.is_empty());
        assert_eq!(report.membership_residuals.len(), 12);
        for r in &report.membership_residuals {
            assert!(r.residual.abs() < 1e-8, "residual {}", r.residual);
        }
    }

    #[test]
    fn audit_is_deterministic() {
        let spec = figure1_spec();
        let a = audit(&spec, 16, 42).unwrap();
        let b = audit(&spec, 16, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
        let c = audit(&spec, 16, 43).unwrap();
        assert_ne!(a.membership_residuals, c.membership_residuals);
    }

    #[test]
    fn oracle_points_satisfy_the_definition() {
        let spec =
            ConicSpec::ellipse(Point::origin(), Point::from_ints(2, 0), rat_int(16)).unwrap();
        let points = oracle_member_points(&spec, 32, 11);
        assert_eq!(points.len(), 32);
        for p in points {
            let d1 = dist2_f64(p, [0.0, 0.0]);
            let d2 = dist2_f64(p, [2.0, 0.0]);
            // Every probe is sign-consistent and sits on one branch.
            assert!(d1 * d2 >= 0.0);
            let r1 = d1.abs().sqrt();
            let r2 = d2.abs().sqrt();
            let sum = (r1 + r2 - 4.0).abs();
            let diff = ((r1 - r2).abs() - 4.0).abs();
            assert!(sum.min(diff) < 1e-9, "branch residual {}", sum.min(diff));
        }
    }
}
