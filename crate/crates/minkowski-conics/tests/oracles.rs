//! Independent numeric oracles for the derived values used across the
//! test suite: a 1-D scan for foot parameters, root finding on the
//! defining distance equations for member points, and a coarse sign-grid
//! flood fill for component counts. None of these share code with the
//! library paths they cross-check.

use minkowski_conics::quadric::ImplicitQuadric;
use minkowski_conics::sampler::{sample, Window};
use minkowski_conics::*;

/// Float squared distance from `x` to the line point at parameter `t`.
fn line_dist2(x: [f64; 2], line: [f64; 4], t: f64) -> f64 {
    let p = [line[0] * t + line[1], line[2] * t + line[3]];
    dist2_f64(x, p)
}

/// Scan oracle: locate the unique critical point of `t -> dist2(x, l(t))`
/// by bracketing the sign change of its central difference and bisecting.
/// Returns `None` when no sign change is found (null direction).
fn scan_critical_param(x: [f64; 2], line: [f64; 4]) -> Option<f64> {
    let h = 1e-4;
    let deriv = |t: f64| (line_dist2(x, line, t + h) - line_dist2(x, line, t - h)) / (2.0 * h);
    let (lo, hi, steps) = (-64.0, 64.0, 4096);
    let dt = (hi - lo) / steps as f64;
    let mut prev_t = lo;
    let mut prev_g = deriv(lo);
    for i in 1..=steps {
        let t = lo + i as f64 * dt;
        let g = deriv(t);
        if prev_g == 0.0 {
            return Some(prev_t);
        }
        if prev_g * g < 0.0 {
            let (mut a, mut b, mut ga) = (prev_t, t, prev_g);
            for _ in 0..100 {
                let m = 0.5 * (a + b);
                let gm = deriv(m);
                if gm == 0.0 {
                    return Some(m);
                }
                if ga * gm < 0.0 {
                    b = m;
                } else {
                    a = m;
                    ga = gm;
                }
            }
            return Some(0.5 * (a + b));
        }
        prev_t = t;
        prev_g = g;
    }
    None
}

#[test]
fn scan_oracle_confirms_foot_parameters() {
    // Frozen example: x = (1,1) against t -> (t, 2t).
    let t = scan_critical_param([1.0, 1.0], [1.0, 0.0, 2.0, 0.0]).unwrap();
    assert!((t - 1.0 / 3.0).abs() < 1e-7, "scan found {t}");
    let line = ParamLine::from_ints(1, 0, 2, 0).unwrap();
    let exact = foot_param(&Point::from_ints(1, 1), &line).unwrap();
    assert_eq!(exact, rat(1, 3));
    assert!((t - rat_to_f64(&exact)).abs() < 1e-7);

    // Degenerate-to-Euclidean case c = 0.
    let t = scan_critical_param([0.0, 0.0], [1.0, 5.0, 0.0, 0.0]).unwrap();
    assert!((t + 5.0).abs() < 1e-7);
    let line = ParamLine::from_ints(1, 5, 0, 0).unwrap();
    assert_eq!(foot_param(&Point::origin(), &line).unwrap(), rat_int(-5));
}

#[test]
fn scan_oracle_confirms_foot_point_and_distance() {
    let x = [1.0, 1.0];
    let lparams = [1.0, 0.0, 2.0, 0.0];
    let t = scan_critical_param(x, lparams).unwrap();
    let foot = [lparams[0] * t + lparams[1], lparams[2] * t + lparams[3]];
    assert!((foot[0] - 1.0 / 3.0).abs() < 1e-7);
    assert!((foot[1] - 2.0 / 3.0).abs() < 1e-7);

    let line = ParamLine::from_ints(1, 0, 2, 0).unwrap();
    let exact_foot = foot_point(&Point::from_ints(1, 1), &line).unwrap();
    assert_eq!(exact_foot, Point::new(rat(1, 3), rat(2, 3)));

    // dist2 to the scanned foot matches the library's point-line distance.
    let scanned = dist2_f64(x, foot);
    let exact = dist2_point_line(&Point::from_ints(1, 1), &line).unwrap();
    assert_eq!(exact.value(), &rat(1, 3));
    assert!((scanned - 1.0 / 3.0).abs() < 1e-7);
}

#[test]
fn scan_oracle_agrees_with_closed_form_on_many_lines() {
    // Deterministic pseudo-random sweep, no RNG needed.
    let mut checked = 0;
    for ax in [-3i64, -1, 2, 5] {
        for cx in [-4i64, 0, 1, 3] {
            if ax * ax == cx * cx {
                continue;
            }
            for (px, py) in [(0i64, 0i64), (2, -3), (-1, 4)] {
                let line = ParamLine::from_ints(ax, 1, cx, -2).unwrap();
                let x = Point::from_ints(px, py);
                let exact = rat_to_f64(&foot_param(&x, &line).unwrap());
                if exact.abs() > 60.0 {
                    continue; // outside the scan bracket
                }
                let scanned =
                    scan_critical_param([px as f64, py as f64], [ax as f64, 1.0, cx as f64, -2.0])
                        .unwrap();
                assert!(
                    (scanned - exact).abs() < 1e-6 * (1.0 + exact.abs()),
                    "a={ax} c={cx} x=({px},{py}): scan {scanned} vs exact {exact}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}

/// Root of a scalar function by bisection, for the membership oracles.
fn bisect_root(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    assert!(flo * f(hi) < 0.0, "oracle bracket must straddle a root");
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn ellipse_member_found_by_root_finding() {
    // Along the x-axis the defining equation d1 + d2 = 4 for foci (0,0),
    // (2,0) has the root x = 3; the derived quadric must vanish there.
    let g = |x: f64| {
        let d1 = dist2_f64([x, 0.0], [0.0, 0.0]);
        let d2 = dist2_f64([x, 0.0], [2.0, 0.0]);
        d1.abs().sqrt() + d2.abs().sqrt() - 4.0
    };
    let root = bisect_root(g, 2.5, 10.0);
    assert!((root - 3.0).abs() < 1e-10);

    let q = ellipse_implicit_raw(&Point::origin(), &Point::from_ints(2, 0), &rat_int(16)).unwrap();
    assert!(q.eval(&Point::from_ints(3, 0)).is_integer());
    assert_eq!(q.eval(&Point::from_ints(3, 0)), rat_int(0));
    assert!(q.scalar_equivalent(&ImplicitQuadric::from_ints([-3, 0, 4, 6, 0, 9])));

    // The same quadric evaluates to near zero at the float root.
    let c = q.unit_coeffs_f64();
    let v = c[0] * root * root + c[3] * root + c[5];
    assert!(v.abs() < 1e-10);
}

#[test]
fn parabola_member_found_by_root_finding() {
    // Worked example: focus (2,3), directrix t -> (t, 2t). On the line
    // y = 0 the defining equation reduces to x^2 + 12x + 15 = 0, whose
    // left root is -6 + sqrt(21).
    let g = |x: f64| {
        let d1 = dist2_f64([x, 0.0], [2.0, 3.0]);
        let w = 2.0 * x; // c x - a y with (a, c) = (1, 2), b = d = 0
        let line_d2 = -(w * w) / (1.0 - 4.0);
        d1 - line_d2
    };
    let root = bisect_root(g, -3.0, 0.0);
    let expected = -6.0 + 21.0f64.sqrt();
    assert!((root - expected).abs() < 1e-10, "root {root}");

    // Both squared distances agree and are spacelike there (~2.679).
    let d1 = dist2_f64([root, 0.0], [2.0, 3.0]);
    assert!((d1 - 2.678788880706561).abs() < 1e-9);
    assert!(d1 > 0.0);
    let w = 2.0 * root;
    let line_d2 = -(w * w) / (1.0 - 4.0);
    assert!((d1 - line_d2).abs() < 1e-9);

    let q = parabola_implicit_raw(
        &Point::from_ints(2, 3),
        &ParamLine::from_ints(1, 0, 2, 0).unwrap(),
    )
    .unwrap();
    let c = q.unit_coeffs_f64();
    let v = c[0] * root * root + c[3] * root + c[5];
    assert!(v.abs() < 1e-10);
}

/// Brute-force component count: mark cells whose corners disagree in sign,
/// flood-fill 8-connected clusters of marked cells.
fn sign_grid_components(q: &ImplicitQuadric, window: (f64, f64, f64, f64), n: usize) -> usize {
    let (xmin, xmax, ymin, ymax) = window;
    let c = q.coeffs_f64();
    let eval =
        |x: f64, y: f64| c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x + c[4] * y + c[5];
    let xs: Vec<f64> = (0..=n)
        .map(|i| xmin + (xmax - xmin) * i as f64 / n as f64)
        .collect();
    let ys: Vec<f64> = (0..=n)
        .map(|j| ymin + (ymax - ymin) * j as f64 / n as f64)
        .collect();
    let vals: Vec<Vec<f64>> = ys
        .iter()
        .map(|&y| xs.iter().map(|&x| eval(x, y)).collect())
        .collect();
    let mut marked = vec![vec![false; n]; n];
    for j in 0..n {
        for i in 0..n {
            let corners = [
                vals[j][i],
                vals[j][i + 1],
                vals[j + 1][i],
                vals[j + 1][i + 1],
            ];
            let pos = corners.iter().any(|&v| v >= 0.0);
            let neg = corners.iter().any(|&v| v < 0.0);
            marked[j][i] = pos && neg;
        }
    }
    let mut seen = vec![vec![false; n]; n];
    let mut clusters = 0;
    for j in 0..n {
        for i in 0..n {
            if !marked[j][i] || seen[j][i] {
                continue;
            }
            clusters += 1;
            let mut stack = vec![(i, j)];
            seen[j][i] = true;
            while let Some((ci, cj)) = stack.pop() {
                for dj in -1i64..=1 {
                    for di in -1i64..=1 {
                        let ni = ci as i64 + di;
                        let nj = cj as i64 + dj;
                        if ni < 0 || nj < 0 || ni >= n as i64 || nj >= n as i64 {
                            continue;
                        }
                        let (ni, nj) = (ni as usize, nj as usize);
                        if marked[nj][ni] && !seen[nj][ni] {
                            seen[nj][ni] = true;
                            stack.push((ni, nj));
                        }
                    }
                }
            }
        }
    }
    clusters
}

#[test]
fn sign_grid_confirms_component_counts() {
    // Minkowski unit circle = Euclidean hyperbola: two branches.
    let circle = ImplicitQuadric::from_ints([1, 0, -1, 0, 0, -1]);
    assert_eq!(sign_grid_components(&circle, (-5.0, 5.0, -5.0, 5.0), 40), 2);
    let w = Window::new(-5.0, 5.0, -5.0, 5.0, 64).unwrap();
    assert_eq!(sample(&circle, &w).unwrap().component_count, 2);

    // Derived worked-example parabola: connected.
    let parabola = ImplicitQuadric::from_ints([1, -4, 4, 12, -18, 15]);
    assert_eq!(
        sign_grid_components(&parabola, (-10.0, 10.0, -10.0, 10.0), 40),
        1
    );
    let w = Window::new(-10.0, 10.0, -10.0, 10.0, 128).unwrap();
    assert_eq!(sample(&parabola, &w).unwrap().component_count, 1);

    // Two-focus witness quadric: Euclidean hyperbola, two branches.
    let witness = ImplicitQuadric::from_ints([-48, 0, 64, 96, 0, 144]);
    assert_eq!(
        sign_grid_components(&witness, (-5.0, 5.0, -5.0, 5.0), 40),
        2
    );
    let w = Window::new(-5.0, 5.0, -5.0, 5.0, 96).unwrap();
    assert_eq!(sample(&witness, &w).unwrap().component_count, 2);
}

#[test]
fn doubling_resolution_preserves_classifier_agreement() {
    // Sampler counts match the classifier's expected component count at a
    // base resolution and keep matching when the resolution doubles.
    let cases = [
        ImplicitQuadric::from_ints([-48, 0, 64, 96, 0, 144]), // hyperbola: 2
        ImplicitQuadric::from_ints([4, 0, 12, 0, -24, 9]),    // real ellipse: 1
        ImplicitQuadric::from_ints([1, -4, 4, 12, -18, 15]),  // parabola: 1
        ImplicitQuadric::from_ints([1, 0, 0, -4, 0, 3]),      // parallel lines: 2
    ];
    for q in cases {
        let kind = classify(&q).unwrap().kind;
        let expected = completeness(kind).components;
        for res in [128usize, 256] {
            let mut w = Window::auto_fit(&q);
            w.resolution = res;
            let got = sample(&q, &w).unwrap().component_count;
            assert_eq!(got, expected, "kind {kind:?} at res {res}");
        }
    }
}
