//! Extraction of the real locus of a quadric as polylines.
//!
//! Marching squares over a rectangular window: grid values, sign-change
//! edges with linear interpolation, deterministic segment assembly, and a
//! union-find component count over shared cell edges. Grid evaluation may be
//! split across worker threads; everything downstream of the value grid is
//! a sequential pass, so output is bit-identical for any thread count.
//!
//! Quadrics whose locus is a single line (coincident lines, or degree-one
//! input) never change sign, which plain marching squares cannot see; those
//! are detected exactly and marched on their affine factor instead — the
//! locus is identical and the scan becomes sound.

use std::collections::HashMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use num_traits::Zero;

use crate::error::ConicError;
use crate::lens::{classify, coincident_line_factor, discriminant, ConicKind};
use crate::quadric::ImplicitQuadric;
use crate::rational::{rat_to_f64, Rat};

/// Axis-aligned sampling window with a per-axis cell count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    /// Cells per axis; the grid has `resolution + 1` vertices per axis.
    pub resolution: usize,
}

impl Window {
    pub const DEFAULT_RESOLUTION: usize = 512;
    pub const AUTO_HALF_WIDTH: f64 = 10.0;

    pub fn new(
        xmin: f64,
        xmax: f64,
        ymin: f64,
        ymax: f64,
        resolution: usize,
    ) -> Result<Window, ConicError> {
        let finite = [xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite());
        if !finite || xmin >= xmax || ymin >= ymax || resolution < 2 {
            return Err(ConicError::InvalidWindow);
        }
        Ok(Window {
            xmin,
            xmax,
            ymin,
            ymax,
            resolution,
        })
    }

    pub fn centered(
        cx: f64,
        cy: f64,
        half_width: f64,
        resolution: usize,
    ) -> Result<Window, ConicError> {
        Window::new(
            cx - half_width,
            cx + half_width,
            cy - half_width,
            cy + half_width,
            resolution,
        )
    }

    /// Window centered on the quadric's center (nondegenerate quadratic
    /// part) or parabola vertex, with half-width 10. Component counting is
    /// only meaningful on a region that contains the interesting part of
    /// the locus; this picks one deterministically.
    pub fn auto_fit(q: &ImplicitQuadric) -> Window {
        let [cx, cy] = curve_anchor(q);
        let cx = if cx.is_finite() { cx } else { 0.0 };
        let cy = if cy.is_finite() { cy } else { 0.0 };
        Window::centered(cx, cy, Window::AUTO_HALF_WIDTH, Window::DEFAULT_RESOLUTION)
            .expect("auto window is valid")
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    fn x_at(&self, i: usize) -> f64 {
        self.xmin + self.width() * (i as f64) / (self.resolution as f64)
    }

    fn y_at(&self, j: usize) -> f64 {
        self.ymin + self.height() * (j as f64) / (self.resolution as f64)
    }
}

/// Center of a central conic, vertex of a parabola, or a point on the
/// locus of a degenerate one; `[0, 0]` as the last resort.
fn curve_anchor(q: &ImplicitQuadric) -> [f64; 2] {
    let delta = discriminant(q);
    if !delta.is_zero() {
        // Gradient zero: 2Ax + By = -D, Bx + 2Cy = -E; determinant is -delta.
        let four = Rat::from_integer(4.into());
        let two = Rat::from_integer(2.into());
        let det = four * &q.a * &q.c - &q.b * &q.b;
        let x = (&q.b * &q.e - &two * &q.c * &q.d) / &det;
        let y = (&q.b * &q.d - &two * &q.a * &q.e) / &det;
        return [rat_to_f64(&x), rat_to_f64(&y)];
    }
    let degree_two = !(q.a.is_zero() && q.b.is_zero() && q.c.is_zero());
    if !degree_two {
        // Line D x + E y + F = 0: the point closest to the origin.
        let [_, _, _, d, e, f] = q.coeffs_f64();
        let n2 = d * d + e * e;
        if n2 > 0.0 {
            return [-f * d / n2, -f * e / n2];
        }
        return [0.0, 0.0];
    }
    // Repeated-axis family: write Q = u^2 + pu*u + pv*v + f in the
    // orthogonal coordinates u = n.x, v = (n2, -n1).x with (n.x)^2 equal to
    // the quadratic part; the parabola vertex is at du(Q) = 0, Q = 0.
    let sign = {
        let trace = &q.a + &q.c;
        if trace < Rat::zero() {
            -Rat::from_integer(1.into())
        } else {
            Rat::from_integer(1.into())
        }
    };
    let qq = q.scale(&sign);
    let [a, _, c, d, e, f] = qq.coeffs_f64();
    let (n1, n2) = if a > 0.0 {
        (a.sqrt(), qq.coeffs_f64()[1] / (2.0 * a.sqrt()))
    } else {
        (0.0, c.sqrt())
    };
    let rho = n1 * n1 + n2 * n2;
    if rho == 0.0 {
        return [0.0, 0.0];
    }
    let pu = (d * n1 + e * n2) / rho;
    let pv = (d * n2 - e * n1) / rho;
    let u = -pu / 2.0;
    let v = if pv.abs() > 1e-12 {
        -(f - pu * pu / 4.0) / pv
    } else {
        0.0
    };
    [(u * n1 + v * n2) / rho, (u * n2 - v * n1) / rho]
}

/// Field the marching scan evaluates: either the quadric itself or, for
/// single-line loci, its exact affine factor.
enum ScanField {
    Quadric([f64; 6]),
    Affine([f64; 3]),
}

impl ScanField {
    fn eval(&self, x: f64, y: f64) -> f64 {
        match self {
            ScanField::Quadric(c) => {
                c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x + c[4] * y + c[5]
            }
            ScanField::Affine(c) => c[0] * x + c[1] * y + c[2],
        }
    }

    fn gradient(&self, x: f64, y: f64) -> [f64; 2] {
        match self {
            ScanField::Quadric(c) => [
                2.0 * c[0] * x + c[1] * y + c[3],
                c[1] * x + 2.0 * c[2] * y + c[4],
            ],
            ScanField::Affine(c) => [c[0], c[1]],
        }
    }
}

/// Polylines of the extracted locus.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    /// Vertex chains in window coordinates; closed loops repeat their first
    /// vertex at the end.
    pub polylines: Vec<Vec<[f64; 2]>>,
    /// Connected components of the extracted locus (union-find over cell
    /// edges, with exact-grid-vertex coincidences merged).
    pub component_count: usize,
    /// Largest `|Q(v)|` over emitted vertices, with `Q` unit-normalized.
    pub max_residual: f64,
}

impl SampledCurve {
    /// An empty locus is a valid outcome, not an error.
    pub fn is_empty_locus(&self) -> bool {
        self.component_count == 0
    }

    pub fn vertex_count(&self) -> usize {
        self.polylines.iter().map(Vec::len).sum()
    }
}

/// Single-threaded sampling. See [`sample_threaded`].
pub fn sample(q: &ImplicitQuadric, window: &Window) -> Result<SampledCurve, ConicError> {
    sample_threaded(q, window, 1)
}

/// Marching-squares extraction of the real locus.
///
/// Grid evaluation is split row-wise over `threads` workers; every value is
/// computed by the same expression at the same coordinates, and assembly is
/// a deterministic sequential pass, so results are identical for any thread
/// count. Exactly-zero grid values count as positive. Saddle cells are
/// disambiguated by the field's sign at the cell center. Each emitted
/// vertex is polished by Newton steps along the field gradient.
pub fn sample_threaded(
    q: &ImplicitQuadric,
    window: &Window,
    threads: usize,
) -> Result<SampledCurve, ConicError> {
    if q.is_zero() {
        return Err(ConicError::DegeneratePlane);
    }
    let unit = q.unit_coeffs_f64();
    let field = match coincident_line_factor(q) {
        Some((u, v, w)) => {
            let line =
                ImplicitQuadric::from_coeffs([Rat::zero(), Rat::zero(), Rat::zero(), u, v, w]);
            let c = line.unit_coeffs_f64();
            ScanField::Affine([c[3], c[4], c[5]])
        }
        None => ScanField::Quadric(unit),
    };

    let res = window.resolution;
    let n = res + 1;
    let xs: Vec<f64> = (0..n).map(|i| window.x_at(i)).collect();
    let ys: Vec<f64> = (0..n).map(|j| window.y_at(j)).collect();

    let mut values = vec![0.0f64; n * n];
    let workers = threads.max(1).min(n);
    if workers <= 1 {
        for (j, row) in values.chunks_mut(n).enumerate() {
            let y = ys[j];
            for (i, slot) in row.iter_mut().enumerate() {
                *slot = field.eval(xs[i], y);
            }
        }
    } else {
        let rows_per = n.div_ceil(workers);
        std::thread::scope(|scope| {
            for (chunk_idx, chunk) in values.chunks_mut(rows_per * n).enumerate() {
                let xs = &xs;
                let ys = &ys;
                let field = &field;
                scope.spawn(move || {
                    let j0 = chunk_idx * rows_per;
                    for (dj, row) in chunk.chunks_mut(n).enumerate() {
                        let y = ys[j0 + dj];
                        for (i, slot) in row.iter_mut().enumerate() {
                            *slot = field.eval(xs[i], y);
                        }
                    }
                });
            }
        });
    }

    // Edge ids: horizontals first (res per row, n rows), then verticals.
    let h_edges = res * n;
    let edge_count = h_edges + n * res;
    let h_edge = |i: usize, j: usize| j * res + i;
    let v_edge = |i: usize, j: usize| h_edges + j * n + i;
    let positive = |v: f64| v >= 0.0;

    let mut segments: Vec<(usize, usize)> = Vec::new();
    for j in 0..res {
        for i in 0..res {
            let v00 = values[j * n + i];
            let v10 = values[j * n + i + 1];
            let v11 = values[(j + 1) * n + i + 1];
            let v01 = values[(j + 1) * n + i];
            let mut case = 0usize;
            if positive(v00) {
                case |= 1;
            }
            if positive(v10) {
                case |= 2;
            }
            if positive(v11) {
                case |= 4;
            }
            if positive(v01) {
                case |= 8;
            }
            let bottom = h_edge(i, j);
            let top = h_edge(i, j + 1);
            let left = v_edge(i, j);
            let right = v_edge(i + 1, j);
            match case {
                0 | 15 => {}
                1 | 14 => segments.push((left, bottom)),
                2 | 13 => segments.push((bottom, right)),
                3 | 12 => segments.push((left, right)),
                4 | 11 => segments.push((top, right)),
                6 | 9 => segments.push((bottom, top)),
                7 | 8 => segments.push((left, top)),
                5 => {
                    // Positive at bottom-left and top-right.
                    let center = field.eval(0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1]));
                    if positive(center) {
                        segments.push((left, top));
                        segments.push((bottom, right));
                    } else {
                        segments.push((left, bottom));
                        segments.push((top, right));
                    }
                }
                10 => {
                    // Positive at bottom-right and top-left.
                    let center = field.eval(0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1]));
                    if positive(center) {
                        segments.push((left, bottom));
                        segments.push((top, right));
                    } else {
                        segments.push((left, top));
                        segments.push((bottom, right));
                    }
                }
                _ => unreachable!(),
            }
        }
    }

    if segments.is_empty() {
        return Ok(SampledCurve {
            polylines: Vec::new(),
            component_count: 0,
            max_residual: 0.0,
        });
    }

    // Raw (pre-refinement) vertex for a crossing edge, plus the grid vertex
    // index when the interpolation lands exactly on one.
    let edge_vertex = |edge: usize| -> ([f64; 2], Option<usize>) {
        if edge < h_edges {
            let j = edge / res;
            let i = edge % res;
            let va = values[j * n + i];
            let vb = values[j * n + i + 1];
            let t = va / (va - vb);
            let x = xs[i] + t * (xs[i + 1] - xs[i]);
            let grid = if va == 0.0 {
                Some(j * n + i)
            } else if vb == 0.0 {
                Some(j * n + i + 1)
            } else {
                None
            };
            ([x, ys[j]], grid)
        } else {
            let rest = edge - h_edges;
            let j = rest / n;
            let i = rest % n;
            let va = values[j * n + i];
            let vb = values[(j + 1) * n + i];
            let t = va / (va - vb);
            let y = ys[j] + t * (ys[j + 1] - ys[j]);
            let grid = if va == 0.0 {
                Some(j * n + i)
            } else if vb == 0.0 {
                Some((j + 1) * n + i)
            } else {
                None
            };
            ([xs[i], y], grid)
        }
    };

    let mut uf = UnionFind::new(edge_count);
    for &(a, b) in &segments {
        uf.union(a, b);
    }
    // Crossings that land exactly on a grid vertex are shared by every edge
    // incident to it even though the edges differ; merge them so a curve
    // passing through a grid vertex is not split in two.
    let mut vertex_owner: HashMap<usize, usize> = HashMap::new();
    for &(a, b) in &segments {
        for edge in [a, b] {
            if let (_, Some(grid)) = edge_vertex(edge) {
                match vertex_owner.get(&grid) {
                    Some(&owner) => uf.union(owner, edge),
                    None => {
                        vertex_owner.insert(grid, edge);
                    }
                }
            }
        }
    }

    let mut used_edges: Vec<usize> = segments.iter().flat_map(|&(a, b)| [a, b]).collect();
    used_edges.sort_unstable();
    used_edges.dedup();
    let mut roots: Vec<usize> = used_edges.iter().map(|&e| uf.find(e)).collect();
    roots.sort_unstable();
    roots.dedup();
    let component_count = roots.len();

    // Deterministic chain assembly over edge adjacency: open chains first,
    // start edges in ascending id order, then remaining cycles.
    let mut adjacency: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (idx, &(a, b)) in segments.iter().enumerate() {
        adjacency.entry(a).or_default().push((idx, b));
        adjacency.entry(b).or_default().push((idx, a));
    }
    let mut seg_visited = vec![false; segments.len()];
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let walk = |start: usize, seg_visited: &mut Vec<bool>| -> Vec<usize> {
        let mut chain = vec![start];
        let mut current = start;
        loop {
            let next = adjacency[&current]
                .iter()
                .find(|(seg, _)| !seg_visited[*seg])
                .copied();
            match next {
                None => break,
                Some((seg, other)) => {
                    seg_visited[seg] = true;
                    chain.push(other);
                    current = other;
                }
            }
        }
        chain
    };
    for &edge in &used_edges {
        if adjacency[&edge].len() == 1 && !seg_visited[adjacency[&edge][0].0] {
            chains.push(walk(edge, &mut seg_visited));
        }
    }
    for &edge in &used_edges {
        if adjacency[&edge].iter().any(|(seg, _)| !seg_visited[*seg]) {
            chains.push(walk(edge, &mut seg_visited));
        }
    }

    // Refine each distinct edge vertex once; polylines share the results.
    let mut refined: HashMap<usize, [f64; 2]> = HashMap::new();
    let mut max_residual = 0.0f64;
    let eval_unit = |p: [f64; 2]| -> f64 {
        unit[0] * p[0] * p[0]
            + unit[1] * p[0] * p[1]
            + unit[2] * p[1] * p[1]
            + unit[3] * p[0]
            + unit[4] * p[1]
            + unit[5]
    };
    let polylines: Vec<Vec<[f64; 2]>> = chains
        .iter()
        .map(|chain| {
            chain
                .iter()
                .map(|&edge| {
                    let point = *refined.entry(edge).or_insert_with(|| {
                        let (raw, _) = edge_vertex(edge);
                        newton_refine(&field, raw)
                    });
                    let r = eval_unit(point).abs();
                    if r > max_residual {
                        max_residual = r;
                    }
                    point
                })
                .collect()
        })
        .collect();

    Ok(SampledCurve {
        polylines,
        component_count,
        max_residual,
    })
}

/// Newton polish along the field gradient: quadratic convergence away from
/// singular points, a handful of damped steps near them. One step suffices
/// in the regular case; the cap keeps vertex residuals within tolerance
/// near degenerate crossings where a single step stalls.
fn newton_refine(field: &ScanField, mut p: [f64; 2]) -> [f64; 2] {
    for _ in 0..8 {
        let g = field.eval(p[0], p[1]);
        let [gx, gy] = field.gradient(p[0], p[1]);
        let norm2 = gx * gx + gy * gy;
        if norm2 < 1e-30 || g.abs() <= 1e-13 * (1.0 + norm2.sqrt()) {
            break;
        }
        let step = g / norm2;
        p = [p[0] - step * gx, p[1] - step * gy];
    }
    p
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> UnionFind {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut id: usize) -> usize {
        while self.parent[id] != id {
            self.parent[id] = self.parent[self.parent[id]];
            id = self.parent[id];
        }
        id
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // Smaller root wins: keeps the structure independent of call order.
            if ra < rb {
                self.parent[rb] = ra;
            } else {
                self.parent[ra] = rb;
            }
        }
    }
}

/// CSV with header `polyline_id,x,y` and one row per vertex, floats with
/// 17 significant digits.
pub fn write_csv<W: Write>(curve: &SampledCurve, out: &mut W) -> io::Result<()> {
    writeln!(out, "polyline_id,x,y")?;
    for (id, polyline) in curve.polylines.iter().enumerate() {
        for p in polyline {
            writeln!(out, "{},{:.16e},{:.16e}", id, p[0], p[1])?;
        }
    }
    Ok(())
}

pub fn emit_csv(curve: &SampledCurve, path: &Path) -> io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_csv(curve, &mut out)?;
    out.flush()
}

/// Markers drawn alongside the curve.
#[derive(Debug, Clone, Default)]
pub struct SvgDecorations {
    /// Foci (or circle center), drawn as filled dots.
    pub foci: Vec<[f64; 2]>,
    /// Directrix line parameters `(a, b, c, d)`, drawn dashed and clipped
    /// to the window.
    pub directrix: Option<[f64; 4]>,
}

/// SVG with the window mapped to the viewBox, one path per polyline,
/// stroke width 0.5% of the window width, foci as filled circles and the
/// directrix as a dashed line.
pub fn write_svg<W: Write>(
    curve: &SampledCurve,
    window: &Window,
    deco: &SvgDecorations,
    out: &mut W,
) -> io::Result<()> {
    let w = window.width();
    let h = window.height();
    let stroke = 0.005 * w;
    // Flip the y axis: plane (x, y) maps to SVG (x, -y).
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        window.xmin, -window.ymax, w, h
    )?;
    if let Some([a, b, c, d]) = deco.directrix {
        if let Some(((x0, y0), (x1, y1))) = clip_param_line(a, b, c, d, window) {
            writeln!(
                out,
                r##"  <line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}" stroke="#7f7f7f" stroke-width="{:.6}" stroke-dasharray="{:.6} {:.6}"/>"##,
                x0,
                -y0,
                x1,
                -y1,
                stroke,
                2.0 * stroke,
                2.0 * stroke
            )?;
        }
    }
    for polyline in &curve.polylines {
        if polyline.is_empty() {
            continue;
        }
        let mut d_attr = String::new();
        for (idx, p) in polyline.iter().enumerate() {
            let cmd = if idx == 0 { 'M' } else { 'L' };
            d_attr.push_str(&format!("{cmd}{:.6},{:.6} ", p[0], -p[1]));
        }
        writeln!(
            out,
            r##"  <path d="{}" fill="none" stroke="#1f77b4" stroke-width="{:.6}"/>"##,
            d_attr.trim_end(),
            stroke
        )?;
    }
    for focus in &deco.foci {
        writeln!(
            out,
            r##"  <circle cx="{:.6}" cy="{:.6}" r="{:.6}" fill="#d62728"/>"##,
            focus[0],
            -focus[1],
            2.0 * stroke
        )?;
    }
    writeln!(out, "</svg>")
}

pub fn emit_svg(
    curve: &SampledCurve,
    window: &Window,
    deco: &SvgDecorations,
    path: &Path,
) -> io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_svg(curve, window, deco, &mut out)?;
    out.flush()
}

/// Clips the parametric line `t -> (a t + b, c t + d)` to the window;
/// `None` when it misses.
fn clip_param_line(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    window: &Window,
) -> Option<((f64, f64), (f64, f64))> {
    let mut t_lo = f64::NEG_INFINITY;
    let mut t_hi = f64::INFINITY;
    for (rate, start, lo, hi) in [
        (a, b, window.xmin, window.xmax),
        (c, d, window.ymin, window.ymax),
    ] {
        if rate == 0.0 {
            if start < lo || start > hi {
                return None;
            }
            continue;
        }
        let (mut t0, mut t1) = ((lo - start) / rate, (hi - start) / rate);
        if t0 > t1 {
            std::mem::swap(&mut t0, &mut t1);
        }
        t_lo = t_lo.max(t0);
        t_hi = t_hi.min(t1);
    }
    if !(t_lo.is_finite() && t_hi.is_finite()) || t_lo >= t_hi {
        return None;
    }
    Some(((a * t_lo + b, c * t_lo + d), (a * t_hi + b, c * t_hi + d)))
}

/// Component-count sanity bound used by callers that pair the sampler with
/// the exact classifier.
pub fn expected_components(kind: ConicKind) -> Option<usize> {
    match kind {
        ConicKind::RealEllipse | ConicKind::Parabola | ConicKind::IntersectingLines => Some(1),
        ConicKind::CoincidentLines => Some(1),
        ConicKind::Hyperbola | ConicKind::ParallelLines => Some(2),
        ConicKind::ImaginaryEllipse | ConicKind::EmptyParallel => Some(0),
        ConicKind::Point => None,
    }
}

/// Convenience: classify, auto-fit, sample, in one call.
pub fn sample_auto(q: &ImplicitQuadric, threads: usize) -> Result<SampledCurve, ConicError> {
    let _ = classify(q)?;
    sample_threaded(q, &Window::auto_fit(q), threads)
}
