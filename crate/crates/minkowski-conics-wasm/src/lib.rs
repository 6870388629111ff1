//! Browser bindings for the Minkowski-conics library.
//!
//! Three entry points, all JSON-string in / JSON-string out so the page
//! needs no generated TypeScript glue beyond the wasm-bindgen loader:
//!
//! * [`render_scene`] — build a conic from its distance definition, classify
//!   it with Euclidean eyes, sample its real locus, and return polylines
//!   ready for a canvas;
//! * [`point_verdict`] — sign-consistency membership test for a clicked
//!   point against a two-focus spec;
//! * [`audit_report`] — the printed-vs-derived formula audit report.
//!
//! Numbers in requests are strings (`"2"`, `"-3/4"`, `"0.25"`) and parse as
//! exact rationals; the sampling window and response geometry are floats.
//! Errors come back as `{"error": "..."}` rather than exceptions.

use serde::{Deserialize, Serialize};
use wasm_bindgen::prelude::*;

use minkowski_conics::audit::audit;
use minkowski_conics::sampler::{sample, Window};
use minkowski_conics::{
    classify, classify_membership, completeness, default_membership_epsilon, format_rational,
    parse_rational, ConicSpec, ParamLine, Point, Rat, Sign,
};

#[derive(Deserialize)]
struct SpecRequest {
    kind: String,
    #[serde(default)]
    focus: Option<String>,
    #[serde(default)]
    focus2: Option<String>,
    #[serde(default)]
    k2: Option<String>,
    #[serde(default)]
    line: Option<String>,
}

#[derive(Deserialize)]
struct SceneRequest {
    #[serde(flatten)]
    spec: SpecRequest,
    #[serde(default)]
    window: Option<[f64; 4]>,
    #[serde(default)]
    resolution: Option<usize>,
}

#[derive(Deserialize)]
struct VerdictRequest {
    #[serde(flatten)]
    spec: SpecRequest,
    point: String,
    #[serde(default)]
    epsilon: Option<f64>,
}

#[derive(Deserialize)]
struct AuditRequest {
    #[serde(flatten)]
    spec: SpecRequest,
    #[serde(default)]
    probes: Option<usize>,
    #[serde(default)]
    seed: Option<u64>,
}

#[derive(Serialize)]
struct SceneResponse {
    equation: String,
    kind: &'static str,
    completeness: &'static str,
    delta_sign: &'static str,
    component_count: usize,
    vertex_count: usize,
    max_residual: f64,
    window: [f64; 4],
    foci: Vec<[f64; 2]>,
    directrix: Option<[f64; 4]>,
    polylines: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct VerdictResponse {
    branch: &'static str,
    d1_sq: String,
    d2_sq: String,
    d1_sign: &'static str,
    d2_sign: &'static str,
    k2_sign: &'static str,
}

fn fail(message: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": message.to_string() }).to_string()
}

fn parse_pair(text: &str, what: &str) -> Result<Point, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("{what}: expected \"X,Y\""));
    }
    let x = parse_rational(parts[0]).map_err(|e| format!("{what}: {e}"))?;
    let y = parse_rational(parts[1]).map_err(|e| format!("{what}: {e}"))?;
    Ok(Point::new(x, y))
}

fn parse_rat(text: &str, what: &str) -> Result<Rat, String> {
    parse_rational(text).map_err(|e| format!("{what}: {e}"))
}

fn build_spec(req: &SpecRequest) -> Result<ConicSpec, String> {
    let focus = || -> Result<Point, String> {
        parse_pair(req.focus.as_deref().ok_or("focus is required")?, "focus")
    };
    match req.kind.as_str() {
        "circle" => {
            let k2 = parse_rat(req.k2.as_deref().ok_or("k2 is required")?, "k2")?;
            Ok(ConicSpec::circle(focus()?, k2))
        }
        "ellipse" | "hyperbola" => {
            let f2 = parse_pair(req.focus2.as_deref().ok_or("focus2 is required")?, "focus2")?;
            let k2 = parse_rat(req.k2.as_deref().ok_or("k2 is required")?, "k2")?;
            if req.kind == "ellipse" {
                ConicSpec::ellipse(focus()?, f2, k2).map_err(|e| e.name().to_string())
            } else {
                ConicSpec::hyperbola(focus()?, f2, k2).map_err(|e| e.name().to_string())
            }
        }
        "parabola" => {
            let text = req.line.as_deref().ok_or("line is required")?;
            let parts: Vec<&str> = text.split(',').collect();
            if parts.len() != 4 {
                return Err("line: expected \"a,b,c,d\"".into());
            }
            let vals: Vec<Rat> = parts
                .iter()
                .map(|p| parse_rat(p, "line"))
                .collect::<Result<_, _>>()?;
            let line = ParamLine::new(
                vals[0].clone(),
                vals[1].clone(),
                vals[2].clone(),
                vals[3].clone(),
            )
            .map_err(|e| e.name().to_string())?;
            ConicSpec::parabola(focus()?, line).map_err(|e| e.name().to_string())
        }
        other => Err(format!("unknown kind {other:?}")),
    }
}

fn spec_decorations(spec: &ConicSpec) -> (Vec<[f64; 2]>, Option<[f64; 4]>) {
    match spec {
        ConicSpec::Circle { center, .. } => (vec![center.to_f64()], None),
        ConicSpec::Ellipse { focus1, focus2, .. } | ConicSpec::Hyperbola { focus1, focus2, .. } => {
            (vec![focus1.to_f64(), focus2.to_f64()], None)
        }
        ConicSpec::Parabola { focus, directrix } => {
            (vec![focus.to_f64()], Some(directrix.params_f64()))
        }
    }
}

fn render_scene_impl(request: &str) -> Result<String, String> {
    let req: SceneRequest = serde_json::from_str(request).map_err(|e| e.to_string())?;
    let spec = build_spec(&req.spec)?;
    let quadric = spec.implicit().map_err(|e| e.name().to_string())?;
    let class = classify(&quadric).map_err(|e| e.name().to_string())?;
    let verdict = completeness(class.kind);

    let resolution = req.resolution.unwrap_or(256).clamp(2, 2048);
    let window = match req.window {
        Some([xmin, xmax, ymin, ymax]) => {
            Window::new(xmin, xmax, ymin, ymax, resolution).map_err(|e| e.name().to_string())?
        }
        None => {
            let mut w = Window::auto_fit(&quadric);
            w.resolution = resolution;
            w
        }
    };
    let curve = sample(&quadric, &window).map_err(|e| e.name().to_string())?;
    let (foci, directrix) = spec_decorations(&spec);

    let response = SceneResponse {
        equation: quadric.to_string(),
        kind: class.kind.id(),
        completeness: verdict.value.id(),
        delta_sign: Sign::of(&class.delta).id(),
        component_count: curve.component_count,
        vertex_count: curve.vertex_count(),
        max_residual: curve.max_residual,
        window: [window.xmin, window.xmax, window.ymin, window.ymax],
        foci,
        directrix,
        polylines: curve.polylines,
    };
    serde_json::to_string(&response).map_err(|e| e.to_string())
}

/// Synthesize, classify, and sample a conic; returns a JSON scene.
#[wasm_bindgen]
pub fn render_scene(request: &str) -> String {
    match render_scene_impl(request) {
        Ok(json) => json,
        Err(message) => fail(message),
    }
}

fn point_verdict_impl(request: &str) -> Result<String, String> {
    let req: VerdictRequest = serde_json::from_str(request).map_err(|e| e.to_string())?;
    let spec = build_spec(&req.spec)?;
    let x = parse_pair(&req.point, "point")?;
    let epsilon = req.epsilon.unwrap_or_else(|| match &spec {
        ConicSpec::Ellipse { k2, .. } | ConicSpec::Hyperbola { k2, .. } => {
            default_membership_epsilon(k2)
        }
        _ => 1e-9,
    });
    let verdict = classify_membership(&x, &spec, epsilon).map_err(|e| e.name().to_string())?;
    let k2_sign = match &spec {
        ConicSpec::Ellipse { k2, .. } | ConicSpec::Hyperbola { k2, .. } => Sign::of(k2).id(),
        _ => unreachable!("classify_membership rejects other kinds"),
    };
    let response = VerdictResponse {
        branch: verdict.branch.id(),
        d1_sq: format_rational(verdict.d1_sq.value()),
        d2_sq: format_rational(verdict.d2_sq.value()),
        d1_sign: verdict.d1_sq.sign().id(),
        d2_sign: verdict.d2_sq.sign().id(),
        k2_sign,
    };
    serde_json::to_string(&response).map_err(|e| e.to_string())
}

/// Membership verdict for a point against a two-focus spec.
#[wasm_bindgen]
pub fn point_verdict(request: &str) -> String {
    match point_verdict_impl(request) {
        Ok(json) => json,
        Err(message) => fail(message),
    }
}

fn audit_report_impl(request: &str) -> Result<String, String> {
    let req: AuditRequest = serde_json::from_str(request).map_err(|e| e.to_string())?;
    let spec = build_spec(&req.spec)?;
    let probes = req.probes.unwrap_or(16).min(512);
    let seed = req.seed.unwrap_or(0);
    let report = audit(&spec, probes, seed).map_err(|e| e.name().to_string())?;
    Ok(report.to_json())
}

/// Printed-vs-derived formula audit as JSON.
#[wasm_bindgen]
pub fn audit_report(request: &str) -> String {
    match audit_report_impl(request) {
        Ok(json) => json,
        Err(message) => fail(message),
    }
}
