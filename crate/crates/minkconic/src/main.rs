//! `minkconic`: conics on the Minkowski plane from the command line.
//!
//! Thin adapter over the `minkowski-conics` library: every subcommand
//! parses its inputs into exact rationals, calls one library entry point,
//! and prints the result. No numeric logic lives here.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain error (the error name is
//! printed on stderr), 4 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use minkowski_conics::audit::audit;
use minkowski_conics::sampler::{emit_csv, emit_svg, sample_threaded, SvgDecorations, Window};
use minkowski_conics::{
    classify, classify_membership, completeness, default_membership_epsilon, parse_rational,
    ConicError, ConicSpec, ImplicitQuadric, ParamLine, Point, Rat,
};

#[derive(Parser)]
#[command(
    name = "minkconic",
    version,
    about = "Conics on the two-dimensional Minkowski plane",
    long_about = "Constructs, classifies, samples, and audits conic sections defined by \
                  Minkowski (signature +-) distances. Coordinates and constants are exact \
                  rationals: pass them as integers, num/den fractions, or decimal strings."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArgs {
    /// Conic kind: circle, ellipse, hyperbola, or parabola.
    #[arg(long)]
    kind: Option<String>,
    /// Focus (circle: center) as "X,Y".
    #[arg(long, allow_hyphen_values = true)]
    focus: Option<String>,
    /// Second focus (ellipse/hyperbola) as "X,Y".
    #[arg(long, allow_hyphen_values = true)]
    focus2: Option<String>,
    /// Squared focal constant k^2; may be negative.
    #[arg(long, allow_hyphen_values = true)]
    k2: Option<String>,
    /// Directrix parameters "a,b,c,d" for the line t -> (a t + b, c t + d).
    #[arg(long, allow_hyphen_values = true)]
    line: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical implicit quadric derived from the definition.
    Synth {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Print the Euclidean class and completeness verdict.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Classify an explicit quadric "A,B,C,D,E,F" instead of a spec.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["kind", "focus", "focus2", "k2", "line"])]
        quadric: Option<String>,
    },
    /// Test a point against a two-focus spec (ellipse/hyperbola).
    CheckPoint {
        /// Point to test, as "X,Y".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[command(flatten)]
        spec: SpecArgs,
        /// Branch residual tolerance; defaults to 1e-9 * (1 + sqrt(|k^2|)).
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Compare the published closed-form equations against the derived
    /// ones and write a JSON report.
    Audit {
        #[command(flatten)]
        spec: SpecArgs,
        /// Number of oracle-verified member points to probe.
        #[arg(long, default_value_t = 16)]
        probes: usize,
        /// Seed for the probe ray generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the real locus and emit SVG and/or CSV.
    Plot {
        #[command(flatten)]
        spec: SpecArgs,
        /// Plot an explicit quadric "A,B,C,D,E,F" instead of a spec.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["kind", "focus", "focus2", "k2", "line"])]
        quadric: Option<String>,
        /// Window as "xmin,xmax,ymin,ymax"; auto-fitted when omitted.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Grid cells per axis.
        #[arg(long, default_value_t = Window::DEFAULT_RESOLUTION)]
        res: usize,
        /// Worker threads for grid evaluation (output is identical for any
        /// value).
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// SVG output path.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// CSV output path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    Domain(ConicError),
    Io(PathBuf, std::io::Error),
}

impl From<ConicError> for CliError {
    fn from(e: ConicError) -> CliError {
        CliError::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(), // clap prints and exits 2 (0 for --help/--version)
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("{}", e.name());
            ExitCode::from(3)
        }
        Err(CliError::Io(path, e)) => {
            eprintln!("io error: {}: {}", path.display(), e);
            ExitCode::from(4)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Synth { spec } => {
            let quadric = build_spec(&spec)?.implicit()?;
            println!("{quadric}");
            Ok(())
        }
        Command::Classify { spec, quadric } => {
            let q = match quadric {
                Some(text) => parse_quadric(&text)?,
                None => build_spec(&spec)?.implicit()?,
            };
            let class = classify(&q)?;
            let verdict = completeness(class.kind);
            println!("{}, {}", class.kind.id(), verdict.value.id());
            Ok(())
        }
        Command::CheckPoint {
            point,
            spec,
            epsilon,
        } => {
            let spec = build_spec(&spec)?;
            if !matches!(
                spec,
                ConicSpec::Ellipse { .. } | ConicSpec::Hyperbola { .. }
            ) {
                return Err(CliError::Usage(
                    "check-point requires --kind ellipse or --kind hyperbola".into(),
                ));
            }
            let x = parse_point(&point)?;
            let epsilon = epsilon.unwrap_or_else(|| match &spec {
                ConicSpec::Ellipse { k2, .. } | ConicSpec::Hyperbola { k2, .. } => {
                    default_membership_epsilon(k2)
                }
                _ => 1e-9,
            });
            let verdict = classify_membership(&x, &spec, epsilon)?;
            println!(
                "{} d1^2={} d2^2={}",
                verdict.branch.id(),
                minkowski_conics::format_rational(verdict.d1_sq.value()),
                minkowski_conics::format_rational(verdict.d2_sq.value()),
            );
            Ok(())
        }
        Command::Audit {
            spec,
            probes,
            seed,
            out,
        } => {
            let spec = build_spec(&spec)?;
            let report = audit(&spec, probes, seed)?;
            let json = report.to_json();
            match out {
                Some(path) => {
                    std::fs::write(&path, json).map_err(|e| CliError::Io(path.clone(), e))?
                }
                None => print!("{json}"),
            }
            Ok(())
        }
        Command::Plot {
            spec,
            quadric,
            window,
            res,
            threads,
            svg,
            csv,
        } => {
            if svg.is_none() && csv.is_none() {
                return Err(CliError::Usage(
                    "plot needs at least one of --svg or --csv".into(),
                ));
            }
            let (q, deco) = match quadric {
                Some(text) => (parse_quadric(&text)?, SvgDecorations::default()),
                None => {
                    let spec = build_spec(&spec)?;
                    let deco = decorations_for(&spec);
                    (spec.implicit()?, deco)
                }
            };
            let window = match window {
                Some(text) => parse_window(&text, res)?,
                None => {
                    let mut w = Window::auto_fit(&q);
                    w.resolution = res;
                    w
                }
            };
            if window.resolution < 2 {
                return Err(CliError::Domain(ConicError::InvalidWindow));
            }
            let curve = sample_threaded(&q, &window, threads)?;
            if let Some(path) = svg {
                emit_svg(&curve, &window, &deco, &path)
                    .map_err(|e| CliError::Io(path.clone(), e))?;
            }
            if let Some(path) = csv {
                emit_csv(&curve, &path).map_err(|e| CliError::Io(path.clone(), e))?;
            }
            println!(
                "components={} vertices={} max_residual={:.3e}",
                curve.component_count,
                curve.vertex_count(),
                curve.max_residual
            );
            Ok(())
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_rat_field(text: &str, what: &str) -> Result<Rat, CliError> {
    parse_rational(text).map_err(|_| usage(format!("{what}: invalid rational {text:?}")))
}

fn parse_fields(text: &str, count: usize, what: &str) -> Result<Vec<Rat>, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != count {
        return Err(usage(format!(
            "{what}: expected {count} comma-separated values, got {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| parse_rat_field(p, what))
        .collect::<Result<Vec<_>, _>>()
}

fn parse_point(text: &str) -> Result<Point, CliError> {
    let mut vals = parse_fields(text, 2, "point")?;
    let y = vals.pop().unwrap();
    let x = vals.pop().unwrap();
    Ok(Point::new(x, y))
}

fn parse_line(text: &str) -> Result<ParamLine, CliError> {
    let mut vals = parse_fields(text, 4, "line")?;
    let d = vals.pop().unwrap();
    let c = vals.pop().unwrap();
    let b = vals.pop().unwrap();
    let a = vals.pop().unwrap();
    Ok(ParamLine::new(a, b, c, d)?)
}

fn parse_quadric(text: &str) -> Result<ImplicitQuadric, CliError> {
    let vals = parse_fields(text, 6, "quadric")?;
    let coeffs: [Rat; 6] = vals.try_into().expect("six values");
    Ok(ImplicitQuadric::new(
        coeffs[0].clone(),
        coeffs[1].clone(),
        coeffs[2].clone(),
        coeffs[3].clone(),
        coeffs[4].clone(),
        coeffs[5].clone(),
    )?)
}

fn parse_window(text: &str, res: usize) -> Result<Window, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(usage("window: expected \"xmin,xmax,ymin,ymax\""));
    }
    let mut vals = [0f64; 4];
    for (slot, part) in vals.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|_| usage(format!("window: invalid number {part:?}")))?;
    }
    Ok(Window::new(vals[0], vals[1], vals[2], vals[3], res)?)
}

fn build_spec(args: &SpecArgs) -> Result<ConicSpec, CliError> {
    let kind = args
        .kind
        .as_deref()
        .ok_or_else(|| usage("--kind is required"))?;
    let focus = || -> Result<Point, CliError> {
        parse_point(
            args.focus
                .as_deref()
                .ok_or_else(|| usage("--focus is required"))?,
        )
    };
    let reject = |flag: &Option<String>, name: &str| -> Result<(), CliError> {
        if flag.is_some() {
            return Err(usage(format!("--{name} does not apply to --kind {kind}")));
        }
        Ok(())
    };
    match kind {
        "circle" => {
            reject(&args.focus2, "focus2")?;
            reject(&args.line, "line")?;
            let k2 = parse_rat_field(
                args.k2
                    .as_deref()
                    .ok_or_else(|| usage("--k2 is required"))?,
                "k2",
            )?;
            Ok(ConicSpec::circle(focus()?, k2))
        }
        "ellipse" | "hyperbola" => {
            reject(&args.line, "line")?;
            let f2 = parse_point(
                args.focus2
                    .as_deref()
                    .ok_or_else(|| usage("--focus2 is required"))?,
            )?;
            let k2 = parse_rat_field(
                args.k2
                    .as_deref()
                    .ok_or_else(|| usage("--k2 is required"))?,
                "k2",
            )?;
            if kind == "ellipse" {
                Ok(ConicSpec::ellipse(focus()?, f2, k2)?)
            } else {
                Ok(ConicSpec::hyperbola(focus()?, f2, k2)?)
            }
        }
        "parabola" => {
            reject(&args.focus2, "focus2")?;
            reject(&args.k2, "k2")?;
            let line = parse_line(
                args.line
                    .as_deref()
                    .ok_or_else(|| usage("--line is required"))?,
            )?;
            Ok(ConicSpec::parabola(focus()?, line)?)
        }
        other => Err(usage(format!(
            "unknown kind {other:?}; expected circle, ellipse, hyperbola, or parabola"
        ))),
    }
}

fn decorations_for(spec: &ConicSpec) -> SvgDecorations {
    match spec {
        ConicSpec::Circle { center, .. } => SvgDecorations {
            foci: vec![center.to_f64()],
            directrix: None,
        },
        ConicSpec::Ellipse { focus1, focus2, .. } | ConicSpec::Hyperbola { focus1, focus2, .. } => {
            SvgDecorations {
                foci: vec![focus1.to_f64(), focus2.to_f64()],
                directrix: None,
            }
        }
        ConicSpec::Parabola { focus, directrix } => SvgDecorations {
            foci: vec![focus.to_f64()],
            directrix: Some(directrix.params_f64()),
        },
    }
}
