//! `trigpoly` — exact algebra for trigonometric polynomials on the command
//! line.
//!
//! Every subcommand reads expressions in the shared grammar (`sin(2t)`,
//! `cosh(t)^2 - 1`, `1/2 * i`, ...), works over exact Gaussian-rational
//! arithmetic, and reports through the exit code: `0` for a positive result,
//! `1` for a refuted claim (a non-identity, a failed spot check, a
//! non-representable input), `2` for usage and expression errors. With
//! `--json`, stdout carries exactly one JSON document per run; every exact
//! value is a string (floats appear only for measured deviations).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use serde_json::{json, Value};

use trigpoly::parser::{self, Lowered};
use trigpoly::{
    chebyshev, compare_on_curve, decide_naive, identity_check, reduce, trig_to_canonical,
    CanonicalForm, ChebKind, CurveComparison, IdentityOutcome, Modulus, NaiveDecision, TrigPoly,
};

#[derive(Parser)]
#[command(
    name = "trigpoly",
    version,
    about = "Exact algebra for trigonometric polynomials",
    after_help = "Exit codes: 0 = positive result, 1 = refuted claim, 2 = error."
)]
struct Cli {
    /// Print a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an expression into the standard form a_0 + sum a_n cos(nt) + b_n sin(nt)
    Normalize {
        /// Expression, e.g. "sin(t)^3" or "cosh(t)^2"
        expr: String,
    },
    /// Print the canonical form A(x) + y*B(x) of an expression
    Canonical {
        /// Expression in sin/cos (x = cos t) or sinh/cosh (x = cosh t)
        expr: String,
    },
    /// Decide whether an expression can be written as P(cos t) + Q(sin t)
    Naive {
        /// Expression in sin/cos
        expr: String,
    },
    /// Decide an identity "LHS = RHS" exactly
    Identity {
        /// Claim with a single '=', e.g. "2*sin(t)*cos(t) = sin(2t)"
        claim: String,
    },
    /// Print a Chebyshev polynomial of the first or second kind
    Chebyshev {
        /// Which family: T (cos(nt) = T_n(cos t)) or U (sin((n+1)t) = sin(t)*U_n(cos t))
        kind: KindArg,
        /// Index n
        n: usize,
    },
    /// Reduce a polynomial in x, y to A(x) + y*B(x) modulo a curve relation
    Reduce {
        /// Polynomial in x and y, e.g. "y^3 + x*y"
        expr: String,
        /// Curve relation to reduce by
        #[arg(long, value_enum, default_value = "circle")]
        modulus: ModulusArg,
    },
    /// Cross-check the normalized form against direct numeric evaluation
    Check {
        /// Expression to re-evaluate numerically, e.g. "sin(t)^3"
        expr: String,
        /// Number of sample points (at least 1)
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest allowed |direct - normalized| per sample
        #[arg(long, default_value = "1e-9")]
        tol: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModulusArg {
    Circle,
    Hyperbola,
}

impl From<ModulusArg> for Modulus {
    fn from(m: ModulusArg) -> Modulus {
        match m {
            ModulusArg::Circle => Modulus::Circle,
            ModulusArg::Hyperbola => Modulus::Hyperbola,
        }
    }
}

/// A finished subcommand: what to print and how to exit.
struct Output {
    refuted: bool,
    text: String,
    result: Value,
}

impl Output {
    fn ok(text: String, result: Value) -> Self {
        Output {
            refuted: false,
            text,
            result,
        }
    }

    fn refuted(text: String, result: Value) -> Self {
        Output {
            refuted: true,
            text,
            result,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = match &cli.command {
        Command::Normalize { .. } => "normalize",
        Command::Canonical { .. } => "canonical",
        Command::Naive { .. } => "naive",
        Command::Identity { .. } => "identity",
        Command::Chebyshev { .. } => "chebyshev",
        Command::Reduce { .. } => "reduce",
        Command::Check { .. } => "check",
    };
    match run(&cli.command) {
        Ok(output) => {
            let status = if output.refuted { "refuted" } else { "ok" };
            if cli.json {
                let doc = json!({
                    "status": status,
                    "subcommand": name,
                    "result": output.result,
                });
                println!("{}", serde_json::to_string(&doc).expect("serializable document"));
            } else {
                println!("{}", output.text);
            }
            if output.refuted {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            if cli.json {
                let doc = json!({
                    "status": "error",
                    "subcommand": name,
                    "diagnostic": message,
                });
                println!("{}", serde_json::to_string(&doc).expect("serializable document"));
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> Result<Output, String> {
    match command {
        Command::Normalize { expr } => normalize(expr),
        Command::Canonical { expr } => canonical(expr),
        Command::Naive { expr } => naive(expr),
        Command::Identity { claim } => identity(claim),
        Command::Chebyshev { kind, n } => Ok(chebyshev_cmd(*kind, *n)),
        Command::Reduce { expr, modulus } => reduce_cmd(expr, (*modulus).into()),
        Command::Check {
            expr,
            samples,
            seed,
            tol,
        } => check(expr, *samples, *seed, tol),
    }
}

/// Parses and lowers one expression, shifting error offsets by `offset`
/// (used when the expression is a slice of a larger claim).
fn lower_expr(src: &str, offset: usize) -> Result<Lowered, String> {
    let ast = parser::parse(src).map_err(|mut e| {
        e.pos += offset;
        e.to_string()
    })?;
    parser::lower(&ast).map_err(|mut e| {
        e.pos += offset;
        e.to_string()
    })
}

fn normalize(expr: &str) -> Result<Output, String> {
    Ok(match lower_expr(expr, 0)? {
        Lowered::Circular(f) => {
            let rendered = f.render();
            Output::ok(
                rendered.clone(),
                json!({ "family": "circular", "normalized": rendered }),
            )
        }
        Lowered::Hyperbolic(c) => {
            let rendered = c.render();
            Output::ok(
                rendered.clone(),
                json!({ "family": "hyperbolic", "normalized": rendered }),
            )
        }
    })
}

fn canonical(expr: &str) -> Result<Output, String> {
    let form = match lower_expr(expr, 0)? {
        Lowered::Circular(f) => trig_to_canonical(&f),
        Lowered::Hyperbolic(c) => c,
    };
    let text = format!("modulus: {}\n{}", form.modulus(), form.render());
    let result = json!({
        "modulus": form.modulus().to_string(),
        "a": form.a().render("x"),
        "b": form.b().render("x"),
    });
    Ok(Output::ok(text, result))
}

fn naive(expr: &str) -> Result<Output, String> {
    let f = match lower_expr(expr, 0)? {
        Lowered::Circular(f) => f,
        Lowered::Hyperbolic(_) => {
            return Err(String::from(
                "the naive form applies to circular expressions; use sin/cos",
            ))
        }
    };
    Ok(match decide_naive(&f) {
        NaiveDecision::Representable(rep) => {
            let text = format!("REPRESENTABLE\n{rep}\n# x = cos(t), y = sin(t)");
            let result = json!({
                "representable": true,
                "p": rep.p().render("x"),
                "q": rep.q().render("y"),
            });
            Output::ok(text, result)
        }
        NaiveDecision::Obstructed(ob) => {
            let text = format!("NOT REPRESENTABLE\nobstruction: {ob}");
            let result = json!({
                "representable": false,
                "obstruction": ob.odd_part().render("x"),
            });
            Output::refuted(text, result)
        }
    })
}

/// Splits a claim on its single `=` and lowers both sides, promoting a
/// constant side when the other side is hyperbolic.
fn lower_claim(claim: &str) -> Result<Sides, String> {
    let Some((lhs_src, rhs_src)) = split_once_eq(claim) else {
        return Err(String::from("the claim must contain exactly one '='"));
    };
    let lhs = lower_expr(lhs_src, 0)?;
    let rhs = lower_expr(rhs_src, lhs_src.len() + 1)?;
    match (lhs, rhs) {
        (Lowered::Circular(f), Lowered::Circular(g)) => Ok(Sides::Circular(f, g)),
        (Lowered::Hyperbolic(f), Lowered::Hyperbolic(g)) => Ok(Sides::Hyperbolic(f, g)),
        (Lowered::Circular(f), Lowered::Hyperbolic(g)) => match promote_constant(&f) {
            Some(c) => Ok(Sides::Hyperbolic(c, g)),
            None => Err(String::from(
                "the left side is circular but the right side is hyperbolic",
            )),
        },
        (Lowered::Hyperbolic(f), Lowered::Circular(g)) => match promote_constant(&g) {
            Some(c) => Ok(Sides::Hyperbolic(f, c)),
            None => Err(String::from(
                "the right side is circular but the left side is hyperbolic",
            )),
        },
    }
}

enum Sides {
    Circular(TrigPoly, TrigPoly),
    Hyperbolic(CanonicalForm, CanonicalForm),
}

fn split_once_eq(claim: &str) -> Option<(&str, &str)> {
    let (lhs, rhs) = claim.split_once('=')?;
    if rhs.contains('=') {
        return None;
    }
    Some((lhs, rhs))
}

/// A frequency-free trig poly is a scalar in disguise; read it back out.
fn promote_constant(f: &TrigPoly) -> Option<CanonicalForm> {
    if f.degree() == 0 {
        Some(CanonicalForm::constant(f.cos_coeff(0), Modulus::Hyperbola))
    } else {
        None
    }
}

fn identity(claim: &str) -> Result<Output, String> {
    let comparison = match lower_claim(claim)? {
        Sides::Circular(f, g) => match identity_check(&f, &g) {
            IdentityOutcome::Identity => CurveComparison::Equal,
            IdentityOutcome::Refuted(w) => CurveComparison::Differs {
                x: w.x,
                y: w.y,
                lhs: w.lhs,
                rhs: w.rhs,
            },
        },
        Sides::Hyperbolic(f, g) => {
            compare_on_curve(&f, &g).expect("both sides share the modulus")
        }
    };
    Ok(match comparison {
        CurveComparison::Equal => Output::ok(String::from("IDENTITY"), json!({ "identity": true })),
        CurveComparison::Differs { x, y, lhs, rhs } => {
            let text = format!("NOT AN IDENTITY\nwitness (x, y) = ({x}, {y}): {lhs} != {rhs}");
            let result = json!({
                "identity": false,
                "witness": {
                    "x": x.to_string(),
                    "y": y.to_string(),
                    "lhs": lhs.to_string(),
                    "rhs": rhs.to_string(),
                },
            });
            Output::refuted(text, result)
        }
    })
}

fn chebyshev_cmd(kind: KindArg, n: usize) -> Output {
    let (cheb_kind, label) = match kind {
        KindArg::T => (ChebKind::First, "T"),
        KindArg::U => (ChebKind::Second, "U"),
    };
    let poly = chebyshev(cheb_kind, n).render("x");
    let result = json!({ "kind": label, "n": n, "polynomial": poly });
    Output::ok(poly, result)
}

fn reduce_cmd(expr: &str, modulus: Modulus) -> Result<Output, String> {
    let poly = parser::parse_bipoly(expr).map_err(|e| e.to_string())?;
    let (s, form) = reduce(&poly, modulus);
    let text = format!("modulus: {modulus}\nS(x,y) = {s}\n{}", form.render());
    let result = json!({
        "modulus": modulus.to_string(),
        "s": s.to_string(),
        "a": form.a().render("x"),
        "b": form.b().render("x"),
    });
    Ok(Output::ok(text, result))
}

/// Float redundancy check of the algebra: evaluates the raw parse tree and
/// the normalized form at seeded random arguments and compares. Circular
/// expressions sample a full period of angles; hyperbolic ones sample
/// `t` in `[-2, 2)`.
fn check(expr: &str, samples: usize, seed: u64, tol_text: &str) -> Result<Output, String> {
    let tol: f64 = tol_text
        .parse()
        .map_err(|_| format!("invalid tolerance '{tol_text}'"))?;
    if !tol.is_finite() || tol < 0.0 {
        return Err(String::from("the tolerance must be finite and non-negative"));
    }
    if samples == 0 {
        return Err(String::from("at least one sample is required"));
    }
    let ast = parser::parse(expr).map_err(|e| e.to_string())?;
    let lowered = parser::lower(&ast).map_err(|e| e.to_string())?;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut max_deviation = 0.0f64;
    let mut worst_t = 0.0f64;
    let mut conclusive = true;
    for _ in 0..samples {
        let unit = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        let t = match &lowered {
            Lowered::Circular(_) => unit * std::f64::consts::TAU,
            Lowered::Hyperbolic(_) => 4.0 * unit - 2.0,
        };
        let normalized = match &lowered {
            Lowered::Circular(f) => f.eval_f64(t),
            Lowered::Hyperbolic(c) => eval_hyperbolic(c, t),
        };
        let (Some(direct), Some(normalized)) = (parser::eval_f64(&ast, t), normalized) else {
            conclusive = false;
            break;
        };
        if !direct.is_finite() || !normalized.is_finite() {
            conclusive = false;
            break;
        }
        let deviation = (direct - normalized).norm();
        if deviation > max_deviation {
            max_deviation = deviation;
            worst_t = t;
        }
    }
    Ok(if !conclusive {
        Output::ok(
            String::from("INCONCLUSIVE\nvalues exceed the floating-point range"),
            json!({ "verdict": "inconclusive", "samples": samples }),
        )
    } else if max_deviation <= tol {
        Output::ok(
            format!(
                "PASS\nmax deviation {max_deviation:e} over {samples} samples (tol {tol_text})"
            ),
            json!({ "verdict": "pass", "samples": samples, "max_deviation": max_deviation }),
        )
    } else {
        Output::refuted(
            format!(
                "FAIL\nmax deviation {max_deviation:e} at t = {worst_t} over {samples} samples (tol {tol_text})"
            ),
            json!({
                "verdict": "fail",
                "samples": samples,
                "max_deviation": max_deviation,
                "worst_t": worst_t,
            }),
        )
    })
}

fn eval_hyperbolic(form: &CanonicalForm, u: f64) -> Option<Complex64> {
    let x = Complex64::new(u.cosh(), 0.0);
    let a = form.a().eval_f64(x)?;
    let b = form.b().eval_f64(x)?;
    Some(a + b * u.sinh())
}
