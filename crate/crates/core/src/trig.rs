//! Trigonometric polynomials and the naive-form decision procedure.
//!
//! A [`TrigPoly`] is stored in Fourier coordinates `a_0 + sum a_n*cos(nt) +
//! b_n*sin(nt)`. Substituting `x = cos t`, `y = sin t` identifies it with the
//! canonical form `A(x) + y*B(x)` on the circle, where `A` collects the
//! cos-terms through `cos(nt) = T_n(cos t)` and `B` collects the sin-terms
//! through `sin(nt) = sin(t)*U_{n-1}(cos t)`. Whether `f` can be written as
//! `P(cos t) + Q(sin t)` is then a parity question: it can iff the odd part
//! of `B` vanishes, and the odd part itself is the obstruction.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand_core::{RngCore, SeedableRng};

use crate::chebyshev::{chebyshev, to_chebyshev_basis, ChebKind};
use crate::gauss::GaussRational;
use crate::quotient::{compare_on_curve, reduce, CanonicalForm, CurveComparison, Modulus};
use crate::unipoly::UniPoly;
use crate::util::{forward_binop, push_term};
use crate::BiPoly;

/// A finite Fourier sum `a_0 + sum_{n>=1} a_n*cos(nt) + b_n*sin(nt)` with
/// Gaussian-rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrigPoly {
    /// `cos[n]` is the coefficient of `cos(nt)`; `cos[0]` is the constant.
    cos: Vec<GaussRational>,
    /// `sin[m]` is the coefficient of `sin((m+1)t)`.
    sin: Vec<GaussRational>,
}

fn trim(v: &mut Vec<GaussRational>) {
    while v.last().is_some_and(GaussRational::is_zero) {
        v.pop();
    }
}

impl TrigPoly {
    pub fn zero() -> Self {
        TrigPoly::default()
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_parts(alloc::vec![c], Vec::new())
    }

    /// `cos(nt)`; `n = 0` is the constant `1`.
    pub fn cos(n: usize) -> Self {
        let mut coeffs = alloc::vec![GaussRational::from(0); n + 1];
        coeffs[n] = GaussRational::from(1);
        Self::from_parts(coeffs, Vec::new())
    }

    /// `sin(nt)`; `n = 0` is the zero function.
    pub fn sin(n: usize) -> Self {
        if n == 0 {
            return TrigPoly::zero();
        }
        let mut coeffs = alloc::vec![GaussRational::from(0); n];
        coeffs[n - 1] = GaussRational::from(1);
        Self::from_parts(Vec::new(), coeffs)
    }

    fn from_parts(mut cos: Vec<GaussRational>, mut sin: Vec<GaussRational>) -> Self {
        trim(&mut cos);
        trim(&mut sin);
        TrigPoly { cos, sin }
    }

    /// Coefficient of `cos(nt)` (the constant term for `n = 0`).
    pub fn cos_coeff(&self, n: usize) -> GaussRational {
        self.cos.get(n).cloned().unwrap_or_default()
    }

    /// Coefficient of `sin(nt)`; zero for `n = 0`.
    pub fn sin_coeff(&self, n: usize) -> GaussRational {
        match n.checked_sub(1) {
            Some(m) => self.sin.get(m).cloned().unwrap_or_default(),
            None => GaussRational::from(0),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cos.is_empty() && self.sin.is_empty()
    }

    /// Highest frequency with a nonzero coefficient; `0` for constants and
    /// for the zero function.
    pub fn degree(&self) -> usize {
        self.cos.len().saturating_sub(1).max(self.sin.len())
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self::from_parts(
            self.cos.iter().map(|a| a * c).collect(),
            self.sin.iter().map(|b| b * c).collect(),
        )
    }

    /// Float evaluation at the angle `t`; `None` when a coefficient is too
    /// large for `f64`.
    pub fn eval_f64(&self, t: f64) -> Option<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (n, a) in self.cos.iter().enumerate() {
            acc += a.to_f64()? * libm::cos(n as f64 * t);
        }
        for (m, b) in self.sin.iter().enumerate() {
            acc += b.to_f64()? * libm::sin((m + 1) as f64 * t);
        }
        Some(acc)
    }

    /// Fourier-form text, lowest frequency first: `1/2 + cos(t) - sin(2t)`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if !self.cos.is_empty() && !self.cos[0].is_zero() {
            push_term(&mut out, &self.cos[0], "");
        }
        for n in 1..=self.degree() {
            let a = self.cos_coeff(n);
            if !a.is_zero() {
                push_term(&mut out, &a, &frequency_label("cos", n));
            }
            let b = self.sin_coeff(n);
            if !b.is_zero() {
                push_term(&mut out, &b, &frequency_label("sin", n));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn frequency_label(func: &str, n: usize) -> String {
    if n == 1 {
        alloc::format!("{func}(t)")
    } else {
        alloc::format!("{func}({n}t)")
    }
}

impl Add for &TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: &TrigPoly) -> TrigPoly {
        let merge = |lhs: &[GaussRational], rhs: &[GaussRational]| {
            (0..lhs.len().max(rhs.len()))
                .map(|n| {
                    let zero = GaussRational::from(0);
                    lhs.get(n).unwrap_or(&zero) + rhs.get(n).unwrap_or(&zero)
                })
                .collect()
        };
        TrigPoly::from_parts(merge(&self.cos, &rhs.cos), merge(&self.sin, &rhs.sin))
    }
}

impl Sub for &TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: &TrigPoly) -> TrigPoly {
        self + &-rhs
    }
}

impl Mul for &TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: &TrigPoly) -> TrigPoly {
        trig_mul(self, rhs)
    }
}

forward_binop!(impl Add, add for TrigPoly);
forward_binop!(impl Sub, sub for TrigPoly);
forward_binop!(impl Mul, mul for TrigPoly);

impl Neg for &TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        TrigPoly {
            cos: self.cos.iter().map(|a| -a).collect(),
            sin: self.sin.iter().map(|b| -b).collect(),
        }
    }
}

impl Neg for TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        -&self
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The substitution `x = cos t`, `y = sin t`: `cos(nt)` contributes
/// `T_n(x)` to `A` and `sin(nt)` contributes `U_{n-1}(x)` to `B`.
pub fn trig_to_canonical(f: &TrigPoly) -> CanonicalForm {
    let mut a = UniPoly::zero();
    for (n, c) in f.cos.iter().enumerate() {
        a = &a + &chebyshev(ChebKind::First, n).scale(c);
    }
    let mut b = UniPoly::zero();
    for (m, c) in f.sin.iter().enumerate() {
        b = &b + &chebyshev(ChebKind::Second, m).scale(c);
    }
    CanonicalForm::new(a, b, Modulus::Circle)
}

/// Error for canonical forms with no trigonometric reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotCircular;

impl fmt::Display for NotCircular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("only circle canonical forms correspond to trigonometric polynomials")
    }
}

impl core::error::Error for NotCircular {}

/// Inverse of [`trig_to_canonical`]: expands `A` in the `T`-basis and `B` in
/// the `U`-basis. Hyperbolic forms are rejected.
pub fn canonical_to_trig(c: &CanonicalForm) -> Result<TrigPoly, NotCircular> {
    if c.modulus() != Modulus::Circle {
        return Err(NotCircular);
    }
    Ok(TrigPoly::from_parts(
        to_chebyshev_basis(ChebKind::First, c.a()),
        to_chebyshev_basis(ChebKind::Second, c.b()),
    ))
}

/// A function of the form `p(cos t) + q(sin t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveTrigPoly {
    p: UniPoly,
    q: UniPoly,
}

impl NaiveTrigPoly {
    pub fn new(p: UniPoly, q: UniPoly) -> Self {
        NaiveTrigPoly { p, q }
    }

    /// The polynomial applied to `cos t`.
    pub fn p(&self) -> &UniPoly {
        &self.p
    }

    /// The polynomial applied to `sin t`.
    pub fn q(&self) -> &UniPoly {
        &self.q
    }
}

impl fmt::Display for NaiveTrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(x) = {}; Q(y) = {}", self.p.render("x"), self.q.render("y"))
    }
}

/// Expansion of `p(cos t) + q(sin t)` into Fourier form, by reducing
/// `p(x) + q(y)` on the circle and reading the result back.
pub fn naive_to_standard(n: &NaiveTrigPoly) -> TrigPoly {
    let combined = &BiPoly::from_x_poly(n.p()) + &BiPoly::from_y_poly(n.q());
    let (_, canonical) = reduce(&combined, Modulus::Circle);
    canonical_to_trig(&canonical).expect("circle reduction yields a circle form")
}

/// A naive form normalized so that `q` is purely odd.
///
/// Even powers of `sin t` are functions of `cos t` (via `sin^2 = 1 - cos^2`),
/// so they can always be moved into `p`; doing so makes the pair unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveRepresentation {
    p: UniPoly,
    q: UniPoly,
}

impl NaiveRepresentation {
    /// Normalizes an arbitrary pair by absorbing the even part of `q` into
    /// `p` through the substitution `y^2 = 1 - x^2`.
    pub fn new(p: UniPoly, q: UniPoly) -> Self {
        let (even, odd) = q.parity_split();
        let absorbed = even
            .even_compress()
            .compose(&UniPoly::from_ints(&[1, 0, -1]));
        NaiveRepresentation {
            p: &p + &absorbed,
            q: odd,
        }
    }

    pub fn p(&self) -> &UniPoly {
        &self.p
    }

    /// Purely odd by construction.
    pub fn q(&self) -> &UniPoly {
        &self.q
    }

    pub fn to_naive(&self) -> NaiveTrigPoly {
        NaiveTrigPoly::new(self.p.clone(), self.q.clone())
    }

    /// Float value of `p(cos t) + q(sin t)`; `None` when a coefficient is
    /// too large for `f64`.
    pub fn eval_f64(&self, t: f64) -> Option<Complex64> {
        let p = self.p.eval_f64(Complex64::new(libm::cos(t), 0.0))?;
        let q = self.q.eval_f64(Complex64::new(libm::sin(t), 0.0))?;
        Some(p + q)
    }
}

impl fmt::Display for NaiveRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(x) = {}; Q(y) = {}", self.p.render("x"), self.q.render("y"))
    }
}

/// The parity defect that blocks a naive representation: the odd part of
/// `B(x)`, which no `p(cos t) + q(sin t)` can produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    odd_part: UniPoly,
}

impl Obstruction {
    /// The odd part of `B(x)`; nonzero by construction.
    pub fn odd_part(&self) -> &UniPoly {
        &self.odd_part
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "odd part of B(x) = {}", self.odd_part.render("x"))
    }
}

/// Outcome of [`decide_naive`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NaiveDecision {
    Representable(NaiveRepresentation),
    Obstructed(Obstruction),
}

/// Decides whether `f(t) = p(cos t) + q(sin t)` is solvable, constructively.
///
/// Writing `f` canonically as `A(x) + y*B(x)`: the `p`-part can only produce
/// `A`, and `q(sin t)` with `q` odd produces `y` times an *even* polynomial
/// in `x`. So `f` is representable iff the odd part of `B` vanishes — in
/// which case `B(x) = C(x^2)` and `q(y) = y*C(1 - y^2)` works — and
/// otherwise the odd part of `B` is returned as the obstruction.
pub fn decide_naive(f: &TrigPoly) -> NaiveDecision {
    let canonical = trig_to_canonical(f);
    let (even, odd) = canonical.b().parity_split();
    if !odd.is_zero() {
        return NaiveDecision::Obstructed(Obstruction { odd_part: odd });
    }
    let q = even
        .even_compress()
        .compose(&UniPoly::from_ints(&[1, 0, -1]))
        .shift_up(1);
    NaiveDecision::Representable(NaiveRepresentation::new(canonical.a().clone(), q))
}

/// Exact witness that two trig polys differ, at a rational point of the
/// circle (`lhs`/`rhs` are the two values there).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityWitness {
    pub x: GaussRational,
    pub y: GaussRational,
    pub lhs: GaussRational,
    pub rhs: GaussRational,
}

/// Outcome of [`identity_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityOutcome {
    Identity,
    Refuted(IdentityWitness),
}

/// Decides `f = g` exactly. Equality of canonical forms settles the identity;
/// on failure, a rational circle point where the sides differ is produced.
pub fn identity_check(f: &TrigPoly, g: &TrigPoly) -> IdentityOutcome {
    let cf = trig_to_canonical(f);
    let cg = trig_to_canonical(g);
    match compare_on_curve(&cf, &cg).expect("both forms are over the circle") {
        CurveComparison::Equal => IdentityOutcome::Identity,
        CurveComparison::Differs { x, y, lhs, rhs } => {
            IdentityOutcome::Refuted(IdentityWitness { x, y, lhs, rhs })
        }
    }
}

/// Verdict of a floating-point sampling run.
#[derive(Debug, Clone, PartialEq)]
pub enum SampleVerdict {
    Pass { max_deviation: f64 },
    Fail { max_deviation: f64, worst_t: f64 },
    /// Some coefficient does not fit in `f64`, so sampling proves nothing.
    Inconclusive,
}

/// Result of [`sample_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    pub samples: usize,
    pub verdict: SampleVerdict,
}

/// Redundant float check that a claimed representation reproduces `f`:
/// compares `f(t)` against `p(cos t) + q(sin t)` at seeded uniform angles in
/// `[0, 2pi)`.
///
/// This is a diagnostic companion to [`decide_naive`], not a decision
/// procedure: it passes when every sampled deviation stays within `tol`.
pub fn sample_check(
    f: &TrigPoly,
    r: &NaiveRepresentation,
    samples: usize,
    seed: u64,
    tol: f64,
) -> SampleReport {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut max_deviation = 0.0f64;
    let mut worst_t = 0.0f64;
    for _ in 0..samples {
        let unit = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        let t = unit * core::f64::consts::TAU;
        let (Some(fv), Some(rv)) = (f.eval_f64(t), r.eval_f64(t)) else {
            return SampleReport {
                samples,
                verdict: SampleVerdict::Inconclusive,
            };
        };
        let deviation = (fv - rv).norm();
        if deviation > max_deviation {
            max_deviation = deviation;
            worst_t = t;
        }
    }
    let verdict = if max_deviation <= tol {
        SampleVerdict::Pass { max_deviation }
    } else {
        SampleVerdict::Fail {
            max_deviation,
            worst_t,
        }
    };
    SampleReport { samples, verdict }
}

/// Exact Fourier-form product, computed through the canonical forms.
pub fn trig_mul(f: &TrigPoly, g: &TrigPoly) -> TrigPoly {
    let product = trig_to_canonical(f)
        .mul(&trig_to_canonical(g))
        .expect("both forms are over the circle");
    canonical_to_trig(&product).expect("circle product yields a circle form")
}
