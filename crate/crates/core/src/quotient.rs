//! The quotient ring `C[x,y]/(modulus)` for the two quadric relations.
//!
//! Both moduli are monic of degree two in `y`, so repeatedly rewriting `y^2`
//! is a terminating division with a unique remainder `A(x) + y*B(x)` — no
//! general Groebner machinery is needed. The division also yields an explicit
//! quotient witness `S` with `r = S*modulus + A + y*B`.

use core::fmt;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::bipoly::BiPoly;
use crate::gauss::GaussRational;
use crate::unipoly::UniPoly;

/// Errors from quotient-ring operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientError {
    /// Two canonical forms over different moduli were combined.
    ModulusMismatch,
    /// The parametrization is undefined at this parameter value.
    ExcludedParameter,
    /// The degree bound is undefined for the zero polynomial.
    ZeroPolynomial,
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::ModulusMismatch => f.write_str("canonical forms have different moduli"),
            QuotientError::ExcludedParameter => {
                f.write_str("parameter is excluded by the curve parametrization")
            }
            QuotientError::ZeroPolynomial => {
                f.write_str("degree bound is undefined for the zero polynomial")
            }
        }
    }
}

impl core::error::Error for QuotientError {}

/// The defining relation of the quotient: the unit circle `x^2 + y^2 - 1`
/// or the unit hyperbola `x^2 - y^2 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modulus {
    Circle,
    Hyperbola,
}

impl Modulus {
    /// The modulus as a polynomial.
    pub fn polynomial(self) -> BiPoly {
        let mut p = BiPoly::zero();
        p.add_term(GaussRational::from(1), 2, 0);
        p.add_term(
            match self {
                Modulus::Circle => GaussRational::from(1),
                Modulus::Hyperbola => GaussRational::from(-1),
            },
            0,
            2,
        );
        p.add_term(GaussRational::from(-1), 0, 0);
        p
    }

    /// The rewrite rule for `y^2`: `1 - x^2` on the circle, `x^2 - 1` on the
    /// hyperbola.
    pub fn y_square_rule(self) -> UniPoly {
        match self {
            Modulus::Circle => UniPoly::from_ints(&[1, 0, -1]),
            Modulus::Hyperbola => UniPoly::from_ints(&[-1, 0, 1]),
        }
    }

    /// Sign of the witness contribution when one `y^2` is rewritten:
    /// `y^2 = rule(x) + sign * modulus`.
    fn witness_sign(self) -> i64 {
        match self {
            Modulus::Circle => 1,
            Modulus::Hyperbola => -1,
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Circle => f.write_str("circle"),
            Modulus::Hyperbola => f.write_str("hyperbola"),
        }
    }
}

/// The unique representative `A(x) + y*B(x)` of a residue class.
///
/// Two canonical forms over the same modulus represent the same residue
/// class iff they are componentwise equal, so derived equality is semantic
/// equality in the quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    a: UniPoly,
    b: UniPoly,
    modulus: Modulus,
}

impl CanonicalForm {
    pub fn new(a: UniPoly, b: UniPoly, modulus: Modulus) -> Self {
        CanonicalForm { a, b, modulus }
    }

    pub fn zero(modulus: Modulus) -> Self {
        Self::new(UniPoly::zero(), UniPoly::zero(), modulus)
    }

    pub fn constant(c: GaussRational, modulus: Modulus) -> Self {
        Self::new(UniPoly::constant(c), UniPoly::zero(), modulus)
    }

    /// The `y`-free part `A(x)`.
    pub fn a(&self) -> &UniPoly {
        &self.a
    }

    /// The coefficient of `y`, `B(x)`.
    pub fn b(&self) -> &UniPoly {
        &self.b
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Reads the form back as the bivariate polynomial `A(x) + y*B(x)`.
    pub fn to_bipoly(&self) -> BiPoly {
        let mut out = BiPoly::from_x_poly(&self.a);
        for (i, c) in self.b.coeffs().iter().enumerate() {
            out.add_term(c.clone(), i, 1);
        }
        out
    }

    /// Exact evaluation of `A(x) + y*B(x)` at a point.
    pub fn eval(&self, x: &GaussRational, y: &GaussRational) -> GaussRational {
        &self.a.eval(x) + &(y * &self.b.eval(x))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, QuotientError> {
        self.check_modulus(rhs)?;
        Ok(Self::new(
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            self.modulus,
        ))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, QuotientError> {
        self.check_modulus(rhs)?;
        Ok(Self::new(
            &self.a - &rhs.a,
            &self.b - &rhs.b,
            self.modulus,
        ))
    }

    /// Ring product of residue classes: one `y^2` rewrite folds the product
    /// back to canonical form, via
    /// `(A1 + y*B1)(A2 + y*B2) = (A1*A2 + rule*B1*B2) + y*(A1*B2 + A2*B1)`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, QuotientError> {
        self.check_modulus(rhs)?;
        let rule = self.modulus.y_square_rule();
        let a = &(&self.a * &rhs.a) + &(&rule * &(&self.b * &rhs.b));
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Ok(Self::new(a, b, self.modulus))
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b, self.modulus)
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self::new(self.a.scale(c), self.b.scale(c), self.modulus)
    }

    fn check_modulus(&self, rhs: &Self) -> Result<(), QuotientError> {
        if self.modulus == rhs.modulus {
            Ok(())
        } else {
            Err(QuotientError::ModulusMismatch)
        }
    }

    /// Canonical text: `A(x) = <poly>; B(x) = <poly>`.
    pub fn render(&self) -> String {
        alloc::format!("A(x) = {}; B(x) = {}", self.a.render("x"), self.b.render("x"))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Divides `r` by the modulus polynomial, returning the quotient witness `s`
/// and the canonical remainder, with `r = s*modulus + A + y*B` exactly.
///
/// Terms are processed in decreasing `y`-degree, rewriting `y^j` with
/// `j >= 2` through the `y^2` rule; the witness accumulates one slice per
/// rewrite. Already-canonical input comes back with `s = 0` unchanged.
pub fn reduce(r: &BiPoly, modulus: Modulus) -> (BiPoly, CanonicalForm) {
    let top = r.y_degree().unwrap_or(0);
    let mut slices: Vec<UniPoly> = (0..=top).map(|j| r.coeff_of_y(j)).collect();
    let mut witness: Vec<UniPoly> = vec![UniPoly::zero(); top.saturating_sub(1)];
    let rule = modulus.y_square_rule();
    let sign = GaussRational::from(modulus.witness_sign());
    for j in (2..=top).rev() {
        let cj = core::mem::replace(&mut slices[j], UniPoly::zero());
        if cj.is_zero() {
            continue;
        }
        slices[j - 2] = &slices[j - 2] + &(&cj * &rule);
        witness[j - 2] = &witness[j - 2] + &cj.scale(&sign);
    }
    let s = BiPoly::from_y_slices(&witness);
    let b = if top >= 1 {
        core::mem::take(&mut slices[1])
    } else {
        UniPoly::zero()
    };
    let a = core::mem::take(&mut slices[0]);
    (s, CanonicalForm::new(a, b, modulus))
}

/// Ideal membership: `r` is a multiple of the modulus iff its canonical
/// remainder vanishes. Over the circle this is equivalent to
/// `r(cos t, sin t)` being identically zero.
pub fn ideal_member(r: &BiPoly, modulus: Modulus) -> bool {
    reduce(r, modulus).1.is_zero()
}

/// Exact rational point of the curve: `((1-s^2)/(1+s^2), 2s/(1+s^2))` on the
/// circle, `((1+s^2)/(1-s^2), 2s/(1-s^2))` on the hyperbola. The parameter
/// values that zero the denominator are rejected.
pub fn param_point(
    s: &GaussRational,
    modulus: Modulus,
) -> Result<(GaussRational, GaussRational), QuotientError> {
    let s_sq = s * s;
    let one = GaussRational::one();
    let (num_x, den) = match modulus {
        Modulus::Circle => (&one - &s_sq, &one + &s_sq),
        Modulus::Hyperbola => (&one + &s_sq, &one - &s_sq),
    };
    if den.is_zero() {
        return Err(QuotientError::ExcludedParameter);
    }
    let two_s = &GaussRational::from(2) * s;
    Ok((
        num_x.checked_div(&den).expect("nonzero denominator"),
        two_s.checked_div(&den).expect("nonzero denominator"),
    ))
}

/// The product of the total degrees — the classical upper bound on the
/// number of intersection points of the two curves when they share no
/// common factor. Coprimality is the caller's obligation; it is not checked
/// here (no factorization in this crate).
pub fn bezout_degree_bound(p: &BiPoly, q: &BiPoly) -> Result<usize, QuotientError> {
    match (p.degree(), q.degree()) {
        (Some(dp), Some(dq)) => Ok(dp * dq),
        _ => Err(QuotientError::ZeroPolynomial),
    }
}

/// Outcome of comparing two canonical forms as functions on the curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveComparison {
    Equal,
    /// An exact curve point where the two forms take different values.
    Differs {
        x: GaussRational,
        y: GaussRational,
        lhs: GaussRational,
        rhs: GaussRational,
    },
}

/// Compares residue classes, producing an exact witness point on refutation.
///
/// Nonzero canonical forms have `y`-degree below the modulus, so they cannot
/// be multiples of it and vanish at only finitely many curve points; a
/// search over `0, 1/2, -1/2, 1, -1, ...` therefore terminates within
/// `2*max(deg A, deg B + 1) + 1` admissible parameters.
pub fn compare_on_curve(
    f: &CanonicalForm,
    g: &CanonicalForm,
) -> Result<CurveComparison, QuotientError> {
    let diff = f.sub(g)?;
    if diff.is_zero() {
        return Ok(CurveComparison::Equal);
    }
    let a_deg = diff.a().degree().map_or(0, |d| d);
    let b_deg = diff.b().degree().map_or(0, |d| d + 1);
    let root_bound = 2 * a_deg.max(b_deg);
    for s in half_integers().take(root_bound + 3) {
        let Ok((x, y)) = param_point(&s, f.modulus()) else {
            continue;
        };
        if !diff.eval(&x, &y).is_zero() {
            let lhs = f.eval(&x, &y);
            let rhs = g.eval(&x, &y);
            return Ok(CurveComparison::Differs { x, y, lhs, rhs });
        }
    }
    unreachable!("a nonzero canonical form has at most root_bound curve zeros")
}

/// `0, 1/2, -1/2, 1, -1, 3/2, -3/2, ...`
fn half_integers() -> impl Iterator<Item = GaussRational> {
    (0i64..).map(|k| {
        let magnitude = BigRational::new(BigInt::from((k + 1) / 2), BigInt::from(2));
        if k % 2 == 1 {
            GaussRational::real(magnitude)
        } else {
            GaussRational::real(-magnitude)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> GaussRational {
        GaussRational::ratio(n, d)
    }

    #[test]
    fn reducing_the_modulus_itself() {
        let (s, c) = reduce(&Modulus::Circle.polynomial(), Modulus::Circle);
        assert_eq!(s, BiPoly::constant(GaussRational::from(1)));
        assert!(c.is_zero());
    }

    #[test]
    fn reducing_y_squared() {
        let y_sq = BiPoly::monomial(GaussRational::from(1), 0, 2);
        let (s, c) = reduce(&y_sq, Modulus::Circle);
        assert_eq!(s, BiPoly::constant(GaussRational::from(1)));
        assert_eq!(c.a(), &UniPoly::from_ints(&[1, 0, -1]));
        assert!(c.b().is_zero());
    }

    #[test]
    fn reducing_already_canonical_input() {
        let two_xy = BiPoly::monomial(GaussRational::from(2), 1, 1);
        let (s, c) = reduce(&two_xy, Modulus::Circle);
        assert!(s.is_zero());
        assert!(c.a().is_zero());
        assert_eq!(c.b(), &UniPoly::from_ints(&[0, 2]));
    }

    #[test]
    fn recomposition_identity() {
        // r = s*modulus + A + y*B must hold in plain bivariate arithmetic.
        let mut r = BiPoly::zero();
        r.add_term(q(3, 2), 2, 3);
        r.add_term(GaussRational::from(-1), 0, 4);
        r.add_term(GaussRational::i(), 1, 1);
        r.add_term(q(5, 7), 0, 0);
        for modulus in [Modulus::Circle, Modulus::Hyperbola] {
            let (s, c) = reduce(&r, modulus);
            let recomposed = &(&s * &modulus.polynomial()) + &c.to_bipoly();
            assert_eq!(recomposed, r);
            assert!(c.to_bipoly().y_degree().unwrap_or(0) <= 1);
        }
    }

    #[test]
    fn ideal_membership() {
        // (x^2+y^2-1)*(x^3*y - 7)
        let mut factor = BiPoly::zero();
        factor.add_term(GaussRational::from(1), 3, 1);
        factor.add_term(GaussRational::from(-7), 0, 0);
        let member = &Modulus::Circle.polynomial() * &factor;
        assert!(ideal_member(&member, Modulus::Circle));

        let two_xy = BiPoly::monomial(GaussRational::from(2), 1, 1);
        assert!(!ideal_member(&two_xy, Modulus::Circle));

        assert!(ideal_member(
            &Modulus::Hyperbola.polynomial(),
            Modulus::Hyperbola
        ));
    }

    #[test]
    fn canonical_products() {
        let y = CanonicalForm::new(UniPoly::zero(), UniPoly::one(), Modulus::Circle);
        let y_sq = y.mul(&y).unwrap();
        assert_eq!(y_sq.a(), &UniPoly::from_ints(&[1, 0, -1]));
        assert!(y_sq.b().is_zero());

        let x = CanonicalForm::new(UniPoly::x(), UniPoly::zero(), Modulus::Circle);
        let xy = x.mul(&y).unwrap();
        assert!(xy.a().is_zero());
        assert_eq!(xy.b(), &UniPoly::x());

        let yh = CanonicalForm::new(UniPoly::zero(), UniPoly::one(), Modulus::Hyperbola);
        let yh_sq = yh.mul(&yh).unwrap();
        assert_eq!(yh_sq.a(), &UniPoly::from_ints(&[-1, 0, 1]));
        assert!(yh_sq.b().is_zero());
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let circ = CanonicalForm::zero(Modulus::Circle);
        let hyp = CanonicalForm::zero(Modulus::Hyperbola);
        assert_eq!(circ.mul(&hyp), Err(QuotientError::ModulusMismatch));
    }

    #[test]
    fn parametrization_points() {
        assert_eq!(
            param_point(&q(1, 2), Modulus::Circle).unwrap(),
            (q(3, 5), q(4, 5))
        );
        assert_eq!(
            param_point(&GaussRational::zero(), Modulus::Circle).unwrap(),
            (GaussRational::from(1), GaussRational::zero())
        );
        assert_eq!(
            param_point(&q(1, 2), Modulus::Hyperbola).unwrap(),
            (q(5, 3), q(4, 3))
        );
        // Points satisfy the modulus polynomial exactly.
        for s in [q(2, 3), q(-7, 5), GaussRational::i() + GaussRational::from(1)] {
            for modulus in [Modulus::Circle, Modulus::Hyperbola] {
                let (x, y) = param_point(&s, modulus).unwrap();
                assert!(modulus.polynomial().eval(&x, &y).is_zero());
            }
        }
    }

    #[test]
    fn excluded_parameters() {
        assert_eq!(
            param_point(&GaussRational::i(), Modulus::Circle),
            Err(QuotientError::ExcludedParameter)
        );
        assert_eq!(
            param_point(&GaussRational::from(1), Modulus::Hyperbola),
            Err(QuotientError::ExcludedParameter)
        );
        assert_eq!(
            param_point(&GaussRational::from(-1), Modulus::Hyperbola),
            Err(QuotientError::ExcludedParameter)
        );
    }

    #[test]
    fn degree_bound() {
        let circle = Modulus::Circle.polynomial();
        let mut cubic = BiPoly::zero();
        cubic.add_term(GaussRational::from(1), 2, 1);
        cubic.add_term(GaussRational::from(3), 1, 0);
        assert_eq!(bezout_degree_bound(&circle, &cubic), Ok(6));

        let line1 = &BiPoly::x() + &BiPoly::y();
        let line2 = &BiPoly::x() - &BiPoly::constant(GaussRational::from(2));
        assert_eq!(bezout_degree_bound(&line1, &line2), Ok(1));

        let quartic = &cubic * &line1;
        assert_eq!(bezout_degree_bound(&cubic, &quartic), Ok(12));

        assert_eq!(
            bezout_degree_bound(&BiPoly::zero(), &line1),
            Err(QuotientError::ZeroPolynomial)
        );
    }

    #[test]
    fn curve_comparison_finds_witness() {
        // sin(2t) vs 2*sin(t): A = 0, B = 2x vs B = 2.
        let f = CanonicalForm::new(UniPoly::zero(), UniPoly::from_ints(&[0, 2]), Modulus::Circle);
        let g = CanonicalForm::new(UniPoly::zero(), UniPoly::from_ints(&[2]), Modulus::Circle);
        match compare_on_curve(&f, &g).unwrap() {
            CurveComparison::Differs { x, y, lhs, rhs } => {
                assert_eq!((x, y), (q(3, 5), q(4, 5)));
                assert_eq!(lhs, q(24, 25));
                assert_eq!(rhs, q(8, 5));
            }
            CurveComparison::Equal => panic!("expected a witness"),
        }
        assert_eq!(compare_on_curve(&f, &f).unwrap(), CurveComparison::Equal);
    }
}
