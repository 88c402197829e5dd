//! Dense univariate polynomials over the Gaussian rationals.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::gauss::GaussRational;
use crate::util::{forward_binop, push_term};

/// A univariate polynomial, coefficients indexed by degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has no degree ([`UniPoly::degree`] returns `None`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<GaussRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(GaussRational::one(), 1)
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: GaussRational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussRational::zero(); degree + 1];
        coeffs[degree] = c;
        UniPoly { coeffs }
    }

    /// Builds from degree-indexed coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().is_some_and(GaussRational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Convenience constructor from small integers, degree-indexed.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&n| GaussRational::from(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    /// Coefficient of `x^n` (zero beyond the degree).
    pub fn coeff(&self, n: usize) -> GaussRational {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&GaussRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussRational::zero(); n];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { coeffs }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, v: &GaussRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * v) + c;
        }
        acc
    }

    /// Horner evaluation in floating point; `None` when a coefficient does
    /// not fit in the finite float range.
    pub fn eval_f64(&self, z: Complex64) -> Option<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_f64()?;
        }
        Some(acc)
    }

    /// Splits into the even-degree and odd-degree parts; the two sum back to
    /// `self`.
    pub fn parity_split(&self) -> (UniPoly, UniPoly) {
        let pick = |parity: usize| {
            Self::from_coeffs(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| {
                        if n % 2 == parity {
                            c.clone()
                        } else {
                            GaussRational::zero()
                        }
                    })
                    .collect(),
            )
        };
        (pick(0), pick(1))
    }

    /// Composition `self(inner)`, exact.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// For a polynomial with only even-degree terms, the `c` with
    /// `c(x^2) = self`.
    pub(crate) fn even_compress(&self) -> UniPoly {
        debug_assert!(self.parity_split().1.is_zero());
        Self::from_coeffs(self.coeffs.iter().step_by(2).cloned().collect())
    }

    /// Canonical text in the variable `var`: terms in decreasing degree,
    /// e.g. `2*x^2 - 1`.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let monomial = match n {
                0 => String::new(),
                1 => String::from(var),
                _ => alloc::format!("{var}^{n}"),
            };
            push_term(&mut out, c, &monomial);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![GaussRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

forward_binop!(impl Add, add for UniPoly);
forward_binop!(impl Sub, sub for UniPoly);
forward_binop!(impl Mul, mul for UniPoly);

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}
