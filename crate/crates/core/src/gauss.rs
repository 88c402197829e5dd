//! The coefficient field Q(i): complex numbers with exact rational parts.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::util::forward_binop;

/// Division by zero in [`GaussRational`] arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionByZero;

impl fmt::Display for DivisionByZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("division by zero")
    }
}

impl core::error::Error for DivisionByZero {}

/// A Gaussian rational `re + im*i`.
///
/// Both parts are arbitrary-precision rationals kept in lowest terms with a
/// positive denominator, so equality is structural and every field operation
/// is exact. Arithmetic never rounds; conversion to floating point happens
/// only through [`GaussRational::to_f64`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRational {
    re: BigRational,
    im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    /// The real rational `re`, as an exact value.
    pub fn real(re: BigRational) -> Self {
        GaussRational {
            re,
            im: BigRational::zero(),
        }
    }

    /// The rational `num/den`. Panics if `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The rational `num/den` with arbitrary-precision parts.
    pub fn big_ratio(num: BigInt, den: BigInt) -> Result<Self, DivisionByZero> {
        if den.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(Self::real(BigRational::new(num, den)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, an exact nonnegative rational; zero iff `self` is zero.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact multiplicative inverse.
    pub fn checked_inv(&self) -> Result<Self, DivisionByZero> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(GaussRational {
            re: &self.re / &n,
            im: -&self.im / n,
        })
    }

    /// Exact division; `Err` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, DivisionByZero> {
        Ok(self * &rhs.checked_inv()?)
    }

    /// Nearest `f64` complex value, or `None` when a part does not fit in
    /// the finite float range.
    pub fn to_f64(&self) -> Option<Complex64> {
        let re = self.re.to_f64()?;
        let im = self.im.to_f64()?;
        (re.is_finite() && im.is_finite()).then(|| Complex64::new(re, im))
    }

    /// Splits off the sign used when rendering terms: real negatives yield
    /// `(true, -self)`, everything else `(false, self)`.
    pub(crate) fn sign_split(&self) -> (bool, GaussRational) {
        if self.im.is_zero() && self.re.is_negative() {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }
}

impl Default for GaussRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for GaussRational {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

/// Panics on a zero divisor; use [`GaussRational::checked_div`] to recover.
impl Div for &GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: &GaussRational) -> GaussRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

forward_binop!(impl Add, add for GaussRational);
forward_binop!(impl Sub, sub for GaussRational);
forward_binop!(impl Mul, mul for GaussRational);
forward_binop!(impl Div, div for GaussRational);

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -&self
    }
}

/// Canonical text form: `a` or `a/b` for reals, `(a/b+c/d*i)` otherwise.
/// Matches the expression grammar, so rendered values re-parse.
impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "({}-{}*i)", self.re, -&self.im)
        } else {
            write!(f, "({}+{}*i)", self.re, self.im)
        }
    }
}
