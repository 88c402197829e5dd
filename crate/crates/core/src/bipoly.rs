//! Sparse bivariate polynomials in `x` and `y` over the Gaussian rationals.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::gauss::GaussRational;
use crate::unipoly::UniPoly;
use crate::util::{forward_binop, push_term};

/// A polynomial in two variables, stored as a map from exponent pairs
/// `(i, j)` — the powers of `x` and `y` — to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), GaussRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(GaussRational::one(), 1, 0)
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        Self::monomial(GaussRational::one(), 0, 1)
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: GaussRational, i: usize, j: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(c, i, j);
        p
    }

    /// A univariate polynomial read in the variable `x`.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(c.clone(), i, 0);
        }
        out
    }

    /// A univariate polynomial read in the variable `y`.
    pub fn from_y_poly(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term(c.clone(), 0, j);
        }
        out
    }

    /// Reassembles `sum_j slices[j] * y^j` where each slice is a polynomial
    /// in `x`.
    pub fn from_y_slices(slices: &[UniPoly]) -> Self {
        let mut out = Self::zero();
        for (j, slice) in slices.iter().enumerate() {
            for (i, c) in slice.coeffs().iter().enumerate() {
                out.add_term(c.clone(), i, j);
            }
        }
        out
    }

    /// Adds `c * x^i * y^j`, pruning the term if the sum cancels.
    pub fn add_term(&mut self, c: GaussRational, i: usize, j: usize) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_default();
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree `max(i + j)`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Highest power of `y`; `None` for the zero polynomial.
    pub fn y_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Exponent-pair/coefficient pairs in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &GaussRational)> {
        self.terms.iter()
    }

    /// The polynomial in `x` multiplying `y^j`.
    pub fn coeff_of_y(&self, j: usize) -> UniPoly {
        let mut coeffs: Vec<(usize, GaussRational)> = Vec::new();
        for (&(i, jj), c) in &self.terms {
            if jj == j {
                coeffs.push((i, c.clone()));
            }
        }
        let top = match coeffs.iter().map(|&(i, _)| i).max() {
            Some(top) => top,
            None => return UniPoly::zero(),
        };
        let mut dense = alloc::vec![GaussRational::zero(); top + 1];
        for (i, c) in coeffs {
            dense[i] = c;
        }
        UniPoly::from_coeffs(dense)
    }

    /// Exact evaluation at `(x, y)`.
    pub fn eval(&self, x: &GaussRational, y: &GaussRational) -> GaussRational {
        let xi = power_table(x, self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0));
        let yj = power_table(y, self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0));
        let mut acc = GaussRational::zero();
        for (&(i, j), c) in &self.terms {
            acc = &acc + &(&(c * &xi[i]) * &yj[j]);
        }
        acc
    }

    /// Canonical text: terms by decreasing total degree, then decreasing
    /// `x`-power, e.g. `2*x^3*y + 2*x*y^3 - 2*x*y`.
    pub fn render(&self) -> String {
        let mut keys: Vec<(usize, usize)> = self.terms.keys().copied().collect();
        keys.sort_by(|&(i1, j1), &(i2, j2)| (i2 + j2, i2).cmp(&(i1 + j1, i1)));
        let mut out = String::new();
        for (i, j) in keys {
            let mut monomial = String::new();
            for (var, e) in [("x", i), ("y", j)] {
                if e == 0 {
                    continue;
                }
                if !monomial.is_empty() {
                    monomial.push('*');
                }
                monomial.push_str(var);
                if e > 1 {
                    monomial.push_str(&alloc::format!("^{e}"));
                }
            }
            push_term(&mut out, &self.terms[&(i, j)], &monomial);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn power_table(v: &GaussRational, up_to: usize) -> Vec<GaussRational> {
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(GaussRational::one());
    for _ in 0..up_to {
        table.push(table.last().unwrap() * v);
    }
    table
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(-c, i, j);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(c1 * c2, i1 + i2, j1 + j2);
            }
        }
        out
    }
}

forward_binop!(impl Add, add for BiPoly);
forward_binop!(impl Sub, sub for BiPoly);
forward_binop!(impl Mul, mul for BiPoly);

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
