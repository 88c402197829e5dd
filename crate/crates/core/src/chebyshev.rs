//! Chebyshev polynomials and conversion between the power basis and the
//! Chebyshev bases.
//!
//! The defining functional equations are `T_n(cos t) = cos(nt)` and
//! `sin(t) * U_n(cos t) = sin((n+1)t)`; both kinds satisfy the three-term
//! recurrence `X_{n+1} = 2x*X_n - X_{n-1}`, differing only in `X_1`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::gauss::GaussRational;
use crate::unipoly::UniPoly;

/// Which Chebyshev family: first kind (`T`) or second kind (`U`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebKind {
    First,
    Second,
}

/// The degree-`n` Chebyshev polynomial of the given kind, exact.
///
/// Coefficients grow like `2^n`, which the arbitrary-precision scalars
/// absorb without overflow.
pub fn chebyshev(kind: ChebKind, n: usize) -> UniPoly {
    let mut prev = UniPoly::one();
    let mut cur = match kind {
        ChebKind::First => UniPoly::x(),
        ChebKind::Second => UniPoly::from_ints(&[0, 2]),
    };
    if n == 0 {
        return prev;
    }
    let two_x = UniPoly::from_ints(&[0, 2]);
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact coefficients `c_0..c_d` with `p = sum c_n * chebyshev(kind, n)`,
/// where `d = deg p`; empty for the zero polynomial.
///
/// Works by leading-coefficient back-substitution: divide out the highest
/// Chebyshev term and recurse on the remainder, O(d^2) with no orthogonality
/// integrals.
pub fn to_chebyshev_basis(kind: ChebKind, p: &UniPoly) -> Vec<GaussRational> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    let basis: Vec<UniPoly> = (0..=d).map(|n| chebyshev(kind, n)).collect();
    let mut coeffs = vec![GaussRational::zero(); d + 1];
    let mut rem = p.clone();
    for n in (0..=d).rev() {
        let lead = rem.coeff(n);
        if lead.is_zero() {
            continue;
        }
        let c = &lead / basis[n].leading().expect("degree-n Chebyshev");
        rem = &rem - &basis[n].scale(&c);
        coeffs[n] = c;
        debug_assert!(rem.degree().is_none_or(|r| r < n));
    }
    debug_assert!(rem.is_zero());
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        assert_eq!(chebyshev(ChebKind::First, 0), UniPoly::one());
        assert_eq!(chebyshev(ChebKind::First, 1), UniPoly::x());
        assert_eq!(chebyshev(ChebKind::Second, 0), UniPoly::one());
        assert_eq!(chebyshev(ChebKind::Second, 1), UniPoly::from_ints(&[0, 2]));
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(chebyshev(ChebKind::First, 2), UniPoly::from_ints(&[-1, 0, 2]));
        assert_eq!(
            chebyshev(ChebKind::First, 3),
            UniPoly::from_ints(&[0, -3, 0, 4])
        );
        assert_eq!(
            chebyshev(ChebKind::Second, 2),
            UniPoly::from_ints(&[-1, 0, 4])
        );
        assert_eq!(
            chebyshev(ChebKind::Second, 3),
            UniPoly::from_ints(&[0, -4, 0, 8])
        );
    }

    #[test]
    fn functional_equation_sampled() {
        // T_n(cos t) = cos(nt) and sin(t)*U_{n-1}(cos t) = sin(nt), checked
        // in floating point at many angles.
        for n in 0..=8usize {
            let t_poly = chebyshev(ChebKind::First, n);
            for k in 0..50 {
                let t = 0.13 + core::f64::consts::TAU * (k as f64) / 50.0;
                let x = num_complex::Complex64::new(libm::cos(t), 0.0);
                let lhs = t_poly.eval_f64(x).unwrap().re;
                assert!((lhs - libm::cos(n as f64 * t)).abs() < 1e-9, "T_{n} at {t}");
            }
        }
        for n in 1..=8usize {
            let u_poly = chebyshev(ChebKind::Second, n - 1);
            for k in 0..50 {
                let t = 0.07 + core::f64::consts::TAU * (k as f64) / 50.0;
                let x = num_complex::Complex64::new(libm::cos(t), 0.0);
                let lhs = libm::sin(t) * u_poly.eval_f64(x).unwrap().re;
                assert!((lhs - libm::sin(n as f64 * t)).abs() < 1e-9, "U_{} at {t}", n - 1);
            }
        }
    }

    #[test]
    fn basis_conversion_examples() {
        let one = UniPoly::one();
        assert_eq!(
            to_chebyshev_basis(ChebKind::First, &one),
            vec![GaussRational::from(1)]
        );

        let x_sq = UniPoly::from_ints(&[0, 0, 1]);
        assert_eq!(
            to_chebyshev_basis(ChebKind::First, &x_sq),
            vec![
                GaussRational::ratio(1, 2),
                GaussRational::zero(),
                GaussRational::ratio(1, 2)
            ]
        );
        assert_eq!(
            to_chebyshev_basis(ChebKind::Second, &x_sq),
            vec![
                GaussRational::ratio(1, 4),
                GaussRational::zero(),
                GaussRational::ratio(1, 4)
            ]
        );

        assert!(to_chebyshev_basis(ChebKind::First, &UniPoly::zero()).is_empty());
    }

    #[test]
    fn basis_conversion_recombines() {
        for kind in [ChebKind::First, ChebKind::Second] {
            let p = UniPoly::from_ints(&[3, -1, 0, 7, 2]);
            let coeffs = to_chebyshev_basis(kind, &p);
            let mut back = UniPoly::zero();
            for (n, c) in coeffs.iter().enumerate() {
                back = &back + &chebyshev(kind, n).scale(c);
            }
            assert_eq!(back, p);
        }
    }
}
