//! Linear-algebra cross-check for naive representability.
//!
//! Independent of the parity argument in [`crate::trig::decide_naive`]: a
//! degree-`k` Fourier sum equals `p(cos t) + q(sin t)` with `deg p, deg q <=
//! k` iff an explicit linear system over the Gaussian rationals is solvable.
//! The columns are the Fourier coordinates of the power basis `cos^j t`,
//! `sin^j t`, computed here from scratch with the product-to-sum rules, and
//! consistency is decided by exact Gaussian elimination. Degree `k` suffices:
//! any representation can be normalized (even sine powers moved into `p`)
//! without raising either degree past `k`.

use alloc::vec;
use alloc::vec::Vec;

use crate::gauss::GaussRational;
use crate::trig::TrigPoly;

/// Fourier coordinates with index = frequency; `b[0]` stays zero.
#[derive(Clone)]
struct Fourier {
    a: Vec<GaussRational>,
    b: Vec<GaussRational>,
}

impl Fourier {
    fn one() -> Self {
        Fourier {
            a: vec![GaussRational::from(1)],
            b: Vec::new(),
        }
    }

    fn coeff(v: &[GaussRational], n: usize) -> GaussRational {
        v.get(n).cloned().unwrap_or_default()
    }

    fn bump(v: &mut Vec<GaussRational>, n: usize, delta: GaussRational) {
        if v.len() <= n {
            v.resize(n + 1, GaussRational::from(0));
        }
        v[n] = &v[n] + &delta;
    }

    /// Multiplies by `cos t`: `2 cos(t) cos(nt) = cos((n+1)t) + cos((n-1)t)`
    /// and `2 cos(t) sin(nt) = sin((n+1)t) + sin((n-1)t)`.
    fn mul_cos(&self) -> Self {
        let half = GaussRational::ratio(1, 2);
        let mut out = Fourier {
            a: Vec::new(),
            b: Vec::new(),
        };
        for (n, c) in self.a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if n == 0 {
                Self::bump(&mut out.a, 1, c.clone());
            } else {
                Self::bump(&mut out.a, n + 1, c * &half);
                Self::bump(&mut out.a, n - 1, c * &half);
            }
        }
        for (n, c) in self.b.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            Self::bump(&mut out.b, n + 1, c * &half);
            if n >= 2 {
                Self::bump(&mut out.b, n - 1, c * &half);
            }
        }
        out
    }

    /// Multiplies by `sin t`: `2 sin(t) cos(nt) = sin((n+1)t) - sin((n-1)t)`
    /// and `2 sin(t) sin(nt) = cos((n-1)t) - cos((n+1)t)`.
    fn mul_sin(&self) -> Self {
        let half = GaussRational::ratio(1, 2);
        let mut out = Fourier {
            a: Vec::new(),
            b: Vec::new(),
        };
        for (n, c) in self.a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if n == 0 {
                Self::bump(&mut out.b, 1, c.clone());
            } else {
                Self::bump(&mut out.b, n + 1, c * &half);
                if n >= 2 {
                    Self::bump(&mut out.b, n - 1, -&(c * &half));
                }
            }
        }
        for (n, c) in self.b.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            Self::bump(&mut out.a, n - 1, c * &half);
            Self::bump(&mut out.a, n + 1, -&(c * &half));
        }
        out
    }

    /// `[a_0 .. a_k, b_1 .. b_k]`, the row space of the linear system.
    fn window(&self, k: usize) -> Vec<GaussRational> {
        let mut row = Vec::with_capacity(2 * k + 1);
        for n in 0..=k {
            row.push(Self::coeff(&self.a, n));
        }
        for n in 1..=k {
            row.push(Self::coeff(&self.b, n));
        }
        row
    }
}

/// Column-major list of the Fourier coordinates of `cos^j t` then `sin^j t`
/// for `j = 0..=k`.
fn power_basis(k: usize) -> Vec<Vec<GaussRational>> {
    let mut columns = Vec::with_capacity(2 * k + 2);
    let mut cos_power = Fourier::one();
    for _ in 0..=k {
        columns.push(cos_power.window(k));
        cos_power = cos_power.mul_cos();
    }
    let mut sin_power = Fourier::one();
    for _ in 0..=k {
        columns.push(sin_power.window(k));
        sin_power = sin_power.mul_sin();
    }
    columns
}

/// Whether `rows * unknowns = rhs` has a solution, by exact forward
/// elimination: inconsistent iff some eliminated row is zero with a nonzero
/// right-hand side.
fn system_is_consistent(mut matrix: Vec<Vec<GaussRational>>, cols: usize) -> bool {
    let rows = matrix.len();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(pivot_row, found);
        for r in pivot_row + 1..rows {
            if matrix[r][col].is_zero() {
                continue;
            }
            let factor = matrix[r][col]
                .checked_div(&matrix[pivot_row][col])
                .expect("pivot is nonzero");
            for c in col..=cols {
                matrix[r][c] = &matrix[r][c] - &(&factor * &matrix[pivot_row][c]);
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    matrix
        .iter()
        .all(|row| row[..cols].iter().any(|v| !v.is_zero()) || row[cols].is_zero())
}

/// Whether `f(t) = p(cos t) + q(sin t)` is solvable, decided by linear
/// algebra alone.
pub fn representability_oracle(f: &TrigPoly) -> bool {
    let k = f.degree();
    let columns = power_basis(k);
    let mut target = Vec::with_capacity(2 * k + 1);
    for n in 0..=k {
        target.push(f.cos_coeff(n));
    }
    for n in 1..=k {
        target.push(f.sin_coeff(n));
    }
    // Augmented row-major matrix: one row per Fourier coordinate.
    let cols = columns.len();
    let matrix: Vec<Vec<GaussRational>> = (0..2 * k + 1)
        .map(|r| {
            let mut row: Vec<GaussRational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    system_is_consistent(matrix, cols)
}
