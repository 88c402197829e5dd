//! Crate-internal helpers shared by the polynomial types.

use alloc::string::{String, ToString};

use crate::gauss::GaussRational;

/// Appends one rendered term to `out`, joining with ` + ` / ` - ` and
/// folding the sign of negative real coefficients into the separator.
/// `monomial` is the variable part (`"x^2"`, `"cos(2t)"`, ...); empty for
/// constant terms. Callers render the zero polynomial themselves.
pub(crate) fn push_term(out: &mut String, coeff: &GaussRational, monomial: &str) {
    let (negative, magnitude) = coeff.sign_split();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    if monomial.is_empty() {
        out.push_str(&magnitude.to_string());
    } else if magnitude.is_one() {
        out.push_str(monomial);
    } else {
        out.push_str(&magnitude.to_string());
        out.push('*');
        out.push_str(monomial);
    }
}

/// Implements the owned/borrowed combinations of a binary operator in terms
/// of the `&T op &T` impl.
macro_rules! forward_binop {
    (impl $imp:ident, $method:ident for $t:ty) => {
        impl $imp<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                (&self).$method(rhs)
            }
        }
        impl $imp<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                self.$method(&rhs)
            }
        }
    };
}

pub(crate) use forward_binop;
