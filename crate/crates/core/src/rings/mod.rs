//! The four concrete coefficient rings.
//!
//! | ring                | twist sigma          | derivation delta | coordinate subfield |
//! |---------------------|----------------------|------------------|---------------------|
//! | gf(p^m)             | Frobenius power      | 0                | F_(p^gcd(s,m))      |
//! | rational quaternions| identity             | 0                | Q (the center)      |
//! | gaussian rationals  | complex conjugation  | 0                | Q                   |
//! | F_p(z)              | identity             | c * d/dz         | F_p(z^p)            |

pub(crate) mod fp;

pub mod ff;
pub mod gaussian;
pub mod quaternion;
pub mod ratfun;

pub use ff::{FfElem, FiniteField};
pub use gaussian::{GaussQ, GaussianRationals};
pub use quaternion::{Quat, Quaternions};
pub use ratfun::{RatFun, RatFunField};

use num_rational::BigRational;
use num_traits::One;

/// "3", "-3", "3/2", "-3/2" — lowest terms, positive denominator.
pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
