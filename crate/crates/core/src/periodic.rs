//! Sawtooth, Bernoulli function and Euler function on all rationals.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::appell::{bernoulli_value, euler_value};
use crate::numeric::Rational;

/// `([x], {x})` with floor toward negative infinity and `0 <= {x} < 1`.
pub fn floor_frac(x: &Rational) -> (BigInt, Rational) {
    let fl = x.floor();
    let frac = x - Rational::from(fl.clone());
    (fl, frac)
}

/// `((x))`: `x - [x] - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        return Rational::zero();
    }
    let (_, frac) = floor_frac(x);
    frac - Rational::frac(1, 2)
}

/// `B_p({x})`, period 1.
pub fn bernoulli_function(p: usize, x: &Rational) -> Rational {
    let (_, frac) = floor_frac(x);
    bernoulli_value(p, &frac)
}

/// `(-1)^[x] E_p({x})`: agrees with `E_p` on `[0, 1)` and changes sign under
/// `x -> x + 1`.
pub fn euler_function(p: usize, x: &Rational) -> Rational {
    let (fl, frac) = floor_frac(x);
    let v = euler_value(p, &frac);
    if fl.is_odd() {
        -v
    } else {
        v
    }
}
