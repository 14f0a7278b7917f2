//! Symbolic umbral evaluation.
//!
//! A linear form `a_1 (E_1 + x_1) + ... + a_m (E_m + x_m)` in independent
//! umbrae is raised to the `p`-th power, expanded multinomially, and each
//! `E_i^s (..)` monomial is replaced by the Euler polynomial value
//! `E_s(x_i)`. With one term `(1, x)` this is `(E + x)^n = E_n(x)`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::appell::{euler_number, euler_value};
use crate::numeric::{binomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UmbraId(pub u8);

/// `coeff * (E_umbra + shift)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmbralTerm {
    pub coeff: Rational,
    pub shift: Rational,
    pub umbra: UmbraId,
}

impl UmbralTerm {
    pub fn new(coeff: Rational, shift: Rational, umbra: u8) -> Self {
        Self { coeff, shift, umbra: UmbraId(umbra) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UmbralError {
    #[error("umbra {0} appears in more than one term")]
    DuplicateUmbra(u8),
    #[error("exponent must be odd, got {0}")]
    EvenExponent(usize),
}

/// `(sum_i coeff_i (E_i + shift_i))^p` with independent umbrae.
pub fn umbral_power(terms: &[UmbralTerm], p: usize) -> Result<Rational, UmbralError> {
    let mut seen = BTreeSet::new();
    for t in terms {
        if !seen.insert(t.umbra) {
            return Err(UmbralError::DuplicateUmbra(t.umbra.0));
        }
    }
    Ok(expand(terms, p))
}

fn expand(terms: &[UmbralTerm], p: usize) -> Rational {
    let Some((first, rest)) = terms.split_first() else {
        // empty linear form: 0^p
        return if p == 0 { Rational::one() } else { Rational::zero() };
    };
    if rest.is_empty() {
        return first.coeff.pow(p as u32) * euler_value(p, &first.shift);
    }
    (0..=p)
        .map(|s| {
            Rational::from(binomial(p as u64, s as u64))
                * first.coeff.pow(s as u32)
                * euler_value(s, &first.shift)
                * expand(rest, p - s)
        })
        .sum()
}

/// `(hE + kE')^p = sum_s C(p, s) h^s E_s k^(p-s) E_(p-s)`.
pub fn scaled_pair_power(p: usize, h: u64, k: u64) -> Rational {
    let terms = [
        UmbralTerm::new(Rational::from(h), Rational::zero(), 0),
        UmbralTerm::new(Rational::from(k), Rational::zero(), 1),
    ];
    expand(&terms, p)
}

/// Right-hand side of the odd-`p` DC reciprocity formula:
///
/// ```text
/// 2 sum_{u < k, u - [hu/k] odd} (kh(E + u/k) + k(E' + h - [hu/k]))^p
///   + (hE + kE')^p + (p + 2) E_p
/// ```
pub fn theorem9_rhs(p: usize, h: u64, k: u64) -> Result<Rational, UmbralError> {
    if p.is_multiple_of(2) {
        return Err(UmbralError::EvenExponent(p));
    }
    let mut acc = Rational::zero();
    for u in 0..k {
        let fl = h * u / k;
        // u - fl is odd
        if (u + fl) % 2 == 1 {
            let terms = [
                UmbralTerm::new(
                    Rational::from(k * h),
                    Rational::new(u, k).expect("k > 0"),
                    0,
                ),
                UmbralTerm::new(
                    Rational::from(k),
                    Rational::from(h as i64 - fl as i64),
                    1,
                ),
            ];
            acc += umbral_power(&terms, p)?;
        }
    }
    Ok(acc * Rational::from(2)
        + scaled_pair_power(p, h, k)
        + Rational::from(p + 2) * euler_number(p))
}
