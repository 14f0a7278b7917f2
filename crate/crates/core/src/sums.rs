//! Finite sums: Dedekind sums, DC sums, alternating power sums and the lattice
//! sums that appear in the reciprocity argument for DC sums.
//!
//! Every sum is evaluated directly from its definition; there are no fast
//! paths.

use num_integer::Integer;
use thiserror::Error;

use crate::appell::euler_value;
use crate::numeric::{sign_pow, Rational};
use crate::periodic::{bernoulli_function, euler_function, sawtooth};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("{name} must be positive")]
    NotPositive { name: &'static str },
    #[error("gcd({h}, {k}) = {gcd}, expected coprime arguments")]
    NotCoprime { h: u64, k: u64, gcd: u64 },
}

fn require_coprime(h: u64, k: u64) -> Result<(), PreconditionError> {
    if h == 0 {
        return Err(PreconditionError::NotPositive { name: "h" });
    }
    if k == 0 {
        return Err(PreconditionError::NotPositive { name: "k" });
    }
    let gcd = h.gcd(&k);
    if gcd != 1 {
        return Err(PreconditionError::NotCoprime { h, k, gcd });
    }
    Ok(())
}

fn q(n: u64, d: u64) -> Rational {
    Rational::new(n, d).expect("positive denominator")
}

/// Classical Dedekind sum `S(h, k) = sum_{u=1}^{k-1} ((u/k)) ((hu/k))`.
pub fn dedekind_sum(h: u64, k: u64) -> Result<Rational, PreconditionError> {
    require_coprime(h, k)?;
    Ok((1..k)
        .map(|u| sawtooth(&q(u, k)) * sawtooth(&q(h * u, k)))
        .sum())
}

/// `S_p(h, k) = sum_{a=1}^{k-1} (a/k) B_p({ah/k})`.
pub fn gen_dedekind_sum(p: usize, h: u64, k: u64) -> Result<Rational, PreconditionError> {
    require_coprime(h, k)?;
    Ok((1..k)
        .map(|a| q(a, k) * bernoulli_function(p, &q(a * h, k)))
        .sum())
}

/// DC sum `T_p(h, k) = 2 sum_{u=1}^{k-1} (-1)^(u-1) (u/k) Ebar_p(hu/k)`.
///
/// No coprimality is required; `k <= 1` gives the empty sum.
pub fn dc_sum(p: usize, h: u64, k: u64) -> Rational {
    let s: Rational = (1..k)
        .map(|u| sign_pow(u as i64 - 1) * q(u, k) * euler_function(p, &q(h * u, k)))
        .sum();
    s * Rational::from(2)
}

/// `2 sum_{j=0}^{n-1} (-1)^j j^l`, with `0^0 = 1`.
pub fn alt_power_sum(n: u64, l: u32) -> Rational {
    let s: Rational = (0..n)
        .map(|j| sign_pow(j as i64) * Rational::from(j).pow(l))
        .sum();
    s * Rational::from(2)
}

/// Which function the lattice double sum evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeKernel {
    /// Antiperiodic Euler function `Ebar_p`.
    Periodic,
    /// Euler polynomial `E_p`, also at arguments `>= 1`.
    Polynomial,
}

/// `2 (hk)^p sum_{u<k} sum_{v<h} (-1)^(u+v-1) ((uh+vk)/(hk)) F_p(u/k + v/h)`.
pub fn theorem8_rhs(p: usize, h: u64, k: u64, kernel: LatticeKernel) -> Rational {
    if h == 0 || k == 0 {
        return Rational::zero();
    }
    let hk = h * k;
    let mut acc = Rational::zero();
    for u in 0..k {
        for v in 0..h {
            let lambda = u * h + v * k;
            if lambda == 0 {
                continue;
            }
            let arg = q(lambda, hk);
            let f = match kernel {
                LatticeKernel::Periodic => euler_function(p, &arg),
                LatticeKernel::Polynomial => euler_value(p, &arg),
            };
            acc += sign_pow((u + v) as i64 - 1) * &arg * f;
        }
    }
    acc * Rational::from(hk).pow(p as u32) * Rational::from(2)
}

/// `S = 2 sum (-1)^(u+v-1) E_p(u/k + v/h)` over `0 <= u < k`, `0 <= v < h`
/// with `uh + vk < hk`.
pub fn restricted_lattice_sum(p: usize, h: u64, k: u64) -> Rational {
    let hk = h * k;
    let mut acc = Rational::zero();
    for u in 0..k {
        for v in 0..h {
            let lambda = u * h + v * k;
            if lambda < hk {
                acc += sign_pow((u + v) as i64 - 1) * euler_value(p, &q(lambda, hk));
            }
        }
    }
    acc * Rational::from(2)
}

/// The values `uh + vk` over the `k x h` grid, split at `hk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePartition {
    /// Values in `[0, hk)`, ascending.
    pub below: Vec<u64>,
    /// Values in `[hk + 1, 2hk)`, ascending.
    pub above: Vec<u64>,
}

pub fn lattice_partition(h: u64, k: u64) -> Result<LatticePartition, PreconditionError> {
    require_coprime(h, k)?;
    let hk = h * k;
    let mut below = Vec::new();
    let mut above = Vec::new();
    for u in 0..k {
        for v in 0..h {
            let lambda = u * h + v * k;
            if lambda < hk {
                below.push(lambda);
            } else {
                // lambda == hk would need h | v with v < h, v > 0
                debug_assert!(lambda > hk && lambda < 2 * hk);
                above.push(lambda);
            }
        }
    }
    below.sort_unstable();
    above.sort_unstable();
    Ok(LatticePartition { below, above })
}
