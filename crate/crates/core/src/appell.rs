//! Euler and Bernoulli numbers and polynomials.
//!
//! The production path uses the classical recurrences
//!
//! ```text
//! E_0 = 1,  E_n = -1/2 * sum_{l<n} C(n, l) E_l
//! B_0 = 1,  B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k
//! ```
//!
//! memoized in a [`SequenceCache`]. [`series_coeffs_oracle`] computes the same
//! values by dividing truncated power series and shares no code with the
//! recurrences; tests cross-check the two.

use std::sync::{Arc, OnceLock, RwLock};

use crate::numeric::{binomial, Rational};
pub use crate::poly::Poly;

/// Prefix-stable memo of Euler and Bernoulli numbers and polynomials.
///
/// Reads take a shared lock; extending a sequence takes the write lock and
/// fills every missing index up to the requested one.
#[derive(Debug, Default)]
pub struct SequenceCache {
    euler: RwLock<Vec<Rational>>,
    bernoulli: RwLock<Vec<Rational>>,
    euler_polys: RwLock<Vec<Arc<Poly>>>,
    bernoulli_polys: RwLock<Vec<Arc<Poly>>>,
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by the free functions of this module.
    pub fn global() -> &'static SequenceCache {
        static CACHE: OnceLock<SequenceCache> = OnceLock::new();
        CACHE.get_or_init(SequenceCache::new)
    }

    pub fn euler(&self, n: usize) -> Rational {
        extend(&self.euler, n, |seq, m| {
            if m == 0 {
                return Rational::one();
            }
            let s: Rational = seq
                .iter()
                .enumerate()
                .map(|(l, e)| Rational::from(binomial(m as u64, l as u64)) * e)
                .sum();
            -s / Rational::from(2)
        })
    }

    pub fn bernoulli(&self, n: usize) -> Rational {
        extend(&self.bernoulli, n, |seq, m| {
            if m == 0 {
                return Rational::one();
            }
            let s: Rational = seq
                .iter()
                .enumerate()
                .map(|(k, b)| Rational::from(binomial(m as u64 + 1, k as u64)) * b)
                .sum();
            -s / Rational::from(m + 1)
        })
    }

    pub fn euler_poly(&self, n: usize) -> Arc<Poly> {
        extend(&self.euler_polys, n, |_, m| Arc::new(appell_poly(m, |l| self.euler(l))))
    }

    pub fn bernoulli_poly(&self, n: usize) -> Arc<Poly> {
        extend(&self.bernoulli_polys, n, |_, m| {
            Arc::new(appell_poly(m, |k| self.bernoulli(k)))
        })
    }

    /// Number of Euler numbers currently memoized.
    pub fn euler_len(&self) -> usize {
        self.euler.read().expect("cache lock poisoned").len()
    }
}

fn extend<T: Clone>(cell: &RwLock<Vec<T>>, n: usize, next: impl Fn(&[T], usize) -> T) -> T {
    if let Some(v) = cell.read().expect("cache lock poisoned").get(n) {
        return v.clone();
    }
    let mut seq = cell.write().expect("cache lock poisoned");
    while seq.len() <= n {
        let m = seq.len();
        let v = next(&seq, m);
        seq.push(v);
    }
    seq[n].clone()
}

/// `sum_l C(n, l) a_l x^(n-l)`.
fn appell_poly(n: usize, number: impl Fn(usize) -> Rational) -> Poly {
    let coeffs = (0..=n)
        .map(|i| Rational::from(binomial(n as u64, i as u64)) * number(n - i))
        .collect();
    Poly::new(coeffs)
}

/// Euler number `E_n = E_n(0)`; `E_1 = -1/2`.
pub fn euler_number(n: usize) -> Rational {
    SequenceCache::global().euler(n)
}

/// Bernoulli number with `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    SequenceCache::global().bernoulli(n)
}

pub fn euler_poly(n: usize) -> Poly {
    Poly::clone(&SequenceCache::global().euler_poly(n))
}

pub fn bernoulli_poly(n: usize) -> Poly {
    Poly::clone(&SequenceCache::global().bernoulli_poly(n))
}

/// `E_n(x)`.
pub fn euler_value(n: usize, x: &Rational) -> Rational {
    SequenceCache::global().euler_poly(n).eval(x)
}

/// `B_n(x)`.
pub fn bernoulli_value(n: usize, x: &Rational) -> Rational {
    SequenceCache::global().bernoulli_poly(n).eval(x)
}

pub fn eval_poly(p: &Poly, x: &Rational) -> Rational {
    p.eval(x)
}

pub fn poly_derivative(p: &Poly) -> Poly {
    p.derivative()
}

/// Antiderivative `q` with `q(0) = 0`.
pub fn poly_integral(p: &Poly) -> Poly {
    p.integral()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `2 e^{xt} / (e^t + 1)`
    Euler,
    /// `t e^{xt} / (e^t - 1)`
    Bernoulli,
}

/// `[P_0(x), ..., P_{n_max}(x)]` from the exponential generating function of
/// the chosen family, by exact truncated power-series division.
pub fn series_coeffs_oracle(n_max: usize, kind: SeriesKind, x: &Rational) -> Vec<Rational> {
    let len = n_max + 1;
    // 1/k! for k up to n_max + 1
    let mut inv_fact = Vec::with_capacity(len + 1);
    inv_fact.push(Rational::one());
    for k in 1..=len {
        let prev: &Rational = &inv_fact[k - 1];
        inv_fact.push(prev / Rational::from(k));
    }
    let mut exp_xt = Vec::with_capacity(len);
    let mut x_pow = Rational::one();
    for f in &inv_fact[..len] {
        exp_xt.push(&x_pow * f);
        x_pow *= x;
    }
    let (num, den): (Vec<Rational>, Vec<Rational>) = match kind {
        SeriesKind::Euler => {
            // e^t + 1 = 2 + t + t^2/2! + ...
            let mut den = inv_fact[..len].to_vec();
            den[0] = Rational::from(2);
            (exp_xt.iter().map(|c| c * Rational::from(2)).collect(), den)
        }
        // (e^t - 1)/t = sum t^k / (k+1)!
        SeriesKind::Bernoulli => (exp_xt, inv_fact[1..=len].to_vec()),
    };
    let quotient = series_div(&num, &den);
    let mut fact = Rational::one();
    quotient
        .into_iter()
        .enumerate()
        .map(|(n, q)| {
            if n > 0 {
                fact = &fact * Rational::from(n);
            }
            q * &fact
        })
        .collect()
}

/// Truncated `num / den` to `num.len()` terms; `den[0]` must be nonzero.
fn series_div(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let inv_lead = den[0].recip().expect("series with zero constant term");
    let mut q: Vec<Rational> = Vec::with_capacity(num.len());
    for (n, a) in num.iter().enumerate() {
        let mut acc = a.clone();
        for (j, qj) in q.iter().enumerate() {
            if let Some(d) = den.get(n - j) {
                acc -= qj * d;
            }
        }
        q.push(acc * &inv_lead);
    }
    q
}
