//! Power-law (scale-free) degree laws `p(k) ∝ k^(−α)` on integer degrees.
//!
//! Moments are evaluated in closed form: the first [`HEAD_TERMS`] degrees are
//! summed directly and the tail is the exact integral plus Euler–Maclaurin
//! boundary corrections. The integral has a logarithmic branch whenever the
//! integrand exponent is −1 (α = 2 for the mean, α = 3 for the second moment).

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Degrees summed term by term before switching to the corrected integral.
pub const HEAD_TERMS: u64 = 32;

/// Largest accepted exponent.
pub const MAX_ALPHA: f64 = 4.0;

/// How the largest degree of the law is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cutoff {
    /// `k_max = k_min · N^(1/(α−1))`, the degree exceeded by about one node
    /// in an `N`-node sample.
    Natural,
    Explicit(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLaw<T> {
    pub alpha: T,
    pub k_min: u64,
    pub cutoff: Cutoff,
}

impl<T: Scalar> PowerLaw<T> {
    pub fn new(alpha: T, k_min: u64, cutoff: Cutoff) -> Result<Self> {
        let law = Self {
            alpha,
            k_min,
            cutoff,
        };
        law.validate()?;
        Ok(law)
    }

    /// Natural cutoff, `k_min = 1`.
    pub fn natural(alpha: T) -> Result<Self> {
        Self::new(alpha, 1, Cutoff::Natural)
    }

    pub fn validate(&self) -> Result<()> {
        let a = self.alpha.as_f64();
        if !(a > 1.0 && a <= MAX_ALPHA) {
            return domain("alpha", a, "exponent must satisfy 1 < alpha <= 4");
        }
        if self.k_min < 1 {
            return domain("k_min", 0.0, "minimum degree must be at least 1");
        }
        if let Cutoff::Explicit(k_max) = self.cutoff {
            if k_max < self.k_min {
                return domain("k_max", k_max as f64, "explicit cutoff must be >= k_min");
            }
        }
        Ok(())
    }

    /// Largest degree of the law for a network of `n_total` nodes, real valued.
    pub fn max_degree(&self, n_total: u64) -> Result<T> {
        self.validate()?;
        if n_total < 2 {
            return domain("n_total", n_total as f64, "a network needs at least 2 nodes");
        }
        Ok(match self.cutoff {
            Cutoff::Natural => {
                let exponent = T::one() / (self.alpha - T::one());
                T::from_count(self.k_min) * T::from_count(n_total).powf(exponent)
            }
            Cutoff::Explicit(k_max) => T::from_count(k_max),
        })
    }

    /// Largest integer degree the law can produce.
    fn k_max_int(&self, n_total: u64) -> Result<T> {
        Ok(self.max_degree(n_total)?.floor().max(T::from_count(self.k_min)))
    }

    /// `Σ k^order · k^(−α)` over the support, unnormalized.
    pub fn raw_moment(&self, order: i32, n_total: u64) -> Result<T> {
        let upper = self.k_max_int(n_total)?;
        Ok(power_sum(
            T::from_count(self.k_min),
            upper,
            T::from_i32(order).unwrap() - self.alpha,
        ))
    }

    /// `E[k^order]` under the normalized law.
    pub fn moment(&self, order: i32, n_total: u64) -> Result<T> {
        Ok(self.raw_moment(order, n_total)? / self.raw_moment(0, n_total)?)
    }

    /// Mean degree `⟨k⟩ = Σ k p(k)` for a network of `n_total` nodes.
    pub fn mean_degree(&self, n_total: u64) -> Result<T> {
        self.moment(1, n_total)
    }

    /// Draws one degree. Exact rejection sampling against the floor of a
    /// continuous Pareto proposal on `[k_min, k_max + 1)`.
    pub fn sample_degree<R: Rng + ?Sized>(&self, n_total: u64, rng: &mut R) -> Result<u64> {
        let sampler = DegreeSampler::new(self, n_total)?;
        Ok(sampler.sample(rng))
    }

    pub fn sample_degrees<R: Rng + ?Sized>(
        &self,
        n_total: u64,
        count: usize,
        rng: &mut R,
    ) -> Result<Vec<u64>> {
        let sampler = DegreeSampler::new(self, n_total)?;
        Ok((0..count).map(|_| sampler.sample(rng)).collect())
    }
}

/// `Σ_{k=lo}^{hi} k^s` for integers `lo <= hi` (given as scalars).
fn power_sum<T: Scalar>(lo: T, hi: T, s: T) -> T {
    let head_end = hi.min(lo + T::from_count(HEAD_TERMS - 1));
    let mut sum = T::zero();
    let mut k = lo;
    while k <= head_end {
        sum = sum + k.powf(s);
        k = k + T::one();
    }
    if head_end >= hi {
        return sum;
    }
    sum + euler_maclaurin(head_end + T::one(), hi, s)
}

/// Euler–Maclaurin estimate of `Σ_{k=a}^{b} k^s`, accurate for `a` of a few
/// tens and any `b >= a`.
fn euler_maclaurin<T: Scalar>(a: T, b: T, s: T) -> T {
    let one = T::one();
    let two = T::lit(2.0);
    let d1 = |x: T| s * x.powf(s - one);
    let d3 = |x: T| s * (s - one) * (s - two) * x.powf(s - T::lit(3.0));
    let d5 = |x: T| {
        s * (s - one) * (s - two) * (s - T::lit(3.0)) * (s - T::lit(4.0)) * x.powf(s - T::lit(5.0))
    };
    power_integral(a, b, s) + (a.powf(s) + b.powf(s)) / two + (d1(b) - d1(a)) / T::lit(12.0)
        - (d3(b) - d3(a)) / T::lit(720.0)
        + (d5(b) - d5(a)) / T::lit(30240.0)
}

/// `∫_a^b x^s dx` for `0 < a <= b`, without cancellation near `s = −1`.
fn power_integral<T: Scalar>(a: T, b: T, s: T) -> T {
    let log_ratio = (b / a).ln();
    let p = s + T::one();
    if p == T::zero() {
        return log_ratio;
    }
    a.powf(p) * (p * log_ratio).exp_m1() / p
}

/// Rejection sampler for integer degrees; precomputes the proposal constants.
#[derive(Debug, Clone)]
pub(crate) struct DegreeSampler {
    alpha: f64,
    k_min: u64,
    k_max: u64,
    lower_pow: f64,
    span: f64,
    bound: f64,
}

impl DegreeSampler {
    pub(crate) fn new<T: Scalar>(law: &PowerLaw<T>, n_total: u64) -> Result<Self> {
        let alpha = law.alpha.as_f64();
        let k_max = law.k_max_int(n_total)?.as_f64();
        if k_max >= u64::MAX as f64 {
            return domain("k_max", k_max, "cutoff too large to sample");
        }
        let k_max = k_max as u64;
        let beta = 1.0 - alpha;
        let lower_pow = (law.k_min as f64).powf(beta);
        let upper_pow = (k_max as f64 + 1.0).powf(beta);
        let mut sampler = Self {
            alpha,
            k_min: law.k_min,
            k_max,
            lower_pow,
            span: lower_pow - upper_pow,
            bound: 1.0,
        };
        sampler.bound = sampler.ratio(law.k_min);
        Ok(sampler)
    }

    /// `k^(−α) / ∫_k^{k+1} x^(−α) dx`, which is >= 1 and decreasing in `k`.
    fn ratio(&self, k: u64) -> f64 {
        let k = k as f64;
        let beta = 1.0 - self.alpha;
        let cell = k.powf(beta) * -(beta * (1.0 / k).ln_1p()).exp_m1() / (self.alpha - 1.0);
        k.powf(-self.alpha) / cell
    }

    pub(crate) fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let beta = 1.0 - self.alpha;
        loop {
            let u: f64 = rng.random();
            let x = (self.lower_pow - u * self.span).powf(1.0 / beta);
            let k = (x.floor() as u64).clamp(self.k_min, self.k_max);
            let accept: f64 = rng.random();
            if accept * self.bound <= self.ratio(k) {
                return k;
            }
        }
    }
}
