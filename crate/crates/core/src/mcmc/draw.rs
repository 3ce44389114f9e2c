//! Seedable draws from the standard distributions the samplers consume.

use rand::Rng;
use rand_distr::Distribution;

use crate::error::{Error, Result};
use crate::mcmc::math::log_sum_exp;
use crate::mcmc::rng::RngStream;

pub fn gaussian(rng: &mut RngStream, mean: f64, std_dev: f64) -> Result<f64> {
    if !(std_dev > 0.0) || !mean.is_finite() {
        return Err(Error::invalid_argument(format!(
            "gaussian requires finite mean and positive std dev, got ({mean}, {std_dev})"
        )));
    }
    let d = rand_distr::Normal::new(mean, std_dev)
        .map_err(|e| Error::invalid_argument(e.to_string()))?;
    Ok(d.sample(rng))
}

/// Gamma draw in shape/rate parameterisation.
pub fn gamma(rng: &mut RngStream, shape: f64, rate: f64) -> Result<f64> {
    if !(shape > 0.0) || !(rate > 0.0) {
        return Err(Error::invalid_argument(format!(
            "gamma requires positive shape and rate, got ({shape}, {rate})"
        )));
    }
    let d = rand_distr::Gamma::new(shape, 1.0 / rate)
        .map_err(|e| Error::invalid_argument(e.to_string()))?;
    Ok(d.sample(rng))
}

pub fn poisson(rng: &mut RngStream, lambda: f64) -> Result<u64> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::invalid_argument(format!(
            "poisson requires finite non-negative rate, got {lambda}"
        )));
    }
    if lambda == 0.0 {
        return Ok(0);
    }
    let d = rand_distr::Poisson::new(lambda)
        .map_err(|e| Error::invalid_argument(e.to_string()))?;
    Ok(d.sample(rng))
}

pub fn bernoulli(rng: &mut RngStream, p: f64) -> Result<bool> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid_argument(format!(
            "bernoulli requires p in [0, 1], got {p}"
        )));
    }
    Ok(rng.random::<f64>() < p)
}

pub fn beta(rng: &mut RngStream, a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(Error::invalid_argument(format!(
            "beta requires positive shapes, got ({a}, {b})"
        )));
    }
    let d = rand_distr::Beta::new(a, b).map_err(|e| Error::invalid_argument(e.to_string()))?;
    Ok(d.sample(rng))
}

/// Uniform draw in [0, 1).
#[inline]
pub fn uniform_01(rng: &mut RngStream) -> f64 {
    rng.random::<f64>()
}

/// Uniform draw in (0, 1], safe to take a logarithm of.
#[inline]
pub(crate) fn uniform_open01(rng: &mut RngStream) -> f64 {
    1.0 - rng.random::<f64>()
}

/// Categorical draw from unnormalised log-weights, normalised internally
/// via log-sum-exp.
pub fn categorical_from_log_weights(rng: &mut RngStream, log_weights: &[f64]) -> Result<usize> {
    let norm = log_sum_exp(log_weights)?;
    if norm == f64::NEG_INFINITY {
        return Err(Error::invalid_argument(
            "categorical weights are all zero".to_string(),
        ));
    }
    if norm.is_nan() {
        return Err(Error::Numeric("NaN categorical weight".to_string()));
    }
    let u = uniform_01(rng);
    let mut acc = 0.0;
    let mut last_positive = 0;
    for (idx, &lw) in log_weights.iter().enumerate() {
        let p = (lw - norm).exp();
        if p > 0.0 {
            last_positive = idx;
        }
        acc += p;
        if u < acc {
            return Ok(idx);
        }
    }
    // Round-off can leave acc marginally below 1; fall back to the last
    // option with positive mass.
    Ok(last_positive)
}

/// Fisher–Yates permutation of 0..n.
pub fn permutation(rng: &mut RngStream, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

/// Sample `k` distinct indices from 0..n (order not meaningful).
pub fn sample_without_replacement(rng: &mut RngStream, n: usize, k: usize) -> Vec<usize> {
    assert!(k <= n);
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.random_range(i..n);
        pool.swap(i, j);
    }
    pool.truncate(k);
    pool
}
