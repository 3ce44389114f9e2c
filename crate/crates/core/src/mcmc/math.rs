use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

/// log(1/(1+exp(-x))), stable over the whole f64 range.
pub fn log_sigmoid(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::invalid_argument(format!(
            "log_sigmoid requires finite input, got {x}"
        )));
    }
    Ok(log_sigmoid_raw(x))
}

/// Unchecked variant for hot paths where the argument is finite by
/// construction.
#[inline]
pub(crate) fn log_sigmoid_raw(x: f64) -> f64 {
    if x >= 0.0 {
        -(-x).exp().ln_1p()
    } else {
        x - x.exp().ln_1p()
    }
}

/// Bernoulli log-mass under a logit: log sigma(eta) if linked, else
/// log sigma(-eta).
#[inline]
pub(crate) fn bernoulli_logp(linked: bool, eta: f64) -> f64 {
    crate::counters::note_pair_term();
    if linked {
        log_sigmoid_raw(eta)
    } else {
        log_sigmoid_raw(-eta)
    }
}

/// log sum_i exp(v_i) via max shift.
pub fn log_sum_exp(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::invalid_argument("log_sum_exp of empty sequence"));
    }
    let m = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return Ok(f64::NEG_INFINITY);
    }
    let sum: f64 = values.iter().map(|v| (v - m).exp()).sum();
    Ok(m + sum.ln())
}

/// log Beta(a, b) = log Gamma(a) + log Gamma(b) - log Gamma(a+b).
pub fn log_beta_fn(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(Error::invalid_argument(format!(
            "log_beta_fn requires positive arguments, got ({a}, {b})"
        )));
    }
    Ok(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b))
}

/// log Gamma(x+1), i.e. log x!.
pub(crate) fn ln_factorial(x: usize) -> f64 {
    ln_gamma(x as f64 + 1.0)
}

pub(crate) fn gaussian_log_pdf(x: f64, mu: f64, sigma: f64) -> f64 {
    let z = (x - mu) / sigma;
    -0.5 * z * z - sigma.ln() - 0.5 * (2.0 * std::f64::consts::PI).ln()
}

/// Gamma(shape, rate) log-density.
pub(crate) fn gamma_log_pdf(x: f64, shape: f64, rate: f64) -> f64 {
    if x <= 0.0 {
        return f64::NEG_INFINITY;
    }
    shape * rate.ln() - ln_gamma(shape) + (shape - 1.0) * x.ln() - rate * x
}

/// Mean and naive iid standard error.
pub fn mean_se_iid(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Mean and batch-means standard error for autocorrelated sequences.
pub fn mean_se_batch(xs: &[f64], n_batches: usize) -> (f64, f64) {
    assert!(n_batches >= 2 && xs.len() >= 2 * n_batches);
    let b = xs.len() / n_batches;
    let used = b * n_batches;
    let mean = xs[..used].iter().sum::<f64>() / used as f64;
    let batch_means: Vec<f64> = (0..n_batches)
        .map(|k| xs[k * b..(k + 1) * b].iter().sum::<f64>() / b as f64)
        .collect();
    let var_bm = batch_means
        .iter()
        .map(|m| (m - mean) * (m - mean))
        .sum::<f64>()
        / (n_batches as f64 - 1.0);
    (mean, (var_bm / n_batches as f64).sqrt())
}
