//! Univariate slice sampler with stepping out and shrinkage (Neal 2003).

use crate::error::{Error, Result};
use crate::mcmc::draw::{uniform_01, uniform_open01};
use crate::mcmc::rng::RngStream;

#[derive(Debug, Clone, Copy)]
pub struct SliceOptions {
    /// Initial bracket width.
    pub width: f64,
    /// Total stepping-out budget, split randomly between the two sides.
    pub max_stepout: u32,
    /// Shrink steps before giving up with `Error::SamplerStuck`.
    pub max_shrink: u32,
}

impl Default for SliceOptions {
    fn default() -> Self {
        SliceOptions {
            width: 1.0,
            max_stepout: 32,
            max_shrink: 200,
        }
    }
}

impl SliceOptions {
    pub fn with_width(width: f64) -> Self {
        SliceOptions {
            width,
            ..SliceOptions::default()
        }
    }
}

/// One draw from the density `exp(log_density)` starting at `x0`, leaving the
/// target invariant. Deterministic given the rng state.
pub fn slice_sample<F: FnMut(f64) -> f64>(
    mut log_density: F,
    x0: f64,
    opts: &SliceOptions,
    rng: &mut RngStream,
) -> Result<f64> {
    if !(opts.width > 0.0) {
        return Err(Error::invalid_argument(format!(
            "slice width must be positive, got {}",
            opts.width
        )));
    }
    let mut eval = |x: f64| -> Result<f64> {
        let v = log_density(x);
        if v.is_nan() {
            return Err(Error::Numeric(format!("log density returned NaN at {x}")));
        }
        Ok(v)
    };

    let f0 = eval(x0)?;
    if !f0.is_finite() {
        return Err(Error::invalid_argument(format!(
            "log density not finite at initial point {x0}"
        )));
    }

    // Slice level under the density at the current point.
    let y = f0 + uniform_open01(rng).ln();

    // Stepping out.
    let w = opts.width;
    let mut left = x0 - w * uniform_01(rng);
    let mut right = left + w;
    if opts.max_stepout > 0 {
        let budget = opts.max_stepout;
        let mut j = (uniform_01(rng) * budget as f64).floor() as u32;
        let mut k = budget - 1 - j;
        while j > 0 && y < eval(left)? {
            left -= w;
            j -= 1;
        }
        while k > 0 && y < eval(right)? {
            right += w;
            k -= 1;
        }
    }

    // Shrinkage.
    for _ in 0..opts.max_shrink {
        let x1 = left + uniform_01(rng) * (right - left);
        if y < eval(x1)? {
            return Ok(x1);
        }
        if x1 < x0 {
            left = x1;
        } else {
            right = x1;
        }
    }
    Err(Error::SamplerStuck(opts.max_shrink))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn std_normal(x: f64) -> f64 {
        -0.5 * x * x
    }

    #[test]
    fn normal_moments() {
        let mut rng = RngStream::new(12, 0);
        let opts = SliceOptions::default();
        let n = 10_000;
        let mut x = 0.0;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in 0..n {
            x = slice_sample(std_normal, x, &opts, &mut rng).unwrap();
            sum += x;
            sum_sq += x * x;
        }
        let mean = sum / n as f64;
        let var = sum_sq / n as f64 - mean * mean;
        assert!((-0.05..=0.05).contains(&mean), "mean = {mean}");
        assert!((0.94..=1.06).contains(&var), "var = {var}");
    }

    #[test]
    fn normal_kolmogorov_smirnov() {
        use statrs::distribution::{ContinuousCDF, Normal};
        let mut rng = RngStream::new(99, 0);
        let opts = SliceOptions::default();
        let n = 10_000usize;
        let mut x = 0.3;
        let mut draws = Vec::with_capacity(n);
        for _ in 0..n {
            x = slice_sample(std_normal, x, &opts, &mut rng).unwrap();
            draws.push(x);
        }
        draws.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let normal = Normal::new(0.0, 1.0).unwrap();
        let mut d = 0.0f64;
        for (i, &v) in draws.iter().enumerate() {
            let cdf = normal.cdf(v);
            d = d.max((cdf - i as f64 / n as f64).abs());
            d = d.max(((i + 1) as f64 / n as f64 - cdf).abs());
        }
        // asymptotic KS critical value at significance 0.001
        let crit = (-((0.001f64 / 2.0).ln()) / (2.0 * n as f64)).sqrt();
        assert!(d < crit, "ks = {d}, crit = {crit}");
    }

    #[test]
    fn degenerate_narrow_target() {
        // near point mass at 5
        let mut rng = RngStream::new(4, 0);
        let opts = SliceOptions::default();
        let x = slice_sample(
            |x| {
                let z = (x - 5.0) / 1e-6;
                -0.5 * z * z
            },
            5.0,
            &opts,
            &mut rng,
        )
        .unwrap();
        assert!((x - 5.0).abs() < 1e-4);
    }

    #[test]
    fn deterministic_given_seed() {
        let opts = SliceOptions::default();
        let mut a = RngStream::new(8, 1);
        let mut b = RngStream::new(8, 1);
        let xa = slice_sample(std_normal, 0.1, &opts, &mut a).unwrap();
        let xb = slice_sample(std_normal, 0.1, &opts, &mut b).unwrap();
        assert_eq!(xa.to_bits(), xb.to_bits());
    }

    #[test]
    fn nan_density_is_reported() {
        let mut rng = RngStream::new(8, 1);
        let opts = SliceOptions::default();
        let err = slice_sample(|x| if x > 0.5 { f64::NAN } else { 0.0 }, 0.0, &opts, &mut rng);
        assert!(matches!(err, Err(Error::Numeric(_))));
    }

    #[test]
    fn rejects_bad_start_and_width() {
        let mut rng = RngStream::new(8, 1);
        let opts = SliceOptions::with_width(0.0);
        assert!(slice_sample(std_normal, 0.0, &opts, &mut rng).is_err());
        let opts = SliceOptions::default();
        assert!(slice_sample(|_| f64::NEG_INFINITY, 0.0, &opts, &mut rng).is_err());
    }
}
