//! Seedable randomness and numerically stable scalar primitives shared by
//! every sampler.

pub mod draw;
mod math;
mod rng;
mod slice;

pub use math::{log_beta_fn, log_sigmoid, log_sum_exp, mean_se_batch, mean_se_iid};
pub(crate) use math::{bernoulli_logp, gamma_log_pdf, gaussian_log_pdf, ln_factorial, log_sigmoid_raw};
pub use rng::RngStream;
pub use slice::{slice_sample, SliceOptions};
