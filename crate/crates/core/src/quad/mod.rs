//! Numerical oracles for the closed forms.

mod gk;
mod sinc;
mod stat;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::Real;

pub use sinc::integrate_sinc_power;
pub use stat::{
    alt_sum, alt_sum_closed, be_closed, be_sine_transform, fd_closed, fd_partial_fraction,
    fd_sine_transform, rl_half_derivative,
};

/// Integrand evaluations allowed per oracle call.
pub const BUDGET: usize = 10_000_000;

/// Depth of the iterated averaging applied to alternating partial sums.
pub const EULER_DEPTH: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<F> {
    pub value: F,
    pub abs_err_estimate: F,
    pub converged: bool,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("no convergence after {0} evaluations")]
    NoConvergence(usize),
    #[error("integral diverges")]
    Divergent,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Range {
    Full,
    Half,
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Range::Full => "full",
            Range::Half => "half",
        })
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Range::Full),
            "half" => Ok(Range::Half),
            other => Err(format!("unknown range {other:?} (expected full or half)")),
        }
    }
}

/// Averages the last `depth + 1` partial sums pairwise `depth` times.
pub fn euler_average<F: Real>(partials: &[F], depth: usize) -> F {
    let depth = depth.min(partials.len().saturating_sub(1));
    let mut row: Vec<F> = partials[partials.len() - depth - 1..].to_vec();
    let half = F::of(0.5);
    while row.len() > 1 {
        row = row.windows(2).map(|w| half * (w[0] + w[1])).collect();
    }
    row[0]
}

/// `sin x / x`, by its Taylor polynomial below `|x| < 10⁻³`.
pub(crate) fn sinc<F: Real>(x: F) -> F {
    if x.abs() < F::of(1e-3) {
        let x2 = x * x;
        let c = [1.0, -1.0 / 6.0, 1.0 / 120.0, -1.0 / 5040.0, 1.0 / 362880.0];
        c.iter()
            .rev()
            .fold(F::zero(), |acc, &ci| acc * x2 + F::of(ci))
    } else {
        x.sin() / x
    }
}
