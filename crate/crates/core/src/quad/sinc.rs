use super::gk::Adaptive;
use super::{euler_average, sinc, QuadError, QuadResult, Range, BUDGET, EULER_DEPTH};
use num_traits::ToPrimitive;

use crate::exact::binomial;
use crate::Real;

/// `sinⁿx/xᵐ` written as `(sin x/x)ⁿ·x^{n−m}`, continuous at 0.
fn integrand<F: Real>(n: u32, m: u32, x: F) -> F {
    sinc(x).powi(n as i32) * x.powi((n - m) as i32)
}

struct Panels<F> {
    n: u32,
    m: u32,
    tol: F,
    values: Vec<F>,
    error: F,
    quad: Adaptive,
}

impl<F: Real> Panels<F> {
    /// Integrals over `[jπ, (j+1)π]` for `j < count`.
    fn extend_to(&mut self, count: usize) -> Result<(), QuadError> {
        let (n, m) = (self.n, self.m);
        while self.values.len() < count {
            let j = F::of(self.values.len() as f64);
            let a = j * F::PI();
            let est = self
                .quad
                .integrate(|x| integrand(n, m, x), a, a + F::PI(), self.tol);
            if !est.converged {
                return Err(QuadError::NoConvergence(self.quad.evaluations));
            }
            self.values.push(est.value);
            self.error = self.error + est.error;
        }
        Ok(())
    }

    fn partial_sums(&self) -> Vec<F> {
        let mut s = F::zero();
        self.values
            .iter()
            .map(|v| {
                s = s + *v;
                s
            })
            .collect()
    }
}

/// `∫ sinⁿx/xᵐ dx` over `[0, ∞)` or ℝ. Half periods `[jπ, (j+1)π]` are
/// integrated adaptively. Odd `n` gives an alternating series, summed with
/// iterated averaging; even `n` is summed directly and the tail replaced by
/// the mean of `sinⁿ` over a period, `2⁻ⁿ C(n, n/2)`, times `∫_T^∞ x^{-m}dx`.
pub fn integrate_sinc_power<F: Real>(
    n: u32,
    m: u32,
    range: Range,
    tol: F,
) -> Result<QuadResult<F>, QuadError> {
    if m == 0 || n < m {
        return Err(QuadError::InvalidInput(format!(
            "need n >= m >= 1, got n={n}, m={m}"
        )));
    }
    if range == Range::Full {
        if (n - m) % 2 == 1 {
            return Ok(QuadResult {
                value: F::zero(),
                abs_err_estimate: F::zero(),
                converged: true,
                evaluations: 0,
            });
        }
        let half = integrate_sinc_power(n, m, Range::Half, tol * F::of(0.5))?;
        let two = F::of(2.0);
        return Ok(QuadResult {
            value: two * half.value,
            abs_err_estimate: two * half.abs_err_estimate,
            ..half
        });
    }
    if m == 1 && n.is_multiple_of(2) {
        return Err(QuadError::Divergent);
    }
    let mut panels = Panels {
        n,
        m,
        tol: tol * F::of(1e-4),
        values: Vec::new(),
        error: F::zero(),
        quad: Adaptive::new(BUDGET),
    };
    if n % 2 == 1 {
        alternating(&mut panels, tol)
    } else {
        with_mean_tail(&mut panels, tol)
    }
}

fn alternating<F: Real>(p: &mut Panels<F>, tol: F) -> Result<QuadResult<F>, QuadError> {
    let mut count = 32usize;
    p.extend_to(count)?;
    let mut previous = euler_average(&p.partial_sums(), EULER_DEPTH);
    loop {
        count *= 2;
        p.extend_to(count)?;
        let current = euler_average(&p.partial_sums(), EULER_DEPTH);
        let err = (current - previous).abs() + p.error;
        if err <= tol {
            return Ok(QuadResult {
                value: current,
                abs_err_estimate: err,
                converged: true,
                evaluations: p.quad.evaluations,
            });
        }
        if p.quad.exhausted() {
            return Err(QuadError::NoConvergence(p.quad.evaluations));
        }
        previous = current;
    }
}

fn with_mean_tail<F: Real>(p: &mut Panels<F>, tol: F) -> Result<QuadResult<F>, QuadError> {
    let m = p.m;
    let mf = F::of(f64::from(m));
    // |∫_T^∞ (sinⁿx − mean)/xᵐ dx| ≤ m/(2T^{m+1}) for T a multiple of π
    let t_needed = (mf / tol).powf(F::one() / (mf + F::one()));
    let count = (t_needed / F::PI())
        .ceil()
        .to_usize()
        .unwrap_or(usize::MAX)
        .max(1);
    if count.saturating_mul(15) > BUDGET {
        return Err(QuadError::NoConvergence(count.saturating_mul(15)));
    }
    p.extend_to(count)?;
    let t = F::of(count as f64) * F::PI();
    let mean =
        F::of(binomial(p.n, p.n / 2).to_f64().expect("finite")) / F::of(2.0).powi(p.n as i32);
    let tail = mean * t.powi(1 - m as i32) / (mf - F::one());
    let sum = p.partial_sums().last().copied().unwrap_or_else(F::zero);
    let err = mf / (F::of(2.0) * t.powi(m as i32 + 1)) + p.error;
    Ok(QuadResult {
        value: sum + tail,
        abs_err_estimate: err,
        converged: err <= tol,
        evaluations: p.quad.evaluations,
    })
}
