use super::gk::Adaptive;
use super::{euler_average, sinc, QuadError, QuadResult, BUDGET, EULER_DEPTH};
use crate::{Complex, Real};

/// `1/k − π/(β sinh(πk/β))`
pub fn fd_closed<F: Real>(beta: F, k: F) -> F {
    k.recip() - F::PI() / (beta * (F::PI() * k / beta).sinh())
}

/// `(π/β) coth(πk/β) − 1/k`
pub fn be_closed<F: Real>(beta: F, k: F) -> F {
    F::PI() / (beta * (F::PI() * k / beta).tanh()) - k.recip()
}

/// `2∫₀^X f` over half periods of `sin kx`, with `X` chosen so that the
/// `e^{−βx}` tail stays below `tol/4`.
fn sine_transform<F: Real>(
    beta: F,
    k: F,
    tol: F,
    f: impl Fn(F) -> F,
) -> Result<QuadResult<F>, QuadError> {
    if !(beta > F::zero() && k > F::zero()) {
        return Err(QuadError::InvalidInput("need beta > 0 and k > 0".into()));
    }
    let x_max = (F::of(8.0) / (beta * tol)).ln().max(F::one()) / beta;
    let count = (x_max * k / F::PI())
        .ceil()
        .to_usize()
        .unwrap_or(usize::MAX)
        .max(1);
    if count > BUDGET / 15 {
        return Err(QuadError::NoConvergence(count.saturating_mul(15)));
    }
    let width = x_max / F::of(count as f64);
    let panel_tol = tol / F::of(4.0 * count as f64);
    let mut quad = Adaptive::new(BUDGET);
    let (mut sum, mut err) = (F::zero(), F::zero());
    for j in 0..count {
        let a = width * F::of(j as f64);
        let est = quad.integrate(&f, a, a + width, panel_tol);
        if !est.converged {
            return Err(QuadError::NoConvergence(quad.evaluations));
        }
        sum = sum + est.value;
        err = err + est.error;
    }
    let two = F::of(2.0);
    let tail = two * (-beta * x_max).exp() / (beta * -(-beta * x_max).exp_m1());
    Ok(QuadResult {
        value: two * sum,
        abs_err_estimate: two * err + tail,
        converged: two * err + tail <= tol,
        evaluations: quad.evaluations,
    })
}

/// `2∫₀^∞ sin(kx)/(e^{βx}+1) dx`
pub fn fd_sine_transform<F: Real>(beta: F, k: F, tol: F) -> Result<QuadResult<F>, QuadError> {
    sine_transform(beta, k, tol, |x| {
        let e = (-beta * x).exp();
        (k * x).sin() * e / (F::one() + e)
    })
}

/// `2∫₀^∞ sin(kx)/(e^{βx}−1) dx`, with the removable pole at 0 handled as
/// `k·sinc(kx)·x/expm1(βx)`.
pub fn be_sine_transform<F: Real>(beta: F, k: F, tol: F) -> Result<QuadResult<F>, QuadError> {
    sine_transform(beta, k, tol, |x| {
        let ratio = if x == F::zero() {
            beta.recip()
        } else {
            x / (beta * x).exp_m1()
        };
        k * sinc(k * x) * ratio
    })
}

/// `term(n, (−1)ⁿ)` summed for `n = 1..=count`.
fn averaged_partial_sums<F: Real>(count: usize, term: impl Fn(F, F) -> F) -> F {
    let mut s = F::zero();
    let partials: Vec<F> = (1..=count)
        .map(|n| {
            let sign = if n % 2 == 0 { F::one() } else { -F::one() };
            s = s + term(F::of(n as f64), sign);
            s
        })
        .collect();
    euler_average(&partials, EULER_DEPTH)
}

/// `Σ_{n=1}^{N} (−1)ⁿ/(α² − n²)` with iterated averaging.
pub fn alt_sum<F: Real>(alpha: F, count: usize) -> F {
    let a2 = alpha * alpha;
    averaged_partial_sums(count.max(1), |n, sign| sign / (a2 - n * n))
}

/// `(π/sin απ − 1/α)/(2α)`
pub fn alt_sum_closed<F: Real>(alpha: F) -> F {
    (F::PI() / (alpha * F::PI()).sin() - alpha.recip()) / (F::of(2.0) * alpha)
}

/// `i/k + 2ik Σ_{n=1}^{N} (−1)ⁿ/(β²n² + k²)` with iterated averaging.
pub fn fd_partial_fraction<F: Real>(beta: F, k: F, count: usize) -> Complex<F> {
    let (b2, k2) = (beta * beta, k * k);
    let s = averaged_partial_sums(count.max(1), |n, sign| sign / (b2 * n * n + k2));
    Complex::new(F::zero(), k.recip() + F::of(2.0) * k * s)
}

/// Half derivative of Θ at `x > 0` in Riemann–Liouville form: the
/// fractional integral `2√x/√π` differentiated by a central difference with
/// step `x·10⁻⁵`.
pub fn rl_half_derivative<F: Real>(x: F) -> Result<QuadResult<F>, QuadError> {
    if x.is_nan() || x <= F::zero() {
        return Err(QuadError::InvalidInput("need x > 0".into()));
    }
    let integral = |t: F| F::of(2.0) * t.sqrt() / F::PI().sqrt();
    let h = x * F::of(1e-5);
    let value = (integral(x + h) - integral(x - h)) / (F::of(2.0) * h);
    // leading truncation term h²/6 · |I'''(x)| = h² · x^{-5/2}/(8√π)
    let err = h * h * x.powf(F::of(-2.5)) / (F::of(8.0) * F::PI().sqrt());
    Ok(QuadResult {
        value,
        abs_err_estimate: err,
        converged: true,
        evaluations: 2,
    })
}
