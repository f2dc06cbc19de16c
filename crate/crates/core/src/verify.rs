//! Invariant checks across every module, reported one line per check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dist::{
    derivative, eval_pointwise, frac_derivative, ft, ift, DistExpr, DistTerm, Domain, Side,
};
use crate::exact::{factorial, int, rat, ExactValue, GaussPiCoeff, Rational};
use crate::quad::{
    alt_sum, alt_sum_closed, be_closed, be_sine_transform, fd_closed, fd_partial_fraction,
    fd_sine_transform, integrate_sinc_power, rl_half_derivative, QuadError, Range,
};
use crate::series::{
    builtin_series, frac_deriv_series, grid, sample_series, SeriesCoeff, TrigSeries,
};
use crate::sinc::{antideriv_coeff_A, full_line, full_line_diag, half_line, sincint, SincError};
use crate::Complex64;

pub const DEFAULT_SEED: u64 = 20_240_917;
pub const RANDOM_CASES: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub expected: String,
    pub got: String,
    pub err: f64,
    pub pass: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {} expected={} got={} err={:.3e} {}",
            self.name,
            if self.params.is_empty() {
                "-"
            } else {
                &self.params
            },
            compact(&self.expected),
            compact(&self.got),
            self.err,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

fn compact(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Overrides every numeric tolerance when set.
    pub tol: Option<f64>,
    pub seed: u64,
    pub filter: Option<String>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tol: None,
            seed: DEFAULT_SEED,
            filter: None,
        }
    }
}

struct Report<'a> {
    opts: &'a VerifyOptions,
    checks: Vec<Check>,
}

impl Report<'_> {
    fn wants(&self, name: &str) -> bool {
        self.opts.filter.as_deref().is_none_or(|f| name.contains(f))
    }

    fn tol(&self, default: f64) -> f64 {
        self.opts.tol.unwrap_or(default)
    }

    fn exact<T: fmt::Display + PartialEq>(
        &mut self,
        name: &str,
        params: String,
        expected: T,
        got: T,
    ) {
        let pass = expected == got;
        self.checks.push(Check {
            name: name.into(),
            params,
            expected: expected.to_string(),
            got: got.to_string(),
            err: if pass { 0.0 } else { f64::INFINITY },
            pass,
        });
    }

    fn close(&mut self, name: &str, params: String, expected: f64, got: f64, tol: f64) {
        let err = (expected - got).abs();
        self.checks.push(Check {
            name: name.into(),
            params,
            expected: format!("{expected:.16e}"),
            got: format!("{got:.16e}"),
            err,
            pass: err <= tol,
        });
    }

    fn flag(&mut self, name: &str, params: String, expected: &str, got: String, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            params,
            expected: expected.into(),
            got,
            err: if pass { 0.0 } else { f64::INFINITY },
            pass,
        });
    }
}

/// Runs every suite whose check names contain the filter and returns the
/// checks sorted by name.
pub fn run_verify(opts: &VerifyOptions) -> Vec<Check> {
    let mut r = Report {
        opts,
        checks: Vec::new(),
    };
    type Suite = fn(&mut Report);
    let suites: [(&str, Suite); 20] = [
        ("dist.classical", dist_classical),
        ("dist.fd_odd", dist_fd_odd),
        ("dist.fd_zero_temperature", dist_zero_temperature),
        ("dist.linearity", dist_linearity),
        ("dist.roundtrip", dist_roundtrip),
        ("dist.semigroup", dist_semigroup),
        ("quad.alt_sum", quad_alt_sum),
        ("quad.be_sine", quad_be),
        ("quad.fd_partial_fraction", quad_fd_partial),
        ("quad.fd_sine", quad_fd),
        ("quad.rl_half", quad_rl),
        ("series.energy", series_energy),
        ("series.integer_order", series_integer),
        ("series.literal", series_literal),
        ("series.semigroup", series_semigroup),
        ("sinc.diagonal", sinc_diagonal),
        ("sinc.golden", sinc_golden),
        ("sinc.oracle", sinc_oracle),
        ("sinc.parity", sinc_parity),
        ("sinc.recursion", sinc_recursion),
    ];
    for (name, suite) in suites {
        if r.wants(name) {
            suite(&mut r);
        }
    }
    let mut checks = r.checks;
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    checks
}

fn x_unit(t: DistTerm) -> DistExpr {
    DistExpr::unit(Domain::X, t).expect("valid term")
}

fn dist_semigroup(r: &mut Report) {
    let half = rat(1, 2);
    let cases = [
        DistTerm::Heaviside(Side::Pos),
        DistTerm::Heaviside(Side::Neg),
        DistTerm::ExpLine(int(1)),
        DistTerm::ExpLine(rat(-5, 2)),
        DistTerm::ExpLine(int(3)),
        DistTerm::Const,
        DistTerm::delta(),
    ];
    for t in cases {
        let e = x_unit(t);
        let got = frac_derivative(&e, &half)
            .and_then(|h| frac_derivative(&h, &half))
            .map(|v| v.to_string())
            .unwrap_or_else(|err| format!("error:{err}"));
        let expected = derivative(&e, 1).expect("classical derivative").to_string();
        r.exact("dist.semigroup", format!("e={e}"), expected, got);
    }
}

fn dist_classical(r: &mut Report) {
    for n in 1..=8u32 {
        for m in 1..=n {
            let e = x_unit(DistTerm::Monomial(n));
            let got = frac_derivative(&e, &int(i64::from(m))).expect("integer order");
            let c = Rational::from_integer(factorial(n) / factorial(n - m));
            let expected = DistExpr::term(
                Domain::X,
                GaussPiCoeff::from_rational(c),
                DistTerm::Monomial(n - m),
            )
            .expect("valid");
            r.exact("dist.classical", format!("x^{n},m={m}"), expected, got);
        }
        for m in 1..=4u32 {
            let e = x_unit(DistTerm::NegPower(n));
            let got = derivative(&e, m).expect("classical derivative");
            let mut c = Rational::from_integer(factorial(n + m - 1) / factorial(n - 1));
            if m % 2 == 1 {
                c = -c;
            }
            let expected = DistExpr::term(
                Domain::X,
                GaussPiCoeff::from_rational(c),
                DistTerm::NegPower(n + m),
            )
            .expect("valid");
            r.exact("dist.classical", format!("x^-{n},m={m}"), expected, got);
        }
    }
    for alpha in [rat(1, 2), int(1), rat(3, 2), int(2)] {
        let e = x_unit(DistTerm::Const);
        let got = frac_derivative(&e, &alpha).expect("constant");
        r.exact(
            "dist.classical",
            format!("const,alpha={alpha}"),
            DistExpr::zero(Domain::X),
            got,
        );
    }
}

fn fd_smooth(beta: i64) -> DistExpr {
    let fd = ft(&x_unit(DistTerm::FermiDirac(int(beta)))).expect("tabulated");
    let step = ft(&x_unit(DistTerm::Heaviside(Side::Neg))).expect("tabulated");
    fd.sub(&step).expect("same domain")
}

fn eval_k(e: &DistExpr, k: f64) -> Complex64 {
    eval_pointwise(e, k, true).expect("regular point")
}

fn dist_fd_odd(r: &mut Report) {
    let image = ft(&x_unit(DistTerm::FermiDirac(int(1)))).expect("tabulated");
    for k in [0.25, 1.0, 4.0] {
        let plus = eval_k(&image, k);
        let minus = eval_k(&image, -k);
        let smooth = plus - eval_k(&ft(&x_unit(DistTerm::Heaviside(Side::Neg))).unwrap(), k);
        r.close("dist.fd_odd", format!("re,k={k}"), 0.0, smooth.re, 0.0);
        r.close(
            "dist.fd_odd",
            format!("odd,k={k}"),
            (-plus).im,
            minus.im,
            0.0,
        );
    }
}

fn dist_zero_temperature(r: &mut Report) {
    let values: Vec<f64> = [1, 10, 100]
        .iter()
        .map(|&b| eval_k(&fd_smooth(b), 1.0).norm())
        .collect();
    let decreasing = values.windows(2).all(|w| w[1] < w[0]);
    r.flag(
        "dist.fd_zero_temperature",
        "beta=1,10,100,k=1".into(),
        "decreasing",
        format!("{:.3e},{:.3e},{:.3e}", values[0], values[1], values[2]),
        decreasing,
    );
    r.close(
        "dist.fd_zero_temperature",
        "beta=100,k=1".into(),
        0.0,
        values[2],
        1e-3,
    );
}

/// Random x-side primitive with a transform table entry.
pub fn random_term(rng: &mut impl Rng) -> DistTerm {
    let side = if rng.random::<bool>() {
        Side::Pos
    } else {
        Side::Neg
    };
    match rng.random_range(0..12) {
        0 => DistTerm::Const,
        1 => DistTerm::Heaviside(side),
        2 => DistTerm::Sgn,
        3 if rng.random::<bool>() => DistTerm::delta_deriv(rng.random_range(0..5)),
        3 => DistTerm::DeltaDeriv {
            order: 0,
            shift: rat(rng.random_range(-6..=6), rng.random_range(1..=4)),
        },
        4 => DistTerm::Monomial(rng.random_range(1..7)),
        5 => DistTerm::NegPower(rng.random_range(1..7)),
        6 => DistTerm::SgnPower(rng.random_range(1..7)),
        7 => DistTerm::one_sided(int(rng.random_range(0..6)), side),
        8 => DistTerm::one_sided(rat(2 * rng.random_range(-3..4) + 1, 2), Side::Pos),
        9 => DistTerm::ExpLine(rat(rng.random_range(-9..=9), rng.random_range(1..=4))),
        10 => DistTerm::FermiDirac(rat(rng.random_range(1..=9), rng.random_range(1..=4))),
        _ => DistTerm::BoseEinstein(rat(rng.random_range(1..=9), rng.random_range(1..=4))),
    }
}

/// Random non-zero Gaussian rational times `π^(h/2)`.
pub fn random_coeff(rng: &mut impl Rng) -> GaussPiCoeff {
    loop {
        let re = rat(rng.random_range(-9..=9), rng.random_range(1..=6));
        let im = rat(rng.random_range(-9..=9), rng.random_range(1..=6));
        let c = GaussPiCoeff::new(re, im, rng.random_range(-2..=2));
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_expr(rng: &mut impl Rng) -> DistExpr {
    let count = rng.random_range(1..=4);
    let terms: Vec<_> = (0..count)
        .map(|_| (random_coeff(rng), random_term(rng)))
        .collect();
    DistExpr::from_terms(Domain::X, terms).expect("valid terms")
}

fn dist_roundtrip(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(r.opts.seed);
    let mut failures = Vec::new();
    for case in 0..RANDOM_CASES {
        let e = random_expr(&mut rng);
        let back = ft(&e).and_then(|k| ift(&k));
        if back.map(|b| b.normal_form()) != Ok(e.normal_form()) {
            failures.push(case);
        }
    }
    r.flag(
        "dist.roundtrip",
        format!("seed={},cases={RANDOM_CASES}", r.opts.seed),
        "0",
        format!("{}{}", failures.len(), first_failure(&failures)),
        failures.is_empty(),
    );
}

fn first_failure(failures: &[usize]) -> String {
    failures
        .first()
        .map(|c| format!("(first={c})"))
        .unwrap_or_default()
}

fn dist_linearity(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(r.opts.seed.wrapping_add(1));
    let mut failures = Vec::new();
    for case in 0..RANDOM_CASES {
        let (e1, e2) = (random_expr(&mut rng), random_expr(&mut rng));
        let (a, b) = (random_coeff(&mut rng), random_coeff(&mut rng));
        let lhs = e1.scale(&a).add(&e2.scale(&b)).and_then(|s| ft(&s));
        let rhs = ft(&e1).and_then(|f1| ft(&e2).and_then(|f2| f1.scale(&a).add(&f2.scale(&b))));
        if lhs.is_err() || lhs != rhs {
            failures.push(case);
        }
    }
    r.flag(
        "dist.linearity",
        format!("seed={},cases={RANDOM_CASES}", r.opts.seed),
        "0",
        format!("{}{}", failures.len(), first_failure(&failures)),
        failures.is_empty(),
    );
}

const BETAS: [f64; 4] = [0.5, 1.0, 2.0, 10.0];
const KS: [f64; 3] = [0.25, 1.0, 4.0];

fn quad_fd(r: &mut Report) {
    let tol = r.tol(1e-6);
    for beta in BETAS {
        for k in KS {
            let params = format!("beta={beta},k={k}");
            match fd_sine_transform(beta, k, tol * 1e-2) {
                Ok(q) => r.close("quad.fd_sine", params, fd_closed(beta, k), q.value, tol),
                Err(e) => r.flag("quad.fd_sine", params, "converged", e.to_string(), false),
            }
        }
    }
}

fn quad_be(r: &mut Report) {
    let tol = r.tol(1e-6);
    for beta in BETAS {
        for k in KS {
            let params = format!("beta={beta},k={k}");
            match be_sine_transform(beta, k, tol * 1e-2) {
                Ok(q) => r.close("quad.be_sine", params, be_closed(beta, k), q.value, tol),
                Err(e) => r.flag("quad.be_sine", params, "converged", e.to_string(), false),
            }
        }
    }
}

fn quad_fd_partial(r: &mut Report) {
    let tol = r.tol(1e-4);
    for beta in BETAS {
        for k in KS {
            let pf = fd_partial_fraction(beta, k, 100_000);
            let got = k.recip() - pf.im;
            r.close(
                "quad.fd_partial_fraction",
                format!("beta={beta},k={k},N=100000"),
                fd_closed(beta, k),
                got,
                tol,
            );
        }
    }
}

fn quad_alt_sum(r: &mut Report) {
    let tol = r.tol(1e-8);
    for alpha in [0.25, 0.5, 1.5, 2.5] {
        r.close(
            "quad.alt_sum",
            format!("alpha={alpha},N=10000"),
            alt_sum_closed(alpha),
            alt_sum(alpha, 10_000),
            tol,
        );
    }
}

fn quad_rl(r: &mut Report) {
    let tol = r.tol(1e-6);
    let half_theta = frac_derivative(&x_unit(DistTerm::Heaviside(Side::Pos)), &rat(1, 2))
        .expect("half derivative of the step");
    for x in [std::f64::consts::FRAC_1_PI, 1.0, 4.0] {
        let exact = eval_pointwise(&half_theta, x, false)
            .expect("regular point")
            .re;
        let rl = rl_half_derivative(x).expect("x > 0").value;
        r.close("quad.rl_half", format!("x={x:.6}"), exact, rl, tol);
    }
}

fn random_rational_coeff(rng: &mut impl Rng) -> SeriesCoeff {
    SeriesCoeff::rational(rat(rng.random_range(-7..=7), rng.random_range(1..=5)))
}

fn random_series(rng: &mut impl Rng, order: u32) -> TrigSeries {
    let coeff = random_rational_coeff;
    let mut s = TrigSeries::new(coeff(rng));
    for n in 1..=order {
        if rng.random_range(0..3) > 0 {
            s.add_harmonic(n, coeff(rng), coeff(rng));
        }
    }
    s
}

fn series_semigroup(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(r.opts.seed.wrapping_add(2));
    let alphas = [rat(1, 2), int(1), rat(3, 2)];
    let mut failures = Vec::new();
    let mut case = 0;
    for _ in 0..20 {
        let order = rng.random_range(1..=50);
        let s = random_series(&mut rng, order);
        for a in &alphas {
            for b in &alphas {
                let twice = frac_deriv_series(&s, a).and_then(|t| frac_deriv_series(&t, b));
                let once = frac_deriv_series(&s, &(a + b));
                if twice.is_err() || twice != once {
                    failures.push(case);
                }
                case += 1;
            }
        }
    }
    r.flag(
        "series.semigroup",
        format!("seed={},cases={case}", r.opts.seed),
        "0",
        format!("{}{}", failures.len(), first_failure(&failures)),
        failures.is_empty(),
    );
    let half = rat(1, 2);
    let zero = SeriesCoeff::zero;
    let wave =
        |n: u32, a: SeriesCoeff, b: SeriesCoeff| TrigSeries::new(zero()).with_harmonic(n, a, b);
    for n in 1..=5u32 {
        let scale = SeriesCoeff::rational(int(i64::from(n)));
        let cases = [
            (
                "cos",
                wave(n, SeriesCoeff::one(), zero()),
                wave(n, zero(), -scale.clone()),
            ),
            (
                "sin",
                wave(n, zero(), SeriesCoeff::one()),
                wave(n, scale.clone(), zero()),
            ),
        ];
        for (label, s, expected) in cases {
            let got = frac_deriv_series(&s, &half).and_then(|h| frac_deriv_series(&h, &half));
            let pass = got.as_ref() == Ok(&expected);
            r.flag(
                "series.semigroup",
                format!("{label}({n}x)"),
                if label == "cos" { "-n*sin" } else { "n*cos" },
                String::from(if pass {
                    if label == "cos" {
                        "-n*sin"
                    } else {
                        "n*cos"
                    }
                } else {
                    "other"
                }),
                pass,
            );
        }
    }
}

fn series_energy(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(r.opts.seed.wrapping_add(3));
    let s = random_series(&mut rng, 30);
    for (alpha, two_alpha) in [(rat(1, 2), 1u32), (int(1), 2), (rat(3, 2), 3)] {
        let d = frac_deriv_series(&s, &alpha).expect("supported order");
        let mut bad = 0;
        for (n, a, b) in s.harmonics() {
            let (a2, b2) = d
                .harmonic(n)
                .map(|(x, y)| (x.clone(), y.clone()))
                .unwrap_or_default();
            let lhs = a2.clone() * a2 + b2.clone() * b2;
            let scale = Rational::from_integer(BigInt::from(n).pow(two_alpha));
            let rhs = (a.clone() * a.clone() + b.clone() * b.clone()).scale(&scale);
            if lhs != rhs {
                bad += 1;
            }
        }
        r.flag(
            "series.energy",
            format!("alpha={alpha},harmonics={}", s.len()),
            "0",
            bad.to_string(),
            bad == 0,
        );
    }
}

/// One classical derivative applied termwise.
fn differentiate(s: &TrigSeries) -> TrigSeries {
    let mut out = TrigSeries::new(SeriesCoeff::zero());
    for (n, a, b) in s.harmonics() {
        let n = int(i64::from(n));
        out.add_harmonic(
            n.to_integer().try_into().expect("small"),
            b.scale(&n),
            -a.scale(&n),
        );
    }
    out
}

fn series_integer(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(r.opts.seed.wrapping_add(4));
    let s = random_series(&mut rng, 20);
    let mut classical = s.clone();
    for m in 1..=4i64 {
        classical = differentiate(&classical);
        let got = frac_deriv_series(&s, &int(m)).expect("integer order");
        let pass = got == classical;
        r.flag(
            "series.integer_order",
            format!("m={m}"),
            "termwise",
            String::from(if pass { "termwise" } else { "other" }),
            pass,
        );
    }
}

/// Half derivative of the built-in series written out term by term:
/// `sin nx → √n sin(nx + π/4)`, `cos nx → √n cos(nx + π/4)`.
pub fn literal_half_derivative(name: &str, order: u32, x: f64) -> f64 {
    let q = std::f64::consts::FRAC_PI_4;
    match name {
        "sawtooth" => (1..=order)
            .map(|n| {
                let n = f64::from(n);
                let sign = if n as u32 % 2 == 1 { 2.0 } else { -2.0 };
                sign / n.sqrt() * (n * x + q).sin()
            })
            .sum(),
        "absx" => (0..order)
            .map(|j| {
                let k = f64::from(2 * j + 1);
                -4.0 / std::f64::consts::PI * k.powf(-1.5) * (k * x + q).cos()
            })
            .sum(),
        other => panic!("no literal series for {other}"),
    }
}

fn series_literal(r: &mut Report) {
    let tol = r.tol(1e-12);
    let xs = grid(-std::f64::consts::PI, std::f64::consts::PI, 2001);
    for (name, order) in [
        ("sawtooth", 5),
        ("sawtooth", 10),
        ("sawtooth", 20),
        ("sawtooth", 30),
        ("absx", 100),
    ] {
        let s = builtin_series(name, order).expect("built-in");
        let d = frac_deriv_series(&s, &rat(1, 2)).expect("half order");
        let ys = sample_series(&d, &xs);
        let err = xs
            .iter()
            .zip(&ys)
            .map(|(&x, &y)| (y - literal_half_derivative(name, order, x)).abs())
            .fold(0.0, f64::max);
        r.close(
            "series.literal",
            format!("{name},order={order},samples=2001"),
            0.0,
            err,
            tol,
        );
    }
}

fn sinc_golden(r: &mut Report) {
    let pi = |q| ExactValue::pi_multiple(q);
    let ln = |q, p| ExactValue::ln_multiple(q, p).expect("prime");
    let cases = [
        (3, 3, Range::Full, pi(rat(3, 4))),
        (4, 4, Range::Full, pi(rat(2, 3))),
        (5, 5, Range::Full, pi(rat(115, 192))),
        (6, 6, Range::Full, pi(rat(11, 20))),
        (3, 2, Range::Half, ln(rat(3, 4), 3)),
        (4, 3, Range::Half, ln(int(1), 2)),
        (5, 4, Range::Half, ln(rat(125, 96), 5) + ln(rat(-45, 32), 3)),
        (1, 1, Range::Half, pi(rat(1, 2))),
        (2, 2, Range::Half, pi(rat(1, 2))),
        (3, 1, Range::Half, pi(rat(1, 4))),
    ];
    for (n, m, range, expected) in cases {
        let got = sincint(n, m, range)
            .map(|v| v.to_string())
            .unwrap_or_else(|e| e.to_string());
        r.exact(
            "sinc.golden",
            format!("n={n},m={m},range={range}"),
            expected.to_string(),
            got,
        );
        let reparsed = expected.to_string().parse::<ExactValue>();
        r.exact(
            "sinc.golden",
            format!("reparse,n={n},m={m},range={range}"),
            expected.to_string(),
            reparsed
                .map(|v| v.to_string())
                .unwrap_or_else(|e| e.to_string()),
        );
    }
}

fn sinc_oracle(r: &mut Report) {
    let tol = r.tol(1e-8);
    let mut jobs = Vec::new();
    for n in 1..=12u32 {
        for m in 1..=n {
            for range in [Range::Full, Range::Half] {
                jobs.push((n, m, range));
            }
        }
    }
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|&(n, m, range)| {
                scope.spawn(move || {
                    (
                        sincint(n, m, range),
                        integrate_sinc_power(n, m, range, tol * 0.1),
                    )
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("oracle thread"))
            .collect()
    });
    for (&(n, m, range), (exact, quad)) in jobs.iter().zip(results) {
        let params = format!("n={n},m={m},range={range}");
        match (exact, quad) {
            (Ok(v), Ok(q)) => match v.eval_float() {
                Ok(f) => r.close("sinc.oracle", params, f, q.value, tol),
                Err(e) => r.flag("sinc.oracle", params, "finite", e.to_string(), false),
            },
            (Err(SincError::Divergent { .. }), Err(QuadError::Divergent)) => {
                r.flag("sinc.oracle", params, "divergent", "divergent".into(), true)
            }
            (e, q) => r.flag(
                "sinc.oracle",
                params,
                "agreement",
                format!("{:?}|{:?}", e.map(|v| v.to_string()), q.map(|q| q.value)),
                false,
            ),
        }
    }
}

fn sinc_diagonal(r: &mut Report) {
    for n in 1..=20 {
        let diag = full_line_diag(n).map(|v| v.to_string());
        let full = full_line(n, n).map(|v| v.to_string());
        r.exact(
            "sinc.diagonal",
            format!("n={n}"),
            format!("{full:?}"),
            format!("{diag:?}"),
        );
    }
}

fn sinc_parity(r: &mut Report) {
    for n in 1..=20u32 {
        for m in 1..=n {
            let full = full_line(n, m).expect("in domain");
            let params = format!("n={n},m={m}");
            if (n - m) % 2 == 1 {
                r.exact("sinc.parity", params, ExactValue::zero(), full);
                continue;
            }
            match half_line(n, m) {
                Ok(half) => r.exact("sinc.parity", params, half.scale(&int(2)), full),
                Err(SincError::Divergent { .. }) => {}
                Err(e) => r.flag("sinc.parity", params, "value", e.to_string(), false),
            }
        }
    }
}

fn sinc_recursion(r: &mut Report) {
    for m in 1..=30u32 {
        let prod = antideriv_coeff_A(m) * Rational::from_integer(factorial(m - 1));
        r.exact("sinc.recursion", format!("m={m}"), Rational::one(), prod);
    }
}
