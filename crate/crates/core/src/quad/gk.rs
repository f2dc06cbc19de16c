use crate::Real;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod rule with its embedded 7-point Gauss rule on
/// `[a, b]`. Returns `(kronrod, |kronrod − gauss|)`.
pub(crate) fn gk15<F: Real>(f: &mut impl FnMut(F) -> F, a: F, b: F) -> (F, F) {
    let half = F::of(0.5);
    let center = half * (a + b);
    let radius = half * (b - a);
    let fc = f(center);
    let mut kronrod = fc * F::of(WGK[7]);
    let mut gauss = fc * F::of(WG[3]);
    for j in 0..7 {
        let dx = radius * F::of(XGK[j]);
        let pair = f(center - dx) + f(center + dx);
        kronrod = kronrod + pair * F::of(WGK[j]);
        if j % 2 == 1 {
            gauss = gauss + pair * F::of(WG[j / 2]);
        }
    }
    (kronrod * radius, ((kronrod - gauss) * radius).abs())
}

/// Adaptive bisection driven by the panel with the largest error.
pub(crate) struct Adaptive {
    pub(crate) budget: usize,
    pub(crate) evaluations: usize,
}

pub(crate) struct Estimate<F> {
    pub(crate) value: F,
    pub(crate) error: F,
    pub(crate) converged: bool,
}

impl Adaptive {
    pub(crate) fn new(budget: usize) -> Self {
        Adaptive {
            budget,
            evaluations: 0,
        }
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.evaluations >= self.budget
    }

    /// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
    pub(crate) fn integrate<F: Real>(
        &mut self,
        mut f: impl FnMut(F) -> F,
        a: F,
        b: F,
        tol: F,
    ) -> Estimate<F> {
        let mut panels = Vec::new();
        let (v, e) = gk15(&mut f, a, b);
        self.evaluations += 15;
        panels.push((a, b, v, e));
        loop {
            let total_err = panels.iter().fold(F::zero(), |s, p| s + p.3);
            let value = panels.iter().fold(F::zero(), |s, p| s + p.2);
            if total_err <= tol || self.exhausted() || panels.len() > 2000 {
                return Estimate {
                    value,
                    error: total_err,
                    converged: total_err <= tol,
                };
            }
            let worst = (0..panels.len())
                .max_by(|&i, &j| {
                    panels[i]
                        .3
                        .partial_cmp(&panels[j].3)
                        .expect("finite errors")
                })
                .expect("non-empty");
            let (lo, hi, _, _) = panels.swap_remove(worst);
            let mid = F::of(0.5) * (lo + hi);
            let (v1, e1) = gk15(&mut f, lo, mid);
            let (v2, e2) = gk15(&mut f, mid, hi);
            self.evaluations += 30;
            panels.push((lo, mid, v1, e1));
            panels.push((mid, hi, v2, e2));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        // GK15 integrates degree ≤ 22 exactly
        let (v, _) = gk15(&mut |x: f64| x.powi(10), -1.0, 1.0);
        assert!((v - 2.0 / 11.0).abs() < 1e-15);
        let (v, e) = gk15(&mut |x: f64| 3.0 * x * x, 0.0, 2.0);
        assert!((v - 8.0).abs() < 1e-14 && e < 1e-13);
    }

    #[test]
    fn adaptive_handles_peaks() {
        let mut q = Adaptive::new(100_000);
        let est = q.integrate(|x: f64| 1.0 / (1e-4 + x * x), -1.0, 1.0, 1e-10);
        let exact = 2.0 * (1.0f64 / 1e-2).atan() / 1e-2;
        assert!(est.converged);
        assert!((est.value - exact).abs() < 1e-8, "{} vs {exact}", est.value);
        assert!(q.evaluations > 15);
    }

    #[test]
    fn single_precision() {
        let mut q = Adaptive::new(10_000);
        let est = q.integrate(|x: f32| x.sin(), 0.0, std::f32::consts::PI, 1e-5);
        assert!((est.value - 2.0).abs() < 1e-5);
    }
}
