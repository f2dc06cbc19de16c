use distfourier::dist::{
    derivative, eval_pointwise, fourier_derivative, frac_derivative, ft, ift, parse_expr,
    parse_expr_in,
};
use distfourier::exact::{int, rat};
use distfourier::quad::{euler_average, fd_partial_fraction, integrate_sinc_power};
use distfourier::series::{frac_deriv_series, read_series_csv, write_series_csv, SeriesCoeff};
use distfourier::sinc::{full_line, half_line_formula};
use distfourier::verify::{random_coeff, random_expr};
use distfourier::{
    DistExpr, DistTerm, Domain, ExactValue, GaussPiCoeff, Range, Rational, Side, TrigSeries,
};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn gauss() -> impl Strategy<Value = GaussPiCoeff> {
    (rational(), rational(), -3i32..=3).prop_map(|(re, im, h)| GaussPiCoeff::new(re, im, h))
}

fn expr() -> impl Strategy<Value = DistExpr> {
    any::<u64>().prop_map(|seed| random_expr(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn half_order() -> impl Strategy<Value = Rational> {
    prop_oneof![Just(rat(1, 2)), Just(int(1)), Just(rat(3, 2)), Just(int(2))]
}

fn series() -> impl Strategy<Value = TrigSeries> {
    (
        rational(),
        prop::collection::btree_map(1u32..=50, (rational(), rational()), 0..8),
    )
        .prop_map(|(mean, harmonics)| {
            let mut s = TrigSeries::new(SeriesCoeff::rational(mean));
            for (n, (a, b)) in harmonics {
                s.add_harmonic(n, SeriesCoeff::rational(a), SeriesCoeff::rational(b));
            }
            s
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coefficient_field_laws(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c));
        if !a.is_zero() {
            prop_assert!((a.clone() * a.recip().unwrap()).is_one());
        }
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn coefficient_complex_value(a in gauss(), b in gauss()) {
        let exact = (a.clone() * b.clone()).to_complex::<f64>();
        let float = a.to_complex::<f64>() * b.to_complex::<f64>();
        prop_assert!((exact - float).norm() <= 1e-12 * (1.0 + float.norm()));
    }

    #[test]
    fn exact_value_text_round_trip(c1 in rational(), cp in rational(), l2 in rational(), l3 in rational()) {
        let v = ExactValue::rational(c1)
            + ExactValue::pi_multiple(cp)
            + ExactValue::ln_multiple(l2, 12).unwrap()
            + ExactValue::ln_multiple(l3, 3).unwrap();
        prop_assert_eq!(v.to_string().parse::<ExactValue>().unwrap(), v);
    }

    #[test]
    fn transform_round_trip(e in expr()) {
        let back = ift(&ft(&e).unwrap()).unwrap();
        prop_assert_eq!(back.normal_form(), e.normal_form());
    }

    #[test]
    fn transform_is_linear(e1 in expr(), e2 in expr(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_coeff(&mut rng), random_coeff(&mut rng));
        let lhs = ft(&e1.scale(&a).add(&e2.scale(&b)).unwrap()).unwrap();
        let rhs = ft(&e1).unwrap().scale(&a).add(&ft(&e2).unwrap().scale(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rendering_reparses(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_expr(&text).unwrap(), e.clone(), "{}", text);
        let image = ft(&e).unwrap();
        prop_assert_eq!(parse_expr_in(&image.to_string(), Domain::K).unwrap(), image);
    }

    #[test]
    fn classical_and_fourier_derivatives_agree(e in expr()) {
        // shifted deltas have no spectral rule: (ik)·e^{-ika} is not tabulated
        let (classical, spectral) = (derivative(&e, 1), fourier_derivative(&e, &int(1)));
        prop_assume!(classical.is_ok() && spectral.is_ok());
        prop_assert_eq!(classical.unwrap().normal_form(), spectral.unwrap().normal_form());
    }

    #[test]
    fn integer_orders_compose(n in 1u32..10, m1 in 1i64..4, m2 in 1i64..4) {
        let e = DistExpr::unit(Domain::X, DistTerm::Monomial(n)).unwrap();
        let twice = frac_derivative(&frac_derivative(&e, &int(m1)).unwrap(), &int(m2)).unwrap();
        prop_assert_eq!(twice, frac_derivative(&e, &int(m1 + m2)).unwrap());
    }

    #[test]
    fn half_orders_compose_on_one_sided_powers(j in -1i64..6, a in 1usize..3, b in 1usize..3) {
        let alphas = [int(0), rat(1, 2), int(1)];
        let e = DistExpr::unit(Domain::X, DistTerm::one_sided(rat(2 * j + 1, 2), Side::Pos)).unwrap();
        let step = |x: &DistExpr, o: &Rational| frac_derivative(x, o).unwrap();
        prop_assert_eq!(
            step(&step(&e, &alphas[a]), &alphas[b]),
            step(&e, &(alphas[a].clone() + alphas[b].clone()))
        );
    }

    #[test]
    fn series_semigroup(s in series(), a in half_order(), b in half_order()) {
        let twice = frac_deriv_series(&frac_deriv_series(&s, &a).unwrap(), &b).unwrap();
        prop_assert_eq!(twice, frac_deriv_series(&s, &(a + b)).unwrap());
    }

    #[test]
    fn series_energy(s in series(), a in half_order()) {
        let d = frac_deriv_series(&s, &a).unwrap();
        let power = (a * int(2)).to_integer().try_into().unwrap();
        for (n, x, y) in s.harmonics() {
            let (dx, dy) = d.harmonic(n).unwrap();
            let lhs = dx.clone() * dx.clone() + dy.clone() * dy.clone();
            let scale = Rational::from_integer(num_bigint::BigInt::from(n).pow(power));
            prop_assert_eq!(lhs, (x.clone() * x.clone() + y.clone() * y.clone()).scale(&scale));
        }
    }

    #[test]
    fn series_csv_round_trip(s in series()) {
        prop_assert_eq!(read_series_csv(&write_series_csv(&s)).unwrap(), s);
    }

    #[test]
    fn sinc_halving(n in 1u32..=24, m in 1u32..=24) {
        prop_assume!(m <= n);
        let full = full_line(n, m).unwrap();
        let half = half_line_formula(n, m).unwrap();
        if (n - m) % 2 == 0 {
            prop_assert_eq!(full, half.scale(&int(2)));
        } else {
            prop_assert!(full.is_zero());
            prop_assert!(half.coeff_pi().is_zero());
        }
    }

    #[test]
    fn sinc_full_line_is_positive_for_even_gap(n in 1u32..=16, m in 1u32..=16) {
        prop_assume!(m <= n && (n - m) % 2 == 0);
        prop_assert!(full_line(n, m).unwrap().eval_float().unwrap() > 0.0);
    }

    #[test]
    fn averaging_fixes_constants(c in -1e3f64..1e3, len in 1usize..60) {
        let v = euler_average(&vec![c; len], 20);
        prop_assert!((v - c).abs() <= 1e-12 * c.abs().max(1.0));
    }

    #[test]
    fn fermi_dirac_image_is_odd(k in 0.01f64..20.0, beta in 1u32..20) {
        let fd = DistExpr::unit(Domain::X, DistTerm::FermiDirac(int(i64::from(beta)))).unwrap();
        let step = ft(&DistExpr::unit(Domain::X, DistTerm::Heaviside(Side::Neg)).unwrap()).unwrap();
        let smooth = ft(&fd).unwrap().sub(&step).unwrap();
        let plus = eval_pointwise(&smooth, k, true).unwrap();
        let minus = eval_pointwise(&smooth, -k, true).unwrap();
        prop_assert_eq!(plus.re, 0.0);
        prop_assert_eq!(plus, -minus);
        let pf = fd_partial_fraction(f64::from(beta), k, 2000);
        prop_assert_eq!(fd_partial_fraction(f64::from(beta), -k, 2000), -pf);
    }
}

#[test]
fn quadrature_matches_closed_form_at_small_orders() {
    for (n, m) in [(1, 1), (3, 1), (3, 3), (4, 2), (5, 2), (6, 4)] {
        let exact = half_line_formula(n, m).unwrap().eval_float().unwrap();
        let q = integrate_sinc_power(n, m, Range::Half, 1e-10f64).unwrap();
        assert!(q.converged && q.abs_err_estimate <= 1e-10, "{n},{m}: {q:?}");
        assert!(
            (q.value - exact).abs() < 1e-9,
            "{n},{m}: {} vs {exact}",
            q.value
        );
    }
}
