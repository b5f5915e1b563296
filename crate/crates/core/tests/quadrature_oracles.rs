use std::f64::consts::PI;

use num_complex::Complex64;
use spinflip_core::quadrature::{
    integrate_segment_with, integrate_weyl, IntegralResult, IntegralSpec, Substitution, Tolerances,
};

type Runner = Box<dyn Fn(&Tolerances) -> IntegralResult<f64>>;

struct Case {
    name: &'static str,
    exact: f64,
    run: Runner,
}

fn segment(
    name: &'static str,
    exact: f64,
    a: f64,
    b: f64,
    sub: Substitution,
    f: fn(f64) -> f64,
) -> Case {
    Case {
        name,
        exact,
        run: Box::new(move |t| integrate_segment_with(f, a, b, sub, t).unwrap()),
    }
}

fn weyl(name: &'static str, exact: f64, k0d: f64, f: fn(f64, Complex64, f64) -> f64) -> Case {
    Case {
        name,
        exact,
        run: Box::new(move |t| {
            let spec = IntegralSpec::new(move |q, e| f(q, e, k0d)).with_tolerances(*t);
            integrate_weyl(&spec, k0d).unwrap()
        }),
    }
}

fn library() -> Vec<Case> {
    vec![
        segment("x^20", 1.0 / 21.0, 0.0, 1.0, Substitution::Identity, |x| {
            x.powi(20)
        }),
        segment("sin^2", PI / 2.0, 0.0, PI, Substitution::Identity, |x| {
            x.sin().powi(2)
        }),
        segment(
            "exp",
            1f64.exp() - 1.0,
            0.0,
            1.0,
            Substitution::Identity,
            f64::exp,
        ),
        segment(
            "runge",
            5f64.atan() / 5.0,
            0.0,
            1.0,
            Substitution::Identity,
            |x| 1.0 / (1.0 + 25.0 * x * x),
        ),
        segment(
            "sqrt",
            2.0 / 3.0,
            0.0,
            1.0,
            Substitution::Identity,
            f64::sqrt,
        ),
        segment(
            "cos^2(10x)",
            PI,
            0.0,
            2.0 * PI,
            Substitution::Identity,
            |x| (10.0 * x).cos().powi(2),
        ),
        segment(
            "(1+x)/sqrt(x)",
            8.0 / 3.0,
            0.0,
            1.0,
            Substitution::SqrtLeft { origin: 0.0 },
            |x| (1.0 + x) / x.sqrt(),
        ),
        // ∫ Re[(q/η0)e^(2iη0a)] = sin(2a)/(2a): the evanescent part is imaginary
        weyl("weyl kernel a=0.5", 1f64.sin(), 0.5, |q, e, a| {
            (q / e * (Complex64::i() * 2.0 * a * e).exp()).re
        }),
        weyl("weyl kernel a=2", 4f64.sin() / 4.0, 2.0, |q, e, a| {
            (q / e * (Complex64::i() * 2.0 * a * e).exp()).re
        }),
        weyl(
            "weyl q·e a=1e-3",
            {
                let a: f64 = 1e-3;
                (2.0 * a).sin() / (2.0 * a)
                    + ((2.0 * a).cos() - 1.0) / (4.0 * a * a)
                    + 1.0 / (4.0 * a * a)
            },
            1e-3,
            |q, e, a| (q * (Complex64::i() * 2.0 * a * e).exp()).re,
        ),
        weyl(
            "evanescent q^3 a=1e-2",
            {
                let a: f64 = 1e-2;
                3.0 / (8.0 * a.powi(4)) + 1.0 / (4.0 * a * a)
            },
            1e-2,
            |q, e, a| {
                if q > 1.0 {
                    q.powi(3) * (-2.0 * a * e.im).exp()
                } else {
                    0.0
                }
            },
        ),
    ]
}

#[test]
fn error_estimates_are_honest() {
    let mut total = 0;
    let mut honest = 0;
    for case in library() {
        for tol in [1e-6, 1e-8, 1e-10] {
            let r = (case.run)(&Tolerances::with_rel_tol(tol));
            let err = (r.value - case.exact).abs();
            total += 1;
            if err <= 3.0 * r.error_estimate {
                honest += 1;
            } else {
                eprintln!(
                    "{}: tol {tol:e} err {err:e} est {:e}",
                    case.name, r.error_estimate
                );
            }
            assert!(r.converged, "{} at {tol:e}", case.name);
            assert!(
                err <= 10.0 * tol * case.exact.abs(),
                "{}: {err:e}",
                case.name
            );
        }
    }
    assert!(honest as f64 >= 0.95 * total as f64, "{honest}/{total}");
}

#[test]
fn tighter_tolerance_never_hurts() {
    for case in library() {
        let mut prev = f64::INFINITY;
        let mut tol = 1e-4;
        while tol > 1e-11 {
            let r = (case.run)(&Tolerances::with_rel_tol(tol));
            let err = (r.value - case.exact).abs();
            let floor = 1e-13 * case.exact.abs();
            assert!(
                err <= prev.max(floor),
                "{} at {tol:e}: {err:e} > {prev:e}",
                case.name
            );
            prev = err.max(floor);
            tol /= 2.0;
        }
    }
}

#[test]
fn extending_truncation_changes_less_than_error_estimate() {
    for k0d in [1e-6, 1e-4, 1e-2] {
        let f = |q: f64, e: Complex64| (q * q / e * (Complex64::i() * 2.0 * k0d * e).exp()).re;
        let base = integrate_weyl(&IntegralSpec::new(f), k0d).unwrap();
        // squaring the damping threshold doubles the truncation point
        let longer = integrate_weyl(&IntegralSpec::new(f).with_tail_damping(1e-36), k0d).unwrap();
        assert!(
            (longer.value - base.value).abs() <= base.error_estimate,
            "k0d = {k0d:e}"
        );
    }
}

#[test]
fn results_are_bitwise_reproducible_across_threads() {
    let run = || {
        let f =
            |q: f64, e: Complex64| (q / e * (Complex64::i() * 2e-6 * e).exp() * (1.0 + q * q)).re;
        integrate_weyl(&IntegralSpec::new(f), 1e-6).unwrap()
    };
    let reference = run();
    let handles: Vec<_> = (0..4).map(|_| std::thread::spawn(run)).collect();
    for h in handles {
        let r = h.join().unwrap();
        assert_eq!(r.value.to_bits(), reference.value.to_bits());
        assert_eq!(r.evals, reference.evals);
    }
}
