use std::f64::consts::PI;

use proptest::prelude::*;
use spinflip_core::impedance::{
    slab_field_profile, zs_normal_metal, zs_two_fluid, zs_vortex_semi_infinite, zs_vortex_slab,
};
use spinflip_core::materials::{DrudeMetal, Slippage, TwoFluidSc, VortexLatticeSc};
use spinflip_core::units::gauss_to_tesla;

const OMEGA: f64 = 2.0 * PI * 2.0e6;

fn vortex(rho_n: f64, lambda_l: f64, l: f64, b_gauss: f64) -> VortexLatticeSc {
    VortexLatticeSc::new(
        rho_n,
        4.5,
        gauss_to_tesla(80.0),
        lambda_l,
        Slippage::Length(l),
        gauss_to_tesla(b_gauss),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn every_model_is_passive(
        log_sigma in 4.0f64..10.0,
        ratio in 1e-4f64..1.0,
        log_rho in -8.5f64..-6.0,
        lambda_nm in 20.0f64..200.0,
        l_nm in 0.0f64..5000.0,
        b_gauss in 1.0f64..400.0,
        log_h in -8.0f64..-4.0,
    ) {
        let sigma = 10f64.powf(log_sigma);
        let metal = zs_normal_metal(&DrudeMetal::new(sigma).unwrap(), OMEGA).unwrap();
        prop_assert!(metal.value.re >= 0.0);

        let tf = zs_two_fluid(&TwoFluidSc::new(ratio * sigma, sigma).unwrap(), OMEGA).unwrap();
        prop_assert!(tf.value.re >= 0.0);

        let m = vortex(10f64.powf(log_rho), lambda_nm * 1e-9, l_nm * 1e-9, b_gauss);
        prop_assert!(zs_vortex_semi_infinite(&m, OMEGA).unwrap().value.re >= 0.0);

        let sol = zs_vortex_slab(&m, OMEGA, 10f64.powf(log_h)).unwrap();
        prop_assert!(sol.zs.value.re >= 0.0);
        prop_assert!(sol.reflected.norm() <= 1.0);
        prop_assert!(sol.absorbed() >= 0.0);
    }
}

#[test]
fn thick_slab_tracks_semi_infinite_real_part() {
    let m = vortex(1.5e-7, 45e-9, 250e-9, 100.0)
        .with_line_potential(gauss_to_tesla(70.0))
        .unwrap();
    let df = m.scales(OMEGA).unwrap().delta_f;
    let inf = zs_vortex_semi_infinite(&m, OMEGA).unwrap().value.re;
    for f in [2.0, 3.0, 5.0, 10.0] {
        let re = zs_vortex_slab(&m, OMEGA, f * df).unwrap().zs.value.re;
        assert!(((re - inf) / inf).abs() < 0.05, "h = {f}·δ_f");
    }
}

#[test]
fn bias_families_are_ordered_for_thin_films() {
    let family = |g: f64| {
        vortex(1.5e-7, 45e-9, 250e-9, g)
            .with_line_potential(gauss_to_tesla(70.0))
            .unwrap()
    };
    for h in [0.1e-6, 0.3e-6, 1e-6, 2e-6] {
        let re: Vec<f64> = [50.0, 100.0, 200.0]
            .into_iter()
            .map(|g| zs_vortex_slab(&family(g), OMEGA, h).unwrap().zs.value.re)
            .collect();
        assert!(re[0] < re[1] && re[1] < re[2], "h = {h:e}: {re:?}");
    }
}

#[test]
fn magnetic_envelope_decays_in_thin_film() {
    let m = vortex(1.5e-7, 45e-9, 250e-9, 100.0)
        .with_line_potential(gauss_to_tesla(70.0))
        .unwrap();
    let h = 0.5e-6;
    let sol = zs_vortex_slab(&m, OMEGA, h).unwrap();
    let grid: Vec<f64> = (0..100).map(|i| h * i as f64 / 99.0).collect();
    let p = slab_field_profile(&sol, &grid).unwrap();
    for w in p.b.windows(2) {
        assert!(w[1].norm() <= w[0].norm() * (1.0 + 1e-9));
    }
}
