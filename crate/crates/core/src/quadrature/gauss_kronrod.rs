//! 7-point Gauss / 15-point Kronrod rule pair.

use super::QuadValue;

// Abscissae of the 15-point Kronrod rule; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];

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

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

pub(crate) const EVALS_PER_PANEL: usize = 15;

pub(crate) struct PanelEstimate<T> {
    pub value: T,
    pub error: f64,
}

/// Applies the rule pair on [a, b]. `f` returns `Err(x)` with the offending
/// abscissa when a sample is not finite.
pub(crate) fn gk15<T, F>(f: &F, a: f64, b: f64) -> Result<PanelEstimate<T>, f64>
where
    T: QuadValue,
    F: Fn(f64) -> Result<T, f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = fc.magnitude() * WGK[7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        let pair = f1 + f2;
        kronrod = kronrod + pair * WGK[j];
        abs_sum += (f1.magnitude() + f2.magnitude()) * WGK[j];
        if j % 2 == 1 {
            gauss = gauss + pair * WG[j / 2];
        }
    }

    let value = kronrod * half;
    let abs_integral = abs_sum * half.abs();
    // The embedded difference is used as-is: it overestimates the Kronrod
    // error on smooth panels, never underestimates it in the asymptotic regime.
    let diff = (kronrod - gauss).magnitude() * half.abs();
    let floor = 50.0 * f64::EPSILON * abs_integral;
    Ok(PanelEstimate {
        value,
        error: diff.max(floor),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        let k: f64 = 2.0 * WGK[..7].iter().sum::<f64>() + WGK[7];
        let g: f64 = 2.0 * WG[..3].iter().sum::<f64>() + WG[3];
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn exact_for_degree_thirteen() {
        let f = |x: f64| -> Result<f64, f64> { Ok(x.powi(13) + 3.0 * x.powi(6)) };
        let p = gk15(&f, 0.0, 1.0).unwrap();
        assert!((p.value - (1.0 / 14.0 + 3.0 / 7.0)).abs() < 1e-15);
    }
}
