//! Surface impedance Z_S = μ0·E_S/B_S of the film for every material model.

mod slab;

use num_complex::Complex64;

use crate::diagnostics::Diagnostic;
use crate::error::{positive, Result};
use crate::materials::{
    epsilon_two_fluid, skin_depth, DirectImpedance, DrudeMetal, MaterialResponse, Slippage,
    TwoFluidSc, VortexLatticeSc,
};
use crate::units::{MU0, Z0};

pub use slab::{slab_field_profile, zs_vortex_slab, FieldProfile, SlabSolution};

/// Which model and geometry produced a [`SurfaceImpedance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ImpedanceModel {
    NormalMetal,
    TwoFluid,
    /// Two-mode vortex response of a semi-infinite film.
    VortexSemiInfinite,
    /// Vortex-free film: pure London screening.
    Meissner,
    /// Full boundary solve for a slab of the given thickness (m).
    VortexSlab {
        thickness: f64,
    },
    /// Thin-film scaling law applied to the semi-infinite value.
    SlabApprox {
        thickness: f64,
    },
    Direct,
}

impl ImpedanceModel {
    pub fn name(&self) -> &'static str {
        match self {
            ImpedanceModel::NormalMetal => "normal_metal",
            ImpedanceModel::TwoFluid => "two_fluid",
            ImpedanceModel::VortexSemiInfinite => "vortex_semi_infinite",
            ImpedanceModel::Meissner => "meissner",
            ImpedanceModel::VortexSlab { .. } => "vortex_slab",
            ImpedanceModel::SlabApprox { .. } => "slab_approx",
            ImpedanceModel::Direct => "direct",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceImpedance {
    /// Z_S (Ω).
    pub value: Complex64,
    /// Angular frequency (rad/s) the value was computed for.
    pub omega: f64,
    pub model: ImpedanceModel,
}

/// Z_S = (1 − i)/(σδ).
pub fn zs_normal_metal(m: &DrudeMetal, omega: f64) -> Result<SurfaceImpedance> {
    let delta = skin_depth(m.sigma(), omega)?;
    let x = 1.0 / (m.sigma() * delta);
    Ok(SurfaceImpedance {
        value: Complex64::new(x, -x),
        omega,
        model: ImpedanceModel::NormalMetal,
    })
}

/// Z_S = Z0/√ε, on the branch with Re ≥ 0 (Im ≤ 0 when Re vanishes).
pub fn zs_two_fluid(m: &TwoFluidSc, omega: f64) -> Result<SurfaceImpedance> {
    let eps = epsilon_two_fluid(m, omega)?;
    let mut value = Z0 / eps.sqrt();
    if value.re < 0.0 || (value.re == 0.0 && value.im > 0.0) {
        value = -value;
    }
    if m.sigma1() == 0.0 {
        value.re = 0.0;
    }
    Ok(SurfaceImpedance {
        value,
        omega,
        model: ImpedanceModel::TwoFluid,
    })
}

/// Z_S^∞ = −iμ0ω·B(l + λ_V)λ_f / [(B + μ0ε_l)(l + λ_V) + μ0ε_l·λ_f].
///
/// At B = 0 the expression vanishes identically, so the London value
/// −iμ0ωλ_L is returned instead.
pub fn zs_vortex_semi_infinite(m: &VortexLatticeSc, omega: f64) -> Result<SurfaceImpedance> {
    let sc = m.scales(omega)?;
    let b = sc.bias_field;
    if b == 0.0 {
        return Ok(zs_meissner(m.lambda_l(), omega));
    }
    let l = sc.slippage;
    let num = b * (l + sc.lambda_v) * sc.lambda_f;
    let den = (b + sc.mu0_eps_l) * (l + sc.lambda_v) + sc.mu0_eps_l * sc.lambda_f;
    let value = -Complex64::i() * MU0 * omega * num / den;
    Ok(SurfaceImpedance {
        value,
        omega,
        model: ImpedanceModel::VortexSemiInfinite,
    })
}

/// Z_S = −iμ0ωλ_L.
pub fn zs_meissner(lambda_l: f64, omega: f64) -> SurfaceImpedance {
    SurfaceImpedance {
        value: Complex64::new(0.0, -MU0 * omega * lambda_l),
        omega,
        model: ImpedanceModel::Meissner,
    }
}

pub fn zs_direct(m: &DirectImpedance, omega: f64) -> SurfaceImpedance {
    SurfaceImpedance {
        value: m.zs(),
        omega,
        model: ImpedanceModel::Direct,
    }
}

/// Impedance of a semi-infinite film of any material.
pub fn zs_semi_infinite(m: &MaterialResponse, omega: f64) -> Result<SurfaceImpedance> {
    match m {
        MaterialResponse::Drude(d) => zs_normal_metal(d, omega),
        MaterialResponse::TwoFluid(t) => zs_two_fluid(t, omega),
        MaterialResponse::VortexLattice(v) => zs_vortex_semi_infinite(v, omega),
        MaterialResponse::Direct(z) => Ok(zs_direct(z, omega)),
    }
}

/// Thin-film law Re Z_S(h) ≈ (2/3)(h/δ_f)·Re Z_S^∞.
///
/// The imaginary part is copied unchanged from `zs_inf`; only the real part
/// carries meaning. Outside h < δ_f an `out_of_regime` diagnostic is returned.
pub fn zs_slab_approx(
    h: f64,
    delta_f: f64,
    zs_inf: &SurfaceImpedance,
) -> Result<(SurfaceImpedance, Vec<Diagnostic>)> {
    positive("thickness", h)?;
    positive("delta_f", delta_f)?;
    let mut diagnostics = Vec::new();
    if h >= delta_f {
        diagnostics.push(Diagnostic::new(
            "out_of_regime",
            format!("thickness {h:.3e} m is not below δ_f = {delta_f:.3e} m"),
        ));
    }
    let zs = SurfaceImpedance {
        value: Complex64::new(2.0 / 3.0 * h / delta_f * zs_inf.value.re, zs_inf.value.im),
        omega: zs_inf.omega,
        model: ImpedanceModel::SlabApprox { thickness: h },
    };
    Ok((zs, diagnostics))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidityCheck {
    pub name: &'static str,
    /// The length the criterion compares against (m).
    pub length: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidityReport {
    pub checks: Vec<ValidityCheck>,
}

impl ValidityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&ValidityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| {
                Diagnostic::new(
                    c.name,
                    format!("criterion failed against length {:.3e} m", c.length),
                )
            })
            .collect()
    }
}

/// Thin-film and width criteria use this margin for "≪".
const THICKNESS_WIDTH_MARGIN: f64 = 10.0;

/// Checks d > 2·len for len ∈ {δ_f, λ_V, a₀}, and h ≪ w when both the
/// thickness and a critical-current width are known.
pub fn validity_report(
    m: &VortexLatticeSc,
    d: f64,
    omega: f64,
    thickness: Option<f64>,
) -> Result<ValidityReport> {
    positive("distance", d)?;
    let sc = m.scales(omega)?;
    let mut checks: Vec<ValidityCheck> = [
        ("distance_vs_delta_f", sc.delta_f),
        ("distance_vs_lambda_v", sc.lambda_v),
        ("distance_vs_intervortex", sc.intervortex),
    ]
    .into_iter()
    .map(|(name, length)| ValidityCheck {
        name,
        length,
        passed: d > 2.0 * length,
    })
    .collect();
    if let (Some(h), Slippage::CriticalCurrent(spec)) = (thickness, m.slippage()) {
        checks.push(ValidityCheck {
            name: "thickness_vs_width",
            length: spec.width(),
            passed: h * THICKNESS_WIDTH_MARGIN < spec.width(),
        });
    }
    Ok(ValidityReport { checks })
}
