//! Spin-flip transition rates of an atom at distance d above the film.
//!
//! Every rate is reported as Γ = Γ⁰·(n_th + 1)·F, where Γ⁰ is the vacuum
//! rate, n_th the thermal photon number at the transition frequency and F the
//! total surface enhancement (free-space term included, so F = 1 without a
//! surface). The full plane-wave integral and all near-field closed forms
//! produce the same [`RateResult`] shape and can be compared directly.

pub mod fresnel;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::diagnostics::Diagnostic;
use crate::error::{positive, Error, Result};
use crate::impedance::SurfaceImpedance;
use crate::materials::{skin_depth, TwoFluidSc};
use crate::quadrature::{integrate_weyl, IntegralSpec, Tolerances};
use crate::units::{C, G_S, HBAR, KB, MU0, MU_B};

pub use fresnel::{
    fresnel_from_epsilon, fresnel_from_impedance, FresnelPair, ImpedanceReflection, NoReflection,
    PermittivityReflection, ReflectionProvider,
};

/// 27/64, the geometric prefactor of every near-field closed form.
const NEAR_FIELD_PREFACTOR: f64 = 27.0 / 64.0;

/// Ratio used to flag "≫" / "≪" regime conditions.
const REGIME_MARGIN: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapScenario {
    distance: f64,
    omega: f64,
    temperature: f64,
}

impl TrapScenario {
    /// Distance in m, angular frequency in rad/s, temperature in K.
    pub fn new(distance: f64, omega: f64, temperature: f64) -> Result<Self> {
        Ok(Self {
            distance: positive("distance", distance)?,
            omega: positive("omega", omega)?,
            temperature: positive("temperature", temperature)?,
        })
    }

    pub fn distance(&self) -> f64 {
        self.distance
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn k0(&self) -> f64 {
        self.omega / C
    }

    pub fn with_distance(self, distance: f64) -> Result<Self> {
        Self::new(distance, self.omega, self.temperature)
    }

    fn near_field_diagnostics(&self) -> Vec<Diagnostic> {
        let k0d = self.k0() * self.distance;
        if k0d * REGIME_MARGIN > 1.0 {
            vec![Diagnostic::new(
                "not_near_field",
                format!("k0·d = {k0d:.3e} is not << 1"),
            )]
        } else {
            Vec::new()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateMethod {
    WeylIntegral,
    AsymptoticEpsilon,
    AsymptoticMetal,
    AsymptoticTwoFluid,
    Impedance,
}

impl RateMethod {
    pub fn name(self) -> &'static str {
        match self {
            RateMethod::WeylIntegral => "weyl_integral",
            RateMethod::AsymptoticEpsilon => "asymptotic_epsilon",
            RateMethod::AsymptoticMetal => "asymptotic_metal",
            RateMethod::AsymptoticTwoFluid => "asymptotic_two_fluid",
            RateMethod::Impedance => "impedance",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RateResult {
    /// Vacuum spin-flip rate Γ⁰ (s⁻¹).
    pub gamma0: f64,
    pub nth: f64,
    /// Total surface factor F, with Γ = Γ⁰·(n_th + 1)·F.
    pub enhancement: f64,
    /// Γ (s⁻¹).
    pub gamma: f64,
    /// τ = 1/Γ (s).
    pub tau: f64,
    pub method: RateMethod,
    /// Absolute error estimate on `enhancement` (quadrature only).
    pub enhancement_error: Option<f64>,
    pub diagnostics: Vec<Diagnostic>,
}

impl RateResult {
    fn assemble(s: &TrapScenario, enhancement: f64, method: RateMethod) -> Self {
        let gamma0 = gamma_vacuum(s.omega);
        let nth = thermal_photon_number(s.omega, s.temperature);
        let gamma = gamma0 * (nth + 1.0) * enhancement;
        Self {
            gamma0,
            nth,
            enhancement,
            gamma,
            tau: 1.0 / gamma,
            method,
            enhancement_error: None,
            diagnostics: s.near_field_diagnostics(),
        }
    }
}

/// Γ⁰ = μ0(μ_B·g_S)²k0³/(24πħ).
pub fn gamma_vacuum(omega: f64) -> f64 {
    let k0 = omega / C;
    MU0 * (MU_B * G_S).powi(2) * k0.powi(3) / (24.0 * PI * HBAR)
}

/// Bose factor 1/(e^(ħω/k_BT) − 1), evaluated through `exp_m1` so that the
/// classical regime ħω ≪ k_BT keeps full precision.
pub fn thermal_photon_number(omega: f64, temperature: f64) -> f64 {
    let x = HBAR * omega / (KB * temperature);
    1.0 / x.exp_m1()
}

/// Full plane-wave integral for any reflecting surface.
pub fn rate_weyl_integral(rp: &dyn ReflectionProvider, s: &TrapScenario) -> Result<RateResult> {
    rate_weyl_integral_with(rp, s, &Tolerances::default())
}

pub fn rate_weyl_integral_with(
    rp: &dyn ReflectionProvider,
    s: &TrapScenario,
    tolerances: &Tolerances,
) -> Result<RateResult> {
    let k0d = s.k0() * s.distance;
    let spec = IntegralSpec::new(|q: f64, eta0: Complex64| weyl_integrand(rp, k0d, q, eta0))
        .with_tolerances(*tolerances);
    let integral = integrate_weyl(&spec, k0d)?;
    if !integral.converged {
        return Err(Error::QuadratureNotConverged {
            estimate: integral.value,
            error_estimate: integral.error_estimate,
            evals: integral.evals,
        });
    }
    let enhancement = 1.0 + 3.0 / 8.0 * integral.value;
    let mut out = RateResult::assemble(s, enhancement, RateMethod::WeylIntegral);
    out.enhancement_error = Some(3.0 / 8.0 * integral.error_estimate);
    Ok(out)
}

/// Re[(q/η0)·e^(2iη0k0d)·(r_p − η0²r_s + 2q²r_s)].
///
/// The factor 1/η0 is kept here; the quadrature substitutions cancel it.
fn weyl_integrand(rp: &dyn ReflectionProvider, k0d: f64, q: f64, eta0: Complex64) -> f64 {
    let r = rp.coefficients_at(q, eta0);
    let bracket = r.r_p - eta0 * eta0 * r.r_s + 2.0 * q * q * r.r_s;
    let phase = (Complex64::i() * 2.0 * k0d * eta0).exp();
    (q / eta0 * phase * bracket).re
}

/// F = 1 + (27/64)·Re[2/√ε]/(k0d)⁴.
pub fn rate_asymptotic_epsilon(eps: Complex64, s: &TrapScenario) -> RateResult {
    let k0d = s.k0() * s.distance;
    let root = eps.sqrt();
    let enhancement = 1.0 + NEAR_FIELD_PREFACTOR * (2.0 / root).re / k0d.powi(4);
    let mut out = RateResult::assemble(s, enhancement, RateMethod::AsymptoticEpsilon);
    if root.norm() * k0d < REGIME_MARGIN {
        out.diagnostics.push(Diagnostic::new(
            "penetration_vs_distance",
            format!("|√ε|·k0·d = {:.3e} is not >> 1", root.norm() * k0d),
        ));
    }
    out
}

/// F = 1 + (27/64)·δ/(k0³d⁴) for a Drude metal.
pub fn rate_asymptotic_metal(sigma: f64, s: &TrapScenario) -> Result<RateResult> {
    let delta = skin_depth(sigma, s.omega)?;
    let k0 = s.k0();
    let enhancement = 1.0 + NEAR_FIELD_PREFACTOR * delta / (k0.powi(3) * s.distance.powi(4));
    let mut out = RateResult::assemble(s, enhancement, RateMethod::AsymptoticMetal);
    if delta * REGIME_MARGIN > s.distance {
        out.diagnostics.push(Diagnostic::new(
            "skin_depth_vs_distance",
            format!(
                "skin depth {delta:.3e} m is not << d = {:.3e} m",
                s.distance
            ),
        ));
    }
    Ok(out)
}

/// F = 1 + (27/64)·σ1/(√(ωμ0)·k0³d⁴·σ2^(3/2)).
pub fn rate_asymptotic_two_fluid(m: &TwoFluidSc, s: &TrapScenario) -> RateResult {
    let k0 = s.k0();
    let enhancement = 1.0
        + NEAR_FIELD_PREFACTOR * m.sigma1()
            / ((s.omega * MU0).sqrt() * k0.powi(3) * s.distance.powi(4) * m.sigma2().powf(1.5));
    let mut out = RateResult::assemble(s, enhancement, RateMethod::AsymptoticTwoFluid);
    out.diagnostics.extend(m.diagnostics());
    out
}

/// F = 1 + (27/64)·2·Re(Z_S)/(ωμ0·k0³d⁴).
pub fn rate_from_impedance(zs: &SurfaceImpedance, s: &TrapScenario) -> RateResult {
    let k0 = s.k0();
    let enhancement = 1.0
        + NEAR_FIELD_PREFACTOR * 2.0 * zs.value.re
            / (s.omega * MU0 * k0.powi(3) * s.distance.powi(4));
    RateResult::assemble(s, enhancement, RateMethod::Impedance)
}
