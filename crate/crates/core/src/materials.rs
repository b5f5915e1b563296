//! Material response models and the derived superconductor scales.
//!
//! Four film descriptions are supported: a Drude metal, a two-fluid
//! superconductor with local complex conductivity, a type-II superconductor
//! in the mixed state (vortex lattice, non-local two-mode response), and a
//! directly supplied surface impedance.

use num_complex::Complex64;

use crate::diagnostics::Diagnostic;
use crate::error::{non_negative, positive, Error, Result};
use crate::units::{EPS0, MU0, PHI0};

/// μ0·ε_l ≈ 0.9·B_c1, valid for B ≈ B_c1 ≪ B_c2.
pub const LINE_POTENTIAL_RATIO: f64 = 0.9;

/// Clean/dirty ratio applied to B_c2 (divided) and B_c1 (multiplied).
pub const CLEAN_LIMIT_FIELD_FACTOR: f64 = 15.0;
/// Residual resistance ratio of the dirty film; the clean preset divides ρ_N by it.
pub const CLEAN_LIMIT_RRR: f64 = 4.6;
/// The clean preset replaces the slippage length by this multiple of λ_L.
pub const CLEAN_LIMIT_SLIPPAGE_FACTOR: f64 = 1.0e3;

/// Below this σ2/σ1 ratio the two-fluid asymptote is flagged.
pub const TWO_FLUID_RATIO_THRESHOLD: f64 = 10.0;
/// Above this fraction of B_c2 the vortex-lattice model is flagged.
pub const BIAS_FIELD_FRACTION_THRESHOLD: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrudeMetal {
    sigma: f64,
}

impl DrudeMetal {
    pub fn new(sigma: f64) -> Result<Self> {
        Ok(Self {
            sigma: positive("sigma", sigma)?,
        })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }
}

/// Local complex conductivity σ1 + iσ2 of a superconductor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoFluidSc {
    sigma1: f64,
    sigma2: f64,
}

impl TwoFluidSc {
    pub fn new(sigma1: f64, sigma2: f64) -> Result<Self> {
        Ok(Self {
            sigma1: non_negative("sigma1", sigma1)?,
            sigma2: positive("sigma2", sigma2)?,
        })
    }

    /// Gorter-Casimir two-fluid estimate at temperature `t`:
    /// σ1 = (T/Tc)⁴/ρ_N and σ2 = (1 − (T/Tc)⁴)/(μ0·ω·λ_L²).
    pub fn gorter_casimir(rho_n: f64, lambda_l: f64, tc: f64, t: f64, omega: f64) -> Result<Self> {
        positive("rho_n", rho_n)?;
        positive("lambda_l", lambda_l)?;
        positive("tc", tc)?;
        positive("omega", omega)?;
        if !(t > 0.0 && t < tc) {
            return Err(Error::invalid("temperature", t, "must satisfy 0 < T < Tc"));
        }
        let normal_fraction = (t / tc).powi(4);
        Self::new(
            normal_fraction / rho_n,
            (1.0 - normal_fraction) / (MU0 * omega * lambda_l * lambda_l),
        )
    }

    pub fn sigma1(&self) -> f64 {
        self.sigma1
    }

    pub fn sigma2(&self) -> f64 {
        self.sigma2
    }

    pub fn conductivity(&self) -> Complex64 {
        Complex64::new(self.sigma1, self.sigma2)
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        if self.sigma2 < TWO_FLUID_RATIO_THRESHOLD * self.sigma1 {
            vec![Diagnostic::new(
                "two_fluid_ratio",
                format!(
                    "sigma2/sigma1 = {:.3e} is below {TWO_FLUID_RATIO_THRESHOLD}; \
                     the sigma2 >> sigma1 expansion is not reliable",
                    self.sigma2 / self.sigma1
                ),
            )]
        } else {
            Vec::new()
        }
    }
}

/// Inputs for estimating the slippage length from the slab's critical current.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalCurrentSpec {
    critical_current: f64,
    current: f64,
    width: f64,
}

impl CriticalCurrentSpec {
    pub fn new(critical_current: f64, current: f64, width: f64) -> Result<Self> {
        positive("critical_current", critical_current)?;
        non_negative("current", current)?;
        positive("width", width)?;
        if current >= critical_current {
            return Err(Error::PinningBroken {
                current,
                critical: critical_current,
            });
        }
        Ok(Self {
            critical_current,
            current,
            width,
        })
    }

    pub fn critical_current(&self) -> f64 {
        self.critical_current
    }

    pub fn current(&self) -> f64 {
        self.current
    }

    pub fn width(&self) -> f64 {
        self.width
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Slippage {
    /// Slippage length l (m).
    Length(f64),
    CriticalCurrent(CriticalCurrentSpec),
}

/// A type-II superconductor in the mixed state under a perpendicular bias field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VortexLatticeSc {
    rho_n: f64,
    bc2: f64,
    bc1: f64,
    lambda_l: f64,
    slippage: Slippage,
    bias_field: f64,
    line_potential_override: Option<f64>,
    flux_flow_depth_override: Option<f64>,
}

impl VortexLatticeSc {
    /// All quantities SI: ρ_N in Ω·m, fields in T, lengths in m.
    pub fn new(
        rho_n: f64,
        bc2: f64,
        bc1: f64,
        lambda_l: f64,
        slippage: Slippage,
        bias_field: f64,
    ) -> Result<Self> {
        positive("rho_n", rho_n)?;
        positive("bc1", bc1)?;
        positive("bc2", bc2)?;
        if bc1 >= bc2 {
            return Err(Error::invalid("bc1", bc1, "must be below bc2"));
        }
        positive("lambda_l", lambda_l)?;
        non_negative("bias_field", bias_field)?;
        if let Slippage::Length(l) = slippage {
            non_negative("slippage", l)?;
        }
        Ok(Self {
            rho_n,
            bc2,
            bc1,
            lambda_l,
            slippage,
            bias_field,
            line_potential_override: None,
            flux_flow_depth_override: None,
        })
    }

    /// Replaces the 0.9·B_c1 rule by a direct μ0·ε_l (T).
    pub fn with_line_potential(mut self, mu0_eps_l: f64) -> Result<Self> {
        self.line_potential_override = Some(positive("mu0_eps_l", mu0_eps_l)?);
        Ok(self)
    }

    /// Replaces the flux-flow depth formula by a direct value (m).
    pub fn with_flux_flow_depth(mut self, delta_f: f64) -> Result<Self> {
        self.flux_flow_depth_override = Some(positive("delta_f", delta_f)?);
        Ok(self)
    }

    pub fn with_slippage(mut self, slippage: Slippage) -> Result<Self> {
        if let Slippage::Length(l) = slippage {
            non_negative("slippage", l)?;
        }
        self.slippage = slippage;
        Ok(self)
    }

    pub fn with_bias_field(mut self, bias_field: f64) -> Result<Self> {
        self.bias_field = non_negative("bias_field", bias_field)?;
        Ok(self)
    }

    /// The "ideal purity and surface quality" variant of this film.
    ///
    /// B_c2 is divided and B_c1 multiplied by 15 (their product is kept),
    /// ρ_N is divided by the residual resistance ratio 4.6, and the slippage
    /// length becomes 10³·λ_L. Overrides are dropped since they described
    /// the dirty film.
    pub fn clean_limit(&self) -> Result<Self> {
        Self::new(
            self.rho_n / CLEAN_LIMIT_RRR,
            self.bc2 / CLEAN_LIMIT_FIELD_FACTOR,
            self.bc1 * CLEAN_LIMIT_FIELD_FACTOR,
            self.lambda_l,
            Slippage::Length(CLEAN_LIMIT_SLIPPAGE_FACTOR * self.lambda_l),
            self.bias_field,
        )
    }

    pub fn rho_n(&self) -> f64 {
        self.rho_n
    }

    pub fn bc2(&self) -> f64 {
        self.bc2
    }

    pub fn bc1(&self) -> f64 {
        self.bc1
    }

    pub fn lambda_l(&self) -> f64 {
        self.lambda_l
    }

    pub fn slippage(&self) -> Slippage {
        self.slippage
    }

    pub fn bias_field(&self) -> f64 {
        self.bias_field
    }

    pub fn line_potential_override(&self) -> Option<f64> {
        self.line_potential_override
    }

    pub fn flux_flow_depth_override(&self) -> Option<f64> {
        self.flux_flow_depth_override
    }

    /// μ0·ε_l in tesla, from the override or the 0.9·B_c1 rule.
    pub fn mu0_line_potential(&self) -> f64 {
        self.line_potential_override
            .unwrap_or_else(|| MU0 * line_potential(self.bc1))
    }

    /// Every derived length at angular frequency `omega`.
    ///
    /// At zero bias the vortex-dependent lengths degenerate: δ_f = 0,
    /// λ_V = λ_L and both a₀ and a current-derived l are infinite.
    pub fn scales(&self, omega: f64) -> Result<VortexScales> {
        positive("omega", omega)?;
        let b = self.bias_field;
        let mu0_eps_l = self.mu0_line_potential();
        let eps_l = mu0_eps_l / MU0;
        let delta_f = match self.flux_flow_depth_override {
            Some(d) => d,
            None => flux_flow_depth(self, omega)?,
        };
        let slippage = match self.slippage {
            Slippage::Length(l) => l,
            Slippage::CriticalCurrent(spec) if b > 0.0 => slippage_length(&spec, eps_l, b)?,
            Slippage::CriticalCurrent(_) => f64::INFINITY,
        };
        Ok(VortexScales {
            delta_f,
            lambda_f: complex_flux_flow_length(delta_f),
            lambda_v: vortex_penetration_length(self.lambda_l, eps_l, b),
            lambda_l: self.lambda_l,
            mu0_eps_l,
            slippage,
            intervortex: if b > 0.0 {
                intervortex_distance(b)?
            } else {
                f64::INFINITY
            },
            bias_field: b,
        })
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if self.bias_field > BIAS_FIELD_FRACTION_THRESHOLD * self.bc2 {
            out.push(Diagnostic::new(
                "bias_vs_bc2",
                format!(
                    "bias field {:.3e} T exceeds {BIAS_FIELD_FRACTION_THRESHOLD}·Bc2; \
                     the B << Bc2 line-potential rule is stretched",
                    self.bias_field
                ),
            ));
        }
        out
    }
}

/// Lengths (m) and fields (T) characterising the vortex-lattice response.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VortexScales {
    pub delta_f: f64,
    /// λ_f = δ_f(1 + i)/2.
    pub lambda_f: Complex64,
    pub lambda_v: f64,
    pub lambda_l: f64,
    pub mu0_eps_l: f64,
    pub slippage: f64,
    pub intervortex: f64,
    pub bias_field: f64,
}

/// A surface impedance computed elsewhere (BCS, Eliashberg, measurement).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectImpedance {
    zs: Complex64,
}

impl DirectImpedance {
    pub fn new(zs: Complex64) -> Result<Self> {
        if !(zs.re.is_finite() && zs.im.is_finite()) {
            return Err(Error::invalid("zs", zs.re, "must be finite"));
        }
        non_negative("re(zs)", zs.re)?;
        Ok(Self { zs })
    }

    pub fn zs(&self) -> Complex64 {
        self.zs
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MaterialResponse {
    Drude(DrudeMetal),
    TwoFluid(TwoFluidSc),
    VortexLattice(VortexLatticeSc),
    Direct(DirectImpedance),
}

/// ε(ω) = 1 + iσ/(ε0ω), keeping the vacuum term.
pub fn epsilon_drude(m: &DrudeMetal, omega: f64) -> Result<Complex64> {
    positive("omega", omega)?;
    Ok(Complex64::new(1.0, m.sigma / (EPS0 * omega)))
}

/// ε(ω) = 1 + i(σ1 + iσ2)/(ε0ω).
pub fn epsilon_two_fluid(m: &TwoFluidSc, omega: f64) -> Result<Complex64> {
    positive("omega", omega)?;
    Ok(Complex64::new(1.0, 0.0) + Complex64::i() * m.conductivity() / (EPS0 * omega))
}

/// Skin depth δ = √(2/(μ0σω)).
pub fn skin_depth(sigma: f64, omega: f64) -> Result<f64> {
    positive("sigma", sigma)?;
    positive("omega", omega)?;
    Ok((2.0 / (MU0 * sigma * omega)).sqrt())
}

/// Flux-flow penetration depth δ_f = √(2ρ_N·B/(μ0·ω·B_c2)).
///
/// Always the closed form; a flux-flow override on `m` is only honoured by
/// [`VortexLatticeSc::scales`].
pub fn flux_flow_depth(m: &VortexLatticeSc, omega: f64) -> Result<f64> {
    positive("omega", omega)?;
    Ok((2.0 * m.rho_n * m.bias_field / (MU0 * omega * m.bc2)).sqrt())
}

pub fn complex_flux_flow_length(delta_f: f64) -> Complex64 {
    Complex64::new(0.5 * delta_f, 0.5 * delta_f)
}

/// Vortex line potential ε_l (A/m) from μ0·ε_l = 0.9·B_c1.
pub fn line_potential(bc1: f64) -> f64 {
    LINE_POTENTIAL_RATIO * bc1 / MU0
}

/// λ_V = λ_L·√(μ0ε_l/(B + μ0ε_l)).
pub fn vortex_penetration_length(lambda_l: f64, eps_l: f64, b: f64) -> f64 {
    let pinned = MU0 * eps_l;
    lambda_l * (pinned / (b + pinned)).sqrt()
}

/// Slippage length l = ε_l·w/(I_c − I)·√(φ0/B).
pub fn slippage_length(spec: &CriticalCurrentSpec, eps_l: f64, b: f64) -> Result<f64> {
    positive("bias_field", b)?;
    if spec.current >= spec.critical_current {
        return Err(Error::PinningBroken {
            current: spec.current,
            critical: spec.critical_current,
        });
    }
    Ok(eps_l * spec.width / (spec.critical_current - spec.current) * (PHI0 / b).sqrt())
}

/// a₀ = √(φ0/B).
pub fn intervortex_distance(b: f64) -> Result<f64> {
    positive("bias_field", b)?;
    Ok((PHI0 / b).sqrt())
}
