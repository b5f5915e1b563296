//! Sweep and profile execution.

use spinflip_core::diagnostics::{flags, Diagnostic};
use spinflip_core::impedance::{
    slab_field_profile, validity_report, zs_semi_infinite, zs_vortex_slab, FieldProfile,
    SurfaceImpedance,
};
use spinflip_core::materials::{epsilon_drude, epsilon_two_fluid, MaterialResponse};
use spinflip_core::spinflip::{
    rate_asymptotic_metal, rate_asymptotic_two_fluid, rate_from_impedance, rate_weyl_integral,
    ImpedanceReflection, PermittivityReflection, RateResult, TrapScenario,
};
use spinflip_core::{Error, Result};

use crate::config::{Method, Mode, ScenarioConfig, SweepVar, Thickness};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    /// Swept quantity in SI (dimensionless for h/δ_f).
    pub value: f64,
    pub re_zs: f64,
    pub enhancement: f64,
    pub gamma: f64,
    pub tau: f64,
    pub flags: String,
    /// |Γ_weyl/Γ_impedance − 1| when cross-checking.
    pub cross_check: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepGroup {
    /// Bias field (T) of this curve when a family was requested.
    pub bias_field: Option<f64>,
    pub rows: Vec<SweepRow>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub metadata: String,
    /// `None` for a single-point run, reported against d.
    pub variable: Option<SweepVar>,
    pub groups: Vec<SweepGroup>,
    pub cross_checked: bool,
}

impl SweepResult {
    pub fn row_count(&self) -> usize {
        self.groups.iter().map(|g| g.rows.len()).sum()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SweepRow> {
        self.groups.iter().flat_map(|g| g.rows.iter())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileResult {
    pub metadata: String,
    pub zs: SurfaceImpedance,
    pub profile: FieldProfile,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RunOutput {
    Sweep(SweepResult),
    Profile(ProfileResult),
}

pub fn run(cfg: &ScenarioConfig, cross_check: bool) -> Result<RunOutput> {
    match cfg.mode {
        Mode::Sweep => run_sweep(cfg, cross_check).map(RunOutput::Sweep),
        Mode::Profile => run_profile(cfg).map(RunOutput::Profile),
    }
}

/// One evaluation point: material, geometry and trap.
#[derive(Debug, Clone, Copy)]
struct Point {
    material: MaterialResponse,
    thickness: Thickness,
    distance: f64,
}

pub fn run_sweep(cfg: &ScenarioConfig, cross_check: bool) -> Result<SweepResult> {
    let families: Vec<Option<f64>> = if cfg.bias_family.is_empty() {
        vec![None]
    } else {
        cfg.bias_family.iter().copied().map(Some).collect()
    };
    let mut groups = Vec::with_capacity(families.len());
    for bias in families {
        let material = match (bias, cfg.material) {
            (Some(b), MaterialResponse::VortexLattice(m)) => {
                MaterialResponse::VortexLattice(m.with_bias_field(b)?)
            }
            (_, m) => m,
        };
        let base = Point {
            material,
            thickness: cfg.thickness,
            distance: cfg.distance.unwrap_or(f64::NAN),
        };
        let rows = match &cfg.sweep {
            None => vec![evaluate(cfg, base, base.distance, cross_check)?],
            Some(sweep) => sweep
                .values()
                .into_iter()
                .map(|x| evaluate(cfg, at(sweep.var, base, x, cfg.omega)?, x, cross_check))
                .collect::<Result<Vec<_>>>()?,
        };
        groups.push(SweepGroup {
            bias_field: bias,
            rows,
        });
    }
    Ok(SweepResult {
        metadata: cfg.metadata(),
        variable: cfg.sweep.map(|s| s.var),
        groups,
        cross_checked: cross_check,
    })
}

fn at(var: SweepVar, base: Point, x: f64, omega: f64) -> Result<Point> {
    let mut p = base;
    match var {
        SweepVar::Distance => p.distance = x,
        SweepVar::Thickness => p.thickness = Thickness::Finite(x),
        SweepVar::RelativeThickness => {
            let MaterialResponse::VortexLattice(m) = base.material else {
                unreachable!("validated by the config resolver")
            };
            p.thickness = Thickness::Finite(x * m.scales(omega)?.delta_f);
        }
        SweepVar::BiasField => {
            let MaterialResponse::VortexLattice(m) = base.material else {
                unreachable!("validated by the config resolver")
            };
            p.material = MaterialResponse::VortexLattice(m.with_bias_field(x)?);
        }
    }
    Ok(p)
}

fn surface(p: &Point, omega: f64) -> Result<(SurfaceImpedance, Vec<Diagnostic>)> {
    match (p.material, p.thickness) {
        (MaterialResponse::VortexLattice(m), Thickness::Finite(h)) => {
            let sol = zs_vortex_slab(&m, omega, h)?;
            Ok((sol.zs, sol.diagnostics))
        }
        (MaterialResponse::VortexLattice(m), Thickness::SemiInfinite) => {
            Ok((zs_semi_infinite(&p.material, omega)?, m.diagnostics()))
        }
        (MaterialResponse::TwoFluid(t), _) => {
            Ok((zs_semi_infinite(&p.material, omega)?, t.diagnostics()))
        }
        _ => Ok((zs_semi_infinite(&p.material, omega)?, Vec::new())),
    }
}

fn rate(method: Method, p: &Point, zs: &SurfaceImpedance, s: &TrapScenario) -> Result<RateResult> {
    let omega = s.omega();
    match (method, p.material) {
        (Method::Weyl, MaterialResponse::Drude(m)) => {
            let epsilon = epsilon_drude(&m, omega)?;
            rate_weyl_integral(&PermittivityReflection { epsilon }, s)
        }
        (Method::Weyl, MaterialResponse::TwoFluid(m)) => {
            let epsilon = epsilon_two_fluid(&m, omega)?;
            rate_weyl_integral(&PermittivityReflection { epsilon }, s)
        }
        (Method::Weyl, _) => rate_weyl_integral(&ImpedanceReflection::new(zs), s),
        (Method::Asymptotic, MaterialResponse::Drude(m)) => rate_asymptotic_metal(m.sigma(), s),
        (Method::Asymptotic, MaterialResponse::TwoFluid(m)) => Ok(rate_asymptotic_two_fluid(&m, s)),
        (Method::Asymptotic | Method::Impedance, _) => Ok(rate_from_impedance(zs, s)),
    }
}

fn evaluate(cfg: &ScenarioConfig, p: Point, value: f64, cross_check: bool) -> Result<SweepRow> {
    if !p.distance.is_finite() {
        return Err(Error::InvalidParameter {
            name: "distance",
            value: p.distance,
            requirement: "must be set when d is not swept",
        });
    }
    let scenario = TrapScenario::new(p.distance, cfg.omega, cfg.temperature)?;
    let (zs, mut diagnostics) = surface(&p, cfg.omega)?;
    let r = rate(cfg.method, &p, &zs, &scenario)?;
    diagnostics.extend(r.diagnostics.iter().cloned());
    if let MaterialResponse::VortexLattice(m) = p.material {
        let h = match p.thickness {
            Thickness::Finite(h) => Some(h),
            Thickness::SemiInfinite => None,
        };
        diagnostics.extend(validity_report(&m, p.distance, cfg.omega, h)?.diagnostics());
    }
    let cross = if cross_check {
        let other = if cfg.method == Method::Weyl {
            rate(Method::Impedance, &p, &zs, &scenario)?
        } else {
            rate(Method::Weyl, &p, &zs, &scenario)?
        };
        let (weyl, closed) = if cfg.method == Method::Weyl {
            (r.gamma, other.gamma)
        } else {
            (other.gamma, r.gamma)
        };
        Some((weyl / closed - 1.0).abs())
    } else {
        None
    };
    Ok(SweepRow {
        value,
        re_zs: zs.value.re,
        enhancement: r.enhancement,
        gamma: r.gamma,
        tau: r.tau,
        flags: flags(&diagnostics),
        cross_check: cross,
    })
}

pub fn run_profile(cfg: &ScenarioConfig) -> Result<ProfileResult> {
    let (MaterialResponse::VortexLattice(m), Thickness::Finite(h)) = (cfg.material, cfg.thickness)
    else {
        return Err(Error::InvalidParameter {
            name: "thickness",
            value: f64::INFINITY,
            requirement: "profiles need a vortex-bearing film of finite thickness",
        });
    };
    let sol = zs_vortex_slab(&m, cfg.omega, h)?;
    let n = cfg.profile_points;
    let grid: Vec<f64> = (0..n).map(|i| h * i as f64 / (n - 1) as f64).collect();
    Ok(ProfileResult {
        metadata: cfg.metadata(),
        zs: sol.zs,
        profile: slab_field_profile(&sol, &grid)?,
    })
}
