//! Physical constants (CODATA 2018) and unit conversions.
//!
//! Everything inside the crate is SI. Only the configuration layer deals in
//! gauss, μΩ·cm and μm, and it converts through the helpers below.

use crate::error::{Error, Result};

/// Vacuum permeability μ0 (T·m/A).
pub const MU0: f64 = 1.256_637_062_12e-6;
/// Vacuum permittivity ε0 (F/m).
pub const EPS0: f64 = 8.854_187_812_8e-12;
/// Speed of light c (m/s).
pub const C: f64 = 299_792_458.0;
/// Reduced Planck constant ħ (J·s).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Planck constant h (J·s).
pub const PLANCK: f64 = 6.626_070_15e-34;
/// Elementary charge e (C).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// Boltzmann constant k_B (J/K).
pub const KB: f64 = 1.380_649e-23;
/// Bohr magneton μ_B (J/T).
pub const MU_B: f64 = 9.274_010_078_3e-24;
/// Electron g-factor, free-electron value rounded to six digits.
pub const G_S: f64 = 2.002_32;
/// Superconducting flux quantum h/2e (Wb).
pub const PHI0: f64 = 2.067_833_848e-15;
/// Vacuum impedance μ0·c (Ω).
pub const Z0: f64 = MU0 * C;

/// The constant set used throughout the crate, gathered in one value so it can
/// be echoed into run metadata.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub mu0: f64,
    pub eps0: f64,
    pub c: f64,
    pub hbar: f64,
    pub kb: f64,
    pub mu_b: f64,
    pub g_s: f64,
    pub phi0: f64,
    pub z0: f64,
}

pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    mu0: MU0,
    eps0: EPS0,
    c: C,
    hbar: HBAR,
    kb: KB,
    mu_b: MU_B,
    g_s: G_S,
    phi0: PHI0,
    z0: Z0,
};

const GAUSS_PER_TESLA: f64 = 1.0e4;

pub fn gauss_to_tesla(b: f64) -> f64 {
    b / GAUSS_PER_TESLA
}

pub fn tesla_to_gauss(b: f64) -> f64 {
    b * GAUSS_PER_TESLA
}

/// μΩ·cm → Ω·m.
pub fn resistivity_to_si(rho: f64) -> Result<f64> {
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(Error::invalid(
            "resistivity",
            rho,
            "must be finite and >= 0",
        ));
    }
    Ok(rho * 1.0e-8)
}

pub fn micron_to_m(x: f64) -> f64 {
    x * 1.0e-6
}

pub fn nanometre_to_m(x: f64) -> f64 {
    x * 1.0e-9
}
