//! Fresnel coefficients of the film surface as functions of the reduced
//! parallel wave vector q (q·k0 is the in-plane wave number).

use num_complex::Complex64;

use crate::impedance::SurfaceImpedance;
use crate::quadrature::eta0;
use crate::units::Z0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelPair {
    pub r_s: Complex64,
    pub r_p: Complex64,
}

/// Anything that reflects plane waves: a permittivity, a surface impedance,
/// or nothing at all. Implementations are immutable and shareable across
/// sweep workers.
pub trait ReflectionProvider: Send + Sync {
    /// Coefficients at `q`, with η0(q) supplied by the caller.
    fn coefficients_at(&self, q: f64, eta0: Complex64) -> FresnelPair;

    fn coefficients(&self, q: f64) -> FresnelPair {
        self.coefficients_at(q, eta0(q))
    }
}

/// Local dielectric response ε(ω).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermittivityReflection {
    pub epsilon: Complex64,
}

impl ReflectionProvider for PermittivityReflection {
    fn coefficients_at(&self, q: f64, eta0: Complex64) -> FresnelPair {
        fresnel_with_eta0(self.epsilon, q, eta0)
    }
}

/// A q-independent surface impedance Z_S.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpedanceReflection {
    pub zs: Complex64,
}

impl ImpedanceReflection {
    pub fn new(zs: &SurfaceImpedance) -> Self {
        Self { zs: zs.value }
    }
}

impl ReflectionProvider for ImpedanceReflection {
    fn coefficients_at(&self, _q: f64, eta0: Complex64) -> FresnelPair {
        impedance_with_eta0(self.zs, eta0)
    }
}

/// Free space: nothing is reflected.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct NoReflection;

impl ReflectionProvider for NoReflection {
    fn coefficients_at(&self, _q: f64, _eta0: Complex64) -> FresnelPair {
        FresnelPair {
            r_s: Complex64::new(0.0, 0.0),
            r_p: Complex64::new(0.0, 0.0),
        }
    }
}

/// r_s = (η0 − η)/(η0 + η), r_p = (εη0 − η)/(εη0 + η), η = √(ε − q²) with Im η ≥ 0.
pub fn fresnel_from_epsilon(eps: Complex64, q: f64) -> FresnelPair {
    fresnel_with_eta0(eps, q, eta0(q))
}

/// r_s = (η0·Z_S − Z0)/(η0·Z_S + Z0), r_p = (Z0·η0 − Z_S)/(Z0·η0 + Z_S).
pub fn fresnel_from_impedance(zs: &SurfaceImpedance, q: f64) -> FresnelPair {
    impedance_with_eta0(zs.value, eta0(q))
}

fn fresnel_with_eta0(eps: Complex64, q: f64, eta0: Complex64) -> FresnelPair {
    let mut eta = (eps - q * q).sqrt();
    if eta.im < 0.0 {
        eta = -eta;
    }
    FresnelPair {
        r_s: (eta0 - eta) / (eta0 + eta),
        r_p: (eps * eta0 - eta) / (eps * eta0 + eta),
    }
}

fn impedance_with_eta0(zs: Complex64, eta0: Complex64) -> FresnelPair {
    let z0 = Complex64::new(Z0, 0.0);
    if zs == Complex64::new(0.0, 0.0) {
        // perfect conductor, including the grazing point η0 = 0
        return FresnelPair {
            r_s: Complex64::new(-1.0, 0.0),
            r_p: Complex64::new(1.0, 0.0),
        };
    }
    FresnelPair {
        r_s: (eta0 * zs - z0) / (eta0 * zs + z0),
        r_p: (z0 * eta0 - zs) / (z0 * eta0 + zs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::impedance::ImpedanceModel;

    fn zs(value: Complex64) -> SurfaceImpedance {
        SurfaceImpedance {
            value,
            omega: 1.0,
            model: ImpedanceModel::Direct,
        }
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn vacuum_has_no_interface() {
        for q in [0.0, 0.3, 0.99, 1.5, 1e4] {
            let r = fresnel_from_epsilon(Complex64::new(1.0, 0.0), q);
            assert!(r.r_s.norm() < 1e-15 && r.r_p.norm() < 1e-15, "q = {q}");
        }
    }

    #[test]
    fn normal_incidence_identity() {
        for eps in [
            Complex64::new(2.0, 0.5),
            Complex64::new(1.0, 6e13),
            Complex64::new(-30.0, 1.0),
        ] {
            let r = fresnel_from_epsilon(eps, 0.0);
            assert!(close(r.r_p, -r.r_s, 1e-14));
        }
    }

    #[test]
    fn perfect_conductor_limit() {
        let r = fresnel_from_epsilon(Complex64::new(1.0, 1e30), 0.0);
        assert!(close(r.r_s, Complex64::new(-1.0, 0.0), 1e-12));
        assert!(close(r.r_p, Complex64::new(1.0, 0.0), 1e-12));
    }

    #[test]
    fn impedance_special_cases() {
        for q in [0.0, 0.5, 1.0, 2.0, 1e6] {
            let r = fresnel_from_impedance(&zs(Complex64::new(0.0, 0.0)), q);
            assert_eq!(r.r_s, Complex64::new(-1.0, 0.0));
            assert_eq!(r.r_p, Complex64::new(1.0, 0.0));
        }
        let r = fresnel_from_impedance(&zs(Complex64::new(Z0, 0.0)), 0.0);
        assert!(r.r_s.norm() < 1e-15 && r.r_p.norm() < 1e-15);
    }

    #[test]
    fn impedance_matches_permittivity_for_large_epsilon() {
        for eps in [
            Complex64::new(1.0, 6.0e13),
            Complex64::new(-3.0e12, 1.0e9),
            Complex64::new(1.0, 1.0e6),
        ] {
            let z = zs(Complex64::new(Z0, 0.0) / eps.sqrt());
            let q_limit = (0.01 * eps.norm()).sqrt();
            for i in 0..=60 {
                let q = q_limit * (i as f64 / 60.0);
                let a = fresnel_from_epsilon(eps, q);
                let b = fresnel_from_impedance(&z, q);
                assert!(
                    (a.r_s - b.r_s).norm() <= 0.01 * a.r_s.norm(),
                    "r_s eps={eps} q={q}"
                );
                assert!(
                    (a.r_p - b.r_p).norm() <= 0.01 * a.r_p.norm(),
                    "r_p eps={eps} q={q}"
                );
            }
        }
    }

    #[test]
    fn evanescent_branch() {
        let r = fresnel_from_epsilon(Complex64::new(1.0, 6e13), 1e5);
        assert!(r.r_s.norm() <= 1.0);
        let e = eta0(1e5);
        assert!(e.im > 0.0 && e.re == 0.0);
    }
}
