//! Magnetic spin-flip rates of a trapped atom above metallic, superconducting
//! and vortex-bearing type-II superconducting films.
//!
//! The crate is organised bottom-up:
//!
//! * [`units`]: physical constants and the few unit conversions the
//!   configuration layer needs.
//! * [`materials`]: material response models and the derived vortex-lattice
//!   length scales (flux-flow depth, vortex penetration length, slippage
//!   length, intervortex distance).
//! * [`impedance`]: surface impedance for every material model, including the
//!   finite-thickness two-mode slab solve and its internal field profiles.
//! * [`spinflip`]: vacuum rate, Bose factor, Fresnel coefficients, the full
//!   plane-wave (Weyl) integral and the near-field closed forms.
//! * [`quadrature`]: the adaptive Gauss-Kronrod engine behind the Weyl integral.
//!
//! All public operations take and return SI quantities.

// `!(x > 0.0)` is the NaN-rejecting form used throughout.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod diagnostics;
pub mod error;
pub mod impedance;
pub mod materials;
pub mod quadrature;
pub mod spinflip;
pub mod units;

pub use diagnostics::Diagnostic;
pub use error::{Error, Result};

pub use num_complex::Complex64;
