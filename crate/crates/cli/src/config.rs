//! `key = value` scenario files.
//!
//! Keys carry their unit in the name (`bias_field_gauss`, `distance_um`, ...).
//! Everything is converted to SI once, here; the rest of the program only
//! sees SI quantities.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use spinflip_core::materials::{
    CriticalCurrentSpec, DirectImpedance, DrudeMetal, MaterialResponse, Slippage, TwoFluidSc,
    VortexLatticeSc,
};
use spinflip_core::units::{
    gauss_to_tesla, micron_to_m, nanometre_to_m, resistivity_to_si, CODATA_2018,
};
use spinflip_core::{Complex64, Error as CoreError};

use crate::error::{CliError, ConfigError};

/// Version tag for the sign and branch conventions echoed in CSV metadata.
pub const CONVENTIONS: &str = "v1:e^-iwt,Im(eta)>=0,eta0(q>1)=+i*sqrt(q^2-1),Re(Zs)>=0";

pub const DEFAULT_TEMPERATURE_K: f64 = 4.2;
pub const DEFAULT_PROFILE_POINTS: usize = 200;

/// Every key the parser accepts.
pub const KEYS: &[&str] = &[
    "material",
    "frequency_mhz",
    "temperature_k",
    "distance_um",
    "thickness_um",
    "method",
    "mode",
    "sweep",
    "bias_family_gauss",
    "profile_points",
    "sigma_s_per_m",
    "sigma1_s_per_m",
    "sigma2_s_per_m",
    "tc_k",
    "rho_n_uohm_cm",
    "lambda_l_nm",
    "bc1_gauss",
    "bc2_gauss",
    "bias_field_gauss",
    "slippage_nm",
    "ic_amp",
    "i_amp",
    "width_um",
    "mu0_eps_l_gauss",
    "delta_f_um",
    "clean_limit",
    "zs_re_ohm",
    "zs_im_ohm",
];

const COMMON_KEYS: &[&str] = &[
    "material",
    "frequency_mhz",
    "temperature_k",
    "distance_um",
    "method",
    "mode",
    "sweep",
];

const VORTEX_KEYS: &[&str] = &[
    "thickness_um",
    "bias_family_gauss",
    "profile_points",
    "rho_n_uohm_cm",
    "lambda_l_nm",
    "bc1_gauss",
    "bc2_gauss",
    "bias_field_gauss",
    "slippage_nm",
    "ic_amp",
    "i_amp",
    "width_um",
    "mu0_eps_l_gauss",
    "delta_f_um",
    "clean_limit",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaterialKind {
    Drude,
    TwoFluid,
    Vortex,
    Direct,
}

impl MaterialKind {
    pub fn name(self) -> &'static str {
        match self {
            MaterialKind::Drude => "drude",
            MaterialKind::TwoFluid => "two_fluid",
            MaterialKind::Vortex => "vortex",
            MaterialKind::Direct => "direct",
        }
    }

    fn allows(self, key: &str) -> bool {
        if COMMON_KEYS.contains(&key) {
            return true;
        }
        match self {
            MaterialKind::Drude => key == "sigma_s_per_m",
            MaterialKind::TwoFluid => matches!(
                key,
                "sigma1_s_per_m" | "sigma2_s_per_m" | "tc_k" | "rho_n_uohm_cm" | "lambda_l_nm"
            ),
            MaterialKind::Vortex => VORTEX_KEYS.contains(&key),
            MaterialKind::Direct => matches!(key, "zs_re_ohm" | "zs_im_ohm"),
        }
    }
}

/// How the rate is computed from the material.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Full plane-wave integral.
    Weyl,
    /// Near-field closed form of the material (metal, two-fluid or impedance).
    Asymptotic,
    /// Near-field closed form in terms of Re(Z_S).
    Impedance,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Weyl => "weyl",
            Method::Asymptotic => "asymptotic",
            Method::Impedance => "impedance",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Thickness {
    SemiInfinite,
    /// h (m).
    Finite(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVar {
    /// Atom distance d (m).
    Distance,
    /// Film thickness h (m).
    Thickness,
    /// Film thickness in units of δ_f.
    RelativeThickness,
    /// Bias field B (T).
    BiasField,
}

impl SweepVar {
    pub fn name(self) -> &'static str {
        match self {
            SweepVar::Distance => "d",
            SweepVar::Thickness => "h",
            SweepVar::RelativeThickness => "h_rel",
            SweepVar::BiasField => "b",
        }
    }

    /// Axis label for plots, in the SI units the CSV is written in.
    pub fn label(self) -> &'static str {
        match self {
            SweepVar::Distance => "d (m)",
            SweepVar::Thickness => "h (m)",
            SweepVar::RelativeThickness => "h / delta_f",
            SweepVar::BiasField => "B (T)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// Sweep range, already in SI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub var: SweepVar,
    pub min: f64,
    pub max: f64,
    pub spacing: Spacing,
    pub count: usize,
}

impl Sweep {
    pub fn values(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|i| {
                let x = i as f64 / (n - 1) as f64;
                match self.spacing {
                    Spacing::Linear => self.min + (self.max - self.min) * x,
                    Spacing::Log => self.min * (self.max / self.min).powf(x),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sweep,
    Profile,
}

/// A fully validated scenario in SI units.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub kind: MaterialKind,
    pub material: MaterialResponse,
    /// Transition angular frequency ω (rad/s).
    pub omega: f64,
    pub temperature: f64,
    /// d (m); required unless d is swept.
    pub distance: Option<f64>,
    pub thickness: Thickness,
    pub method: Method,
    pub mode: Mode,
    pub sweep: Option<Sweep>,
    /// Bias fields (T) of the curve family; empty for a single curve.
    pub bias_family: Vec<f64>,
    pub profile_points: usize,
    /// Defaults that were filled in, echoed in the metadata.
    pub defaults: Vec<String>,
}

/// Raw `key = value` pairs with the line they came from.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawConfig {
    entries: BTreeMap<String, (String, usize)>,
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut raw = RawConfig::default();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(ConfigError::Syntax {
                    line: line_no,
                    text: content.to_string(),
                });
            };
            let key = key.trim().to_ascii_lowercase();
            let value = value.trim().to_string();
            if key.is_empty() || value.is_empty() {
                return Err(ConfigError::Syntax {
                    line: line_no,
                    text: content.to_string(),
                });
            }
            if !KEYS.contains(&key.as_str()) {
                return Err(ConfigError::UnknownKey { key, line: line_no });
            }
            if raw.entries.contains_key(&key) {
                return Err(ConfigError::Duplicate { key, line: line_no });
            }
            raw.entries.insert(key, (value, line_no));
        }
        Ok(raw)
    }

    /// Applies `key=value`, replacing any existing entry.
    pub fn set_override(&mut self, assignment: &str) -> Result<(), ConfigError> {
        let Some((key, value)) = assignment.split_once('=') else {
            return Err(ConfigError::Syntax {
                line: 0,
                text: assignment.to_string(),
            });
        };
        let key = key.trim().to_ascii_lowercase();
        if !KEYS.contains(&key.as_str()) {
            return Err(ConfigError::UnknownKey { key, line: 0 });
        }
        self.entries.insert(key, (value.trim().to_string(), 0));
        Ok(())
    }

    pub fn remove(&mut self, key: &str) {
        self.entries.remove(key);
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|(v, _)| v.as_str())
    }

    pub fn resolve(&self) -> Result<ScenarioConfig, ConfigError> {
        Resolver {
            raw: self,
            defaults: Vec::new(),
        }
        .run()
    }
}

pub fn parse_config(text: &str) -> Result<ScenarioConfig, ConfigError> {
    RawConfig::parse(text)?.resolve()
}

pub fn load_raw(path: &Path) -> Result<RawConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(RawConfig::parse(&text)?)
}

pub fn load_config(path: &Path) -> Result<ScenarioConfig, CliError> {
    Ok(load_raw(path)?.resolve()?)
}

struct Resolver<'a> {
    raw: &'a RawConfig,
    defaults: Vec<String>,
}

impl Resolver<'_> {
    fn run(mut self) -> Result<ScenarioConfig, ConfigError> {
        let kind = match self.raw.get("material") {
            None => {
                return Err(ConfigError::MissingKeys {
                    keys: self.missing(&["material", "frequency_mhz", "distance_um"]),
                })
            }
            Some("drude") | Some("metal") => MaterialKind::Drude,
            Some("two_fluid") => MaterialKind::TwoFluid,
            Some("vortex") => MaterialKind::Vortex,
            Some("direct") => MaterialKind::Direct,
            Some(other) => {
                return Err(ConfigError::invalid(
                    "material",
                    other,
                    "one of drude, two_fluid, vortex, direct",
                ))
            }
        };
        for key in self.raw.entries.keys() {
            if !kind.allows(key) {
                return Err(ConfigError::NotApplicable {
                    key: key.clone(),
                    material: kind.name().to_string(),
                });
            }
        }

        let sweep = self.raw.get("sweep").map(parse_sweep).transpose()?;
        let sweeps_distance = matches!(
            sweep,
            Some(Sweep {
                var: SweepVar::Distance,
                ..
            })
        );
        let mode = match self.raw.get("mode") {
            None | Some("sweep") => Mode::Sweep,
            Some("profile") => Mode::Profile,
            Some(other) => return Err(ConfigError::invalid("mode", other, "sweep or profile")),
        };

        let mut required = vec!["frequency_mhz"];
        if !sweeps_distance && mode == Mode::Sweep {
            required.push("distance_um");
        }
        required.extend(self.material_required(kind));
        let missing = self.missing(&required);
        if !missing.is_empty() {
            return Err(ConfigError::MissingKeys { keys: missing });
        }

        let omega = 2.0 * PI * 1e6 * self.positive("frequency_mhz")?;
        let temperature = match self.raw.get("temperature_k") {
            Some(_) => self.positive("temperature_k")?,
            None => {
                self.defaults
                    .push(format!("temperature_k={DEFAULT_TEMPERATURE_K}"));
                DEFAULT_TEMPERATURE_K
            }
        };
        let distance = match self.raw.get("distance_um") {
            Some(_) => Some(micron_to_m(self.positive("distance_um")?)),
            None => None,
        };
        let thickness = match self.raw.get("thickness_um") {
            None => Thickness::SemiInfinite,
            Some(v) if v.eq_ignore_ascii_case("semi-infinite") => Thickness::SemiInfinite,
            Some(_) => Thickness::Finite(micron_to_m(self.positive("thickness_um")?)),
        };
        let method = match self.raw.get("method") {
            Some("weyl") => Method::Weyl,
            Some("asymptotic") => Method::Asymptotic,
            Some("impedance") => Method::Impedance,
            Some(other) => {
                return Err(ConfigError::invalid(
                    "method",
                    other,
                    "one of weyl, asymptotic, impedance",
                ))
            }
            None => {
                let m = match kind {
                    MaterialKind::Drude | MaterialKind::TwoFluid => Method::Asymptotic,
                    MaterialKind::Vortex | MaterialKind::Direct => Method::Impedance,
                };
                self.defaults.push(format!("method={}", m.name()));
                m
            }
        };

        let material = self.material(kind, omega, temperature)?;

        let bias_family = match self.raw.get("bias_family_gauss") {
            None => Vec::new(),
            Some(list) => list
                .split(',')
                .map(|s| {
                    let s = s.trim();
                    match s.parse::<f64>() {
                        Ok(g) if g.is_finite() && g > 0.0 => Ok(gauss_to_tesla(g)),
                        _ => Err(ConfigError::invalid(
                            "bias_family_gauss",
                            s,
                            "comma-separated fields > 0 G",
                        )),
                    }
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        let profile_points = match self.raw.get("profile_points") {
            None => DEFAULT_PROFILE_POINTS,
            Some(v) => match v.parse::<usize>() {
                Ok(n) if n >= 2 => n,
                _ => return Err(ConfigError::invalid("profile_points", v, "an integer >= 2")),
            },
        };

        if let Some(s) = &sweep {
            match s.var {
                SweepVar::Thickness | SweepVar::RelativeThickness | SweepVar::BiasField
                    if kind != MaterialKind::Vortex =>
                {
                    return Err(ConfigError::Constraint(format!(
                        "sweep variable `{}` requires material = vortex",
                        s.var.name()
                    )))
                }
                SweepVar::BiasField if !bias_family.is_empty() => {
                    return Err(ConfigError::Constraint(
                        "bias_family_gauss cannot be combined with a bias-field sweep".into(),
                    ))
                }
                _ => {}
            }
        }
        if mode == Mode::Profile {
            if !matches!(thickness, Thickness::Finite(_)) {
                return Err(ConfigError::Constraint(
                    "mode = profile requires a finite thickness_um".into(),
                ));
            }
            if sweep.is_some() {
                return Err(ConfigError::Constraint(
                    "mode = profile does not take a sweep".into(),
                ));
            }
        }

        Ok(ScenarioConfig {
            kind,
            material,
            omega,
            temperature,
            distance,
            thickness,
            method,
            mode,
            sweep,
            bias_family,
            profile_points,
            defaults: self.defaults,
        })
    }

    fn missing(&self, keys: &[&str]) -> Vec<String> {
        keys.iter()
            .filter(|k| self.raw.get(k).is_none())
            .map(|k| k.to_string())
            .collect()
    }

    fn material_required(&self, kind: MaterialKind) -> Vec<&'static str> {
        match kind {
            MaterialKind::Drude => vec!["sigma_s_per_m"],
            MaterialKind::TwoFluid => {
                if self.raw.get("sigma1_s_per_m").is_some()
                    || self.raw.get("sigma2_s_per_m").is_some()
                {
                    vec!["sigma1_s_per_m", "sigma2_s_per_m"]
                } else {
                    vec!["rho_n_uohm_cm", "lambda_l_nm", "tc_k"]
                }
            }
            MaterialKind::Vortex => {
                let mut keys = vec![
                    "rho_n_uohm_cm",
                    "bc1_gauss",
                    "bc2_gauss",
                    "lambda_l_nm",
                    "bias_field_gauss",
                ];
                if self.raw.get("slippage_nm").is_none() {
                    keys.extend(["ic_amp", "width_um"]);
                }
                keys
            }
            MaterialKind::Direct => vec!["zs_re_ohm", "zs_im_ohm"],
        }
    }

    fn number(&self, key: &str) -> Result<f64, ConfigError> {
        let v = self.raw.get(key).unwrap_or("");
        match v.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(x),
            _ => Err(ConfigError::invalid(key, v, "a finite number")),
        }
    }

    fn positive(&self, key: &str) -> Result<f64, ConfigError> {
        let x = self.number(key)?;
        if x > 0.0 {
            Ok(x)
        } else {
            Err(ConfigError::invalid(
                key,
                self.raw.get(key).unwrap_or(""),
                "a number > 0",
            ))
        }
    }

    fn non_negative(&self, key: &str) -> Result<f64, ConfigError> {
        let x = self.number(key)?;
        if x >= 0.0 {
            Ok(x)
        } else {
            Err(ConfigError::invalid(
                key,
                self.raw.get(key).unwrap_or(""),
                "a number >= 0",
            ))
        }
    }

    fn flag(&self, key: &str) -> Result<bool, ConfigError> {
        match self.raw.get(key) {
            None | Some("false") => Ok(false),
            Some("true") => Ok(true),
            Some(other) => Err(ConfigError::invalid(key, other, "true or false")),
        }
    }

    fn material(
        &mut self,
        kind: MaterialKind,
        omega: f64,
        temperature: f64,
    ) -> Result<MaterialResponse, ConfigError> {
        Ok(match kind {
            MaterialKind::Drude => MaterialResponse::Drude(
                DrudeMetal::new(self.positive("sigma_s_per_m")?).map_err(model_error)?,
            ),
            MaterialKind::TwoFluid => {
                let m = if self.raw.get("sigma1_s_per_m").is_some() {
                    TwoFluidSc::new(
                        self.non_negative("sigma1_s_per_m")?,
                        self.positive("sigma2_s_per_m")?,
                    )
                } else {
                    let tc = self.positive("tc_k")?;
                    if temperature >= tc {
                        return Err(ConfigError::Constraint(format!(
                            "temperature_k = {temperature} must lie below tc_k = {tc}"
                        )));
                    }
                    TwoFluidSc::gorter_casimir(
                        resistivity_to_si(self.positive("rho_n_uohm_cm")?).map_err(model_error)?,
                        nanometre_to_m(self.positive("lambda_l_nm")?),
                        tc,
                        temperature,
                        omega,
                    )
                };
                MaterialResponse::TwoFluid(m.map_err(model_error)?)
            }
            MaterialKind::Vortex => MaterialResponse::VortexLattice(self.vortex()?),
            MaterialKind::Direct => MaterialResponse::Direct(
                DirectImpedance::new(Complex64::new(
                    self.non_negative("zs_re_ohm")?,
                    self.number("zs_im_ohm")?,
                ))
                .map_err(model_error)?,
            ),
        })
    }

    fn vortex(&mut self) -> Result<VortexLatticeSc, ConfigError> {
        let rho_n = resistivity_to_si(self.positive("rho_n_uohm_cm")?).map_err(model_error)?;
        let bc1 = gauss_to_tesla(self.positive("bc1_gauss")?);
        let bc2 = gauss_to_tesla(self.positive("bc2_gauss")?);
        if bc1 >= bc2 {
            return Err(ConfigError::Constraint(format!(
                "bc1_gauss must be below bc2_gauss (got {} >= {})",
                self.raw.get("bc1_gauss").unwrap_or(""),
                self.raw.get("bc2_gauss").unwrap_or("")
            )));
        }
        let lambda_l = nanometre_to_m(self.positive("lambda_l_nm")?);
        let bias = gauss_to_tesla(self.non_negative("bias_field_gauss")?);

        let slippage = if self.raw.get("slippage_nm").is_some() {
            if ["ic_amp", "i_amp", "width_um"]
                .iter()
                .any(|k| self.raw.get(k).is_some())
            {
                return Err(ConfigError::Constraint(
                    "give either slippage_nm or ic_amp/i_amp/width_um, not both".into(),
                ));
            }
            Slippage::Length(nanometre_to_m(self.non_negative("slippage_nm")?))
        } else {
            let ic = self.positive("ic_amp")?;
            let i = match self.raw.get("i_amp") {
                Some(_) => self.non_negative("i_amp")?,
                None => {
                    self.defaults.push("i_amp=0".into());
                    0.0
                }
            };
            let w = micron_to_m(self.positive("width_um")?);
            let spec = CriticalCurrentSpec::new(ic, i, w).map_err(|e| match e {
                CoreError::PinningBroken { current, critical } => ConfigError::Constraint(format!(
                    "CriticalCurrentSpec requires 0 <= i_amp < ic_amp \
                     (i_amp = {current}, ic_amp = {critical}): surface pinning is broken"
                )),
                other => model_error(other),
            })?;
            Slippage::CriticalCurrent(spec)
        };

        let mut m =
            VortexLatticeSc::new(rho_n, bc2, bc1, lambda_l, slippage, bias).map_err(model_error)?;
        if self.flag("clean_limit")? {
            for key in ["mu0_eps_l_gauss", "delta_f_um"] {
                if self.raw.get(key).is_some() {
                    return Err(ConfigError::Constraint(format!(
                        "`{key}` describes the dirty film and cannot be combined with clean_limit"
                    )));
                }
            }
            return m.clean_limit().map_err(model_error);
        }
        if self.raw.get("mu0_eps_l_gauss").is_some() {
            m = m
                .with_line_potential(gauss_to_tesla(self.positive("mu0_eps_l_gauss")?))
                .map_err(model_error)?;
        }
        if self.raw.get("delta_f_um").is_some() {
            m = m
                .with_flux_flow_depth(micron_to_m(self.positive("delta_f_um")?))
                .map_err(model_error)?;
        }
        Ok(m)
    }
}

fn model_error(e: CoreError) -> ConfigError {
    ConfigError::Constraint(e.to_string())
}

fn parse_sweep(spec: &str) -> Result<Sweep, ConfigError> {
    let expected = "var:min:max:spacing:count with var in {d, h, h_rel, b}, \
                    0 < min < max, spacing in {lin, log}, count >= 2";
    let bad = || ConfigError::invalid("sweep", spec, expected);
    let parts: Vec<&str> = spec.split(':').map(str::trim).collect();
    let [var, min, max, spacing, count] = parts.as_slice() else {
        return Err(bad());
    };
    let var = match *var {
        "d" => SweepVar::Distance,
        "h" => SweepVar::Thickness,
        "h_rel" => SweepVar::RelativeThickness,
        "b" => SweepVar::BiasField,
        _ => return Err(bad()),
    };
    let min: f64 = min.parse().map_err(|_| bad())?;
    let max: f64 = max.parse().map_err(|_| bad())?;
    if !(min.is_finite() && max.is_finite() && min > 0.0 && min < max) {
        return Err(bad());
    }
    let spacing = match *spacing {
        "lin" | "linear" => Spacing::Linear,
        "log" => Spacing::Log,
        _ => return Err(bad()),
    };
    let count: usize = count.parse().map_err(|_| bad())?;
    if count < 2 {
        return Err(bad());
    }
    let to_si = |x: f64| match var {
        SweepVar::Distance | SweepVar::Thickness => micron_to_m(x),
        SweepVar::BiasField => gauss_to_tesla(x),
        SweepVar::RelativeThickness => x,
    };
    Ok(Sweep {
        var,
        min: to_si(min),
        max: to_si(max),
        spacing,
        count,
    })
}

impl ScenarioConfig {
    /// One-line echo of every resolved SI input, defaults included.
    pub fn metadata(&self) -> String {
        let mut s = String::new();
        let mut put = |k: &str, v: String| {
            if !s.is_empty() {
                s.push(';');
            }
            let _ = write!(s, "{k}={v}");
        };
        put("material", self.kind.name().into());
        put("omega_rad_s", sci(self.omega));
        put("temperature_k", sci(self.temperature));
        put(
            "distance_m",
            self.distance.map(sci).unwrap_or_else(|| "swept".into()),
        );
        put(
            "thickness_m",
            match self.thickness {
                Thickness::SemiInfinite => "semi-infinite".into(),
                Thickness::Finite(h) => sci(h),
            },
        );
        put("method", self.method.name().into());
        match &self.material {
            MaterialResponse::Drude(m) => put("sigma_s_per_m", sci(m.sigma())),
            MaterialResponse::TwoFluid(m) => {
                put("sigma1_s_per_m", sci(m.sigma1()));
                put("sigma2_s_per_m", sci(m.sigma2()));
            }
            MaterialResponse::Direct(m) => {
                put("zs_re_ohm", sci(m.zs().re));
                put("zs_im_ohm", sci(m.zs().im));
            }
            MaterialResponse::VortexLattice(m) => {
                put("rho_n_ohm_m", sci(m.rho_n()));
                put("bc1_t", sci(m.bc1()));
                put("bc2_t", sci(m.bc2()));
                put("lambda_l_m", sci(m.lambda_l()));
                put("bias_field_t", sci(m.bias_field()));
                put("mu0_eps_l_t", sci(m.mu0_line_potential()));
                match m.slippage() {
                    Slippage::Length(l) => put("slippage_m", sci(l)),
                    Slippage::CriticalCurrent(c) => {
                        put("ic_a", sci(c.critical_current()));
                        put("i_a", sci(c.current()));
                        put("width_m", sci(c.width()));
                    }
                }
                if let Ok(sc) = m.scales(self.omega) {
                    put("delta_f_m", sci(sc.delta_f));
                    put("lambda_v_m", sci(sc.lambda_v));
                    put("slippage_resolved_m", sci(sc.slippage));
                }
                put(
                    "delta_f_source",
                    if m.flux_flow_depth_override().is_some() {
                        "override"
                    } else {
                        "formula"
                    }
                    .into(),
                );
            }
        }
        if let Some(sw) = &self.sweep {
            put(
                "sweep",
                format!(
                    "{}:{}:{}:{}:{}",
                    sw.var.name(),
                    sci(sw.min),
                    sci(sw.max),
                    match sw.spacing {
                        Spacing::Linear => "lin",
                        Spacing::Log => "log",
                    },
                    sw.count
                ),
            );
        }
        if !self.bias_family.is_empty() {
            put(
                "bias_family_t",
                self.bias_family
                    .iter()
                    .map(|b| sci(*b))
                    .collect::<Vec<_>>()
                    .join(","),
            );
        }
        put("g_s", format!("{}", CODATA_2018.g_s));
        put("constants", "CODATA2018".into());
        put("conventions", CONVENTIONS.into());
        put(
            "defaults",
            if self.defaults.is_empty() {
                "-".into()
            } else {
                self.defaults.join(",")
            },
        );
        put("version", env!("CARGO_PKG_VERSION").into());
        s
    }
}

/// Fixed scientific format with 9 significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.8e}")
}
