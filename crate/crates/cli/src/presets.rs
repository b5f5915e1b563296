//! Built-in scenario files for the reference niobium and gold figures.

use crate::config::{RawConfig, ScenarioConfig};
use crate::error::ConfigError;

pub const NAMES: &[&str] = &[
    "fig4_niobium",
    "fig4_semi_infinite",
    "fig4_clean",
    "fig4_gold",
    "fig3b",
    "fig3a_profile",
];

const NIOBIUM_FILM: &str = "\
material = vortex
frequency_mhz = 2
temperature_k = 4.2
rho_n_uohm_cm = 15
bc1_gauss = 80
bc2_gauss = 45000
lambda_l_nm = 45
bias_field_gauss = 100
ic_amp = 1.76
i_amp = 1.4
width_um = 40
";

/// Config text of a preset, or `None` for an unknown name.
pub fn preset_text(name: &str) -> Option<String> {
    let body = match name {
        "fig4_niobium" => {
            "\
# Fig. 4 solid line: 1 um dirty Nb film
mu0_eps_l_gauss = 70
thickness_um = 1
method = impedance
sweep = d:10:100:log:50
"
        }
        "fig4_semi_infinite" => {
            "\
# Fig. 4 long dashes: same film, infinite thickness
mu0_eps_l_gauss = 70
thickness_um = semi-infinite
method = impedance
sweep = d:10:100:log:50
"
        }
        "fig4_clean" => {
            "\
# Fig. 4 short dashes: clean-limit film
clean_limit = true
thickness_um = 1
method = impedance
sweep = d:10:100:log:50
"
        }
        "fig4_gold" => {
            return Some(
                "\
# Fig. 4 dot-dashed line: gold, near-field metal formula
material = drude
frequency_mhz = 2
temperature_k = 4.2
sigma_s_per_m = 6.7e9
method = asymptotic
sweep = d:10:100:log:50
"
                .to_string(),
            )
        }
        "fig3b" => {
            "\
# Fig. 3(b): Re(Zs) against h/delta_f for several bias fields
mu0_eps_l_gauss = 70
distance_um = 20
sweep = h_rel:0.01:3:log:60
bias_family_gauss = 50,100,200
"
        }
        "fig3a_profile" => {
            "\
# Fig. 3(a): internal fields of the 1 um film
mu0_eps_l_gauss = 70
thickness_um = 1
mode = profile
profile_points = 200
"
        }
        _ => return None,
    };
    Some(format!("{NIOBIUM_FILM}{body}"))
}

pub fn preset_raw(name: &str) -> Result<RawConfig, ConfigError> {
    let text = preset_text(name).ok_or_else(|| ConfigError::UnknownPreset(name.to_string()))?;
    RawConfig::parse(&text)
}

pub fn load_preset(name: &str) -> Result<ScenarioConfig, ConfigError> {
    preset_raw(name)?.resolve()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_resolves() {
        for name in NAMES {
            load_preset(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(matches!(
            load_preset("fig5"),
            Err(ConfigError::UnknownPreset(_))
        ));
    }
}
