//! Configuration, figure presets, sweeps and CSV/gnuplot output for
//! `spinflip-core`.

pub mod config;
pub mod error;
pub mod output;
pub mod presets;
pub mod run;

pub use config::{load_config, parse_config, RawConfig, ScenarioConfig};
pub use error::{CliError, ConfigError};
pub use presets::{load_preset, NAMES as PRESETS};
pub use run::{run, run_profile, run_sweep, RunOutput, SweepResult};
