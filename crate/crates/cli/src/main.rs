use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use spinflip_cli::config::{load_raw, RawConfig};
use spinflip_cli::output::{csv, plot_script, write_file};
use spinflip_cli::{presets, run, CliError, ConfigError};

/// Spin-flip lifetimes of trapped atoms near metallic and superconducting films.
#[derive(Debug, Parser)]
#[command(name = "spinflip", version)]
#[command(group(ArgGroup::new("source").required(true).args(["preset", "config", "list_presets"])))]
struct Args {
    /// Built-in scenario, see --list-presets.
    #[arg(long)]
    preset: Option<String>,

    /// Scenario file with `key = value` lines.
    #[arg(long)]
    config: Option<PathBuf>,

    /// CSV destination; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,

    /// Also write a gnuplot script rendering the CSV (requires --output).
    #[arg(long)]
    emit_plot: Option<PathBuf>,

    /// Run both the plane-wave integral and the closed form and report their
    /// relative difference per row.
    #[arg(long)]
    cross_check: bool,

    /// Replace one config entry, e.g. `--override distance_um=30`. Repeatable.
    #[arg(long = "override", value_name = "KEY=VALUE")]
    overrides: Vec<String>,

    /// Print the preset names and exit.
    #[arg(long)]
    list_presets: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("spinflip: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(args: &Args) -> Result<(), CliError> {
    if args.list_presets {
        for name in presets::NAMES {
            println!("{name}");
        }
        return Ok(());
    }
    let mut raw: RawConfig = match (&args.preset, &args.config) {
        (Some(name), _) => presets::preset_raw(name)?,
        (None, Some(path)) => load_raw(path)?,
        (None, None) => unreachable!("enforced by clap"),
    };
    for o in &args.overrides {
        raw.set_override(o)?;
    }
    let cfg = raw.resolve()?;
    if args.emit_plot.is_some() && args.output.is_none() {
        return Err(
            ConfigError::Constraint("--emit-plot needs --output for the CSV".into()).into(),
        );
    }

    let result = run(&cfg, args.cross_check)?;
    let text = csv(&result);
    match &args.output {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    if let (Some(script), Some(data)) = (&args.emit_plot, &args.output) {
        write_file(script, &plot_script(&result, data)?)?;
    }
    Ok(())
}
