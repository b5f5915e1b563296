//! CSV and gnuplot output.
//!
//! Groups of a curve family are separated by two blank lines so gnuplot can
//! address them with `index`.

use std::fmt::Write as _;
use std::path::Path;

use crate::config::{sci, SweepVar};
use crate::error::CliError;
use crate::run::{ProfileResult, RunOutput, SweepResult};

pub const SWEEP_HEADER: &str = "sweep_value,re_zs_ohm,enhancement,gamma_hz,tau_s,flags";
pub const PROFILE_HEADER: &str = "z_m,re_e,im_e,abs_e,re_b,im_b,abs_b,re_u_m,im_u_m,abs_u_m";

pub fn sweep_csv(result: &SweepResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# meta: {}", result.metadata);
    out.push_str(SWEEP_HEADER);
    if result.cross_checked {
        out.push_str(",cross_check_rel_diff");
    }
    out.push('\n');
    for (i, group) in result.groups.iter().enumerate() {
        if i > 0 {
            out.push_str("\n\n");
        }
        if let Some(b) = group.bias_field {
            let _ = writeln!(out, "# group: bias_field_t={}", sci(b));
        }
        for r in &group.rows {
            let _ = write!(
                out,
                "{},{},{},{},{},{}",
                sci(r.value),
                sci(r.re_zs),
                sci(r.enhancement),
                sci(r.gamma),
                sci(r.tau),
                r.flags
            );
            if let Some(x) = r.cross_check {
                let _ = write!(out, ",{}", sci(x));
            }
            out.push('\n');
        }
    }
    out
}

pub fn profile_csv(result: &ProfileResult) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# meta: {};zs_re_ohm={};zs_im_ohm={}",
        result.metadata,
        sci(result.zs.value.re),
        sci(result.zs.value.im)
    );
    out.push_str(PROFILE_HEADER);
    out.push('\n');
    let p = &result.profile;
    for i in 0..p.z.len() {
        let (e, b, u) = (p.e[i], p.b[i], p.u[i]);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            sci(p.z[i]),
            sci(e.re),
            sci(e.im),
            sci(e.norm()),
            sci(b.re),
            sci(b.im),
            sci(b.norm()),
            sci(u.re),
            sci(u.im),
            sci(u.norm())
        );
    }
    out
}

pub fn csv(output: &RunOutput) -> String {
    match output {
        RunOutput::Sweep(s) => sweep_csv(s),
        RunOutput::Profile(p) => profile_csv(p),
    }
}

/// A gnuplot script that renders the CSV written at `csv_path`.
pub fn plot_script(output: &RunOutput, csv_path: &Path) -> Result<String, CliError> {
    let data = csv_path.display().to_string().replace('\'', "\\'");
    let mut s = String::from("set datafile separator ','\nset datafile commentschars '#'\n");
    match output {
        RunOutput::Sweep(r) => {
            if r.row_count() == 0 {
                return Err(CliError::EmptyResult);
            }
            let var = r.variable.unwrap_or(SweepVar::Distance);
            let (column, ylabel) = match var {
                SweepVar::Thickness | SweepVar::RelativeThickness => (2, "Re Z_S (ohm)"),
                SweepVar::Distance | SweepVar::BiasField => (5, "tau (s)"),
            };
            let _ = writeln!(s, "set logscale xy");
            let _ = writeln!(s, "set xlabel '{}'", var.label());
            let _ = writeln!(s, "set ylabel '{ylabel}'");
            let _ = writeln!(s, "set key top left");
            let curves: Vec<String> = r
                .groups
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    let title = match g.bias_field {
                        Some(b) => format!("B = {:.1} G", b * 1e4),
                        None => ylabel.to_string(),
                    };
                    format!("'{data}' index {i} using 1:{column} with linespoints title '{title}'")
                })
                .collect();
            let _ = writeln!(s, "plot {}", curves.join(", \\\n     "));
        }
        RunOutput::Profile(p) => {
            if p.profile.z.is_empty() {
                return Err(CliError::EmptyResult);
            }
            let _ = writeln!(s, "set logscale y");
            let _ = writeln!(s, "set xlabel 'z (m)'");
            let _ = writeln!(s, "set ylabel 'amplitude / incident'");
            let _ = writeln!(
                s,
                "plot '{data}' using 1:4 with lines title '|E|', \\\n     \
                 '{data}' using 1:7 with lines dashtype 2 title '|B|'"
            );
        }
    }
    Ok(s)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}
