//! Experiment runner: TOML experiment specs, concurrent execution of the
//! queued runs, and CSV/gnuplot output.

mod output;
mod run;
mod spec;

use num_complex::Complex64;

pub use output::{history_csv, run_file_name, write_history_csv, write_outputs};
pub use run::{run_experiment, RunOutput};
pub use spec::{
    parse_spec, ExperimentSpec, Guess, Run, Spacing, DEFAULT_MAX_ITERS, DEFAULT_OVERLAP_CELLS, DEFAULT_TOL,
};

use crate::error::{Error, Result};

/// Experiment specs bundled with the crate, by name.
pub const SHIPPED_SPECS: &[(&str, &str)] = &[
    ("fig1_left", include_str!("../../specs/fig1_left.toml")),
    ("fig1_right", include_str!("../../specs/fig1_right.toml")),
    ("fig2_left", include_str!("../../specs/fig2_left.toml")),
    ("fig2_right", include_str!("../../specs/fig2_right.toml")),
    ("fig3", include_str!("../../specs/fig3.toml")),
    ("fig4_left", include_str!("../../specs/fig4_left.toml")),
    ("fig4_right", include_str!("../../specs/fig4_right.toml")),
    ("fig5_left", include_str!("../../specs/fig5_left.toml")),
    ("fig5_right", include_str!("../../specs/fig5_right.toml")),
    ("fig6", include_str!("../../specs/fig6.toml")),
    ("wave", include_str!("../../specs/wave.toml")),
    ("wave_asym", include_str!("../../specs/wave_asym.toml")),
    ("fig7", include_str!("../../specs/fig7.toml")),
    ("fig8", include_str!("../../specs/fig8.toml")),
    ("fig11", include_str!("../../specs/fig11.toml")),
];

pub fn shipped_spec(name: &str) -> Option<&'static str> {
    SHIPPED_SPECS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Parses `RE,IM` (or a bare `RE`) into a complex number.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || Error::validation("s", format!("expected RE,IM, got `{text}`"));
    let mut parts = text.split(',');
    let re = parts.next().ok_or_else(bad)?.trim().parse::<f64>().map_err(|_| bad())?;
    let im = match parts.next() {
        Some(p) => p.trim().parse::<f64>().map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() || !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_arguments() {
        assert_eq!(parse_complex("1,0.5").unwrap(), Complex64::new(1.0, 0.5));
        assert_eq!(parse_complex(" 2 , -3 ").unwrap(), Complex64::new(2.0, -3.0));
        assert_eq!(parse_complex("4").unwrap(), Complex64::new(4.0, 0.0));
        for bad in ["", "1,", "a,b", "1,2,3", "nan,0", "inf"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn every_shipped_spec_parses() {
        for (name, text) in SHIPPED_SPECS {
            let spec = parse_spec(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(&spec.name, name);
        }
        assert_eq!(parse_spec(shipped_spec("fig1_left").unwrap()).unwrap().runs().len(), 4);
    }
}
