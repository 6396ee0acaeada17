use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::run::RunOutput;
use super::spec::ExperimentSpec;
use crate::error::{Error, Result};

/// CSV text for a set of runs: header `method,theta,iteration,error_norm`,
/// rows ordered by method label, then parameter, then iteration. Floats carry
/// 17 significant digits.
pub fn history_csv(outputs: &[RunOutput]) -> String {
    let mut order: Vec<&RunOutput> = outputs.iter().collect();
    order.sort_by(|a, b| a.label.cmp(&b.label).then(a.run.parameter.total_cmp(&b.run.parameter)));
    let mut out = String::from("method,theta,iteration,error_norm\n");
    for o in order {
        for (k, e) in o.history.errors.iter().enumerate() {
            let _ = writeln!(out, "{},{:.16e},{},{:.16e}", o.label, o.run.parameter, k, e);
        }
    }
    out
}

pub fn write_history_csv(outputs: &[RunOutput], path: &Path) -> Result<()> {
    if outputs.is_empty() {
        return Err(Error::InvalidConfig("no histories to write".into()));
    }
    fs::write(path, history_csv(outputs))?;
    Ok(())
}

pub fn run_file_name(spec_name: &str, output: &RunOutput) -> String {
    format!("{spec_name}__{}__theta{}.csv", output.label, output.run.parameter)
}

fn gnuplot_script(spec: &ExperimentSpec, files: &[(String, String)]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set logscale y");
    let _ = writeln!(s, "set format y '%.0e'");
    let _ = writeln!(s, "set xlabel 'iteration'");
    let _ = writeln!(s, "set ylabel 'interface error'");
    let _ = writeln!(s, "set key outside");
    let _ = writeln!(s, "set title '{}'", spec.name);
    let plots: Vec<String> = files
        .iter()
        .map(|(file, title)| format!("'{file}' every ::1 using 3:4 with linespoints title '{title}'"))
        .collect();
    let _ = writeln!(s, "plot {}", plots.join(", \\\n     "));
    s
}

/// Writes the combined CSV `<name>.csv`, one CSV per run and, if the spec asks
/// for it, a gnuplot script `<name>.gp`. Returns the files written.
pub fn write_outputs(spec: &ExperimentSpec, outputs: &[RunOutput], dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let combined = dir.join(format!("{}.csv", spec.name));
    write_history_csv(outputs, &combined)?;
    written.push(combined);
    let mut files = Vec::new();
    for o in outputs {
        let name = run_file_name(&spec.name, o);
        let path = dir.join(&name);
        write_history_csv(std::slice::from_ref(o), &path)?;
        files.push((name, format!("{} {}", o.label, o.run.parameter)));
        written.push(path);
    }
    if spec.gnuplot {
        let path = dir.join(format!("{}.gp", spec.name));
        fs::write(&path, gnuplot_script(spec, &files))?;
        written.push(path);
    }
    Ok(written)
}
