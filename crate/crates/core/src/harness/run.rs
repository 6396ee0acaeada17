use rayon::prelude::*;

use super::spec::{ExperimentSpec, Run};
use crate::error::Result;
use crate::schwarz::{classical_schwarz_run, optimized_schwarz_run, SchwarzConfig};
use crate::waveform::{dnwr_multi_run, dnwr_run, nnwr_run, ConvergenceHistory, Method, WrConfig};

/// A finished run with the label it is reported under.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub label: String,
    pub run: Run,
    pub history: ConvergenceHistory,
}

/// Executes every queued run. Runs are independent and execute concurrently;
/// the output keeps queue order.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<RunOutput>> {
    spec.runs()
        .into_par_iter()
        .map(|run| {
            let label = spec.label(&run);
            log::info!("{}: starting {label} with parameter {}", spec.name, run.parameter);
            execute(spec, &run)
                .map(|history| RunOutput { label: label.clone(), run, history })
                .map_err(|e| e.in_context(format!("{} run `{label}` (parameter {})", spec.name, run.parameter)))
        })
        .collect()
}

fn execute(spec: &ExperimentSpec, run: &Run) -> Result<ConvergenceHistory> {
    let problem = spec.problem()?;
    let grid = spec.grid_for(run.subdomains)?;
    let partition = spec.partition_for(&grid, run.subdomains)?;
    let guess = spec.guess.trace(grid.nt(), grid.dt());
    match run.method {
        Method::Dnwr | Method::Nnwr => {
            let cfg = WrConfig::new(run.parameter, spec.tol, spec.max_iters, spec.norm)?;
            let traces = vec![guess; partition.interfaces()];
            match (run.method, run.subdomains) {
                (Method::Dnwr, 2) => dnwr_run(&problem, &partition, &traces[0], &cfg),
                (Method::Dnwr, _) => dnwr_multi_run(&problem, &partition, &traces, &cfg),
                _ => nnwr_run(&problem, &partition, &traces, &cfg),
            }
        }
        Method::ClassicalSchwarz | Method::OptimizedSchwarz => {
            let split = partition.boundaries()[1];
            let guesses = [guess.clone(), guess];
            if run.method == Method::ClassicalSchwarz {
                // p is unused by the classical variant
                let cfg = SchwarzConfig::new(spec.overlap_cells, 1.0, spec.tol, spec.max_iters, spec.norm)?;
                classical_schwarz_run(&problem, &grid, split, &cfg, &guesses)
            } else {
                let cfg = SchwarzConfig::new(spec.overlap_cells, run.parameter, spec.tol, spec.max_iters, spec.norm)?;
                optimized_schwarz_run(&problem, &grid, split, &cfg, &guesses)
            }
        }
    }
}
