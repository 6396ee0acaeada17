use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use delay_dd::discretization::Family;
use delay_dd::harness::{parse_complex, parse_spec, run_experiment, shipped_spec, write_outputs, SHIPPED_SPECS};
use delay_dd::symbol::{contraction_symbol, SymbolMethod, SymbolQuery};
use delay_dd::Error;

#[derive(Parser)]
#[command(name = "delay-dd", version, about = "Waveform-relaxation experiments for 1D delay PDEs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment from a spec file or a shipped spec name.
    Run {
        spec: String,
        /// Output directory (default: the spec's `output.dir`, else `results`).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the shipped experiment specs.
    ListSpecs,
    /// Evaluate the two-subdomain contraction factor at one Laplace point.
    Symbol(SymbolArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Dnwr,
    Nnwr,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Parabolic,
    Wave,
    Neutral,
}

#[derive(clap::Args)]
struct SymbolArgs {
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Width of the left subdomain.
    #[arg(long)]
    a: f64,
    /// Width of the right subdomain.
    #[arg(long)]
    b: f64,
    #[arg(long)]
    theta: f64,
    /// Laplace variable as RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long)]
    tau: Option<f64>,
    #[arg(long)]
    a1: Option<f64>,
    #[arg(long)]
    a2: Option<f64>,
    #[arg(long)]
    nu: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    d: Option<f64>,
}

fn run(spec_arg: &str, out: Option<PathBuf>) -> Result<bool, Error> {
    let path = Path::new(spec_arg);
    let (text, stem) = if path.is_file() {
        let stem = path.file_stem().and_then(|s| s.to_str()).map(str::to_owned);
        (fs::read_to_string(path)?, stem)
    } else if let Some(text) = shipped_spec(spec_arg) {
        (text.to_string(), None)
    } else {
        return Err(Error::InvalidConfig(format!(
            "`{spec_arg}` is neither a file nor a shipped spec (see `delay-dd list-specs`)"
        )));
    };
    let mut spec = parse_spec(&text)?;
    if let (Some(stem), true) = (stem, spec.name == "experiment") {
        spec.name = stem;
    }
    let dir = out.or_else(|| spec.output_dir.clone()).unwrap_or_else(|| PathBuf::from("results"));

    let outputs = run_experiment(&spec)?;
    let mut all_converged = true;
    for o in &outputs {
        let h = &o.history;
        let last = h.relative_errors().last().copied().unwrap_or(0.0);
        println!(
            "{:<10} param={:<18} iterations={:<4} converged={:<5} relative_error={:.3e}",
            o.label, o.run.parameter, h.iterations_run, h.converged, last
        );
        all_converged &= h.converged;
    }
    for p in write_outputs(&spec, &outputs, &dir)? {
        log::info!("wrote {}", p.display());
    }
    println!("results written to {}", dir.display());
    Ok(all_converged)
}

fn symbol(args: &SymbolArgs) -> Result<(), Error> {
    let s = parse_complex(&args.s)?;
    let (family, tau) = match args.family {
        FamilyArg::Parabolic => (
            Family::Parabolic {
                a1: args.a1.unwrap_or(1.0),
                a2: args.a2.unwrap_or(2.3),
                nu: args.nu.unwrap_or(1.0),
            },
            args.tau.unwrap_or(1.5),
        ),
        FamilyArg::Wave => (
            Family::Wave { c: args.c.unwrap_or(1.0), lambda: args.lambda.unwrap_or(0.5) },
            args.tau.unwrap_or(3.0),
        ),
        FamilyArg::Neutral => (
            Family::Neutral {
                mu: args.mu.unwrap_or(1.0),
                c: args.c.unwrap_or(0.1),
                r: args.r.unwrap_or(0.05),
                d: args.d.unwrap_or(0.0025),
            },
            args.tau.unwrap_or(1.0),
        ),
    };
    let method = match args.method {
        MethodArg::Dnwr => SymbolMethod::Dnwr,
        MethodArg::Nnwr => SymbolMethod::Nnwr,
    };
    let rho = contraction_symbol(&SymbolQuery { method, family, a: args.a, b: args.b, theta: args.theta, s, tau })?;
    println!("{:.16e} {:.16e} |rho| = {:.16e}", rho.re, rho.im, rho.norm());
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { spec, out } => run(&spec, out).map(|ok| if ok { 0 } else { 2 }),
        Command::ListSpecs => {
            for (name, text) in SHIPPED_SPECS {
                let title = text.lines().next().unwrap_or("").trim_start_matches('#').trim();
                println!("{name:<12} {title}");
            }
            Ok(0)
        }
        Command::Symbol(args) => symbol(&args).map(|_| 0),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::from(1)
        }
    }
}
