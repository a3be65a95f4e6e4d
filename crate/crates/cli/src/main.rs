use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use oplax_cli::app::{check_path, env_bound, run_demo, write};
use oplax_cli::demo::{DemoName, DemoParams};
use oplax_cli::{CliError, EXIT_INPUT};

/// Exhaustive checker for oplax bimonoids, Hopf and Frobenius structures
/// in Span|V.
#[derive(Parser)]
#[command(name = "ohl", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a structure file. Exit 0 if every axiom holds, 1 if one
    /// fails, 2 if the input is unusable.
    Check {
        file: PathBuf,
        /// Largest set the checker may build (default 65536, or OHL_MAX_APEX).
        #[arg(long)]
        bounds: Option<usize>,
        /// Write the machine-readable report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print nothing but errors.
        #[arg(long)]
        quiet: bool,
    },
    /// Generate an example structure, check it, and write the structure
    /// and its report.
    Demo {
        name: DemoName,
        #[arg(long)]
        size: Option<usize>,
        /// z1..z4 or klein; for groupoid also codiscrete and s3.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        quiet: bool,
    },
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::Check { file, bounds, report, quiet } => {
            let r = check_path(&file, env_bound(bounds)?)?;
            if let Some(path) = report {
                write(&path, &r.to_json())?;
            }
            if !quiet {
                print!("{r}");
            }
            Ok(r.exit_code())
        }
        Cmd::Demo { name, size, group, p, max_n, out, quiet } => {
            let params = DemoParams { size, group, p, max_n };
            let o = run_demo(name, &params, &out, env_bound(None)?)?;
            if !quiet {
                print!("{}", o.report);
                println!("wrote {} and {}", o.structure.display(), o.report_path.display());
            }
            Ok(o.report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ohl: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
