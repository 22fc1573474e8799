//! Argument parsing and dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use hermkern_core::{Family, KernelKind, SpaceLabel};

use crate::commands::{cmd_catalog, cmd_expand, cmd_topology, cmd_verify, UsageError};
use crate::report::{Format, Report};
use crate::suites::{Ctx, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hermkern",
    version,
    about = "Kernel expansions and numeric checks for disc bundles over Hermitian symmetric spaces"
)]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for every random sweep.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Override the tolerance of every numeric check.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record wall time per check (makes reports non-reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List spaces with (r, a, b, n, p).
    Catalog {
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, default_value_t = 8)]
        max_l: u32,
    },
    /// Exact Laurent profile of a Szegő or Bergman kernel.
    Expand {
        /// Label such as I(2,2), III(3), EVII.
        space: SpaceLabel,
        /// szego or bergman.
        kind: KernelKind,
        mu: u32,
    },
    /// Run a numeric verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Grassmannian lens-space obstruction sweep.
    Topology {
        #[arg(long, default_value_t = 8)]
        max_l: u32,
        /// Order of the cyclic group in the lens tables.
        #[arg(long, default_value_t = 2)]
        mu: u64,
        /// Print the cohomology of S^{2N+1}/Z_M.
        #[arg(long, num_args = 2, value_names = ["N", "M"])]
        lens: Option<Vec<u64>>,
    },
}

impl Cli {
    pub fn execute(&self, command_echo: &str) -> Result<Report, UsageError> {
        let seed = self.seed;
        match &self.command {
            Command::Catalog { family, max_l } => {
                Ok(cmd_catalog(command_echo, seed, *family, *max_l))
            }
            Command::Expand { space, kind, mu } => {
                cmd_expand(command_echo, seed, *space, *kind, *mu)
            }
            Command::Verify { suite } => {
                if let Some(t) = self.tol {
                    if t.is_nan() || t < 0.0 {
                        return Err(UsageError(format!("--tol must be non-negative, got {t}")));
                    }
                }
                let ctx = Ctx {
                    seed,
                    tol: self.tol,
                    timings: self.timings,
                };
                Ok(cmd_verify(command_echo, *suite, &ctx))
            }
            Command::Topology { max_l, mu, lens } => {
                let lens = match lens.as_deref() {
                    None => None,
                    Some([n, m]) => Some((
                        u32::try_from(*n)
                            .map_err(|_| UsageError(format!("lens n too large: {n}")))?,
                        *m,
                    )),
                    Some(_) => return Err(UsageError("--lens takes N M".into())),
                };
                cmd_topology(command_echo, seed, *max_l, *mu, lens)
            }
        }
    }
}

/// Parses `args` (program name first), runs, writes the report and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy())
        .collect::<Vec<_>>()
        .join(" ");
    let report = match cli.execute(&echo) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let rendered = match report.render(cli.format) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, rendered.as_bytes())
            .map_err(|e| format!("{}: {e}", path.display())),
        None => stdout
            .write_all(rendered.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}
