use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use nebcheck::{parse_instance, run_scenario, scenarios, Error, Field, FiniteGroup, Instance, Params};

#[derive(Parser)]
#[command(name = "nebcheck", version, about = "Exact checks of coactions, neb matrices and Hopf modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario (or `all`) and print its report.
    Verify {
        #[arg(long)]
        scenario: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// `q` or `f:<p>`.
        #[arg(long, default_value = "q")]
        field: String,
        /// A cyclic group order, or a group instance file.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Record wall-clock time in the summary (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// List the registered scenarios.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn read_instance(path: &PathBuf) -> Result<Instance, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))
}

fn group_arg(arg: &str) -> Result<FiniteGroup, Error> {
    if let Ok(n) = arg.parse::<usize>() {
        return FiniteGroup::cyclic(n);
    }
    match read_instance(&PathBuf::from(arg))? {
        Instance::Group { group, .. } => Ok(group),
        Instance::Table(_) => Err(Error::Usage(format!("{arg}: expected a group file, found a table"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for s in scenarios() {
                println!("{:<22} {}", s.name, s.summary);
            }
            ExitCode::SUCCESS
        }
        Command::Verify { scenario, degree, field, group, instance, report, seed, timing } => {
            let setup = || -> Result<Params, Error> {
                Ok(Params {
                    degree,
                    field: Field::parse(&field)?,
                    groups: group.as_deref().map(group_arg).transpose()?.map(|g| vec![g]),
                    instance: instance.as_ref().map(read_instance).transpose()?,
                    seed,
                })
            };
            let params = match setup() {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let start = Instant::now();
            let mut result = match run_scenario(&scenario, &params) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            if timing {
                result.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            match report {
                Format::Text => print!("{}", result.to_text()),
                Format::Json => println!("{}", result.to_json()),
            }
            if result.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
