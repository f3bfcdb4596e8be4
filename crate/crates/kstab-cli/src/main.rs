use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kstab_cli::report::{emit_report, Format};
use kstab_cli::runner::{describe_destabilizer, RunContext};
use kstab_cli::{run_case, run_suite, CliError, Source, StabilityReport};
use kstab_core::exact::fmt_rational;
use kstab_core::formulas::{self, FamilyParams};
use kstab_core::git::{self, MonomialSupport, OneParamSubgroup};
use kstab_core::invariants::{self, CoefficientVector};

#[derive(Parser)]
#[command(
    name = "kstab",
    version,
    about = "Exact checks of K-stability computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one case file.
    Run {
        case: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = RunContext::default().seed)]
        seed: u64,
    },
    /// Run the bundled suite, or every case under a directory.
    Suite {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = RunContext::default().seed)]
        seed: u64,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Closed-form invariants of the double-cover families.
    Formulas {
        #[command(subcommand)]
        command: FormulaCommand,
    },
    /// Hilbert-Mumford weights of (2,2)-forms.
    Git {
        #[command(subcommand)]
        command: GitCommand,
    },
    /// Invariants of SL2 x SL2 on (2,2)-forms.
    Inv {
        #[command(subcommand)]
        command: InvCommand,
    },
}

#[derive(Subcommand)]
enum FormulaCommand {
    /// Evaluate a named formula, e.g. `k3 --params '{"n":3,"a":"3/2","d":4,"mu":"1/2"}'`.
    Eval {
        name: String,
        #[arg(long)]
        params: String,
    },
    /// List formula names.
    List,
}

#[derive(Subcommand)]
enum GitCommand {
    /// Weight of a support, e.g. `--support 02,12,21,22 --lambda 1,2`.
    Weight {
        #[arg(long)]
        support: String,
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<i64>,
    },
    /// Search primitive subgroups with r1 up to `bound`.
    Destabilize {
        #[arg(long)]
        support: String,
        #[arg(long, default_value_t = 5)]
        bound: i64,
    },
}

#[derive(Subcommand)]
enum InvCommand {
    /// Invariant dimensions next to the series coefficients.
    Dims {
        #[arg(long, default_value_t = 8)]
        upto: usize,
    },
    /// J2, J3, J4 of a coefficient map such as `{"11": "1"}`.
    Peano {
        #[arg(long)]
        coeffs: String,
    },
    /// Seeded random invariance trials.
    CheckInvariance {
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = RunContext::default().seed)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Cases,
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn core_err(e: kstab_core::Error) -> Failure {
    usage(e)
}

fn report_exit(report: &StabilityReport, format: Format) -> Result<(), Failure> {
    print!("{}", emit_report(report, format));
    if report.has_failures() {
        Err(Failure::Cases)
    } else {
        Ok(())
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Run { case, format, seed } => {
            let row = run_case(&case, RunContext { seed }).map_err(|e: CliError| {
                if e.is_usage() {
                    Failure::Usage(e.to_string())
                } else {
                    eprintln!("{e}");
                    Failure::Cases
                }
            })?;
            report_exit(&StabilityReport::new(seed, vec![row]), format)
        }
        Command::Suite {
            format,
            jobs,
            seed,
            dir,
        } => {
            let source = dir.map_or(Source::Bundled, Source::Dir);
            let report = run_suite(&source, RunContext { seed }, jobs).map_err(usage)?;
            report_exit(&report, format)
        }
        Command::Formulas {
            command: FormulaCommand::List,
        } => {
            formulas::FORMULA_NAMES.iter().for_each(|n| println!("{n}"));
            Ok(())
        }
        Command::Formulas {
            command: FormulaCommand::Eval { name, params },
        } => {
            let p: FamilyParams = serde_json::from_str(&params).map_err(usage)?;
            p.validate().map_err(core_err)?;
            println!(
                "{}",
                fmt_rational(&formulas::eval_named(&name, &p).map_err(core_err)?)
            );
            Ok(())
        }
        Command::Git {
            command: GitCommand::Weight { support, lambda },
        } => {
            let s: MonomialSupport = support.parse().map_err(core_err)?;
            let [r0, r1] = lambda[..] else {
                return Err(Failure::Usage(
                    "--lambda takes two integers, e.g. 1,2".into(),
                ));
            };
            let l = OneParamSubgroup::new(r0, r1).map_err(core_err)?;
            println!("{}", git::hm_weight(&s, l).map_err(core_err)?);
            Ok(())
        }
        Command::Git {
            command: GitCommand::Destabilize { support, bound },
        } => {
            let s: MonomialSupport = support.parse().map_err(core_err)?;
            println!(
                "{}",
                describe_destabilizer(git::find_destabilizer(&s, bound).map_err(core_err)?)
            );
            Ok(())
        }
        Command::Inv {
            command: InvCommand::Dims { upto },
        } => {
            let series = invariants::hilbert_prefix(upto);
            println!("k  dim  series");
            for (k, s) in series.iter().enumerate() {
                println!(
                    "{k:<2} {:<4} {s}",
                    invariants::invariant_dimension(k).map_err(core_err)?
                );
            }
            Ok(())
        }
        Command::Inv {
            command: InvCommand::Peano { coeffs },
        } => {
            let c: CoefficientVector = serde_json::from_str(&coeffs).map_err(usage)?;
            println!(
                "{}",
                serde_json::to_string(&invariants::peano_invariants(&c)).map_err(usage)?
            );
            Ok(())
        }
        Command::Inv {
            command: InvCommand::CheckInvariance { trials, seed },
        } => {
            let r = invariants::invariance_trials(trials, seed);
            println!(
                "seed {}: {}/{} trials invariant",
                r.seed, r.passed, r.trials
            );
            if r.passed == r.trials {
                Ok(())
            } else {
                Err(Failure::Cases)
            }
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Cases) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
