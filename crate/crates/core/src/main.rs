use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use secfan::cli::{run, Command, JobOptions, JobSpec};
use secfan::multiplicity::Mode;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Subdivide,
    Hull,
    Classify,
    Fan,
    Curve,
    Multiplicity,
    Census,
    Witness,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Tilde,
    Full,
}

/// Regular subdivisions, secondary cones and tropical curves of lattice polygons.
#[derive(Debug, Parser)]
#[command(name = "secfan", version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// Input JSON document.
    #[arg(long)]
    input: PathBuf,
    /// Report path; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Number of nodes δ (classify, witness).
    #[arg(long)]
    delta: Option<usize>,
    /// Maximum number of cones (census).
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Externally supplied l(V_S) (multiplicity).
    #[arg(long = "l-vs")]
    l_vs: Option<u64>,
    /// Also write an SVG diagram.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "tilde")]
    mode: ModeArg,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::Subdivide => Command::Subdivide,
        Cmd::Hull => Command::Hull,
        Cmd::Classify => Command::Classify,
        Cmd::Fan => Command::Fan,
        Cmd::Curve => Command::Curve,
        Cmd::Multiplicity => Command::Multiplicity,
        Cmd::Census => Command::Census,
        Cmd::Witness => Command::Witness,
    };
    let job = JobSpec {
        command,
        input: args.input,
        output: args.output,
        options: JobOptions {
            delta: args.delta,
            budget: args.budget,
            seed: args.seed,
            l_vs: args.l_vs,
            svg: args.svg,
            mode: match args.mode {
                ModeArg::Tilde => Mode::Tilde,
                ModeArg::Full => Mode::Full,
            },
        },
    };
    match run(&job) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("secfan: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
