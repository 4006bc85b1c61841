use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nakayama::error::AlgebraError;
use nakayama::run::{run_command, DimChoice, RunOptions};

#[derive(Parser)]
#[command(
    name = "nakayama",
    version,
    about = "Exact Koszul duals, flatness checks, and Nakayama automorphisms \
             for homogeneous algebras and their filtered deformations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DimArg {
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    General,
}

impl From<DimArg> for DimChoice {
    fn from(d: DimArg) -> Self {
        match d {
            DimArg::Two => DimChoice::Two,
            DimArg::Three => DimChoice::Three,
            DimArg::General => DimChoice::General,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Input algebra file (JSON)
    file: PathBuf,
    /// Report format on stdout
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ShapeArgs {
    /// Pipeline selector; inferred from the presentation shape when absent
    #[arg(long, value_enum)]
    dim: Option<DimArg>,
    /// Global dimension of the base algebra (general pipeline only)
    #[arg(long)]
    gldim: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dual presentation on the dual generators
    Dual {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Bounded flatness check for the deformation, with the quadratic
    /// overlap test when it applies
    Pbw {
        #[command(flatten)]
        common: CommonArgs,
        /// Largest filtration degree to verify
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Extra degrees of headroom in the truncation (default N+1)
        #[arg(long)]
        slack: Option<usize>,
    },
    /// Nakayama automorphism of the deformation
    Nakayama {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Calabi-Yau verdicts for the base and the deformation
    Cy {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Extract the superpotential whose derivatives recover the relations
    Potential {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Frobenius structure of the dual in the given global dimension
    Frobenius {
        #[command(flatten)]
        common: CommonArgs,
        /// Global dimension of the base algebra
        #[arg(long)]
        gldim: Option<usize>,
    },
}

impl Command {
    fn split(self) -> (&'static str, CommonArgs, RunOptions) {
        match self {
            Command::Dual { common } => ("dual", common, RunOptions::default()),
            Command::Pbw { common, max_degree, slack } => (
                "pbw",
                common,
                RunOptions { max_degree: Some(max_degree), slack, ..Default::default() },
            ),
            Command::Nakayama { common, shape } => (
                "nakayama",
                common,
                RunOptions {
                    dim: shape.dim.map(Into::into),
                    gldim: shape.gldim,
                    ..Default::default()
                },
            ),
            Command::Cy { common, shape } => (
                "cy",
                common,
                RunOptions {
                    dim: shape.dim.map(Into::into),
                    gldim: shape.gldim,
                    ..Default::default()
                },
            ),
            Command::Potential { common } => ("potential", common, RunOptions::default()),
            Command::Frobenius { common, gldim } => (
                "frobenius",
                common,
                RunOptions { gldim, ..Default::default() },
            ),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, common, opts) = cli.command.split();
    let text = match fs::read_to_string(&common.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", common.file.display());
            return ExitCode::from(AlgebraError::Parse(String::new()).exit_code() as u8);
        }
    };
    match run_command(name, &text, &opts) {
        Ok(report) => {
            match common.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
