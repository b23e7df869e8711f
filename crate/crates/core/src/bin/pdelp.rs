use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pdelp::cli::{self, ExitStatus, Options, Output, TreeFormat};

#[derive(Parser)]
#[command(
    name = "pdelp",
    version,
    about = "Possibilistic defeasible logic programming interpreter"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a program file.
    Check { file: PathBuf },
    /// Answer a query: YES α, NO α or UNDECIDED.
    Query {
        file: PathBuf,
        goal: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_prune: bool,
    },
    /// Print the dialectical tree of every argument for a goal.
    Tree {
        file: PathBuf,
        goal: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        no_prune: bool,
    },
}

fn options(no_prune: bool) -> Result<Options, Output> {
    let node_cap = cli::node_cap_from_env().map_err(|e| Output {
        stdout: String::new(),
        stderr: e + "\n",
        status: ExitStatus::ParseError,
    })?;
    let mut o = Options {
        prune: !no_prune,
        ..Options::default()
    };
    if let Some(cap) = node_cap {
        o.node_cap = cap;
    }
    Ok(o)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let out = match args.command {
        Command::Check { file } => cli::cmd_check(&file),
        Command::Query {
            file,
            goal,
            json,
            no_prune,
        } => match options(no_prune) {
            Ok(o) => cli::cmd_query(&file, &goal, json, o),
            Err(e) => e,
        },
        Command::Tree {
            file,
            goal,
            format,
            no_prune,
        } => {
            let format = match format {
                Format::Json => TreeFormat::Json,
                Format::Dot => TreeFormat::Dot,
            };
            match options(no_prune) {
                Ok(o) => cli::cmd_tree(&file, &goal, format, o),
                Err(e) => e,
            }
        }
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.status.code() as u8)
}
