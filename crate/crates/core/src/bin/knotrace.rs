use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use knotrace::app::{self, Command, RunOptions};
use knotrace::cache::Cache;

/// Knot Floer concordance invariants and knot-trace obstructions.
#[derive(Parser)]
#[command(name = "knotrace", version)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Framed {
    /// A complex file or a library expression such as `lib:T23#-fig8`.
    input: String,
    #[arg(short = 'n', long = "framing", allow_hyphen_values = true)]
    framing: i64,
}

#[derive(Subcommand)]
enum Verb {
    /// tau, nu, epsilon and HFK ranks.
    Invariants { input: String },
    /// HF-hat ranks of n-surgery from the truncated mapping cone.
    Surgery {
        #[command(flatten)]
        f: Framed,
        /// Override the truncation bound b (must be at least the default).
        #[arg(long, allow_hyphen_values = true)]
        truncation: Option<i64>,
    },
    /// (n, s_max, s'_max) of the n-trace and what it implies.
    Profile {
        #[command(flatten)]
        f: Framed,
    },
    /// Decide whether two n-traces can be diffeomorphic.
    Compare {
        first: String,
        second: String,
        #[arg(short = 'n', long = "framing", allow_hyphen_values = true)]
        framing: i64,
    },
    /// Exotic pair test for the Mazur and Yasui satellites.
    Pq {
        #[command(flatten)]
        f: Framed,
    },
    /// Shake-genus and Bennequin-type bounds.
    Bounds {
        #[command(flatten)]
        f: Framed,
        #[arg(long, allow_hyphen_values = true, requires = "rot")]
        tb: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "tb")]
        rot: Option<i64>,
        #[arg(long)]
        gsh: Option<i64>,
    },
    /// Built-in complexes.
    Library {
        #[command(subcommand)]
        action: LibraryAction,
    },
}

#[derive(Subcommand)]
enum LibraryAction {
    List,
    Show {
        /// Entry name or expression, e.g. `-T23#fig8`.
        #[arg(allow_hyphen_values = true)]
        name: String,
    },
}

fn command(verb: Verb) -> Command {
    match verb {
        Verb::Invariants { input } => Command::Invariants { input },
        Verb::Surgery { f, truncation } => Command::Surgery {
            input: f.input,
            framing: f.framing,
            truncation,
        },
        Verb::Profile { f } => Command::Profile {
            input: f.input,
            framing: f.framing,
        },
        Verb::Compare {
            first,
            second,
            framing,
        } => Command::Compare {
            first,
            second,
            framing,
        },
        Verb::Pq { f } => Command::Pq {
            input: f.input,
            framing: f.framing,
        },
        Verb::Bounds { f, tb, rot, gsh } => Command::Bounds {
            input: f.input,
            framing: f.framing,
            tb,
            rot,
            g_sh: gsh,
        },
        Verb::Library { action } => match action {
            LibraryAction::List => Command::LibraryList,
            LibraryAction::Show { name } => Command::LibraryShow { name },
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let options = RunOptions {
        cache: if cli.no_cache { None } else { Cache::from_env() },
    };
    match app::run(&command(cli.verb), &options) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_consistency_failure() { 3 } else { 2 })
        }
    }
}
