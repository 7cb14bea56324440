use std::io::{self, IsTerminal};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spinel::report::Style;
use spinel::{exit, repl, run_source, RunFlags};

/// Spine-local type inference for System F.
#[derive(Parser)]
#[command(name = "spinel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every goal in a program file.
    Run {
        file: PathBuf,
        /// Print elaborations of successful goals.
        #[arg(long)]
        elab: bool,
        /// One JSON object per goal instead of text.
        #[arg(long)]
        json: bool,
        /// Print the inference rules applied.
        #[arg(long)]
        trace: bool,
        /// Replay each application goal against the declarative rules.
        #[arg(long)]
        spec_verify: bool,
    },
    /// Start an interactive session.
    Repl,
}

fn color_enabled() -> bool {
    match std::env::var("SPINEL_COLOR").as_deref() {
        Ok("always") => true,
        Ok("never") => false,
        _ => io::stdout().is_terminal(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let color = color_enabled();
    let status = match cli.command {
        Command::Run { file, elab, json, trace, spec_verify } => {
            let src = match std::fs::read_to_string(&file) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("spinel: cannot read {}: {e}", file.display());
                    return ExitCode::from(exit::PARSE_ERROR as u8);
                }
            };
            let flags = RunFlags { elab, json, trace, spec_verify, color };
            run_source(&src, flags, &mut io::stdout().lock())
        }
        Command::Repl => {
            let style = Style { elab: true, trace: false, color };
            let prompt = io::stdin().is_terminal();
            repl::run(&mut io::stdin().lock(), &mut io::stdout().lock(), style, prompt).map(|()| exit::OK)
        }
    };
    match status {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("spinel: {e}");
            ExitCode::FAILURE
        }
    }
}
