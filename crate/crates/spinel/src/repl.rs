//! An interactive session over one growing context.
//!
//! ```text
//! :type Nat/0
//! :assume z : Nat
//! :synth z
//! :check id [Nat -> Nat] (\x. x) : Nat -> Nat
//! :quit
//! ```

use std::io::{BufRead, Write};

use crate::report::{self, Style};
use crate::session::{Options, Session};

const HELP: &str = "commands: :type Name/N, :assume x : T, :check t : T, :synth t, :quit";

/// Read commands from `input` until `:quit` or end of input. A prompt is
/// written before each command when `prompt` is set.
pub fn run(input: &mut dyn BufRead, out: &mut dyn Write, style: Style, prompt: bool) -> std::io::Result<()> {
    let mut session = Session::new(Options::default());
    let mut line = String::new();
    loop {
        if prompt {
            write!(out, "spinel> ")?;
            out.flush()?;
        }
        line.clear();
        if input.read_line(&mut line)? == 0 {
            return Ok(());
        }
        let cmd = line.trim();
        if cmd.is_empty() {
            continue;
        }
        let (word, rest) = cmd.split_once(char::is_whitespace).unwrap_or((cmd, ""));
        let keyword = match word {
            ":quit" | ":q" => return Ok(()),
            ":help" => {
                writeln!(out, "{HELP}")?;
                continue;
            }
            ":type" => "type",
            ":assume" => "assume",
            ":check" => "check",
            ":synth" => "synth",
            _ => {
                writeln!(out, "unknown command `{word}`; {HELP}")?;
                continue;
            }
        };
        let stmt = format!("{keyword} {}.", rest.trim().trim_end_matches('.'));
        match session.feed(&stmt) {
            Err(e) => write!(out, "{}", report::human_parse_error(&e, style))?,
            Ok(reports) => {
                for r in reports {
                    match &r.outcome {
                        Ok(s) => {
                            writeln!(out, "{}", s.ty)?;
                            if style.elab {
                                writeln!(out, "  elaboration: {}", s.elaboration)?;
                            }
                        }
                        Err(_) => write!(out, "{}", report::human(&r, style))?,
                    }
                }
            }
        }
    }
}
