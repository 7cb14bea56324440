//! File formats, reporting and the command-line driver for `spinel`.
//!
//! The engine itself lives in `spinel_core`; this crate parses `.sf`
//! programs, runs their goals and renders the results.

pub mod parse;
pub mod repl;
pub mod report;
pub mod session;

use std::io::Write;

pub use session::{GoalReport, Options, Session};

/// Exit statuses of `spinel run`.
pub mod exit {
    pub const OK: i32 = 0;
    pub const GOAL_FAILED: i32 = 1;
    pub const PARSE_ERROR: i32 = 2;
    pub const INTERNAL: i32 = 3;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunFlags {
    pub elab: bool,
    pub json: bool,
    pub trace: bool,
    pub spec_verify: bool,
    pub color: bool,
}

/// Run every goal of `src`, writing the report to `out`. Returns the exit
/// status: the worst over all goals.
pub fn run_source(src: &str, flags: RunFlags, out: &mut dyn Write) -> std::io::Result<i32> {
    let style = report::Style { elab: flags.elab, trace: flags.trace, color: flags.color && !flags.json };
    let mut session = Session::new(Options { spec_verify: flags.spec_verify });
    let reports = match session.feed(src) {
        Ok(r) => r,
        Err(e) => {
            if flags.json {
                writeln!(out, "{}", report::json_parse_error(&e))?;
            } else {
                write!(out, "{}", report::human_parse_error(&e, style))?;
            }
            return Ok(exit::PARSE_ERROR);
        }
    };
    let mut status = exit::OK;
    for r in &reports {
        if flags.json {
            writeln!(out, "{}", report::json(r))?;
        } else {
            write!(out, "{}", report::human(r, style))?;
        }
        status = status.max(r.exit_code());
    }
    Ok(status)
}
