//! Running goals against a growing context.

use spinel_core::infer::{infer_traced, Diagnostic, Mode};
use spinel_core::oracle::{verify_spec, SpecTriple};
use spinel_core::{Context, ContextError, Span, Term, Type};

use crate::parse::{error_at, line_col, parse_in, Decl, Goal, GoalKind, ParseError, Scope};

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub spec_verify: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecCheck {
    pub accepted: bool,
    pub trace: Vec<&'static str>,
}

/// What became of one goal.
#[derive(Clone, Debug)]
pub struct GoalReport {
    pub kind: GoalKind,
    /// The goal's source text, without the closing `.`.
    pub text: String,
    pub line: usize,
    pub col: usize,
    pub outcome: Result<Success, Diagnostic>,
    /// Diagnostic spans resolved to line and column.
    pub diagnostic_at: Option<(usize, usize)>,
    pub trace: Vec<&'static str>,
    /// Present when spec verification ran on this goal.
    pub spec: Option<SpecCheck>,
}

#[derive(Clone, Debug)]
pub struct Success {
    pub ty: Type,
    pub elaboration: Term,
}

impl GoalReport {
    pub fn is_ok(&self) -> bool {
        self.outcome.is_ok() && self.spec.as_ref().is_none_or(|s| s.accepted)
    }

    /// 0, 1 or 3, as for the whole run.
    pub fn exit_code(&self) -> i32 {
        match &self.outcome {
            Err(d) if d.is_internal() => 3,
            Err(_) => 1,
            // The engine produced something the rules do not derive.
            Ok(_) if self.spec.as_ref().is_some_and(|s| !s.accepted) => 3,
            Ok(_) => 0,
        }
    }
}

/// Declarations seen so far, both as parser scope and typing context.
#[derive(Clone, Debug, Default)]
pub struct Session {
    scope: Scope,
    ctx: Context,
    options: Options,
}

impl Session {
    pub fn new(options: Options) -> Session {
        Session { scope: Scope::default(), ctx: Context::new(), options }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    /// Parse `src`, extend the context with its declarations and run its
    /// goals in order. Nothing is kept if `src` fails to parse or declares
    /// an ill-formed type.
    pub fn feed(&mut self, src: &str) -> Result<Vec<GoalReport>, ParseError> {
        let mut scope = self.scope.clone();
        let program = parse_in(src, &mut scope)?;
        let mut ctx = self.ctx.clone();
        let mut staged = Vec::new();
        for decl in program.decls {
            match decl {
                Decl::Con { name, arity, span } => {
                    ctx.declare_con(name, arity).map_err(|e| context_error(src, span, e))?;
                }
                Decl::Assume { name, ty, span } => {
                    ctx.assume(name, ty).map_err(|e| context_error(src, span, e))?;
                }
                Decl::Goal(goal) => {
                    if let Some(t) = &goal.expected {
                        if !ctx.is_well_formed(t) {
                            return Err(error_at(
                                src,
                                goal.span,
                                format!("expected type `{t}` is not well-formed here"),
                            ));
                        }
                    }
                    staged.push((ctx.clone(), goal));
                }
            }
        }
        self.scope = scope;
        self.ctx = ctx;
        Ok(staged.into_iter().map(|(ctx, goal)| run_goal(&ctx, src, &goal, self.options)).collect())
    }
}

fn context_error(src: &str, span: Span, e: ContextError) -> ParseError {
    error_at(src, span, e.to_string())
}

fn run_goal(ctx: &Context, src: &str, goal: &Goal, options: Options) -> GoalReport {
    let mode = match &goal.expected {
        Some(t) => Mode::Check(t.clone()),
        None => Mode::Synthesize,
    };
    let (result, rules) = infer_traced(ctx, &mode, &goal.term);
    let mut spec = None;
    if let Ok(out) = &result {
        if let (true, Some(triple)) = (options.spec_verify, &out.spine) {
            let claimed = SpecTriple {
                ty: triple.ty.clone(),
                partial: triple.partial.clone(),
                solution: triple.solution.clone(),
            };
            let verdict = verify_spec(ctx, goal.expected.as_ref(), &goal.term, &claimed);
            spec = Some(SpecCheck { accepted: verdict.accepted, trace: verdict.trace });
        }
    }
    let text = src[goal.span.start..goal.span.end].trim_end_matches('.').trim_end().to_string();
    let (line, col) = line_col(src, goal.span.start);
    let diagnostic_at = result.as_ref().err().map(|d| line_col(src, d.span.start));
    GoalReport {
        kind: goal.kind.clone(),
        text,
        line,
        col,
        outcome: result.map(|out| Success { ty: out.ty, elaboration: out.elaboration }),
        diagnostic_at,
        trace: rules.into_iter().map(|r| r.name()).collect(),
        spec,
    }
}
