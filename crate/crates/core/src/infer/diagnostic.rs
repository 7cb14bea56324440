use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::syntax::{Span, Type};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagnosticKind {
    UnannotatedLambda,
    UnsolvedMetaVariables,
    ApplicandNotArrow,
    ApplicandNotForall,
    TypeMismatch,
    SolutionConflict,
    ExplicitArgConflict,
    UnboundName,
    /// The engine broke one of its own invariants. Never a user error.
    InternalError,
}

impl DiagnosticKind {
    pub fn name(self) -> &'static str {
        match self {
            DiagnosticKind::UnannotatedLambda => "UnannotatedLambda",
            DiagnosticKind::UnsolvedMetaVariables => "UnsolvedMetaVariables",
            DiagnosticKind::ApplicandNotArrow => "ApplicandNotArrow",
            DiagnosticKind::ApplicandNotForall => "ApplicandNotForall",
            DiagnosticKind::TypeMismatch => "TypeMismatch",
            DiagnosticKind::SolutionConflict => "SolutionConflict",
            DiagnosticKind::ExplicitArgConflict => "ExplicitArgConflict",
            DiagnosticKind::UnboundName => "UnboundName",
            DiagnosticKind::InternalError => "InternalError",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntheticMatch {
    pub partial: Type,
    pub against: Type,
    pub arg_index: usize,
}

/// A type error, carrying enough of the spine's state to explain where an
/// expected type came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub span: Span,
    /// The variable or type the error is about, when there is one.
    pub name: Option<String>,
    /// Expected type; may mention meta-variables.
    pub expected: Option<Type>,
    /// `expected` with the spine's solutions applied, when that differs.
    pub expected_solved: Option<Type>,
    pub synthesized: Option<Type>,
    pub contextual_match: Option<(Type, Type)>,
    pub synthetic_match: Option<SyntheticMatch>,
    pub detail: Option<String>,
}

impl Diagnostic {
    pub fn new(kind: DiagnosticKind, span: Span) -> Diagnostic {
        Diagnostic {
            kind,
            span,
            name: None,
            expected: None,
            expected_solved: None,
            synthesized: None,
            contextual_match: None,
            synthetic_match: None,
            detail: None,
        }
    }

    pub fn internal(span: Span, detail: impl Into<String>) -> Diagnostic {
        Diagnostic::new(DiagnosticKind::InternalError, span).with_detail(detail)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Diagnostic {
        self.name = Some(name.into());
        self
    }

    pub fn with_expected(mut self, ty: Type) -> Diagnostic {
        self.expected = Some(ty);
        self
    }

    pub fn with_synthesized(mut self, ty: Type) -> Diagnostic {
        self.synthesized = Some(ty);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Diagnostic {
        self.detail = Some(detail.into());
        self
    }

    pub fn is_internal(&self) -> bool {
        self.kind == DiagnosticKind::InternalError
    }

    pub fn message(&self) -> String {
        let name = self.name.as_deref().unwrap_or("_");
        match self.kind {
            DiagnosticKind::UnannotatedLambda => {
                format!(
                    "bound variable {name} needs an annotation: its lambda is not being checked against a known type"
                )
            }
            DiagnosticKind::UnsolvedMetaVariables => {
                String::from("this maximal application has unsolved meta-variables")
            }
            DiagnosticKind::ApplicandNotArrow => {
                String::from("the type of a term application's applicand must reveal an arrow")
            }
            DiagnosticKind::ApplicandNotForall => {
                String::from("the type of a type application's applicand must reveal a quantifier")
            }
            DiagnosticKind::TypeMismatch => String::from("type mismatch"),
            DiagnosticKind::SolutionConflict => {
                String::from("a solved type argument conflicts with the contextual type of the spine")
            }
            DiagnosticKind::ExplicitArgConflict => {
                String::from("explicit type argument differs from the one inferred from the contextual type")
            }
            DiagnosticKind::UnboundName => format!("`{name}` is not in scope"),
            DiagnosticKind::InternalError => String::from("internal invariant violated"),
        }
    }

    /// Labelled lines, in display order.
    pub fn lines(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        let synth_label = match self.kind {
            DiagnosticKind::ApplicandNotArrow | DiagnosticKind::ApplicandNotForall => "applicand type",
            DiagnosticKind::ExplicitArgConflict => "explicit argument",
            _ => "synthesized type",
        };
        if let Some(s) = &self.synthesized {
            out.push((synth_label, format!("{s}")));
        }
        if let Some(e) = &self.expected {
            let label =
                if self.kind == DiagnosticKind::ExplicitArgConflict { "inferred argument" } else { "expected type" };
            match &self.expected_solved {
                Some(solved) => out.push((label, format!("{e} := {solved}"))),
                None => out.push((label, format!("{e}"))),
            }
        }
        if let Some((p, a)) = &self.contextual_match {
            out.push(("contextual match", format!("{p} := {a}")));
        }
        if let Some(m) = &self.synthetic_match {
            out.push(("synthetic match", format!("{} := {} (argument {})", m.partial, m.against, m.arg_index)));
        }
        out.push(("error", self.message()));
        if let Some(d) = &self.detail {
            out.push(("note", d.clone()));
        }
        out
    }
}

/// Labels right-aligned on the colon, one line each.
impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = self.lines();
        let width = lines.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        for (i, (label, text)) in lines.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{label:>width$}: {text}")?;
        }
        Ok(())
    }
}
