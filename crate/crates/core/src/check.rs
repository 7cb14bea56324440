//! Type checker for explicitly typed System F.
//!
//! Deliberately independent of [`crate::infer`]: it is the yardstick every
//! elaboration is measured against.

use alloc::string::String;
use core::fmt;

use crate::syntax::{alpha_equal, subst_one, Context, Entry, Term, TermKind, Type};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckError {
    UnboundVar(String),
    /// A lambda without an annotation; the input is not internal.
    Unannotated(String),
    NotArrow(Type),
    DomainMismatch {
        expected: Type,
        found: Type,
    },
    NotForall(Type),
    IllFormed(Type),
    /// A binder reuses a name already in scope.
    Shadowed(String),
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::UnboundVar(x) => write!(f, "unbound variable `{x}`"),
            CheckError::Unannotated(x) => write!(f, "lambda binding `{x}` has no annotation"),
            CheckError::NotArrow(t) => write!(f, "applicand has non-arrow type {t}"),
            CheckError::DomainMismatch { expected, found } => {
                write!(f, "argument has type {found}, expected {expected}")
            }
            CheckError::NotForall(t) => write!(f, "type applicand has non-quantified type {t}"),
            CheckError::IllFormed(t) => write!(f, "ill-formed type {t}"),
            CheckError::Shadowed(x) => write!(f, "`{x}` shadows a binding in scope"),
        }
    }
}

/// The type of internal term `term` under `ctx`.
pub fn check_internal(ctx: &Context, term: &Term) -> Result<Type, CheckError> {
    let mut ctx = ctx.clone();
    synth(&mut ctx, term)
}

fn synth(ctx: &mut Context, term: &Term) -> Result<Type, CheckError> {
    match &term.kind {
        TermKind::Var(x) => ctx.lookup(x).cloned().ok_or_else(|| CheckError::UnboundVar(x.clone())),
        TermKind::Lam(x, None, _) => Err(CheckError::Unannotated(x.clone())),
        TermKind::Lam(x, Some(ann), body) => {
            if !ctx.is_well_formed(ann) {
                return Err(CheckError::IllFormed(ann.clone()));
            }
            if ctx.lookup(x).is_some() {
                return Err(CheckError::Shadowed(x.clone()));
            }
            ctx.push(Entry::Term(x.clone(), ann.clone()));
            let body_ty = synth(ctx, body);
            ctx.pop();
            Ok(Type::arrow(ann.clone(), body_ty?))
        }
        TermKind::TLam(x, body) => {
            if ctx.declares_type_var(x) || ctx.arity(x).is_some() {
                return Err(CheckError::Shadowed(x.clone()));
            }
            ctx.push(Entry::TyVar(x.clone()));
            let body_ty = synth(ctx, body);
            ctx.pop();
            Ok(Type::forall(x.clone(), body_ty?))
        }
        TermKind::App(fun, arg) => match synth(ctx, fun)? {
            Type::Arrow(dom, cod) => {
                let arg_ty = synth(ctx, arg)?;
                if alpha_equal(&dom, &arg_ty) {
                    Ok(*cod)
                } else {
                    Err(CheckError::DomainMismatch { expected: *dom, found: arg_ty })
                }
            }
            other => Err(CheckError::NotArrow(other)),
        },
        TermKind::TApp(fun, arg) => {
            if !ctx.is_well_formed(arg) {
                return Err(CheckError::IllFormed(arg.clone()));
            }
            match synth(ctx, fun)? {
                Type::Forall(x, body) => Ok(subst_one(&body, &x, arg)),
                other => Err(CheckError::NotForall(other)),
            }
        }
    }
}
