//! Sufficient conditions for an erasure to synthesize back to its source.
//!
//! The conditions walk an internal term and one of its erasures side by
//! side. Where a condition asks what a sub-term's spine would synthesize,
//! the declarative spine judgment is run with every guess declined, so only
//! synthetic inference is in play.

use crate::syntax::{alpha_equal, Context, Entry, Term, TermKind, Type};

use super::spine_decline_only;

/// Whether erasure `t` of internal term `e` meets the four annotation
/// guidelines: annotated lambdas stay annotated, maximal applications
/// leave no meta-variables behind, term applicands reveal an arrow under
/// their quantifiers, and type applicands reveal a quantifier.
pub fn check_weak_completeness_conditions(ctx: &Context, e: &Term, t: &Term) -> bool {
    let mut ctx = ctx.clone();
    walk(&mut ctx, e, t, true)
}

fn walk(ctx: &mut Context, e: &Term, t: &Term, maximal: bool) -> bool {
    match (&e.kind, &t.kind) {
        (TermKind::Var(a), TermKind::Var(b)) => a == b,
        (TermKind::Lam(x, ann, eb), TermKind::Lam(y, tann, tb)) => {
            let (Some(s), Some(s2)) = (ann, tann) else { return false };
            if x != y || !alpha_equal(s, s2) {
                return false;
            }
            ctx.push(Entry::Term(x.clone(), s.clone()));
            let ok = walk(ctx, eb, tb, true);
            ctx.pop();
            ok
        }
        (TermKind::TLam(x, eb), TermKind::TLam(y, tb)) => {
            if x != y {
                return false;
            }
            ctx.push(Entry::TyVar(x.clone()));
            let ok = walk(ctx, eb, tb, true);
            ctx.pop();
            ok
        }
        (TermKind::App(e1, e2), TermKind::App(t1, t2)) => {
            if maximal && spine_decline_only(ctx, t).iter().any(|d| !ctx.meta_vars_of_term(&d.partial).is_empty()) {
                return false;
            }
            if !spine_decline_only(ctx, t1).iter().all(|d| reveals_arrow(&d.ty)) {
                return false;
            }
            let k = trailing_tapps(e1);
            let j = trailing_tapps(t1);
            if j > k {
                return false;
            }
            let e1 = strip_tapps(e1, k - j);
            walk(ctx, e1, t1, false) && walk(ctx, e2, t2, true)
        }
        (TermKind::TApp(e1, s), TermKind::TApp(t1, s2)) => {
            if !alpha_equal(s, s2) {
                return false;
            }
            if !spine_decline_only(ctx, t1).iter().all(|d| d.ty.is_forall()) {
                return false;
            }
            walk(ctx, e1, t1, maximal)
        }
        _ => false,
    }
}

/// `∀X̄. S₁ → S₂`.
fn reveals_arrow(ty: &Type) -> bool {
    match ty {
        Type::Forall(_, body) => reveals_arrow(body),
        Type::Arrow(..) => true,
        _ => false,
    }
}

fn trailing_tapps(t: &Term) -> usize {
    match &t.kind {
        TermKind::TApp(f, _) => 1 + trailing_tapps(f),
        _ => 0,
    }
}

fn strip_tapps(t: &Term, n: usize) -> &Term {
    match (&t.kind, n) {
        (_, 0) => t,
        (TermKind::TApp(f, _), n) => strip_tapps(f, n - 1),
        _ => t,
    }
}
