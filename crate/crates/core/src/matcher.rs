//! Prototype matching: solving a type's quantifiers from the contextual
//! type of the spine it heads.
//!
//! `match_proto` walks a type and a prototype together. Arrows are matched
//! against `? ->` prototypes, quantifiers become meta-variables whose
//! solutions are left behind as decorations, a meta-variable meeting an
//! arrow prototype gets stuck, and an exact prototype ends in one-sided
//! first-order matching.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::syntax::fresh::MetaSupply;
use crate::syntax::ty::{alpha_equal, free_type_vars, rename_free, vars_agree};
use crate::syntax::{DecoratedType, Prototype, Provenance, Solution, Type};

/// The matching rules, named for traces and the determinism audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MatchRule {
    /// Arrow type against `? -> P`.
    MArr,
    /// Anything against an exact prototype.
    MType,
    /// Anything against `?`.
    MUnknown,
    /// Quantifier against `? -> P`.
    MForall,
    /// Meta-variable against `? -> P`.
    MCurr,
}

impl MatchRule {
    pub fn name(self) -> &'static str {
        match self {
            MatchRule::MArr => "MArr",
            MatchRule::MType => "MType",
            MatchRule::MUnknown => "M?",
            MatchRule::MForall => "MForall",
            MatchRule::MCurr => "MCurr",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchResult {
    pub solution: Solution,
    pub decorated: DecoratedType,
    /// The `(partial, contextual)` pair compared by the exact match, if the
    /// prototype ended in one.
    pub exact_match: Option<(Type, Type)>,
    /// Rules applied, outermost first.
    pub rules: Vec<MatchRule>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchFailure {
    /// The prototype wants another arrow but the type offers neither an
    /// arrow, a quantifier nor a meta-variable.
    Arity { ty: Type, proto: Prototype },
    /// First-order matching of the partial result type against the exact
    /// prototype failed.
    Mismatch { partial: Type, against: Type },
    /// A re-match that should not have solved anything did.
    Conflict,
}

impl fmt::Display for MatchFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchFailure::Arity { ty, .. } => write!(f, "{ty} does not reveal an arrow"),
            MatchFailure::Mismatch { partial, against } => write!(f, "{partial} does not match {against}"),
            MatchFailure::Conflict => f.write_str("conflicting solution"),
        }
    }
}

/// One-sided first-order matching: the unique σ with `dom(σ) ⊆ metas` and
/// `σ pattern ≡α target`, if any. Meta-variables may not be solved with
/// types mentioning variables bound inside the pattern or target.
pub fn match_first_order(metas: &BTreeSet<String>, pattern: &Type, target: &Type) -> Option<Solution> {
    let mut sol = Solution::identity();
    fo_match(metas, pattern, target, &mut Vec::new(), &mut sol, &|_| Provenance::Explicit).then_some(sol)
}

/// As [`match_first_order`], tagging each binding with `origin`.
pub(crate) fn match_first_order_tagged(
    metas: &BTreeSet<String>,
    pattern: &Type,
    target: &Type,
    origin: &dyn Fn(&str) -> Provenance,
) -> Option<Solution> {
    let mut sol = Solution::identity();
    fo_match(metas, pattern, target, &mut Vec::new(), &mut sol, origin).then_some(sol)
}

fn fo_match<'a>(
    metas: &BTreeSet<String>,
    pattern: &'a Type,
    target: &'a Type,
    env: &mut Vec<(&'a str, &'a str)>,
    sol: &mut Solution,
    origin: &dyn Fn(&str) -> Provenance,
) -> bool {
    match (pattern, target) {
        (Type::Var(x), _) if env.iter().any(|(l, _)| l == x) => match target {
            Type::Var(y) => vars_agree(x, y, env),
            _ => false,
        },
        (Type::Var(x), _) if metas.contains(x) => {
            let escapes = free_type_vars(target).iter().any(|v| env.iter().any(|(_, r)| r == v));
            if escapes {
                return false;
            }
            match sol.get(x) {
                Some(prev) => alpha_equal(prev, target),
                None => {
                    sol.insert(x.clone(), target.clone(), origin(x));
                    true
                }
            }
        }
        (Type::Var(x), Type::Var(y)) => vars_agree(x, y, env),
        (Type::Arrow(a1, b1), Type::Arrow(a2, b2)) => {
            fo_match(metas, a1, a2, env, sol, origin) && fo_match(metas, b1, b2, env, sol, origin)
        }
        (Type::Forall(x, b1), Type::Forall(y, b2)) => {
            env.push((x, y));
            let ok = fo_match(metas, b1, b2, env, sol, origin);
            env.pop();
            ok
        }
        (Type::Con(c1, a1), Type::Con(c2, a2)) => {
            c1 == c2 && a1.len() == a2.len() && a1.iter().zip(a2).all(|(s, t)| fo_match(metas, s, t, env, sol, origin))
        }
        _ => false,
    }
}

/// Match `ty` against `proto`, solving for `metas`. Quantifiers crossed on
/// the way are freshened into new meta-variables.
pub fn match_proto(metas: &BTreeSet<String>, ty: &Type, proto: &Prototype) -> Option<MatchResult> {
    let mut names: Vec<String> = metas.iter().cloned().collect();
    names.extend(ty.subterms().into_iter().filter_map(|t| match t {
        Type::Var(x) | Type::Forall(x, _) => Some(x.clone()),
        _ => None,
    }));
    let mut supply = MetaSupply::beyond(names.iter().map(String::as_str));
    match_proto_in(metas, ty, proto, &mut supply).ok()
}

/// Matching with an explicit meta supply and a failure reason.
pub fn match_proto_in(
    metas: &BTreeSet<String>,
    ty: &Type,
    proto: &Prototype,
    supply: &mut MetaSupply,
) -> Result<MatchResult, MatchFailure> {
    let mut metas = metas.clone();
    let mut rules = Vec::new();
    let (solution, decorated, exact_match) = go(&mut metas, ty, proto, supply, &mut rules)?;
    Ok(MatchResult { solution, decorated, exact_match, rules })
}

type Step = (Solution, DecoratedType, Option<(Type, Type)>);

fn go(
    metas: &mut BTreeSet<String>,
    ty: &Type,
    proto: &Prototype,
    supply: &mut MetaSupply,
    rules: &mut Vec<MatchRule>,
) -> Result<Step, MatchFailure> {
    match proto {
        Prototype::Unknown => {
            rules.push(MatchRule::MUnknown);
            Ok((Solution::identity(), DecoratedType::Plain(ty.clone()), None))
        }
        Prototype::Exact(target) => {
            rules.push(MatchRule::MType);
            let origin = |_: &str| Provenance::Contextual { partial: ty.clone(), against: target.clone() };
            match match_first_order_tagged(metas, ty, target, &origin) {
                Some(sol) => Ok((sol, DecoratedType::Plain(ty.clone()), Some((ty.clone(), target.clone())))),
                None => Err(MatchFailure::Mismatch { partial: ty.clone(), against: target.clone() }),
            }
        }
        Prototype::ArrowTo(rest) => match ty {
            Type::Arrow(dom, cod) => {
                rules.push(MatchRule::MArr);
                let (sol, w, exact) = go(metas, cod, rest, supply, rules)?;
                Ok((sol, DecoratedType::arrow((**dom).clone(), w), exact))
            }
            Type::Forall(x, body) => {
                rules.push(MatchRule::MForall);
                let meta = supply.fresh(x);
                let body = rename_free(body, x, &meta);
                metas.insert(meta.clone());
                let result = go(metas, &body, proto, supply, rules);
                metas.remove(&meta);
                let (mut sol, w, exact) = result?;
                let deco = sol.remove(&meta).map(|b| b.ty);
                Ok((sol, DecoratedType::forall(meta, deco, w), exact))
            }
            Type::Var(x) if metas.contains(x) => {
                rules.push(MatchRule::MCurr);
                Ok((Solution::identity(), DecoratedType::stuck(x.clone(), proto.clone()), None))
            }
            _ => Err(MatchFailure::Arity { ty: ty.clone(), proto: proto.clone() }),
        },
    }
}

/// Every rule whose conclusion fits `(metas, ty, proto)`. Matching is a
/// function exactly when this never returns more than one rule.
pub fn applicable_rules(metas: &BTreeSet<String>, ty: &Type, proto: &Prototype) -> Vec<MatchRule> {
    let mut out = Vec::new();
    if matches!(proto, Prototype::Unknown) {
        out.push(MatchRule::MUnknown);
    }
    if matches!(proto, Prototype::Exact(_)) {
        out.push(MatchRule::MType);
    }
    if matches!(proto, Prototype::ArrowTo(_)) {
        match ty {
            Type::Arrow(..) => out.push(MatchRule::MArr),
            Type::Forall(..) => out.push(MatchRule::MForall),
            Type::Var(x) if metas.contains(x) => out.push(MatchRule::MCurr),
            _ => {}
        }
    }
    out
}
