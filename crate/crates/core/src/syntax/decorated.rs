use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use super::fresh::MetaSupply;
use super::solution::Solution;
use super::ty::{alpha_equal_in, vars_agree, Type};
use crate::matcher::{self, MatchFailure};

/// Partial knowledge of a spine's result type: `?`, an exact type, or
/// `? -> P` for one more pending term argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prototype {
    Unknown,
    Exact(Type),
    ArrowTo(Box<Prototype>),
}

impl Prototype {
    pub fn arrow_to(rest: Prototype) -> Prototype {
        Prototype::ArrowTo(Box::new(rest))
    }

    /// `?→…→?→base` with `n` leading arrows.
    pub fn arrows(n: usize, base: Prototype) -> Prototype {
        (0..n).fold(base, |p, _| Prototype::arrow_to(p))
    }

    /// Number of leading `? ->`.
    pub fn arity(&self) -> usize {
        let mut n = 0;
        let mut cur = self;
        while let Prototype::ArrowTo(rest) = cur {
            n += 1;
            cur = rest;
        }
        n
    }

    /// The `?` or exact type the arrows end in.
    pub fn target(&self) -> &Prototype {
        match self {
            Prototype::ArrowTo(rest) => rest.target(),
            other => other,
        }
    }
}

pub fn proto_arity(proto: &Prototype) -> usize {
    proto.arity()
}

/// Types carrying what contextual matching learned about their quantifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecoratedType {
    Plain(Type),
    Arrow(Type, Box<DecoratedType>),
    /// `∀X=R.W`; `None` is the uninformative `X=X`.
    Forall(String, Option<Type>, Box<DecoratedType>),
    /// `(X, ? -> P)`: meta-variable `X` must eventually match the arrow
    /// prototype.
    Stuck(String, Prototype),
}

/// How an applicand's decorated type presents itself to the next argument.
pub(crate) enum Exposed {
    Forall(String, Option<Type>, DecoratedType),
    Arrow(Type, DecoratedType),
    Other,
}

impl DecoratedType {
    pub fn arrow(dom: Type, cod: DecoratedType) -> DecoratedType {
        DecoratedType::Arrow(dom, Box::new(cod))
    }

    pub fn forall(bound: impl Into<String>, deco: Option<Type>, body: DecoratedType) -> DecoratedType {
        DecoratedType::Forall(bound.into(), deco, Box::new(body))
    }

    pub fn stuck(meta: impl Into<String>, proto: Prototype) -> DecoratedType {
        DecoratedType::Stuck(meta.into(), proto)
    }

    /// The plain type underneath the decorations.
    pub fn strip(&self) -> Type {
        match self {
            DecoratedType::Plain(t) => t.clone(),
            DecoratedType::Arrow(s, w) => Type::arrow(s.clone(), w.strip()),
            DecoratedType::Forall(x, _, w) => Type::forall(x.clone(), w.strip()),
            DecoratedType::Stuck(x, _) => Type::var(x.clone()),
        }
    }

    /// Number of decorated arrows prefixing the type. Plain types count zero.
    pub fn arity(&self) -> usize {
        match self {
            DecoratedType::Arrow(_, w) => 1 + w.arity(),
            _ => 0,
        }
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, DecoratedType::Plain(_))
    }

    /// Collapse undecorated structure into `Plain`, so that `S -> T` and
    /// `Arrow(S, Plain T)` compare equal under [`equivalent_decorated`].
    pub fn normalize(&self) -> DecoratedType {
        match self {
            DecoratedType::Plain(_) | DecoratedType::Stuck(..) => self.clone(),
            DecoratedType::Arrow(s, w) => match w.normalize() {
                DecoratedType::Plain(t) => DecoratedType::Plain(Type::arrow(s.clone(), t)),
                w => DecoratedType::arrow(s.clone(), w),
            },
            DecoratedType::Forall(x, r, w) => match (r, w.normalize()) {
                (None, DecoratedType::Plain(t)) => DecoratedType::Plain(Type::forall(x.clone(), t)),
                (r, w) => DecoratedType::forall(x.clone(), r.clone(), w),
            },
        }
    }

    pub(crate) fn expose(&self) -> Exposed {
        match self {
            DecoratedType::Forall(x, r, w) => Exposed::Forall(x.clone(), r.clone(), (**w).clone()),
            DecoratedType::Arrow(s, w) => Exposed::Arrow(s.clone(), (**w).clone()),
            DecoratedType::Plain(Type::Forall(x, body)) => {
                Exposed::Forall(x.clone(), None, DecoratedType::Plain((**body).clone()))
            }
            DecoratedType::Plain(Type::Arrow(s, t)) => {
                Exposed::Arrow((**s).clone(), DecoratedType::Plain((**t).clone()))
            }
            _ => Exposed::Other,
        }
    }

    pub(crate) fn names(&self, out: &mut Vec<String>) {
        fn ty_names(t: &Type, out: &mut Vec<String>) {
            for s in t.subterms() {
                match s {
                    Type::Var(x) | Type::Forall(x, _) => out.push(x.clone()),
                    _ => {}
                }
            }
        }
        fn proto_names(p: &Prototype, out: &mut Vec<String>) {
            match p {
                Prototype::Unknown => {}
                Prototype::Exact(t) => ty_names(t, out),
                Prototype::ArrowTo(r) => proto_names(r, out),
            }
        }
        match self {
            DecoratedType::Plain(t) => ty_names(t, out),
            DecoratedType::Arrow(s, w) => {
                ty_names(s, out);
                w.names(out);
            }
            DecoratedType::Forall(x, r, w) => {
                out.push(x.clone());
                if let Some(r) = r {
                    ty_names(r, out);
                }
                w.names(out);
            }
            DecoratedType::Stuck(x, p) => {
                out.push(x.clone());
                proto_names(p, out);
            }
        }
    }
}

pub fn deco_arity(deco: &DecoratedType) -> usize {
    deco.arity()
}

pub fn strip(deco: &DecoratedType) -> Type {
    deco.strip()
}

/// Structural equality of decorated types up to renaming of quantifier
/// binders.
pub fn alpha_equal_decorated(left: &DecoratedType, right: &DecoratedType) -> bool {
    deco_eq_in(left, right, &mut Vec::new())
}

/// Alpha-equality after [`DecoratedType::normalize`].
pub fn equivalent_decorated(left: &DecoratedType, right: &DecoratedType) -> bool {
    alpha_equal_decorated(&left.normalize(), &right.normalize())
}

fn deco_eq_in<'a>(left: &'a DecoratedType, right: &'a DecoratedType, env: &mut Vec<(&'a str, &'a str)>) -> bool {
    match (left, right) {
        (DecoratedType::Plain(s), DecoratedType::Plain(t)) => alpha_equal_in(s, t, env),
        (DecoratedType::Arrow(s1, w1), DecoratedType::Arrow(s2, w2)) => {
            alpha_equal_in(s1, s2, env) && deco_eq_in(w1, w2, env)
        }
        (DecoratedType::Forall(x, r1, w1), DecoratedType::Forall(y, r2, w2)) => {
            let decos = match (r1, r2) {
                (None, None) => true,
                (Some(a), Some(b)) => alpha_equal_in(a, b, env),
                _ => false,
            };
            env.push((x, y));
            let eq = decos && deco_eq_in(w1, w2, env);
            env.pop();
            eq
        }
        (DecoratedType::Stuck(x, p1), DecoratedType::Stuck(y, p2)) => vars_agree(x, y, env) && proto_eq_in(p1, p2, env),
        _ => false,
    }
}

fn proto_eq_in<'a>(left: &'a Prototype, right: &'a Prototype, env: &mut Vec<(&'a str, &'a str)>) -> bool {
    match (left, right) {
        (Prototype::Unknown, Prototype::Unknown) => true,
        (Prototype::Exact(s), Prototype::Exact(t)) => alpha_equal_in(s, t, env),
        (Prototype::ArrowTo(p), Prototype::ArrowTo(q)) => proto_eq_in(p, q, env),
        _ => false,
    }
}

/// σW, partial: a stuck decoration whose meta-variable σ solves is
/// re-matched against its prototype, and the substitution is undefined when
/// that match fails or needs a solution of its own.
pub fn subst_decorated(solution: &Solution, deco: &DecoratedType) -> Option<DecoratedType> {
    let mut names = Vec::new();
    deco.names(&mut names);
    for (k, b) in solution.iter() {
        names.push(k.clone());
        names.extend(b.ty.subterms().into_iter().filter_map(|t| match t {
            Type::Var(x) | Type::Forall(x, _) => Some(x.clone()),
            _ => None,
        }));
    }
    let mut supply = MetaSupply::beyond(names.iter().map(String::as_str));
    subst_decorated_with(solution, deco, &mut supply).ok()
}

pub(crate) fn subst_decorated_with(
    solution: &Solution,
    deco: &DecoratedType,
    supply: &mut MetaSupply,
) -> Result<DecoratedType, MatchFailure> {
    if solution.is_identity() {
        return Ok(deco.clone());
    }
    Ok(match deco {
        DecoratedType::Plain(t) => DecoratedType::Plain(solution.apply(t)),
        DecoratedType::Arrow(s, w) => {
            DecoratedType::arrow(solution.apply(s), subst_decorated_with(solution, w, supply)?)
        }
        DecoratedType::Forall(x, r, w) => {
            let body = if solution.contains(x) {
                let inner = solution.filter(|k, _| k != x);
                subst_decorated_with(&inner, w, supply)?
            } else {
                subst_decorated_with(solution, w, supply)?
            };
            DecoratedType::forall(x.clone(), r.clone(), body)
        }
        DecoratedType::Stuck(x, proto) => match solution.get(x) {
            None => deco.clone(),
            Some(ty) => {
                let m = matcher::match_proto_in(&Default::default(), ty, proto, supply)?;
                if !m.solution.is_identity() {
                    return Err(MatchFailure::Conflict);
                }
                m.decorated
            }
        },
    })
}
