use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::fresh::rename_away;

/// System F types extended with declared, fully applied type constructors.
///
/// The derived `PartialEq` is syntactic. Use [`alpha_equal`] whenever bound
/// variable names should not matter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Type {
    Var(String),
    Arrow(Box<Type>, Box<Type>),
    Forall(String, Box<Type>),
    Con(String, Vec<Type>),
}

impl Type {
    pub fn var(name: impl Into<String>) -> Type {
        Type::Var(name.into())
    }

    pub fn arrow(dom: Type, cod: Type) -> Type {
        Type::Arrow(Box::new(dom), Box::new(cod))
    }

    pub fn forall(bound: impl Into<String>, body: Type) -> Type {
        Type::Forall(bound.into(), Box::new(body))
    }

    pub fn con(name: impl Into<String>, args: Vec<Type>) -> Type {
        Type::Con(name.into(), args)
    }

    /// Nullary constructor.
    pub fn base(name: impl Into<String>) -> Type {
        Type::Con(name.into(), Vec::new())
    }

    pub fn is_arrow(&self) -> bool {
        matches!(self, Type::Arrow(..))
    }

    pub fn is_forall(&self) -> bool {
        matches!(self, Type::Forall(..))
    }

    /// Number of constructors in the type, counting each variable, arrow,
    /// quantifier and constructor application as one.
    pub fn size(&self) -> usize {
        match self {
            Type::Var(_) => 1,
            Type::Arrow(a, b) => 1 + a.size() + b.size(),
            Type::Forall(_, b) => 1 + b.size(),
            Type::Con(_, args) => 1 + args.iter().map(Type::size).sum::<usize>(),
        }
    }

    /// Every sub-type, outermost first. Sub-types under a binder may mention
    /// the bound variable free.
    pub fn subterms(&self) -> Vec<&Type> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![self];
        while let Some(t) = stack.pop() {
            out.push(t);
            match t {
                Type::Var(_) => {}
                Type::Arrow(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
                Type::Forall(_, b) => stack.push(b),
                Type::Con(_, args) => stack.extend(args.iter().rev()),
            }
        }
        out
    }
}

pub fn free_type_vars(ty: &Type) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    collect_free(ty, &mut Vec::new(), &mut out);
    out
}

fn collect_free<'a>(ty: &'a Type, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
    match ty {
        Type::Var(x) => {
            if !bound.contains(&x.as_str()) {
                out.insert(x.clone());
            }
        }
        Type::Arrow(a, b) => {
            collect_free(a, bound, out);
            collect_free(b, bound, out);
        }
        Type::Forall(x, b) => {
            bound.push(x);
            collect_free(b, bound, out);
            bound.pop();
        }
        Type::Con(_, args) => args.iter().for_each(|a| collect_free(a, bound, out)),
    }
}

pub fn occurs_free(name: &str, ty: &Type) -> bool {
    match ty {
        Type::Var(x) => x == name,
        Type::Arrow(a, b) => occurs_free(name, a) || occurs_free(name, b),
        Type::Forall(x, b) => x != name && occurs_free(name, b),
        Type::Con(_, args) => args.iter().any(|a| occurs_free(name, a)),
    }
}

/// Equality up to consistent renaming of bound variables.
pub fn alpha_equal(left: &Type, right: &Type) -> bool {
    alpha_equal_in(left, right, &mut Vec::new())
}

/// Alpha-equality under an environment of binder pairs (innermost last).
pub(crate) fn alpha_equal_in<'a>(left: &'a Type, right: &'a Type, env: &mut Vec<(&'a str, &'a str)>) -> bool {
    match (left, right) {
        (Type::Var(x), Type::Var(y)) => vars_agree(x, y, env),
        (Type::Arrow(a1, b1), Type::Arrow(a2, b2)) => alpha_equal_in(a1, a2, env) && alpha_equal_in(b1, b2, env),
        (Type::Forall(x, b1), Type::Forall(y, b2)) => {
            env.push((x, y));
            let eq = alpha_equal_in(b1, b2, env);
            env.pop();
            eq
        }
        (Type::Con(c1, a1), Type::Con(c2, a2)) => {
            c1 == c2 && a1.len() == a2.len() && a1.iter().zip(a2).all(|(s, t)| alpha_equal_in(s, t, env))
        }
        _ => false,
    }
}

pub(crate) fn vars_agree(x: &str, y: &str, env: &[(&str, &str)]) -> bool {
    for &(l, r) in env.iter().rev() {
        if l == x || r == y {
            return l == x && r == y;
        }
    }
    x == y
}

/// Capture-avoiding simultaneous substitution.
pub fn subst_with(ty: &Type, lookup: &dyn Fn(&str) -> Option<Type>) -> Type {
    subst_in(ty, lookup, &BTreeSet::new())
}

fn subst_in(ty: &Type, lookup: &dyn Fn(&str) -> Option<Type>, shadowed: &BTreeSet<String>) -> Type {
    match ty {
        Type::Var(x) => {
            if shadowed.contains(x) {
                ty.clone()
            } else {
                lookup(x).unwrap_or_else(|| ty.clone())
            }
        }
        Type::Arrow(a, b) => Type::arrow(subst_in(a, lookup, shadowed), subst_in(b, lookup, shadowed)),
        Type::Con(c, args) => Type::Con(c.clone(), args.iter().map(|a| subst_in(a, lookup, shadowed)).collect()),
        Type::Forall(x, body) => {
            // Free variables of the replacements that could be captured by x.
            let mut incoming = BTreeSet::new();
            for v in free_type_vars(body) {
                if &v == x || shadowed.contains(&v) {
                    continue;
                }
                if let Some(r) = lookup(&v) {
                    incoming.extend(free_type_vars(&r));
                }
            }
            if incoming.contains(x) {
                let mut avoid = incoming;
                avoid.extend(free_type_vars(body));
                let fresh = rename_away(x, &avoid);
                let renamed = rename_free(body, x, &fresh);
                let mut inner = shadowed.clone();
                inner.remove(&fresh);
                Type::forall(fresh, subst_in(&renamed, lookup, &inner))
            } else {
                let mut inner = shadowed.clone();
                inner.insert(x.clone());
                Type::forall(x.clone(), subst_in(body, lookup, &inner))
            }
        }
    }
}

/// `[S/X]T`.
pub fn subst_one(ty: &Type, name: &str, replacement: &Type) -> Type {
    subst_with(ty, &|v| (v == name).then(|| replacement.clone()))
}

/// Rename free occurrences of `from` to the variable `to`; `to` must not be
/// bound anywhere inside `ty` in a position that would capture it.
pub(crate) fn rename_free(ty: &Type, from: &str, to: &str) -> Type {
    subst_one(ty, from, &Type::var(to))
}
