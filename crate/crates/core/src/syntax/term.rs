use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::fresh::rename_away;
use super::ty::{alpha_equal_in, free_type_vars, subst_with, vars_agree, Type};

/// Byte range in the source text a node was parsed from. Synthesized nodes
/// carry [`Span::NONE`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub const NONE: Span = Span { start: 0, end: 0 };

    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        if self == Span::NONE {
            return other;
        }
        if other == Span::NONE {
            return self;
        }
        Span { start: self.start.min(other.start), end: self.end.max(other.end) }
    }
}

/// External and internal terms share this AST. A term is internal when every
/// `Lam` carries an annotation.
///
/// Equality ignores spans; it is otherwise syntactic. See [`alpha_equal_term`].
#[derive(Clone, Debug)]
pub struct Term {
    pub kind: TermKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermKind {
    Var(String),
    Lam(String, Option<Type>, Box<Term>),
    TLam(String, Box<Term>),
    App(Box<Term>, Box<Term>),
    TApp(Box<Term>, Type),
}

impl PartialEq for Term {
    fn eq(&self, other: &Term) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Term {}

/// One argument along an application spine.
#[derive(Clone, Copy, Debug)]
pub enum SpineArg<'a> {
    Term(&'a Term),
    Type(&'a Type),
}

impl Term {
    pub fn new(kind: TermKind, span: Span) -> Term {
        Term { kind, span }
    }

    pub fn var(name: impl Into<String>) -> Term {
        Term::new(TermKind::Var(name.into()), Span::NONE)
    }

    pub fn lam(name: impl Into<String>, ann: Type, body: Term) -> Term {
        Term::new(TermKind::Lam(name.into(), Some(ann), Box::new(body)), Span::NONE)
    }

    pub fn bare_lam(name: impl Into<String>, body: Term) -> Term {
        Term::new(TermKind::Lam(name.into(), None, Box::new(body)), Span::NONE)
    }

    pub fn tlam(name: impl Into<String>, body: Term) -> Term {
        Term::new(TermKind::TLam(name.into(), Box::new(body)), Span::NONE)
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        let span = fun.span.join(arg.span);
        Term::new(TermKind::App(Box::new(fun), Box::new(arg)), span)
    }

    pub fn tapp(fun: Term, arg: Type) -> Term {
        let span = fun.span;
        Term::new(TermKind::TApp(Box::new(fun), arg), span)
    }

    pub fn with_span(mut self, span: Span) -> Term {
        self.span = span;
        self
    }

    /// Term or type application.
    pub fn is_app(&self) -> bool {
        matches!(self.kind, TermKind::App(..) | TermKind::TApp(..))
    }

    pub fn is_term_app(&self) -> bool {
        matches!(self.kind, TermKind::App(..))
    }

    /// Every `Lam` is annotated.
    pub fn is_internal(&self) -> bool {
        match &self.kind {
            TermKind::Var(_) => true,
            TermKind::Lam(_, ann, body) => ann.is_some() && body.is_internal(),
            TermKind::TLam(_, body) => body.is_internal(),
            TermKind::App(f, a) => f.is_internal() && a.is_internal(),
            TermKind::TApp(f, _) => f.is_internal(),
        }
    }

    /// Head and arguments of the application spine, leftmost argument first.
    pub fn spine(&self) -> (&Term, Vec<SpineArg<'_>>) {
        let mut args = Vec::new();
        let mut cur = self;
        loop {
            match &cur.kind {
                TermKind::App(f, a) => {
                    args.push(SpineArg::Term(a));
                    cur = f;
                }
                TermKind::TApp(f, s) => {
                    args.push(SpineArg::Type(s));
                    cur = f;
                }
                _ => break,
            }
        }
        args.reverse();
        (cur, args)
    }

    /// Number of term arguments in this term's own spine.
    pub fn term_arity(&self) -> usize {
        self.spine().1.iter().filter(|a| matches!(a, SpineArg::Term(_))).count()
    }

    pub fn size(&self) -> usize {
        match &self.kind {
            TermKind::Var(_) => 1,
            TermKind::Lam(_, ann, body) => 1 + ann.as_ref().map_or(0, Type::size) + body.size(),
            TermKind::TLam(_, body) => 1 + body.size(),
            TermKind::App(f, a) => 1 + f.size() + a.size(),
            TermKind::TApp(f, s) => 1 + f.size() + s.size(),
        }
    }

    /// Apply a type substitution to every type inside the term, renaming
    /// type binders that would capture a replacement's free variables.
    pub fn map_types(&self, lookup: &dyn Fn(&str) -> Option<Type>) -> Term {
        map_types_in(self, lookup, &BTreeSet::new())
    }

    /// Free type variables of every type occurring in the term.
    pub fn free_type_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_ftv(&mut Vec::new(), &mut out);
        out
    }

    fn collect_ftv(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut add = |t: &Type, bound: &Vec<String>| {
            for v in free_type_vars(t) {
                if !bound.contains(&v) {
                    out.insert(v);
                }
            }
        };
        match &self.kind {
            TermKind::Var(_) => {}
            TermKind::Lam(_, ann, body) => {
                if let Some(t) = ann {
                    add(t, bound);
                }
                body.collect_ftv(bound, out);
            }
            TermKind::TLam(x, body) => {
                bound.push(x.clone());
                body.collect_ftv(bound, out);
                bound.pop();
            }
            TermKind::App(f, a) => {
                f.collect_ftv(bound, out);
                a.collect_ftv(bound, out);
            }
            TermKind::TApp(f, s) => {
                add(s, bound);
                f.collect_ftv(bound, out);
            }
        }
    }
}

fn map_types_in(term: &Term, lookup: &dyn Fn(&str) -> Option<Type>, shadowed: &BTreeSet<String>) -> Term {
    let sub = |t: &Type| subst_with(t, &|v| if shadowed.contains(v) { None } else { lookup(v) });
    let kind = match &term.kind {
        TermKind::Var(x) => TermKind::Var(x.clone()),
        TermKind::Lam(x, ann, body) => {
            TermKind::Lam(x.clone(), ann.as_ref().map(sub), Box::new(map_types_in(body, lookup, shadowed)))
        }
        TermKind::App(f, a) => {
            TermKind::App(Box::new(map_types_in(f, lookup, shadowed)), Box::new(map_types_in(a, lookup, shadowed)))
        }
        TermKind::TApp(f, s) => TermKind::TApp(Box::new(map_types_in(f, lookup, shadowed)), sub(s)),
        TermKind::TLam(x, body) => {
            let mut incoming = BTreeSet::new();
            for v in body.free_type_vars() {
                if &v == x || shadowed.contains(&v) {
                    continue;
                }
                if let Some(r) = lookup(&v) {
                    incoming.extend(free_type_vars(&r));
                }
            }
            if incoming.contains(x) {
                let mut avoid = incoming;
                avoid.extend(body.free_type_vars());
                let fresh = rename_away(x, &avoid);
                let renamed = map_types_in(body, &|v| (v == x).then(|| Type::var(fresh.clone())), &BTreeSet::new());
                let mut inner = shadowed.clone();
                inner.remove(&fresh);
                TermKind::TLam(fresh, Box::new(map_types_in(&renamed, lookup, &inner)))
            } else {
                let mut inner = shadowed.clone();
                inner.insert(x.clone());
                TermKind::TLam(x.clone(), Box::new(map_types_in(body, lookup, &inner)))
            }
        }
    };
    Term::new(kind, term.span)
}

/// Equality up to renaming of bound term and type variables; spans ignored.
pub fn alpha_equal_term(left: &Term, right: &Term) -> bool {
    alpha_term_in(left, right, &mut Vec::new(), &mut Vec::new())
}

fn alpha_term_in<'a>(
    left: &'a Term,
    right: &'a Term,
    vars: &mut Vec<(&'a str, &'a str)>,
    tvars: &mut Vec<(&'a str, &'a str)>,
) -> bool {
    match (&left.kind, &right.kind) {
        (TermKind::Var(x), TermKind::Var(y)) => vars_agree(x, y, vars),
        (TermKind::Lam(x, a1, b1), TermKind::Lam(y, a2, b2)) => {
            let anns = match (a1, a2) {
                (None, None) => true,
                (Some(s), Some(t)) => alpha_equal_in(s, t, tvars),
                _ => false,
            };
            if !anns {
                return false;
            }
            vars.push((x, y));
            let eq = alpha_term_in(b1, b2, vars, tvars);
            vars.pop();
            eq
        }
        (TermKind::TLam(x, b1), TermKind::TLam(y, b2)) => {
            tvars.push((x, y));
            let eq = alpha_term_in(b1, b2, vars, tvars);
            tvars.pop();
            eq
        }
        (TermKind::App(f1, a1), TermKind::App(f2, a2)) => {
            alpha_term_in(f1, f2, vars, tvars) && alpha_term_in(a1, a2, vars, tvars)
        }
        (TermKind::TApp(f1, s1), TermKind::TApp(f2, s2)) => {
            alpha_equal_in(s1, s2, tvars) && alpha_term_in(f1, f2, vars, tvars)
        }
        _ => false,
    }
}
