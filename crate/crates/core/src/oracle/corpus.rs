//! A deterministic corpus of well-typed internal terms.
//!
//! Terms are enumerated bottom-up by size under a fixed context of
//! polymorphic constants over `Nat`, `Pair` and `Sum`. Every term is built
//! from typing rules, so it is well-typed by construction; the tests also
//! run each one through the internal checker.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::syntax::{alpha_equal, subst_one, Context, Entry, Term, Type};

fn nat() -> Type {
    Type::base("Nat")
}

fn x() -> Type {
    Type::var("X")
}

fn y() -> Type {
    Type::var("Y")
}

fn forall2(body: Type) -> Type {
    Type::forall("X", Type::forall("Y", body))
}

/// The constants every corpus term lives under.
pub fn standard_context() -> Context {
    let arr = Type::arrow;
    Context::new()
        .with_con("Nat", 0)
        .with_con("Pair", 2)
        .with_con("Sum", 2)
        .with("z", nat())
        .with("suc", arr(nat(), nat()))
        .with("id", Type::forall("X", arr(x(), x())))
        .with("bot", Type::forall("X", x()))
        .with("pair", forall2(arr(x(), arr(y(), Type::con("Pair", vec![x(), y()])))))
        .with("fst", forall2(arr(Type::con("Pair", vec![x(), y()]), x())))
        .with("left", forall2(arr(x(), Type::con("Sum", vec![x(), y()]))))
        .with("right", forall2(arr(y(), Type::con("Sum", vec![x(), y()]))))
        .with("const", forall2(arr(x(), arr(y(), x()))))
        .with("rapp", forall2(arr(x(), arr(arr(x(), y()), y()))))
        .with("twice", Type::forall("X", arr(arr(x(), x()), arr(x(), x()))))
        .with("poly", arr(Type::forall("X", arr(x(), x())), nat()))
}

/// Well-typed internal terms of size at most `max_size` under `ctx`, with
/// their types, smallest first. At most `per_size` terms of each size are
/// kept.
pub fn well_typed_terms(ctx: &Context, max_size: usize, per_size: usize) -> Vec<(Term, Type)> {
    let mut gen = Enumerator::new(ctx.clone(), per_size, 0);
    (1..=max_size).flat_map(|n| gen.of_size(n)).collect()
}

struct Enumerator {
    ctx: Context,
    per_size: usize,
    depth: usize,
    memo: BTreeMap<usize, Vec<(Term, Type)>>,
}

impl Enumerator {
    fn new(ctx: Context, per_size: usize, depth: usize) -> Enumerator {
        Enumerator { ctx, per_size, depth, memo: BTreeMap::new() }
    }

    /// Types used as annotations and explicit type arguments.
    fn pool(&self, for_tapp: bool) -> Vec<Type> {
        let mut pool = vec![nat(), Type::arrow(nat(), nat())];
        if for_tapp {
            pool.push(Type::con("Pair", vec![nat(), nat()]));
            pool.push(Type::forall("Y", Type::arrow(y(), y())));
        }
        for e in self.ctx.entries() {
            if let Entry::TyVar(a) = e {
                pool.push(Type::var(a.clone()));
            }
        }
        pool
    }

    fn of_size(&mut self, n: usize) -> Vec<(Term, Type)> {
        if let Some(done) = self.memo.get(&n) {
            return done.clone();
        }
        let mut out: Vec<(Term, Type)> = Vec::new();
        // Each kind of term gets an equal share of the cap.
        let share = self.per_size.div_ceil(4);
        if n == 1 {
            for e in self.ctx.entries() {
                if let Entry::Term(v, t) = e {
                    out.push((Term::var(v.clone()), t.clone()));
                }
            }
        } else {
            // Type application: size of the applicand plus one.
            let mut tapps = Vec::new();
            for (f, ty) in self.of_size(n - 1) {
                if let Type::Forall(a, body) = &ty {
                    for s in self.pool(true) {
                        tapps.push((Term::tapp(f.clone(), s.clone()), subst_one(body, a, &s)));
                    }
                }
            }
            out.extend(thin(tapps, share));
            // Term application.
            let mut apps = Vec::new();
            for k in 1..n - 1 {
                let funs = self.of_size(k);
                if !funs.iter().any(|(_, t)| t.is_arrow()) {
                    continue;
                }
                let args = self.of_size(n - 1 - k);
                for (f, ty) in &funs {
                    let Type::Arrow(dom, cod) = ty else { continue };
                    for (a, aty) in &args {
                        if alpha_equal(dom, aty) {
                            apps.push((Term::app(f.clone(), a.clone()), (**cod).clone()));
                        }
                    }
                }
            }
            out.extend(thin(apps, share));
            // Abstractions, whose bodies live in an extended context.
            let var = format!("x{}", self.depth);
            let mut lams = Vec::new();
            for ann in self.pool(false) {
                let mut inner =
                    Enumerator::new(self.ctx.clone().with(&var, ann.clone()), self.per_size, self.depth + 1);
                for (b, bty) in inner.of_size(n - 1) {
                    lams.push((Term::lam(var.clone(), ann.clone(), b), Type::arrow(ann.clone(), bty)));
                }
            }
            out.extend(thin(lams, share));
            let tvar: String = format!("A{}", self.depth);
            let mut tctx = self.ctx.clone();
            if tctx.declare_type_var(tvar.clone()).is_ok() {
                let mut inner = Enumerator::new(tctx, self.per_size, self.depth + 1);
                let tlams = inner
                    .of_size(n - 1)
                    .into_iter()
                    .map(|(b, bty)| (Term::tlam(tvar.clone(), b), Type::forall(tvar.clone(), bty)));
                out.extend(thin(tlams.collect(), share));
            }
        }
        self.memo.insert(n, out.clone());
        out
    }
}

/// An evenly spaced sample of at most `keep` items, so that every kind of
/// term survives the cap.
fn thin<T>(items: Vec<T>, keep: usize) -> Vec<T> {
    let len = items.len();
    if len <= keep {
        return items;
    }
    items.into_iter().enumerate().filter(|(i, _)| i * keep % len < keep).map(|(_, t)| t).collect()
}
