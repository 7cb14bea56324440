//! The declarative rules, run as a verifier and as a bounded search.
//!
//! The declarative system differs from the engine in one place: at each
//! quantifier crossed before a term argument it may guess any well-formed
//! instantiation or decline to guess. [`verify_spec`] resolves that choice
//! from a claimed solution, [`search_spec`] tries a finite candidate set.
//! Nothing here calls the prototype matcher or the inference engine, except
//! the decline-only mode used by the annotation guidelines in [`weak`].

pub mod corpus;
pub mod erasure;
pub mod weak;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::infer::{self, Mode};
use crate::syntax::fresh::MetaSupply;
use crate::syntax::{
    alpha_equal, alpha_equal_term, free_type_vars, subst_one, Context, Entry, Provenance, Solution, Term, TermKind,
    Type,
};

pub use erasure::enumerate_erasures;
pub use weak::check_weak_completeness_conditions;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecVerdict {
    pub accepted: bool,
    pub trace: Vec<&'static str>,
}

/// A `(T, p, σ)` produced by the declarative spine judgment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecTriple {
    pub ty: Type,
    pub partial: Term,
    pub solution: Solution,
}

/// Replay the declarative rules on application `term` against a claimed
/// triple. Quantifiers whose meta-variable the claimed solution binds are
/// guessed, all others declined.
pub fn verify_spec(ctx: &Context, ctx_ty: Option<&Type>, term: &Term, claimed: &SpecTriple) -> SpecVerdict {
    let reject = SpecVerdict { accepted: false, trace: Vec::new() };
    if !term.is_term_app() {
        return reject;
    }
    let mut names: Vec<String> = claimed.partial.free_type_vars().into_iter().collect();
    names.extend(claimed.solution.domain());
    let mut spec =
        Spec { ctx: ctx.clone(), supply: MetaSupply::beyond(names.iter().map(String::as_str)), policy: Policy::Replay };
    for d in spec.spine(term, Some(&claimed.partial), Some(&claimed.solution)) {
        let same = alpha_equal(&d.ty, &claimed.ty)
            && alpha_equal_term(&d.partial, &claimed.partial)
            && d.solution.same_mapping(&claimed.solution);
        if !same {
            continue;
        }
        let triple = SpecTriple { ty: d.ty, partial: d.partial, solution: d.solution };
        if let Some((rule, _)) = discharge(ctx, ctx_ty, &triple) {
            let mut trace = d.trace;
            trace.push("shim");
            trace.insert(0, rule);
            return SpecVerdict { accepted: true, trace };
        }
    }
    reject
}

/// Every triple derivable for `term` when each guess is drawn from
/// `candidates` or declined. Without explicit candidates the
/// [`default_candidates`] for `ctx_ty` are used.
pub fn search_spec(ctx: &Context, ctx_ty: Option<&Type>, term: &Term, candidates: Option<&[Type]>) -> Vec<SpecTriple> {
    if !term.is_term_app() {
        return Vec::new();
    }
    let defaults;
    let candidates = match candidates {
        Some(c) => c,
        None => {
            defaults = default_candidates(ctx, ctx_ty);
            &defaults[..]
        }
    };
    let mut spec = Spec { ctx: ctx.clone(), supply: MetaSupply::new(), policy: Policy::Search(candidates) };
    let mut out: Vec<SpecTriple> = Vec::new();
    for d in spec.spine(term, None, None) {
        let t = SpecTriple { ty: d.ty, partial: d.partial, solution: d.solution };
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// The default guesses: well-formed subterms of the contextual type and of
/// the types bound in `ctx`.
pub fn default_candidates(ctx: &Context, ctx_ty: Option<&Type>) -> Vec<Type> {
    let mut out: Vec<Type> = Vec::new();
    let bound = ctx.entries().iter().filter_map(|e| match e {
        Entry::Term(_, t) => Some(t),
        Entry::TyVar(_) => None,
    });
    for ty in ctx_ty.into_iter().chain(bound) {
        for s in ty.subterms() {
            if ctx.is_well_formed(s) && !out.iter().any(|o| alpha_equal(o, s)) {
                out.push(s.clone());
            }
        }
    }
    out
}

/// The shim and the side conditions of the two application rules. Returns
/// the rule that fires and the final elaboration.
pub fn discharge(ctx: &Context, ctx_ty: Option<&Type>, triple: &SpecTriple) -> Option<(&'static str, Term)> {
    let solved = triple.solution.domain();
    if ctx.meta_vars_of_type(&triple.ty) != solved {
        return None;
    }
    match ctx_ty {
        None => (triple.solution.is_identity() && ctx.meta_vars_of_term(&triple.partial).is_empty())
            .then(|| ("AppSyn", triple.partial.clone())),
        Some(expected) => (ctx.meta_vars_of_term(&triple.partial) == solved
            && alpha_equal(&triple.solution.apply(&triple.ty), expected))
        .then(|| ("AppChk", triple.solution.apply_term(&triple.partial))),
    }
}

/// `[Ū/Ȳ]pattern = target`, by structural descent. Written separately from
/// the engine's matcher so the two can be compared.
pub fn instance_of(metas: &BTreeSet<String>, pattern: &Type, target: &Type) -> Option<Solution> {
    let mut found: Vec<(String, Type)> = Vec::new();
    if !inst(metas, pattern, target, &mut Vec::new(), &mut found) {
        return None;
    }
    Some(found.into_iter().collect())
}

fn inst(
    metas: &BTreeSet<String>,
    pattern: &Type,
    target: &Type,
    binders: &mut Vec<(String, String)>,
    found: &mut Vec<(String, Type)>,
) -> bool {
    match (pattern, target) {
        (Type::Var(y), _) if metas.contains(y) && !binders.iter().any(|(l, _)| l == y) => {
            let fv = free_type_vars(target);
            if binders.iter().any(|(_, r)| fv.contains(r)) {
                return false;
            }
            match found.iter().find(|(k, _)| k == y) {
                Some((_, u)) => alpha_equal(u, target),
                None => {
                    found.push((y.clone(), target.clone()));
                    true
                }
            }
        }
        (Type::Var(a), Type::Var(b)) => match binders.iter().rev().find(|(l, r)| l == a || r == b) {
            Some((l, r)) => l == a && r == b,
            None => a == b,
        },
        (Type::Arrow(s1, t1), Type::Arrow(s2, t2)) => {
            inst(metas, s1, s2, binders, found) && inst(metas, t1, t2, binders, found)
        }
        (Type::Forall(x, b1), Type::Forall(y, b2)) => {
            binders.push((x.clone(), y.clone()));
            let ok = inst(metas, b1, b2, binders, found);
            binders.pop();
            ok
        }
        (Type::Con(c, xs), Type::Con(d, ys)) => {
            c == d && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| inst(metas, x, y, binders, found))
        }
        _ => false,
    }
}

/// How the free choice at a quantifier is resolved.
#[derive(Clone, Copy)]
enum Policy<'a> {
    /// Follow a claimed elaboration: the top spine reads guesses off the
    /// claimed solution, nested spines try both declining and guessing the
    /// type argument the elaboration shows.
    Replay,
    Search(&'a [Type]),
    /// Never guess; term arguments and heads are typed by the engine.
    DeclineOnly,
}

#[derive(Clone, Debug)]
struct Derivation {
    ty: Type,
    elaboration: Term,
    trace: Vec<&'static str>,
}

#[derive(Clone, Debug)]
struct SpineDerivation {
    ty: Type,
    partial: Term,
    solution: Solution,
    trace: Vec<&'static str>,
}

/// One spine split into runs: `head [run0] a1 [run1] ... an [runN]`.
struct Runs<'t> {
    head: &'t Term,
    args: Vec<&'t Term>,
    runs: Vec<Vec<&'t Type>>,
}

fn runs_of(term: &Term) -> Runs<'_> {
    let (head, spine) = term.spine();
    let mut args = Vec::new();
    let mut runs = vec![Vec::new()];
    for a in spine {
        match a {
            crate::syntax::SpineArg::Term(t) => {
                args.push(t);
                runs.push(Vec::new());
            }
            crate::syntax::SpineArg::Type(s) => runs.last_mut().expect("nonempty").push(s),
        }
    }
    Runs { head, args, runs }
}

struct Spec<'a> {
    ctx: Context,
    supply: MetaSupply,
    policy: Policy<'a>,
}

/// What the guide says about one omitted type argument.
enum Hint<'g> {
    /// A variable not declared in Γ: a meta-variable of the claimed triple.
    Meta(&'g str),
    Concrete(&'g Type),
}

impl Spec<'_> {
    /// The bidirectional rules. `guide` is an elaboration the result is
    /// expected to match; it only steers the free choices.
    fn judge(&mut self, mode: &Mode, term: &Term, guide: Option<&Term>) -> Vec<Derivation> {
        if let Policy::DeclineOnly = self.policy {
            return match infer::infer(&self.ctx, mode, term) {
                Ok(out) => vec![Derivation { ty: out.ty, elaboration: out.elaboration, trace: Vec::new() }],
                Err(_) => Vec::new(),
            };
        }
        let one = |ty: Type, elaboration: Term, rule: &'static str| Derivation { ty, elaboration, trace: vec![rule] };
        match &term.kind {
            TermKind::Var(x) => {
                let Some(ty) = self.ctx.lookup(x).cloned() else { return Vec::new() };
                match mode {
                    Mode::Check(expected) if !alpha_equal(&ty, expected) => Vec::new(),
                    _ => vec![one(ty, term.clone(), "Var")],
                }
            }
            TermKind::Lam(x, ann, body) => {
                if self.ctx.lookup(x).is_some() {
                    return Vec::new();
                }
                let guide_body = match guide.map(|g| &g.kind) {
                    Some(TermKind::Lam(_, _, gb)) => Some(&**gb),
                    _ => None,
                };
                let (rule, dom, body_mode) = match (ann, mode) {
                    (Some(a), Mode::Synthesize) if self.ctx.is_well_formed(a) => ("AAbs", a.clone(), Mode::Synthesize),
                    (Some(a), Mode::Check(Type::Arrow(d, c))) if self.ctx.is_well_formed(a) && alpha_equal(a, d) => {
                        ("AAbs", a.clone(), Mode::Check((**c).clone()))
                    }
                    (None, Mode::Check(Type::Arrow(d, c))) => ("Abs", (**d).clone(), Mode::Check((**c).clone())),
                    _ => return Vec::new(),
                };
                self.ctx.push(Entry::Term(x.clone(), dom.clone()));
                let inner = self.judge(&body_mode, body, guide_body);
                self.ctx.pop();
                inner
                    .into_iter()
                    .map(|d| Derivation {
                        ty: Type::arrow(dom.clone(), d.ty),
                        elaboration: Term::lam(x.clone(), dom.clone(), d.elaboration),
                        trace: prepend(rule, d.trace),
                    })
                    .collect()
            }
            TermKind::TLam(x, body) => {
                if self.ctx.declares_type_var(x) || self.ctx.arity(x).is_some() {
                    return Vec::new();
                }
                let body_mode = match mode {
                    Mode::Synthesize => Mode::Synthesize,
                    Mode::Check(Type::Forall(y, b)) => Mode::Check(subst_one(b, y, &Type::var(x.clone()))),
                    Mode::Check(_) => return Vec::new(),
                };
                let guide_body = match guide.map(|g| &g.kind) {
                    Some(TermKind::TLam(_, gb)) => Some(&**gb),
                    _ => None,
                };
                self.ctx.push(Entry::TyVar(x.clone()));
                let inner = self.judge(&body_mode, body, guide_body);
                self.ctx.pop();
                inner
                    .into_iter()
                    .map(|d| Derivation {
                        ty: Type::forall(x.clone(), d.ty),
                        elaboration: Term::tlam(x.clone(), d.elaboration),
                        trace: prepend("TAbs", d.trace),
                    })
                    .collect()
            }
            TermKind::TApp(fun, arg) => {
                if !self.ctx.is_well_formed(arg) {
                    return Vec::new();
                }
                let guide_fun = match guide.map(|g| &g.kind) {
                    Some(TermKind::TApp(gf, _)) => Some(&**gf),
                    _ => None,
                };
                let mut out = Vec::new();
                for d in self.judge(&Mode::Synthesize, fun, guide_fun) {
                    let Type::Forall(x, body) = &d.ty else { continue };
                    let ty = subst_one(body, x, arg);
                    if let Mode::Check(expected) = mode {
                        if !alpha_equal(&ty, expected) {
                            continue;
                        }
                    }
                    out.push(Derivation {
                        ty,
                        elaboration: Term::tapp(d.elaboration, arg.clone()),
                        trace: prepend("TApp", d.trace),
                    });
                }
                out
            }
            TermKind::App(..) => {
                let mut out = Vec::new();
                for d in self.spine(term, guide, None) {
                    let triple = SpecTriple { ty: d.ty, partial: d.partial, solution: d.solution };
                    let ctx_ty = match mode {
                        Mode::Check(t) => Some(t),
                        Mode::Synthesize => None,
                    };
                    if let Some((rule, elaboration)) = discharge(&self.ctx, ctx_ty, &triple) {
                        let ty = ctx_ty.cloned().unwrap_or(triple.ty);
                        let mut trace = prepend(rule, d.trace);
                        trace.push("shim");
                        out.push(Derivation { ty, elaboration, trace });
                    }
                }
                out
            }
        }
    }

    /// The spine judgment. `claimed` is the solution to replay at the top
    /// level of verification.
    fn spine(&mut self, term: &Term, guide: Option<&Term>, claimed: Option<&Solution>) -> Vec<SpineDerivation> {
        let runs = runs_of(term);
        let guide_runs = guide.map(runs_of);
        let n = runs.args.len();
        if let Some(g) = &guide_runs {
            if g.args.len() != n || g.runs[n].len() != runs.runs[n].len() {
                return Vec::new();
            }
            for (t_run, g_run) in runs.runs.iter().zip(&g.runs) {
                if t_run.len() > g_run.len() || !t_run.iter().zip(g_run).all(|(a, b)| alpha_equal(a, b)) {
                    return Vec::new();
                }
            }
        }
        let head_guide = guide_runs.as_ref().map(|g| g.head);
        let mut states: Vec<SpineDerivation> = self
            .judge(&Mode::Synthesize, runs.head, head_guide)
            .into_iter()
            .map(|d| SpineDerivation {
                ty: d.ty,
                partial: d.elaboration,
                solution: Solution::identity(),
                trace: prepend("PHead", d.trace),
            })
            .collect();
        for i in 0..=n {
            states = states.into_iter().filter_map(|s| ptapps(&self.ctx, s, &runs.runs[i])).collect();
            if i == n {
                break;
            }
            let hints: Option<Vec<Hint<'_>>> = guide_runs.as_ref().map(|g| {
                g.runs[i][runs.runs[i].len()..]
                    .iter()
                    .map(|t| match t {
                        Type::Var(z) if !self.ctx.declares_type_var(z) => Hint::Meta(z.as_str()),
                        other => Hint::Concrete(other),
                    })
                    .collect()
            });
            let arg_guide = guide_runs.as_ref().map(|g| g.args[i]);
            let mut next = Vec::new();
            for s in states {
                for s in self.pforalls(s, hints.as_deref(), claimed) {
                    next.extend(self.apply(s, runs.args[i], arg_guide));
                }
            }
            states = next;
        }
        states
    }

    /// Cross every quantifier in front of the next term argument, guessing
    /// or declining at each.
    fn pforalls(
        &mut self,
        s: SpineDerivation,
        hints: Option<&[Hint<'_>]>,
        claimed: Option<&Solution>,
    ) -> Vec<SpineDerivation> {
        let Type::Forall(x, body) = &s.ty else {
            // A guide that omitted more type arguments than there are
            // quantifiers cannot be followed.
            return match hints {
                Some(h) if !h.is_empty() => Vec::new(),
                _ => vec![s],
            };
        };
        let (hint, rest) = match hints {
            Some([]) => return Vec::new(),
            Some([h, rest @ ..]) => (Some(h), Some(rest)),
            None => (None, None),
        };
        let mut out = Vec::new();
        for (meta, guess) in self.choices(x, hint, claimed) {
            let solution = match &guess {
                None => s.solution.clone(),
                Some(g) if !self.ctx.is_well_formed(g) => continue,
                Some(g) => s.solution.clone().compose(meta.clone(), g.clone(), Provenance::Explicit),
            };
            let next = SpineDerivation {
                ty: subst_one(body, x, &Type::var(meta.clone())),
                partial: Term::tapp(s.partial.clone(), Type::var(meta)),
                solution,
                trace: append(s.trace.clone(), "PForall"),
            };
            out.extend(self.pforalls(next, rest, claimed));
        }
        out
    }

    fn choices(&mut self, x: &str, hint: Option<&Hint<'_>>, claimed: Option<&Solution>) -> Vec<(String, Option<Type>)> {
        match (self.policy, hint) {
            (Policy::DeclineOnly, _) => vec![(self.supply.fresh(x), None)],
            (Policy::Search(cands), _) => {
                let meta = self.supply.fresh(x);
                let mut out = vec![(meta.clone(), None)];
                out.extend(cands.iter().map(|c| (meta.clone(), Some(c.clone()))));
                out
            }
            (Policy::Replay, Some(Hint::Meta(z))) => match claimed.and_then(|c| c.get(z)) {
                Some(u) => vec![(String::from(*z), Some(u.clone()))],
                None => vec![(String::from(*z), None)],
            },
            (Policy::Replay, Some(Hint::Concrete(u))) => {
                let meta = self.supply.fresh(x);
                if claimed.is_some() {
                    vec![(meta, None)]
                } else {
                    vec![(meta.clone(), None), (meta, Some((*u).clone()))]
                }
            }
            (Policy::Replay, None) => vec![(self.supply.fresh(x), None)],
        }
    }

    /// Apply a spine whose type is no longer quantified to a term argument.
    fn apply(&mut self, s: SpineDerivation, arg: &Term, guide: Option<&Term>) -> Vec<SpineDerivation> {
        let Type::Arrow(dom, cod) = &s.ty else { return Vec::new() };
        let expected = s.solution.apply(dom);
        let unsolved = self.ctx.meta_vars_of_type(&expected);
        let mut out = Vec::new();
        if unsolved.is_empty() {
            for d in self.judge(&Mode::Check(expected.clone()), arg, guide) {
                let mut trace = append(s.trace.clone(), "PApp");
                trace.push("PChk");
                trace.extend(d.trace);
                out.push(SpineDerivation {
                    ty: (**cod).clone(),
                    partial: Term::app(s.partial.clone(), d.elaboration),
                    solution: s.solution.clone(),
                    trace,
                });
            }
        } else {
            for d in self.judge(&Mode::Synthesize, arg, guide) {
                let Some(theta) = instance_of(&unsolved, &expected, &d.ty) else { continue };
                if theta.domain() != unsolved {
                    continue;
                }
                let mut trace = append(s.trace.clone(), "PApp");
                trace.push("PSyn");
                trace.extend(d.trace);
                out.push(SpineDerivation {
                    ty: theta.apply(cod),
                    partial: Term::app(theta.apply_term(&s.partial), d.elaboration),
                    solution: s.solution.clone(),
                    trace,
                });
            }
        }
        out
    }
}

/// Explicit type arguments, one `PTApp` each.
fn ptapps(ctx: &Context, mut s: SpineDerivation, run: &[&Type]) -> Option<SpineDerivation> {
    for arg in run {
        if !ctx.is_well_formed(arg) {
            return None;
        }
        let Type::Forall(x, body) = &s.ty else { return None };
        s.ty = subst_one(body, x, arg);
        s.partial = Term::tapp(s.partial, (*arg).clone());
        s.trace.push("PTApp");
    }
    Some(s)
}

fn prepend(rule: &'static str, mut trace: Vec<&'static str>) -> Vec<&'static str> {
    trace.insert(0, rule);
    trace
}

fn append(mut trace: Vec<&'static str>, rule: &'static str) -> Vec<&'static str> {
    trace.push(rule);
    trace
}

/// The declarative spine judgment with every guess declined, heads and
/// arguments typed by the engine. Used to evaluate the annotation
/// guidelines, which only speak of synthetic inference.
pub fn spine_decline_only(ctx: &Context, term: &Term) -> Vec<SpecTriple> {
    let mut spec = Spec { ctx: ctx.clone(), supply: MetaSupply::new(), policy: Policy::DeclineOnly };
    let mut out: Vec<SpecTriple> = Vec::new();
    for d in spec.spine(term, None, None) {
        let t = SpecTriple { ty: d.ty, partial: d.partial, solution: d.solution };
        if !out.iter().any(|o| alpha_equal(&o.ty, &t.ty) && alpha_equal_term(&o.partial, &t.partial)) {
            out.push(t);
        }
    }
    out
}
