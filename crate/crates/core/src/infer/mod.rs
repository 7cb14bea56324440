//! The inference engine.
//!
//! Outside applications this is an ordinary bidirectional checker with
//! elaboration. A maximal application is handed to the spine judgment: the
//! spine is walked down to its head with a prototype that records the
//! contextual type and the number of pending arguments, the head's type is
//! matched against that prototype, and the arguments are then typed left
//! to right. Omitted type arguments become meta-variables confined to the
//! spine. They are solved either from quantifier decorations (contextual)
//! or by matching an argument's synthesized type (synthetic), and must all
//! be solved by the time the maximal application is left.

mod diagnostic;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

pub use diagnostic::{Diagnostic, DiagnosticKind, SyntheticMatch};

use crate::matcher::{self, MatchFailure, MatchRule};
use crate::syntax::fresh::{is_meta_name, MetaSupply};
use crate::syntax::ty::rename_free;
use crate::syntax::{
    alpha_equal, subst_decorated_with, Context, DecoratedType, Entry, Exposed, Prototype, Provenance, Solution, Span,
    Term, TermKind, Type,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Synthesize,
    Check(Type),
}

/// Inference rules, as recorded in traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Var,
    AAbs,
    Abs,
    TAbs,
    TApp,
    AppSyn,
    AppChk,
    Head,
    SpineTApp,
    SpineApp,
    Forall,
    Chk,
    Syn,
    Match(MatchRule),
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Var => "Var",
            Rule::AAbs => "AAbs",
            Rule::Abs => "Abs",
            Rule::TAbs => "TAbs",
            Rule::TApp => "TApp",
            Rule::AppSyn => "AppSyn",
            Rule::AppChk => "AppChk",
            Rule::Head => "?Head",
            Rule::SpineTApp => "?TApp",
            Rule::SpineApp => "?App",
            Rule::Forall => "?Forall",
            Rule::Chk => "?Chk",
            Rule::Syn => "?Syn",
            Rule::Match(m) => m.name(),
        }
    }
}

/// The `(T, p, σ)` a maximal application's spine produced before `σ` was
/// applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineTriple {
    pub ty: Type,
    pub partial: Term,
    pub solution: Solution,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InferOutcome {
    pub ty: Type,
    pub elaboration: Term,
    /// Present when the term is itself a term application.
    pub spine: Option<SpineTriple>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineOutcome {
    pub deco: DecoratedType,
    pub partial: Term,
    pub solution: Solution,
}

/// Infer or check `term`, producing its type and elaboration.
pub fn infer(ctx: &Context, mode: &Mode, term: &Term) -> Result<InferOutcome, Diagnostic> {
    Engine::new(ctx).infer(mode, term)
}

/// As [`infer`], also returning the rules applied in order.
pub fn infer_traced(ctx: &Context, mode: &Mode, term: &Term) -> (Result<InferOutcome, Diagnostic>, Vec<Rule>) {
    let mut engine = Engine::new(ctx);
    engine.trace = Some(Vec::new());
    let result = engine.infer(mode, term);
    (result, engine.trace.unwrap_or_default())
}

/// The spine judgment on its own. `proto` must be `? -> P` unless `term` is a
/// term application.
pub fn spine_infer(ctx: &Context, proto: &Prototype, term: &Term) -> Result<SpineOutcome, Diagnostic> {
    let mut engine = Engine::new(ctx);
    engine.spine(proto, term).map(SpineState::outcome)
}

/// Apply partial elaboration `partial : deco` with solution `solution` to
/// term argument `arg`, the `arg_index`-th of its spine.
pub fn apply_arg(
    ctx: &Context,
    partial: &Term,
    deco: &DecoratedType,
    solution: &Solution,
    arg: &Term,
    arg_index: usize,
) -> Result<(DecoratedType, Term, Solution), Diagnostic> {
    let mut names: Vec<String> = partial.free_type_vars().into_iter().collect();
    deco.names(&mut names);
    names.extend(solution.domain());
    let mut engine = Engine::new(ctx);
    engine.supply = MetaSupply::beyond(names.iter().map(String::as_str));
    let state = SpineState {
        deco: deco.clone(),
        partial: partial.clone(),
        solution: solution.clone(),
        shadow: Some(deco.clone()),
        synthetic: Solution::identity(),
        exact_match: None,
    };
    let out = engine.apply(state, arg, arg_index)?;
    Ok((out.deco, out.partial, out.solution))
}

/// Spine bookkeeping threaded through the application rules.
#[derive(Clone, Debug)]
struct SpineState {
    deco: DecoratedType,
    partial: Term,
    solution: Solution,
    /// `deco` without synthetic solutions applied, kept while its shape
    /// still lines up; used to explain expected types in diagnostics.
    shadow: Option<DecoratedType>,
    /// Synthetic solutions found so far. They are applied eagerly and
    /// never enter `solution`.
    synthetic: Solution,
    exact_match: Option<(Type, Type)>,
}

impl SpineState {
    fn outcome(self) -> SpineOutcome {
        SpineOutcome { deco: self.deco, partial: self.partial, solution: self.solution }
    }
}

struct Engine {
    ctx: Context,
    supply: MetaSupply,
    trace: Option<Vec<Rule>>,
}

impl Engine {
    fn new(ctx: &Context) -> Engine {
        Engine { ctx: ctx.clone(), supply: MetaSupply::new(), trace: None }
    }

    fn note(&mut self, rule: Rule) {
        if let Some(t) = &mut self.trace {
            t.push(rule);
        }
    }

    fn note_match(&mut self, rules: &[MatchRule]) {
        if let Some(t) = &mut self.trace {
            t.extend(rules.iter().map(|r| Rule::Match(*r)));
        }
    }

    fn require_wf(&self, ty: &Type, span: Span) -> Result<(), Diagnostic> {
        if self.ctx.is_well_formed(ty) {
            return Ok(());
        }
        let unknown = crate::syntax::free_type_vars(ty).into_iter().find(|v| !self.ctx.declares_type_var(v));
        let d = Diagnostic::new(DiagnosticKind::UnboundName, span).with_synthesized(ty.clone());
        Err(match unknown {
            Some(v) => d.with_name(v),
            None => d.with_name(alloc::format!("{ty}")).with_detail("constructor arity does not match its declaration"),
        })
    }

    fn mismatch(&mut self, expected: &Type, term: &Term) -> Diagnostic {
        let mut d = Diagnostic::new(DiagnosticKind::TypeMismatch, term.span).with_expected(expected.clone());
        // Best effort: report what the term would synthesize on its own.
        let saved = self.trace.take();
        if let Ok(out) = self.infer(&Mode::Synthesize, term) {
            d.synthesized = Some(out.ty);
        }
        self.trace = saved;
        d
    }

    fn infer(&mut self, mode: &Mode, term: &Term) -> Result<InferOutcome, Diagnostic> {
        let plain = |ty: Type, elaboration: Term| InferOutcome { ty, elaboration, spine: None };
        match &term.kind {
            TermKind::Var(x) => {
                self.note(Rule::Var);
                let ty = match self.ctx.lookup(x) {
                    Some(t) => t.clone(),
                    None => return Err(Diagnostic::new(DiagnosticKind::UnboundName, term.span).with_name(x.clone())),
                };
                if let Mode::Check(expected) = mode {
                    if !alpha_equal(&ty, expected) {
                        return Err(Diagnostic::new(DiagnosticKind::TypeMismatch, term.span)
                            .with_expected(expected.clone())
                            .with_synthesized(ty));
                    }
                }
                Ok(plain(ty, term.clone()))
            }
            TermKind::Lam(x, ann, body) => {
                if self.ctx.lookup(x).is_some() {
                    return Err(Diagnostic::internal(
                        term.span,
                        alloc::format!("binder `{x}` shadows a name in scope"),
                    ));
                }
                let (dom, body_mode) = match (ann, mode) {
                    (Some(a), Mode::Synthesize) => {
                        self.note(Rule::AAbs);
                        self.require_wf(a, term.span)?;
                        (a.clone(), Mode::Synthesize)
                    }
                    (Some(a), Mode::Check(expected)) => {
                        self.note(Rule::AAbs);
                        self.require_wf(a, term.span)?;
                        match expected {
                            Type::Arrow(d, c) if alpha_equal(d, a) => (a.clone(), Mode::Check((**c).clone())),
                            _ => return Err(self.mismatch(expected, term)),
                        }
                    }
                    (None, Mode::Synthesize) => {
                        return Err(Diagnostic::new(DiagnosticKind::UnannotatedLambda, term.span).with_name(x.clone()));
                    }
                    (None, Mode::Check(expected)) => {
                        self.note(Rule::Abs);
                        match expected {
                            Type::Arrow(d, c) => ((**d).clone(), Mode::Check((**c).clone())),
                            _ => {
                                return Err(Diagnostic::new(DiagnosticKind::TypeMismatch, term.span)
                                    .with_expected(expected.clone())
                                    .with_detail("a lambda can only be checked against an arrow type"))
                            }
                        }
                    }
                };
                self.ctx.push(Entry::Term(x.clone(), dom.clone()));
                let out = self.infer(&body_mode, body);
                self.ctx.pop();
                let out = out?;
                Ok(plain(
                    Type::arrow(dom.clone(), out.ty),
                    Term::new(TermKind::Lam(x.clone(), Some(dom), alloc::boxed::Box::new(out.elaboration)), term.span),
                ))
            }
            TermKind::TLam(x, body) => {
                self.note(Rule::TAbs);
                if self.ctx.declares_type_var(x) || self.ctx.arity(x).is_some() {
                    return Err(Diagnostic::internal(
                        term.span,
                        alloc::format!("binder `{x}` shadows a name in scope"),
                    ));
                }
                let body_mode = match mode {
                    Mode::Synthesize => Mode::Synthesize,
                    Mode::Check(Type::Forall(y, b)) => Mode::Check(rename_free(b, y, x)),
                    Mode::Check(expected) => return Err(self.mismatch(expected, term)),
                };
                self.ctx.push(Entry::TyVar(x.clone()));
                let out = self.infer(&body_mode, body);
                self.ctx.pop();
                let out = out?;
                Ok(plain(
                    Type::forall(x.clone(), out.ty),
                    Term::new(TermKind::TLam(x.clone(), alloc::boxed::Box::new(out.elaboration)), term.span),
                ))
            }
            TermKind::TApp(fun, arg) => {
                self.note(Rule::TApp);
                self.require_wf(arg, term.span)?;
                let f = self.infer(&Mode::Synthesize, fun)?;
                let ty = match &f.ty {
                    Type::Forall(x, body) => crate::syntax::subst_one(body, x, arg),
                    other => {
                        return Err(Diagnostic::new(DiagnosticKind::ApplicandNotForall, fun.span)
                            .with_synthesized(other.clone()))
                    }
                };
                if let Mode::Check(expected) = mode {
                    if !alpha_equal(&ty, expected) {
                        return Err(Diagnostic::new(DiagnosticKind::TypeMismatch, term.span)
                            .with_expected(expected.clone())
                            .with_synthesized(ty));
                    }
                }
                Ok(plain(ty, Term::new(TermKind::TApp(alloc::boxed::Box::new(f.elaboration), arg.clone()), term.span)))
            }
            TermKind::App(..) => match mode {
                Mode::Synthesize => self.app_syn(term),
                Mode::Check(expected) => self.app_chk(expected, term),
            },
        }
    }

    fn app_syn(&mut self, term: &Term) -> Result<InferOutcome, Diagnostic> {
        self.note(Rule::AppSyn);
        let st = self.spine(&Prototype::Unknown, term)?;
        if !st.solution.is_identity() {
            return Err(Diagnostic::internal(term.span, "matching against ? produced a solution"));
        }
        let ty = st.deco.strip();
        if !self.ctx.meta_vars_of_term(&st.partial).is_empty() {
            return Err(Diagnostic::new(DiagnosticKind::UnsolvedMetaVariables, term.span).with_synthesized(ty));
        }
        if !self.ctx.meta_vars_of_type(&ty).is_empty() {
            return Err(Diagnostic::internal(
                term.span,
                alloc::format!("synthesized type {ty} mentions meta-variables"),
            ));
        }
        Ok(InferOutcome {
            ty: ty.clone(),
            elaboration: st.partial.clone(),
            spine: Some(SpineTriple { ty, partial: st.partial, solution: st.solution }),
        })
    }

    fn app_chk(&mut self, expected: &Type, term: &Term) -> Result<InferOutcome, Diagnostic> {
        self.note(Rule::AppChk);
        let st = self.spine(&Prototype::Exact(expected.clone()), term)?;
        let ty = st.deco.strip();
        let metas = self.ctx.meta_vars_of_term(&st.partial);
        let solved = st.solution.domain();
        if metas != solved {
            if !solved.is_subset(&metas) {
                return Err(Diagnostic::internal(
                    term.span,
                    "solution binds meta-variables absent from the elaboration",
                ));
            }
            let mut d = Diagnostic::new(DiagnosticKind::UnsolvedMetaVariables, term.span)
                .with_synthesized(ty)
                .with_expected(expected.clone());
            d.contextual_match = st.exact_match.clone();
            return Err(d);
        }
        if self.ctx.meta_vars_of_type(&ty) != solved {
            return Err(Diagnostic::internal(term.span, "partial type and solution disagree on meta-variables"));
        }
        let solved_ty = st.solution.apply(&ty);
        if !alpha_equal(&solved_ty, expected) {
            return Err(Diagnostic::internal(
                term.span,
                alloc::format!("solved type {solved_ty} differs from contextual type {expected}"),
            ));
        }
        Ok(InferOutcome {
            ty: expected.clone(),
            elaboration: st.solution.apply_term(&st.partial),
            spine: Some(SpineTriple { ty, partial: st.partial, solution: st.solution }),
        })
    }

    fn spine(&mut self, proto: &Prototype, term: &Term) -> Result<SpineState, Diagnostic> {
        match &term.kind {
            TermKind::App(fun, arg) => {
                self.note(Rule::SpineApp);
                let st = self.spine(&Prototype::arrow_to(proto.clone()), fun)?;
                self.apply(st, arg, fun.term_arity() + 1)
            }
            TermKind::TApp(fun, arg) => {
                self.note(Rule::SpineTApp);
                if !matches!(proto, Prototype::ArrowTo(_)) {
                    return Err(Diagnostic::internal(
                        term.span,
                        "type application reached the spine without an arrow prototype",
                    ));
                }
                self.require_wf(arg, term.span)?;
                let st = self.spine(proto, fun)?;
                self.spine_tapp(st, arg, term)
            }
            _ => self.head(proto, term),
        }
    }

    fn head(&mut self, proto: &Prototype, term: &Term) -> Result<SpineState, Diagnostic> {
        self.note(Rule::Head);
        if !matches!(proto, Prototype::ArrowTo(_)) {
            return Err(Diagnostic::internal(term.span, "spine head reached without an arrow prototype"));
        }
        let head = self.infer(&Mode::Synthesize, term)?;
        let m = match matcher::match_proto_in(&BTreeSet::new(), &head.ty, proto, &mut self.supply) {
            Ok(m) => m,
            Err(MatchFailure::Arity { ty, .. }) => {
                return Err(Diagnostic::new(DiagnosticKind::ApplicandNotArrow, term.span).with_synthesized(ty))
            }
            Err(MatchFailure::Mismatch { partial, against }) => {
                let mut d = Diagnostic::new(DiagnosticKind::TypeMismatch, term.span)
                    .with_expected(against.clone())
                    .with_synthesized(partial.clone());
                d.contextual_match = Some((partial, against));
                return Err(d);
            }
            Err(MatchFailure::Conflict) => {
                return Err(Diagnostic::internal(term.span, "conflict while matching a head"))
            }
        };
        self.note_match(&m.rules);
        if !m.solution.is_identity() {
            return Err(Diagnostic::internal(term.span, "head match solved meta-variables it was not given"));
        }
        Ok(SpineState {
            shadow: Some(m.decorated.clone()),
            deco: m.decorated,
            partial: head.elaboration,
            solution: Solution::identity(),
            synthetic: Solution::identity(),
            exact_match: m.exact_match,
        })
    }

    fn spine_tapp(&mut self, st: SpineState, arg: &Type, term: &Term) -> Result<SpineState, Diagnostic> {
        let (x, deco, body) = match st.deco.expose() {
            Exposed::Forall(x, r, w) => (x, r, w),
            _ => {
                return Err(
                    Diagnostic::new(DiagnosticKind::ApplicandNotForall, term.span).with_synthesized(st.deco.strip())
                )
            }
        };
        if let Some(r) = &deco {
            if !alpha_equal(r, arg) {
                let mut d = Diagnostic::new(DiagnosticKind::ExplicitArgConflict, term.span)
                    .with_expected(r.clone())
                    .with_synthesized(arg.clone());
                d.contextual_match = st.exact_match.clone();
                return Err(d);
            }
        }
        let explicit = Solution::single(x.clone(), arg.clone(), Provenance::Explicit);
        let new_deco = match subst_decorated_with(&explicit, &body, &mut self.supply) {
            Ok(w) => w,
            Err(_) => {
                return Err(Diagnostic::new(DiagnosticKind::SolutionConflict, term.span)
                    .with_synthesized(arg.clone())
                    .with_expected(Type::var(x))
                    .with_detail("the explicit type argument does not fit the arguments that follow it"))
            }
        };
        let shadow = st.shadow.and_then(|s| match s.expose() {
            Exposed::Forall(y, _, w) if y == x => subst_decorated_with(&explicit, &w, &mut self.supply).ok(),
            _ => None,
        });
        Ok(SpineState {
            deco: new_deco,
            partial: Term::new(TermKind::TApp(alloc::boxed::Box::new(st.partial), arg.clone()), term.span),
            shadow,
            ..st
        })
    }

    fn apply(&mut self, mut st: SpineState, arg: &Term, arg_index: usize) -> Result<SpineState, Diagnostic> {
        loop {
            match st.deco.expose() {
                Exposed::Forall(x, r, w) => {
                    self.note(Rule::Forall);
                    // Quantifiers the matcher never saw keep their source
                    // names; mint a meta for them here.
                    let (x, w) = match w {
                        DecoratedType::Plain(body) if !is_meta_name(&x) => {
                            let meta = self.supply.fresh(&x);
                            let body = rename_free(&body, &x, &meta);
                            (meta, DecoratedType::Plain(body))
                        }
                        w => (x, w),
                    };
                    if let Some(r) = r {
                        let origin = match &st.exact_match {
                            Some((partial, against)) => {
                                Provenance::Contextual { partial: partial.clone(), against: against.clone() }
                            }
                            None => Provenance::Contextual { partial: Type::var(x.clone()), against: r.clone() },
                        };
                        st.solution = st.solution.compose(x.clone(), r, origin);
                    }
                    st.shadow = st.shadow.and_then(|s| match s.expose() {
                        Exposed::Forall(y, _, sw) if y == x => Some(sw),
                        _ => None,
                    });
                    let span = st.partial.span;
                    st.partial = Term::new(TermKind::TApp(alloc::boxed::Box::new(st.partial), Type::var(x)), span);
                    st.deco = w;
                }
                Exposed::Arrow(dom, cod) => {
                    let shadow = st.shadow.take().and_then(|s| match s.expose() {
                        Exposed::Arrow(sd, sc) => Some((sd, sc)),
                        _ => None,
                    });
                    let expected = st.solution.apply(&dom);
                    let unsolved = self.ctx.meta_vars_of_type(&expected);
                    let span = st.partial.span.join(arg.span);
                    if unsolved.is_empty() {
                        self.note(Rule::Chk);
                        let e = match self.infer(&Mode::Check(expected.clone()), arg) {
                            Ok(out) => out.elaboration,
                            Err(d) => {
                                return Err(self.explain_expected(
                                    d,
                                    arg,
                                    &dom,
                                    &expected,
                                    &st,
                                    shadow.as_ref().map(|s| &s.0),
                                ))
                            }
                        };
                        st.partial = Term::new(
                            TermKind::App(alloc::boxed::Box::new(st.partial), alloc::boxed::Box::new(e)),
                            span,
                        );
                        st.deco = cod;
                        st.shadow = shadow.map(|s| s.1);
                        return Ok(st);
                    }
                    self.note(Rule::Syn);
                    let out = match self.infer(&Mode::Synthesize, arg) {
                        Ok(out) => out,
                        Err(mut d) => {
                            if d.span == arg.span && d.expected.is_none() {
                                d.expected = Some(expected.clone());
                            }
                            return Err(d);
                        }
                    };
                    let origin = |_: &str| Provenance::Synthetic {
                        arg_index,
                        partial: expected.clone(),
                        arg_type: out.ty.clone(),
                    };
                    let theta = match matcher::match_first_order_tagged(&unsolved, &expected, &out.ty, &origin) {
                        Some(theta) => theta,
                        None => {
                            let mut d = Diagnostic::new(DiagnosticKind::TypeMismatch, arg.span)
                                .with_expected(expected.clone())
                                .with_synthesized(out.ty.clone());
                            d.synthetic_match =
                                Some(SyntheticMatch { partial: expected.clone(), against: out.ty.clone(), arg_index });
                            self.attach_contextual(&mut d, &expected, &st);
                            return Err(d);
                        }
                    };
                    let new_deco = match subst_decorated_with(&theta, &cod, &mut self.supply) {
                        Ok(w) => w,
                        Err(_) => {
                            let mut d = Diagnostic::new(DiagnosticKind::SolutionConflict, arg.span)
                                .with_expected(expected.clone())
                                .with_synthesized(out.ty.clone())
                                .with_detail(
                                    "a type argument solved from this argument does not fit the arguments that follow",
                                );
                            d.synthetic_match =
                                Some(SyntheticMatch { partial: expected.clone(), against: out.ty.clone(), arg_index });
                            d.contextual_match = st.exact_match.clone();
                            return Err(d);
                        }
                    };
                    let unsticks = has_stuck_in(&cod, &theta);
                    st.shadow = if unsticks { None } else { shadow.map(|s| s.1) };
                    for (k, b) in theta.iter() {
                        st.synthetic.insert(k.clone(), b.ty.clone(), b.origin.clone());
                    }
                    let applicand = theta.apply_term(&st.partial);
                    st.partial = Term::new(
                        TermKind::App(alloc::boxed::Box::new(applicand), alloc::boxed::Box::new(out.elaboration)),
                        span,
                    );
                    st.deco = new_deco;
                    return Ok(st);
                }
                Exposed::Other => {
                    return Err(Diagnostic::new(DiagnosticKind::ApplicandNotArrow, st.partial.span)
                        .with_synthesized(st.deco.strip()));
                }
            }
        }
    }

    /// Attach to a failed argument check where its expected type came from.
    fn explain_expected(
        &self,
        mut d: Diagnostic,
        arg: &Term,
        dom: &Type,
        expected: &Type,
        st: &SpineState,
        shadow_dom: Option<&Type>,
    ) -> Diagnostic {
        if d.span != arg.span || d.kind != DiagnosticKind::TypeMismatch {
            return d;
        }
        let shown = shadow_dom.unwrap_or(dom);
        if !alpha_equal(shown, expected) {
            d.expected = Some(shown.clone());
            d.expected_solved = Some(expected.clone());
        }
        let metas = self.ctx.meta_vars_of_type(shown);
        if let Some(b) = metas.iter().find_map(|m| st.solution.binding(m)) {
            if let Provenance::Contextual { partial, against } = &b.origin {
                d.contextual_match = Some((partial.clone(), against.clone()));
            }
        }
        if let Some(b) = metas.iter().find_map(|m| st.synthetic.binding(m)) {
            if let Provenance::Synthetic { arg_index, partial, arg_type } = &b.origin {
                d.synthetic_match =
                    Some(SyntheticMatch { partial: partial.clone(), against: arg_type.clone(), arg_index: *arg_index });
            }
        }
        d
    }

    fn attach_contextual(&self, d: &mut Diagnostic, expected: &Type, st: &SpineState) {
        let metas = self.ctx.meta_vars_of_type(expected);
        let contextual = st.solution.iter().any(|(k, _)| metas.contains(k)) || !st.solution.is_identity();
        if contextual {
            d.contextual_match = st.exact_match.clone();
        }
    }
}

fn has_stuck_in(deco: &DecoratedType, solution: &Solution) -> bool {
    match deco {
        DecoratedType::Plain(_) => false,
        DecoratedType::Arrow(_, w) | DecoratedType::Forall(_, _, w) => has_stuck_in(w, solution),
        DecoratedType::Stuck(x, _) => solution.contains(x),
    }
}

#[cfg(test)]
mod tests;
