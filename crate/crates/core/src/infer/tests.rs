use super::*;
use crate::check::check_internal;
use crate::syntax::{alpha_equal_term, equivalent_decorated};
use alloc::format;
use alloc::vec;

fn nat() -> Type {
    Type::base("Nat")
}

fn x() -> Type {
    Type::var("X")
}

fn y() -> Type {
    Type::var("Y")
}

fn pair(a: Type, b: Type) -> Type {
    Type::con("Pair", vec![a, b])
}

fn sum(a: Type, b: Type) -> Type {
    Type::con("Sum", vec![a, b])
}

fn nn() -> Type {
    Type::arrow(nat(), nat())
}

fn ctx() -> Context {
    Context::new()
        .with_con("Nat", 0)
        .with_con("B", 0)
        .with_con("Pair", 2)
        .with_con("Sum", 2)
        .with("pair", Type::forall("X", Type::forall("Y", Type::arrow(x(), Type::arrow(y(), pair(x(), y()))))))
        .with("z", nat())
        .with("rapp", Type::forall("X", Type::forall("Y", Type::arrow(x(), Type::arrow(Type::arrow(x(), y()), y())))))
        .with("right", Type::forall("X", Type::forall("Y", Type::arrow(y(), sum(x(), y())))))
        .with("bot", Type::forall("X", x()))
        .with("id", Type::forall("X", Type::arrow(x(), x())))
        .with("suc", nn())
        .with("f", Type::forall("X", Type::forall("Y", Type::arrow(y(), x()))))
}

fn pair_lambda_term() -> Term {
    Term::app(Term::app(Term::var("pair"), Term::bare_lam("x", Term::var("x"))), Term::var("z"))
}

fn pair_lambda_elab() -> Term {
    Term::app(
        Term::app(Term::tapp(Term::tapp(Term::var("pair"), nn()), nat()), Term::lam("x", nat(), Term::var("x"))),
        Term::var("z"),
    )
}

fn sound(mode: &Mode, term: &Term) -> InferOutcome {
    let out = infer(&ctx(), mode, term).unwrap_or_else(|d| panic!("{d}"));
    let t = check_internal(&ctx(), &out.elaboration).unwrap();
    assert!(alpha_equal(&t, &out.ty));
    out
}

#[test]
fn pair_lambda_checks_and_elaborates() {
    let out = sound(&Mode::Check(pair(nn(), nat())), &pair_lambda_term());
    assert!(alpha_equal_term(&out.elaboration, &pair_lambda_elab()));
    assert_eq!(format!("{}", out.elaboration), "pair [Nat -> Nat] [Nat] (\\x:Nat. x) z");
}

#[test]
fn rapp_checks() {
    let ctx = ctx().with("x", nat());
    let t = Term::app(Term::app(Term::var("rapp"), Term::var("x")), Term::bare_lam("y", Term::var("y")));
    let out = infer(&ctx, &Mode::Check(nat()), &t).unwrap();
    assert_eq!(format!("{}", out.elaboration), "rapp [Nat] [Nat] x (\\y:Nat. y)");
}

#[test]
fn unannotated_lambda_in_synthesis() {
    let d = infer(&ctx(), &Mode::Synthesize, &pair_lambda_term()).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::UnannotatedLambda);
    assert_eq!(format!("{}", d.expected.unwrap()), "?X");
}

#[test]
fn unsolved_metas_in_synthesis() {
    let d = infer(&ctx(), &Mode::Synthesize, &Term::app(Term::var("right"), Term::var("z"))).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::UnsolvedMetaVariables);
    assert_eq!(format!("{}", d.synthesized.unwrap()), "(?X + Nat)");
}

#[test]
fn bot_is_not_an_arrow() {
    let t = Term::app(Term::var("bot"), Term::var("z"));
    for mode in [Mode::Synthesize, Mode::Check(nat()), Mode::Check(nn())] {
        let d = infer(&ctx(), &mode, &t).unwrap_err();
        assert_eq!(d.kind, DiagnosticKind::ApplicandNotArrow, "{mode:?}");
    }
}

#[test]
fn contextual_match_on_mismatch() {
    let t = Term::app(Term::app(Term::var("pair"), Term::lam("x", Type::base("B"), Term::var("x"))), Term::var("z"));
    let d = infer(&ctx(), &Mode::Check(pair(nn(), nat())), &t).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::TypeMismatch);
    let (p, a) = d.contextual_match.clone().unwrap();
    assert_eq!(format!("{p}"), "Pair ?X ?Y");
    assert_eq!(a, pair(nn(), nat()));
    let text = format!("{d}");
    assert!(text.contains("contextual match: Pair ?X ?Y := Pair (Nat -> Nat) Nat"), "{text}");
}

#[test]
fn explicit_arguments_unlock_bot() {
    let a = Term::app(Term::tapp(Term::var("bot"), nn()), Term::var("z"));
    assert_eq!(sound(&Mode::Synthesize, &a).ty, nat());
    let poly = Type::forall("Y", Type::arrow(y(), y()));
    let b = Term::app(Term::tapp(Term::var("bot"), poly), Term::var("z"));
    let out = sound(&Mode::Synthesize, &b);
    assert_eq!(out.ty, nat());
    assert_eq!(format!("{}", out.elaboration), "bot [forall Y. Y -> Y] [Nat] z");
    sound(&Mode::Check(nat()), &b);
}

#[test]
fn synthetic_inference_unsticks() {
    let t = Term::app(Term::app(Term::var("id"), Term::var("suc")), Term::var("z"));
    let out = sound(&Mode::Check(nat()), &t);
    assert_eq!(format!("{}", out.elaboration), "id [Nat -> Nat] suc z");
    let out = sound(&Mode::Synthesize, &t);
    assert_eq!(out.ty, nat());
}

#[test]
fn unsolvable_result_quantifier() {
    let t = Term::app(Term::var("f"), Term::var("z"));
    let d = infer(&ctx(), &Mode::Synthesize, &t).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::UnsolvedMetaVariables);
    let out = sound(&Mode::Check(nn()), &t);
    assert_eq!(format!("{}", out.elaboration), "f [Nat -> Nat] [Nat] z");
}

#[test]
fn explicit_conflict_and_forall() {
    let t = Term::app(Term::tapp(Term::var("id"), Type::base("B")), Term::var("z"));
    let d = infer(&ctx(), &Mode::Check(nat()), &t).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::ExplicitArgConflict);
    let t = Term::app(Term::tapp(Term::tapp(Term::var("id"), nat()), nat()), Term::var("z"));
    let d = infer(&ctx(), &Mode::Synthesize, &t).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::ApplicandNotForall);
    let t = Term::app(Term::tapp(Term::var("id"), nn()), Term::bare_lam("q", Term::var("q")));
    let out = sound(&Mode::Check(nn()), &t);
    assert_eq!(format!("{}", out.elaboration), "id [Nat -> Nat] (\\q:Nat. q)");
}

#[test]
fn synthetic_mismatch_reports_argument() {
    // pair z z checked against a pair whose second slot is not Nat: the
    // first argument settles X contextually, Y is known, z fails to check.
    let t = Term::app(Term::app(Term::var("pair"), Term::var("z")), Term::var("z"));
    let d = infer(&ctx(), &Mode::Check(pair(nat(), Type::base("B"))), &t).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::TypeMismatch);
    assert!(d.contextual_match.is_some());
    // X is solved from z; the lambda's domain B cannot match Nat -> ?Y.
    let t = Term::app(Term::app(Term::var("rapp"), Term::var("z")), Term::lam("b", Type::base("B"), Term::var("b")));
    let d = infer(&ctx(), &Mode::Synthesize, &t).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::TypeMismatch);
    let m = d.synthetic_match.unwrap();
    assert_eq!(m.arg_index, 2);
    assert_eq!(format!("{}", m.partial), "Nat -> ?Y");
}

#[test]
fn spine_head_golden() {
    let proto = Prototype::arrows(2, Prototype::Exact(nat()));
    let st = spine_infer(&ctx(), &proto, &Term::var("id")).unwrap();
    assert!(st.solution.is_identity());
    assert_eq!(format!("{}", st.deco), "forall ?X=?X. ?X -> (?X, ? -> Nat)");
    let st = spine_infer(&ctx(), &Prototype::arrow_to(Prototype::Unknown), &Term::var("suc")).unwrap();
    assert!(equivalent_decorated(&st.deco, &DecoratedType::arrow(nat(), DecoratedType::Plain(nat()))));
}

#[test]
fn spine_pair_lambda_partial() {
    let st = spine_infer(&ctx(), &Prototype::Exact(pair(nn(), nat())), &pair_lambda_term()).unwrap();
    let ty = st.deco.strip();
    let metas = ctx().meta_vars_of_type(&ty);
    assert_eq!(metas, st.solution.domain());
    assert!(alpha_equal(&st.solution.apply(&ty), &pair(nn(), nat())));
    assert!(ctx().is_partial_elaboration(&st.partial));
}

#[test]
fn apply_arg_unsticks_identity() {
    let deco = DecoratedType::arrow(x(), DecoratedType::stuck("X", Prototype::arrow_to(Prototype::Exact(nat()))));
    let partial = Term::tapp(Term::var("id"), x());
    let (w, p, s) = apply_arg(&ctx(), &partial, &deco, &Solution::identity(), &Term::var("suc"), 1).unwrap();
    assert!(equivalent_decorated(&w, &DecoratedType::Plain(nn())));
    assert_eq!(format!("{p}"), "id [Nat -> Nat] suc");
    assert!(s.is_identity());
    let plain = DecoratedType::Plain(nat());
    let d = apply_arg(&ctx(), &Term::var("z"), &plain, &Solution::identity(), &Term::var("z"), 1).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::ApplicandNotArrow);
}

#[test]
fn internal_terms_synthesize_themselves() {
    for e in [pair_lambda_elab(), Term::tlam("A", Term::lam("a", Type::var("A"), Term::var("a")))] {
        let out = sound(&Mode::Synthesize, &e);
        assert!(alpha_equal_term(&out.elaboration, &e));
        let again = sound(&Mode::Check(out.ty.clone()), &e);
        assert!(alpha_equal_term(&again.elaboration, &e));
    }
}

#[test]
fn trace_names_rules() {
    let (r, trace) = infer_traced(&ctx(), &Mode::Check(pair(nn(), nat())), &pair_lambda_term());
    assert!(r.is_ok());
    let names: Vec<&str> = trace.iter().map(|r| r.name()).collect();
    assert_eq!(names[0], "AppChk");
    for n in ["?App", "?Head", "MForall", "MType", "?Forall", "?Chk", "Abs"] {
        assert!(names.contains(&n), "{n} missing from {names:?}");
    }
}

#[test]
fn unbound_names() {
    let d = infer(&ctx(), &Mode::Synthesize, &Term::var("nope")).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::UnboundName);
    let d = infer(&ctx(), &Mode::Synthesize, &Term::tapp(Term::var("id"), Type::var("Q"))).unwrap_err();
    assert_eq!(d.kind, DiagnosticKind::UnboundName);
}
