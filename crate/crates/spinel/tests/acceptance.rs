//! One PASS/FAIL line per acceptance criterion.
//!
//! Runs without the libtest harness so the lines show up in plain
//! `cargo test` output. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use spinel::parse::{parse_in, parse_term, Scope};
use spinel::{Options, Session};
use spinel_core::check::check_internal;
use spinel_core::infer::{infer, DiagnosticKind, Mode};
use spinel_core::matcher::{applicable_rules, match_proto, MatchRule};
use spinel_core::oracle::corpus::{standard_context, well_typed_terms};
use spinel_core::oracle::{
    check_weak_completeness_conditions, discharge, enumerate_erasures, search_spec, verify_spec, SpecTriple,
};
use spinel_core::{
    alpha_equal, alpha_equal_decorated, alpha_equal_term, deco_arity, equivalent_decorated, proto_arity,
    subst_decorated, Context, DecoratedType, Entry, Prototype, Solution, Term, Type,
};

const CORPUS_SIZE: usize = 6;
const CORPUS_CAP: usize = 1500;

type Verdict = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Verdict + 'a>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

const PRELUDE: &str = "type Nat/0. type B/0. type Pair/2. type Sum/2.\n\
    assume pair : forall X. forall Y. X -> Y -> Pair X Y.\n\
    assume right : forall X. forall Y. Y -> X + Y.\n\
    assume bot : forall X. X.\n\
    assume rapp : forall X. forall Y. X -> (X -> Y) -> Y.\n\
    assume z : Nat.\n";

/// Run one goal after the prelude through the same path as `spinel run`.
fn goal(src: &str) -> spinel::GoalReport {
    let mut s = Session::new(Options { spec_verify: true });
    s.feed(PRELUDE).expect("prelude parses");
    let mut reports = s.feed(src).unwrap_or_else(|e| panic!("{src}: {e}"));
    assert_eq!(reports.len(), 1);
    reports.pop().unwrap()
}

fn elaborates_to(src: &str, want: &str) -> Result<(), String> {
    let r = goal(src);
    let ok = r.outcome.as_ref().map_err(|d| format!("{src}: {}", d.kind.name()))?;
    let mut scope = Scope::default();
    parse_in(PRELUDE, &mut scope).expect("prelude parses");
    let want_term = parse_term(want, &scope).expect("golden parses");
    ensure(alpha_equal_term(&ok.elaboration, &want_term), || format!("{src}: got {}", ok.elaboration))?;
    ensure(r.spec.as_ref().is_some_and(|s| s.accepted), || format!("{src}: spec verification rejected"))
}

fn fails_with(src: &str, kind: DiagnosticKind) -> Result<spinel_core::infer::Diagnostic, String> {
    match goal(src).outcome {
        Ok(s) => Err(format!("{src}: unexpectedly typed at {}", s.ty)),
        Err(d) if d.kind == kind => Ok(d),
        Err(d) => Err(format!("{src}: {} instead of {}", d.kind.name(), kind.name())),
    }
}

fn criterion_1() -> Verdict {
    elaborates_to("check pair (\\x. x) z : Pair (Nat -> Nat) Nat.", "pair [Nat -> Nat] [Nat] (\\x:Nat. x) z")?;
    Ok("pair [Nat -> Nat] [Nat] (\\x:Nat. x) z".into())
}

fn criterion_2() -> Verdict {
    fails_with("synth pair (\\x. x) z.", DiagnosticKind::UnannotatedLambda)?;
    let d = fails_with("synth right z.", DiagnosticKind::UnsolvedMetaVariables)?;
    let shown = d.to_string();
    ensure(shown.contains("(?X + Nat)"), || format!("right z: {shown}"))?;
    fails_with("synth bot z.", DiagnosticKind::ApplicandNotArrow)?;
    let d = fails_with("check pair (\\x:B. x) z : Pair (Nat -> Nat) Nat.", DiagnosticKind::TypeMismatch)?;
    let (p, a) = d.contextual_match.as_ref().ok_or("no contextual match")?;
    let (p, a) = (p.to_string(), a.to_string());
    ensure(p == "Pair ?X ?Y" && a == "Pair (Nat -> Nat) Nat", || format!("contextual match {p} := {a}"))?;
    for src in ["synth bot [Nat -> Nat] z.", "synth bot [forall Y. Y -> Y] z."] {
        let r = goal(src);
        ensure(r.is_ok(), || format!("{src} failed"))?;
    }
    Ok("(a)-(e) as expected".into())
}

fn criterion_3() -> Verdict {
    elaborates_to("assume x : Nat. check rapp x (\\y. y) : Nat.", "rapp [Nat] [Nat] x (\\y:Nat. y)")?;
    Ok("rapp [Nat] [Nat] x (\\y:Nat. y)".into())
}

fn criterion_4() -> Verdict {
    let nat = || Type::base("Nat");
    let v = Type::var;
    let none = BTreeSet::new();
    let k = Type::forall("X", Type::forall("Y", Type::arrow(v("X"), Type::arrow(v("Y"), v("X")))));
    let p = Prototype::arrows(2, Prototype::Exact(nat()));
    let m = match_proto(&none, &k, &p).ok_or("K does not match")?;
    let want = DecoratedType::forall(
        "X",
        Some(nat()),
        DecoratedType::forall(
            "Y",
            None,
            DecoratedType::arrow(v("X"), DecoratedType::arrow(v("Y"), DecoratedType::Plain(v("X")))),
        ),
    );
    ensure(m.solution.is_identity() && alpha_equal_decorated(&m.decorated, &want), || format!("K: {}", m.decorated))?;

    let id = Type::forall("X", Type::arrow(v("X"), v("X")));
    let m = match_proto(&none, &id, &p).ok_or("id does not match")?;
    let stuck = DecoratedType::arrow(v("X"), DecoratedType::stuck("X", Prototype::arrows(1, Prototype::Exact(nat()))));
    let want = DecoratedType::forall("X", None, stuck.clone());
    ensure(m.solution.is_identity() && alpha_equal_decorated(&m.decorated, &want), || format!("id: {}", m.decorated))?;

    let good = Solution::from_iter([("X".to_string(), Type::arrow(nat(), nat()))]);
    let out = subst_decorated(&good, &stuck).ok_or("substitution undefined")?;
    let want = DecoratedType::Plain(Type::arrow(Type::arrow(nat(), nat()), Type::arrow(nat(), nat())));
    ensure(equivalent_decorated(&out, &want), || format!("subst: {out}"))?;
    let bad = Solution::from_iter([("X".to_string(), nat())]);
    ensure(subst_decorated(&bad, &stuck).is_none(), || "[Nat/X] should be undefined".into())?;
    Ok("three goldens".into())
}

/// `type` and `assume` lines declaring everything in `ctx`.
fn prelude_of(ctx: &Context) -> String {
    let mut src = String::new();
    for (c, n) in ctx.signature() {
        src.push_str(&format!("type {c}/{n}.\n"));
    }
    for e in ctx.entries() {
        if let Entry::Term(x, t) = e {
            src.push_str(&format!("assume {x} : {t}.\n"));
        }
    }
    src
}

struct Corpus {
    ctx: Context,
    terms: Vec<(Term, Type)>,
}

impl Corpus {
    fn build() -> Corpus {
        let ctx = standard_context();
        let terms = well_typed_terms(&ctx, CORPUS_SIZE, CORPUS_CAP);
        Corpus { ctx, terms }
    }
}

fn criterion_5(c: &Corpus) -> Verdict {
    // External terms reach the engine through the printer and the parser.
    let mut scope = Scope::default();
    parse_in(&prelude_of(&c.ctx), &mut scope).map_err(|e| format!("prelude: {e}"))?;
    let mut successes = 0usize;
    for (e, ty) in &c.terms {
        for t in enumerate_erasures(e) {
            let printed = t.to_string();
            let parsed = parse_term(&printed, &scope).map_err(|err| format!("{printed}: {err}"))?;
            ensure(alpha_equal_term(&parsed, &t), || format!("{printed} does not read back"))?;
            for mode in [Mode::Synthesize, Mode::Check(ty.clone())] {
                let Ok(out) = infer(&c.ctx, &mode, &parsed) else { continue };
                let got = check_internal(&c.ctx, &out.elaboration).map_err(|err| format!("{printed}: {err}"))?;
                ensure(alpha_equal(&got, &out.ty), || format!("{printed}: checker says {got}, engine {}", out.ty))?;
                successes += 1;
            }
        }
    }
    ensure(successes >= 10_000, || format!("only {successes} successes"))?;
    Ok(format!("{successes} elaborations typecheck"))
}

fn criterion_6(c: &Corpus) -> Verdict {
    let mut replayed = 0usize;
    for (e, ty) in &c.terms {
        let out = infer(&c.ctx, &Mode::Synthesize, e).map_err(|d| format!("{e}: {}", d.kind.name()))?;
        ensure(alpha_equal_term(&out.elaboration, e) && alpha_equal(&out.ty, ty), || {
            format!("{e} elaborates to {}", out.elaboration)
        })?;
        for t in enumerate_erasures(e) {
            let Ok(syn) = infer(&c.ctx, &Mode::Synthesize, &t) else { continue };
            let chk = infer(&c.ctx, &Mode::Check(syn.ty.clone()), &t)
                .map_err(|d| format!("{t}: check fails: {}", d.kind.name()))?;
            ensure(alpha_equal_term(&chk.elaboration, &syn.elaboration), || format!("{t}: modes disagree"))?;
            replayed += 1;
        }
    }
    Ok(format!("{} internal terms reproduce themselves, {replayed} syntheses replay in check mode", c.terms.len()))
}

/// Types of exactly `n` nodes over `Nat/0` and `Pair/2`.
fn types_of_size(n: usize, memo: &mut Vec<Vec<Type>>) -> Vec<Type> {
    if let Some(done) = memo.get(n) {
        return done.clone();
    }
    let mut out = Vec::new();
    if n == 1 {
        out.extend(["X", "Y", "A"].map(Type::var));
        out.push(Type::base("Nat"));
    } else {
        for b in types_of_size(n - 1, memo) {
            out.push(Type::forall("X", b.clone()));
            out.push(Type::forall("Z", b));
        }
        for k in 1..n - 1 {
            for l in types_of_size(k, memo) {
                for r in types_of_size(n - 1 - k, memo) {
                    out.push(Type::arrow(l.clone(), r.clone()));
                    out.push(Type::con("Pair", vec![l.clone(), r]));
                }
            }
        }
    }
    while memo.len() <= n {
        memo.push(Vec::new());
    }
    memo[n] = out.clone();
    out
}

fn protos_of_size(n: usize, memo: &mut Vec<Vec<Type>>) -> Vec<Prototype> {
    let mut out: Vec<Prototype> = types_of_size(n, memo).into_iter().map(Prototype::Exact).collect();
    if n == 1 {
        out.push(Prototype::Unknown);
    } else {
        out.extend(protos_of_size(n - 1, memo).into_iter().map(Prototype::arrow_to));
    }
    out
}

/// The rules the matcher must take, found by looking only at the shape of
/// each goal. Fails if some goal admits two rules.
fn audit(metas: &mut BTreeSet<String>, ty: &Type, proto: &Prototype, path: &mut Vec<MatchRule>) -> Result<(), String> {
    let rules = applicable_rules(metas, ty, proto);
    if rules.len() > 1 {
        return Err(format!("{ty} against {proto}: {rules:?}"));
    }
    let Some(&rule) = rules.first() else { return Ok(()) };
    path.push(rule);
    match (rule, ty, proto) {
        (MatchRule::MArr, Type::Arrow(_, cod), Prototype::ArrowTo(rest)) => audit(metas, cod, rest, path),
        (MatchRule::MForall, Type::Forall(x, body), _) => {
            let fresh = metas.insert(x.clone());
            let r = audit(metas, body, proto, path);
            if fresh {
                metas.remove(x);
            }
            r
        }
        _ => Ok(()),
    }
}

fn criterion_7() -> Verdict {
    const MAX: usize = 7;
    let metas: BTreeSet<String> = ["X", "Y"].into_iter().map(String::from).collect();
    let mut memo = Vec::new();
    let mut pairs = 0usize;
    let mut matched = 0usize;
    for ts in 1..MAX {
        for ty in types_of_size(ts, &mut memo) {
            for ps in 1..=MAX - ts {
                for p in protos_of_size(ps, &mut memo) {
                    pairs += 1;
                    let first = match_proto(&metas, &ty, &p);
                    ensure(first == match_proto(&metas, &ty, &p), || format!("{ty} against {p}: not deterministic"))?;
                    let mut path = Vec::new();
                    audit(&mut metas.clone(), &ty, &p, &mut path)?;
                    let Some(m) = first else { continue };
                    matched += 1;
                    ensure(deco_arity(&m.decorated) <= proto_arity(&p), || format!("{ty} against {p}: arity"))?;
                    ensure(m.solution.domain().is_subset(&metas), || format!("{ty} against {p}: domain"))?;
                    ensure(m.rules == path, || format!("{ty} against {p}: rules {:?} vs {path:?}", m.rules))?;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, {matched} matches"))
}

fn criterion_8(c: &Corpus) -> Verdict {
    let mut verified = 0usize;
    let mut searched = 0usize;
    let mut derived = 0usize;
    for (e, ty) in &c.terms {
        for t in enumerate_erasures(e).into_iter().filter(Term::is_term_app) {
            for ctx_ty in [None, Some(ty.clone())] {
                let mode = ctx_ty.clone().map_or(Mode::Synthesize, Mode::Check);
                let algo = infer(&c.ctx, &mode, &t);
                if let Ok(out) = &algo {
                    let s = out.spine.clone().ok_or_else(|| format!("{t}: no spine"))?;
                    let claimed = SpecTriple { ty: s.ty, partial: s.partial, solution: s.solution };
                    ensure(verify_spec(&c.ctx, ctx_ty.as_ref(), &t, &claimed).accepted, || {
                        format!("{t} under {ctx_ty:?}: rules reject the engine's result")
                    })?;
                    verified += 1;
                }
                searched += 1;
                for triple in search_spec(&c.ctx, ctx_ty.as_ref(), &t, None) {
                    let Some((_, fin)) = discharge(&c.ctx, ctx_ty.as_ref(), &triple) else { continue };
                    derived += 1;
                    match &algo {
                        Ok(out) => ensure(alpha_equal_term(&out.elaboration, &fin), || {
                            format!("{t}: engine {} but rules derive {fin}", out.elaboration)
                        })?,
                        Err(d) => return Err(format!("{t}: rules derive {fin}, engine fails with {}", d.kind.name())),
                    }
                }
            }
        }
    }
    Ok(format!("{verified} engine results verified, {searched} searches, {derived} derivations matched"))
}

fn criterion_9(c: &Corpus) -> Verdict {
    ensure(c.terms.len() >= 1000, || format!("corpus has only {} terms", c.terms.len()))?;
    let mut passing = 0usize;
    let mut extra = 0usize;
    for (e, _) in &c.terms {
        for t in enumerate_erasures(e) {
            let out = infer(&c.ctx, &Mode::Synthesize, &t);
            if check_weak_completeness_conditions(&c.ctx, e, &t) {
                passing += 1;
                let out = out.map_err(|d| format!("{t} (from {e}): {}", d.kind.name()))?;
                ensure(alpha_equal_term(&out.elaboration, e), || format!("{t}: {} instead of {e}", out.elaboration))?;
            } else if out.is_ok_and(|o| alpha_equal_term(&o.elaboration, e)) {
                extra += 1;
            }
        }
    }
    Ok(format!(
        "{} terms, {passing} guideline erasures re-elaborate; {extra} more succeed without meeting the guidelines",
        c.terms.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = Corpus::build();
    let checks: Vec<(&str, Check)> = vec![
        ("1 pair golden", Box::new(criterion_1)),
        ("2 golden diagnostics", Box::new(criterion_2)),
        ("3 rapp golden", Box::new(criterion_3)),
        ("4 matcher goldens", Box::new(criterion_4)),
        ("5 elaborations typecheck", Box::new(|| criterion_5(&corpus))),
        ("6 self-elaboration and check mode", Box::new(|| criterion_6(&corpus))),
        ("7 matcher arity, domain, determinism", Box::new(criterion_7)),
        ("8 engine agrees with the rules", Box::new(|| criterion_8(&corpus))),
        ("9 annotation guidelines suffice", Box::new(|| criterion_9(&corpus))),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({:.1?})", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} of 9 passed in {:.1?}", 9 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
