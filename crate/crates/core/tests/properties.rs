use std::collections::BTreeSet;

use proptest::prelude::*;
use spinel_core::matcher::{match_first_order, match_proto};
use spinel_core::{
    alpha_equal, equivalent_decorated, strip, subst_decorated, subst_type, Context, DecoratedType, Prototype,
    Provenance, Solution, Type,
};

fn ctx() -> Context {
    let mut c = Context::new().with_con("Nat", 0).with_con("Pair", 2);
    c.declare_type_var("A").unwrap();
    c.declare_type_var("B").unwrap();
    c
}

fn ty() -> impl Strategy<Value = Type> {
    let leaf =
        prop_oneof![Just(Type::base("Nat")), prop::sample::select(vec!["A", "B", "X", "Y"]).prop_map(Type::var),];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Type::arrow(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Type::con("Pair", vec![a, b])),
            (prop::sample::select(vec!["X", "Y", "Z", "A"]), inner).prop_map(|(x, b)| Type::forall(x, b)),
        ]
    })
}

/// Types well-formed under `ctx()`.
fn closed_ty() -> impl Strategy<Value = Type> {
    ty().prop_filter("well-formed", |t| ctx().is_well_formed(t))
}

fn solution() -> impl Strategy<Value = Solution> {
    (prop::option::of(closed_ty()), prop::option::of(closed_ty())).prop_map(|(x, y)| {
        let mut s = Solution::identity();
        if let Some(t) = x {
            s = s.compose("X", t, Provenance::Explicit);
        }
        if let Some(t) = y {
            s = s.compose("Y", t, Provenance::Explicit);
        }
        s
    })
}

fn proto() -> impl Strategy<Value = Prototype> {
    (0usize..3, prop::option::of(closed_ty()))
        .prop_map(|(n, base)| Prototype::arrows(n, base.map_or(Prototype::Unknown, Prototype::Exact)))
}

/// Rename every binder, which must leave a type alpha-equal to itself.
fn rename_binders(t: &Type) -> Type {
    match t {
        Type::Var(_) => t.clone(),
        Type::Arrow(a, b) => Type::arrow(rename_binders(a), rename_binders(b)),
        Type::Con(c, args) => Type::con(c.clone(), args.iter().map(rename_binders).collect()),
        Type::Forall(x, b) => {
            let fresh = format!("{x}_r");
            let body = subst_type(&[(x.clone(), Type::var(fresh.clone()))].into_iter().collect(), b);
            Type::forall(fresh, rename_binders(&body))
        }
    }
}

fn metas() -> BTreeSet<String> {
    ["X", "Y"].into_iter().map(String::from).collect()
}

proptest! {
    #[test]
    fn alpha_equal_is_an_equivalence(a in ty(), b in ty(), c in ty()) {
        prop_assert!(alpha_equal(&a, &a));
        prop_assert_eq!(alpha_equal(&a, &b), alpha_equal(&b, &a));
        if alpha_equal(&a, &b) && alpha_equal(&b, &c) {
            prop_assert!(alpha_equal(&a, &c));
        }
        prop_assert!(alpha_equal(&a, &rename_binders(&a)));
    }

    #[test]
    fn substitution_respects_alpha(t in ty(), s in solution()) {
        let r = rename_binders(&t);
        prop_assert!(alpha_equal(&s.apply(&t), &s.apply(&r)));
    }

    #[test]
    fn substitution_removes_its_domain(t in ty(), s in solution()) {
        let c = ctx();
        let before: BTreeSet<String> = c.meta_vars_of_type(&t).difference(&s.domain()).cloned().collect();
        prop_assert_eq!(c.meta_vars_of_type(&s.apply(&t)), before);
    }

    #[test]
    fn matcher_round_trips(t in ty(), p in proto()) {
        if let Some(m) = match_proto(&metas(), &t, &p) {
            prop_assert!(alpha_equal(&strip(&m.decorated), &t));
            prop_assert!(m.solution.domain().is_subset(&metas()));
            prop_assert!(m.decorated.arity() <= p.arity());
            if let Prototype::Exact(s) = &p {
                prop_assert!(alpha_equal(&m.solution.apply(&t), s));
            }
            prop_assert!(equivalent_decorated(&subst_decorated(&Solution::identity(), &m.decorated).unwrap(), &m.decorated));
        }
    }

    #[test]
    fn strip_commutes_with_substitution(t in ty(), p in proto(), s in solution()) {
        let Some(m) = match_proto(&metas(), &t, &p) else { return Ok(()) };
        if let Some(w) = subst_decorated(&s, &m.decorated) {
            prop_assert!(alpha_equal(&strip(&w), &s.apply(&strip(&m.decorated))));
        }
    }

    #[test]
    fn first_order_matching_solves(pattern in ty(), s in solution()) {
        // Only metas that occur free can be solved; restrict to those.
        let live = ctx().meta_vars_of_type(&pattern);
        let s = s.filter(|k, _| live.contains(k));
        let target = s.apply(&pattern);
        if ctx().meta_vars_of_type(&target).is_empty() {
            let found = match_first_order(&live, &pattern, &target);
            prop_assert!(found.is_some(), "{} against {}", pattern, target);
            prop_assert!(alpha_equal(&found.unwrap().apply(&pattern), &target));
        }
    }
}

#[test]
fn identity_substitution_on_stuck() {
    let w = DecoratedType::arrow(
        Type::var("X"),
        DecoratedType::stuck("X", Prototype::arrow_to(Prototype::Exact(Type::base("Nat")))),
    );
    assert_eq!(subst_decorated(&Solution::identity(), &w), Some(w));
}
