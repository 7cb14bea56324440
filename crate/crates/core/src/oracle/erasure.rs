//! Partial erasures of internal terms.
//!
//! Lambda annotations may be dropped anywhere. Type arguments may only be
//! dropped in applicand position, and only from the right end of a run:
//! once a type argument is kept, every type argument to its left in the
//! same run is kept too.

use alloc::vec::Vec;

use crate::syntax::{Term, TermKind};

/// All partial erasures of `e`, without duplicates.
pub fn enumerate_erasures(e: &Term) -> Vec<Term> {
    dedup(erase(e))
}

fn erase(e: &Term) -> Vec<Term> {
    match &e.kind {
        TermKind::Var(_) => alloc::vec![e.clone()],
        TermKind::Lam(x, ann, body) => {
            let mut out = Vec::new();
            for t in erase(body) {
                if let Some(a) = ann {
                    out.push(Term::lam(x.clone(), a.clone(), t.clone()));
                }
                out.push(Term::bare_lam(x.clone(), t));
            }
            out
        }
        TermKind::TLam(x, body) => erase(body).into_iter().map(|t| Term::tlam(x.clone(), t)).collect(),
        TermKind::App(f, a) => {
            let args = erase(a);
            let mut out = Vec::new();
            for t in erase_applicand(f) {
                for t2 in &args {
                    out.push(Term::app(t.clone(), t2.clone()));
                }
            }
            out
        }
        TermKind::TApp(f, s) => erase(f).into_iter().map(|t| Term::tapp(t, s.clone())).collect(),
    }
}

fn erase_applicand(e: &Term) -> Vec<Term> {
    match &e.kind {
        TermKind::TApp(f, s) => {
            let mut out = erase_applicand(f);
            out.extend(erase(f).into_iter().map(|t| Term::tapp(t, s.clone())));
            out
        }
        _ => erase(e),
    }
}

fn dedup(terms: Vec<Term>) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Type;

    fn s(n: &str) -> Type {
        Type::base(n)
    }

    fn tapps(t: Term, args: &[&str]) -> Term {
        args.iter().fold(t, |t, a| Term::tapp(t, s(a)))
    }

    #[test]
    fn runs_erase_right_to_left() {
        // x[S1][S2] y[T1][T2] z, one spine
        let spine = |r1: &[&str], r2: &[&str]| {
            Term::app(tapps(Term::app(tapps(Term::var("x"), r1), Term::var("y")), r2), Term::var("z"))
        };
        let e = spine(&["S1", "S2"], &["T1", "T2"]);
        let all = enumerate_erasures(&e);
        assert!(all.contains(&spine(&[], &["T1"])));
        assert!(!all.contains(&spine(&["S2"], &["T2"])));
        assert!(all.contains(&e));
        assert_eq!(all.len(), 9);
    }

    #[test]
    fn trailing_and_argument_runs_are_kept() {
        let e = Term::app(Term::var("f"), tapps(Term::var("y"), &["T"]));
        assert_eq!(enumerate_erasures(&e), alloc::vec![e.clone()]);
        let e = tapps(Term::var("y"), &["T"]);
        assert_eq!(enumerate_erasures(&e), alloc::vec![e.clone()]);
    }

    #[test]
    fn variable_is_its_only_erasure() {
        assert_eq!(enumerate_erasures(&Term::var("x")), alloc::vec![Term::var("x")]);
    }

    #[test]
    fn annotations_are_optional() {
        let e = Term::lam("a", s("N"), Term::lam("b", s("N"), Term::var("a")));
        assert_eq!(enumerate_erasures(&e).len(), 4);
    }
}
