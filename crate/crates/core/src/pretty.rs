//! ASCII rendering that the program parser reads back.
//!
//! `Sum A B` renders as the infix `(A + B)`. Meta-variables render as
//! `?X`, dropping the counter that keeps them distinct internally.

use alloc::string::String;
use core::fmt::{self, Display, Formatter, Write};

use crate::syntax::fresh::display_name;
use crate::syntax::{DecoratedType, Prototype, Term, TermKind, Type};

const ARROW_BODY: u8 = 0;
const ARROW_DOM: u8 = 1;
const CON_ARG: u8 = 2;

fn write_type(f: &mut dyn Write, ty: &Type, prec: u8) -> fmt::Result {
    match ty {
        Type::Var(x) => f.write_str(display_name(x)),
        Type::Con(c, args) if args.is_empty() => f.write_str(c),
        Type::Con(c, args) if c == "Sum" && args.len() == 2 => {
            f.write_char('(')?;
            write_type(f, &args[0], ARROW_DOM)?;
            f.write_str(" + ")?;
            write_type(f, &args[1], ARROW_DOM)?;
            f.write_char(')')
        }
        Type::Con(c, args) => {
            let parens = prec >= CON_ARG;
            if parens {
                f.write_char('(')?;
            }
            f.write_str(c)?;
            for a in args {
                f.write_char(' ')?;
                write_type(f, a, CON_ARG)?;
            }
            if parens {
                f.write_char(')')?;
            }
            Ok(())
        }
        Type::Arrow(a, b) => {
            let parens = prec >= ARROW_DOM;
            if parens {
                f.write_char('(')?;
            }
            write_type(f, a, ARROW_DOM)?;
            f.write_str(" -> ")?;
            write_type(f, b, ARROW_BODY)?;
            if parens {
                f.write_char(')')?;
            }
            Ok(())
        }
        Type::Forall(x, b) => {
            let parens = prec >= ARROW_DOM;
            if parens {
                f.write_char('(')?;
            }
            write!(f, "forall {}. ", display_name(x))?;
            write_type(f, b, ARROW_BODY)?;
            if parens {
                f.write_char(')')?;
            }
            Ok(())
        }
    }
}

const TERM_TOP: u8 = 0;
const TERM_FUN: u8 = 1;
const TERM_ARG: u8 = 2;

fn write_term(f: &mut dyn Write, term: &Term, prec: u8) -> fmt::Result {
    match &term.kind {
        TermKind::Var(x) => f.write_str(x),
        TermKind::Lam(..) | TermKind::TLam(..) => {
            let parens = prec > TERM_TOP;
            if parens {
                f.write_char('(')?;
            }
            match &term.kind {
                TermKind::Lam(x, Some(t), body) => {
                    write!(f, "\\{x}:")?;
                    write_type(f, t, ARROW_BODY)?;
                    f.write_str(". ")?;
                    write_term(f, body, TERM_TOP)?;
                }
                TermKind::Lam(x, None, body) => {
                    write!(f, "\\{x}. ")?;
                    write_term(f, body, TERM_TOP)?;
                }
                TermKind::TLam(x, body) => {
                    write!(f, "/\\{}. ", display_name(x))?;
                    write_term(f, body, TERM_TOP)?;
                }
                _ => unreachable!(),
            }
            if parens {
                f.write_char(')')?;
            }
            Ok(())
        }
        TermKind::App(..) | TermKind::TApp(..) => {
            let parens = prec >= TERM_ARG;
            if parens {
                f.write_char('(')?;
            }
            match &term.kind {
                TermKind::App(fun, arg) => {
                    write_term(f, fun, TERM_FUN)?;
                    f.write_char(' ')?;
                    write_term(f, arg, TERM_ARG)?;
                }
                TermKind::TApp(fun, ty) => {
                    write_term(f, fun, TERM_FUN)?;
                    f.write_str(" [")?;
                    write_type(f, ty, ARROW_BODY)?;
                    f.write_char(']')?;
                }
                _ => unreachable!(),
            }
            if parens {
                f.write_char(')')?;
            }
            Ok(())
        }
    }
}

fn write_proto(f: &mut dyn Write, proto: &Prototype, prec: u8) -> fmt::Result {
    match proto {
        Prototype::Unknown => f.write_char('?'),
        Prototype::Exact(t) => write_type(f, t, prec),
        Prototype::ArrowTo(rest) => {
            let parens = prec >= ARROW_DOM;
            if parens {
                f.write_char('(')?;
            }
            f.write_str("? -> ")?;
            write_proto(f, rest, ARROW_BODY)?;
            if parens {
                f.write_char(')')?;
            }
            Ok(())
        }
    }
}

fn write_decorated(f: &mut dyn Write, deco: &DecoratedType, prec: u8) -> fmt::Result {
    match deco {
        DecoratedType::Plain(t) => write_type(f, t, prec),
        DecoratedType::Stuck(x, p) => {
            write!(f, "({}, ", display_name(x))?;
            write_proto(f, p, ARROW_BODY)?;
            f.write_char(')')
        }
        DecoratedType::Arrow(s, w) => {
            let parens = prec >= ARROW_DOM;
            if parens {
                f.write_char('(')?;
            }
            write_type(f, s, ARROW_DOM)?;
            f.write_str(" -> ")?;
            write_decorated(f, w, ARROW_BODY)?;
            if parens {
                f.write_char(')')?;
            }
            Ok(())
        }
        DecoratedType::Forall(x, r, w) => {
            let parens = prec >= ARROW_DOM;
            if parens {
                f.write_char('(')?;
            }
            let x = display_name(x);
            write!(f, "forall {x}=")?;
            match r {
                Some(r) => write_type(f, r, ARROW_DOM)?,
                None => f.write_str(x)?,
            }
            f.write_str(". ")?;
            write_decorated(f, w, ARROW_BODY)?;
            if parens {
                f.write_char(')')?;
            }
            Ok(())
        }
    }
}

impl Display for Type {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_type(f, self, ARROW_BODY)
    }
}

impl Display for Term {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_term(f, self, TERM_TOP)
    }
}

impl Display for Prototype {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_proto(f, self, ARROW_BODY)
    }
}

impl Display for DecoratedType {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_decorated(f, self, ARROW_BODY)
    }
}

pub fn pretty_type(ty: &Type) -> String {
    alloc::format!("{ty}")
}

pub fn pretty_term(term: &Term) -> String {
    alloc::format!("{term}")
}

pub fn pretty_decorated(deco: &DecoratedType) -> String {
    alloc::format!("{deco}")
}

pub fn pretty_proto(proto: &Prototype) -> String {
    alloc::format!("{proto}")
}
