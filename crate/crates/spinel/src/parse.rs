//! The `.sf` program format.
//!
//! ```text
//! type Pair/2.
//! assume pair : forall X. forall Y. X -> Y -> Pair X Y.
//! check pair (\x. x) z : Pair (Nat -> Nat) Nat.
//! synth z.   -- comments run to the end of the line
//! ```
//!
//! Constructors apply by juxtaposition and must be declared before use
//! with their arity. `A + B` abbreviates `Sum A B` once `Sum/2` is
//! declared. Binders may not shadow a name already in scope.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use spinel_core::{Span, Term, TermKind, Type};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoalKind {
    Check,
    Synth,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Goal {
    pub kind: GoalKind,
    pub term: Term,
    /// Present exactly for `check` goals.
    pub expected: Option<Type>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Con { name: String, arity: usize, span: Span },
    Assume { name: String, ty: Type, span: Span },
    Goal(Goal),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    pub decls: Vec<Decl>,
}

impl Program {
    pub fn goals(&self) -> impl Iterator<Item = &Goal> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Goal(g) => Some(g),
            _ => None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub col: usize,
    pub span: Span,
}

/// Names declared so far. Threaded through successive parses so a REPL
/// session can keep extending it.
#[derive(Clone, Debug, Default)]
pub struct Scope {
    cons: BTreeMap<String, usize>,
    terms: BTreeSet<String>,
}

impl Scope {
    pub fn arity(&self, con: &str) -> Option<usize> {
        self.cons.get(con).copied()
    }

    pub fn is_assumed(&self, name: &str) -> bool {
        self.terms.contains(name)
    }
}

pub fn parse_program(src: &str) -> Result<Program, ParseError> {
    parse_in(src, &mut Scope::default())
}

/// Parse `src` against the declarations already in `scope`, adding any
/// new ones. On error `scope` is left unchanged.
pub fn parse_in(src: &str, scope: &mut Scope) -> Result<Program, ParseError> {
    let tokens = lex(src)?;
    let mut p = Parser { src, tokens, pos: 0, scope: scope.clone(), terms: Vec::new(), tyvars: Vec::new() };
    let mut decls = Vec::new();
    while p.peek() != &Tok::Eof {
        decls.push(p.statement()?);
    }
    *scope = p.scope;
    Ok(Program { decls })
}

/// A single type, for callers that need one outside a statement.
pub fn parse_type(src: &str, scope: &Scope) -> Result<Type, ParseError> {
    let tokens = lex(src)?;
    let mut p = Parser { src, tokens, pos: 0, scope: scope.clone(), terms: Vec::new(), tyvars: Vec::new() };
    let ty = p.ty()?;
    p.expect(&Tok::Eof, "end of input")?;
    Ok(ty)
}

/// A single term, for callers that need one outside a statement.
pub fn parse_term(src: &str, scope: &Scope) -> Result<Term, ParseError> {
    let tokens = lex(src)?;
    let mut p = Parser { src, tokens, pos: 0, scope: scope.clone(), terms: Vec::new(), tyvars: Vec::new() };
    let t = p.term()?;
    p.expect(&Tok::Eof, "end of input")?;
    Ok(t)
}

pub fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rfind('\n').map_or(before.chars().count(), |nl| before[nl + 1..].chars().count()) + 1;
    (line, col)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(usize),
    Forall,
    KwType,
    Assume,
    Check,
    Synth,
    Lambda,
    BigLambda,
    Dot,
    Colon,
    Arrow,
    Plus,
    Slash,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(x) => return write!(f, "`{x}`"),
            Tok::Num(n) => return write!(f, "`{n}`"),
            Tok::Forall => "`forall`",
            Tok::KwType => "`type`",
            Tok::Assume => "`assume`",
            Tok::Check => "`check`",
            Tok::Synth => "`synth`",
            Tok::Lambda => "`\\`",
            Tok::BigLambda => "`/\\`",
            Tok::Dot => "`.`",
            Tok::Colon => "`:`",
            Tok::Arrow => "`->`",
            Tok::Plus => "`+`",
            Tok::Slash => "`/`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::LBrack => "`[`",
            Tok::RBrack => "`]`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

pub(crate) fn error_at(src: &str, span: Span, message: impl Into<String>) -> ParseError {
    let (line, col) = line_col(src, span.start);
    ParseError { message: message.into(), line, col, span }
}

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = |tok: Tok| (tok, Span::new(start, start + 1));
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'-' if bytes.get(i + 1) == Some(&b'-') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((Tok::Arrow, Span::new(i, i + 2)));
                i += 2;
            }
            b'/' if bytes.get(i + 1) == Some(&b'\\') => {
                out.push((Tok::BigLambda, Span::new(i, i + 2)));
                i += 2;
            }
            b'\\' | b'.' | b':' | b'+' | b'/' | b'(' | b')' | b'[' | b']' => {
                out.push(single(match c {
                    b'\\' => Tok::Lambda,
                    b'.' => Tok::Dot,
                    b':' => Tok::Colon,
                    b'+' => Tok::Plus,
                    b'/' => Tok::Slash,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    b'[' => Tok::LBrack,
                    _ => Tok::RBrack,
                }));
                i += 1;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let span = Span::new(start, i);
                let n = src[start..i].parse().map_err(|_| error_at(src, span, "number too large"))?;
                out.push((Tok::Num(n), span));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                    i += 1;
                }
                let word = &src[start..i];
                let tok = match word {
                    "forall" => Tok::Forall,
                    "type" => Tok::KwType,
                    "assume" => Tok::Assume,
                    "check" => Tok::Check,
                    "synth" => Tok::Synth,
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((tok, Span::new(start, i)));
            }
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                return Err(error_at(src, Span::new(i, i + ch.len_utf8()), format!("unexpected character `{ch}`")));
            }
        }
    }
    out.push((Tok::Eof, Span::new(src.len(), src.len())));
    Ok(out)
}

struct Parser<'s> {
    src: &'s str,
    tokens: Vec<(Tok, Span)>,
    pos: usize,
    scope: Scope,
    /// Term binders enclosing the current position.
    terms: Vec<String>,
    /// Type binders enclosing the current position.
    tyvars: Vec<String>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn span(&self) -> Span {
        self.tokens[self.pos].1
    }

    fn prev_end(&self) -> usize {
        if self.pos == 0 {
            0
        } else {
            self.tokens[self.pos - 1].1.end
        }
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.tokens[self.pos].clone();
        if t.0 != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, span: Span, message: impl Into<String>) -> ParseError {
        error_at(self.src, span, message)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        self.error(self.span(), format!("expected {wanted}, found {}", self.peek()))
    }

    fn expect(&mut self, tok: &Tok, wanted: &str) -> Result<Span, ParseError> {
        if self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn ident(&mut self, wanted: &str) -> Result<(String, Span), ParseError> {
        match self.peek().clone() {
            Tok::Ident(x) => {
                let span = self.bump().1;
                Ok((x, span))
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn statement(&mut self) -> Result<Decl, ParseError> {
        let start = self.span().start;
        match self.peek() {
            Tok::KwType => {
                self.bump();
                let (name, nspan) = self.ident("a constructor name")?;
                self.expect(&Tok::Slash, "`/` and an arity")?;
                let arity = match self.bump() {
                    (Tok::Num(n), _) => n,
                    (_, span) => return Err(self.error(span, "expected an arity")),
                };
                self.expect(&Tok::Dot, "`.`")?;
                if self.scope.cons.contains_key(&name) {
                    return Err(self.error(nspan, format!("type constructor `{name}` is already declared")));
                }
                self.scope.cons.insert(name.clone(), arity);
                Ok(Decl::Con { name, arity, span: Span::new(start, self.prev_end()) })
            }
            Tok::Assume => {
                self.bump();
                let (name, nspan) = self.ident("a name")?;
                self.expect(&Tok::Colon, "`:`")?;
                let ty = self.ty()?;
                self.expect(&Tok::Dot, "`.`")?;
                if self.scope.terms.contains(&name) {
                    return Err(self.error(nspan, format!("`{name}` is already assumed")));
                }
                self.scope.terms.insert(name.clone());
                Ok(Decl::Assume { name, ty, span: Span::new(start, self.prev_end()) })
            }
            Tok::Check => {
                self.bump();
                let term = self.term()?;
                self.expect(&Tok::Colon, "`:` and the expected type")?;
                let ty = self.ty()?;
                self.expect(&Tok::Dot, "`.`")?;
                let span = Span::new(start, self.prev_end());
                Ok(Decl::Goal(Goal { kind: GoalKind::Check, term, expected: Some(ty), span }))
            }
            Tok::Synth => {
                self.bump();
                let term = self.term()?;
                self.expect(&Tok::Dot, "`.`")?;
                let span = Span::new(start, self.prev_end());
                Ok(Decl::Goal(Goal { kind: GoalKind::Synth, term, expected: None, span }))
            }
            _ => Err(self.unexpected("`type`, `assume`, `check` or `synth`")),
        }
    }

    fn ty(&mut self) -> Result<Type, ParseError> {
        if self.peek() == &Tok::Forall {
            self.bump();
            let (x, span) = self.ident("a type variable")?;
            self.check_type_binder(&x, span)?;
            self.expect(&Tok::Dot, "`.`")?;
            self.tyvars.push(x.clone());
            let body = self.ty();
            self.tyvars.pop();
            return Ok(Type::forall(x, body?));
        }
        let dom = self.sum_ty()?;
        if self.peek() == &Tok::Arrow {
            self.bump();
            let cod = self.ty()?;
            return Ok(Type::arrow(dom, cod));
        }
        Ok(dom)
    }

    fn sum_ty(&mut self) -> Result<Type, ParseError> {
        let mut left = self.app_ty()?;
        while self.peek() == &Tok::Plus {
            let span = self.bump().1;
            if self.scope.arity("Sum") != Some(2) {
                return Err(self.error(span, "`+` needs `type Sum/2.` in scope"));
            }
            let right = self.app_ty()?;
            left = Type::con("Sum", vec![left, right]);
        }
        Ok(left)
    }

    fn app_ty(&mut self) -> Result<Type, ParseError> {
        if let Tok::Ident(c) = self.peek().clone() {
            if let Some(arity) = self.con_arity(&c) {
                let span = self.bump().1;
                let mut args = Vec::new();
                while self.starts_atom_ty() {
                    args.push(self.atom_ty()?);
                }
                if args.len() != arity {
                    let span = Span::new(span.start, self.prev_end());
                    return Err(self.error(span, format!("`{c}` takes {arity} argument(s), given {}", args.len())));
                }
                return Ok(Type::con(c, args));
            }
        }
        self.atom_ty()
    }

    fn con_arity(&self, name: &str) -> Option<usize> {
        if self.tyvars.iter().any(|v| v == name) {
            return None;
        }
        self.scope.arity(name)
    }

    fn starts_atom_ty(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::LParen)
    }

    fn atom_ty(&mut self) -> Result<Type, ParseError> {
        match self.peek().clone() {
            Tok::Ident(x) => {
                let span = self.bump().1;
                match self.con_arity(&x) {
                    Some(0) => Ok(Type::base(x)),
                    Some(n) => {
                        Err(self.error(span, format!("`{x}` takes {n} argument(s); parenthesize its application")))
                    }
                    None => Ok(Type::var(x)),
                }
            }
            Tok::LParen => {
                self.bump();
                let t = self.ty()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.unexpected("a type")),
        }
    }

    fn check_type_binder(&self, x: &str, span: Span) -> Result<(), ParseError> {
        if self.tyvars.iter().any(|v| v == x) || self.scope.cons.contains_key(x) {
            return Err(self.error(span, format!("type variable `{x}` shadows a name in scope")));
        }
        Ok(())
    }

    fn check_term_binder(&self, x: &str, span: Span) -> Result<(), ParseError> {
        if self.terms.iter().any(|v| v == x) || self.scope.terms.contains(x) {
            return Err(self.error(span, format!("`{x}` shadows a name in scope")));
        }
        Ok(())
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Tok::Lambda | Tok::BigLambda => self.binder(),
            _ => self.app(),
        }
    }

    fn binder(&mut self) -> Result<Term, ParseError> {
        let (tok, start) = self.bump();
        let (x, xspan) = self.ident("a bound variable")?;
        if tok == Tok::BigLambda {
            self.check_type_binder(&x, xspan)?;
            self.expect(&Tok::Dot, "`.`")?;
            self.tyvars.push(x.clone());
            let body = self.term();
            self.tyvars.pop();
            let body = body?;
            let span = start.join(body.span);
            return Ok(Term::tlam(x, body).with_span(span));
        }
        self.check_term_binder(&x, xspan)?;
        let ann = if self.peek() == &Tok::Colon {
            self.bump();
            Some(self.ty()?)
        } else {
            None
        };
        self.expect(&Tok::Dot, "`.`")?;
        self.terms.push(x.clone());
        let body = self.term();
        self.terms.pop();
        let body = body?;
        let span = start.join(body.span);
        Ok(Term::new(TermKind::Lam(x, ann, Box::new(body)), span))
    }

    fn app(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        loop {
            match self.peek() {
                Tok::Ident(_) | Tok::LParen => {
                    let a = self.atom()?;
                    let span = t.span.join(a.span);
                    t = Term::app(t, a).with_span(span);
                }
                Tok::LBrack => {
                    self.bump();
                    let ty = self.ty()?;
                    let end = self.expect(&Tok::RBrack, "`]`")?;
                    let span = t.span.join(end);
                    t = Term::tapp(t, ty).with_span(span);
                }
                // A trailing abstraction is the last argument.
                Tok::Lambda | Tok::BigLambda => {
                    let a = self.binder()?;
                    let span = t.span.join(a.span);
                    return Ok(Term::app(t, a).with_span(span));
                }
                _ => return Ok(t),
            }
        }
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(x) => {
                let span = self.bump().1;
                Ok(Term::var(x).with_span(span))
            }
            Tok::LParen => {
                let start = self.bump().1;
                let t = self.term()?;
                let end = self.expect(&Tok::RParen, "`)`")?;
                Ok(t.with_span(start.join(end)))
            }
            _ => Err(self.unexpected("a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR_LAMBDA: &str = "type Nat/0. type Pair/2.\n\
        assume pair : forall X. forall Y. X -> Y -> Pair X Y.\n\
        assume z : Nat.\n\
        check pair (\\x. x) z : Pair (Nat -> Nat) Nat.\n";

    #[test]
    fn assume_and_synth() {
        let p = parse_program("type Nat/0. assume z : Nat. synth z.").unwrap();
        assert_eq!(p.decls.len(), 3);
        assert_eq!(p.goals().count(), 1);
    }

    #[test]
    fn pair_lambda_program() {
        let p = parse_program(PAIR_LAMBDA).unwrap();
        let g = p.goals().next().unwrap();
        assert_eq!(g.kind, GoalKind::Check);
        assert_eq!(g.term.to_string(), "pair (\\x. x) z");
        assert_eq!(g.expected.as_ref().unwrap().to_string(), "Pair (Nat -> Nat) Nat");
    }

    #[test]
    fn spans_cover_source() {
        let src = "assume f : forall X. X -> X.\nsynth f [forall Y. Y -> Y] (/\\A. \\a:A. a).";
        let p = parse_program(src).unwrap();
        let g = p.goals().next().unwrap();
        assert_eq!(&src[g.term.span.start..g.term.span.end], "f [forall Y. Y -> Y] (/\\A. \\a:A. a)");
        assert_eq!(line_col(src, g.span.start), (2, 1));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_program("type Nat/0.\nassume z : Nat\nsynth z.").unwrap_err();
        assert_eq!((e.line, e.col), (3, 1));
        let e = parse_program("type Pair/2. assume p : Pair Pair.").unwrap_err();
        assert!(e.message.contains("takes 2"), "{e}");
        let e = parse_program("type Nat/0. type Nat/0.").unwrap_err();
        assert!(e.message.contains("already declared"));
        let e = parse_program("type Nat/0. assume z : Nat. synth \\z:Nat. z.").unwrap_err();
        assert!(e.message.contains("shadows"));
        let e = parse_program("synth /\\A. /\\A. x.").unwrap_err();
        assert!(e.message.contains("shadows"));
        assert!(parse_program("synth z ; z.").is_err());
    }

    #[test]
    fn sum_sugar_needs_sum() {
        let mut scope = Scope::default();
        parse_in("type Nat/0. type Sum/2.", &mut scope).unwrap();
        let t = parse_type("A + Nat -> Nat", &scope).unwrap();
        assert_eq!(t, Type::arrow(Type::con("Sum", vec![Type::var("A"), Type::base("Nat")]), Type::base("Nat")));
        assert!(parse_type("A + B", &Scope::default()).is_err());
    }

    #[test]
    fn application_precedence() {
        let scope = Scope::default();
        let t = parse_term("f [A] x (g y) \\q. q", &scope).unwrap();
        assert_eq!(t.to_string(), "f [A] x (g y) (\\q. q)");
        let t = parse_term("\\x:A -> A. x y", &scope).unwrap();
        assert_eq!(t.to_string(), "\\x:A -> A. x y");
    }
}
