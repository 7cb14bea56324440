use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::term::{SpineArg, Term, TermKind};
use super::ty::{free_type_vars, Type};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    TyVar(String),
    Term(String, Type),
}

/// Typing context: declared type variables and term bindings, in order,
/// together with the constructor signature.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    entries: Vec<Entry>,
    signature: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextError {
    Duplicate(String),
    IllFormed(String, Type),
}

impl fmt::Display for ContextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextError::Duplicate(n) => write!(f, "`{n}` is already declared"),
            ContextError::IllFormed(n, t) => write!(f, "type of `{n}` is not well-formed: {t}"),
        }
    }
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn signature(&self) -> &BTreeMap<String, usize> {
        &self.signature
    }

    pub fn arity(&self, con: &str) -> Option<usize> {
        self.signature.get(con).copied()
    }

    pub fn declare_con(&mut self, name: impl Into<String>, arity: usize) -> Result<(), ContextError> {
        let name = name.into();
        if self.signature.contains_key(&name) || self.declares_type_var(&name) {
            return Err(ContextError::Duplicate(name));
        }
        self.signature.insert(name, arity);
        Ok(())
    }

    /// Builder form of [`Context::declare_con`]; panics on duplicates.
    pub fn with_con(mut self, name: &str, arity: usize) -> Context {
        self.declare_con(name, arity).expect("duplicate constructor");
        self
    }

    /// Checked extension with a term binding.
    pub fn assume(&mut self, name: impl Into<String>, ty: Type) -> Result<(), ContextError> {
        let name = name.into();
        if self.lookup(&name).is_some() {
            return Err(ContextError::Duplicate(name));
        }
        if !self.is_well_formed(&ty) {
            return Err(ContextError::IllFormed(name, ty));
        }
        self.entries.push(Entry::Term(name, ty));
        Ok(())
    }

    /// Builder form of [`Context::assume`]; panics on failure.
    pub fn with(mut self, name: &str, ty: Type) -> Context {
        self.assume(name, ty).expect("bad assumption");
        self
    }

    /// Checked extension with a type variable.
    pub fn declare_type_var(&mut self, name: impl Into<String>) -> Result<(), ContextError> {
        let name = name.into();
        if self.declares_type_var(&name) || self.signature.contains_key(&name) {
            return Err(ContextError::Duplicate(name));
        }
        self.entries.push(Entry::TyVar(name));
        Ok(())
    }

    pub(crate) fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub(crate) fn pop(&mut self) {
        self.entries.pop();
    }

    pub fn lookup(&self, name: &str) -> Option<&Type> {
        self.entries.iter().rev().find_map(|e| match e {
            Entry::Term(x, t) if x == name => Some(t),
            _ => None,
        })
    }

    pub fn declares_type_var(&self, name: &str) -> bool {
        self.entries.iter().any(|e| matches!(e, Entry::TyVar(x) if x == name))
    }

    /// DTV(Γ).
    pub fn declared_type_vars(&self) -> BTreeSet<String> {
        self.entries
            .iter()
            .filter_map(|e| match e {
                Entry::TyVar(x) => Some(x.clone()),
                Entry::Term(..) => None,
            })
            .collect()
    }

    /// WF(Γ, T): free variables declared and constructor arities respected.
    pub fn is_well_formed(&self, ty: &Type) -> bool {
        self.arities_ok(ty) && free_type_vars(ty).iter().all(|v| self.declares_type_var(v))
    }

    fn arities_ok(&self, ty: &Type) -> bool {
        match ty {
            Type::Var(_) => true,
            Type::Arrow(a, b) => self.arities_ok(a) && self.arities_ok(b),
            Type::Forall(_, b) => self.arities_ok(b),
            Type::Con(c, args) => self.arity(c) == Some(args.len()) && args.iter().all(|a| self.arities_ok(a)),
        }
    }

    /// MV(Γ, T) = FV(T) − DTV(Γ).
    pub fn meta_vars_of_type(&self, ty: &Type) -> BTreeSet<String> {
        free_type_vars(ty).into_iter().filter(|v| !self.declares_type_var(v)).collect()
    }

    /// MV(Γ, p): undeclared variables used as type arguments along the spine.
    pub fn meta_vars_of_term(&self, term: &Term) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut cur = term;
        loop {
            match &cur.kind {
                TermKind::TApp(f, Type::Var(x)) if !self.declares_type_var(x) => {
                    out.insert(x.clone());
                    cur = f;
                }
                TermKind::TApp(f, _) | TermKind::App(f, _) => cur = f,
                _ => return out,
            }
        }
    }

    /// Checks the shape required of partial elaborations: every `Lam`
    /// annotated, and types off the spine (head, term arguments, and
    /// everything below them) well-formed. Spine type arguments may be bare
    /// meta-variables or well-formed types.
    pub fn is_partial_elaboration(&self, term: &Term) -> bool {
        let (head, args) = term.spine();
        let mut scratch = self.clone();
        if !scratch.is_meta_free(head) {
            return false;
        }
        args.iter().all(|a| match a {
            SpineArg::Type(Type::Var(_)) => true,
            SpineArg::Type(t) => self.is_well_formed(t),
            SpineArg::Term(t) => scratch.is_meta_free(t),
        })
    }

    /// Every annotation and type argument in `term` is well-formed at its
    /// position, so the term mentions no meta-variables at all.
    pub fn is_meta_free(&mut self, term: &Term) -> bool {
        match &term.kind {
            TermKind::Var(_) => true,
            TermKind::Lam(x, ann, body) => match ann {
                None => false,
                Some(t) => {
                    if !self.is_well_formed(t) {
                        return false;
                    }
                    self.push(Entry::Term(x.clone(), t.clone()));
                    let ok = self.is_meta_free(body);
                    self.pop();
                    ok
                }
            },
            TermKind::TLam(x, body) => {
                self.push(Entry::TyVar(x.clone()));
                let ok = self.is_meta_free(body);
                self.pop();
                ok
            }
            TermKind::App(f, a) => self.is_meta_free(f) && self.is_meta_free(a),
            TermKind::TApp(f, s) => self.is_well_formed(s) && self.is_meta_free(f),
        }
    }
}
