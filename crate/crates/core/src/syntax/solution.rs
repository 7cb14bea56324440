use alloc::collections::btree_map::{self, BTreeMap};
use alloc::collections::BTreeSet;
use alloc::string::String;

use super::term::Term;
use super::ty::{subst_with, Type};

/// Where a meta-variable's instantiation came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Read off a decoration produced by matching the spine's partial
    /// result type against its contextual type.
    Contextual { partial: Type, against: Type },
    /// Solved by matching the expected domain of term argument `arg_index`
    /// (leftmost is 1) against that argument's synthesized type.
    Synthetic { arg_index: usize, partial: Type, arg_type: Type },
    /// Supplied as an explicit type argument.
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub ty: Type,
    pub origin: Provenance,
}

/// Finite map from meta-variables to types.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Solution {
    bindings: BTreeMap<String, Binding>,
}

impl Solution {
    /// The identity substitution.
    pub fn identity() -> Solution {
        Solution::default()
    }

    pub fn single(name: impl Into<String>, ty: Type, origin: Provenance) -> Solution {
        Solution::identity().compose(name, ty, origin)
    }

    pub fn is_identity(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Type> {
        self.bindings.get(name).map(|b| &b.ty)
    }

    pub fn binding(&self, name: &str) -> Option<&Binding> {
        self.bindings.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.bindings.contains_key(name)
    }

    pub fn domain(&self) -> BTreeSet<String> {
        self.bindings.keys().cloned().collect()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, String, Binding> {
        self.bindings.iter()
    }

    /// `[S/X] ∘ σ`. Extending an existing binding is a contract violation.
    pub fn compose(mut self, name: impl Into<String>, ty: Type, origin: Provenance) -> Solution {
        let name = name.into();
        assert!(!self.bindings.contains_key(&name), "meta-variable {name} is already solved");
        self.bindings.insert(name, Binding { ty, origin });
        self
    }

    /// Insert without the duplicate check; used while building a match.
    pub(crate) fn insert(&mut self, name: String, ty: Type, origin: Provenance) {
        self.bindings.insert(name, Binding { ty, origin });
    }

    pub fn remove(&mut self, name: &str) -> Option<Binding> {
        self.bindings.remove(name)
    }

    /// Solution restricted to bindings satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&str, &Binding) -> bool) -> Solution {
        Solution {
            bindings: self.bindings.iter().filter(|(k, b)| keep(k, b)).map(|(k, b)| (k.clone(), b.clone())).collect(),
        }
    }

    /// Same domain and alpha-equal ranges; provenance ignored.
    pub fn same_mapping(&self, other: &Solution) -> bool {
        self.bindings.len() == other.bindings.len()
            && self.bindings.iter().all(|(k, b)| other.get(k).is_some_and(|t| super::ty::alpha_equal(&b.ty, t)))
    }

    pub fn apply(&self, ty: &Type) -> Type {
        if self.is_identity() {
            return ty.clone();
        }
        subst_with(ty, &|v| self.get(v).cloned())
    }

    pub fn apply_term(&self, term: &Term) -> Term {
        if self.is_identity() {
            return term.clone();
        }
        term.map_types(&|v| self.get(v).cloned())
    }
}

impl FromIterator<(String, Type)> for Solution {
    fn from_iter<I: IntoIterator<Item = (String, Type)>>(iter: I) -> Solution {
        Solution {
            bindings: iter.into_iter().map(|(k, ty)| (k, Binding { ty, origin: Provenance::Explicit })).collect(),
        }
    }
}

/// σT.
pub fn subst_type(solution: &Solution, ty: &Type) -> Type {
    solution.apply(ty)
}
