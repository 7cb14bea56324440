//! Types, terms, contexts and the metafunctions shared by every judgment.

mod context;
mod decorated;
pub mod fresh;
mod solution;
mod term;
pub(crate) mod ty;

pub use context::{Context, ContextError, Entry};
pub use decorated::{
    alpha_equal_decorated, deco_arity, equivalent_decorated, proto_arity, strip, subst_decorated, DecoratedType,
    Prototype,
};
pub(crate) use decorated::{subst_decorated_with, Exposed};
pub use solution::{subst_type, Binding, Provenance, Solution};
pub use term::{alpha_equal_term, Span, SpineArg, Term, TermKind};
pub use ty::{alpha_equal, free_type_vars, occurs_free, subst_one, subst_with, Type};

/// DTV(Γ).
pub fn declared_type_vars(ctx: &Context) -> alloc::collections::BTreeSet<alloc::string::String> {
    ctx.declared_type_vars()
}
