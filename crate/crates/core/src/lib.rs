//! Spine-local type inference for System F.
//!
//! The engine infers omitted lambda annotations and type arguments in an
//! external language and elaborates into fully annotated System F. Type
//! arguments are solved only within a single application spine, both from
//! the spine's contextual type (prototype matching) and from the synthesized
//! types of its arguments.
//!
//! Besides the engine ([`infer`]) the crate carries the pieces used to audit
//! it: an explicitly typed checker for elaborations ([`check`]) and an
//! executable, declarative rule set with bounded search ([`oracle`]).
#![no_std]
// Diagnostics are the error type and are meant to be rich.
#![allow(clippy::result_large_err)]
extern crate alloc;

pub mod check;
pub mod infer;
pub mod matcher;
pub mod oracle;
mod pretty;
pub mod syntax;

pub use pretty::{pretty_decorated, pretty_proto, pretty_term, pretty_type};
pub use syntax::*;
