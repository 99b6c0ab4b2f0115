//! Unified term representation for OpenMath objects and SMT-LIB terms,
//! together with the variable machinery shared by every other module.
//!
//! Terms are immutable values. Binds introduced by SMT-LIB `forall`/`exists`
//! are stored with pairwise distinct bound names; earlier duplicates are
//! renamed fresh (`x!1`, `x!2`, ...) at parse time.

mod alpha;
mod subst;
mod symbol;
mod term;

pub use alpha::alpha_equal;
pub use subst::{
    all_names, free_variables, fresh_name, normalize_shadowing, substitute,
    substitute_simultaneous, FRESH_SEPARATOR,
};
pub use symbol::{smt_theory_of, KnownSymbol, Origin, Symbol};
pub use term::{BoundVar, Literal, LiteralKind, Sort, Term};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AstError {
    #[error("invalid symbol `{namespace}.{name}`: parts must be non-empty and free of whitespace")]
    InvalidSymbol { namespace: String, name: String },
    #[error("variable `{0}` is bound twice in one substitution")]
    DuplicateBindingName(String),
}
