//! Translation between OpenMath terms and SMT-LIB terms.
//!
//! Symbols go through a [`SymbolMap`]. An OpenMath symbol without an entry
//! becomes the quoted SMT-LIB symbol `|cd.name|` and comes back unchanged; an
//! SMT-LIB symbol without an entry lands in the `smtlib` content dictionary.

mod convert;
mod map;

use thiserror::Error;

use crate::ast::AstError;

pub use convert::{
    mangle, om_to_smt, roundtrip_check, smt_to_om, translate_signatures, unmangle, Roundtrip,
    SMTLIB_CD,
};
pub use map::{SymbolMap, TimesTarget};

/// Environment variable naming a symbol map file to use instead of the
/// built-in one.
pub const MAP_ENV: &str = "MATHBRIDGE_MAP";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TranslateError {
    #[error("binder {0} has no SMT-LIB counterpart")]
    UnmappedBinder(String),
    #[error("no sort for bound variable `{0}`")]
    UnsortableVariable(String),
    #[error("extension symbol {0} must be lowered first")]
    UnloweredExtension(String),
    #[error("cannot translate literal {0}")]
    UntranslatableLiteral(String),
    #[error("quoted symbol `{0}` is not of the form |cd.name|")]
    IrreversibleMangling(String),
    #[error("symbol map line {line}: {message}")]
    BadMap { line: usize, message: String },
    #[error("conflicting symbol map entry: {0}")]
    ConflictingMapping(String),
    #[error("cannot translate {0}")]
    Unsupported(String),
    #[error(transparent)]
    Ast(#[from] AstError),
}
