//! SMT-LIB terms and scripts.
//!
//! Covers the term language (with `let`, `forall` and `exists`), the script
//! commands used for satisfiability and optimization queries (`maximize`,
//! `minimize`, `get-value`), and solver answers with their models.
//!
//! `let` never survives parsing: bindings are expanded by simultaneous
//! substitution. Repeated names in one `forall`/`exists` variable list are
//! renamed apart so that the last occurrence keeps its name.

mod parse;
mod print;
mod result;
mod script;
mod sexpr;

use thiserror::Error;

use crate::ast::AstError;
use crate::text::Position;

pub use parse::{parse_smt_sort, parse_smt_term, parse_smt_term_str, SmtScope};
pub use print::{print_smt, print_smt_symbol, ToSmt};
pub use result::{
    is_canonical_value, parse_solver_output, rational_to_value, value_to_rational, SolverResult,
    Status,
};
pub use script::{looks_like_script, parse_script, Command, Script};
pub use sexpr::{is_simple_symbol, lex_sexpr, lex_sexpr_spanned, AtomKind, SExpr};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SmtError {
    #[error("{pos}: unbalanced parenthesis")]
    UnbalancedParen { pos: Position },
    #[error("{pos}: bad token `{text}`")]
    BadToken { text: String, pos: Position },
    #[error("{0}")]
    Syntax(String),
    #[error("let binds `{0}` twice")]
    DuplicateLetName(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{symbol}` expects {expected} argument(s), got {found}")]
    Arity {
        symbol: String,
        expected: String,
        found: usize,
    },
    #[error("bound variable `{0}` has no sort")]
    UnsortedBinder(String),
    #[error("extension symbol `{0}` must be lowered before printing SMT-LIB")]
    UnloweredExtension(String),
    #[error("cannot print as SMT-LIB: {0}")]
    Unprintable(String),
    #[error("model value `{0}` is not canonical")]
    NonCanonicalValue(String),
    #[error("model binds `{0}` twice")]
    DuplicateModelEntry(String),
    #[error("only a sat answer carries a model")]
    ModelWithoutSat,
    #[error("{pos}: {error}")]
    At { pos: Position, error: Box<SmtError> },
    #[error(transparent)]
    Ast(#[from] AstError),
}

impl SmtError {
    pub fn position(&self) -> Option<Position> {
        match self {
            SmtError::UnbalancedParen { pos }
            | SmtError::BadToken { pos, .. }
            | SmtError::At { pos, .. } => Some(*pos),
            _ => None,
        }
    }

    /// The error without any position wrapper.
    pub fn kind(&self) -> &SmtError {
        match self {
            SmtError::At { error, .. } => error.kind(),
            e => e,
        }
    }

    pub(crate) fn at(self, text: &str, offset: usize) -> SmtError {
        if self.position().is_some() {
            return self;
        }
        SmtError::At {
            pos: Position::of_offset(text, offset),
            error: Box::new(self),
        }
    }
}
