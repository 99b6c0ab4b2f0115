//! Sort checking against Small Type System signatures and SMT-LIB
//! declarations.
//!
//! A signature is either positional (`sts.mapsto`) or n-ary associative
//! (`sts.nassoc`, at least two arguments of one sort). Sort variables such as
//! `AbelianSemiGroup` are instantiated afresh at every application and then
//! solved by unification, so one signature may be used at several sorts in
//! the same term.

mod check;
mod profile;
mod sts;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ast::{Sort, Symbol};
use crate::text::Position;

pub use check::check_sorts;
pub use profile::{parse_profile, TheoryProfile};
pub use sts::{load_sts, om_sort};

/// One position of a signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SortRef {
    Sort(Sort),
    /// Resolves to any sort; all occurrences in one signature agree.
    Var(String),
    /// Like `Var`, but only `Int` or `Real`.
    NumericVar(String),
}

impl SortRef {
    pub fn var(name: &str) -> SortRef {
        SortRef::Var(name.to_owned())
    }
}

impl From<Sort> for SortRef {
    fn from(s: Sort) -> SortRef {
        SortRef::Sort(s)
    }
}

impl fmt::Display for SortRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortRef::Sort(s) => write!(f, "{s}"),
            SortRef::Var(v) => write!(f, "?{v}"),
            SortRef::NumericVar(v) => write!(f, "?{v}:numeric"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StsShape {
    Mapsto { args: Vec<SortRef>, result: SortRef },
    NAssoc { element: SortRef, result: SortRef },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StsSignature {
    pub symbol: Symbol,
    pub shape: StsShape,
}

impl StsSignature {
    pub fn mapsto(symbol: Symbol, args: Vec<SortRef>, result: SortRef) -> StsSignature {
        StsSignature {
            symbol,
            shape: StsShape::Mapsto { args, result },
        }
    }

    pub fn nassoc(symbol: Symbol, element: SortRef, result: SortRef) -> StsSignature {
        StsSignature {
            symbol,
            shape: StsShape::NAssoc { element, result },
        }
    }
}

/// Everything the checker knows about symbols and variables.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SignatureTable {
    pub sts: BTreeMap<Symbol, StsSignature>,
    pub declared_sorts: BTreeMap<String, usize>,
    /// SMT-LIB functions by name, including nullary constants.
    pub declared_funs: BTreeMap<String, (Vec<Sort>, Sort)>,
    /// Sorts of free variables, and of bound variables that carry none.
    pub var_sorts: BTreeMap<String, Sort>,
    pub profile: TheoryProfile,
}

impl SignatureTable {
    pub fn new() -> SignatureTable {
        SignatureTable::default()
    }

    pub fn add_signature(&mut self, sig: StsSignature) {
        self.sts.insert(sig.symbol.clone(), sig);
    }

    pub fn add_signatures(&mut self, sigs: impl IntoIterator<Item = StsSignature>) {
        for s in sigs {
            self.add_signature(s);
        }
    }

    /// Registers the signature of `from` for a second symbol `to`, e.g. the
    /// SMT-LIB symbol an OpenMath symbol translates to.
    pub fn alias_signature(&mut self, from: &Symbol, to: Symbol) -> bool {
        let Some(sig) = self.sts.get(from) else {
            return false;
        };
        let shape = sig.shape.clone();
        self.sts.insert(to.clone(), StsSignature { symbol: to, shape });
        true
    }

    pub fn declare_sort(&mut self, name: impl Into<String>, arity: usize) {
        self.declared_sorts.insert(name.into(), arity);
    }

    pub fn declare_fun(&mut self, name: impl Into<String>, args: Vec<Sort>, result: Sort) {
        self.declared_funs.insert(name.into(), (args, result));
    }

    pub fn set_var_sort(&mut self, name: impl Into<String>, sort: Sort) {
        self.var_sorts.insert(name.into(), sort);
    }

    /// Copies the declarations of an SMT-LIB script scope.
    pub fn declare_scope(&mut self, scope: &crate::smtlib::SmtScope) {
        for (n, a) in &scope.sorts {
            self.declare_sort(n.clone(), *a);
        }
        for (n, (args, r)) in &scope.funs {
            self.declare_fun(n.clone(), args.clone(), r.clone());
        }
    }
}

/// Child indices from the root, numbered like the children of the XML
/// element: an application's head is 0 and its arguments 1, 2, ...; a
/// bind's body is 2 and its condition 3.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TermPath(pub Vec<usize>);

impl TermPath {
    pub(crate) fn child(&self, i: usize) -> TermPath {
        let mut v = self.0.clone();
        v.push(i);
        TermPath(v)
    }
}

impl fmt::Display for TermPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SortError {
    #[error("{pos}: bad signature file: {message}")]
    BadSignatureXml { message: String, pos: Position },
    #[error("unknown STS combinator `{0}`")]
    UnknownStsCombinator(String),
    #[error("line {line}: {message}")]
    BadProfile { line: usize, message: String },
    #[error("at {path}: no sort information for `{symbol}`")]
    UnknownSymbolSort { symbol: String, path: TermPath },
    #[error("at {path}: `{symbol}` expects {expected} argument(s), got {found}")]
    ArityMismatch {
        symbol: String,
        expected: String,
        found: usize,
        path: TermPath,
    },
    #[error("at {path}: expected sort {expected}, found {found}")]
    SortMismatch {
        path: TermPath,
        expected: String,
        found: String,
    },
    #[error("at {path}: variable `{name}` has no sort")]
    UnsortedFreeVariable { name: String, path: TermPath },
    #[error("at {path}: sort is not determined")]
    AmbiguousSort { path: TermPath },
    #[error("at {path}: cannot sort-check {what}")]
    Unsupported { what: String, path: TermPath },
}

impl SortError {
    pub fn path(&self) -> Option<&TermPath> {
        match self {
            SortError::UnknownSymbolSort { path, .. }
            | SortError::ArityMismatch { path, .. }
            | SortError::SortMismatch { path, .. }
            | SortError::UnsortedFreeVariable { path, .. }
            | SortError::AmbiguousSort { path }
            | SortError::Unsupported { path, .. } => Some(path),
            _ => None,
        }
    }
}
