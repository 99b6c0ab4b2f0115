//! Translation between OpenMath (XML and POPCORN) and SMT-LIB.
//!
//! The crate is organised around one term type ([`ast::Term`]) shared by
//! both languages:
//!
//! * [`omxml`] and [`popcorn`] read and write the two OpenMath syntaxes,
//! * [`smtlib`] reads and writes SMT-LIB terms and scripts, including the
//!   `maximize`/`minimize` optimization commands,
//! * [`sorts`] checks terms against Small Type System signatures and
//!   SMT-LIB declarations,
//! * [`extensions`] lowers the exists-unique, max, argmax and argmaxone
//!   constructors to standard symbols,
//! * [`oracle`] evaluates terms and scripts by brute force over finite
//!   carriers,
//! * [`translate`] maps terms between the two languages.

pub mod ast;
pub mod extensions;
pub mod omxml;
pub mod oracle;
pub mod popcorn;
pub mod smtlib;
pub mod sorts;
pub mod translate;

mod text;

pub use text::{Position, Printed};

pub use ast::{alpha_equal, free_variables, substitute_simultaneous, BoundVar, Literal, Sort, Symbol, Term};
