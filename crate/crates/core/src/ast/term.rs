use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;

use super::{KnownSymbol, Symbol};

/// Constant payloads of both languages.
///
/// The SMT-LIB `spec_constant` forms (`Numeral`, `Decimal`, `Hexadecimal`,
/// `Binary`) keep their source spelling: their meaning is fixed only by the
/// theory that reads them.
#[derive(Debug, Clone)]
pub enum Literal {
    Integer(BigInt),
    Float64(f64),
    String(String),
    ByteArray(Vec<u8>),
    Numeral(String),
    Decimal(String),
    Hexadecimal(String),
    Binary(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LiteralKind {
    Integer,
    Float64,
    String,
    ByteArray,
    Numeral,
    Decimal,
    Hexadecimal,
    Binary,
}

impl LiteralKind {
    pub const ALL: [LiteralKind; 8] = [
        LiteralKind::Integer,
        LiteralKind::Float64,
        LiteralKind::String,
        LiteralKind::ByteArray,
        LiteralKind::Numeral,
        LiteralKind::Decimal,
        LiteralKind::Hexadecimal,
        LiteralKind::Binary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LiteralKind::Integer => "integer",
            LiteralKind::Float64 => "float64",
            LiteralKind::String => "string",
            LiteralKind::ByteArray => "bytearray",
            LiteralKind::Numeral => "numeral",
            LiteralKind::Decimal => "decimal",
            LiteralKind::Hexadecimal => "hexadecimal",
            LiteralKind::Binary => "binary",
        }
    }

    pub fn parse(s: &str) -> Option<LiteralKind> {
        LiteralKind::ALL.into_iter().find(|k| k.as_str() == s)
    }
}

impl Literal {
    pub fn kind(&self) -> LiteralKind {
        match self {
            Literal::Integer(_) => LiteralKind::Integer,
            Literal::Float64(_) => LiteralKind::Float64,
            Literal::String(_) => LiteralKind::String,
            Literal::ByteArray(_) => LiteralKind::ByteArray,
            Literal::Numeral(_) => LiteralKind::Numeral,
            Literal::Decimal(_) => LiteralKind::Decimal,
            Literal::Hexadecimal(_) => LiteralKind::Hexadecimal,
            Literal::Binary(_) => LiteralKind::Binary,
        }
    }

    pub fn int(n: impl Into<BigInt>) -> Literal {
        Literal::Integer(n.into())
    }
}

// Floats compare by bit pattern so that structural equality is an
// equivalence relation (NaN == NaN, 0.0 != -0.0).
impl PartialEq for Literal {
    fn eq(&self, other: &Self) -> bool {
        use Literal::*;
        match (self, other) {
            (Integer(a), Integer(b)) => a == b,
            (Float64(a), Float64(b)) => a.to_bits() == b.to_bits(),
            (String(a), String(b)) => a == b,
            (ByteArray(a), ByteArray(b)) => a == b,
            (Numeral(a), Numeral(b))
            | (Decimal(a), Decimal(b))
            | (Hexadecimal(a), Hexadecimal(b))
            | (Binary(a), Binary(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Literal {}

impl Hash for Literal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kind().hash(state);
        match self {
            Literal::Integer(n) => n.hash(state),
            Literal::Float64(f) => f.to_bits().hash(state),
            Literal::String(s)
            | Literal::Numeral(s)
            | Literal::Decimal(s)
            | Literal::Hexadecimal(s)
            | Literal::Binary(s) => s.hash(state),
            Literal::ByteArray(b) => b.hash(state),
        }
    }
}

/// A sort such as `Int`, `S` or `(Array Int Real)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sort {
    pub name: String,
    pub args: Vec<Sort>,
    /// False for declared sorts, whose carrier may be any non-empty set.
    pub interpreted: bool,
}

const THEORY_SORTS: &[&str] = &["Bool", "Int", "Real", "String", "Array", "BitVec"];

impl Sort {
    /// A sort whose `interpreted` flag is inferred from the theory sort names.
    pub fn named(name: impl Into<String>) -> Sort {
        let name = name.into();
        let interpreted = THEORY_SORTS.contains(&name.as_str());
        Sort {
            name,
            args: Vec::new(),
            interpreted,
        }
    }

    pub fn parametric(name: impl Into<String>, args: Vec<Sort>) -> Sort {
        Sort {
            args,
            ..Sort::named(name)
        }
    }

    pub fn bool() -> Sort {
        Sort::named("Bool")
    }

    pub fn int() -> Sort {
        Sort::named("Int")
    }

    pub fn real() -> Sort {
        Sort::named("Real")
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.args.is_empty() {
            f.write_str(&self.name)
        } else {
            write!(f, "({}", self.name)?;
            for a in &self.args {
                write!(f, " {a}")?;
            }
            f.write_str(")")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundVar {
    pub name: String,
    pub sort: Option<Sort>,
}

impl BoundVar {
    pub fn new(name: impl Into<String>) -> BoundVar {
        BoundVar {
            name: name.into(),
            sort: None,
        }
    }

    pub fn sorted(name: impl Into<String>, sort: Sort) -> BoundVar {
        BoundVar {
            name: name.into(),
            sort: Some(sort),
        }
    }
}

/// The shared term language of OpenMath objects and SMT-LIB terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Sym(Symbol),
    Var(String),
    Lit(Literal),
    Apply {
        head: Box<Term>,
        args: Vec<Term>,
    },
    Bind {
        binder: Symbol,
        vars: Vec<BoundVar>,
        condition: Option<Box<Term>>,
        body: Box<Term>,
    },
    Attributed {
        pairs: Vec<(Symbol, Term)>,
        base: Box<Term>,
    },
    Error {
        symbol: Symbol,
        args: Vec<Term>,
    },
    Foreign {
        encoding: String,
        blob: Vec<u8>,
    },
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn int(n: impl Into<BigInt>) -> Term {
        Term::Lit(Literal::Integer(n.into()))
    }

    pub fn sym(s: impl Into<Symbol>) -> Term {
        Term::Sym(s.into())
    }

    pub fn apply(head: Term, args: Vec<Term>) -> Term {
        Term::Apply {
            head: Box::new(head),
            args,
        }
    }

    /// Application of a symbol.
    pub fn app(head: impl Into<Symbol>, args: Vec<Term>) -> Term {
        Term::apply(Term::Sym(head.into()), args)
    }

    pub fn bind(binder: impl Into<Symbol>, vars: Vec<BoundVar>, body: Term) -> Term {
        Term::Bind {
            binder: binder.into(),
            vars,
            condition: None,
            body: Box::new(body),
        }
    }

    pub fn bind_with_condition(
        binder: impl Into<Symbol>,
        vars: Vec<BoundVar>,
        condition: Term,
        body: Term,
    ) -> Term {
        Term::Bind {
            binder: binder.into(),
            vars,
            condition: Some(Box::new(condition)),
            body: Box::new(body),
        }
    }

    /// The head symbol when this is an application of a symbol.
    pub fn head_symbol(&self) -> Option<&Symbol> {
        match self {
            Term::Apply { head, .. } => match head.as_ref() {
                Term::Sym(s) => Some(s),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn is_app_of(&self, k: KnownSymbol) -> bool {
        self.head_symbol().is_some_and(|s| s.is(k))
    }

    /// Applies `f` to every subterm, children first, visiting each node once.
    pub fn for_each_subterm<'a>(&'a self, f: &mut impl FnMut(&'a Term)) {
        match self {
            Term::Apply { head, args } => {
                head.for_each_subterm(f);
                args.iter().for_each(|a| a.for_each_subterm(f));
            }
            Term::Bind {
                condition, body, ..
            } => {
                if let Some(c) = condition {
                    c.for_each_subterm(f);
                }
                body.for_each_subterm(f);
            }
            Term::Attributed { pairs, base } => {
                pairs.iter().for_each(|(_, v)| v.for_each_subterm(f));
                base.for_each_subterm(f);
            }
            Term::Error { args, .. } => args.iter().for_each(|a| a.for_each_subterm(f)),
            Term::Sym(_) | Term::Var(_) | Term::Lit(_) | Term::Foreign { .. } => {}
        }
        f(self);
    }

    /// Every symbol occurring anywhere, including binders and attribution keys.
    pub fn symbols(&self) -> Vec<&Symbol> {
        let mut out = Vec::new();
        self.for_each_subterm(&mut |t| match t {
            Term::Sym(s) => out.push(s),
            Term::Bind { binder, .. } => out.push(binder),
            Term::Attributed { pairs, .. } => out.extend(pairs.iter().map(|(k, _)| k)),
            Term::Error { symbol, .. } => out.push(symbol),
            _ => {}
        });
        out
    }

    /// Removes attribution wrappers and bound-variable sorts.
    pub fn strip_attributions(&self) -> Term {
        match self {
            Term::Attributed { base, .. } => base.strip_attributions(),
            Term::Apply { head, args } => Term::apply(
                head.strip_attributions(),
                args.iter().map(Term::strip_attributions).collect(),
            ),
            Term::Bind {
                binder,
                vars,
                condition,
                body,
            } => Term::Bind {
                binder: binder.clone(),
                vars: vars.iter().map(|v| BoundVar::new(v.name.clone())).collect(),
                condition: condition.as_ref().map(|c| Box::new(c.strip_attributions())),
                body: Box::new(body.strip_attributions()),
            },
            Term::Error { symbol, args } => Term::Error {
                symbol: symbol.clone(),
                args: args.iter().map(Term::strip_attributions).collect(),
            },
            other => other.clone(),
        }
    }

    pub fn size(&self) -> usize {
        let mut n = 0;
        self.for_each_subterm(&mut |_| n += 1);
        n
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Term {
        Term::Lit(l)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Integer(n) => write!(f, "{n}"),
            Literal::Float64(x) => write!(f, "{x:?}"),
            Literal::String(s) => write!(f, "{s:?}"),
            Literal::ByteArray(b) => write!(f, "<{} bytes>", b.len()),
            Literal::Numeral(s)
            | Literal::Decimal(s)
            | Literal::Hexadecimal(s)
            | Literal::Binary(s) => f.write_str(s),
        }
    }
}

// Diagnostic rendering only; the concrete syntaxes have their own printers.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, ts: &[Term]) -> fmt::Result {
            for (i, t) in ts.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{t}")?;
            }
            Ok(())
        }
        match self {
            Term::Sym(s) => write!(f, "{s}"),
            Term::Var(v) => write!(f, "${v}"),
            Term::Lit(l) => write!(f, "{l}"),
            Term::Apply { head, args } => {
                write!(f, "{head}(")?;
                list(f, args)?;
                f.write_str(")")
            }
            Term::Bind {
                binder,
                vars,
                condition,
                body,
            } => {
                write!(f, "{binder}[")?;
                for (i, v) in vars.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "${}", v.name)?;
                    if let Some(s) = &v.sort {
                        write!(f, ":{s}")?;
                    }
                }
                if let Some(c) = condition {
                    write!(f, " | {c}")?;
                }
                write!(f, "] -> {body}")
            }
            Term::Attributed { pairs, base } => {
                write!(f, "{base}{{")?;
                for (i, (k, v)) in pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{k} -> {v}")?;
                }
                f.write_str("}")
            }
            Term::Error { symbol, args } => {
                write!(f, "!{symbol}(")?;
                list(f, args)?;
                f.write_str(")")
            }
            Term::Foreign { encoding, blob } => {
                write!(f, "<foreign {encoding}, {} bytes>", blob.len())
            }
        }
    }
}
