//! Qualified operator names and the registry of symbols the toolkit knows about.

use std::fmt;

use super::AstError;

/// Where a symbol's meaning comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    /// A symbol from an OpenMath content dictionary, e.g. `arith1.plus`.
    OpenMathCd,
    /// A symbol of an SMT-LIB theory or a user declaration in a script.
    SmtTheory,
    /// One of the constructors this toolkit adds on top of the standard CDs.
    Extension,
}

/// A namespace-qualified operator name.
///
/// For OpenMath symbols the namespace is the content dictionary; for SMT-LIB
/// symbols it is a theory tag (`Core`, `Arith` or `User`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    namespace: String,
    name: String,
    origin: Origin,
}

fn valid_part(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(char::is_whitespace)
}

impl Symbol {
    pub fn new(
        namespace: impl Into<String>,
        name: impl Into<String>,
        origin: Origin,
    ) -> Result<Self, AstError> {
        let namespace = namespace.into();
        let name = name.into();
        if !valid_part(&namespace) || !valid_part(&name) {
            return Err(AstError::InvalidSymbol { namespace, name });
        }
        Ok(Symbol {
            namespace,
            name,
            origin,
        })
    }

    /// Builds an OpenMath symbol, tagging it as an extension when the registry
    /// lists `cd.name` as one.
    pub fn from_cd(cd: &str, name: &str) -> Result<Self, AstError> {
        let origin = KnownSymbol::lookup(cd, name)
            .map(|k| k.origin())
            .unwrap_or(Origin::OpenMathCd);
        Symbol::new(cd, name, origin)
    }

    /// Builds an SMT-LIB symbol; the theory tag is derived from the name.
    pub fn smt(name: &str) -> Result<Self, AstError> {
        Symbol::new(smt_theory_of(name), name, Origin::SmtTheory)
    }

    pub fn namespace(&self) -> &str {
        &self.namespace
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn known(&self) -> Option<KnownSymbol> {
        if self.origin == Origin::SmtTheory {
            return None;
        }
        KnownSymbol::lookup(&self.namespace, &self.name).filter(|k| k.origin() == self.origin)
    }

    pub fn is(&self, k: KnownSymbol) -> bool {
        self.known() == Some(k)
    }

    /// `cd.name` for OpenMath symbols, the bare name for SMT-LIB ones.
    pub fn key(&self) -> String {
        match self.origin {
            Origin::SmtTheory => self.name.clone(),
            _ => format!("{}.{}", self.namespace, self.name),
        }
    }

    pub fn is_smt(&self, name: &str) -> bool {
        self.origin == Origin::SmtTheory && self.name == name
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

const CORE_OPS: &[&str] = &[
    "true", "false", "not", "=>", "and", "or", "xor", "=", "distinct", "ite", "forall", "exists",
];
const ARITH_OPS: &[&str] = &[
    "+", "-", "*", "/", "div", "mod", "abs", "<=", "<", ">=", ">", "to_real", "to_int", "is_int",
];

/// Theory tag used as the namespace of an SMT-LIB symbol.
pub fn smt_theory_of(name: &str) -> &'static str {
    if CORE_OPS.contains(&name) {
        "Core"
    } else if ARITH_OPS.contains(&name) {
        "Arith"
    } else {
        "User"
    }
}

macro_rules! known_symbols {
    ($( $variant:ident => ($cd:literal, $name:literal, $origin:ident) ),* $(,)?) => {
        /// Fixed registry of the named symbols every module relies on.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum KnownSymbol {
            $( $variant ),*
        }

        impl KnownSymbol {
            pub const ALL: &'static [KnownSymbol] = &[ $( KnownSymbol::$variant ),* ];

            pub fn cd(self) -> &'static str {
                match self { $( KnownSymbol::$variant => $cd ),* }
            }

            pub fn name(self) -> &'static str {
                match self { $( KnownSymbol::$variant => $name ),* }
            }

            pub fn origin(self) -> Origin {
                match self { $( KnownSymbol::$variant => Origin::$origin ),* }
            }

            pub fn lookup(cd: &str, name: &str) -> Option<KnownSymbol> {
                match (cd, name) {
                    $( ($cd, $name) => Some(KnownSymbol::$variant), )*
                    _ => None,
                }
            }
        }
    };
}

known_symbols! {
    Plus => ("arith1", "plus", OpenMathCd),
    Times => ("arith1", "times", OpenMathCd),
    Minus => ("arith1", "minus", OpenMathCd),
    UnaryMinus => ("arith1", "unary_minus", OpenMathCd),
    Divide => ("arith1", "divide", OpenMathCd),
    CommutativeTimes => ("arith2", "times", OpenMathCd),
    One => ("alg1", "one", OpenMathCd),
    Zero => ("alg1", "zero", OpenMathCd),
    Forall => ("quant1", "forall", OpenMathCd),
    Exists => ("quant1", "exists", OpenMathCd),
    Eq => ("relation1", "eq", OpenMathCd),
    Neq => ("relation1", "neq", OpenMathCd),
    Lt => ("relation1", "lt", OpenMathCd),
    Leq => ("relation1", "leq", OpenMathCd),
    Gt => ("relation1", "gt", OpenMathCd),
    Geq => ("relation1", "geq", OpenMathCd),
    And => ("logic1", "and", OpenMathCd),
    Or => ("logic1", "or", OpenMathCd),
    Not => ("logic1", "not", OpenMathCd),
    Implies => ("logic1", "implies", OpenMathCd),
    True => ("logic1", "true", OpenMathCd),
    False => ("logic1", "false", OpenMathCd),
    Map => ("set1", "map", OpenMathCd),
    In => ("set1", "in", OpenMathCd),
    Set => ("set1", "set", OpenMathCd),
    SuchThat => ("set1", "suchthat", OpenMathCd),
    Lambda => ("fns1", "lambda", OpenMathCd),
    IntervalCc => ("interval1", "interval_cc", OpenMathCd),
    Max => ("minmax1", "max", OpenMathCd),
    Min => ("minmax1", "min", OpenMathCd),
    Mapsto => ("sts", "mapsto", OpenMathCd),
    NAssoc => ("sts", "nassoc", OpenMathCd),
    ExistsUnique => ("quant2", "exists_unique", Extension),
    MaxBinder => ("minmax2", "max", Extension),
    MaxSetFunction => ("minmax2", "max_sf", Extension),
    Argmax => ("minmax2", "argmax", Extension),
    ArgmaxOne => ("minmax2", "argmaxone", Extension),
    SortAttribution => ("sts", "sort", Extension),
}

impl KnownSymbol {
    pub fn symbol(self) -> Symbol {
        Symbol {
            namespace: self.cd().to_owned(),
            name: self.name().to_owned(),
            origin: self.origin(),
        }
    }

    /// Binders whose bind node carries a restricting predicate.
    pub fn takes_condition(self) -> bool {
        matches!(
            self,
            KnownSymbol::MaxBinder | KnownSymbol::Argmax | KnownSymbol::ArgmaxOne
        )
    }
}

impl From<KnownSymbol> for Symbol {
    fn from(k: KnownSymbol) -> Symbol {
        k.symbol()
    }
}
