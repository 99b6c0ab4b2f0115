//! Brute-force evaluation over finite interpretations.
//!
//! Every carrier is a finite, non-empty list of values and arithmetic is
//! exact over rationals. Quantifiers enumerate carriers, `fns1.lambda`
//! builds a closure, and `interval1.interval_cc(a, b)` denotes the grid
//! `{a + k(b - a)/n | 0 <= k <= n}` for the interpretation's resolution `n`;
//! without a resolution an interval is an infinite domain and an error.
//!
//! Scripts are answered by enumerating every assignment of the declared
//! constants in carrier order. Optimization goals are compared
//! lexicographically in command order, and ties keep the first assignment
//! found, i.e. the least one in enumeration order.

mod eval;
mod file;
mod search;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

use num_rational::BigRational;
use thiserror::Error;

use crate::ast::{Sort, Symbol, Term};
use crate::smtlib::SmtError;

pub use eval::{eval, eval_with};
pub use file::{parse_interpretation, parse_value};
pub use search::{eval_script, eval_script_with_limit, DEFAULT_SEARCH_LIMIT};

/// Largest carrier [`enumerate_predicates`] accepts by default.
pub const DEFAULT_PREDICATE_BOUND: usize = 4;

#[derive(Clone)]
pub enum Value {
    Bool(bool),
    Rational(BigRational),
    /// An element of an uninterpreted sort, printed `@S_0`.
    Element { sort: String, index: usize },
    /// Sorted, without duplicates.
    Set(Vec<Value>),
    Function(Rc<FunctionValue>),
}

pub enum FunctionValue {
    Closure {
        params: Vec<String>,
        body: Term,
        env: Vec<(String, Value)>,
    },
    Named(Symbol),
}

impl Value {
    pub fn int(n: i64) -> Value {
        Value::Rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Value {
        Value::Rational(BigRational::new(n.into(), d.into()))
    }

    /// Builds a set, sorting and removing duplicates.
    pub fn set(mut items: Vec<Value>) -> Value {
        items.sort();
        items.dedup();
        Value::Set(items)
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Value::Bool(_) => 0,
            Value::Rational(_) => 1,
            Value::Element { .. } => 2,
            Value::Set(_) => 3,
            Value::Function(_) => 4,
        }
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Bool(a), Value::Bool(b)) => a.cmp(b),
            (Value::Rational(a), Value::Rational(b)) => a.cmp(b),
            (
                Value::Element { sort: s, index: i },
                Value::Element { sort: t, index: j },
            ) => (s, i).cmp(&(t, j)),
            (Value::Set(a), Value::Set(b)) => a.cmp(b),
            (Value::Function(a), Value::Function(b)) => Rc::as_ptr(a).cmp(&Rc::as_ptr(b)),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Value {}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Rational(r) => write!(f, "{r}"),
            Value::Element { sort, index } => write!(f, "@{sort}_{index}"),
            Value::Set(items) => {
                f.write_str("{")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("}")
            }
            Value::Function(_) => f.write_str("<function>"),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A total (or partial, with `default`) function given by its graph.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FunTable {
    pub entries: BTreeMap<Vec<Value>, Value>,
    pub default: Option<Value>,
}

impl FunTable {
    pub fn constant(v: Value) -> FunTable {
        FunTable {
            entries: BTreeMap::from([(Vec::new(), v)]),
            default: None,
        }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Vec<Value>, Value)>) -> FunTable {
        FunTable {
            entries: entries.into_iter().collect(),
            default: None,
        }
    }

    pub fn get(&self, args: &[Value]) -> Option<&Value> {
        self.entries.get(args).or(self.default.as_ref())
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Interpretation {
    /// Carriers keyed by the printed sort (`S`, `Int`, `(Array Int Int)`).
    pub carriers: BTreeMap<String, Vec<Value>>,
    /// Function tables keyed by [`Symbol::key`]; they override built-ins.
    pub funs: BTreeMap<String, FunTable>,
    pub vars: BTreeMap<String, Value>,
    /// Resolution `n` of interval grids.
    pub grid: Option<u32>,
    /// Sort whose carrier unsorted bound variables range over.
    pub default_sort: Option<String>,
}

impl Interpretation {
    pub fn new() -> Interpretation {
        Interpretation::default()
    }

    pub fn with_carrier(mut self, sort: impl Into<String>, values: Vec<Value>) -> Self {
        self.carriers.insert(sort.into(), values);
        self
    }

    /// A carrier of `n` abstract elements `@S_0 ... @S_{n-1}`.
    pub fn with_elements(self, sort: &str, n: usize) -> Self {
        let values = (0..n)
            .map(|index| Value::Element {
                sort: sort.to_owned(),
                index,
            })
            .collect();
        self.with_carrier(sort, values)
    }

    pub fn with_fun(mut self, key: impl Into<String>, table: FunTable) -> Self {
        self.funs.insert(key.into(), table);
        self
    }

    pub fn with_var(mut self, name: impl Into<String>, v: Value) -> Self {
        self.vars.insert(name.into(), v);
        self
    }

    pub fn with_grid(mut self, n: u32) -> Self {
        self.grid = Some(n);
        self
    }

    pub fn with_default_sort(mut self, sort: impl Into<String>) -> Self {
        self.default_sort = Some(sort.into());
        self
    }

    pub fn carrier(&self, sort: Option<&Sort>) -> Result<&[Value], OracleError> {
        let key = match sort {
            Some(s) => s.to_string(),
            None => self
                .default_sort
                .clone()
                .ok_or_else(|| OracleError::NoCarrier("an unsorted variable".into()))?,
        };
        match self.carriers.get(&key) {
            Some(c) if !c.is_empty() => Ok(c),
            Some(_) => Err(OracleError::EmptyCarrier(key)),
            None => Err(OracleError::NoCarrier(format!("sort {key}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("interval without a grid resolution is an infinite domain")]
    InfiniteDomain,
    #[error("quantifier body is not Boolean: {0}")]
    NonBooleanQuantifierBody(String),
    #[error("maximum or minimum of an empty set")]
    EmptyMax,
    #[error("get-value before check-sat")]
    NoGoalBeforeGetValue,
    #[error("script has no check-sat")]
    NoCheckSat,
    #[error("carrier of size {size} exceeds the bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("search space of {0} assignments exceeds the limit")]
    SearchTooLarge(u128),
    #[error("no carrier for {0}")]
    NoCarrier(String),
    #[error("carrier of {0} is empty")]
    EmptyCarrier(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("no interpretation for `{0}`")]
    UnknownFunction(String),
    #[error("`{function}` has no value at ({args})")]
    MissingTableEntry { function: String, args: String },
    #[error("uninterpreted function `{0}` needs a table in the interpretation")]
    UninterpretedFunction(String),
    #[error("type error: {0}")]
    TypeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot evaluate {0}")]
    Unsupported(String),
    #[error("line {line}: {message}")]
    BadInterpretation { line: usize, message: String },
    #[error(transparent)]
    Model(#[from] SmtError),
}

/// Every Boolean table on `carrier`, once each: table `m` maps the `i`-th
/// element to bit `i` of `m`.
pub fn enumerate_predicates(
    carrier: &[Value],
) -> Result<impl Iterator<Item = FunTable> + '_, OracleError> {
    enumerate_predicates_bounded(carrier, DEFAULT_PREDICATE_BOUND)
}

pub fn enumerate_predicates_bounded(
    carrier: &[Value],
    bound: usize,
) -> Result<impl Iterator<Item = FunTable> + '_, OracleError> {
    if carrier.len() > bound || carrier.len() >= 64 {
        return Err(OracleError::BoundExceeded {
            size: carrier.len(),
            bound,
        });
    }
    Ok((0u64..1 << carrier.len()).map(move |mask| {
        FunTable::from_entries(
            carrier
                .iter()
                .enumerate()
                .map(|(i, v)| (vec![v.clone()], Value::Bool(mask >> i & 1 == 1))),
        )
    }))
}
