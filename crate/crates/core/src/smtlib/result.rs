use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::parse::{parse_smt_term, SmtScope};
use super::print::ToSmt;
use super::sexpr::{lex_sexpr, SExpr};
use super::SmtError;
use crate::ast::{Literal, Symbol, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Sat,
    Unsat,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Sat => "sat",
            Status::Unsat => "unsat",
            Status::Unknown => "unknown",
        }
    }
}

/// A solver answer. Only `sat` answers carry a model, and model values are
/// canonical so that distinct value terms denote distinct values.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverResult {
    pub status: Status,
    pub model: Option<Vec<(Term, Term)>>,
}

impl SolverResult {
    pub fn new(status: Status, model: Option<Vec<(Term, Term)>>) -> Result<Self, SmtError> {
        if let Some(m) = &model {
            if status != Status::Sat {
                return Err(SmtError::ModelWithoutSat);
            }
            for (i, (lhs, value)) in m.iter().enumerate() {
                if m[..i].iter().any(|(l, _)| l == lhs) {
                    return Err(SmtError::DuplicateModelEntry(
                        lhs.to_smt().unwrap_or_else(|_| lhs.to_string()),
                    ));
                }
                if !is_canonical_value(value) {
                    return Err(SmtError::NonCanonicalValue(
                        value.to_smt().unwrap_or_else(|_| value.to_string()),
                    ));
                }
            }
        }
        Ok(SolverResult { status, model })
    }

    pub fn sat(model: Vec<(Term, Term)>) -> Result<Self, SmtError> {
        SolverResult::new(Status::Sat, Some(model))
    }

    pub fn unsat() -> Self {
        SolverResult {
            status: Status::Unsat,
            model: None,
        }
    }

    pub fn unknown() -> Self {
        SolverResult {
            status: Status::Unknown,
            model: None,
        }
    }
}

fn numeral(t: &Term) -> Option<&str> {
    match t {
        Term::Lit(Literal::Numeral(s)) => Some(s),
        _ => None,
    }
}

fn smt_app<'a>(t: &'a Term, name: &str) -> Option<&'a [Term]> {
    match t {
        Term::Apply { head, args } if matches!(&**head, Term::Sym(s) if s.is_smt(name)) => {
            Some(args)
        }
        _ => None,
    }
}

fn canonical_numeral(s: &str) -> bool {
    s == "0" || !s.starts_with('0')
}

fn canonical_nonneg(t: &Term) -> bool {
    if let Some(n) = numeral(t) {
        return canonical_numeral(n);
    }
    match smt_app(t, "/") {
        Some([p, q]) => match (numeral(p), numeral(q)) {
            (Some(p), Some(q)) if canonical_numeral(p) && canonical_numeral(q) => {
                let (p, q): (BigInt, BigInt) = (p.parse().unwrap(), q.parse().unwrap());
                !p.is_zero() && q > BigInt::from(1) && p.gcd(&q) == BigInt::from(1)
            }
            _ => false,
        },
        _ => false,
    }
}

/// Canonical model values: numerals without leading zeros, `(/ p q)` in
/// lowest terms with `q > 1`, their negations `(- v)` for `v != 0`,
/// `true`/`false`, and abstract values `@name` of declared sorts.
pub fn is_canonical_value(t: &Term) -> bool {
    if canonical_nonneg(t) {
        return true;
    }
    if let Some([v]) = smt_app(t, "-") {
        return canonical_nonneg(v) && numeral(v) != Some("0");
    }
    match t {
        Term::Sym(s) => s.is_smt("true") || s.is_smt("false"),
        Term::Var(v) => v.len() > 1 && v.starts_with('@'),
        _ => false,
    }
}

/// The canonical value term of a rational.
pub fn rational_to_value(r: &BigRational) -> Term {
    let num = |n: &BigInt| Term::Lit(Literal::Numeral(n.to_string()));
    let magnitude = r.abs();
    let t = if magnitude.is_integer() {
        num(magnitude.numer())
    } else {
        Term::apply(
            Term::Sym(Symbol::smt("/").expect("valid symbol")),
            vec![num(magnitude.numer()), num(magnitude.denom())],
        )
    };
    if r.is_negative() {
        Term::apply(Term::Sym(Symbol::smt("-").expect("valid symbol")), vec![t])
    } else {
        t
    }
}

/// The rational denoted by a numeric value term: numerals, decimals,
/// `(/ a b)` and `(- a)` over those.
pub fn value_to_rational(t: &Term) -> Option<BigRational> {
    match t {
        Term::Lit(Literal::Numeral(s)) => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Term::Lit(Literal::Decimal(s)) => {
            let (int, frac) = s.split_once('.')?;
            let n: BigInt = format!("{int}{frac}").parse().ok()?;
            Some(BigRational::new(n, BigInt::from(10).pow(frac.len() as u32)))
        }
        _ => {
            if let Some([a]) = smt_app(t, "-") {
                return value_to_rational(a).map(|r| -r);
            }
            match smt_app(t, "/") {
                Some([a, b]) => {
                    let b = value_to_rational(b)?;
                    (!b.is_zero()).then(|| value_to_rational(a).map(|a| a / b))?
                }
                _ => None,
            }
        }
    }
}

/// Reads a solver answer: `sat`, `unsat` or `unknown`, optionally followed
/// by one model block `((t v) ...)`.
pub fn parse_solver_output(text: &str) -> Result<SolverResult, SmtError> {
    let items = lex_sexpr(text)?;
    let status = match items.first().and_then(SExpr::as_symbol) {
        Some("sat") => Status::Sat,
        Some("unsat") => Status::Unsat,
        Some("unknown") => Status::Unknown,
        _ => return Err(SmtError::Syntax("expected sat, unsat or unknown".into())),
    };
    let model = match &items[1..] {
        [] => None,
        [SExpr::List(pairs)] => {
            let scope = SmtScope::lenient();
            let mut model = Vec::with_capacity(pairs.len());
            for p in pairs {
                match p.as_list() {
                    Some([t, v]) => {
                        model.push((parse_smt_term(t, &scope)?, parse_smt_term(v, &scope)?))
                    }
                    _ => return Err(SmtError::Syntax(format!("bad model entry `{p}`"))),
                }
            }
            Some(model)
        }
        _ => return Err(SmtError::Syntax("trailing input after the model".into())),
    };
    SolverResult::new(status, model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smtlib::{parse_smt_term_str, print_smt};

    fn v(text: &str) -> Term {
        parse_smt_term_str(text, &SmtScope::lenient()).unwrap()
    }

    fn half() -> BigRational {
        BigRational::new(1.into(), 2.into())
    }

    #[test]
    fn prints_sat_with_model_and_reparses() {
        let r = SolverResult::sat(vec![(Term::var("x"), rational_to_value(&half()))]).unwrap();
        let text = print_smt(&r).unwrap();
        assert_eq!(text, "sat\n((x (/ 1 2)))\n");
        assert_eq!(parse_solver_output(&text).unwrap(), r);
        assert_eq!(print_smt(&SolverResult::unsat()).unwrap(), "unsat\n");
    }

    #[test]
    fn canonical_forms() {
        for ok in ["0", "7", "(/ 1 2)", "(- 3)", "(- (/ 2 3))", "true", "@S_0"] {
            assert!(is_canonical_value(&v(ok)), "{ok}");
        }
        for bad in ["007", "(/ 2 4)", "(/ 3 1)", "(- 0)", "0.5", "(/ 0 2)", "(+ 1 1)", "x"] {
            assert!(!is_canonical_value(&v(bad)), "{bad}");
        }
    }

    #[test]
    fn model_invariants_enforced() {
        assert_eq!(
            SolverResult::sat(vec![(Term::var("x"), v("1")), (Term::var("x"), v("2"))]),
            Err(SmtError::DuplicateModelEntry("x".into()))
        );
        assert!(matches!(
            SolverResult::sat(vec![(Term::var("x"), v("(/ 2 4)"))]),
            Err(SmtError::NonCanonicalValue(_))
        ));
        assert_eq!(
            SolverResult::new(Status::Unsat, Some(vec![])),
            Err(SmtError::ModelWithoutSat)
        );
    }

    #[test]
    fn rationals_round_trip() {
        for (n, d) in [(0, 1), (5, 1), (-5, 1), (1, 2), (-7, 3)] {
            let r = BigRational::new(n.into(), d.into());
            let t = rational_to_value(&r);
            assert!(is_canonical_value(&t));
            assert_eq!(value_to_rational(&t), Some(r));
        }
        assert_eq!(value_to_rational(&v("0.50")), Some(half()));
    }
}
