use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{SymbolMap, TranslateError};
use crate::ast::{alpha_equal, BoundVar, KnownSymbol as K, Literal, Origin, Symbol, Term};
use crate::smtlib::value_to_rational;
use crate::sorts::SignatureTable;

type Result<T> = std::result::Result<T, TranslateError>;

/// Content dictionary for SMT-LIB symbols without an OpenMath counterpart.
pub const SMTLIB_CD: &str = "smtlib";

/// `|cd.name|`, the SMT-LIB spelling of an unmapped OpenMath symbol.
pub fn mangle(s: &Symbol) -> String {
    format!("|{}.{}|", s.namespace(), s.name())
}

/// Inverse of [`mangle`]; `None` unless `token` is a quoted `cd.name`.
pub fn unmangle(token: &str) -> Option<Symbol> {
    let inner = token.strip_prefix('|')?.strip_suffix('|')?;
    let (cd, name) = inner.split_once('.')?;
    Symbol::from_cd(cd, name).ok()
}

fn smt_sym(name: &str) -> Result<Term> {
    Ok(Term::Sym(Symbol::smt(name)?))
}

fn numeral(n: &BigInt) -> Term {
    Term::Lit(Literal::Numeral(n.to_string()))
}

fn negate(t: Term) -> Result<Term> {
    Ok(Term::apply(smt_sym("-")?, vec![t]))
}

/// Exact decimal spelling of a finite float's magnitude.
fn decimal(f: f64) -> Option<String> {
    let r = BigRational::from_float(f.abs())?;
    let (p, q) = (r.numer().clone(), r.denom().clone());
    // q is a power of two, so p/q = p * 5^k / 10^k.
    let k = q.bits() - 1;
    let digits = (p * BigInt::from(5).pow(k as u32)).to_string();
    let k = k as usize;
    let (int, frac) = if digits.len() > k {
        let (a, b) = digits.split_at(digits.len() - k);
        (a.to_owned(), b.to_owned())
    } else {
        ("0".to_owned(), format!("{}{digits}", "0".repeat(k - digits.len())))
    };
    let frac = frac.trim_end_matches('0');
    Some(format!("{int}.{}", if frac.is_empty() { "0" } else { frac }))
}

fn literal_to_smt(l: &Literal) -> Result<Term> {
    match l {
        Literal::Integer(n) if n.is_negative() => negate(numeral(&-n)),
        Literal::Integer(n) => Ok(numeral(n)),
        Literal::Float64(f) => {
            let d = decimal(*f).ok_or_else(|| {
                TranslateError::UntranslatableLiteral(format!("non-finite float {f}"))
            })?;
            let t = Term::Lit(Literal::Decimal(d));
            if f.is_sign_negative() && *f != 0.0 {
                negate(t)
            } else {
                Ok(t)
            }
        }
        Literal::ByteArray(_) => Err(TranslateError::UntranslatableLiteral(
            "byte arrays have no SMT-LIB counterpart".into(),
        )),
        _ => Ok(Term::Lit(l.clone())),
    }
}

/// Translates an OpenMath term into an SMT-LIB term.
///
/// Bound variables take their sort from the binder or from
/// `table.var_sorts`. `alg1.one` and `alg1.zero` become the numerals `1` and
/// `0` unless the map pairs them with a token.
pub fn om_to_smt(t: &Term, map: &SymbolMap, table: &SignatureTable) -> Result<Term> {
    match t {
        Term::Var(_) => Ok(t.clone()),
        Term::Lit(l) => literal_to_smt(l),
        Term::Sym(s) => symbol_to_smt(s, map),
        Term::Apply { head, args } => {
            let head = match &**head {
                Term::Sym(s) => symbol_to_smt(s, map)?,
                Term::Var(v) => smt_sym(v)?,
                h => {
                    return Err(TranslateError::Unsupported(format!(
                        "application of a compound head `{h}`"
                    )))
                }
            };
            if !matches!(head, Term::Sym(_)) {
                return Err(TranslateError::Unsupported(format!(
                    "application of the constant `{head}`"
                )));
            }
            let args = args
                .iter()
                .map(|a| om_to_smt(a, map, table))
                .collect::<Result<_>>()?;
            Ok(Term::apply(head, args))
        }
        Term::Bind {
            binder,
            vars,
            condition,
            body,
        } => {
            let quantifier = if binder.origin() == Origin::SmtTheory {
                Some(binder.clone())
            } else if binder.is(K::Forall) || binder.is(K::Exists) {
                map.to_smt(binder).map(Symbol::smt).transpose()?
            } else {
                None
            };
            let Some(q) = quantifier.filter(|q| q.is_smt("forall") || q.is_smt("exists")) else {
                if binder.origin() == Origin::Extension {
                    return Err(TranslateError::UnloweredExtension(binder.key()));
                }
                return Err(TranslateError::UnmappedBinder(binder.key()));
            };
            if condition.is_some() {
                return Err(TranslateError::UnmappedBinder(format!(
                    "{} with a condition",
                    binder.key()
                )));
            }
            let vars = vars
                .iter()
                .map(|v| {
                    let sort = v
                        .sort
                        .clone()
                        .or_else(|| table.var_sorts.get(&v.name).cloned())
                        .ok_or_else(|| TranslateError::UnsortableVariable(v.name.clone()))?;
                    Ok(BoundVar::sorted(v.name.clone(), sort))
                })
                .collect::<Result<_>>()?;
            Ok(Term::bind(q, vars, om_to_smt(body, map, table)?))
        }
        Term::Attributed { base, .. } => om_to_smt(base, map, table),
        Term::Error { symbol, .. } => Err(TranslateError::Unsupported(format!(
            "error object {}",
            symbol.key()
        ))),
        Term::Foreign { .. } => Err(TranslateError::Unsupported("foreign objects".into())),
    }
}

fn symbol_to_smt(s: &Symbol, map: &SymbolMap) -> Result<Term> {
    match s.origin() {
        Origin::SmtTheory => return Ok(Term::Sym(s.clone())),
        Origin::Extension => return Err(TranslateError::UnloweredExtension(s.key())),
        Origin::OpenMathCd => {}
    }
    if let Some(tok) = map.to_smt(s) {
        return smt_sym(tok);
    }
    if s.is(K::One) {
        return Ok(numeral(&BigInt::one()));
    }
    if s.is(K::Zero) {
        return Ok(numeral(&BigInt::zero()));
    }
    if s.namespace() == SMTLIB_CD {
        return smt_sym(s.name());
    }
    smt_sym(&mangle(s))
}

/// Translates an SMT-LIB term into an OpenMath term. Sorted bound variables
/// keep their sorts, which the XML encoding writes as attributions.
pub fn smt_to_om(t: &Term, map: &SymbolMap) -> Result<Term> {
    match t {
        Term::Var(v) => {
            if let Some(s) = unmangle(v) {
                return Ok(Term::Sym(s));
            }
            Ok(Term::var(unquote(v)))
        }
        Term::Lit(l) => literal_to_om(l),
        Term::Sym(s) => symbol_to_om(s, map),
        Term::Apply { head, args } => {
            if let (Term::Sym(s), [a]) = (&**head, args.as_slice()) {
                if s.is_smt("-") {
                    if let Term::Lit(l @ (Literal::Numeral(_) | Literal::Decimal(_))) = a {
                        return negative_literal(l);
                    }
                    return Ok(Term::app(K::UnaryMinus, vec![smt_to_om(a, map)?]));
                }
            }
            let head = match &**head {
                Term::Sym(s) => symbol_to_om(s, map)?,
                h => smt_to_om(h, map)?,
            };
            let args = args
                .iter()
                .map(|a| smt_to_om(a, map))
                .collect::<Result<_>>()?;
            Ok(Term::apply(head, args))
        }
        Term::Bind {
            binder,
            vars,
            condition,
            body,
        } => {
            let binder = if binder.origin() == Origin::SmtTheory {
                match map.to_om(binder.name()) {
                    Some(s) => s,
                    None => return Err(TranslateError::UnmappedBinder(binder.key())),
                }
            } else {
                binder.clone()
            };
            let vars = vars
                .iter()
                .map(|v| BoundVar {
                    name: unquote(&v.name).to_owned(),
                    sort: v.sort.clone(),
                })
                .collect();
            let condition = condition.as_deref().map(|c| smt_to_om(c, map)).transpose()?;
            Ok(Term::Bind {
                binder,
                vars,
                condition: condition.map(Box::new),
                body: Box::new(smt_to_om(body, map)?),
            })
        }
        _ => Ok(t.clone()),
    }
}

fn unquote(v: &str) -> &str {
    v.strip_prefix('|')
        .and_then(|s| s.strip_suffix('|'))
        .unwrap_or(v)
}

fn symbol_to_om(s: &Symbol, map: &SymbolMap) -> Result<Term> {
    if s.origin() != Origin::SmtTheory {
        return Ok(Term::Sym(s.clone()));
    }
    let name = s.name();
    if let Some(om) = map.to_om(name) {
        return Ok(Term::Sym(om));
    }
    if name.starts_with('|') {
        return unmangle(name)
            .map(Term::Sym)
            .ok_or_else(|| TranslateError::IrreversibleMangling(name.to_owned()));
    }
    Ok(Term::Sym(Symbol::from_cd(SMTLIB_CD, name)?))
}

fn literal_to_om(l: &Literal) -> Result<Term> {
    let bad = || TranslateError::UntranslatableLiteral(l.to_string());
    match l {
        Literal::Numeral(s) => Ok(Term::Lit(Literal::Integer(s.parse().map_err(|_| bad())?))),
        Literal::Hexadecimal(s) | Literal::Binary(s) => {
            let radix = if matches!(l, Literal::Hexadecimal(_)) { 16 } else { 2 };
            let n = BigInt::parse_bytes(&s.as_bytes()[2..], radix).ok_or_else(bad)?;
            Ok(Term::Lit(Literal::Integer(n)))
        }
        Literal::Decimal(_) => {
            let r = value_to_rational(&Term::Lit(l.clone())).ok_or_else(bad)?;
            Ok(rational_to_om(&r))
        }
        _ => Ok(Term::Lit(l.clone())),
    }
}

fn negative_literal(l: &Literal) -> Result<Term> {
    let bad = || TranslateError::UntranslatableLiteral(l.to_string());
    match l {
        Literal::Numeral(s) => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Term::Lit(Literal::Integer(-n)))
        }
        _ => {
            let r = value_to_rational(&Term::Lit(l.clone())).ok_or_else(bad)?;
            Ok(rational_to_om(&-r))
        }
    }
}

/// An `OMF` when the value is an exact double, else `arith1.divide(p, q)`.
fn rational_to_om(r: &BigRational) -> Term {
    if let Some(f) = r.to_f64() {
        if f.is_finite() && BigRational::from_float(f).as_ref() == Some(r) {
            return Term::Lit(Literal::Float64(f));
        }
    }
    Term::app(
        K::Divide,
        vec![
            Term::Lit(Literal::Integer(r.numer().clone())),
            Term::Lit(Literal::Integer(r.denom().clone())),
        ],
    )
}

/// Bound-variable sorts removed, attributions stripped.
fn erase_sorts(t: &Term) -> Term {
    match t.strip_attributions() {
        Term::Apply { head, args } => {
            Term::apply(erase_sorts(&head), args.iter().map(erase_sorts).collect())
        }
        Term::Bind {
            binder,
            vars,
            condition,
            body,
        } => Term::Bind {
            binder,
            vars: vars.into_iter().map(|v| BoundVar::new(v.name)).collect(),
            condition: condition.map(|c| Box::new(erase_sorts(&c))),
            body: Box::new(erase_sorts(&body)),
        },
        other => other,
    }
}

/// Outcome of [`roundtrip_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct Roundtrip {
    pub ok: bool,
    /// Why the check failed, or the two sides that differ.
    pub diagnostic: Option<String>,
}

/// True iff `smt_to_om(om_to_smt(t))` is alpha-equal to `t`, ignoring
/// attributions and bound-variable sorts.
pub fn roundtrip_check(t: &Term, map: &SymbolMap, table: &SignatureTable) -> Roundtrip {
    let back = om_to_smt(t, map, table).and_then(|s| smt_to_om(&s, map));
    match back {
        Err(e) => Roundtrip {
            ok: false,
            diagnostic: Some(e.to_string()),
        },
        Ok(b) => {
            let (x, y) = (erase_sorts(t), erase_sorts(&b));
            if alpha_equal(&x, &y) {
                Roundtrip {
                    ok: true,
                    diagnostic: None,
                }
            } else {
                Roundtrip {
                    ok: false,
                    diagnostic: Some(format!("before: {x}\nafter:  {y}")),
                }
            }
        }
    }
}

/// Copies the STS signature of every mapped OpenMath symbol to its SMT-LIB
/// token, so terms can be sort checked after translation.
pub fn translate_signatures(table: &mut SignatureTable, map: &SymbolMap) {
    let mapped: Vec<(Symbol, String)> = table
        .sts
        .keys()
        .filter_map(|s| {
            let tok = map.to_smt(s).map(str::to_owned).or_else(|| {
                (s.origin() == Origin::OpenMathCd).then(|| mangle(s))
            })?;
            Some((s.clone(), tok))
        })
        .collect();
    for (s, tok) in mapped {
        if let Ok(to) = Symbol::smt(&tok) {
            table.alias_signature(&s, to);
        }
    }
}
