use std::collections::BTreeMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use super::{FunctionValue, Interpretation, OracleError, Value};
use crate::ast::{free_variables, BoundVar, KnownSymbol as K, Literal, Origin, Symbol, Term};
use crate::smtlib::value_to_rational;

type Result<T> = std::result::Result<T, OracleError>;
type Env = Vec<(String, Value)>;

/// Evaluates `t` with the free variables given by `interp.vars`.
pub fn eval(t: &Term, interp: &Interpretation) -> Result<Value> {
    eval_with(t, interp, &[])
}

/// Like [`eval`], with `env` binding variables ahead of `interp.vars`.
pub fn eval_with(t: &Term, interp: &Interpretation, env: &[(String, Value)]) -> Result<Value> {
    Evaluator::new(interp).eval(t, &mut env.to_vec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Add,
    Mul,
    Sub,
    Neg,
    Div,
    IntDiv,
    Mod,
    Abs,
    Eq,
    Neq,
    Distinct,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
    Xor,
    Not,
    Implies,
    Ite,
    True,
    False,
    One,
    Zero,
    SetOf,
    In,
    Map,
    SuchThat,
    Interval,
    Max,
    Min,
    MaxSf,
    ToReal,
    ToInt,
    IsInt,
}

fn op_of(s: &Symbol) -> Option<Op> {
    if s.origin() == Origin::SmtTheory {
        return Some(match s.name() {
            "+" => Op::Add,
            "*" => Op::Mul,
            "-" => Op::Sub,
            "/" => Op::Div,
            "div" => Op::IntDiv,
            "mod" => Op::Mod,
            "abs" => Op::Abs,
            "=" => Op::Eq,
            "distinct" => Op::Distinct,
            "<" => Op::Lt,
            "<=" => Op::Le,
            ">" => Op::Gt,
            ">=" => Op::Ge,
            "and" => Op::And,
            "or" => Op::Or,
            "xor" => Op::Xor,
            "not" => Op::Not,
            "=>" => Op::Implies,
            "ite" => Op::Ite,
            "true" => Op::True,
            "false" => Op::False,
            "to_real" => Op::ToReal,
            "to_int" => Op::ToInt,
            "is_int" => Op::IsInt,
            _ => return None,
        });
    }
    Some(match s.known()? {
        K::Plus => Op::Add,
        K::Times | K::CommutativeTimes => Op::Mul,
        K::Minus => Op::Sub,
        K::UnaryMinus => Op::Neg,
        K::Divide => Op::Div,
        K::Eq => Op::Eq,
        K::Neq => Op::Neq,
        K::Lt => Op::Lt,
        K::Leq => Op::Le,
        K::Gt => Op::Gt,
        K::Geq => Op::Ge,
        K::And => Op::And,
        K::Or => Op::Or,
        K::Not => Op::Not,
        K::Implies => Op::Implies,
        K::True => Op::True,
        K::False => Op::False,
        K::One => Op::One,
        K::Zero => Op::Zero,
        K::Set => Op::SetOf,
        K::In => Op::In,
        K::Map => Op::Map,
        K::SuchThat => Op::SuchThat,
        K::IntervalCc => Op::Interval,
        K::Max => Op::Max,
        K::Min => Op::Min,
        K::MaxSetFunction => Op::MaxSf,
        _ => return None,
    })
}

fn mismatch(msg: impl Into<String>) -> OracleError {
    OracleError::TypeMismatch(msg.into())
}

fn rat(v: &Value) -> Result<&BigRational> {
    v.as_rational()
        .ok_or_else(|| mismatch(format!("expected a number, found {v}")))
}

fn boolean(v: &Value) -> Result<bool> {
    v.as_bool()
        .ok_or_else(|| mismatch(format!("expected a Boolean, found {v}")))
}

fn integer(v: &Value) -> Result<BigInt> {
    let r = rat(v)?;
    if !r.is_integer() {
        return Err(mismatch(format!("expected an integer, found {r}")));
    }
    Ok(r.to_integer())
}

fn elements(v: &Value) -> Result<&[Value]> {
    match v {
        Value::Set(items) => Ok(items),
        _ => Err(mismatch(format!("expected a set, found {v}"))),
    }
}

fn arity(op: Op, args: &[Value], ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(mismatch(format!("{op:?} applied to {} arguments", args.len())))
    }
}

fn literal(l: &Literal) -> Result<Value> {
    let r = match l {
        Literal::Integer(n) => BigRational::from_integer(n.clone()),
        Literal::Float64(f) => {
            BigRational::from_float(*f).ok_or_else(|| mismatch("non-finite float"))?
        }
        Literal::Numeral(s) | Literal::Decimal(s) => {
            let t = Term::Lit(l.clone());
            value_to_rational(&t).ok_or_else(|| mismatch(format!("bad number `{s}`")))?
        }
        Literal::Hexadecimal(s) | Literal::Binary(s) => {
            let radix = if matches!(l, Literal::Hexadecimal(_)) { 16 } else { 2 };
            BigRational::from_integer(
                BigInt::from_str_radix(&s[2..], radix)
                    .map_err(|_| mismatch(format!("bad number `{s}`")))?,
            )
        }
        Literal::String(_) | Literal::ByteArray(_) => {
            return Err(OracleError::Unsupported(format!("{} literals", l.kind().as_str())))
        }
    };
    Ok(Value::Rational(r))
}

fn chain(args: &[Value], ok: impl Fn(&Value, &Value) -> Result<bool>) -> Result<Value> {
    for w in args.windows(2) {
        if !ok(&w[0], &w[1])? {
            return Ok(Value::Bool(false));
        }
    }
    Ok(Value::Bool(true))
}

fn extremum(op: Op, args: &[Value]) -> Result<Value> {
    let items = match args {
        [Value::Set(items)] => items.as_slice(),
        _ => args,
    };
    for v in items {
        rat(v)?;
    }
    let best = if op == Op::Max {
        items.iter().max()
    } else {
        items.iter().min()
    };
    best.cloned().ok_or(OracleError::EmptyMax)
}

pub(super) struct Evaluator<'a> {
    interp: &'a Interpretation,
    /// Functions from `define-fun`: parameters and body.
    pub(super) defs: BTreeMap<String, (Vec<String>, Term)>,
    /// Values of declared constants, visible inside `defs` bodies.
    pub(super) globals: Env,
}

impl<'a> Evaluator<'a> {
    pub(super) fn new(interp: &'a Interpretation) -> Self {
        Evaluator {
            interp,
            defs: BTreeMap::new(),
            globals: Env::new(),
        }
    }

    pub(super) fn eval(&self, t: &Term, env: &mut Env) -> Result<Value> {
        match t {
            Term::Var(v) => self.variable(v, env),
            Term::Lit(l) => literal(l),
            Term::Sym(s) => self.constant(s),
            Term::Apply { head, args } => match &**head {
                Term::Sym(s) => {
                    let overridden =
                        self.interp.funs.contains_key(&s.key()) || self.defs.contains_key(s.name());
                    if !overridden && op_of(s) == Some(Op::Ite) {
                        let [c, a, b] = args.as_slice() else {
                            return Err(mismatch("ite takes three arguments"));
                        };
                        let branch = if boolean(&self.eval(c, env)?)? { a } else { b };
                        return self.eval(branch, env);
                    }
                    let vals = args
                        .iter()
                        .map(|a| self.eval(a, env))
                        .collect::<Result<Vec<_>>>()?;
                    self.apply_symbol(s, vals)
                }
                h => {
                    let f = self.eval(h, env)?;
                    let vals = args
                        .iter()
                        .map(|a| self.eval(a, env))
                        .collect::<Result<Vec<_>>>()?;
                    self.apply_value(&f, vals)
                }
            },
            Term::Bind {
                binder,
                vars,
                condition,
                body,
            } => self.bind(binder, vars, condition.as_deref(), body, env),
            Term::Attributed { base, .. } => self.eval(base, env),
            Term::Error { symbol, .. } => {
                Err(OracleError::Unsupported(format!("error object {}", symbol.key())))
            }
            Term::Foreign { .. } => Err(OracleError::Unsupported("foreign objects".into())),
        }
    }

    fn variable(&self, v: &str, env: &Env) -> Result<Value> {
        if let Some((_, val)) = env.iter().rev().find(|(n, _)| n == v) {
            return Ok(val.clone());
        }
        if let Some(val) = self.interp.vars.get(v) {
            return Ok(val.clone());
        }
        if let Some(val) = self.interp.funs.get(v).and_then(|t| t.get(&[])) {
            return Ok(val.clone());
        }
        match self.defs.get(v) {
            Some((params, body)) if params.is_empty() => self.eval(body, &mut self.globals.clone()),
            _ => Err(OracleError::UnboundVariable(v.to_owned())),
        }
    }

    fn constant(&self, s: &Symbol) -> Result<Value> {
        if let Some(t) = self.interp.funs.get(&s.key()) {
            if let Some(v) = t.entries.get(&Vec::new()) {
                return Ok(v.clone());
            }
        }
        match self.defs.get(s.name()) {
            Some((params, body)) if params.is_empty() && s.origin() == Origin::SmtTheory => {
                return self.eval(body, &mut self.globals.clone())
            }
            _ => {}
        }
        Ok(match op_of(s) {
            Some(Op::True) => Value::Bool(true),
            Some(Op::False) => Value::Bool(false),
            Some(Op::One) => Value::int(1),
            Some(Op::Zero) => Value::int(0),
            _ => Value::Function(Rc::new(FunctionValue::Named(s.clone()))),
        })
    }

    pub(super) fn apply_value(&self, f: &Value, args: Vec<Value>) -> Result<Value> {
        match f {
            Value::Function(fv) => match &**fv {
                FunctionValue::Closure { params, body, env } => {
                    if params.len() != args.len() {
                        return Err(mismatch(format!(
                            "function of {} arguments applied to {}",
                            params.len(),
                            args.len()
                        )));
                    }
                    let mut env = env.clone();
                    env.extend(params.iter().cloned().zip(args));
                    self.eval(body, &mut env)
                }
                FunctionValue::Named(s) => self.apply_symbol(s, args),
            },
            _ => Err(mismatch(format!("{f} is not a function"))),
        }
    }

    fn apply_symbol(&self, s: &Symbol, args: Vec<Value>) -> Result<Value> {
        let key = s.key();
        if let Some(t) = self.interp.funs.get(&key) {
            return t.get(&args).cloned().ok_or_else(|| OracleError::MissingTableEntry {
                function: key,
                args: args.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
            });
        }
        if s.origin() == Origin::SmtTheory {
            if let Some((params, body)) = self.defs.get(s.name()) {
                if params.len() != args.len() {
                    return Err(mismatch(format!("`{key}` applied to {} arguments", args.len())));
                }
                let mut env = self.globals.clone();
                env.extend(params.iter().cloned().zip(args));
                return self.eval(body, &mut env);
            }
        }
        match op_of(s) {
            Some(op) => self.apply_op(op, args),
            None => Err(OracleError::UnknownFunction(key)),
        }
    }

    fn apply_op(&self, op: Op, args: Vec<Value>) -> Result<Value> {
        let n = args.len();
        Ok(match op {
            Op::Add => {
                let mut acc = BigRational::zero();
                for a in &args {
                    acc += rat(a)?;
                }
                Value::Rational(acc)
            }
            Op::Mul => {
                let mut acc = BigRational::one();
                for a in &args {
                    acc *= rat(a)?;
                }
                Value::Rational(acc)
            }
            Op::Sub if n == 1 => Value::Rational(-rat(&args[0])?.clone()),
            Op::Sub => {
                arity(op, &args, n >= 2)?;
                let mut acc = rat(&args[0])?.clone();
                for a in &args[1..] {
                    acc -= rat(a)?;
                }
                Value::Rational(acc)
            }
            Op::Neg => {
                arity(op, &args, n == 1)?;
                Value::Rational(-rat(&args[0])?.clone())
            }
            Op::Div => {
                arity(op, &args, n >= 2)?;
                let mut acc = rat(&args[0])?.clone();
                for a in &args[1..] {
                    let d = rat(a)?;
                    if d.is_zero() {
                        return Err(OracleError::DivisionByZero);
                    }
                    acc /= d;
                }
                Value::Rational(acc)
            }
            Op::IntDiv | Op::Mod => {
                arity(op, &args, n == 2)?;
                let (a, b) = (integer(&args[0])?, integer(&args[1])?);
                if b.is_zero() {
                    return Err(OracleError::DivisionByZero);
                }
                // Euclidean: the remainder is never negative.
                let r = a.mod_floor(&b.abs());
                let q = (&a - &r) / &b;
                Value::Rational(BigRational::from_integer(if op == Op::Mod { r } else { q }))
            }
            Op::Abs => {
                arity(op, &args, n == 1)?;
                Value::Rational(rat(&args[0])?.abs())
            }
            Op::ToReal => {
                arity(op, &args, n == 1)?;
                Value::Rational(rat(&args[0])?.clone())
            }
            Op::ToInt => {
                arity(op, &args, n == 1)?;
                Value::Rational(rat(&args[0])?.floor())
            }
            Op::IsInt => {
                arity(op, &args, n == 1)?;
                Value::Bool(rat(&args[0])?.is_integer())
            }
            Op::Eq => {
                arity(op, &args, n >= 2)?;
                chain(&args, |a, b| Ok(a == b))?
            }
            Op::Neq => {
                arity(op, &args, n == 2)?;
                Value::Bool(args[0] != args[1])
            }
            Op::Distinct => {
                arity(op, &args, n >= 2)?;
                let mut sorted = args.clone();
                sorted.sort();
                sorted.dedup();
                Value::Bool(sorted.len() == n)
            }
            Op::Lt | Op::Le | Op::Gt | Op::Ge => {
                arity(op, &args, n >= 2)?;
                chain(&args, |a, b| {
                    let (a, b) = (rat(a)?, rat(b)?);
                    Ok(match op {
                        Op::Lt => a < b,
                        Op::Le => a <= b,
                        Op::Gt => a > b,
                        _ => a >= b,
                    })
                })?
            }
            Op::And | Op::Or | Op::Xor => {
                let mut bs = Vec::with_capacity(n);
                for a in &args {
                    bs.push(boolean(a)?);
                }
                Value::Bool(match op {
                    Op::And => bs.iter().all(|b| *b),
                    Op::Or => bs.iter().any(|b| *b),
                    _ => bs.iter().filter(|b| **b).count() % 2 == 1,
                })
            }
            Op::Not => {
                arity(op, &args, n == 1)?;
                Value::Bool(!boolean(&args[0])?)
            }
            Op::Implies => {
                arity(op, &args, n >= 2)?;
                // Right associative: a => (b => c).
                let mut acc = boolean(&args[n - 1])?;
                for a in args[..n - 1].iter().rev() {
                    acc = !boolean(a)? || acc;
                }
                Value::Bool(acc)
            }
            Op::Ite => unreachable!("ite is evaluated lazily"),
            Op::True => Value::Bool(true),
            Op::False => Value::Bool(false),
            Op::One => Value::int(1),
            Op::Zero => Value::int(0),
            Op::SetOf => {
                if args.iter().any(|a| matches!(a, Value::Function(_))) {
                    return Err(mismatch("a set of functions"));
                }
                Value::set(args)
            }
            Op::In => {
                arity(op, &args, n == 2)?;
                Value::Bool(elements(&args[1])?.contains(&args[0]))
            }
            Op::Map => {
                arity(op, &args, n == 2)?;
                let mut out = Vec::new();
                for e in elements(&args[1])? {
                    out.push(self.apply_value(&args[0], vec![e.clone()])?);
                }
                self.apply_op(Op::SetOf, out)?
            }
            Op::SuchThat => {
                arity(op, &args, n == 2)?;
                let mut out = Vec::new();
                for e in elements(&args[0])? {
                    if boolean(&self.apply_value(&args[1], vec![e.clone()])?)? {
                        out.push(e.clone());
                    }
                }
                Value::Set(out)
            }
            Op::Interval => {
                arity(op, &args, n == 2)?;
                let (a, b) = (rat(&args[0])?, rat(&args[1])?);
                let steps = self.interp.grid.ok_or(OracleError::InfiniteDomain)?;
                if steps == 0 {
                    return Err(OracleError::InfiniteDomain);
                }
                if a > b {
                    return Ok(Value::Set(Vec::new()));
                }
                let width = (b - a) / BigRational::from_integer(steps.into());
                let points = (0..=steps)
                    .map(|k| Value::Rational(a + &width * BigRational::from_integer(k.into())))
                    .collect();
                Value::set(points)
            }
            Op::Max | Op::Min => extremum(op, &args)?,
            Op::MaxSf => {
                arity(op, &args, n == 2)?;
                let image = self.apply_op(Op::Map, vec![args[1].clone(), args[0].clone()])?;
                extremum(Op::Max, &[image])?
            }
        })
    }

    fn bind(
        &self,
        binder: &Symbol,
        vars: &[BoundVar],
        condition: Option<&Term>,
        body: &Term,
        env: &mut Env,
    ) -> Result<Value> {
        let kind = binder.known();
        let smt = |n: &str| binder.is_smt(n);
        if matches!(kind, Some(K::Lambda)) {
            return Ok(Value::Function(Rc::new(FunctionValue::Closure {
                params: vars.iter().map(|v| v.name.clone()).collect(),
                body: body.clone(),
                env: env.clone(),
            })));
        }
        let quantifier = if smt("forall") || kind == Some(K::Forall) {
            Some(K::Forall)
        } else if smt("exists") || kind == Some(K::Exists) {
            Some(K::Exists)
        } else if kind == Some(K::ExistsUnique) {
            Some(K::ExistsUnique)
        } else {
            None
        };
        if let Some(q) = quantifier {
            if condition.is_some() {
                return Err(OracleError::Unsupported(format!(
                    "a condition on {}",
                    binder.key()
                )));
            }
            let mut count = 0usize;
            let limit = if q == K::ExistsUnique { 2 } else { 1 };
            let want = q != K::Forall;
            self.quantify(vars, body, env, &mut |b| {
                if b == want {
                    count += 1;
                }
                count < limit
            })?;
            return Ok(Value::Bool(match q {
                K::Forall => count == 0,
                K::Exists => count >= 1,
                _ => count == 1,
            }));
        }
        match kind {
            Some(k @ (K::MaxBinder | K::Argmax | K::ArgmaxOne)) => {
                self.optimize(k, vars, condition, body, env)
            }
            _ => Err(OracleError::Unsupported(format!("binder {}", binder.key()))),
        }
    }

    // Calls `visit` with the body's value under every assignment, in
    // carrier order, until it returns false.
    fn quantify(
        &self,
        vars: &[BoundVar],
        body: &Term,
        env: &mut Env,
        visit: &mut dyn FnMut(bool) -> bool,
    ) -> Result<bool> {
        let Some((v, rest)) = vars.split_first() else {
            let b = self.eval(body, env)?;
            let b = b
                .as_bool()
                .ok_or_else(|| OracleError::NonBooleanQuantifierBody(body.to_string()))?;
            return Ok(visit(b));
        };
        for value in self.interp.carrier(v.sort.as_ref())? {
            env.push((v.name.clone(), value.clone()));
            let go_on = self.quantify(rest, body, env, visit);
            env.pop();
            if !go_on? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn optimize(
        &self,
        kind: K,
        vars: &[BoundVar],
        condition: Option<&Term>,
        body: &Term,
        env: &mut Env,
    ) -> Result<Value> {
        let [x] = vars else {
            return Err(OracleError::Unsupported(format!(
                "{} over {} variables",
                kind.symbol().key(),
                vars.len()
            )));
        };
        let candidates = match condition.and_then(|c| explicit_domain(&x.name, c)) {
            Some(s) => elements(&self.eval(s, env)?)?.to_vec(),
            None => self.interp.carrier(x.sort.as_ref())?.to_vec(),
        };
        let mut scored: Vec<(Value, BigRational)> = Vec::new();
        for c in candidates {
            env.push((x.name.clone(), c.clone()));
            let r = (|| -> Result<Option<BigRational>> {
                if let Some(cond) = condition {
                    if !boolean(&self.eval(cond, env)?)? {
                        return Ok(None);
                    }
                }
                Ok(Some(rat(&self.eval(body, env)?)?.clone()))
            })();
            env.pop();
            if let Some(score) = r? {
                scored.push((c, score));
            }
        }
        let best = scored.iter().map(|(_, s)| s).max().cloned();
        let Some(best) = best else {
            return match kind {
                K::Argmax => Ok(Value::Set(Vec::new())),
                _ => Err(OracleError::EmptyMax),
            };
        };
        let mut winners: Vec<Value> = scored
            .into_iter()
            .filter(|(_, s)| *s == best)
            .map(|(c, _)| c)
            .collect();
        winners.sort();
        Ok(match kind {
            K::MaxBinder => Value::Rational(best),
            K::Argmax => Value::set(winners),
            _ => winners.swap_remove(0),
        })
    }
}

// `S` when the condition is `x ∈ S` or starts with it.
fn explicit_domain<'t>(x: &str, cond: &'t Term) -> Option<&'t Term> {
    let first = match cond {
        Term::Apply { args, .. } if cond.is_app_of(K::And) => args.first()?,
        _ => cond,
    };
    match first {
        Term::Apply { args, .. } if first.is_app_of(K::In) => match args.as_slice() {
            [Term::Var(v), s] if v == x && !free_variables(s).contains(x) => Some(s),
            _ => None,
        },
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::FunTable;
    use crate::smtlib::{parse_smt_term_str, SmtScope};

    fn smt(s: &str) -> Term {
        parse_smt_term_str(s, &SmtScope::lenient()).unwrap()
    }

    #[test]
    fn x_plus_one() {
        let t = Term::app(K::Plus, vec![Term::var("x"), Term::int(1)]);
        let i = Interpretation::new().with_var("x", Value::int(1));
        assert_eq!(eval(&t, &i), Ok(Value::int(2)));
    }

    #[test]
    fn smt_arithmetic_is_exact() {
        let i = Interpretation::new();
        assert_eq!(eval(&smt("(/ 1 3)"), &i), Ok(Value::ratio(1, 3)));
        assert_eq!(eval(&smt("(- 1 0.25)"), &i), Ok(Value::ratio(3, 4)));
        assert_eq!(eval(&smt("(- 5)"), &i), Ok(Value::int(-5)));
        assert_eq!(eval(&smt("(div (- 7) 2)"), &i), Ok(Value::int(-4)));
        assert_eq!(eval(&smt("(mod (- 7) 2)"), &i), Ok(Value::int(1)));
        assert_eq!(eval(&smt("(div 7 (- 2))"), &i), Ok(Value::int(-3)));
        assert_eq!(eval(&smt("(< 1 2 3)"), &i), Ok(Value::Bool(true)));
        assert_eq!(eval(&smt("(=> false true false)"), &i), Ok(Value::Bool(true)));
        assert_eq!(eval(&smt("(ite (> 1 2) (/ 1 0) 7)"), &i), Ok(Value::int(7)));
        assert_eq!(eval(&smt("(/ 1 0)"), &i), Err(OracleError::DivisionByZero));
        assert_eq!(eval(&smt("#xFF"), &i), Ok(Value::int(255)));
    }

    #[test]
    fn quantifiers_enumerate_carriers() {
        let i = Interpretation::new().with_carrier("Int", (0..3).map(Value::int).collect());
        assert_eq!(eval(&smt("(forall ((x Int)) (< x 3))"), &i), Ok(Value::Bool(true)));
        assert_eq!(eval(&smt("(exists ((x Int)) (> x 1))"), &i), Ok(Value::Bool(true)));
        assert_eq!(
            eval(&smt("(forall ((x Int) (y Int)) (= (+ x y) (+ y x)))"), &i),
            Ok(Value::Bool(true))
        );
        assert!(matches!(
            eval(&smt("(forall ((x Int)) x)"), &i),
            Err(OracleError::NonBooleanQuantifierBody(_))
        ));
        assert!(matches!(
            eval(&smt("(forall ((x S)) true)"), &i),
            Err(OracleError::NoCarrier(_))
        ));
    }

    #[test]
    fn exists_unique_counts() {
        let i = Interpretation::new().with_default_sort("D").with_carrier("D", (0..3).map(Value::int).collect());
        let eu = |rhs: Term, k| {
            Term::bind(
                K::ExistsUnique,
                vec![BoundVar::new("x")],
                Term::app(k, vec![Term::var("x"), rhs]),
            )
        };
        assert_eq!(eval(&eu(Term::int(1), K::Eq), &i), Ok(Value::Bool(true)));
        assert_eq!(eval(&eu(Term::int(1), K::Leq), &i), Ok(Value::Bool(false)));
    }

    #[test]
    fn interval_needs_grid() {
        let t = Term::app(K::IntervalCc, vec![Term::int(0), Term::int(1)]);
        assert_eq!(eval(&t, &Interpretation::new()), Err(OracleError::InfiniteDomain));
        let v = eval(&t, &Interpretation::new().with_grid(4)).unwrap();
        assert_eq!(
            v,
            Value::set((0..=4).map(|k| Value::ratio(k, 4)).collect())
        );
    }

    #[test]
    fn tables_override_builtins() {
        let mod3: FunTable = FunTable::from_entries((0..3).flat_map(|a| {
            (0..3).map(move |b| (vec![Value::int(a), Value::int(b)], Value::int(a * b % 3)))
        }));
        let i = Interpretation::new().with_fun("arith2.times", mod3);
        let t = Term::app(K::CommutativeTimes, vec![Term::int(2), Term::int(2)]);
        assert_eq!(eval(&t, &i), Ok(Value::int(1)));
        let t = Term::app(K::CommutativeTimes, vec![Term::int(2), Term::int(5)]);
        assert!(matches!(eval(&t, &i), Err(OracleError::MissingTableEntry { .. })));
    }

    #[test]
    fn max_of_empty_set() {
        let t = Term::app(K::Max, vec![Term::app(K::Set, vec![])]);
        assert_eq!(eval(&t, &Interpretation::new()), Err(OracleError::EmptyMax));
    }
}
