use num_rational::BigRational;

use super::eval::Evaluator;
use super::{Interpretation, OracleError, Value};
use crate::ast::{free_variables, Sort, Symbol, Term};
use crate::smtlib::{rational_to_value, Command, Script, SmtError, SolverResult};

type Assignment = Vec<(String, Value)>;

/// Largest number of assignments [`eval_script`] will enumerate.
pub const DEFAULT_SEARCH_LIMIT: u128 = 1_000_000;

/// Answers a script by exhaustive search; see the module documentation.
pub fn eval_script(script: &Script, interp: &Interpretation) -> Result<SolverResult, OracleError> {
    eval_script_with_limit(script, interp, DEFAULT_SEARCH_LIMIT)
}

pub fn eval_script_with_limit(
    script: &Script,
    interp: &Interpretation,
    limit: u128,
) -> Result<SolverResult, OracleError> {
    let mut ev = Evaluator::new(interp);
    let mut sorts: Vec<Sort> = Vec::new();
    let mut declared: Vec<(String, Sort)> = Vec::new();
    let mut asserts = Vec::new();
    let mut goals: Vec<(bool, &Term)> = Vec::new();
    let mut queries: Vec<&Term> = Vec::new();
    let mut checked = false;
    for c in &script.commands {
        if checked {
            match c {
                Command::GetValue(ts) => queries.extend(ts),
                Command::GetModel | Command::Exit | Command::Other(_) => {}
                _ => {
                    return Err(OracleError::Unsupported(
                        "commands after the first check-sat".into(),
                    ))
                }
            }
            continue;
        }
        match c {
            Command::SetLogic(_) | Command::Exit | Command::Other(_) | Command::GetModel => {}
            Command::DeclareSort { name, arity } => {
                if *arity > 0 {
                    return Err(OracleError::Unsupported(format!("sort constructor {name}")));
                }
                sorts.push(Sort::named(name.clone()));
            }
            Command::DeclareFun { name, args, result } if args.is_empty() => {
                declared.push((name.clone(), result.clone()));
            }
            Command::DeclareFun { name, .. } => {
                if !interp.funs.contains_key(name) {
                    return Err(OracleError::UninterpretedFunction(name.clone()));
                }
            }
            Command::DefineFun {
                name, params, body, ..
            } => {
                let params = params.iter().map(|(p, _)| p.clone()).collect();
                ev.defs.insert(name.clone(), (params, body.clone()));
            }
            Command::Assert(t) => asserts.push(t),
            Command::Maximize(t) => goals.push((true, t)),
            Command::Minimize(t) => goals.push((false, t)),
            Command::GetValue(_) => return Err(OracleError::NoGoalBeforeGetValue),
            Command::CheckSat => checked = true,
        }
    }
    if !checked {
        return Err(OracleError::NoCheckSat);
    }
    // A false ground assertion settles the answer without any carrier.
    for a in &asserts {
        if free_variables(a).iter().any(|v| declared.iter().any(|(n, _)| n == v)) {
            continue;
        }
        // Errors here (e.g. a defined constant over declared ones) resurface
        // during the search.
        if ev.eval(a, &mut Vec::new()) == Ok(Value::Bool(false)) {
            return Ok(SolverResult::unsat());
        }
    }
    for s in &sorts {
        interp.carrier(Some(s))?;
    }
    let mut consts: Vec<(String, Vec<Value>)> = Vec::new();
    for (name, sort) in declared {
        let domain = match interp.vars.get(&name) {
            Some(v) => vec![v.clone()],
            None => interp.carrier(Some(&sort))?.to_vec(),
        };
        consts.push((name, domain));
    }
    let size = consts
        .iter()
        .try_fold(1u128, |acc, (_, d)| acc.checked_mul(d.len() as u128))
        .unwrap_or(u128::MAX);
    if size > limit {
        return Err(OracleError::SearchTooLarge(size));
    }

    let mut best: Option<(Vec<BigRational>, Assignment)> = None;
    let mut index = vec![0usize; consts.len()];
    'search: loop {
        let mut env: Vec<(String, Value)> = consts
            .iter()
            .zip(&index)
            .map(|((n, d), &i)| (n.clone(), d[i].clone()))
            .collect();
        ev.globals.clone_from(&env);
        let mut ok = true;
        for a in &asserts {
            let v = ev.eval(a, &mut env)?;
            if !v
                .as_bool()
                .ok_or_else(|| OracleError::TypeMismatch(format!("assertion evaluates to {v}")))?
            {
                ok = false;
                break;
            }
        }
        if ok {
            let mut score = Vec::with_capacity(goals.len());
            for (maximize, g) in &goals {
                let v = ev.eval(g, &mut env)?;
                let r = v
                    .as_rational()
                    .ok_or_else(|| OracleError::TypeMismatch(format!("objective evaluates to {v}")))?;
                score.push(if *maximize { r.clone() } else { -r });
            }
            let better = match &best {
                None => true,
                Some((s, _)) => score > *s,
            };
            if better {
                best = Some((score, env));
                if goals.is_empty() {
                    break 'search;
                }
            }
        }
        // Odometer step; the first declared constant varies slowest.
        let mut k = index.len();
        loop {
            if k == 0 {
                break 'search;
            }
            k -= 1;
            index[k] += 1;
            if index[k] < consts[k].1.len() {
                break;
            }
            index[k] = 0;
        }
    }

    let Some((_, mut env)) = best else {
        return Ok(SolverResult::unsat());
    };
    ev.globals.clone_from(&env);
    let mut model = Vec::new();
    if queries.is_empty() {
        for (name, value) in &env {
            model.push((Term::var(name.clone()), value_term(value)?));
        }
    } else {
        for q in queries {
            let v = ev.eval(q, &mut env)?;
            model.push((q.clone(), value_term(&v)?));
        }
    }
    Ok(SolverResult::sat(model)?)
}

fn value_term(v: &Value) -> Result<Term, OracleError> {
    match v {
        Value::Bool(b) => Ok(Term::Sym(Symbol::smt(if *b { "true" } else { "false" }).map_err(SmtError::from)?)),
        Value::Rational(r) => Ok(rational_to_value(r)),
        Value::Element { .. } => Ok(Term::var(v.to_string())),
        _ => Err(OracleError::Unsupported(format!("model value {v}"))),
    }
}
