//! The exists-unique, max, argmax and argmaxone constructors and their
//! lowering to standard symbols.
//!
//! `quant2.exists_unique` expands to plain quantifiers in one of two ways:
//!
//! * alternation: `∃x (P(x) ∧ ∀y (P(y) ⇒ x = y))`, two copies of `P`;
//! * two quantifiers: `(∃x P(x)) ∧ ∀y ∀z (P(y) ∧ P(z) ⇒ y = z)`, three copies.
//!
//! `minmax2.max_sf(S, f)` and the binder `minmax2.max[x | x ∈ S] f(x)` both
//! lower to `minmax1.max(set1.map(f, S))`; `minmax2.argmax` lowers to the
//! comprehension `{x ∈ S | f(x) = max f(S)}`. Only attained maxima are
//! modelled: a supremum that no point reaches is out of scope.
//!
//! `minmax2.argmaxone` asks for a single maximizing point and so has no term
//! lowering; it becomes an optimization script (`maximize`, `check-sat`,
//! `get-value`).

use std::collections::BTreeSet;

use thiserror::Error;

use crate::ast::{all_names, free_variables, fresh_name, substitute, BoundVar, KnownSymbol as K, Origin, Sort, Term};
use crate::smtlib::{Command, Script};
use crate::sorts::{check_sorts, SignatureTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExistsUniqueForm {
    /// `∃x (P(x) ∧ ∀y (P(y) ⇒ x = y))`.
    #[default]
    Alternation,
    /// `(∃x P(x)) ∧ ∀y ∀z (P(y) ∧ P(z) ⇒ y = z)`.
    TwoQuantifier,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MaxForm {
    /// `minmax2.max_sf(S, λx. f)`.
    #[default]
    SetFunctionOperator,
    /// `minmax2.max[x | x ∈ S] f`.
    RestrictedBinder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DesugarStrategy {
    pub exists_unique: ExistsUniqueForm,
    pub max_form: MaxForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationGoal {
    pub direction: Direction,
    pub objective: Term,
    pub witness_vars: Vec<(String, Sort)>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExtensionError {
    #[error("exists-unique over {0} variables is not supported")]
    MultiVarNotSupported(usize),
    #[error("not an exists-unique binder: {0}")]
    NotExistsUnique(String),
    #[error("not a max form: {0}")]
    NotAMaxForm(String),
    #[error("max binder without a restricting predicate")]
    ConditionMissing,
    #[error("not an argmax form: {0}")]
    NotArgmaxForm(String),
    #[error("argmaxone has no term lowering; use an optimization script")]
    ArgmaxOneInTerm,
    #[error("goal does not sort-check: {0}")]
    UnsortedGoal(String),
    #[error("witness `{0}` occurs in neither the objectives nor the constraints")]
    WitnessNotFree(String),
    #[error("witness `{0}` is given two different sorts")]
    ConflictingWitnessSort(String),
}

type Result<T> = std::result::Result<T, ExtensionError>;

fn lambda(v: BoundVar, body: Term) -> Term {
    Term::bind(K::Lambda, vec![v], body)
}

fn fresh_var(base: &str, avoid: &mut BTreeSet<String>) -> String {
    let name = if avoid.contains(base) {
        fresh_name(base, avoid)
    } else {
        base.to_owned()
    };
    avoid.insert(name.clone());
    name
}

/// True if an extension symbol occurs anywhere in `t`.
pub fn contains_extension(t: &Term) -> bool {
    let mut found = false;
    t.for_each_subterm(&mut |s| {
        let sym = match s {
            Term::Sym(x) => Some(x),
            Term::Bind { binder, .. } => Some(binder),
            _ => None,
        };
        found |= sym.is_some_and(|x| x.origin() == Origin::Extension && !x.is(K::SortAttribution));
    });
    found
}

/// Expands one `quant2.exists_unique` bind.
pub fn desugar_exists_unique(b: &Term, form: ExistsUniqueForm) -> Result<Term> {
    let Term::Bind {
        binder,
        vars,
        condition,
        body,
    } = b
    else {
        return Err(ExtensionError::NotExistsUnique(b.to_string()));
    };
    if !binder.is(K::ExistsUnique) || condition.is_some() {
        return Err(ExtensionError::NotExistsUnique(binder.key()));
    }
    let [x] = vars.as_slice() else {
        return Err(ExtensionError::MultiVarNotSupported(vars.len()));
    };
    let mut avoid = all_names(body);
    avoid.insert(x.name.clone());
    let renamed = |name: &str| BoundVar {
        name: name.to_owned(),
        sort: x.sort.clone(),
    };
    let p = |name: &str| substitute(body, &x.name, &Term::var(name));
    let eq = |a: &str, b: &str| Term::app(K::Eq, vec![Term::var(a), Term::var(b)]);
    let y = fresh_var("y", &mut avoid);
    Ok(match form {
        ExistsUniqueForm::Alternation => Term::bind(
            K::Exists,
            vec![x.clone()],
            Term::app(
                K::And,
                vec![
                    (**body).clone(),
                    Term::bind(
                        K::Forall,
                        vec![renamed(&y)],
                        Term::app(K::Implies, vec![p(&y), eq(&x.name, &y)]),
                    ),
                ],
            ),
        ),
        ExistsUniqueForm::TwoQuantifier => {
            let z = fresh_var("z", &mut avoid);
            Term::app(
                K::And,
                vec![
                    Term::bind(K::Exists, vec![x.clone()], (**body).clone()),
                    Term::bind(
                        K::Forall,
                        vec![renamed(&y), renamed(&z)],
                        Term::app(
                            K::Implies,
                            vec![Term::app(K::And, vec![p(&y), p(&z)]), eq(&y, &z)],
                        ),
                    ),
                ],
            )
        }
    })
}

/// The set a restricting predicate ranges `x` over: `x ∈ S` gives `S`, and
/// `x ∈ S ∧ φ` gives `{x ∈ S | φ}`.
fn domain_of(x: &BoundVar, cond: &Term) -> Option<Term> {
    let member = |t: &Term| match t {
        Term::Apply { args, .. } if t.is_app_of(K::In) => match args.as_slice() {
            [Term::Var(v), s] if *v == x.name && !free_variables(s).contains(&x.name) => {
                Some(s.clone())
            }
            _ => None,
        },
        _ => None,
    };
    if let Some(s) = member(cond) {
        return Some(s);
    }
    let Term::Apply { args, .. } = cond else {
        return None;
    };
    if !cond.is_app_of(K::And) || args.len() < 2 {
        return None;
    }
    let s = member(&args[0])?;
    let rest = if args.len() == 2 {
        args[1].clone()
    } else {
        Term::app(K::And, args[1..].to_vec())
    };
    Some(Term::app(K::SuchThat, vec![s, lambda(x.clone(), rest)]))
}

/// Builds `max_{x ∈ set} body` in the requested extension form.
pub fn build_max(form: MaxForm, x: BoundVar, set: Term, body: Term) -> Term {
    match form {
        MaxForm::SetFunctionOperator => Term::app(K::MaxSetFunction, vec![set, lambda(x, body)]),
        MaxForm::RestrictedBinder => {
            let cond = Term::app(K::In, vec![Term::var(x.name.clone()), set]);
            Term::bind_with_condition(K::MaxBinder, vec![x], cond, body)
        }
    }
}

/// Lowers `minmax2.max_sf(S, f)` or a `minmax2.max` bind to
/// `minmax1.max(set1.map(f, S))`.
pub fn lower_max(t: &Term) -> Result<Term> {
    match t {
        Term::Apply { args, .. } if t.is_app_of(K::MaxSetFunction) => match args.as_slice() {
            [set, f] => Ok(Term::app(K::Max, vec![Term::app(K::Map, vec![f.clone(), set.clone()])])),
            _ => Err(ExtensionError::NotAMaxForm(format!(
                "max_sf takes a set and a function, got {} arguments",
                args.len()
            ))),
        },
        Term::Bind {
            binder,
            vars,
            condition,
            body,
        } if binder.is(K::MaxBinder) => {
            let [x] = vars.as_slice() else {
                return Err(ExtensionError::NotAMaxForm(format!(
                    "max binds {} variables",
                    vars.len()
                )));
            };
            let cond = condition.as_ref().ok_or(ExtensionError::ConditionMissing)?;
            let set = domain_of(x, cond).ok_or_else(|| {
                ExtensionError::NotAMaxForm(format!("predicate `{cond}` names no set for `{}`", x.name))
            })?;
            Ok(Term::app(
                K::Max,
                vec![Term::app(K::Map, vec![lambda(x.clone(), (**body).clone()), set])],
            ))
        }
        _ => Err(ExtensionError::NotAMaxForm(t.to_string())),
    }
}

/// Lowers `argmax[x | x ∈ S] f(x)` to `{x ∈ S | f(x) = max(map(λy. f(y), S))}`.
pub fn lower_argmax(t: &Term) -> Result<Term> {
    let Term::Bind {
        binder,
        vars,
        condition,
        body,
    } = t
    else {
        return Err(ExtensionError::NotArgmaxForm(t.to_string()));
    };
    if !binder.is(K::Argmax) {
        return Err(ExtensionError::NotArgmaxForm(binder.key()));
    }
    let [x] = vars.as_slice() else {
        return Err(ExtensionError::NotArgmaxForm(format!(
            "argmax binds {} variables",
            vars.len()
        )));
    };
    let cond = condition
        .as_ref()
        .ok_or_else(|| ExtensionError::NotArgmaxForm("no restricting predicate".into()))?;
    let set = domain_of(x, cond).ok_or_else(|| {
        ExtensionError::NotArgmaxForm(format!("predicate `{cond}` names no set for `{}`", x.name))
    })?;
    let mut avoid = all_names(body);
    avoid.extend(all_names(&set));
    avoid.insert(x.name.clone());
    let y = fresh_var("y", &mut avoid);
    let fy = substitute(body, &x.name, &Term::var(y.clone()));
    let best = Term::app(
        K::Max,
        vec![Term::app(
            K::Map,
            vec![
                lambda(
                    BoundVar {
                        name: y,
                        sort: x.sort.clone(),
                    },
                    fy,
                ),
                set.clone(),
            ],
        )],
    );
    let pred = Term::app(K::Eq, vec![(**body).clone(), best]);
    Ok(Term::app(K::SuchThat, vec![set, lambda(x.clone(), pred)]))
}

/// Lowers every extension constructor in `t`, innermost first.
pub fn desugar_all(t: &Term, strategy: &DesugarStrategy) -> Result<Term> {
    let t = map_children(t, &|c| desugar_all(c, strategy))?;
    match &t {
        Term::Bind { binder, .. } => match binder.known() {
            Some(K::ExistsUnique) => desugar_exists_unique(&t, strategy.exists_unique),
            Some(K::MaxBinder) => lower_max(&t),
            Some(K::Argmax) => lower_argmax(&t),
            Some(K::ArgmaxOne) => Err(ExtensionError::ArgmaxOneInTerm),
            _ => Ok(t),
        },
        Term::Apply { .. } if t.is_app_of(K::MaxSetFunction) => lower_max(&t),
        Term::Sym(s) if s.is(K::ArgmaxOne) => Err(ExtensionError::ArgmaxOneInTerm),
        _ => Ok(t),
    }
}

fn map_children(t: &Term, f: &dyn Fn(&Term) -> Result<Term>) -> Result<Term> {
    Ok(match t {
        Term::Apply { head, args } => Term::apply(
            f(head)?,
            args.iter().map(f).collect::<Result<_>>()?,
        ),
        Term::Bind {
            binder,
            vars,
            condition,
            body,
        } => Term::Bind {
            binder: binder.clone(),
            vars: vars.clone(),
            condition: condition.as_ref().map(|c| f(c).map(Box::new)).transpose()?,
            body: Box::new(f(body)?),
        },
        Term::Attributed { pairs, base } => Term::Attributed {
            pairs: pairs
                .iter()
                .map(|(k, v)| Ok((k.clone(), f(v)?)))
                .collect::<Result<_>>()?,
            base: Box::new(f(base)?),
        },
        Term::Error { symbol, args } => Term::Error {
            symbol: symbol.clone(),
            args: args.iter().map(f).collect::<Result<_>>()?,
        },
        _ => t.clone(),
    })
}

fn split_constraint(c: Term, out: &mut Vec<Term>) {
    match c {
        Term::Apply { ref args, .. } if c.is_app_of(K::And) => {
            for a in args {
                split_constraint(a.clone(), out);
            }
        }
        other => out.push(other),
    }
}

fn membership_constraint(x: &str, cond: &Term) -> Option<Term> {
    let Term::Apply { args, .. } = cond else {
        return None;
    };
    if !cond.is_app_of(K::In) {
        return None;
    }
    let [Term::Var(v), set] = args.as_slice() else {
        return None;
    };
    if v != x {
        return None;
    }
    let Term::Apply { args: elems, .. } = set else {
        return None;
    };
    let xv = Term::var(x);
    if set.is_app_of(K::IntervalCc) {
        let [lo, hi] = elems.as_slice() else {
            return None;
        };
        return Some(Term::app(
            K::And,
            vec![
                Term::app(K::Leq, vec![lo.clone(), xv.clone()]),
                Term::app(K::Leq, vec![xv, hi.clone()]),
            ],
        ));
    }
    if set.is_app_of(K::Set) && !elems.is_empty() {
        let eqs: Vec<Term> = elems
            .iter()
            .map(|e| Term::app(K::Eq, vec![xv.clone(), e.clone()]))
            .collect();
        return Some(if eqs.len() == 1 {
            eqs.into_iter().next().expect("one")
        } else {
            Term::app(K::Or, eqs)
        });
    }
    None
}

/// Reads `argmaxone[x | cond] f` as a maximization goal for `f` with
/// witness `x` and the constraints of `cond`. Membership in a closed
/// interval or finite set becomes comparisons, and conjunctions split into
/// separate constraints.
pub fn goal_from_argmaxone(
    t: &Term,
    table: &SignatureTable,
) -> Result<(OptimizationGoal, Vec<Term>)> {
    let Term::Bind {
        binder,
        vars,
        condition,
        body,
    } = t
    else {
        return Err(ExtensionError::NotArgmaxForm(t.to_string()));
    };
    if !binder.is(K::ArgmaxOne) {
        return Err(ExtensionError::NotArgmaxForm(binder.key()));
    }
    let mut witness_vars = Vec::with_capacity(vars.len());
    for v in vars {
        let sort = v
            .sort
            .clone()
            .or_else(|| table.var_sorts.get(&v.name).cloned())
            .ok_or_else(|| ExtensionError::UnsortedGoal(format!("witness `{}` has no sort", v.name)))?;
        witness_vars.push((v.name.clone(), sort));
    }
    let mut constraints = Vec::new();
    if let Some(c) = condition {
        let mut parts = Vec::new();
        split_constraint((**c).clone(), &mut parts);
        for p in parts {
            let p = match vars.as_slice() {
                [x] => membership_constraint(&x.name, &p).unwrap_or(p),
                _ => p,
            };
            split_constraint(p, &mut constraints);
        }
    }
    Ok((
        OptimizationGoal {
            direction: Direction::Maximize,
            objective: (**body).clone(),
            witness_vars,
        },
        constraints,
    ))
}

/// Script for one goal: declarations, constraints, the goal, `check-sat`
/// and `get-value` of the witnesses.
pub fn lower_argmaxone_to_script(
    goal: &OptimizationGoal,
    constraints: &[Term],
    table: &SignatureTable,
) -> Result<Script> {
    lower_goals_to_script(std::slice::from_ref(goal), constraints, table)
}

/// Like [`lower_argmaxone_to_script`] for several goals, optimized
/// lexicographically in the given order.
pub fn lower_goals_to_script(
    goals: &[OptimizationGoal],
    constraints: &[Term],
    table: &SignatureTable,
) -> Result<Script> {
    let mut witnesses: Vec<(String, Sort)> = Vec::new();
    for (name, sort) in goals.iter().flat_map(|g| &g.witness_vars) {
        match witnesses.iter().find(|(n, _)| n == name) {
            Some((_, s)) if s != sort => {
                return Err(ExtensionError::ConflictingWitnessSort(name.clone()))
            }
            Some(_) => {}
            None => witnesses.push((name.clone(), sort.clone())),
        }
    }
    let mut free = BTreeSet::new();
    for t in goals.iter().map(|g| &g.objective).chain(constraints) {
        free.extend(free_variables(t));
    }
    if let Some((name, _)) = witnesses.iter().find(|(n, _)| !free.contains(n)) {
        return Err(ExtensionError::WitnessNotFree(name.clone()));
    }
    let mut scope = table.clone();
    for (name, sort) in &witnesses {
        scope.declare_fun(name.clone(), Vec::new(), sort.clone());
    }
    let unsorted = |what: &str, t: &Term, e: String| {
        ExtensionError::UnsortedGoal(format!("{what} `{t}`: {e}"))
    };
    for g in goals {
        match check_sorts(&g.objective, &scope) {
            Ok(s) if s == Sort::int() || s == Sort::real() => {}
            Ok(s) => {
                return Err(unsorted("objective", &g.objective, format!("sort {s} is not numeric")))
            }
            Err(e) => return Err(unsorted("objective", &g.objective, e.to_string())),
        }
    }
    for c in constraints {
        match check_sorts(c, &scope) {
            Ok(s) if s == Sort::bool() => {}
            Ok(s) => return Err(unsorted("constraint", c, format!("sort {s} is not Bool"))),
            Err(e) => return Err(unsorted("constraint", c, e.to_string())),
        }
    }
    let mut commands: Vec<Command> = witnesses
        .iter()
        .map(|(name, sort)| Command::DeclareFun {
            name: name.clone(),
            args: Vec::new(),
            result: sort.clone(),
        })
        .collect();
    commands.extend(constraints.iter().cloned().map(Command::Assert));
    commands.extend(goals.iter().map(|g| match g.direction {
        Direction::Maximize => Command::Maximize(g.objective.clone()),
        Direction::Minimize => Command::Minimize(g.objective.clone()),
    }));
    commands.push(Command::CheckSat);
    commands.push(Command::GetValue(
        witnesses.iter().map(|(n, _)| Term::var(n.clone())).collect(),
    ));
    Ok(Script::new(commands))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::alpha_equal;
    use crate::smtlib::{parse_script, parse_smt_term_str, print_smt, SmtScope};

    fn p(v: &str) -> Term {
        Term::app(K::Eq, vec![Term::var(v), Term::int(1)])
    }

    fn eu() -> Term {
        Term::bind(K::ExistsUnique, vec![BoundVar::new("x")], p("x"))
    }

    fn count(t: &Term, f: impl Fn(&Term) -> bool) -> usize {
        let mut n = 0;
        t.for_each_subterm(&mut |s| n += usize::from(f(s)));
        n
    }

    fn copies_of_p(t: &Term) -> usize {
        count(t, |s| {
            s.is_app_of(K::Eq) && matches!(s, Term::Apply { args, .. } if args[1] == Term::int(1))
        })
    }

    #[test]
    fn alternation_expansion() {
        let out = desugar_exists_unique(&eu(), ExistsUniqueForm::Alternation).unwrap();
        let expected = Term::bind(
            K::Exists,
            vec![BoundVar::new("x")],
            Term::app(
                K::And,
                vec![
                    p("x"),
                    Term::bind(
                        K::Forall,
                        vec![BoundVar::new("y")],
                        Term::app(
                            K::Implies,
                            vec![p("y"), Term::app(K::Eq, vec![Term::var("x"), Term::var("y")])],
                        ),
                    ),
                ],
            ),
        );
        assert_eq!(out, expected);
        assert_eq!(copies_of_p(&out), 2);
        assert!(!contains_extension(&out));
    }

    #[test]
    fn two_quantifier_expansion() {
        let out = desugar_exists_unique(&eu(), ExistsUniqueForm::TwoQuantifier).unwrap();
        assert_eq!(copies_of_p(&out), 3);
        let foralls = count(&out, |s| matches!(s, Term::Bind { binder, vars, .. } if binder.is(K::Forall) && vars.len() == 2));
        assert_eq!(foralls, 1);
        assert!(!contains_extension(&out));
    }

    #[test]
    fn fresh_names_avoid_the_body() {
        let body = Term::app(K::Eq, vec![Term::var("x"), Term::var("y")]);
        let t = Term::bind(K::ExistsUnique, vec![BoundVar::new("x")], body);
        let out = desugar_exists_unique(&t, ExistsUniqueForm::TwoQuantifier).unwrap();
        let Term::Apply { args, .. } = &out else { panic!() };
        let Term::Bind { vars, .. } = &args[1] else { panic!() };
        assert_eq!(vars[0].name, "y!1");
        assert_eq!(vars[1].name, "z");
    }

    #[test]
    fn exists_unique_errors() {
        let multi = Term::bind(K::ExistsUnique, vec![BoundVar::new("x"), BoundVar::new("y")], p("x"));
        assert_eq!(
            desugar_exists_unique(&multi, ExistsUniqueForm::Alternation),
            Err(ExtensionError::MultiVarNotSupported(2))
        );
        let other = Term::bind(K::Exists, vec![BoundVar::new("x")], p("x"));
        assert!(matches!(
            desugar_exists_unique(&other, ExistsUniqueForm::Alternation),
            Err(ExtensionError::NotExistsUnique(_))
        ));
    }

    fn x_one_minus_x() -> Term {
        Term::app(
            K::Times,
            vec![Term::var("x"), Term::app(K::Minus, vec![Term::int(1), Term::var("x")])],
        )
    }

    fn unit_interval() -> Term {
        Term::app(K::IntervalCc, vec![Term::int(0), Term::int(1)])
    }

    fn idiom() -> Term {
        Term::app(
            K::Max,
            vec![Term::app(
                K::Map,
                vec![lambda(BoundVar::new("x"), x_one_minus_x()), unit_interval()],
            )],
        )
    }

    #[test]
    fn both_max_forms_lower_to_the_idiom() {
        for form in [MaxForm::SetFunctionOperator, MaxForm::RestrictedBinder] {
            let t = build_max(form, BoundVar::new("x"), unit_interval(), x_one_minus_x());
            let low = lower_max(&t).unwrap();
            assert!(alpha_equal(&low, &idiom()), "{form:?}: {low}");
            assert_eq!(desugar_all(&t, &DesugarStrategy::default()).unwrap(), low);
        }
    }

    #[test]
    fn max_binder_needs_a_condition() {
        let t = Term::bind(K::MaxBinder, vec![BoundVar::new("x")], Term::var("x"));
        assert_eq!(lower_max(&t), Err(ExtensionError::ConditionMissing));
        let t = Term::bind_with_condition(
            K::MaxBinder,
            vec![BoundVar::new("x")],
            Term::app(K::Lt, vec![Term::var("x"), Term::int(1)]),
            Term::var("x"),
        );
        assert!(matches!(lower_max(&t), Err(ExtensionError::NotAMaxForm(_))));
    }

    #[test]
    fn restricted_domain_becomes_comprehension() {
        let cond = Term::app(
            K::And,
            vec![
                Term::app(K::In, vec![Term::var("x"), Term::var("S")]),
                Term::app(K::Lt, vec![Term::var("x"), Term::int(1)]),
            ],
        );
        let t = Term::bind_with_condition(K::MaxBinder, vec![BoundVar::new("x")], cond, Term::var("x"));
        let low = lower_max(&t).unwrap();
        let Term::Apply { args, .. } = &low else { panic!() };
        let Term::Apply { args: map_args, .. } = &args[0] else { panic!() };
        assert!(map_args[1].is_app_of(K::SuchThat));
    }

    #[test]
    fn argmax_lowering_shape() {
        let t = Term::bind_with_condition(
            K::Argmax,
            vec![BoundVar::new("x")],
            Term::app(K::In, vec![Term::var("x"), unit_interval()]),
            x_one_minus_x(),
        );
        let low = lower_argmax(&t).unwrap();
        assert!(low.is_app_of(K::SuchThat));
        assert!(!contains_extension(&low));
        assert_eq!(count(&low, |s| s.is_app_of(K::Max)), 1);
    }

    fn smt(text: &str) -> Term {
        parse_smt_term_str(text, &SmtScope::lenient()).unwrap()
    }

    #[test]
    fn argmaxone_script() {
        let goal = OptimizationGoal {
            direction: Direction::Maximize,
            objective: smt("(* x (- 1.0 x))"),
            witness_vars: vec![("x".into(), Sort::real())],
        };
        let cons = [smt("(<= 0.0 x)"), smt("(<= x 1.0)")];
        let s = lower_argmaxone_to_script(&goal, &cons, &SignatureTable::new()).unwrap();
        let text = print_smt(&s).unwrap();
        assert_eq!(
            text,
            "(declare-fun x () Real)\n(assert (<= 0.0 x))\n(assert (<= x 1.0))\n\
             (maximize (* x (- 1.0 x)))\n(check-sat)\n(get-value (x))\n"
        );
        assert_eq!(parse_script(&text).unwrap(), s);
    }

    #[test]
    fn minimize_and_multiple_goals() {
        let g = |d, o: &str| OptimizationGoal {
            direction: d,
            objective: smt(o),
            witness_vars: vec![("x".into(), Sort::int())],
        };
        let s = lower_goals_to_script(
            &[g(Direction::Maximize, "x"), g(Direction::Minimize, "(* 2 x)")],
            &[smt("(<= x 3)")],
            &SignatureTable::new(),
        )
        .unwrap();
        let text = print_smt(&s).unwrap();
        let max_at = text.find("(maximize x)").unwrap();
        let min_at = text.find("(minimize (* 2 x))").unwrap();
        let check_at = text.find("(check-sat)").unwrap();
        assert!(max_at < min_at && min_at < check_at);
    }

    #[test]
    fn goal_errors() {
        let goal = OptimizationGoal {
            direction: Direction::Maximize,
            objective: smt("(* x y)"),
            witness_vars: vec![("x".into(), Sort::real())],
        };
        assert!(matches!(
            lower_argmaxone_to_script(&goal, &[], &SignatureTable::new()),
            Err(ExtensionError::UnsortedGoal(_))
        ));
        let goal = OptimizationGoal {
            direction: Direction::Maximize,
            objective: smt("1"),
            witness_vars: vec![("x".into(), Sort::real())],
        };
        assert_eq!(
            lower_argmaxone_to_script(&goal, &[], &SignatureTable::new()),
            Err(ExtensionError::WitnessNotFree("x".into()))
        );
    }

    #[test]
    fn argmaxone_goal_from_interval() {
        let t = Term::bind_with_condition(
            K::ArgmaxOne,
            vec![BoundVar::sorted("x", Sort::real())],
            Term::app(K::In, vec![Term::var("x"), unit_interval()]),
            x_one_minus_x(),
        );
        let (goal, cons) = goal_from_argmaxone(&t, &SignatureTable::new()).unwrap();
        assert_eq!(goal.witness_vars, vec![("x".to_owned(), Sort::real())]);
        assert_eq!(cons.len(), 2);
        assert!(cons.iter().all(|c| c.is_app_of(K::Leq)));
        assert_eq!(
            desugar_all(&t, &DesugarStrategy::default()),
            Err(ExtensionError::ArgmaxOneInTerm)
        );
    }
}
