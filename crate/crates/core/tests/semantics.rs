//! Semantic invariants checked against the finite-domain oracle.

mod common;

use std::collections::BTreeSet;

use common::{fixture, om_arith, smt_term};
use mathbridge::ast::{
    alpha_equal, all_names, fresh_name, free_variables, substitute, BoundVar, KnownSymbol as K,
    Sort, Term,
};
use mathbridge::extensions::{desugar_all, DesugarStrategy, ExistsUniqueForm};
use mathbridge::omxml::parse_om_xml;
use mathbridge::oracle::{enumerate_predicates, eval, eval_with, Interpretation, Value};
use mathbridge::smtlib::SmtScope;
use mathbridge::sorts::{check_sorts, SignatureTable};
use mathbridge::translate::{om_to_smt, smt_to_om, SymbolMap};
use proptest::prelude::*;

fn interp() -> Interpretation {
    Interpretation::new()
        .with_carrier("Int", vec![Value::int(-1), Value::int(0), Value::int(2)])
        .with_carrier("Real", vec![Value::int(0), Value::ratio(1, 2)])
        .with_elements("S", 2)
        .with_var("a", Value::int(1))
        .with_var("b", Value::ratio(-1, 3))
        .with_var("x", Value::int(0))
        .with_var("y", Value::int(2))
        .with_var("z", Value::Bool(true))
}

/// Renames every bound variable to a name used nowhere in `t`.
fn rename_bound(t: &Term, avoid: &mut BTreeSet<String>) -> Term {
    match t {
        Term::Apply { head, args } => Term::apply(
            rename_bound(head, avoid),
            args.iter().map(|a| rename_bound(a, avoid)).collect(),
        ),
        Term::Bind { binder, vars, condition, body } => {
            let mut body = (**body).clone();
            let mut condition = condition.as_deref().cloned();
            let mut new_vars = Vec::new();
            for v in vars {
                let n = fresh_name(&v.name, avoid);
                avoid.insert(n.clone());
                body = substitute(&body, &v.name, &Term::var(n.clone()));
                condition = condition.map(|c| substitute(&c, &v.name, &Term::var(n.clone())));
                new_vars.push(BoundVar { name: n, sort: v.sort.clone() });
            }
            Term::Bind {
                binder: binder.clone(),
                vars: new_vars,
                condition: condition.map(|c| Box::new(rename_bound(&c, avoid))),
                body: Box::new(rename_bound(&body, avoid)),
            }
        }
        _ => t.clone(),
    }
}

fn renamed(t: &Term) -> Term {
    rename_bound(t, &mut all_names(t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn substitution_agrees_with_evaluation(
        t in smt_term(),
        r in smt_term(),
        x in proptest::sample::select(vec!["a", "b", "x", "y", "z"]),
    ) {
        let i = interp();
        let Ok(rv) = eval(&r, &i) else { return Ok(()) };
        let lhs = eval(&substitute(&t, x, &r), &i);
        let rhs = eval_with(&t, &i, &[(x.to_owned(), rv)]);
        prop_assert_eq!(lhs.ok(), rhs.ok());
    }

    #[test]
    fn substitution_free_variables(t in smt_term(), r in smt_term(), x in "[abxyz]") {
        let s = substitute(&t, &x, &r);
        let fv_t = free_variables(&t);
        let mut bound: BTreeSet<String> = fv_t.iter().filter(|v| **v != x).cloned().collect();
        if fv_t.contains(&x) {
            bound.extend(free_variables(&r));
        }
        prop_assert_eq!(free_variables(&s), bound);
    }

    #[test]
    fn renaming_bound_variables_is_invisible(t in smt_term()) {
        let u = renamed(&t);
        prop_assert!(alpha_equal(&t, &u));
        prop_assert_eq!(free_variables(&t), free_variables(&u));
        prop_assert_eq!(eval(&t, &interp()).ok(), eval(&u, &interp()).ok());
        let mut table = SignatureTable::new();
        table.declare_scope(&SmtScope::lenient());
        table.declare_sort("S", 0);
        for (v, s) in [("a", Sort::int()), ("b", Sort::real()), ("x", Sort::int()), ("y", Sort::int()), ("z", Sort::bool())] {
            table.set_var_sort(v, s);
        }
        let before = check_sorts(&t, &table).ok();
        prop_assert_eq!(&check_sorts(&u, &table).ok(), &before);
        // An unrelated declaration changes nothing.
        table.declare_fun("unrelated", vec![Sort::int()], Sort::bool());
        prop_assert_eq!(check_sorts(&t, &table).ok(), before);
    }

    #[test]
    fn translation_preserves_values(t in om_arith()) {
        let i = Interpretation::new()
            .with_carrier("Int", vec![Value::int(-1), Value::int(0), Value::int(1)])
            .with_var("a", Value::int(1))
            .with_var("b", Value::int(-1))
            .with_var("x", Value::int(0))
            .with_var("y", Value::int(2))
            .with_var("z", Value::int(3));
        let om = eval(&t, &i).unwrap();
        let smt = om_to_smt(&t, &SymbolMap::default(), &SignatureTable::new()).unwrap();
        prop_assert_eq!(eval(&smt, &i).unwrap(), om);
    }
}

#[test]
fn translation_commutes_with_desugaring() {
    let eu = parse_om_xml(&fixture("exists_unique.om.xml")).unwrap().root;
    let map = SymbolMap::default();
    let mut table = SignatureTable::new();
    for v in ["x", "y", "z"] {
        table.set_var_sort(v, Sort::named("D"));
    }
    for form in [ExistsUniqueForm::Alternation, ExistsUniqueForm::TwoQuantifier] {
        let strategy = DesugarStrategy { exists_unique: form, ..Default::default() };
        let om = desugar_all(&eu, &strategy).unwrap();
        let smt = om_to_smt(&om, &map, &table).unwrap();
        let back = smt_to_om(&smt, &map).unwrap();
        for n in 1..=3 {
            let carrier: Vec<Value> = (0..n).map(Value::int).collect();
            for p in enumerate_predicates(&carrier).unwrap() {
                let exactly_one = p.entries.values().filter(|v| **v == Value::Bool(true)).count() == 1;
                let i = Interpretation::new()
                    .with_carrier("D", carrier.clone())
                    .with_default_sort("D")
                    .with_fun("fixture.P", p.clone())
                    .with_fun("|fixture.P|", p);
                assert_eq!(eval(&om, &i), Ok(Value::Bool(exactly_one)));
                assert_eq!(eval(&smt, &i), Ok(Value::Bool(exactly_one)));
                assert_eq!(eval(&back, &i), Ok(Value::Bool(exactly_one)));
            }
        }
    }
}

#[test]
fn lowered_max_forms_agree_with_direct_evaluation() {
    let i = Interpretation::new().with_grid(4);
    for name in ["max_option1.om.xml", "max_option2.om.xml", "argmax.om.xml"] {
        let t = parse_om_xml(&fixture(name)).unwrap().root;
        let lowered = desugar_all(&t, &DesugarStrategy::default()).unwrap();
        assert_eq!(eval(&t, &i), eval(&lowered, &i), "{name}");
    }
    let unary = Term::app(K::UnaryMinus, vec![Term::int(2)]);
    assert_eq!(eval(&unary, &i), Ok(Value::int(-2)));
}
