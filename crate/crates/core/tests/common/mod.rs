//! Fixtures and term generators shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use mathbridge::ast::{BoundVar, KnownSymbol as K, Literal, Sort, Symbol, Term};
use proptest::prelude::*;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> String {
    let p = fixture_path(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

/// Compares `actual` with `golden/<name>`; `MATHBRIDGE_BLESS=1` rewrites it.
pub fn golden(name: &str, actual: &str) {
    let p = fixture_path("golden").join(name);
    if std::env::var_os("MATHBRIDGE_BLESS").is_some() {
        std::fs::create_dir_all(p.parent().unwrap()).unwrap();
        std::fs::write(&p, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    assert_eq!(actual, expected, "golden file {name} differs");
}

const VARS: &[&str] = &["a", "b", "x", "y", "z"];

fn var() -> impl Strategy<Value = String> {
    proptest::sample::select(VARS).prop_map(str::to_owned)
}

fn sort() -> impl Strategy<Value = Sort> {
    prop_oneof![Just(Sort::int()), Just(Sort::real()), Just(Sort::named("S"))]
}

/// OpenMath objects: variables, integers, exact floats, strings, known and
/// foreign symbols, applications and binders with optional sorts.
pub fn om_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        var().prop_map(Term::var),
        (-1000i64..1000).prop_map(Term::int),
        (-64i32..64).prop_map(|k| Term::Lit(Literal::Float64(k as f64 / 8.0))),
        "[a-z ]{0,6}".prop_map(|s| Term::Lit(Literal::String(s))),
        proptest::sample::select(vec![K::One, K::Zero, K::True, K::False]).prop_map(Term::sym),
    ];
    leaf.prop_recursive(4, 40, 4, |inner| {
        let ops = vec![
            K::Plus, K::Times, K::Minus, K::Divide, K::Eq, K::Lt, K::Leq, K::And, K::Or,
            K::Not, K::Implies, K::CommutativeTimes, K::Set, K::In,
        ];
        prop_oneof![
            (proptest::sample::select(ops), proptest::collection::vec(inner.clone(), 1..4))
                .prop_map(|(k, args)| Term::app(k, args)),
            ("[a-z][a-z0-9]{0,5}", "[a-z][a-z_]{0,5}", proptest::collection::vec(inner.clone(), 1..3))
                .prop_map(|(cd, name, args)| Term::app(Symbol::from_cd(&cd, &name).unwrap(), args)),
            (
                proptest::sample::select(vec![K::Forall, K::Exists, K::Lambda]),
                proptest::collection::btree_set(var(), 1..3),
                proptest::option::of(sort()),
                inner,
            )
                .prop_map(|(k, names, s, body)| {
                    let vars = names
                        .into_iter()
                        .map(|n| BoundVar { name: n, sort: s.clone() })
                        .collect();
                    Term::bind(k, vars, body)
                }),
        ]
    })
}

/// Terms of the SMT-LIB fragment: numerals, decimals, variables, theory
/// operators and sorted quantifiers with distinct names.
pub fn smt_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        var().prop_map(Term::var),
        (0u32..10_000).prop_map(|n| Term::Lit(Literal::Numeral(n.to_string()))),
        (0u32..1000, 0u32..100).prop_map(|(a, b)| Term::Lit(Literal::Decimal(format!("{a}.{b}")))),
        proptest::sample::select(vec!["true", "false"]).prop_map(|s| Term::Sym(Symbol::smt(s).unwrap())),
    ];
    leaf.prop_recursive(4, 40, 4, |inner| {
        let ops = vec!["+", "-", "*", "<=", "<", "=", "and", "or", "distinct"];
        prop_oneof![
            (proptest::sample::select(ops), proptest::collection::vec(inner.clone(), 2..4))
                .prop_map(|(op, args)| Term::apply(Term::Sym(Symbol::smt(op).unwrap()), args)),
            inner.clone().prop_map(|a| Term::apply(Term::Sym(Symbol::smt("not").unwrap()), vec![a])),
            (
                proptest::sample::select(vec!["forall", "exists"]),
                proptest::collection::btree_map(var(), sort(), 1..3),
                inner,
            )
                .prop_map(|(q, vars, body)| {
                    let vars = vars.into_iter().map(|(n, s)| BoundVar::sorted(n, s)).collect();
                    Term::bind(Symbol::smt(q).unwrap(), vars, body)
                }),
        ]
    })
}

/// Quantified arithmetic over `Int` in OpenMath form, every bound variable
/// sorted, for translation round trips.
pub fn om_arith() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        var().prop_map(Term::var),
        (-20i64..20).prop_map(Term::int),
    ];
    let num = leaf.prop_recursive(3, 16, 3, |inner| {
        (
            proptest::sample::select(vec![K::Plus, K::Times, K::Minus]),
            proptest::collection::vec(inner, 2..4),
        )
            .prop_map(|(k, args)| Term::app(k, args))
    });
    let atom = (proptest::sample::select(vec![K::Eq, K::Lt, K::Leq]), num.clone(), num)
        .prop_map(|(k, a, b)| Term::app(k, vec![a, b]));
    atom.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (proptest::sample::select(vec![K::And, K::Or, K::Implies]), inner.clone(), inner.clone())
                .prop_map(|(k, a, b)| Term::app(k, vec![a, b])),
            inner.clone().prop_map(|a| Term::app(K::Not, vec![a])),
            (
                proptest::sample::select(vec![K::Forall, K::Exists]),
                proptest::collection::btree_set(var(), 1..3),
                inner,
            )
                .prop_map(|(k, names, body)| {
                    let vars = names.into_iter().map(|n| BoundVar::sorted(n, Sort::int())).collect();
                    Term::bind(k, vars, body)
                }),
        ]
    })
}
