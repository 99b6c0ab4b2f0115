//! Committed fixtures against their normalized golden forms.

mod common;

use common::{fixture, golden};
use mathbridge::ast::Sort;
use mathbridge::extensions::{
    desugar_all, goal_from_argmaxone, lower_argmaxone_to_script, DesugarStrategy,
    ExistsUniqueForm,
};
use mathbridge::omxml::{parse_om_xml, print_om_xml, OmDocument};
use mathbridge::popcorn::{parse_popcorn, print_popcorn, PopcornConfig};
use mathbridge::smtlib::{parse_script, parse_smt_term_str, print_smt, Command, SmtScope};
use mathbridge::sorts::{parse_profile, SignatureTable};
use mathbridge::translate::{om_to_smt, smt_to_om, SymbolMap};

const OM_FIXTURES: &[&str] = &[
    "plus",
    "commutes_fmp",
    "max_option1",
    "max_option2",
    "argmax",
    "argmaxone",
    "exists_unique",
];

fn xml(doc: &OmDocument) -> String {
    print_om_xml(doc).unwrap()
}

#[test]
fn om_fixtures_normalize_once() {
    for name in OM_FIXTURES {
        let doc = parse_om_xml(&fixture(&format!("{name}.om.xml"))).unwrap();
        let once = xml(&doc);
        golden(&format!("{name}.om.xml"), &once);
        let twice = xml(&parse_om_xml(&once).unwrap());
        assert_eq!(once, twice, "{name} is not stable after one normalization");
    }
}

#[test]
fn popcorn_fixtures() {
    let plus = parse_om_xml(&fixture("plus.om.xml")).unwrap().root;
    for (file, cfg) in [
        ("plus.pop", PopcornConfig::SUGARED),
        ("plus_qualified.pop", PopcornConfig::QUALIFIED),
    ] {
        let text = fixture(file);
        let t = parse_popcorn(&text).unwrap();
        assert_eq!(t, plus);
        let printed = print_popcorn(&t, cfg).unwrap() + "\n";
        golden(file, &printed);
        assert_eq!(print_popcorn(&parse_popcorn(&printed).unwrap(), cfg).unwrap() + "\n", printed);
    }
}

#[test]
fn smt_fixtures_normalize_once() {
    for name in ["argmaxone.smt2", "argmin.smt2", "unsat.smt2"] {
        let once = print_smt(&parse_script(&fixture(name)).unwrap()).unwrap();
        golden(name, &once);
        assert_eq!(print_smt(&parse_script(&once).unwrap()).unwrap(), once);
    }
    let commutes = print_smt(&parse_smt_term_str(&fixture("commutes.smt2"), &SmtScope::lenient()).unwrap()).unwrap() + "\n";
    assert_eq!(commutes, fixture("commutes.smt2"));
}

fn commutes_table() -> SignatureTable {
    let mut t = SignatureTable::new();
    t.declare_sort("S", 0);
    t.set_var_sort("a", Sort::named("S"));
    t.set_var_sort("b", Sort::named("S"));
    t
}

#[test]
fn translations() {
    let map = SymbolMap::default();
    let plus = parse_om_xml(&fixture("plus.om.xml")).unwrap().root;
    golden("plus.smt2", &(print_smt(&om_to_smt(&plus, &map, &SignatureTable::new()).unwrap()).unwrap() + "\n"));

    let commutes_map = SymbolMap::parse(&fixture("commutes.map")).unwrap();
    let fmp = parse_om_xml(&fixture("commutes_fmp.om.xml")).unwrap().root;
    let smt = print_smt(&om_to_smt(&fmp, &commutes_map, &commutes_table()).unwrap()).unwrap() + "\n";
    golden("commutes_fmp.smt2", &smt);

    let back = smt_to_om(&parse_smt_term_str(&smt, &SmtScope::lenient()).unwrap(), &commutes_map).unwrap();
    golden("commutes_back.om.xml", &xml(&OmDocument::new(back)));
}

#[test]
fn desugarings() {
    let eu = parse_om_xml(&fixture("exists_unique.om.xml")).unwrap().root;
    for (form, name) in [
        (ExistsUniqueForm::Alternation, "exists_unique_eq1.pop"),
        (ExistsUniqueForm::TwoQuantifier, "exists_unique_eq2.pop"),
    ] {
        let s = DesugarStrategy { exists_unique: form, ..Default::default() };
        let t = desugar_all(&eu, &s).unwrap();
        golden(name, &(print_popcorn(&t, PopcornConfig::SUGARED).unwrap() + "\n"));
    }
    for name in ["max_option1", "max_option2", "argmax"] {
        let t = parse_om_xml(&fixture(&format!("{name}.om.xml"))).unwrap().root;
        let lowered = desugar_all(&t, &DesugarStrategy::default()).unwrap();
        golden(&format!("{name}_lowered.om.xml"), &xml(&OmDocument::new(lowered)));
    }
    // The binder form lowers to exactly the set-function idiom.
    let binder = parse_om_xml(&fixture("max_option2.om.xml")).unwrap().root;
    let idiom = parse_om_xml(&fixture("max_option1.om.xml")).unwrap();
    assert_eq!(
        xml(&OmDocument::new(desugar_all(&binder, &DesugarStrategy::default()).unwrap())),
        xml(&OmDocument::new(idiom.root))
    );

    let mut table = SignatureTable::new();
    table.profile = parse_profile(&fixture("reals.profile")).unwrap();
    table.set_var_sort("x", Sort::real());
    let am = parse_om_xml(&fixture("argmaxone.om.xml")).unwrap().root;
    let (goal, constraints) = goal_from_argmaxone(&am, &table).unwrap();
    let mut script = lower_argmaxone_to_script(&goal, &constraints, &table).unwrap();
    let map = SymbolMap::default();
    for c in &mut script.commands {
        match c {
            Command::Assert(t) | Command::Maximize(t) => *t = om_to_smt(t, &map, &table).unwrap(),
            Command::GetValue(ts) => {
                for t in ts {
                    *t = om_to_smt(t, &map, &table).unwrap();
                }
            }
            _ => {}
        }
    }
    golden("argmaxone_lowered.smt2", &print_smt(&script).unwrap());
}
