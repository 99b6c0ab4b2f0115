mod common;

use common::{om_arith, om_term, smt_term};
use mathbridge::ast::alpha_equal;
use mathbridge::omxml::{parse_om_xml, print_om_xml, OmDocument};
use mathbridge::popcorn::{parse_popcorn, print_popcorn, PopcornConfig};
use mathbridge::smtlib::{parse_smt_term_str, print_smt, SmtScope};
use mathbridge::sorts::SignatureTable;
use mathbridge::translate::{mangle, om_to_smt, roundtrip_check, smt_to_om, unmangle, SymbolMap};
use mathbridge::Symbol;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn xml_parse_print(t in om_term()) {
        let text = print_om_xml(&OmDocument::new(t.clone())).unwrap();
        prop_assert_eq!(parse_om_xml(&text).unwrap().root, t);
    }

    #[test]
    fn popcorn_parse_print(t in om_term()) {
        for cfg in [PopcornConfig::QUALIFIED, PopcornConfig::SUGARED] {
            let text = print_popcorn(&t, cfg).unwrap();
            prop_assert_eq!(parse_popcorn(&text).unwrap(), t.clone(), "{}", text);
        }
    }

    #[test]
    fn smt_parse_print(t in smt_term()) {
        let text = print_smt(&t).unwrap();
        prop_assert_eq!(parse_smt_term_str(&text, &SmtScope::lenient()).unwrap(), t, "{}", text);
    }

    #[test]
    fn om_smt_om_is_alpha_identity(t in om_arith()) {
        let r = roundtrip_check(&t, &SymbolMap::default(), &SignatureTable::new());
        prop_assert!(r.ok, "{:?}", r.diagnostic);
        // Through the printed text as well.
        let map = SymbolMap::default();
        let smt = print_smt(&om_to_smt(&t, &map, &SignatureTable::new()).unwrap()).unwrap();
        let back = smt_to_om(&parse_smt_term_str(&smt, &SmtScope::lenient()).unwrap(), &map).unwrap();
        let strip = |t: &mathbridge::Term| print_smt(&om_to_smt(t, &map, &SignatureTable::new()).unwrap()).unwrap();
        prop_assert_eq!(strip(&back), smt);
    }

    #[test]
    fn mangled_symbols_round_trip(cd in "[a-z][a-z0-9_]{0,8}", name in "[A-Za-z][A-Za-z0-9_.\\-]{0,8}") {
        let s = Symbol::from_cd(&cd, &name).unwrap();
        prop_assume!(s.origin() == mathbridge::ast::Origin::OpenMathCd);
        prop_assume!(SymbolMap::default().to_smt(&s).is_none());
        prop_assume!(!(cd == "alg1" && (name == "one" || name == "zero")));
        prop_assert_eq!(unmangle(&mangle(&s)), Some(s.clone()));
        let t = mathbridge::Term::app(s, vec![mathbridge::Term::var("x")]);
        let map = SymbolMap::default();
        let text = print_smt(&om_to_smt(&t, &map, &SignatureTable::new()).unwrap()).unwrap();
        let back = smt_to_om(&parse_smt_term_str(&text, &SmtScope::lenient()).unwrap(), &map).unwrap();
        prop_assert!(alpha_equal(&back, &t), "{}", text);
    }
}
