use std::collections::BTreeMap;

use super::TranslateError;
use crate::ast::{KnownSymbol as K, Symbol};

/// Which OpenMath symbol SMT-LIB `*` translates back to.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TimesTarget {
    /// `arith1.times`, which is not necessarily commutative.
    #[default]
    Arith1,
    /// `arith2.times`, the commutative one.
    Arith2,
}

/// Bidirectional OpenMath symbol to SMT-LIB token map.
///
/// Pairs are injective in both directions. Aliases translate forward only:
/// `arith2.times` and `arith1.unary_minus` become `*` and `-`, and the way
/// back is decided by [`TimesTarget`] and by the number of arguments of `-`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolMap {
    forward: BTreeMap<Symbol, String>,
    backward: BTreeMap<String, Symbol>,
    aliases: BTreeMap<Symbol, String>,
    pub times: TimesTarget,
}

const DEFAULT_PAIRS: &[(K, &str)] = &[
    (K::Plus, "+"),
    (K::Times, "*"),
    (K::Minus, "-"),
    (K::Divide, "/"),
    (K::Eq, "="),
    (K::Neq, "distinct"),
    (K::Lt, "<"),
    (K::Leq, "<="),
    (K::Gt, ">"),
    (K::Geq, ">="),
    (K::And, "and"),
    (K::Or, "or"),
    (K::Not, "not"),
    (K::Implies, "=>"),
    (K::True, "true"),
    (K::False, "false"),
    (K::Forall, "forall"),
    (K::Exists, "exists"),
];

impl Default for SymbolMap {
    fn default() -> Self {
        let mut m = SymbolMap::empty();
        for (k, tok) in DEFAULT_PAIRS {
            m.insert(k.symbol(), tok).expect("default pairs are injective");
        }
        m.aliases.insert(K::CommutativeTimes.symbol(), "*".into());
        m.aliases.insert(K::UnaryMinus.symbol(), "-".into());
        m
    }
}

impl SymbolMap {
    pub fn empty() -> SymbolMap {
        SymbolMap {
            forward: BTreeMap::new(),
            backward: BTreeMap::new(),
            aliases: BTreeMap::new(),
            times: TimesTarget::default(),
        }
    }

    pub fn with_times(mut self, times: TimesTarget) -> Self {
        self.times = times;
        self
    }

    /// Adds a pair, replacing any pair or alias of `sym`. Fails if `token`
    /// already belongs to another symbol.
    pub fn insert(&mut self, sym: Symbol, token: &str) -> Result<(), TranslateError> {
        if let Some(other) = self.backward.get(token) {
            if *other != sym {
                return Err(TranslateError::ConflictingMapping(format!(
                    "`{token}` is already the translation of {other}"
                )));
            }
        }
        if let Some(old) = self.forward.remove(&sym) {
            self.backward.remove(&old);
        }
        self.aliases.remove(&sym);
        self.forward.insert(sym.clone(), token.to_owned());
        self.backward.insert(token.to_owned(), sym);
        Ok(())
    }

    /// The SMT-LIB token for `sym`, from a pair or an alias.
    pub fn to_smt(&self, sym: &Symbol) -> Option<&str> {
        self.forward
            .get(sym)
            .or_else(|| self.aliases.get(sym))
            .map(String::as_str)
    }

    /// The OpenMath symbol for an SMT-LIB token.
    pub fn to_om(&self, token: &str) -> Option<Symbol> {
        if token == "*" && self.times == TimesTarget::Arith2 && self.backward.get("*") == Some(&K::Times.symbol()) {
            return Some(K::CommutativeTimes.symbol());
        }
        self.backward.get(token).cloned()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Symbol, &str)> {
        self.forward.iter().map(|(s, t)| (s, t.as_str()))
    }

    /// Reads `cd.name = token` lines on top of the defaults.
    pub fn parse(text: &str) -> Result<SymbolMap, TranslateError> {
        let mut m = SymbolMap::default();
        m.extend_from(text)?;
        Ok(m)
    }

    pub fn extend_from(&mut self, text: &str) -> Result<(), TranslateError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| TranslateError::BadMap {
                line: i + 1,
                message,
            };
            let (lhs, token) = line
                .split_once('=')
                .map(|(a, b)| (a.trim(), b.trim()))
                .filter(|(a, b)| !a.is_empty() && !b.is_empty() && !b.contains(char::is_whitespace))
                .ok_or_else(|| bad(format!("expected `cd.name = token`, found `{line}`")))?;
            let (cd, name) = lhs
                .split_once('.')
                .ok_or_else(|| bad(format!("`{lhs}` is not of the form cd.name")))?;
            let sym = Symbol::from_cd(cd, name).map_err(|e| bad(e.to_string()))?;
            self.insert(sym, token).map_err(|e| bad(e.to_string()))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_injective_with_aliases() {
        let m = SymbolMap::default();
        assert_eq!(m.to_smt(&K::Plus.symbol()), Some("+"));
        assert_eq!(m.to_smt(&K::CommutativeTimes.symbol()), Some("*"));
        assert_eq!(m.to_om("*"), Some(K::Times.symbol()));
        let m = m.with_times(TimesTarget::Arith2);
        assert_eq!(m.to_om("*"), Some(K::CommutativeTimes.symbol()));
        let mut seen = std::collections::BTreeSet::new();
        assert!(m.pairs().all(|(_, t)| seen.insert(t)));
    }

    #[test]
    fn map_files_extend_and_reject_conflicts() {
        let m = SymbolMap::parse("# sort S\narith2.times = times\n").unwrap();
        assert_eq!(m.to_smt(&K::CommutativeTimes.symbol()), Some("times"));
        assert_eq!(m.to_om("times"), Some(K::CommutativeTimes.symbol()));
        assert!(matches!(
            SymbolMap::parse("arith2.times = +"),
            Err(TranslateError::BadMap { line: 1, .. })
        ));
        assert!(matches!(
            SymbolMap::parse("\nnonsense"),
            Err(TranslateError::BadMap { line: 2, .. })
        ));
    }
}
