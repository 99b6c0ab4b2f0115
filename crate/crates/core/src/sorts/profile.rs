use std::collections::BTreeMap;

use super::SortError;
use crate::ast::{LiteralKind, Sort};
use crate::smtlib::{lex_sexpr, parse_smt_sort, SmtScope};

/// Sorts of literal constants, whose meaning SMT-LIB leaves to each theory.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoryProfile {
    pub literals: BTreeMap<LiteralKind, Sort>,
}

impl Default for TheoryProfile {
    fn default() -> Self {
        let literals = [
            (LiteralKind::Integer, Sort::int()),
            (LiteralKind::Float64, Sort::real()),
            (LiteralKind::Numeral, Sort::int()),
            (LiteralKind::Decimal, Sort::real()),
            (LiteralKind::Hexadecimal, Sort::int()),
            (LiteralKind::Binary, Sort::int()),
            (LiteralKind::String, Sort::named("String")),
        ];
        TheoryProfile {
            literals: literals.into_iter().collect(),
        }
    }
}

impl TheoryProfile {
    pub fn sort_of(&self, kind: LiteralKind) -> Option<&Sort> {
        self.literals.get(&kind)
    }
}

/// Reads `literal.<kind>=<sort>` lines over the default profile. Blank lines
/// and lines starting with `#` are ignored.
pub fn parse_profile(text: &str) -> Result<TheoryProfile, SortError> {
    let mut profile = TheoryProfile::default();
    for (i, raw) in text.lines().enumerate() {
        let bad = |message: String| SortError::BadProfile {
            line: i + 1,
            message,
        };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| bad(format!("expected `key=value`, found `{line}`")))?;
        let kind = key
            .trim()
            .strip_prefix("literal.")
            .and_then(LiteralKind::parse)
            .ok_or_else(|| bad(format!("unknown key `{}`", key.trim())))?;
        let sort = match lex_sexpr(value.trim()).as_deref() {
            Ok([e]) => parse_smt_sort(e, &SmtScope::lenient()).ok(),
            _ => None,
        }
        .ok_or_else(|| bad(format!("bad sort `{}`", value.trim())))?;
        profile.literals.insert(kind, sort);
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overrides() {
        let p = TheoryProfile::default();
        assert_eq!(p.sort_of(LiteralKind::Integer), Some(&Sort::int()));
        assert_eq!(p.sort_of(LiteralKind::ByteArray), None);
        let p = parse_profile("# reals\nliteral.numeral = Real\n\nliteral.integer=Real\n").unwrap();
        assert_eq!(p.sort_of(LiteralKind::Numeral), Some(&Sort::real()));
        assert_eq!(p.sort_of(LiteralKind::Integer), Some(&Sort::real()));
        assert_eq!(p.sort_of(LiteralKind::Decimal), Some(&Sort::real()));
    }

    #[test]
    fn bad_lines_are_reported() {
        assert_eq!(
            parse_profile("literal.numeral=Int\nfoo=Int"),
            Err(SortError::BadProfile {
                line: 2,
                message: "unknown key `foo`".into()
            })
        );
        assert!(parse_profile("literal.numeral").is_err());
        assert!(parse_profile("literal.numeral=(Int").is_err());
    }
}
