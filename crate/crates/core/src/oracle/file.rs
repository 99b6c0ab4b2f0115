//! Line-based interpretation files.
//!
//! ```text
//! # comments run to the end of the line
//! sort S = {0, 1, 2}        # explicit carrier
//! sort A = 2                # abstract elements @A_0, @A_1
//! grid 4                    # interval resolution
//! default S                 # carrier of unsorted bound variables
//! var x = 1/2
//! fun arith2.times = {(0, 0) -> 0, (0, 1) -> 1, _ -> 0}
//! fun f(1, 2) = true        # one entry at a time
//! fun c = 3                 # constant
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{FunTable, Interpretation, OracleError, Value};
use crate::ast::{Literal, Term};
use crate::smtlib::value_to_rational;

/// Parses a scalar value: `true`, `false`, `-3`, `1/2`, `0.25`, `@S_0`.
pub fn parse_value(text: &str) -> Option<Value> {
    let s = text.trim();
    match s {
        "true" => return Some(Value::Bool(true)),
        "false" => return Some(Value::Bool(false)),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix('@') {
        let (sort, index) = rest.rsplit_once('_')?;
        if sort.is_empty() {
            return None;
        }
        return Some(Value::Element {
            sort: sort.to_owned(),
            index: index.parse().ok()?,
        });
    }
    let (negative, mag) = match s.strip_prefix('-') {
        Some(m) => (true, m.trim_start()),
        None => (false, s),
    };
    if !mag.starts_with(|c: char| c.is_ascii_digit()) {
        return None;
    }
    let r = if let Some((n, d)) = mag.split_once('/') {
        let (n, d): (BigInt, BigInt) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
        if d == BigInt::from(0) {
            return None;
        }
        BigRational::new(n, d)
    } else if mag.contains('.') {
        value_to_rational(&Term::Lit(Literal::Decimal(mag.to_owned())))?
    } else {
        BigRational::from_integer(mag.parse().ok()?)
    };
    Some(Value::Rational(if negative { -r } else { r }))
}

pub fn parse_interpretation(text: &str) -> Result<Interpretation, OracleError> {
    let mut interp = Interpretation::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| OracleError::BadInterpretation {
            line: i + 1,
            message,
        };
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "grid" => {
                let n: u32 = rest
                    .parse()
                    .ok()
                    .filter(|n| *n > 0)
                    .ok_or_else(|| bad(format!("bad grid resolution `{rest}`")))?;
                interp.grid = Some(n);
            }
            "default" if !rest.is_empty() => interp.default_sort = Some(rest.to_owned()),
            "sort" => {
                let (name, def) = split_def(rest).ok_or_else(|| bad("expected `sort NAME = ...`".into()))?;
                if let Some(items) = braced(def) {
                    let mut values = Vec::new();
                    for item in split_top(items) {
                        values.push(
                            parse_value(item).ok_or_else(|| bad(format!("bad value `{item}`")))?,
                        );
                    }
                    interp = interp.with_carrier(name, values);
                } else {
                    let n: usize = def
                        .parse()
                        .map_err(|_| bad(format!("bad carrier `{def}`")))?;
                    interp = interp.with_elements(name, n);
                }
            }
            "var" => {
                let (name, def) = split_def(rest).ok_or_else(|| bad("expected `var NAME = VALUE`".into()))?;
                let v = parse_value(def).ok_or_else(|| bad(format!("bad value `{def}`")))?;
                interp.vars.insert(name.to_owned(), v);
            }
            "fun" => {
                let (lhs, def) = split_def(rest).ok_or_else(|| bad("expected `fun NAME = ...`".into()))?;
                if let Some((name, args)) = lhs.split_once('(') {
                    let args = args
                        .strip_suffix(')')
                        .ok_or_else(|| bad(format!("bad argument list in `{lhs}`")))?;
                    let args = tuple(args).ok_or_else(|| bad(format!("bad arguments `{args}`")))?;
                    let v = parse_value(def).ok_or_else(|| bad(format!("bad value `{def}`")))?;
                    interp
                        .funs
                        .entry(name.trim().to_owned())
                        .or_default()
                        .entries
                        .insert(args, v);
                } else if let Some(items) = braced(def) {
                    let table = table(items).map_err(bad)?;
                    interp.funs.insert(lhs.to_owned(), table);
                } else {
                    let v = parse_value(def).ok_or_else(|| bad(format!("bad value `{def}`")))?;
                    interp.funs.insert(lhs.to_owned(), FunTable::constant(v));
                }
            }
            _ => return Err(bad(format!("unknown directive `{keyword}`"))),
        }
    }
    Ok(interp)
}

fn split_def(s: &str) -> Option<(&str, &str)> {
    let (a, b) = s.split_once('=')?;
    let (a, b) = (a.trim(), b.trim());
    (!a.is_empty() && !b.is_empty()).then_some((a, b))
}

fn braced(s: &str) -> Option<&str> {
    s.strip_prefix('{')?.strip_suffix('}')
}

// Splits at commas outside parentheses, dropping empty pieces.
fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|p| !p.is_empty());
    out
}

fn tuple(s: &str) -> Option<Vec<Value>> {
    split_top(s).into_iter().map(parse_value).collect()
}

fn table(items: &str) -> Result<FunTable, String> {
    let mut t = FunTable::default();
    for entry in split_top(items) {
        let (lhs, rhs) = entry
            .split_once("->")
            .ok_or_else(|| format!("expected `ARGS -> VALUE`, found `{entry}`"))?;
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        let v = parse_value(rhs).ok_or_else(|| format!("bad value `{rhs}`"))?;
        if lhs == "_" {
            t.default = Some(v);
            continue;
        }
        let args = match lhs.strip_prefix('(').and_then(|l| l.strip_suffix(')')) {
            Some(inner) => tuple(inner),
            None => parse_value(lhs).map(|v| vec![v]),
        }
        .ok_or_else(|| format!("bad arguments `{lhs}`"))?;
        t.entries.insert(args, v);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(parse_value("-3"), Some(Value::int(-3)));
        assert_eq!(parse_value("2/4"), Some(Value::ratio(1, 2)));
        assert_eq!(parse_value("-0.25"), Some(Value::ratio(-1, 4)));
        assert_eq!(
            parse_value("@my_S_2"),
            Some(Value::Element { sort: "my_S".into(), index: 2 })
        );
        assert_eq!(parse_value("1/0"), None);
        assert_eq!(parse_value("x"), None);
    }

    #[test]
    fn full_file() {
        let i = parse_interpretation(
            "# mod 2\nsort S = {0, 1}\nsort A = 2\ngrid 4\ndefault S\nvar x = 1/2\n\
             fun arith2.times = {(0, 0) -> 0, (1, 1) -> 1, _ -> 0}\nfun f(1) = true\nfun c = 3\n",
        )
        .unwrap();
        assert_eq!(i.carriers["S"], vec![Value::int(0), Value::int(1)]);
        assert_eq!(i.carriers["A"].len(), 2);
        assert_eq!(i.grid, Some(4));
        assert_eq!(i.default_sort.as_deref(), Some("S"));
        assert_eq!(i.vars["x"], Value::ratio(1, 2));
        let times = &i.funs["arith2.times"];
        assert_eq!(times.get(&[Value::int(1), Value::int(0)]), Some(&Value::int(0)));
        assert_eq!(times.get(&[Value::int(1), Value::int(1)]), Some(&Value::int(1)));
        assert_eq!(i.funs["f"].get(&[Value::int(1)]), Some(&Value::Bool(true)));
        assert_eq!(i.funs["c"].get(&[]), Some(&Value::int(3)));
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(
            parse_interpretation("grid 2\nbogus 1\n"),
            Err(OracleError::BadInterpretation {
                line: 2,
                message: "unknown directive `bogus`".into()
            })
        );
    }
}
