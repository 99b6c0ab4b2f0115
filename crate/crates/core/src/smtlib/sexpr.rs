use std::fmt;

use super::SmtError;
use crate::text::Position;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AtomKind {
    Numeral,
    Decimal,
    Hexadecimal,
    Binary,
    String,
    Symbol,
    Keyword,
}

/// `s_expr ::= spec_constant | symbol | keyword | ( s_expr* )`.
///
/// Atoms keep their exact source spelling (string quotes, `|`-quoting of
/// symbols, `#x` prefixes and leading zeros included).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SExpr {
    Atom(AtomKind, String),
    List(Vec<SExpr>),
}

impl SExpr {
    pub fn symbol(s: impl Into<String>) -> SExpr {
        SExpr::Atom(AtomKind::Symbol, s.into())
    }

    pub fn as_symbol(&self) -> Option<&str> {
        match self {
            SExpr::Atom(AtomKind::Symbol, s) => Some(s),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[SExpr]> {
        match self {
            SExpr::List(items) => Some(items),
            _ => None,
        }
    }
}

impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Atom(_, text) => f.write_str(text),
            SExpr::List(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

const SYMBOL_PUNCT: &str = "~!@$%^&*_-+=<>.?/";

pub(crate) fn is_simple_symbol_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || SYMBOL_PUNCT.contains(c)
}

/// True for a symbol that needs no `|` quoting.
pub fn is_simple_symbol(s: &str) -> bool {
    !s.is_empty()
        && !s.starts_with(|c: char| c.is_ascii_digit())
        && s.chars().all(is_simple_symbol_char)
}

/// Splits `text` into top-level s-expressions, each with its byte offset.
pub fn lex_sexpr_spanned(text: &str) -> Result<Vec<(SExpr, usize)>, SmtError> {
    let mut lx = Lexer { src: text, pos: 0 };
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<SExpr>, usize)> = Vec::new();
    while let Some((tok, start)) = lx.next()? {
        let done = match tok {
            Token::Open => {
                stack.push((Vec::new(), start));
                None
            }
            Token::Close => {
                let (items, open_at) = stack.pop().ok_or(SmtError::UnbalancedParen {
                    pos: Position::of_offset(text, start),
                })?;
                Some((SExpr::List(items), open_at))
            }
            Token::Atom(kind, s) => Some((SExpr::Atom(kind, s), start)),
        };
        if let Some((e, at)) = done {
            match stack.last_mut() {
                Some((items, _)) => items.push(e),
                None => out.push((e, at)),
            }
        }
    }
    if let Some((_, open_at)) = stack.last() {
        return Err(SmtError::UnbalancedParen {
            pos: Position::of_offset(text, *open_at),
        });
    }
    Ok(out)
}

pub fn lex_sexpr(text: &str) -> Result<Vec<SExpr>, SmtError> {
    Ok(lex_sexpr_spanned(text)?.into_iter().map(|(e, _)| e).collect())
}

enum Token {
    Open,
    Close,
    Atom(AtomKind, String),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl Lexer<'_> {
    fn bad(&self, start: usize, end: usize) -> SmtError {
        SmtError::BadToken {
            text: self.src[start..end.min(self.src.len())].to_owned(),
            pos: Position::of_offset(self.src, start),
        }
    }

    fn skip_trivia(&mut self) {
        loop {
            let rest = &self.src[self.pos..];
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with(';') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn take_while(&self, from: usize, pred: impl Fn(char) -> bool) -> usize {
        self.src[from..]
            .char_indices()
            .find(|&(_, c)| !pred(c))
            .map_or(self.src.len(), |(i, _)| from + i)
    }

    // The token must end at whitespace, a paren, a comment or end of input.
    fn delimited(&self, end: usize) -> bool {
        self.src[end..]
            .chars()
            .next()
            .is_none_or(|c| c.is_whitespace() || c == '(' || c == ')' || c == ';')
    }

    fn next(&mut self) -> Result<Option<(Token, usize)>, SmtError> {
        self.skip_trivia();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok(None);
        };
        let (kind, end) = match c {
            '(' => {
                self.pos += 1;
                return Ok(Some((Token::Open, start)));
            }
            ')' => {
                self.pos += 1;
                return Ok(Some((Token::Close, start)));
            }
            '"' => {
                let mut i = start + 1;
                loop {
                    match self.src[i..].find('"') {
                        None => return Err(self.bad(start, self.src.len())),
                        Some(j) => {
                            i += j + 1;
                            if self.src[i..].starts_with('"') {
                                i += 1;
                            } else {
                                break;
                            }
                        }
                    }
                }
                (AtomKind::String, i)
            }
            '|' => match rest[1..].find(['|', '\\']) {
                Some(j) if rest.as_bytes()[1 + j] == b'|' => (AtomKind::Symbol, start + j + 2),
                _ => return Err(self.bad(start, self.src.len())),
            },
            '#' => {
                let (kind, digit): (AtomKind, fn(char) -> bool) = match rest[1..].chars().next() {
                    Some('x') => (AtomKind::Hexadecimal, |c| c.is_ascii_hexdigit()),
                    Some('b') => (AtomKind::Binary, |c| c == '0' || c == '1'),
                    _ => return Err(self.bad(start, start + 2)),
                };
                let end = self.take_while(start + 2, digit);
                if end == start + 2 {
                    return Err(self.bad(start, end));
                }
                (kind, end)
            }
            ':' => {
                let end = self.take_while(start + 1, is_simple_symbol_char);
                if end == start + 1 {
                    return Err(self.bad(start, end + 1));
                }
                (AtomKind::Keyword, end)
            }
            d if d.is_ascii_digit() => {
                let end = self.take_while(start, |c| c.is_ascii_digit());
                let after = &self.src[end..];
                if after.starts_with('.') && after[1..].starts_with(|c: char| c.is_ascii_digit()) {
                    (AtomKind::Decimal, self.take_while(end + 1, |c| c.is_ascii_digit()))
                } else {
                    (AtomKind::Numeral, end)
                }
            }
            s if is_simple_symbol_char(s) => {
                (AtomKind::Symbol, self.take_while(start, is_simple_symbol_char))
            }
            _ => return Err(self.bad(start, start + c.len_utf8())),
        };
        if !self.delimited(end) {
            let stop = self.take_while(end, |c| !(c.is_whitespace() || c == '(' || c == ')'));
            return Err(self.bad(start, stop));
        }
        self.pos = end;
        Ok(Some((Token::Atom(kind, self.src[start..end].to_owned()), start)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(k: AtomKind, s: &str) -> SExpr {
        SExpr::Atom(k, s.to_owned())
    }

    #[test]
    fn lexes_plus_example() {
        assert_eq!(
            lex_sexpr("(+ x 1)").unwrap(),
            vec![SExpr::List(vec![
                atom(AtomKind::Symbol, "+"),
                atom(AtomKind::Symbol, "x"),
                atom(AtomKind::Numeral, "1"),
            ])]
        );
        assert_eq!(lex_sexpr("()").unwrap(), vec![SExpr::List(vec![])]);
    }

    #[test]
    fn spec_constants_keep_spelling() {
        let src = "#xFF #b0101 007 1.50 \"a\"\"b\" |x y| :named";
        let toks = lex_sexpr(src).unwrap();
        let kinds: Vec<_> = toks
            .iter()
            .map(|t| match t {
                SExpr::Atom(k, _) => *k,
                _ => panic!(),
            })
            .collect();
        assert_eq!(
            kinds,
            [
                AtomKind::Hexadecimal,
                AtomKind::Binary,
                AtomKind::Numeral,
                AtomKind::Decimal,
                AtomKind::String,
                AtomKind::Symbol,
                AtomKind::Keyword
            ]
        );
        let printed: Vec<String> = toks.iter().map(ToString::to_string).collect();
        assert_eq!(printed.join(" "), src);
    }

    #[test]
    fn comments_are_skipped() {
        let t = lex_sexpr("; header\n(check-sat) ; trailing\n").unwrap();
        assert_eq!(t, vec![SExpr::List(vec![SExpr::symbol("check-sat")])]);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            lex_sexpr("(+ x 1"),
            Err(SmtError::UnbalancedParen {
                pos: Position { line: 1, col: 1 }
            })
        );
        assert!(matches!(lex_sexpr("x)"), Err(SmtError::UnbalancedParen { .. })));
        assert!(matches!(lex_sexpr("#q1"), Err(SmtError::BadToken { .. })));
        assert!(matches!(lex_sexpr("12abc"), Err(SmtError::BadToken { .. })));
        assert!(matches!(lex_sexpr("\"open"), Err(SmtError::BadToken { .. })));
    }
}
