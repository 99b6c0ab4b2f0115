//! POPCORN, the compact text syntax for OpenMath objects.
//!
//! Dialect summary:
//!
//! * `$x` variable, `cd.name` symbol, `f(a, b)` application,
//!   `42` / `-7` integers, `1.5` / `2e-3` floats, `"text"` strings
//!   (escapes `\"` and `\\` only), `true` / `false` for `logic1`.
//! * Infix operators, loosest first: `->` (right associative), `or`, `and`,
//!   `= != < <= in`, `+ -`, `* /`, prefix `-`. All binary operators except
//!   `->` associate to the left.
//! * Binders: `quant1.forall[$a, $b:S] -> body`; a predicate-restricted
//!   binder puts its predicate after a bar: `minmax2.max[$x | cond] -> body`.
//!   The body extends as far right as possible.
//! * Attribution `base{cd.key -> value, ...}`, error `!cd.name(args)`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ast::{BoundVar, KnownSymbol, Literal, Origin, Sort, Symbol, Term};
use crate::text::{Position, Printed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sugar {
    /// `cd.name(args)` for every application.
    Qualified,
    /// Infix operators for the registered arithmetic, relation and logic symbols.
    #[default]
    Sugared,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PopcornConfig {
    pub sugar: Sugar,
}

impl PopcornConfig {
    pub const QUALIFIED: PopcornConfig = PopcornConfig {
        sugar: Sugar::Qualified,
    };
    pub const SUGARED: PopcornConfig = PopcornConfig {
        sugar: Sugar::Sugared,
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assoc {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InfixOp {
    pub symbol: KnownSymbol,
    pub token: &'static str,
    /// Binding strength; larger binds tighter.
    pub level: u8,
    pub assoc: Assoc,
}

const fn op(symbol: KnownSymbol, token: &'static str, level: u8, assoc: Assoc) -> InfixOp {
    InfixOp {
        symbol,
        token,
        level,
        assoc,
    }
}

/// The fixed precedence table.
pub const INFIX_TABLE: &[InfixOp] = &[
    op(KnownSymbol::Implies, "->", 1, Assoc::Right),
    op(KnownSymbol::Or, "or", 2, Assoc::Left),
    op(KnownSymbol::And, "and", 3, Assoc::Left),
    op(KnownSymbol::Eq, "=", 4, Assoc::Left),
    op(KnownSymbol::Neq, "!=", 4, Assoc::Left),
    op(KnownSymbol::Lt, "<", 4, Assoc::Left),
    op(KnownSymbol::Leq, "<=", 4, Assoc::Left),
    op(KnownSymbol::In, "in", 4, Assoc::Left),
    op(KnownSymbol::Plus, "+", 5, Assoc::Left),
    op(KnownSymbol::Minus, "-", 5, Assoc::Left),
    op(KnownSymbol::Times, "*", 6, Assoc::Left),
    op(KnownSymbol::Divide, "/", 6, Assoc::Left),
];

const PREFIX_LEVEL: u8 = 7;
const ATOM_LEVEL: u8 = 8;
const WORD_OPS: &[&str] = &["or", "and", "in"];
const SUGAR_CONSTANTS: &[(&str, KnownSymbol)] =
    &[("true", KnownSymbol::True), ("false", KnownSymbol::False)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PopcornError {
    #[error("{pos}: {message}")]
    Syntax { message: String, pos: Position },
    #[error("{pos}: unknown infix operator `{op}`")]
    UnknownInfix { op: String, pos: Position },
    #[error("{pos}: `{name}` is not a registered abbreviation")]
    UnboundSugar { name: String, pos: Position },
    #[error("cannot print as POPCORN: {0}")]
    Unprintable(String),
}

impl PopcornError {
    pub fn position(&self) -> Option<Position> {
        match self {
            PopcornError::Syntax { pos, .. }
            | PopcornError::UnknownInfix { pos, .. }
            | PopcornError::UnboundSugar { pos, .. } => Some(*pos),
            PopcornError::Unprintable(_) => None,
        }
    }
}

type Result<T> = std::result::Result<T, PopcornError>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Var(String),
    Qual(String, String),
    Ident(String),
    Int(BigInt),
    Float(f64),
    Str(String),
    Op(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    Comma,
    Bar,
    Colon,
    Bang,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Var(v) => write!(f, "${v}"),
            Tok::Qual(c, n) => write!(f, "{c}.{n}"),
            Tok::Ident(i) => f.write_str(i),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Float(x) => write!(f, "{x:?}"),
            Tok::Str(s) => write!(f, "{s:?}"),
            Tok::Op(o) => f.write_str(o),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
            Tok::LBrack => f.write_str("["),
            Tok::RBrack => f.write_str("]"),
            Tok::LBrace => f.write_str("{"),
            Tok::RBrace => f.write_str("}"),
            Tok::Comma => f.write_str(","),
            Tok::Bar => f.write_str("|"),
            Tok::Colon => f.write_str(":"),
            Tok::Bang => f.write_str("!"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

const TWO_CHAR_OPS: &[&str] = &["->", "<=", "!=", ">=", "==", "&&", "||", "**"];
const ONE_CHAR_OPS: &str = "+-*/=<>^&%~";

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Length of the variable name at the start of `s`: identifier characters,
/// `'`, and `!` when directly followed by a digit.
fn scan_var(s: &str) -> usize {
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if is_ident_char(c) || c == '\'' || (c == '!' && b.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            i += 1;
        } else {
            break;
        }
    }
    i
}

fn scan_ident(s: &str) -> usize {
    s.char_indices()
        .find(|&(i, c)| if i == 0 { !is_ident_start(c) } else { !is_ident_char(c) })
        .map_or(s.len(), |(i, _)| i)
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    prev_operand: bool,
}

impl<'a> Lexer<'a> {
    fn err(&self, at: usize, message: impl Into<String>) -> PopcornError {
        PopcornError::Syntax {
            message: message.into(),
            pos: Position::of_offset(self.src, at),
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>> {
        let mut out = Vec::new();
        loop {
            let rest = &self.src[self.pos..];
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            let start = self.pos;
            let tok = self.next_token()?;
            self.prev_operand = matches!(
                tok,
                Tok::Var(_)
                    | Tok::Qual(..)
                    | Tok::Ident(_)
                    | Tok::Int(_)
                    | Tok::Float(_)
                    | Tok::Str(_)
                    | Tok::RParen
                    | Tok::RBrack
                    | Tok::RBrace
            ) && !matches!(&tok, Tok::Ident(w) if WORD_OPS.contains(&w.as_str()));
            let done = tok == Tok::Eof;
            out.push((tok, start));
            if done {
                return Ok(out);
            }
        }
    }

    fn next_token(&mut self) -> Result<Tok> {
        let rest = &self.src[self.pos..];
        let Some(c) = rest.chars().next() else {
            return Ok(Tok::Eof);
        };
        let start = self.pos;
        let simple = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            '|' if !rest.starts_with("||") => Some(Tok::Bar),
            ':' => Some(Tok::Colon),
            _ => None,
        };
        if let Some(t) = simple {
            self.pos += 1;
            return Ok(t);
        }
        if c == '$' {
            let n = scan_var(&rest[1..]);
            if n == 0 {
                return Err(self.err(start, "`$` must be followed by a variable name"));
            }
            self.pos += 1 + n;
            return Ok(Tok::Var(rest[1..1 + n].to_owned()));
        }
        if c == '"' {
            return self.string();
        }
        let negative_number = c == '-'
            && !self.prev_operand
            && rest[1..].starts_with(|d: char| d.is_ascii_digit());
        if c.is_ascii_digit() || negative_number {
            return self.number();
        }
        if is_ident_start(c) {
            let n = scan_ident(rest);
            let first = &rest[..n];
            let after = &rest[n..];
            if let Some(tail) = after.strip_prefix('.') {
                let m = scan_ident(tail);
                if m > 0 {
                    self.pos += n + 1 + m;
                    return Ok(Tok::Qual(first.to_owned(), tail[..m].to_owned()));
                }
            }
            self.pos += n;
            return Ok(Tok::Ident(first.to_owned()));
        }
        if let Some(op) = TWO_CHAR_OPS.iter().find(|o| rest.starts_with(**o)) {
            self.pos += 2;
            return Ok(Tok::Op((*op).to_owned()));
        }
        if c == '!' {
            self.pos += 1;
            return Ok(Tok::Bang);
        }
        if ONE_CHAR_OPS.contains(c) {
            self.pos += 1;
            return Ok(Tok::Op(c.to_string()));
        }
        Err(self.err(start, format!("unexpected character `{c}`")))
    }

    fn number(&mut self) -> Result<Tok> {
        let start = self.pos;
        let b = self.src.as_bytes();
        let mut i = start;
        if b[i] == b'-' {
            i += 1;
        }
        let digits = |mut i: usize| {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            i
        };
        i = digits(i);
        let mut is_float = false;
        if i + 1 < b.len() && b[i] == b'.' && b[i + 1].is_ascii_digit() {
            is_float = true;
            i = digits(i + 1);
        }
        if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
            let mut j = i + 1;
            if j < b.len() && (b[j] == b'+' || b[j] == b'-') {
                j += 1;
            }
            if j < b.len() && b[j].is_ascii_digit() {
                is_float = true;
                i = digits(j);
            }
        }
        let text = &self.src[start..i];
        self.pos = i;
        if is_float {
            text.parse()
                .map(Tok::Float)
                .map_err(|_| self.err(start, format!("bad number `{text}`")))
        } else {
            text.parse()
                .map(Tok::Int)
                .map_err(|_| self.err(start, format!("bad number `{text}`")))
        }
    }

    fn string(&mut self) -> Result<Tok> {
        let start = self.pos;
        let mut out = String::new();
        let mut chars = self.src[start + 1..].char_indices();
        while let Some((i, c)) = chars.next() {
            match c {
                '"' => {
                    self.pos = start + 1 + i + 1;
                    return Ok(Tok::Str(out));
                }
                '\\' => match chars.next() {
                    Some((_, e @ ('"' | '\\'))) => out.push(e),
                    _ => return Err(self.err(start + 1 + i, "unsupported string escape")),
                },
                _ => out.push(c),
            }
        }
        Err(self.err(start, "unterminated string"))
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn here(&self) -> Position {
        Position::of_offset(self.src, self.toks[self.at].1)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> PopcornError {
        match self.peek() {
            Tok::Op(o) if !INFIX_TABLE.iter().any(|i| i.token == o) => PopcornError::UnknownInfix {
                op: o.clone(),
                pos: self.here(),
            },
            t => PopcornError::Syntax {
                message: format!("expected {wanted}, found {t}"),
                pos: self.here(),
            },
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{t}`")))
        }
    }

    fn infix_here(&self, level: u8) -> Option<InfixOp> {
        let tok = match self.peek() {
            Tok::Op(o) => o.as_str(),
            Tok::Ident(w) if WORD_OPS.contains(&w.as_str()) => w.as_str(),
            _ => return None,
        };
        INFIX_TABLE
            .iter()
            .find(|i| i.level == level && i.token == tok)
            .copied()
    }

    fn expr(&mut self) -> Result<Term> {
        self.binary(1)
    }

    fn binary(&mut self, level: u8) -> Result<Term> {
        if level == PREFIX_LEVEL {
            return self.prefix();
        }
        let mut lhs = self.binary(level + 1)?;
        while let Some(op) = self.infix_here(level) {
            self.bump();
            let rhs = match op.assoc {
                Assoc::Left => self.binary(level + 1)?,
                Assoc::Right => self.binary(level)?,
            };
            lhs = Term::app(op.symbol, vec![lhs, rhs]);
            if op.assoc == Assoc::Right {
                break;
            }
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Term> {
        if *self.peek() == Tok::Op("-".into()) {
            self.bump();
            let operand = self.prefix()?;
            return Ok(Term::app(KnownSymbol::UnaryMinus, vec![operand]));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Term> {
        let (mut t, is_binder) = self.primary()?;
        if is_binder {
            return Ok(t);
        }
        loop {
            match self.peek() {
                Tok::LParen => {
                    self.bump();
                    let args = self.list(Tok::RParen)?;
                    t = Term::apply(t, args);
                }
                Tok::LBrace => {
                    self.bump();
                    let mut pairs = Vec::new();
                    loop {
                        let key = self.qualified_symbol()?;
                        self.expect(Tok::Op("->".into()))?;
                        pairs.push((key, self.expr()?));
                        if *self.peek() == Tok::Comma {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    self.expect(Tok::RBrace)?;
                    t = Term::Attributed {
                        pairs,
                        base: Box::new(t),
                    };
                }
                _ => return Ok(t),
            }
        }
    }

    fn list(&mut self, close: Tok) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        if *self.peek() == close {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if *self.peek() == Tok::Comma {
                self.bump();
            } else {
                self.expect(close)?;
                return Ok(out);
            }
        }
    }

    fn qualified_symbol(&mut self) -> Result<Symbol> {
        let pos = self.here();
        match self.bump() {
            Tok::Qual(cd, name) => {
                Symbol::from_cd(&cd, &name).map_err(|e| PopcornError::Syntax {
                    message: e.to_string(),
                    pos,
                })
            }
            _ => {
                self.at -= 1;
                Err(self.unexpected("a symbol `cd.name`"))
            }
        }
    }

    fn primary(&mut self) -> Result<(Term, bool)> {
        let pos = self.here();
        let t = match self.peek().clone() {
            Tok::Var(v) => {
                self.bump();
                Term::Var(v)
            }
            Tok::Int(n) => {
                self.bump();
                Term::Lit(Literal::Integer(n))
            }
            Tok::Float(x) => {
                self.bump();
                Term::Lit(Literal::Float64(x))
            }
            Tok::Str(s) => {
                self.bump();
                Term::Lit(Literal::String(s))
            }
            Tok::Qual(..) => {
                let sym = self.qualified_symbol()?;
                if *self.peek() == Tok::LBrack {
                    return Ok((self.binder(sym)?, true));
                }
                Term::Sym(sym)
            }
            Tok::Ident(w) => {
                if WORD_OPS.contains(&w.as_str()) {
                    return Err(self.unexpected("an operand"));
                }
                self.bump();
                match SUGAR_CONSTANTS.iter().find(|(n, _)| *n == w) {
                    Some((_, k)) => Term::sym(*k),
                    None => return Err(PopcornError::UnboundSugar { name: w, pos }),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                inner
            }
            Tok::Bang => {
                self.bump();
                let symbol = self.qualified_symbol()?;
                self.expect(Tok::LParen)?;
                let args = self.list(Tok::RParen)?;
                Term::Error { symbol, args }
            }
            _ => return Err(self.unexpected("an operand")),
        };
        Ok((t, false))
    }

    fn binder(&mut self, binder: Symbol) -> Result<Term> {
        self.expect(Tok::LBrack)?;
        let mut vars = Vec::new();
        loop {
            let name = match self.bump() {
                Tok::Var(v) => v,
                _ => {
                    self.at -= 1;
                    return Err(self.unexpected("a bound variable"));
                }
            };
            let sort = if *self.peek() == Tok::Colon {
                self.bump();
                Some(self.sort()?)
            } else {
                None
            };
            vars.push(BoundVar { name, sort });
            if *self.peek() == Tok::Comma {
                self.bump();
            } else {
                break;
            }
        }
        let condition = if *self.peek() == Tok::Bar {
            self.bump();
            Some(self.expr()?)
        } else {
            None
        };
        self.expect(Tok::RBrack)?;
        self.expect(Tok::Op("->".into()))?;
        let body = self.expr()?;
        Ok(match condition {
            Some(c) => Term::bind_with_condition(binder, vars, c, body),
            None => Term::bind(binder, vars, body),
        })
    }

    fn sort(&mut self) -> Result<Sort> {
        let name = match self.bump() {
            Tok::Ident(n) => n,
            _ => {
                self.at -= 1;
                return Err(self.unexpected("a sort name"));
            }
        };
        if *self.peek() != Tok::LParen {
            return Ok(Sort::named(name));
        }
        self.bump();
        let mut args = vec![self.sort()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.sort()?);
        }
        self.expect(Tok::RParen)?;
        Ok(Sort::parametric(name, args))
    }
}

pub fn parse_popcorn(text: &str) -> Result<Term> {
    let toks = Lexer {
        src: text,
        pos: 0,
        prev_operand: false,
    }
    .tokens()?;
    let mut p = Parser {
        src: text,
        toks,
        at: 0,
    };
    let t = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.unexpected("end of input"));
    }
    Ok(t)
}

struct Printer {
    cfg: PopcornConfig,
    warnings: Vec<String>,
}

fn unprintable(what: impl Into<String>) -> PopcornError {
    PopcornError::Unprintable(what.into())
}

fn is_ident(s: &str) -> bool {
    !s.is_empty() && scan_ident(s) == s.len()
}

impl Printer {
    fn infix_of(&self, t: &Term) -> Option<InfixOp> {
        if self.cfg.sugar != Sugar::Sugared {
            return None;
        }
        match t {
            Term::Apply { args, .. } if args.len() == 2 => {
                let k = t.head_symbol()?.known()?;
                INFIX_TABLE.iter().find(|i| i.symbol == k).copied()
            }
            _ => None,
        }
    }

    fn is_prefix_minus(&self, t: &Term) -> bool {
        self.cfg.sugar == Sugar::Sugared
            && t.is_app_of(KnownSymbol::UnaryMinus)
            && matches!(t, Term::Apply { args, .. } if args.len() == 1)
    }

    fn level(&self, t: &Term) -> u8 {
        if let Some(op) = self.infix_of(t) {
            op.level
        } else if self.is_prefix_minus(t) {
            PREFIX_LEVEL
        } else if matches!(t, Term::Bind { .. }) {
            0
        } else {
            ATOM_LEVEL
        }
    }

    fn at_least(&mut self, t: &Term, min: u8) -> Result<String> {
        let s = self.term(t)?;
        Ok(if self.level(t) < min {
            format!("({s})")
        } else {
            s
        })
    }

    fn symbol(&self, s: &Symbol) -> Result<String> {
        if s.origin() == Origin::SmtTheory {
            return Err(unprintable(format!(
                "SMT-LIB symbol `{s}` must be translated first"
            )));
        }
        if self.cfg.sugar == Sugar::Sugared {
            if let Some((name, _)) = SUGAR_CONSTANTS.iter().find(|(_, k)| s.is(*k)) {
                return Ok((*name).to_owned());
            }
        }
        if !is_ident(s.namespace()) || !is_ident(s.name()) {
            return Err(unprintable(format!("symbol `{s}` is not an identifier pair")));
        }
        Ok(format!("{}.{}", s.namespace(), s.name()))
    }

    fn var(&self, v: &str) -> Result<String> {
        if v.is_empty() || scan_var(v) != v.len() || v.ends_with('!') {
            return Err(unprintable(format!("variable name `{v}`")));
        }
        Ok(format!("${v}"))
    }

    fn list(&mut self, ts: &[Term]) -> Result<String> {
        let parts = ts.iter().map(|a| self.term(a)).collect::<Result<Vec<_>>>()?;
        Ok(parts.join(","))
    }

    fn term(&mut self, t: &Term) -> Result<String> {
        if let Some(op) = self.infix_of(t) {
            let Term::Apply { args, .. } = t else {
                unreachable!()
            };
            let (lmin, rmin) = match op.assoc {
                Assoc::Left => (op.level, op.level + 1),
                Assoc::Right => (op.level + 1, op.level),
            };
            let l = self.at_least(&args[0], lmin)?;
            let r = self.at_least(&args[1], rmin)?;
            return Ok(if op.token.chars().all(|c| c.is_ascii_alphabetic()) || op.token == "->" {
                format!("{l} {} {r}", op.token)
            } else {
                format!("{l}{}{r}", op.token)
            });
        }
        if self.is_prefix_minus(t) {
            let Term::Apply { args, .. } = t else {
                unreachable!()
            };
            let inner = self.at_least(&args[0], PREFIX_LEVEL)?;
            return Ok(if inner.starts_with(|c: char| c.is_ascii_digit()) {
                format!("-({inner})")
            } else {
                format!("-{inner}")
            });
        }
        match t {
            Term::Sym(s) => self.symbol(s),
            Term::Var(v) => self.var(v),
            Term::Lit(l) => literal(l),
            Term::Apply { head, args } => {
                if args.is_empty() {
                    self.warnings.push(format!("nullary application of {head}"));
                }
                let h = self.at_least(head, ATOM_LEVEL)?;
                let a = self.list(args)?;
                Ok(format!("{h}({a})"))
            }
            Term::Bind {
                binder,
                vars,
                condition,
                body,
            } => {
                let mut s = self.symbol(binder)?;
                s.push('[');
                for (i, v) in vars.iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    s.push_str(&self.var(&v.name)?);
                    if let Some(sort) = &v.sort {
                        s.push(':');
                        s.push_str(&sort_text(sort)?);
                    }
                }
                if let Some(c) = condition {
                    s.push_str(" | ");
                    s.push_str(&self.term(c)?);
                }
                s.push_str("] -> ");
                s.push_str(&self.term(body)?);
                Ok(s)
            }
            Term::Attributed { pairs, base } => {
                let mut s = self.at_least(base, ATOM_LEVEL)?;
                s.push('{');
                for (i, (k, v)) in pairs.iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    // keys must stay qualified even when they have sugar
                    if !is_ident(k.namespace()) || !is_ident(k.name()) || k.origin() == Origin::SmtTheory {
                        return Err(unprintable(format!("attribution key `{k}`")));
                    }
                    s.push_str(&format!("{}.{} -> ", k.namespace(), k.name()));
                    s.push_str(&self.term(v)?);
                }
                s.push('}');
                Ok(s)
            }
            Term::Error { symbol, args } => {
                if !is_ident(symbol.namespace()) || !is_ident(symbol.name()) {
                    return Err(unprintable(format!("error symbol `{symbol}`")));
                }
                let a = self.list(args)?;
                Ok(format!("!{}.{}({a})", symbol.namespace(), symbol.name()))
            }
            Term::Foreign { .. } => Err(unprintable("foreign objects have no POPCORN form")),
        }
    }
}

fn literal(l: &Literal) -> Result<String> {
    match l {
        Literal::Integer(n) => Ok(n.to_string()),
        Literal::Float64(x) if x.is_finite() => Ok(format!("{x:?}")),
        Literal::Float64(x) => Err(unprintable(format!("non-finite float {x}"))),
        Literal::String(s) => {
            let mut out = String::from("\"");
            for c in s.chars() {
                if c == '"' || c == '\\' {
                    out.push('\\');
                }
                out.push(c);
            }
            out.push('"');
            Ok(out)
        }
        other => Err(unprintable(format!("{:?} literal", other.kind()))),
    }
}

fn sort_text(s: &Sort) -> Result<String> {
    if !is_ident(&s.name) {
        return Err(unprintable(format!("sort `{s}`")));
    }
    if s.args.is_empty() {
        return Ok(s.name.clone());
    }
    let args = s.args.iter().map(sort_text).collect::<Result<Vec<_>>>()?;
    Ok(format!("{}({})", s.name, args.join(",")))
}

pub fn print_popcorn_checked(t: &Term, cfg: PopcornConfig) -> Result<Printed> {
    let mut p = Printer {
        cfg,
        warnings: Vec::new(),
    };
    let text = p.term(t)?;
    Ok(Printed {
        text,
        warnings: p.warnings,
    })
}

pub fn print_popcorn(t: &Term, cfg: PopcornConfig) -> Result<String> {
    print_popcorn_checked(t, cfg).map(|p| p.text)
}
