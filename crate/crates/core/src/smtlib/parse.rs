use std::collections::{BTreeMap, BTreeSet};

use super::sexpr::{lex_sexpr_spanned, AtomKind, SExpr};
use super::SmtError;
use crate::ast::{normalize_shadowing, substitute_simultaneous, BoundVar, Literal, Sort, Symbol, Term};

/// Declarations visible while parsing a term.
///
/// In strict mode an atom or head that is neither bound, declared nor a
/// theory symbol is an error; otherwise atoms become free variables and
/// heads become uninterpreted function symbols.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SmtScope {
    pub sorts: BTreeMap<String, usize>,
    pub funs: BTreeMap<String, (Vec<Sort>, Sort)>,
    pub strict: bool,
}

impl SmtScope {
    pub fn lenient() -> SmtScope {
        SmtScope::default()
    }

    pub fn strict() -> SmtScope {
        SmtScope {
            strict: true,
            ..SmtScope::default()
        }
    }

    pub fn declare_sort(&mut self, name: impl Into<String>, arity: usize) {
        self.sorts.insert(name.into(), arity);
    }

    pub fn declare_fun(&mut self, name: impl Into<String>, args: Vec<Sort>, result: Sort) {
        self.funs.insert(name.into(), (args, result));
    }

    /// Declared nullary functions, i.e. the constants of a script.
    pub fn constants(&self) -> impl Iterator<Item = (&str, &Sort)> {
        self.funs
            .iter()
            .filter(|(_, (args, _))| args.is_empty())
            .map(|(n, (_, r))| (n.as_str(), r))
    }
}

const BUILTIN_SORTS: &[(&str, usize)] = &[
    ("Bool", 0),
    ("Int", 0),
    ("Real", 0),
    ("String", 0),
    ("Array", 2),
];

// (min, max) argument counts of the theory operators.
fn theory_arity(name: &str) -> Option<(usize, Option<usize>)> {
    Some(match name {
        "true" | "false" => (0, Some(0)),
        "not" | "abs" | "to_real" | "to_int" | "is_int" => (1, Some(1)),
        "div" | "mod" => (2, Some(2)),
        "ite" => (3, Some(3)),
        "and" | "or" | "+" | "*" | "-" => (1, None),
        "=>" | "xor" | "=" | "distinct" | "/" | "<=" | "<" | ">=" | ">" => (2, None),
        _ => return None,
    })
}

fn arity_text(min: usize, max: Option<usize>) -> String {
    match max {
        Some(m) if m == min => min.to_string(),
        Some(m) => format!("{min}..{m}"),
        None => format!("at least {min}"),
    }
}

fn check_arity(name: &str, min: usize, max: Option<usize>, found: usize) -> Result<(), SmtError> {
    if found < min || max.is_some_and(|m| found > m) {
        return Err(SmtError::Arity {
            symbol: name.to_owned(),
            expected: arity_text(min, max),
            found,
        });
    }
    Ok(())
}

fn syntax(msg: impl Into<String>) -> SmtError {
    SmtError::Syntax(msg.into())
}

/// Parses a sort expression such as `Int`, `S` or `(Array Int Real)`.
pub fn parse_smt_sort(s: &SExpr, scope: &SmtScope) -> Result<Sort, SmtError> {
    let (name, args) = match s {
        SExpr::Atom(AtomKind::Symbol, name) => (name.as_str(), &[][..]),
        SExpr::List(items) => match items.split_first() {
            Some((SExpr::Atom(AtomKind::Symbol, n), rest)) if n != "_" && !rest.is_empty() => {
                (n.as_str(), rest)
            }
            _ => return Err(syntax(format!("unsupported sort `{s}`"))),
        },
        _ => return Err(syntax(format!("expected a sort, found `{s}`"))),
    };
    let declared = BUILTIN_SORTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, a)| *a)
        .or_else(|| scope.sorts.get(name).copied());
    match declared {
        Some(a) if a != args.len() => {
            return Err(SmtError::Arity {
                symbol: name.to_owned(),
                expected: a.to_string(),
                found: args.len(),
            })
        }
        None if scope.strict => return Err(SmtError::UnknownSymbol(name.to_owned())),
        _ => {}
    }
    let args = args
        .iter()
        .map(|a| parse_smt_sort(a, scope))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(if args.is_empty() {
        Sort::named(name)
    } else {
        Sort::parametric(name, args)
    })
}

/// Converts one term-shaped s-expression.
pub fn parse_smt_term(s: &SExpr, scope: &SmtScope) -> Result<Term, SmtError> {
    TermParser { scope }.term(s, &mut Vec::new())
}

/// Lexes `text`, which must hold exactly one term, and parses it.
pub fn parse_smt_term_str(text: &str, scope: &SmtScope) -> Result<Term, SmtError> {
    let mut items = lex_sexpr_spanned(text)?;
    if items.len() != 1 {
        return Err(syntax(format!("expected one term, found {}", items.len())));
    }
    let (e, at) = items.pop().expect("one item");
    parse_smt_term(&e, scope).map_err(|err| err.at(text, at))
}

struct TermParser<'a> {
    scope: &'a SmtScope,
}

impl TermParser<'_> {
    fn term(&self, s: &SExpr, bound: &mut Vec<String>) -> Result<Term, SmtError> {
        match s {
            SExpr::Atom(kind, text) => self.atom(*kind, text, bound),
            SExpr::List(items) => {
                let Some((head, args)) = items.split_first() else {
                    return Err(syntax("empty application `()`"));
                };
                let Some(name) = head.as_symbol() else {
                    return Err(syntax(format!("application head `{head}` is not a symbol")));
                };
                match name {
                    "forall" | "exists" => self.quantifier(name, args, bound),
                    "let" => self.let_(args, bound),
                    "!" => Err(syntax("attribute terms `(! ...)` are not supported")),
                    "_" => Err(syntax("indexed identifiers `(_ ...)` are not supported")),
                    _ => self.application(name, args, bound),
                }
            }
        }
    }

    fn atom(&self, kind: AtomKind, text: &str, bound: &[String]) -> Result<Term, SmtError> {
        let lit = match kind {
            AtomKind::Numeral => Literal::Numeral(text.to_owned()),
            AtomKind::Decimal => Literal::Decimal(text.to_owned()),
            AtomKind::Hexadecimal => Literal::Hexadecimal(text.to_owned()),
            AtomKind::Binary => Literal::Binary(text.to_owned()),
            AtomKind::String => {
                Literal::String(text[1..text.len() - 1].replace("\"\"", "\""))
            }
            AtomKind::Keyword => return Err(syntax(format!("keyword `{text}` in term position"))),
            AtomKind::Symbol => return self.symbol_atom(text, bound),
        };
        Ok(Term::Lit(lit))
    }

    fn symbol_atom(&self, name: &str, bound: &[String]) -> Result<Term, SmtError> {
        if bound.iter().any(|b| b == name) {
            return Ok(Term::var(name));
        }
        if let Some((args, _)) = self.scope.funs.get(name) {
            if args.is_empty() {
                return Ok(Term::var(name));
            }
            check_arity(name, args.len(), Some(args.len()), 0)?;
        }
        if let Some((min, max)) = theory_arity(name) {
            check_arity(name, min, max, 0)?;
            return Ok(Term::Sym(Symbol::smt(name)?));
        }
        if self.scope.strict {
            return Err(SmtError::UnknownSymbol(name.to_owned()));
        }
        Ok(Term::var(name))
    }

    fn application(
        &self,
        name: &str,
        args: &[SExpr],
        bound: &mut Vec<String>,
    ) -> Result<Term, SmtError> {
        if bound.iter().any(|b| b == name) {
            return Err(syntax(format!("bound variable `{name}` applied as a function")));
        }
        if let Some((sig, _)) = self.scope.funs.get(name) {
            check_arity(name, sig.len().max(1), Some(sig.len()), args.len())?;
        } else if let Some((min, max)) = theory_arity(name) {
            check_arity(name, min.max(1), max, args.len())?;
        } else if self.scope.strict {
            return Err(SmtError::UnknownSymbol(name.to_owned()));
        }
        let args = args
            .iter()
            .map(|a| self.term(a, bound))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Term::apply(Term::Sym(Symbol::smt(name)?), args))
    }

    fn quantifier(
        &self,
        name: &str,
        args: &[SExpr],
        bound: &mut Vec<String>,
    ) -> Result<Term, SmtError> {
        let [SExpr::List(decls), body] = args else {
            return Err(syntax(format!("`{name}` expects a variable list and a body")));
        };
        if decls.is_empty() {
            return Err(syntax(format!("`{name}` binds no variables")));
        }
        let mut vars = Vec::with_capacity(decls.len());
        for d in decls {
            match d.as_list() {
                Some([SExpr::Atom(AtomKind::Symbol, v), sort]) => {
                    vars.push(BoundVar::sorted(v.clone(), parse_smt_sort(sort, self.scope)?));
                }
                _ => return Err(syntax(format!("bad sorted variable `{d}`"))),
            }
        }
        let mark = bound.len();
        bound.extend(vars.iter().map(|v| v.name.clone()));
        let body = self.term(body, bound);
        bound.truncate(mark);
        let body = body?;
        let vars = normalize_shadowing(vars, &[&body]);
        Ok(Term::bind(Symbol::smt(name)?, vars, body))
    }

    fn let_(&self, args: &[SExpr], bound: &mut Vec<String>) -> Result<Term, SmtError> {
        let [SExpr::List(decls), body] = args else {
            return Err(syntax("`let` expects a binding list and a body"));
        };
        if decls.is_empty() {
            return Err(syntax("`let` binds no variables"));
        }
        let mut seen = BTreeSet::new();
        let mut bindings = Vec::with_capacity(decls.len());
        for d in decls {
            match d.as_list() {
                Some([SExpr::Atom(AtomKind::Symbol, v), value]) => {
                    if !seen.insert(v.as_str()) {
                        return Err(SmtError::DuplicateLetName(v.clone()));
                    }
                    bindings.push((v.clone(), self.term(value, bound)?));
                }
                _ => return Err(syntax(format!("bad let binding `{d}`"))),
            }
        }
        let mark = bound.len();
        bound.extend(bindings.iter().map(|(v, _)| v.clone()));
        let body = self.term(body, bound);
        bound.truncate(mark);
        Ok(substitute_simultaneous(&body?, &bindings)?)
    }
}
