use std::fmt::Write;

use super::result::SolverResult;
use super::script::{Command, Script};
use super::sexpr::is_simple_symbol;
use super::SmtError;
use crate::ast::{Literal, Origin, Sort, Symbol, Term};

/// Values with an SMT-LIB rendering.
pub trait ToSmt {
    fn to_smt(&self) -> Result<String, SmtError>;
}

/// Prints a term, command, script or solver answer.
pub fn print_smt<T: ToSmt + ?Sized>(x: &T) -> Result<String, SmtError> {
    x.to_smt()
}

/// A symbol as it must appear in SMT-LIB source: simple symbols and already
/// `|`-quoted ones verbatim, anything else quoted.
pub fn print_smt_symbol(name: &str) -> Result<String, SmtError> {
    let quoted = name.len() >= 2
        && name.starts_with('|')
        && name.ends_with('|')
        && !name[1..name.len() - 1].contains(['|', '\\']);
    if is_simple_symbol(name) || quoted {
        Ok(name.to_owned())
    } else if name.is_empty() || name.contains(['|', '\\']) {
        Err(SmtError::Unprintable(format!("symbol `{name}`")))
    } else {
        Ok(format!("|{name}|"))
    }
}

fn head_symbol(s: &Symbol) -> Result<String, SmtError> {
    match s.origin() {
        Origin::SmtTheory => print_smt_symbol(s.name()),
        Origin::Extension => Err(SmtError::UnloweredExtension(s.key())),
        Origin::OpenMathCd => Err(SmtError::Unprintable(format!(
            "OpenMath symbol `{}` has no SMT-LIB counterpart here",
            s.key()
        ))),
    }
}

fn sort(out: &mut String, s: &Sort) -> Result<(), SmtError> {
    if s.args.is_empty() {
        out.push_str(&print_smt_symbol(&s.name)?);
        return Ok(());
    }
    write!(out, "({}", print_smt_symbol(&s.name)?).expect("string write");
    for a in &s.args {
        out.push(' ');
        sort(out, a)?;
    }
    out.push(')');
    Ok(())
}

fn literal(out: &mut String, l: &Literal) -> Result<(), SmtError> {
    match l {
        Literal::Numeral(s)
        | Literal::Decimal(s)
        | Literal::Hexadecimal(s)
        | Literal::Binary(s) => out.push_str(s),
        Literal::String(s) => write!(out, "\"{}\"", s.replace('"', "\"\"")).expect("string write"),
        Literal::Integer(_) | Literal::Float64(_) | Literal::ByteArray(_) => {
            return Err(SmtError::Unprintable(format!(
                "OpenMath {} literal",
                l.kind().as_str()
            )))
        }
    }
    Ok(())
}

fn term(out: &mut String, t: &Term) -> Result<(), SmtError> {
    match t {
        Term::Var(v) => out.push_str(&print_smt_symbol(v)?),
        Term::Sym(s) => out.push_str(&head_symbol(s)?),
        Term::Lit(l) => literal(out, l)?,
        Term::Apply { head, args } => {
            if args.is_empty() {
                return Err(SmtError::Unprintable("application without arguments".into()));
            }
            let Term::Sym(s) = &**head else {
                return Err(SmtError::Unprintable(format!("application head `{head}`")));
            };
            write!(out, "({}", head_symbol(s)?).expect("string write");
            for a in args {
                out.push(' ');
                term(out, a)?;
            }
            out.push(')');
        }
        Term::Bind {
            binder,
            vars,
            condition,
            body,
        } => {
            if binder.origin() == Origin::Extension || condition.is_some() {
                return Err(SmtError::UnloweredExtension(binder.key()));
            }
            if !(binder.is_smt("forall") || binder.is_smt("exists")) {
                return Err(SmtError::Unprintable(format!("binder `{}`", binder.key())));
            }
            write!(out, "({} (", binder.name()).expect("string write");
            for (i, v) in vars.iter().enumerate() {
                let s = v
                    .sort
                    .as_ref()
                    .ok_or_else(|| SmtError::UnsortedBinder(v.name.clone()))?;
                if i > 0 {
                    out.push(' ');
                }
                write!(out, "({} ", print_smt_symbol(&v.name)?).expect("string write");
                sort(out, s)?;
                out.push(')');
            }
            out.push_str(") ");
            term(out, body)?;
            out.push(')');
        }
        Term::Attributed { .. } => {
            return Err(SmtError::Unprintable("attribution".into()));
        }
        Term::Error { symbol, .. } => {
            return Err(SmtError::Unprintable(format!("error object `{}`", symbol.key())));
        }
        Term::Foreign { .. } => return Err(SmtError::Unprintable("foreign object".into())),
    }
    Ok(())
}

impl ToSmt for Term {
    fn to_smt(&self) -> Result<String, SmtError> {
        let mut out = String::new();
        term(&mut out, self)?;
        Ok(out)
    }
}

impl ToSmt for Sort {
    fn to_smt(&self) -> Result<String, SmtError> {
        let mut out = String::new();
        sort(&mut out, self)?;
        Ok(out)
    }
}

impl ToSmt for Command {
    fn to_smt(&self) -> Result<String, SmtError> {
        Ok(match self {
            Command::SetLogic(l) => format!("(set-logic {})", print_smt_symbol(l)?),
            Command::DeclareSort { name, arity } => {
                format!("(declare-sort {} {arity})", print_smt_symbol(name)?)
            }
            Command::DeclareFun { name, args, result } => {
                let args = args
                    .iter()
                    .map(ToSmt::to_smt)
                    .collect::<Result<Vec<_>, _>>()?;
                format!(
                    "(declare-fun {} ({}) {})",
                    print_smt_symbol(name)?,
                    args.join(" "),
                    result.to_smt()?
                )
            }
            Command::DefineFun {
                name,
                params,
                result,
                body,
            } => {
                let params = params
                    .iter()
                    .map(|(v, s)| Ok(format!("({} {})", print_smt_symbol(v)?, s.to_smt()?)))
                    .collect::<Result<Vec<_>, SmtError>>()?;
                format!(
                    "(define-fun {} ({}) {} {})",
                    print_smt_symbol(name)?,
                    params.join(" "),
                    result.to_smt()?,
                    body.to_smt()?
                )
            }
            Command::Assert(t) => format!("(assert {})", t.to_smt()?),
            Command::CheckSat => "(check-sat)".to_owned(),
            Command::GetValue(ts) => {
                let ts = ts
                    .iter()
                    .map(ToSmt::to_smt)
                    .collect::<Result<Vec<_>, _>>()?;
                format!("(get-value ({}))", ts.join(" "))
            }
            Command::GetModel => "(get-model)".to_owned(),
            Command::Maximize(t) => format!("(maximize {})", t.to_smt()?),
            Command::Minimize(t) => format!("(minimize {})", t.to_smt()?),
            Command::Exit => "(exit)".to_owned(),
            Command::Other(e) => e.to_string(),
        })
    }
}

impl ToSmt for Script {
    /// One command per line, newline-terminated.
    fn to_smt(&self) -> Result<String, SmtError> {
        let mut out = String::new();
        for c in &self.commands {
            out.push_str(&c.to_smt()?);
            out.push('\n');
        }
        Ok(out)
    }
}

impl ToSmt for SolverResult {
    /// The status line, then the model block `((t v) ...)` when present.
    fn to_smt(&self) -> Result<String, SmtError> {
        let mut out = self.status.as_str().to_owned();
        out.push('\n');
        if let Some(model) = &self.model {
            let pairs = model
                .iter()
                .map(|(t, v)| Ok(format!("({} {})", t.to_smt()?, v.to_smt()?)))
                .collect::<Result<Vec<_>, SmtError>>()?;
            writeln!(out, "({})", pairs.join(" ")).expect("string write");
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{BoundVar, KnownSymbol as K};
    use crate::smtlib::{parse_script, parse_smt_term_str, SmtScope};

    fn smt(name: &str, args: Vec<Term>) -> Term {
        Term::apply(Term::Sym(Symbol::smt(name).unwrap()), args)
    }

    #[test]
    fn prints_plus_example() {
        let t = smt("+", vec![Term::var("x"), Term::Lit(Literal::Numeral("1".into()))]);
        assert_eq!(print_smt(&t).unwrap(), "(+ x 1)");
    }

    #[test]
    fn prints_commutativity_and_reparses() {
        let ab = |a: &str, b: &str| smt("times", vec![Term::var(a), Term::var(b)]);
        let t = Term::bind(
            Symbol::smt("forall").unwrap(),
            vec![
                BoundVar::sorted("a", Sort::named("S")),
                BoundVar::sorted("b", Sort::named("S")),
            ],
            smt("=", vec![ab("a", "b"), ab("b", "a")]),
        );
        let text = print_smt(&t).unwrap();
        assert_eq!(text, "(forall ((a S) (b S)) (= (times a b) (times b a)))");
        assert_eq!(parse_smt_term_str(&text, &SmtScope::lenient()).unwrap(), t);
    }

    #[test]
    fn unsorted_and_extension_binders_rejected() {
        let t = Term::bind(Symbol::smt("forall").unwrap(), vec![BoundVar::new("x")], Term::var("x"));
        assert_eq!(print_smt(&t), Err(SmtError::UnsortedBinder("x".into())));
        let t = Term::bind(K::ExistsUnique, vec![BoundVar::new("x")], Term::var("x"));
        assert!(matches!(print_smt(&t), Err(SmtError::UnloweredExtension(_))));
        let t = Term::app(K::Plus, vec![Term::var("x")]);
        assert!(matches!(print_smt(&t), Err(SmtError::Unprintable(_))));
    }

    #[test]
    fn symbols_are_quoted_when_needed() {
        assert_eq!(print_smt_symbol("x!1").unwrap(), "x!1");
        assert_eq!(print_smt_symbol("|arith1.plus|").unwrap(), "|arith1.plus|");
        assert_eq!(print_smt_symbol("a b").unwrap(), "|a b|");
        assert!(print_smt_symbol("a|b").is_err());
    }

    #[test]
    fn script_round_trip() {
        let src = "(set-logic QF_LRA)\n(declare-sort S 0)\n(declare-fun f (S) Real)\n\
                   (declare-fun x () Real)\n(assert (<= 0.5 x))\n(maximize (* x (- 1 x)))\n\
                   (check-sat)\n(get-value (x))\n(set-option :opt.priority lex)\n(exit)\n";
        let s = parse_script(src).unwrap();
        let printed = print_smt(&s).unwrap();
        assert_eq!(printed, src);
        assert_eq!(parse_script(&printed).unwrap(), s);
    }
}
