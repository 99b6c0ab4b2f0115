use super::parse::{parse_smt_sort, parse_smt_term, SmtScope};
use super::sexpr::{lex_sexpr_spanned, AtomKind, SExpr};
use super::SmtError;
use crate::ast::{Sort, Term};

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    SetLogic(String),
    DeclareSort {
        name: String,
        arity: usize,
    },
    /// Also produced by `declare-const`.
    DeclareFun {
        name: String,
        args: Vec<Sort>,
        result: Sort,
    },
    DefineFun {
        name: String,
        params: Vec<(String, Sort)>,
        result: Sort,
        body: Term,
    },
    Assert(Term),
    CheckSat,
    GetValue(Vec<Term>),
    GetModel,
    Maximize(Term),
    Minimize(Term),
    Exit,
    /// A command this crate does not interpret, kept verbatim.
    Other(SExpr),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Script {
    pub commands: Vec<Command>,
}

impl Script {
    pub fn new(commands: Vec<Command>) -> Script {
        Script { commands }
    }

    /// Sorts and functions declared or defined by the script.
    pub fn scope(&self) -> SmtScope {
        let mut scope = SmtScope::strict();
        for c in &self.commands {
            declare(&mut scope, c);
        }
        scope
    }

    /// One warning per passthrough command.
    pub fn warnings(&self) -> Vec<String> {
        self.commands
            .iter()
            .filter_map(|c| match c {
                Command::Other(e) => Some(format!("passing through unknown command `{e}`")),
                _ => None,
            })
            .collect()
    }

    pub fn assertions(&self) -> impl Iterator<Item = &Term> {
        self.commands.iter().filter_map(|c| match c {
            Command::Assert(t) => Some(t),
            _ => None,
        })
    }
}

fn declare(scope: &mut SmtScope, c: &Command) {
    match c {
        Command::DeclareSort { name, arity } => scope.declare_sort(name.clone(), *arity),
        Command::DeclareFun { name, args, result } => {
            scope.declare_fun(name.clone(), args.clone(), result.clone())
        }
        Command::DefineFun {
            name,
            params,
            result,
            ..
        } => scope.declare_fun(
            name.clone(),
            params.iter().map(|(_, s)| s.clone()).collect(),
            result.clone(),
        ),
        _ => {}
    }
}

/// Parses a script. Symbols must be declared before use.
pub fn parse_script(text: &str) -> Result<Script, SmtError> {
    let mut scope = SmtScope::strict();
    let mut commands = Vec::new();
    for (e, at) in lex_sexpr_spanned(text)? {
        let c = command(&e, &scope).map_err(|err| err.at(text, at))?;
        declare(&mut scope, &c);
        commands.push(c);
    }
    Ok(Script { commands })
}

/// Command keywords recognised by [`parse_script`].
const COMMAND_NAMES: &[&str] = &[
    "set-logic",
    "declare-sort",
    "declare-fun",
    "declare-const",
    "define-fun",
    "assert",
    "check-sat",
    "get-value",
    "get-model",
    "maximize",
    "minimize",
    "exit",
    "set-option",
    "set-info",
    "get-info",
    "get-option",
    "push",
    "pop",
    "get-assertions",
    "get-objectives",
    "reset",
    "echo",
];

/// True when the first s-expression of `text` starts with a command keyword,
/// i.e. the text is a script rather than a single term.
pub fn looks_like_script(text: &str) -> bool {
    lex_sexpr_spanned(text).is_ok_and(|items| {
        items.first().is_some_and(|(e, _)| {
            e.as_list()
                .and_then(|l| l.first())
                .and_then(SExpr::as_symbol)
                .is_some_and(|h| COMMAND_NAMES.contains(&h))
        })
    })
}

fn symbol_arg<'a>(s: &'a SExpr, what: &str) -> Result<&'a str, SmtError> {
    s.as_symbol()
        .ok_or_else(|| SmtError::Syntax(format!("{what} must be a symbol, found `{s}`")))
}

fn expect_args(name: &str, args: &[SExpr], n: usize) -> Result<(), SmtError> {
    if args.len() != n {
        return Err(SmtError::Arity {
            symbol: name.to_owned(),
            expected: n.to_string(),
            found: args.len(),
        });
    }
    Ok(())
}

fn command(e: &SExpr, scope: &SmtScope) -> Result<Command, SmtError> {
    let Some((head, args)) = e.as_list().and_then(|l| l.split_first()) else {
        return Err(SmtError::Syntax(format!("expected a command, found `{e}`")));
    };
    let Some(name) = head.as_symbol() else {
        return Err(SmtError::Syntax(format!("expected a command name, found `{head}`")));
    };
    let term = |s: &SExpr| parse_smt_term(s, scope);
    Ok(match name {
        "set-logic" => {
            expect_args(name, args, 1)?;
            Command::SetLogic(symbol_arg(&args[0], "logic")?.to_owned())
        }
        "declare-sort" => {
            let arity = match args {
                [_] => 0,
                [_, SExpr::Atom(AtomKind::Numeral, n)] => n
                    .parse()
                    .map_err(|_| SmtError::Syntax(format!("bad sort arity `{n}`")))?,
                _ => return Err(SmtError::Syntax("declare-sort expects a name and arity".into())),
            };
            Command::DeclareSort {
                name: symbol_arg(&args[0], "sort name")?.to_owned(),
                arity,
            }
        }
        "declare-fun" => {
            expect_args(name, args, 3)?;
            let params = args[1]
                .as_list()
                .ok_or_else(|| SmtError::Syntax("declare-fun expects a sort list".into()))?;
            Command::DeclareFun {
                name: symbol_arg(&args[0], "function name")?.to_owned(),
                args: params
                    .iter()
                    .map(|s| parse_smt_sort(s, scope))
                    .collect::<Result<_, _>>()?,
                result: parse_smt_sort(&args[2], scope)?,
            }
        }
        "declare-const" => {
            expect_args(name, args, 2)?;
            Command::DeclareFun {
                name: symbol_arg(&args[0], "constant name")?.to_owned(),
                args: Vec::new(),
                result: parse_smt_sort(&args[1], scope)?,
            }
        }
        "define-fun" => {
            expect_args(name, args, 4)?;
            let fname = symbol_arg(&args[0], "function name")?;
            let decls = args[1]
                .as_list()
                .ok_or_else(|| SmtError::Syntax("define-fun expects a parameter list".into()))?;
            let mut params = Vec::new();
            let mut inner = scope.clone();
            for d in decls {
                match d.as_list() {
                    Some([SExpr::Atom(AtomKind::Symbol, v), s]) => {
                        let sort = parse_smt_sort(s, scope)?;
                        inner.declare_fun(v.clone(), Vec::new(), sort.clone());
                        params.push((v.clone(), sort));
                    }
                    _ => return Err(SmtError::Syntax(format!("bad parameter `{d}`"))),
                }
            }
            Command::DefineFun {
                name: fname.to_owned(),
                params,
                result: parse_smt_sort(&args[2], scope)?,
                body: parse_smt_term(&args[3], &inner)?,
            }
        }
        "assert" => {
            expect_args(name, args, 1)?;
            Command::Assert(term(&args[0])?)
        }
        "check-sat" => {
            expect_args(name, args, 0)?;
            Command::CheckSat
        }
        "get-value" => {
            expect_args(name, args, 1)?;
            let items = args[0]
                .as_list()
                .filter(|l| !l.is_empty())
                .ok_or_else(|| SmtError::Syntax("get-value expects a non-empty term list".into()))?;
            Command::GetValue(items.iter().map(term).collect::<Result<_, _>>()?)
        }
        "get-model" => {
            expect_args(name, args, 0)?;
            Command::GetModel
        }
        "maximize" => {
            expect_args(name, args, 1)?;
            Command::Maximize(term(&args[0])?)
        }
        "minimize" => {
            expect_args(name, args, 1)?;
            Command::Minimize(term(&args[0])?)
        }
        "exit" => {
            expect_args(name, args, 0)?;
            Command::Exit
        }
        _ => Command::Other(e.clone()),
    })
}
