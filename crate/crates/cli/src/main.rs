//! `mathbridge`: batch translation, desugaring, sort checking and finite
//! evaluation of OpenMath and SMT-LIB inputs.
//!
//! Exit codes: 0 success, 1 usage or I/O, 2 parse, 3 translation,
//! 4 extension lowering (including extension symbols left unlowered),
//! 5 sort checking, 6 evaluation.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mathbridge::ast::{KnownSymbol, Sort, Term};
use mathbridge::extensions::{
    desugar_all, goal_from_argmaxone, lower_argmaxone_to_script,
    DesugarStrategy, ExistsUniqueForm, MaxForm,
};
use mathbridge::omxml::{parse_om_xml, print_om_xml, OmDocument};
use mathbridge::oracle::{eval, eval_script, parse_interpretation, Interpretation};
use mathbridge::popcorn::{parse_popcorn, print_popcorn, PopcornConfig};
use mathbridge::smtlib::{
    lex_sexpr, looks_like_script, parse_script, parse_smt_sort, parse_smt_term_str, print_smt,
    Command, Script, SmtScope, ToSmt,
};
use mathbridge::sorts::{check_sorts, load_sts, parse_profile, SignatureTable};
use mathbridge::translate::{
    om_to_smt, smt_to_om, translate_signatures, SymbolMap, TimesTarget, TranslateError, MAP_ENV,
};
use mathbridge::Position;

#[derive(Parser)]
#[command(name = "mathbridge", version, about = "Translate between OpenMath and SMT-LIB")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Translate a term or script into another syntax.
    Translate(Common),
    /// Lower exists-unique, max, argmax and argmaxone constructs.
    Desugar(Common),
    /// Print the sort of a term, or of each assertion of a script.
    Check(Common),
    /// Evaluate a term, or answer a script, over a finite interpretation.
    Eval(Common),
}

#[derive(Args)]
struct Common {
    /// Input file; `-` reads standard input and needs --from.
    input: PathBuf,
    /// Input syntax; guessed from the extension (.om.xml, .pop, .smt2) by default.
    #[arg(long, value_enum)]
    from: Option<Format>,
    /// Output syntax.
    #[arg(long, value_enum)]
    to: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print POPCORN with infix operators.
    #[arg(long)]
    sugar: bool,
    /// OpenMath symbol that SMT-LIB `*` translates back to.
    #[arg(long, value_enum, default_value = "arith1")]
    times: Times,
    /// Symbol map file (`cd.name = token` lines); overrides $MATHBRIDGE_MAP.
    #[arg(long)]
    map: Option<PathBuf>,
    /// STS signature file; the file name up to the first `.` is the default CD.
    #[arg(long)]
    sts: Vec<PathBuf>,
    /// Theory profile file (`literal.KIND = SORT` lines).
    #[arg(long)]
    profile: Option<PathBuf>,
    /// SMT-LIB script whose declarations are in scope.
    #[arg(long)]
    decls: Option<PathBuf>,
    /// Sort of a variable, as NAME=SORT in SMT-LIB syntax; may be repeated.
    #[arg(long = "var-sort", value_name = "NAME=SORT")]
    var_sorts: Vec<String>,
    /// Expansion of exists-unique.
    #[arg(long, value_enum, default_value = "eq1")]
    exists_unique: EuForm,
    /// Form of the max constructor the input uses.
    #[arg(long, value_enum, default_value = "set-function")]
    max_form: MaxFormArg,
    /// Interpretation file for `eval`.
    #[arg(long)]
    interp: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Omxml,
    Popcorn,
    Smt2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Times {
    Arith1,
    Arith2,
}

#[derive(Clone, Copy, ValueEnum)]
enum EuForm {
    /// One alternation: exists x (P x and forall y (P y => x = y)).
    Eq1,
    /// Two universal binders: (exists x P x) and forall y z (P y and P z => y = z).
    Eq2,
}

#[derive(Clone, Copy, ValueEnum)]
enum MaxFormArg {
    SetFunction,
    Binder,
}

/// A failure with its exit code and rendered message.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, file: &Path, err: impl Display) -> Failure {
        Failure {
            code,
            message: format!("{}: {err}", file.display()),
        }
    }

    /// `file:line:col: message`; error messages lead with their own position.
    fn at(code: u8, file: &Path, pos: Option<Position>, err: impl Display) -> Failure {
        let text = err.to_string();
        match pos {
            Some(p) => {
                let bare = text.strip_prefix(&format!("{p}: ")).unwrap_or(&text);
                Failure {
                    code,
                    message: format!("{}:{p}: {bare}", file.display()),
                }
            }
            None => Failure::new(code, file, text),
        }
    }
}

const USAGE: u8 = 1;
const PARSE: u8 = 2;
const TRANSLATION: u8 = 3;
const EXTENSION: u8 = 4;
const SORT: u8 = 5;
const ORACLE: u8 = 6;

/// An extension symbol that reaches translation unlowered counts as an
/// extension failure.
fn translation_failure(file: &Path, e: TranslateError) -> Failure {
    let code = match e {
        TranslateError::UnloweredExtension(_) => EXTENSION,
        _ => TRANSLATION,
    };
    Failure::new(code, file, e)
}

enum Input {
    Om(OmDocument),
    Smt(Term),
    Script(Script),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    let (out, c) = match cmd {
        Cmd::Translate(c) => (translate(&c)?, c),
        Cmd::Desugar(c) => (desugar(&c)?, c),
        Cmd::Check(c) => (check(&c)?, c),
        Cmd::Eval(c) => (evaluate(&c)?, c),
    };
    match &c.output {
        Some(p) => std::fs::write(p, out).map_err(|e| Failure::new(USAGE, p, e)),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Failure::new(USAGE, path, e))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::new(USAGE, path, e))
}

fn input_format(c: &Common) -> Result<Format, Failure> {
    if let Some(f) = c.from {
        return Ok(f);
    }
    let name = c.input.to_string_lossy();
    if name.ends_with(".xml") || name.ends_with(".om") {
        Ok(Format::Omxml)
    } else if name.ends_with(".pop") {
        Ok(Format::Popcorn)
    } else if name.ends_with(".smt2") {
        Ok(Format::Smt2)
    } else {
        Err(Failure::new(
            USAGE,
            &c.input,
            "cannot tell the input syntax; use --from",
        ))
    }
}

fn load(c: &Common, scope: &SmtScope) -> Result<(Format, Input), Failure> {
    let text = read(&c.input)?;
    let fmt = input_format(c)?;
    let input = match fmt {
        Format::Omxml => Input::Om(
            parse_om_xml(&text).map_err(|e| Failure::at(PARSE, &c.input, e.position(), &e))?,
        ),
        Format::Popcorn => Input::Om(OmDocument::new(
            parse_popcorn(&text).map_err(|e| Failure::at(PARSE, &c.input, e.position(), &e))?,
        )),
        Format::Smt2 if looks_like_script(&text) => Input::Script(
            parse_script(&text).map_err(|e| smt_failure(&c.input, &e))?,
        ),
        Format::Smt2 => Input::Smt(
            parse_smt_term_str(&text, scope).map_err(|e| smt_failure(&c.input, &e))?,
        ),
    };
    Ok((fmt, input))
}

fn smt_failure(file: &Path, e: &mathbridge::smtlib::SmtError) -> Failure {
    Failure::at(PARSE, file, e.position(), e)
}

fn symbol_map(c: &Common) -> Result<SymbolMap, Failure> {
    let path = c
        .map
        .clone()
        .or_else(|| std::env::var_os(MAP_ENV).map(PathBuf::from));
    let map = match path {
        Some(p) => SymbolMap::parse(&read(&p)?).map_err(|e| Failure::new(PARSE, &p, e))?,
        None => SymbolMap::default(),
    };
    Ok(map.with_times(match c.times {
        Times::Arith1 => TimesTarget::Arith1,
        Times::Arith2 => TimesTarget::Arith2,
    }))
}

fn strategy(c: &Common) -> DesugarStrategy {
    DesugarStrategy {
        exists_unique: match c.exists_unique {
            EuForm::Eq1 => ExistsUniqueForm::Alternation,
            EuForm::Eq2 => ExistsUniqueForm::TwoQuantifier,
        },
        max_form: match c.max_form {
            MaxFormArg::SetFunction => MaxForm::SetFunctionOperator,
            MaxFormArg::Binder => MaxForm::RestrictedBinder,
        },
    }
}

fn decls(c: &Common) -> Result<Option<Script>, Failure> {
    let Some(p) = &c.decls else {
        return Ok(None);
    };
    let text = read(p)?;
    parse_script(&text)
        .map(Some)
        .map_err(|e| smt_failure(p, &e))
}

/// Scope for parsing SMT-LIB terms: lenient, plus `--decls`.
fn smt_scope(decls: Option<&Script>) -> SmtScope {
    let mut scope = SmtScope::lenient();
    if let Some(d) = decls {
        let s = d.scope();
        for (n, a) in s.sorts {
            scope.declare_sort(n, a);
        }
        for (n, (args, r)) in s.funs {
            scope.declare_fun(n, args, r);
        }
    }
    scope
}

fn table(c: &Common, decls: Option<&Script>) -> Result<SignatureTable, Failure> {
    let mut table = SignatureTable::new();
    if let Some(p) = &c.profile {
        table.profile = parse_profile(&read(p)?).map_err(|e| Failure::new(PARSE, p, e))?;
    }
    for p in &c.sts {
        let file_name = p.file_name().map(|n| n.to_string_lossy().into_owned());
        let cd = file_name
            .as_deref()
            .and_then(|n| n.split('.').next())
            .filter(|cd| !cd.is_empty());
        let sigs = load_sts(&read(p)?, cd).map_err(|e| {
            let pos = match &e {
                mathbridge::sorts::SortError::BadSignatureXml { pos, .. } => Some(*pos),
                _ => None,
            };
            Failure::at(PARSE, p, pos, e)
        })?;
        table.add_signatures(sigs);
    }
    if let Some(d) = decls {
        table.declare_scope(&d.scope());
    }
    for spec in &c.var_sorts {
        let bad = |m: String| Failure {
            code: USAGE,
            message: format!("--var-sort {spec}: {m}"),
        };
        let (name, sort) = spec
            .split_once('=')
            .ok_or_else(|| bad("expected NAME=SORT".into()))?;
        let sort = parse_sort(sort.trim()).map_err(bad)?;
        if sort.args.is_empty() && !sort.interpreted && !table.declared_sorts.contains_key(&sort.name) {
            table.declare_sort(sort.name.clone(), 0);
        }
        table.set_var_sort(name.trim(), sort);
    }
    Ok(table)
}

fn parse_sort(text: &str) -> Result<Sort, String> {
    let exprs = lex_sexpr(text).map_err(|e| e.to_string())?;
    let [e] = exprs.as_slice() else {
        return Err(format!("expected one sort, found `{text}`"));
    };
    parse_smt_sort(e, &SmtScope::lenient()).map_err(|e| e.to_string())
}

fn om_out(doc: OmDocument, to: Format, c: &Common, map: &SymbolMap, tbl: &SignatureTable) -> Result<String, Failure> {
    match to {
        Format::Omxml => print_om_xml(&doc).map_err(|e| Failure::new(TRANSLATION, &c.input, e)),
        Format::Popcorn => {
            let cfg = if c.sugar {
                PopcornConfig::SUGARED
            } else {
                PopcornConfig::QUALIFIED
            };
            print_popcorn(&doc.root, cfg)
                .map(|s| s + "\n")
                .map_err(|e| Failure::new(TRANSLATION, &c.input, e))
        }
        Format::Smt2 => {
            let t = om_to_smt(&doc.root, map, tbl).map_err(|e| translation_failure(&c.input, e))?;
            smt_line(&t, c)
        }
    }
}

fn smt_line(t: &Term, c: &Common) -> Result<String, Failure> {
    print_smt(t)
        .map(|s| s + "\n")
        .map_err(|e| Failure::new(TRANSLATION, &c.input, e))
}

fn smt_out(t: &Term, to: Format, c: &Common, map: &SymbolMap, tbl: &SignatureTable) -> Result<String, Failure> {
    if to == Format::Smt2 {
        return smt_line(t, c);
    }
    let om = smt_to_om(t, map).map_err(|e| Failure::new(TRANSLATION, &c.input, e))?;
    om_out(OmDocument::new(om), to, c, map, tbl)
}

fn translate(c: &Common) -> Result<String, Failure> {
    let d = decls(c)?;
    let scope = smt_scope(d.as_ref());
    let map = symbol_map(c)?;
    let tbl = table(c, d.as_ref())?;
    let (fmt, input) = load(c, &scope)?;
    match input {
        Input::Om(doc) => om_out(doc, c.to.unwrap_or(Format::Smt2), c, &map, &tbl),
        Input::Smt(t) => smt_out(&t, c.to.unwrap_or(Format::Omxml), c, &map, &tbl),
        Input::Script(s) => {
            let to = c.to.unwrap_or(fmt);
            if to == Format::Smt2 {
                return print_smt(&s).map_err(|e| Failure::new(TRANSLATION, &c.input, e));
            }
            // One OpenMath object per assertion.
            let mut out = String::new();
            for a in s.assertions() {
                out.push_str(&smt_out(a, to, c, &map, &tbl)?);
            }
            Ok(out)
        }
    }
}

fn desugar(c: &Common) -> Result<String, Failure> {
    let d = decls(c)?;
    let scope = smt_scope(d.as_ref());
    let map = symbol_map(c)?;
    let tbl = table(c, d.as_ref())?;
    let (fmt, input) = load(c, &scope)?;
    let ext = |e| Failure::new(EXTENSION, &c.input, e);
    match input {
        Input::Om(mut doc) => {
            if let Term::Bind { binder, .. } = &doc.root {
                if binder.is(KnownSymbol::ArgmaxOne) {
                    let (goal, constraints) = goal_from_argmaxone(&doc.root, &tbl).map_err(ext)?;
                    let mut script =
                        lower_argmaxone_to_script(&goal, &constraints, &tbl).map_err(ext)?;
                    for cmd in &mut script.commands {
                        translate_command(cmd, &map, &tbl)
                            .map_err(|e| translation_failure(&c.input, e))?;
                    }
                    return print_smt(&script).map_err(|e| Failure::new(TRANSLATION, &c.input, e));
                }
            }
            doc.root = desugar_all(&doc.root, &strategy(c)).map_err(ext)?;
            om_out(doc, c.to.unwrap_or(fmt), c, &map, &tbl)
        }
        Input::Smt(t) => {
            let om = smt_to_om(&t, &map).map_err(|e| Failure::new(TRANSLATION, &c.input, e))?;
            let lowered = desugar_all(&om, &strategy(c)).map_err(ext)?;
            om_out(OmDocument::new(lowered), c.to.unwrap_or(fmt), c, &map, &tbl)
        }
        Input::Script(s) => print_smt(&s).map_err(|e| Failure::new(TRANSLATION, &c.input, e)),
    }
}

// Goal scripts are built from OpenMath terms; their terms still need
// translating to SMT-LIB symbols.
fn translate_command(
    cmd: &mut Command,
    map: &SymbolMap,
    tbl: &SignatureTable,
) -> Result<(), TranslateError> {
    let tr = |t: &Term| om_to_smt(t, map, tbl);
    match cmd {
        Command::Assert(t) | Command::Maximize(t) | Command::Minimize(t) => *t = tr(t)?,
        Command::GetValue(ts) => {
            for t in ts {
                *t = tr(t)?;
            }
        }
        _ => {}
    }
    Ok(())
}

fn check(c: &Common) -> Result<String, Failure> {
    let d = decls(c)?;
    let scope = smt_scope(d.as_ref());
    let map = symbol_map(c)?;
    let mut tbl = table(c, d.as_ref())?;
    let (_, input) = load(c, &scope)?;
    let sort_err = |e| Failure::new(SORT, &c.input, e);
    match input {
        Input::Om(doc) => Ok(format!("{}\n", check_sorts(&doc.root, &tbl).map_err(sort_err)?)),
        Input::Smt(t) => {
            translate_signatures(&mut tbl, &map);
            Ok(format!("{}\n", check_sorts(&t, &tbl).map_err(sort_err)?))
        }
        Input::Script(s) => {
            translate_signatures(&mut tbl, &map);
            tbl.declare_scope(&s.scope());
            let mut out = String::new();
            for a in s.assertions() {
                out.push_str(&format!("{}\n", check_sorts(a, &tbl).map_err(sort_err)?));
            }
            Ok(out)
        }
    }
}

fn evaluate(c: &Common) -> Result<String, Failure> {
    let d = decls(c)?;
    let scope = smt_scope(d.as_ref());
    let interp = match &c.interp {
        Some(p) => parse_interpretation(&read(p)?).map_err(|e| Failure::new(PARSE, p, e))?,
        None => Interpretation::new(),
    };
    let (_, input) = load(c, &scope)?;
    let oracle = |e| Failure::new(ORACLE, &c.input, e);
    match input {
        Input::Om(doc) => Ok(format!("{}\n", eval(&doc.root, &interp).map_err(oracle)?)),
        Input::Smt(t) => Ok(format!("{}\n", eval(&t, &interp).map_err(oracle)?)),
        Input::Script(s) => {
            let r = eval_script(&s, &interp).map_err(oracle)?;
            Ok(r.to_smt().map_err(|e| Failure::new(ORACLE, &c.input, e))?)
        }
    }
}
