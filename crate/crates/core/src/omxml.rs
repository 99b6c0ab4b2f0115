//! Reader and writer for the OpenMath XML encoding.
//!
//! Element mapping: `OMS` symbol, `OMV` variable, `OMI`/`OMF`/`OMSTR`/`OMB`
//! literals, `OMA` application (first child is the head), `OMBIND` with an
//! `OMBVAR` list, `OMATTR`/`OMATP` attribution, `OME` error and `OMFOREIGN`.
//! An `OMBIND` of a predicate-restricted binder (`minmax2.max`, `argmax`,
//! `argmaxone`) has a fourth child: the restricting predicate, after the body.
//!
//! Bound-variable sorts travel as an `sts.sort` attribution on the `OMV`
//! inside `OMBVAR`; any other attribution on a bound variable is dropped.

use base64::Engine;
use num_bigint::BigInt;
use num_traits::Num;
use roxmltree::Node;
use thiserror::Error;

use crate::ast::{BoundVar, KnownSymbol, Literal, Origin, Sort, Symbol, Term};
use crate::text::{escape_xml, Position, Printed};

pub const OPENMATH_NS: &str = "http://www.openmath.org/OpenMath";
pub const DEFAULT_VERSION: &str = "2.0";
/// Content dictionary used for sort names inside `sts.sort` attributions.
pub const SORT_CD: &str = "smtsort";

const FOREIGN_ENCODINGS: &[&str] = &[
    "",
    "text/plain",
    "text/xml",
    "text/latex",
    "application/xml",
    "application/mathml+xml",
    "application/openmath+xml",
];

#[derive(Debug, Clone, PartialEq)]
pub struct OmDocument {
    pub root: Term,
    /// Recorded but not used for symbol resolution.
    pub cdbase: Option<String>,
    pub version: String,
}

impl OmDocument {
    pub fn new(root: Term) -> OmDocument {
        OmDocument {
            root,
            cdbase: None,
            version: DEFAULT_VERSION.to_owned(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OmXmlError {
    #[error("{pos}: malformed XML: {message}")]
    XmlSyntax { message: String, pos: Position },
    #[error("{pos}: unknown element <{name}>")]
    UnknownElement { name: String, pos: Position },
    #[error("{pos}: OMA without children")]
    EmptyApplication { pos: Position },
    #[error("{pos}: OMBIND without OMBVAR")]
    MissingBvar { pos: Position },
    #[error("{pos}: bad integer `{text}`")]
    BadInteger { text: String, pos: Position },
    #[error("{pos}: {message}")]
    Malformed { message: String, pos: Position },
    #[error("cannot print as OpenMath XML: {0}")]
    Unprintable(String),
}

impl OmXmlError {
    pub fn position(&self) -> Option<Position> {
        match self {
            OmXmlError::XmlSyntax { pos, .. }
            | OmXmlError::UnknownElement { pos, .. }
            | OmXmlError::EmptyApplication { pos }
            | OmXmlError::MissingBvar { pos }
            | OmXmlError::BadInteger { pos, .. }
            | OmXmlError::Malformed { pos, .. } => Some(*pos),
            OmXmlError::Unprintable(_) => None,
        }
    }
}

type Result<T> = std::result::Result<T, OmXmlError>;

struct Reader<'a> {
    input: &'a str,
}

impl<'a> Reader<'a> {
    fn pos(&self, node: Node) -> Position {
        Position::of_offset(self.input, node.range().start)
    }

    fn malformed(&self, node: Node, message: impl Into<String>) -> OmXmlError {
        OmXmlError::Malformed {
            message: message.into(),
            pos: self.pos(node),
        }
    }

    /// Element children, rejecting stray non-whitespace text.
    fn elements<'b>(&self, node: Node<'b, 'a>) -> Result<Vec<Node<'b, 'a>>> {
        let mut out = Vec::new();
        for c in node.children() {
            if c.is_element() {
                out.push(c);
            } else if c.is_text() && !c.text().unwrap_or("").trim().is_empty() {
                return Err(self.malformed(c, format!("unexpected text in <{}>", name(node))));
            }
        }
        Ok(out)
    }

    fn attr(&self, node: Node, key: &str) -> Result<String> {
        node.attribute(key)
            .map(str::to_owned)
            .ok_or_else(|| self.malformed(node, format!("<{}> lacks `{key}`", name(node))))
    }

    fn symbol(&self, node: Node) -> Result<Symbol> {
        if name(node) != "OMS" {
            return Err(self.malformed(node, format!("expected OMS, found <{}>", name(node))));
        }
        let cd = self.attr(node, "cd")?;
        let nm = self.attr(node, "name")?;
        Symbol::from_cd(&cd, &nm).map_err(|e| self.malformed(node, e.to_string()))
    }

    fn object(&self, node: Node) -> Result<Term> {
        check_namespace(self, node)?;
        match name(node) {
            "OMS" => Ok(Term::Sym(self.symbol(node)?)),
            "OMV" => Ok(Term::Var(self.attr(node, "name")?)),
            "OMI" => {
                let raw = node.text().unwrap_or("");
                parse_integer(raw.trim()).map(Term::int).ok_or_else(|| {
                    OmXmlError::BadInteger {
                        text: raw.to_owned(),
                        pos: self.pos(node),
                    }
                })
            }
            "OMF" => self.float(node).map(|f| Term::Lit(Literal::Float64(f))),
            "OMSTR" => Ok(Term::Lit(Literal::String(
                node.text().unwrap_or("").to_owned(),
            ))),
            "OMB" => {
                let raw: String = node
                    .text()
                    .unwrap_or("")
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .collect();
                base64::engine::general_purpose::STANDARD
                    .decode(raw)
                    .map(|b| Term::Lit(Literal::ByteArray(b)))
                    .map_err(|e| self.malformed(node, format!("bad base64: {e}")))
            }
            "OMA" => {
                let kids = self.elements(node)?;
                let (head, args) = kids.split_first().ok_or(OmXmlError::EmptyApplication {
                    pos: self.pos(node),
                })?;
                Ok(Term::apply(
                    self.object(*head)?,
                    args.iter().map(|a| self.object(*a)).collect::<Result<_>>()?,
                ))
            }
            "OMBIND" => self.bind(node),
            "OMATTR" => {
                let kids = self.elements(node)?;
                let [atp, base] = kids.as_slice() else {
                    return Err(self.malformed(node, "OMATTR needs OMATP and one object"));
                };
                Ok(Term::Attributed {
                    pairs: self.attribution_pairs(*atp)?,
                    base: Box::new(self.object(*base)?),
                })
            }
            "OME" => {
                let kids = self.elements(node)?;
                let (sym, args) = kids
                    .split_first()
                    .ok_or_else(|| self.malformed(node, "OME needs an error symbol"))?;
                Ok(Term::Error {
                    symbol: self.symbol(*sym)?,
                    args: args.iter().map(|a| self.object(*a)).collect::<Result<_>>()?,
                })
            }
            "OMFOREIGN" => {
                let encoding = node.attribute("encoding").unwrap_or("").to_owned();
                let blob = match (node.first_child(), node.last_child()) {
                    (Some(first), Some(last)) => {
                        self.input.as_bytes()[first.range().start..last.range().end].to_vec()
                    }
                    _ => Vec::new(),
                };
                Ok(Term::Foreign { encoding, blob })
            }
            other => Err(OmXmlError::UnknownElement {
                name: other.to_owned(),
                pos: self.pos(node),
            }),
        }
    }

    fn float(&self, node: Node) -> Result<f64> {
        if let Some(dec) = node.attribute("dec") {
            let d = dec.trim();
            let v = match d {
                "INF" => Some(f64::INFINITY),
                "-INF" => Some(f64::NEG_INFINITY),
                "NaN" => Some(f64::NAN),
                _ if d.chars().all(|c| c.is_ascii_digit() || "+-.eE".contains(c)) => d.parse().ok(),
                _ => None,
            };
            v.ok_or_else(|| self.malformed(node, format!("bad OMF dec `{dec}`")))
        } else if let Some(hex) = node.attribute("hex") {
            let h = hex.trim();
            if h.len() != 16 {
                return Err(self.malformed(node, format!("OMF hex must have 16 digits: `{hex}`")));
            }
            u64::from_str_radix(h, 16)
                .map(f64::from_bits)
                .map_err(|_| self.malformed(node, format!("bad OMF hex `{hex}`")))
        } else {
            Err(self.malformed(node, "OMF needs `dec` or `hex`"))
        }
    }

    fn attribution_pairs(&self, atp: Node) -> Result<Vec<(Symbol, Term)>> {
        if name(atp) != "OMATP" {
            return Err(self.malformed(atp, "expected OMATP"));
        }
        let kids = self.elements(atp)?;
        if kids.is_empty() || kids.len() % 2 != 0 {
            return Err(self.malformed(atp, "OMATP needs symbol/value pairs"));
        }
        kids.chunks(2)
            .map(|kv| Ok((self.symbol(kv[0])?, self.object(kv[1])?)))
            .collect()
    }

    fn bind(&self, node: Node) -> Result<Term> {
        let kids = self.elements(node)?;
        let pos = self.pos(node);
        if kids.len() < 2 || name(kids[1]) != "OMBVAR" {
            return Err(OmXmlError::MissingBvar { pos });
        }
        let binder = self.symbol(kids[0])?;
        let vars = self.bvars(kids[1])?;
        let takes_condition = binder.known().is_some_and(KnownSymbol::takes_condition);
        match kids.len() {
            3 => Ok(Term::bind(binder, vars, self.object(kids[2])?)),
            4 if takes_condition => Ok(Term::bind_with_condition(
                binder,
                vars,
                self.object(kids[3])?,
                self.object(kids[2])?,
            )),
            4 => Err(self.malformed(node, format!("binder {binder} takes no predicate"))),
            _ => Err(self.malformed(node, "OMBIND needs a binder, OMBVAR and a body")),
        }
    }

    fn bvars(&self, node: Node) -> Result<Vec<BoundVar>> {
        let mut vars: Vec<BoundVar> = Vec::new();
        for v in self.elements(node)? {
            let bv = match name(v) {
                "OMV" => BoundVar::new(self.attr(v, "name")?),
                "OMATTR" => {
                    let kids = self.elements(v)?;
                    let [atp, var] = kids.as_slice() else {
                        return Err(self.malformed(v, "OMATTR needs OMATP and one object"));
                    };
                    if name(*var) != "OMV" {
                        return Err(self.malformed(*var, "bound variable must be OMV"));
                    }
                    let mut bv = BoundVar::new(self.attr(*var, "name")?);
                    for (key, value) in self.attribution_pairs(*atp)? {
                        if key.is(KnownSymbol::SortAttribution) {
                            bv.sort = Some(term_to_sort(&value).ok_or_else(|| {
                                self.malformed(*atp, "sort attribution is not a sort")
                            })?);
                        }
                    }
                    bv
                }
                other => {
                    return Err(self.malformed(v, format!("unexpected <{other}> in OMBVAR")));
                }
            };
            if vars.iter().any(|w| w.name == bv.name) {
                return Err(self.malformed(v, format!("variable `{}` bound twice", bv.name)));
            }
            vars.push(bv);
        }
        if vars.is_empty() {
            return Err(self.malformed(node, "OMBVAR binds no variables"));
        }
        Ok(vars)
    }
}

fn name<'a>(node: Node<'a, '_>) -> &'a str {
    node.tag_name().name()
}

fn check_namespace(r: &Reader, node: Node) -> Result<()> {
    match node.tag_name().namespace() {
        None => Ok(()),
        Some(ns) if ns == OPENMATH_NS => Ok(()),
        Some(ns) => Err(OmXmlError::UnknownElement {
            name: format!("{{{ns}}}{}", name(node)),
            pos: r.pos(node),
        }),
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let n = if let Some(hex) = digits.strip_prefix('x') {
        if hex.is_empty() || !hex.bytes().all(|b| b.is_ascii_hexdigit()) {
            return None;
        }
        BigInt::from_str_radix(hex, 16).ok()?
    } else {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        BigInt::from_str_radix(digits, 10).ok()?
    };
    Some(if neg { -n } else { n })
}

/// Reads a sort from its attribution value: a symbol, or an application of a
/// symbol to argument sorts.
pub fn term_to_sort(t: &Term) -> Option<Sort> {
    match t {
        Term::Sym(s) => Some(Sort::named(s.name())),
        Term::Apply { head, args } => match head.as_ref() {
            Term::Sym(s) => Some(Sort::parametric(
                s.name(),
                args.iter().map(term_to_sort).collect::<Option<_>>()?,
            )),
            _ => None,
        },
        _ => None,
    }
}

pub fn sort_to_term(s: &Sort) -> Term {
    let head = Term::Sym(
        Symbol::new(SORT_CD, s.name.clone(), Origin::OpenMathCd)
            .expect("sort names contain no whitespace"),
    );
    if s.args.is_empty() {
        head
    } else {
        Term::apply(head, s.args.iter().map(sort_to_term).collect())
    }
}

/// Parses an OpenMath XML document. Accepts an `OMOBJ`, an `OMOBJ` wrapped
/// in `FMP`, or a bare object element.
pub fn parse_om_xml(text: &str) -> Result<OmDocument> {
    let doc = roxmltree::Document::parse(text).map_err(|e| {
        let p = e.pos();
        OmXmlError::XmlSyntax {
            message: e.to_string(),
            pos: Position {
                line: p.row as usize,
                col: p.col as usize,
            },
        }
    })?;
    let r = Reader { input: text };
    let mut root = doc.root_element();
    if name(root) == "FMP" {
        let kids = r.elements(root)?;
        let [obj] = kids.as_slice() else {
            return Err(r.malformed(root, "FMP must contain exactly one OMOBJ"));
        };
        root = *obj;
    }
    if name(root) == "OMOBJ" {
        check_namespace(&r, root)?;
        let kids = r.elements(root)?;
        let [obj] = kids.as_slice() else {
            return Err(r.malformed(root, "OMOBJ must contain exactly one object"));
        };
        Ok(OmDocument {
            root: r.object(*obj)?,
            cdbase: root.attribute("cdbase").map(str::to_owned),
            version: root
                .attribute("version")
                .unwrap_or(DEFAULT_VERSION)
                .to_owned(),
        })
    } else {
        Ok(OmDocument::new(r.object(root)?))
    }
}

struct Writer {
    out: String,
    warnings: Vec<String>,
}

impl Writer {
    fn line(&mut self, depth: usize, s: &str) {
        for _ in 0..depth {
            self.out.push_str("  ");
        }
        self.out.push_str(s);
        self.out.push('\n');
    }

    fn symbol(&mut self, depth: usize, s: &Symbol) -> Result<()> {
        if s.origin() == Origin::SmtTheory {
            return Err(OmXmlError::Unprintable(format!(
                "SMT-LIB symbol `{s}` must be translated first"
            )));
        }
        let mut tag = String::from("<OMS cd=\"");
        escape_xml(s.namespace(), &mut tag, true);
        tag.push_str("\" name=\"");
        escape_xml(s.name(), &mut tag, true);
        tag.push_str("\"/>");
        self.line(depth, &tag);
        Ok(())
    }

    fn var(&mut self, depth: usize, name: &str) {
        let mut tag = String::from("<OMV name=\"");
        escape_xml(name, &mut tag, true);
        tag.push_str("\"/>");
        self.line(depth, &tag);
    }

    fn term(&mut self, depth: usize, t: &Term) -> Result<()> {
        match t {
            Term::Sym(s) => self.symbol(depth, s)?,
            Term::Var(v) => self.var(depth, v),
            Term::Lit(l) => self.literal(depth, l)?,
            Term::Apply { head, args } => {
                if args.is_empty() {
                    self.warnings
                        .push(format!("nullary application of {head} printed as OMA"));
                }
                self.line(depth, "<OMA>");
                self.term(depth + 1, head)?;
                for a in args {
                    self.term(depth + 1, a)?;
                }
                self.line(depth, "</OMA>");
            }
            Term::Bind {
                binder,
                vars,
                condition,
                body,
            } => {
                self.line(depth, "<OMBIND>");
                self.symbol(depth + 1, binder)?;
                self.line(depth + 1, "<OMBVAR>");
                for v in vars {
                    match &v.sort {
                        None => self.var(depth + 2, &v.name),
                        Some(sort) => {
                            self.line(depth + 2, "<OMATTR>");
                            self.line(depth + 3, "<OMATP>");
                            self.symbol(depth + 4, &KnownSymbol::SortAttribution.symbol())?;
                            self.term(depth + 4, &sort_to_term(sort))?;
                            self.line(depth + 3, "</OMATP>");
                            self.var(depth + 3, &v.name);
                            self.line(depth + 2, "</OMATTR>");
                        }
                    }
                }
                self.line(depth + 1, "</OMBVAR>");
                self.term(depth + 1, body)?;
                if let Some(c) = condition {
                    self.term(depth + 1, c)?;
                }
                self.line(depth, "</OMBIND>");
            }
            Term::Attributed { pairs, base } => {
                self.line(depth, "<OMATTR>");
                self.line(depth + 1, "<OMATP>");
                for (k, v) in pairs {
                    self.symbol(depth + 2, k)?;
                    self.term(depth + 2, v)?;
                }
                self.line(depth + 1, "</OMATP>");
                self.term(depth + 1, base)?;
                self.line(depth, "</OMATTR>");
            }
            Term::Error { symbol, args } => {
                self.line(depth, "<OME>");
                self.symbol(depth + 1, symbol)?;
                for a in args {
                    self.term(depth + 1, a)?;
                }
                self.line(depth, "</OME>");
            }
            Term::Foreign { encoding, blob } => {
                if !FOREIGN_ENCODINGS.contains(&encoding.as_str()) {
                    return Err(OmXmlError::Unprintable(format!(
                        "foreign object with unknown encoding `{encoding}`"
                    )));
                }
                let content = std::str::from_utf8(blob).map_err(|_| {
                    OmXmlError::Unprintable("foreign blob is not UTF-8".to_owned())
                })?;
                let wrapped = format!("<w>{content}</w>");
                if roxmltree::Document::parse(&wrapped).is_err() {
                    return Err(OmXmlError::Unprintable(
                        "foreign blob is not well-formed XML content".to_owned(),
                    ));
                }
                let mut tag = String::from("<OMFOREIGN");
                if !encoding.is_empty() {
                    tag.push_str(" encoding=\"");
                    escape_xml(encoding, &mut tag, true);
                    tag.push('"');
                }
                tag.push('>');
                tag.push_str(content);
                tag.push_str("</OMFOREIGN>");
                self.line(depth, &tag);
            }
        }
        Ok(())
    }

    fn literal(&mut self, depth: usize, l: &Literal) -> Result<()> {
        let s = match l {
            Literal::Integer(n) => format!("<OMI>{n}</OMI>"),
            Literal::Float64(f) => {
                if f.is_finite() {
                    format!("<OMF dec=\"{f:?}\"/>")
                } else {
                    format!("<OMF hex=\"{:016X}\"/>", f.to_bits())
                }
            }
            Literal::String(s) => {
                let mut out = String::from("<OMSTR>");
                escape_xml(s, &mut out, false);
                out.push_str("</OMSTR>");
                out
            }
            Literal::ByteArray(b) => format!(
                "<OMB>{}</OMB>",
                base64::engine::general_purpose::STANDARD.encode(b)
            ),
            Literal::Numeral(_)
            | Literal::Decimal(_)
            | Literal::Hexadecimal(_)
            | Literal::Binary(_) => {
                return Err(OmXmlError::Unprintable(format!(
                    "SMT-LIB constant `{l}` must be translated first"
                )))
            }
        };
        self.line(depth, &s);
        Ok(())
    }
}

/// Prints a bare object (no `OMOBJ` wrapper), two-space indented.
pub fn print_om_object(t: &Term) -> Result<Printed> {
    let mut w = Writer {
        out: String::new(),
        warnings: Vec::new(),
    };
    w.term(0, t)?;
    Ok(Printed {
        text: w.out,
        warnings: w.warnings,
    })
}

/// Prints a full document with its `OMOBJ` wrapper.
pub fn print_om_xml_checked(doc: &OmDocument) -> Result<Printed> {
    let mut w = Writer {
        out: String::new(),
        warnings: Vec::new(),
    };
    let mut open = format!("<OMOBJ xmlns=\"{OPENMATH_NS}\" version=\"");
    escape_xml(&doc.version, &mut open, true);
    open.push('"');
    if let Some(base) = &doc.cdbase {
        open.push_str(" cdbase=\"");
        escape_xml(base, &mut open, true);
        open.push('"');
    }
    open.push('>');
    w.line(0, &open);
    w.term(1, &doc.root)?;
    w.line(0, "</OMOBJ>");
    Ok(Printed {
        text: w.out,
        warnings: w.warnings,
    })
}

pub fn print_om_xml(doc: &OmDocument) -> Result<String> {
    print_om_xml_checked(doc).map(|p| p.text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::KnownSymbol as K;

    const PLUS_EXAMPLE: &str = r#"<OMA>
  <OMS name="plus" cd="arith1"/>
  <OMV name="x"/>
  <OMI> 1 </OMI>
</OMA>"#;

    fn x_plus_one() -> Term {
        Term::app(K::Plus, vec![Term::var("x"), Term::int(1)])
    }

    #[test]
    fn parses_plus_example() {
        let doc = parse_om_xml(PLUS_EXAMPLE).unwrap();
        assert_eq!(doc.root, x_plus_one());
        assert_eq!(doc.version, "2.0");
    }

    #[test]
    fn parses_integer_leaf() {
        assert_eq!(parse_om_xml("<OMI>0</OMI>").unwrap().root, Term::int(0));
        assert_eq!(parse_om_xml("<OMI>-x1F</OMI>").unwrap().root, Term::int(-31));
    }

    #[test]
    fn prints_float_as_dec() {
        let out = print_om_object(&Term::Lit(Literal::Float64(1.0))).unwrap();
        assert_eq!(out.text, "<OMF dec=\"1.0\"/>\n");
        let nan = print_om_object(&Term::Lit(Literal::Float64(f64::NAN))).unwrap();
        assert!(nan.text.starts_with("<OMF hex=\""));
        let back = parse_om_xml(&nan.text).unwrap().root;
        assert_eq!(back, Term::Lit(Literal::Float64(f64::NAN)));
    }

    #[test]
    fn printed_example_matches_modulo_whitespace() {
        let printed = print_om_object(&x_plus_one()).unwrap().text;
        let squash = |s: &str| s.split_whitespace().collect::<String>();
        let expected = PLUS_EXAMPLE
            .replace(r#"name="plus" cd="arith1""#, r#"cd="arith1" name="plus""#)
            .replace("<OMI> 1 </OMI>", "<OMI>1</OMI>");
        assert_eq!(squash(&printed), squash(&expected));
    }

    #[test]
    fn error_cases() {
        assert!(matches!(
            parse_om_xml("<OMA><OMV name=\"x\"/>"),
            Err(OmXmlError::XmlSyntax { .. })
        ));
        assert!(matches!(
            parse_om_xml("<OMX/>"),
            Err(OmXmlError::UnknownElement { .. })
        ));
        assert!(matches!(
            parse_om_xml("<OMA></OMA>"),
            Err(OmXmlError::EmptyApplication { .. })
        ));
        assert!(matches!(
            parse_om_xml(r#"<OMBIND><OMS cd="quant1" name="forall"/><OMV name="x"/></OMBIND>"#),
            Err(OmXmlError::MissingBvar { .. })
        ));
        assert!(matches!(
            parse_om_xml("<OMI>1.5</OMI>"),
            Err(OmXmlError::BadInteger { .. })
        ));
    }

    #[test]
    fn duplicate_bound_names_rejected() {
        let text = r#"<OMBIND><OMS cd="quant1" name="forall"/>
            <OMBVAR><OMV name="x"/><OMV name="x"/></OMBVAR><OMV name="x"/></OMBIND>"#;
        assert!(matches!(
            parse_om_xml(text),
            Err(OmXmlError::Malformed { .. })
        ));
    }

    #[test]
    fn sorted_bound_variables_round_trip() {
        let t = Term::bind(
            K::Forall,
            vec![BoundVar::sorted("a", Sort::named("S"))],
            Term::var("a"),
        );
        let doc = OmDocument::new(t.clone());
        let text = print_om_xml(&doc).unwrap();
        assert!(text.contains(r#"<OMS cd="sts" name="sort"/>"#));
        assert_eq!(parse_om_xml(&text).unwrap(), doc);
    }

    #[test]
    fn foreign_blob_preserved_and_checked() {
        let text = r#"<OMFOREIGN encoding="text/latex">a &lt; <b>x</b></OMFOREIGN>"#;
        let t = parse_om_xml(text).unwrap().root;
        assert_eq!(
            t,
            Term::Foreign {
                encoding: "text/latex".into(),
                blob: b"a &lt; <b>x</b>".to_vec()
            }
        );
        assert_eq!(print_om_object(&t).unwrap().text.trim(), text);
        let odd = Term::Foreign {
            encoding: "application/x-unknown".into(),
            blob: vec![],
        };
        assert!(matches!(
            print_om_object(&odd),
            Err(OmXmlError::Unprintable(_))
        ));
    }

    #[test]
    fn nullary_application_warns() {
        let t = Term::app(K::One, vec![]);
        let out = print_om_object(&t).unwrap();
        assert_eq!(out.warnings.len(), 1);
        assert_eq!(parse_om_xml(&out.text).unwrap().root, t);
    }

    #[test]
    fn smt_constructs_are_unprintable() {
        let t = Term::Sym(Symbol::smt("+").unwrap());
        assert!(print_om_object(&t).is_err());
        let t = Term::Lit(Literal::Numeral("1".into()));
        assert!(print_om_object(&t).is_err());
    }
}
