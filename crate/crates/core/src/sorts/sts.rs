use roxmltree::Node;

use super::{SortError, SortRef, StsSignature};
use crate::ast::{KnownSymbol, Sort, Symbol, Term};
use crate::omxml::{parse_om_xml, SORT_CD};
use crate::text::Position;

/// Maps an OpenMath set symbol used as a sort to an SMT-LIB sort name.
pub fn om_sort(cd: &str, name: &str) -> Sort {
    match (cd, name) {
        (_, "Boolean" | "boolean") => Sort::bool(),
        ("setname1", "Z" | "N" | "P") => Sort::int(),
        ("setname1", "Q" | "R") => Sort::real(),
        _ => Sort::named(name),
    }
}

/// Reads the signatures of an STS file: a `CDSignatures` element holding
/// `Signature` elements, or a single `Signature`. The content dictionary of
/// each signature comes from its own `cd` attribute, the enclosing
/// `CDSignatures`, or `default_cd`, in that order.
pub fn load_sts(text: &str, default_cd: Option<&str>) -> Result<Vec<StsSignature>, SortError> {
    let doc = roxmltree::Document::parse(text).map_err(|e| SortError::BadSignatureXml {
        message: e.to_string(),
        pos: Position {
            line: e.pos().row as usize,
            col: e.pos().col as usize,
        },
    })?;
    let root = doc.root_element();
    let bad = |node: Node, message: String| SortError::BadSignatureXml {
        message,
        pos: Position::of_offset(text, node.range().start),
    };
    let (signatures, group_cd): (Vec<Node>, Option<&str>) = match root.tag_name().name() {
        "Signature" => (vec![root], None),
        "CDSignatures" => (
            root.children()
                .filter(|n| n.is_element() && n.tag_name().name() == "Signature")
                .collect(),
            root.attribute("cd"),
        ),
        other => return Err(bad(root, format!("unexpected root element <{other}>"))),
    };
    let mut out = Vec::with_capacity(signatures.len());
    for sig in signatures {
        let name = sig
            .attribute("name")
            .ok_or_else(|| bad(sig, "Signature without a name".into()))?;
        let cd = sig
            .attribute("cd")
            .or(group_cd)
            .or(default_cd)
            .ok_or_else(|| bad(sig, format!("no content dictionary for signature `{name}`")))?;
        let symbol = Symbol::from_cd(cd, name).map_err(|e| bad(sig, e.to_string()))?;
        let objs: Vec<Node> = sig.children().filter(Node::is_element).collect();
        let [obj] = objs.as_slice() else {
            return Err(bad(sig, format!("signature `{name}` must hold one OMOBJ")));
        };
        let term = parse_om_xml(&text[obj.range()])
            .map_err(|e| bad(*obj, e.to_string()))?
            .root;
        out.push(signature(symbol, &term).map_err(|e| match e {
            SigErr::Combinator(c) => SortError::UnknownStsCombinator(c),
            SigErr::Shape(m) => bad(*obj, m),
        })?);
    }
    Ok(out)
}

enum SigErr {
    Combinator(String),
    Shape(String),
}

fn signature(symbol: Symbol, t: &Term) -> Result<StsSignature, SigErr> {
    match t {
        Term::Apply { head, args } if head_is(head, KnownSymbol::Mapsto) => {
            let Some((result, params)) = args.split_last() else {
                return Err(SigErr::Shape("mapsto without a result sort".into()));
            };
            let result = sort_ref(result)?;
            if let [Term::Apply { head, args: inner }] = params {
                if head_is(head, KnownSymbol::NAssoc) {
                    let [element] = inner.as_slice() else {
                        return Err(SigErr::Shape("nassoc takes exactly one sort".into()));
                    };
                    return Ok(StsSignature::nassoc(symbol, sort_ref(element)?, result));
                }
            }
            let args = params.iter().map(sort_ref).collect::<Result<_, _>>()?;
            Ok(StsSignature::mapsto(symbol, args, result))
        }
        // A bare sort is the signature of a constant.
        _ => Ok(StsSignature::mapsto(symbol, Vec::new(), sort_ref(t)?)),
    }
}

fn head_is(head: &Term, k: KnownSymbol) -> bool {
    matches!(head, Term::Sym(s) if s.is(k))
}

fn sort_ref(t: &Term) -> Result<SortRef, SigErr> {
    match t {
        Term::Var(v) => Ok(SortRef::Var(v.clone())),
        _ => concrete(t).map(SortRef::Sort),
    }
}

fn concrete(t: &Term) -> Result<Sort, SigErr> {
    match t {
        Term::Sym(s) if s.namespace() == "sts" => Err(SigErr::Combinator(s.key())),
        Term::Sym(s) if s.namespace() == SORT_CD => Ok(Sort::named(s.name())),
        Term::Sym(s) => Ok(om_sort(s.namespace(), s.name())),
        Term::Apply { head, args } => match &**head {
            Term::Sym(s) if s.namespace() == "sts" => Err(SigErr::Combinator(s.key())),
            Term::Sym(s) => Ok(Sort::parametric(
                s.name(),
                args.iter().map(concrete).collect::<Result<_, _>>()?,
            )),
            _ => Err(SigErr::Shape(format!("unsupported sort `{t}`"))),
        },
        Term::Var(v) => Err(SigErr::Shape(format!(
            "sort variable `{v}` inside a compound sort"
        ))),
        _ => Err(SigErr::Shape(format!("unsupported sort `{t}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG2: &str = r#"<Signature name="times">
<OMOBJ xmlns="http://www.openmath.org/OpenMath">
 <OMA>
  <OMS name="mapsto" cd="sts"/>
  <OMA>
   <OMS name="nassoc" cd="sts"/>
   <OMV name="AbelianSemiGroup"/>
  </OMA>
  <OMV name="AbelianSemiGroup"/>
 </OMA>
</OMOBJ>
</Signature>
"#;

    #[test]
    fn loads_nassoc_times() {
        let sigs = load_sts(FIG2, Some("arith2")).unwrap();
        assert_eq!(
            sigs,
            vec![StsSignature::nassoc(
                KnownSymbol::CommutativeTimes.symbol(),
                SortRef::var("AbelianSemiGroup"),
                SortRef::var("AbelianSemiGroup"),
            )]
        );
    }

    #[test]
    fn missing_cd_is_an_error() {
        assert!(matches!(
            load_sts(FIG2, None),
            Err(SortError::BadSignatureXml { .. })
        ));
    }

    #[test]
    fn grouped_signatures_and_constants() {
        let text = r#"<CDSignatures cd="relation1">
<Signature name="eq"><OMOBJ><OMA><OMS cd="sts" name="mapsto"/>
  <OMV name="S"/><OMV name="S"/><OMS cd="setname2" name="Boolean"/></OMA></OMOBJ></Signature>
<Signature name="one" cd="alg1"><OMOBJ><OMS cd="setname1" name="R"/></OMOBJ></Signature>
</CDSignatures>"#;
        let sigs = load_sts(text, None).unwrap();
        assert_eq!(
            sigs[0],
            StsSignature::mapsto(
                KnownSymbol::Eq.symbol(),
                vec![SortRef::var("S"), SortRef::var("S")],
                SortRef::Sort(Sort::bool())
            )
        );
        assert_eq!(
            sigs[1],
            StsSignature::mapsto(KnownSymbol::One.symbol(), vec![], SortRef::Sort(Sort::real()))
        );
    }

    #[test]
    fn unknown_combinator_rejected() {
        let text = r#"<Signature name="f" cd="c"><OMOBJ><OMA><OMS cd="sts" name="mapsto"/>
  <OMA><OMS cd="sts" name="nary"/><OMV name="S"/></OMA><OMV name="S"/></OMA></OMOBJ></Signature>"#;
        assert_eq!(
            load_sts(text, None),
            Err(SortError::UnknownStsCombinator("sts.nary".into()))
        );
    }
}
