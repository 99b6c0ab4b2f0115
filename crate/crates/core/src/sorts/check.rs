use std::collections::BTreeMap;
use std::fmt;

use super::{SignatureTable, SortError, SortRef, StsShape, TermPath};
use crate::ast::{KnownSymbol as K, LiteralKind, Origin, Sort, Symbol, Term};

/// Returns the sort of `t`. Every symbol needs a declaration, a signature in
/// the table, or a built-in signature; every variable needs a sort from an
/// enclosing binder or the table. Bound variables without a sort are
/// inferred from their uses.
pub fn check_sorts(t: &Term, table: &SignatureTable) -> Result<Sort, SortError> {
    let mut c = Checker {
        table,
        metas: Vec::new(),
    };
    let ty = c.check(t, &TermPath::default(), &mut Vec::new())?;
    c.to_sort(&ty).ok_or(SortError::AmbiguousSort {
        path: TermPath::default(),
    })
}

#[derive(Debug, Clone)]
enum Ty {
    Meta(usize),
    Con(String, Vec<Ty>),
}

impl Ty {
    fn of(s: &Sort) -> Ty {
        Ty::Con(s.name.clone(), s.args.iter().map(Ty::of).collect())
    }

    fn named(name: &str) -> Ty {
        Ty::Con(name.to_owned(), Vec::new())
    }
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Meta(i) => write!(f, "?{i}"),
            Ty::Con(n, args) if args.is_empty() => f.write_str(n),
            Ty::Con(n, args) => {
                write!(f, "({n}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Meta {
    link: Option<Ty>,
    numeric: bool,
}

struct Checker<'a> {
    table: &'a SignatureTable,
    metas: Vec<Meta>,
}

fn is_numeric(name: &str, args: &[Ty]) -> bool {
    args.is_empty() && (name == "Int" || name == "Real")
}

fn sr(s: Sort) -> SortRef {
    SortRef::Sort(s)
}

fn num(v: &str) -> SortRef {
    SortRef::NumericVar(v.to_owned())
}

fn mapsto(args: Vec<SortRef>, result: SortRef) -> StsShape {
    StsShape::Mapsto { args, result }
}

fn nassoc(element: SortRef, result: SortRef) -> StsShape {
    StsShape::NAssoc { element, result }
}

/// Signatures of SMT-LIB Core and Ints/Reals operators, and of the usual
/// OpenMath arithmetic, relation and logic symbols.
fn builtin(sym: &Symbol, argc: usize) -> Option<StsShape> {
    let b = || sr(Sort::bool());
    let (i, r) = (|| sr(Sort::int()), || sr(Sort::real()));
    let x = || SortRef::var("X");
    let n = || num("N");
    if sym.origin() == Origin::SmtTheory {
        return Some(match sym.name() {
            "true" | "false" => mapsto(vec![], b()),
            "not" => mapsto(vec![b()], b()),
            "and" | "or" | "xor" | "=>" => nassoc(b(), b()),
            "=" | "distinct" => nassoc(x(), b()),
            "ite" => mapsto(vec![b(), x(), x()], x()),
            "-" if argc == 1 => mapsto(vec![n()], n()),
            "+" | "-" | "*" => nassoc(n(), n()),
            "/" => nassoc(r(), r()),
            "div" | "mod" => mapsto(vec![i(), i()], i()),
            "abs" => mapsto(vec![i()], i()),
            "<=" | "<" | ">=" | ">" => nassoc(n(), b()),
            "to_real" => mapsto(vec![i()], r()),
            "to_int" => mapsto(vec![r()], i()),
            "is_int" => mapsto(vec![r()], b()),
            _ => return None,
        });
    }
    Some(match sym.known()? {
        K::True | K::False => mapsto(vec![], b()),
        K::Not => mapsto(vec![b()], b()),
        K::And | K::Or => nassoc(b(), b()),
        K::Implies => mapsto(vec![b(), b()], b()),
        K::Eq | K::Neq => mapsto(vec![x(), x()], b()),
        K::Lt | K::Leq | K::Gt | K::Geq => mapsto(vec![n(), n()], b()),
        K::Plus | K::Times => nassoc(n(), n()),
        K::Minus | K::Divide => mapsto(vec![n(), n()], n()),
        K::UnaryMinus => mapsto(vec![n()], n()),
        K::One | K::Zero => mapsto(vec![], n()),
        _ => return None,
    })
}

impl Checker<'_> {
    fn fresh(&mut self, numeric: bool) -> Ty {
        self.metas.push(Meta {
            link: None,
            numeric,
        });
        Ty::Meta(self.metas.len() - 1)
    }

    fn walk(&self, t: &Ty) -> Ty {
        let mut t = t.clone();
        while let Ty::Meta(i) = t {
            match &self.metas[i].link {
                Some(next) => t = next.clone(),
                None => break,
            }
        }
        t
    }

    fn zonk(&self, t: &Ty) -> Ty {
        match self.walk(t) {
            Ty::Con(n, args) => Ty::Con(n, args.iter().map(|a| self.zonk(a)).collect()),
            m => m,
        }
    }

    fn occurs(&self, i: usize, t: &Ty) -> bool {
        match self.walk(t) {
            Ty::Meta(j) => i == j,
            Ty::Con(_, args) => args.iter().any(|a| self.occurs(i, a)),
        }
    }

    fn unify(&mut self, a: &Ty, b: &Ty) -> bool {
        match (self.walk(a), self.walk(b)) {
            (Ty::Meta(i), Ty::Meta(j)) => {
                if i != j {
                    let numeric = self.metas[i].numeric;
                    self.metas[j].numeric |= numeric;
                    self.metas[i].link = Some(Ty::Meta(j));
                }
                true
            }
            (Ty::Meta(i), con @ Ty::Con(..)) | (con @ Ty::Con(..), Ty::Meta(i)) => {
                let Ty::Con(n, args) = &con else {
                    unreachable!()
                };
                if (self.metas[i].numeric && !is_numeric(n, args)) || self.occurs(i, &con) {
                    return false;
                }
                self.metas[i].link = Some(con);
                true
            }
            (Ty::Con(n1, a1), Ty::Con(n2, a2)) => {
                n1 == n2 && a1.len() == a2.len() && a1.iter().zip(&a2).all(|(x, y)| self.unify(x, y))
            }
        }
    }

    fn expect(&mut self, expected: &Ty, found: &Ty, path: &TermPath) -> Result<(), SortError> {
        if self.unify(expected, found) {
            return Ok(());
        }
        Err(SortError::SortMismatch {
            path: path.clone(),
            expected: self.describe(expected),
            found: self.describe(found),
        })
    }

    fn describe(&self, t: &Ty) -> String {
        let z = self.zonk(t);
        match z {
            Ty::Meta(i) if self.metas[i].numeric => "Int or Real".to_owned(),
            _ => z.to_string(),
        }
    }

    fn to_sort(&self, t: &Ty) -> Option<Sort> {
        match self.walk(t) {
            Ty::Meta(i) if self.metas[i].numeric => self
                .table
                .profile
                .sort_of(LiteralKind::Integer)
                .cloned()
                .or(Some(Sort::int())),
            Ty::Meta(_) => None,
            Ty::Con(n, args) if args.is_empty() => Some(Sort::named(n)),
            Ty::Con(n, args) => Some(Sort::parametric(
                n,
                args.iter().map(|a| self.to_sort(a)).collect::<Option<_>>()?,
            )),
        }
    }

    fn instantiate(&mut self, r: &SortRef, vars: &mut BTreeMap<String, Ty>) -> Ty {
        match r {
            SortRef::Sort(s) => Ty::of(s),
            SortRef::Var(v) | SortRef::NumericVar(v) => {
                if let Some(t) = vars.get(v) {
                    return t.clone();
                }
                let t = self.fresh(matches!(r, SortRef::NumericVar(_)));
                vars.insert(v.clone(), t.clone());
                t
            }
        }
    }

    fn signature(&self, sym: &Symbol, argc: usize) -> Option<StsShape> {
        if sym.origin() == Origin::SmtTheory {
            if let Some((args, result)) = self.table.declared_funs.get(sym.name()) {
                return Some(mapsto(
                    args.iter().cloned().map(sr).collect(),
                    sr(result.clone()),
                ));
            }
        }
        if let Some(sig) = self.table.sts.get(sym) {
            return Some(sig.shape.clone());
        }
        builtin(sym, argc)
    }

    fn check(
        &mut self,
        t: &Term,
        path: &TermPath,
        env: &mut Vec<(String, Ty)>,
    ) -> Result<Ty, SortError> {
        match t {
            Term::Var(v) => {
                if let Some((_, ty)) = env.iter().rev().find(|(n, _)| n == v) {
                    return Ok(ty.clone());
                }
                if let Some(s) = self.table.var_sorts.get(v) {
                    return Ok(Ty::of(s));
                }
                match self.table.declared_funs.get(v) {
                    Some((args, r)) if args.is_empty() => Ok(Ty::of(r)),
                    _ => Err(SortError::UnsortedFreeVariable {
                        name: v.clone(),
                        path: path.clone(),
                    }),
                }
            }
            Term::Lit(l) => match self.table.profile.sort_of(l.kind()) {
                Some(s) => Ok(Ty::of(s)),
                None => Err(SortError::Unsupported {
                    what: format!("{} literal", l.kind().as_str()),
                    path: path.clone(),
                }),
            },
            Term::Sym(s) => self.apply(s, &[], path, env),
            Term::Apply { head, args } => match &**head {
                Term::Sym(s) => self.apply(s, args, path, env),
                _ => Err(SortError::Unsupported {
                    what: "application of a non-symbol".into(),
                    path: path.clone(),
                }),
            },
            Term::Bind {
                binder,
                vars,
                condition,
                body,
            } => {
                let quantifier = binder.is_smt("forall")
                    || binder.is_smt("exists")
                    || matches!(binder.known(), Some(K::Forall | K::Exists | K::ExistsUnique));
                let optimizer = binder.known().filter(|k| k.takes_condition());
                if !quantifier && optimizer.is_none() {
                    return Err(SortError::Unsupported {
                        what: format!("binder `{}`", binder.key()),
                        path: path.clone(),
                    });
                }
                let mark = env.len();
                for v in vars {
                    let ty = match v.sort.as_ref().or_else(|| self.table.var_sorts.get(&v.name)) {
                        Some(s) => Ty::of(s),
                        None => self.fresh(false),
                    };
                    env.push((v.name.clone(), ty));
                }
                let result = self.bind_body(binder, optimizer, condition, body, path, env);
                let var_ty = env.get(mark).map(|(_, t)| t.clone());
                env.truncate(mark);
                let body_ty = result?;
                match optimizer {
                    None => Ok(Ty::named("Bool")),
                    Some(K::MaxBinder) => Ok(body_ty),
                    Some(k) if vars.len() != 1 => Err(SortError::Unsupported {
                        what: format!("`{}` over several variables", k.symbol().key()),
                        path: path.clone(),
                    }),
                    Some(K::Argmax) => Ok(Ty::Con("Set".into(), vec![var_ty.expect("one var")])),
                    Some(_) => Ok(var_ty.expect("one var")),
                }
            }
            Term::Attributed { base, .. } => self.check(base, &path.child(1), env),
            Term::Error { .. } | Term::Foreign { .. } => Err(SortError::Unsupported {
                what: "error or foreign objects".into(),
                path: path.clone(),
            }),
        }
    }

    fn bind_body(
        &mut self,
        binder: &Symbol,
        optimizer: Option<K>,
        condition: &Option<Box<Term>>,
        body: &Term,
        path: &TermPath,
        env: &mut Vec<(String, Ty)>,
    ) -> Result<Ty, SortError> {
        if let Some(c) = condition {
            if optimizer.is_none() {
                return Err(SortError::Unsupported {
                    what: format!("a condition on `{}`", binder.key()),
                    path: path.clone(),
                });
            }
            let cpath = path.child(3);
            let ty = self.check(c, &cpath, env)?;
            self.expect(&Ty::named("Bool"), &ty, &cpath)?;
        }
        let bpath = path.child(2);
        let ty = self.check(body, &bpath, env)?;
        let want = if optimizer.is_some() {
            self.fresh(true)
        } else {
            Ty::named("Bool")
        };
        self.expect(&want, &ty, &bpath)?;
        Ok(ty)
    }

    fn apply(
        &mut self,
        sym: &Symbol,
        args: &[Term],
        path: &TermPath,
        env: &mut Vec<(String, Ty)>,
    ) -> Result<Ty, SortError> {
        let shape = self
            .signature(sym, args.len())
            .ok_or_else(|| SortError::UnknownSymbolSort {
                symbol: sym.key(),
                path: path.clone(),
            })?;
        let arity = |expected: String| SortError::ArityMismatch {
            symbol: sym.key(),
            expected,
            found: args.len(),
            path: path.clone(),
        };
        let mut vars = BTreeMap::new();
        let (params, result) = match &shape {
            StsShape::Mapsto { args: ps, result } => {
                if ps.len() != args.len() {
                    return Err(arity(ps.len().to_string()));
                }
                let params: Vec<Ty> = ps.iter().map(|p| self.instantiate(p, &mut vars)).collect();
                (params, result)
            }
            StsShape::NAssoc { element, result } => {
                if args.len() < 2 {
                    return Err(arity("at least 2".into()));
                }
                let e = self.instantiate(element, &mut vars);
                (vec![e; args.len()], result)
            }
        };
        let result = self.instantiate(result, &mut vars);
        for (i, (a, p)) in args.iter().zip(&params).enumerate() {
            let apath = path.child(i + 1);
            let ty = self.check(a, &apath, env)?;
            self.expect(p, &ty, &apath)?;
        }
        Ok(result)
    }
}
