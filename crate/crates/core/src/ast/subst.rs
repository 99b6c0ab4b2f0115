//! Free variables, fresh names and capture-avoiding simultaneous substitution.

use std::collections::{BTreeMap, BTreeSet};

use super::{AstError, BoundVar, Term};

/// Separator between a variable stem and its freshness counter (`x!1`).
pub const FRESH_SEPARATOR: char = '!';

/// Variables occurring free in `t`. A bind's condition and body are both in
/// the scope of its bound variables.
pub fn free_variables(t: &Term) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    collect_free(t, &mut Vec::new(), &mut out);
    out
}

fn collect_free<'a>(t: &'a Term, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
    match t {
        Term::Var(v) => {
            if !bound.contains(&v.as_str()) {
                out.insert(v.clone());
            }
        }
        Term::Sym(_) | Term::Lit(_) | Term::Foreign { .. } => {}
        Term::Apply { head, args } => {
            collect_free(head, bound, out);
            for a in args {
                collect_free(a, bound, out);
            }
        }
        Term::Bind {
            vars,
            condition,
            body,
            ..
        } => {
            let mark = bound.len();
            bound.extend(vars.iter().map(|v| v.name.as_str()));
            if let Some(c) = condition {
                collect_free(c, bound, out);
            }
            collect_free(body, bound, out);
            bound.truncate(mark);
        }
        Term::Attributed { pairs, base } => {
            for (_, v) in pairs {
                collect_free(v, bound, out);
            }
            collect_free(base, bound, out);
        }
        Term::Error { args, .. } => {
            for a in args {
                collect_free(a, bound, out);
            }
        }
    }
}

/// Every variable name in `t`, free or bound.
pub fn all_names(t: &Term) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    t.for_each_subterm(&mut |s| match s {
        Term::Var(v) => {
            out.insert(v.clone());
        }
        Term::Bind { vars, .. } => out.extend(vars.iter().map(|v| v.name.clone())),
        _ => {}
    });
    out
}

fn stem(name: &str) -> &str {
    match name.rsplit_once(FRESH_SEPARATOR) {
        Some((s, digits))
            if !s.is_empty() && !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) =>
        {
            s
        }
        _ => name,
    }
}

/// `stem!k` for the least `k >= 1` not in `avoid`.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let stem = stem(base);
    (1u64..)
        .map(|k| format!("{stem}{FRESH_SEPARATOR}{k}"))
        .find(|c| !avoid.contains(c))
        .expect("unbounded counter")
}

/// Replaces free occurrences of each bound name at once, reading every
/// replacement from the original term. Bound variables that would capture a
/// free variable of a replacement are renamed fresh.
pub fn substitute_simultaneous(t: &Term, bindings: &[(String, Term)]) -> Result<Term, AstError> {
    let mut map = BTreeMap::new();
    for (name, term) in bindings {
        if map.insert(name.clone(), term.clone()).is_some() {
            return Err(AstError::DuplicateBindingName(name.clone()));
        }
    }
    let mut avoid = all_names(t);
    for r in map.values() {
        avoid.extend(all_names(r));
    }
    Ok(subst(t, &map, &mut avoid))
}

/// Replaces the free occurrences of one variable.
pub fn substitute(t: &Term, name: &str, replacement: &Term) -> Term {
    substitute_simultaneous(t, &[(name.to_owned(), replacement.clone())])
        .expect("single binding is never duplicated")
}

fn subst(t: &Term, map: &BTreeMap<String, Term>, avoid: &mut BTreeSet<String>) -> Term {
    if map.is_empty() {
        return t.clone();
    }
    match t {
        Term::Var(v) => map.get(v).cloned().unwrap_or_else(|| t.clone()),
        Term::Sym(_) | Term::Lit(_) | Term::Foreign { .. } => t.clone(),
        Term::Apply { head, args } => Term::apply(
            subst(head, map, avoid),
            args.iter().map(|a| subst(a, map, avoid)).collect(),
        ),
        Term::Attributed { pairs, base } => Term::Attributed {
            pairs: pairs
                .iter()
                .map(|(k, v)| (k.clone(), subst(v, map, avoid)))
                .collect(),
            base: Box::new(subst(base, map, avoid)),
        },
        Term::Error { symbol, args } => Term::Error {
            symbol: symbol.clone(),
            args: args.iter().map(|a| subst(a, map, avoid)).collect(),
        },
        Term::Bind {
            binder,
            vars,
            condition,
            body,
        } => {
            let mut scope_free = free_variables(body);
            if let Some(c) = condition {
                scope_free.extend(free_variables(c));
            }
            let mut inner: BTreeMap<String, Term> = map
                .iter()
                .filter(|(k, _)| {
                    scope_free.contains(*k) && !vars.iter().any(|v| &v.name == *k)
                })
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            if inner.is_empty() {
                return t.clone();
            }
            let incoming: BTreeSet<String> = inner.values().flat_map(free_variables).collect();
            let mut new_vars = Vec::with_capacity(vars.len());
            for (i, v) in vars.iter().enumerate() {
                if !incoming.contains(&v.name) {
                    new_vars.push(v.clone());
                    continue;
                }
                let fresh = fresh_name(&v.name, avoid);
                avoid.insert(fresh.clone());
                let shadowed = vars[i + 1..].iter().any(|w| w.name == v.name);
                if !shadowed {
                    inner.insert(v.name.clone(), Term::Var(fresh.clone()));
                }
                new_vars.push(BoundVar {
                    name: fresh,
                    sort: v.sort.clone(),
                });
            }
            Term::Bind {
                binder: binder.clone(),
                vars: new_vars,
                condition: condition
                    .as_ref()
                    .map(|c| Box::new(subst(c, &inner, avoid))),
                body: Box::new(subst(body, &inner, avoid)),
            }
        }
    }
}

/// Renames every bound variable that a later one of the same name shadows,
/// so that the list has pairwise distinct names and the same meaning as
/// nested unary binders.
pub fn normalize_shadowing(vars: Vec<BoundVar>, scope: &[&Term]) -> Vec<BoundVar> {
    let mut avoid: BTreeSet<String> = scope.iter().flat_map(|t| all_names(t)).collect();
    avoid.extend(vars.iter().map(|v| v.name.clone()));
    let names: Vec<String> = vars.iter().map(|v| v.name.clone()).collect();
    vars.into_iter()
        .enumerate()
        .map(|(i, mut v)| {
            if names[i + 1..].contains(&v.name) {
                let fresh = fresh_name(&v.name, &avoid);
                avoid.insert(fresh.clone());
                v.name = fresh;
            }
            v
        })
        .collect()
}
