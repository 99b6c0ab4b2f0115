use super::Term;

/// True iff `a` and `b` differ at most by a consistent renaming of bound
/// variables. Bound-variable sorts and bind conditions must match exactly.
pub fn alpha_equal(a: &Term, b: &Term) -> bool {
    eq(a, b, &mut Vec::new(), &mut Vec::new())
}

// Position of the innermost binding of `name`, counted from the bottom.
fn lookup(env: &[&str], name: &str) -> Option<usize> {
    env.iter().rposition(|n| *n == name)
}

fn eq<'a>(a: &'a Term, b: &'a Term, ea: &mut Vec<&'a str>, eb: &mut Vec<&'a str>) -> bool {
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => match (lookup(ea, x), lookup(eb, y)) {
            (Some(i), Some(j)) => i == j,
            (None, None) => x == y,
            _ => false,
        },
        (Term::Sym(x), Term::Sym(y)) => x == y,
        (Term::Lit(x), Term::Lit(y)) => x == y,
        (
            Term::Foreign {
                encoding: e1,
                blob: b1,
            },
            Term::Foreign {
                encoding: e2,
                blob: b2,
            },
        ) => e1 == e2 && b1 == b2,
        (Term::Apply { head: h1, args: a1 }, Term::Apply { head: h2, args: a2 }) => {
            a1.len() == a2.len()
                && eq(h1, h2, ea, eb)
                && a1.iter().zip(a2).all(|(x, y)| eq(x, y, ea, eb))
        }
        (
            Term::Error {
                symbol: s1,
                args: a1,
            },
            Term::Error {
                symbol: s2,
                args: a2,
            },
        ) => s1 == s2 && a1.len() == a2.len() && a1.iter().zip(a2).all(|(x, y)| eq(x, y, ea, eb)),
        (
            Term::Attributed {
                pairs: p1,
                base: b1,
            },
            Term::Attributed {
                pairs: p2,
                base: b2,
            },
        ) => {
            p1.len() == p2.len()
                && p1
                    .iter()
                    .zip(p2)
                    .all(|((k1, v1), (k2, v2))| k1 == k2 && eq(v1, v2, ea, eb))
                && eq(b1, b2, ea, eb)
        }
        (
            Term::Bind {
                binder: s1,
                vars: v1,
                condition: c1,
                body: b1,
            },
            Term::Bind {
                binder: s2,
                vars: v2,
                condition: c2,
                body: b2,
            },
        ) => {
            if s1 != s2
                || v1.len() != v2.len()
                || v1.iter().zip(v2).any(|(x, y)| x.sort != y.sort)
                || c1.is_some() != c2.is_some()
            {
                return false;
            }
            let (ma, mb) = (ea.len(), eb.len());
            ea.extend(v1.iter().map(|v| v.name.as_str()));
            eb.extend(v2.iter().map(|v| v.name.as_str()));
            let ok = match (c1, c2) {
                (Some(x), Some(y)) => eq(x, y, ea, eb),
                _ => true,
            } && eq(b1, b2, ea, eb);
            ea.truncate(ma);
            eb.truncate(mb);
            ok
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{BoundVar, KnownSymbol as K, Symbol};

    fn p(v: &str) -> Term {
        Term::app(Symbol::from_cd("test", "P").unwrap(), vec![Term::var(v)])
    }

    #[test]
    fn pure_renaming_is_equal() {
        let a = Term::bind(K::Forall, vec![BoundVar::new("x")], p("x"));
        let b = Term::bind(K::Forall, vec![BoundVar::new("y")], p("y"));
        assert!(alpha_equal(&a, &b));
    }

    #[test]
    fn different_binders_differ() {
        let a = Term::bind(K::Forall, vec![BoundVar::new("x")], p("x"));
        let b = Term::bind(K::Exists, vec![BoundVar::new("x")], p("x"));
        assert!(!alpha_equal(&a, &b));
    }

    #[test]
    fn free_versus_bound_differ() {
        let a = Term::bind(K::Forall, vec![BoundVar::new("x")], p("y"));
        let b = Term::bind(K::Forall, vec![BoundVar::new("y")], p("y"));
        assert!(!alpha_equal(&a, &b));
    }

    #[test]
    fn shadowing_resolves_to_innermost() {
        // forall x, x. P(x)  ~  forall a, b. P(b)
        let a = Term::bind(K::Forall, vec![BoundVar::new("x"), BoundVar::new("x")], p("x"));
        let b = Term::bind(K::Forall, vec![BoundVar::new("a"), BoundVar::new("b")], p("b"));
        let c = Term::bind(K::Forall, vec![BoundVar::new("a"), BoundVar::new("b")], p("a"));
        assert!(alpha_equal(&a, &b));
        assert!(!alpha_equal(&a, &c));
    }
}
