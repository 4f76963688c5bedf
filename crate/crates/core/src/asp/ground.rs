//! Grounding by full substitution over the program's constants.

use std::collections::{BTreeMap, BTreeSet};

use super::{Atom, CountExpr, Literal, Program, Rule, Term};
use crate::Result;

/// `U_Π`: every constant occurring in the program, in the constant order.
pub fn universe(p: &Program) -> BTreeSet<String> {
    let mut u = BTreeSet::new();
    let mut add = |a: &Atom| {
        for t in &a.args {
            if let Term::Const(c) = t {
                u.insert(c.clone());
            }
        }
    };
    p.facts.iter().for_each(&mut add);
    for r in &p.rules {
        r.head.iter().chain(&r.pos).chain(&r.neg).for_each(&mut add);
        for c in &r.counts {
            add(&c.head);
            c.conditions.iter().for_each(|l| add(&l.atom));
        }
    }
    u
}

pub(crate) type Subst<'a> = BTreeMap<&'a str, &'a str>;

pub(crate) fn apply(a: &Atom, s: &Subst) -> Atom {
    Atom {
        predicate: a.predicate.clone(),
        args: a
            .args
            .iter()
            .map(|t| match t {
                Term::Var(v) => match s.get(v.as_str()) {
                    Some(c) => Term::Const(c.to_string()),
                    None => t.clone(),
                },
                Term::Const(_) => t.clone(),
            })
            .collect(),
    }
}

pub(crate) fn apply_rule(r: &Rule, s: &Subst) -> Rule {
    Rule {
        head: r.head.iter().map(|a| apply(a, s)).collect(),
        pos: r.pos.iter().map(|a| apply(a, s)).collect(),
        neg: r.neg.iter().map(|a| apply(a, s)).collect(),
        counts: r
            .counts
            .iter()
            .map(|c| CountExpr {
                head: apply(&c.head, s),
                conditions: c
                    .conditions
                    .iter()
                    .map(|l| Literal {
                        atom: apply(&l.atom, s),
                        positive: l.positive,
                    })
                    .collect(),
                op: c.op,
                bound: c.bound,
            })
            .collect(),
    }
}

/// `Gr(Π)`: every rule instantiated with every substitution of its outer
/// variables by constants of `U_Π`. Variables local to a count expression
/// are left in place; they range over the expression's own instances.
/// Rules come out in program order, instances in lexicographic order of
/// their substitutions.
pub fn ground(p: &Program) -> Result<Program> {
    p.check_safety()?;
    let u: Vec<String> = universe(p).into_iter().collect();
    let mut out = Program {
        rules: Vec::new(),
        facts: p.facts.clone(),
    };
    for r in &p.rules {
        let vars: Vec<&str> = r.outer_vars().into_iter().collect();
        if vars.is_empty() {
            out.rules.push(r.clone());
            continue;
        }
        if u.is_empty() {
            continue;
        }
        let mut idx = vec![0usize; vars.len()];
        'odometer: loop {
            let s: Subst = vars
                .iter()
                .zip(&idx)
                .map(|(v, &i)| (*v, u[i].as_str()))
                .collect();
            out.rules.push(apply_rule(r, &s));
            // Last variable fastest.
            let mut k = vars.len();
            loop {
                if k == 0 {
                    break 'odometer;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < u.len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    Ok(out)
}
