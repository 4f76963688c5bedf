//! Satisfaction, the Gelfond–Lifschitz reduct and answer-set checking.

use std::collections::{BTreeMap, BTreeSet};

use super::ground::ground;
use super::{AnswerSet, Atom, CountExpr, Program, Rule, Term};

/// Extends `binding` so that `pattern` becomes `fact`, if possible.
pub(crate) fn unify<'a>(
    pattern: &'a Atom,
    fact: &'a Atom,
    binding: &mut BTreeMap<&'a str, &'a str>,
) -> bool {
    if pattern.predicate != fact.predicate || pattern.args.len() != fact.args.len() {
        return false;
    }
    let mut added = Vec::new();
    for (p, f) in pattern.args.iter().zip(&fact.args) {
        let Term::Const(f) = f else {
            return false;
        };
        let ok = match p {
            Term::Const(c) => c == f,
            Term::Var(v) => match binding.get(v.as_str()) {
                Some(b) => *b == f,
                None => {
                    binding.insert(v, f);
                    added.push(v.as_str());
                    true
                }
            },
        };
        if !ok {
            for v in added {
                binding.remove(v);
            }
            return false;
        }
    }
    true
}

fn with_predicate<'a>(i: &'a BTreeSet<Atom>, pred: &'a str) -> impl Iterator<Item = &'a Atom> {
    i.range(Atom::new(pred, Vec::new())..)
        .take_while(move |a| a.predicate == pred)
}

/// The distinct ground instances of the count head that are in `i` and
/// whose conditions hold in `i`.
pub(crate) fn count_instances(i: &BTreeSet<Atom>, c: &CountExpr) -> BTreeSet<Atom> {
    let positives: Vec<&Atom> = std::iter::once(&c.head)
        .chain(c.conditions.iter().filter(|l| l.positive).map(|l| &l.atom))
        .collect();
    let negatives: Vec<&Atom> = c
        .conditions
        .iter()
        .filter(|l| !l.positive)
        .map(|l| &l.atom)
        .collect();
    let mut out = BTreeSet::new();
    let mut binding = BTreeMap::new();
    join(i, &positives, &mut binding, &mut |b| {
        let subst = |a: &Atom| super::ground::apply(a, b);
        if negatives.iter().all(|n| {
            let g = subst(n);
            !g.is_ground() || !i.contains(&g)
        }) {
            out.insert(subst(&c.head));
        }
    });
    out
}

fn join<'a>(
    i: &'a BTreeSet<Atom>,
    atoms: &[&'a Atom],
    binding: &mut BTreeMap<&'a str, &'a str>,
    found: &mut dyn FnMut(&BTreeMap<&'a str, &'a str>),
) {
    let Some((first, rest)) = atoms.split_first() else {
        found(binding);
        return;
    };
    for fact in with_predicate(i, &first.predicate) {
        let before = binding.clone();
        if unify(first, fact, binding) {
            join(i, rest, binding, found);
        }
        *binding = before;
    }
}

/// Whether `N ⋈ u` holds for the count expression, `N` being the number of
/// distinct true ground head instances whose conditions hold in `i`.
pub fn count_holds(i: &AnswerSet, c: &CountExpr) -> bool {
    c.op.holds(count_instances(&i.atoms, c).len(), c.bound)
}

fn body_holds(i: &AnswerSet, r: &Rule) -> bool {
    r.pos.iter().all(|a| i.contains(a))
        && !r.neg.iter().any(|a| i.contains(a))
        && r.counts.iter().all(|c| count_holds(i, c))
}

/// `I ⊨ ρ` for a ground rule: the head meets `I` whenever the body holds.
pub fn satisfies(i: &AnswerSet, r: &Rule) -> bool {
    !body_holds(i, r) || r.head.iter().any(|a| i.contains(a))
}

/// `Π^I`. Rules whose negative body meets `I`, or with a count expression
/// that fails in `I`, are dropped; the rest keep head and positive body.
pub fn gl_reduct(p: &Program, i: &AnswerSet) -> Program {
    let rules = p
        .rules
        .iter()
        .filter(|r| !r.neg.iter().any(|a| i.contains(a)))
        .filter(|r| r.counts.iter().all(|c| count_holds(i, c)))
        .map(|r| Rule {
            head: r.head.clone(),
            pos: r.pos.clone(),
            neg: Vec::new(),
            counts: Vec::new(),
        })
        .collect();
    Program {
        rules,
        facts: p.facts.clone(),
    }
}

/// Whether `i` satisfies a positive program (facts included).
fn is_model_of_positive(p: &Program, i: &BTreeSet<Atom>) -> bool {
    p.facts.iter().all(|f| i.contains(f))
        && p.rules
            .iter()
            .all(|r| !r.pos.iter().all(|a| i.contains(a)) || r.head.iter().any(|a| i.contains(a)))
}

/// Least model of the definite part; constraints are ignored.
fn least_model(p: &Program) -> BTreeSet<Atom> {
    let mut m: BTreeSet<Atom> = p.facts.iter().cloned().collect();
    loop {
        let mut changed = false;
        for r in &p.rules {
            if let [h] = r.head.as_slice() {
                if !m.contains(h) && r.pos.iter().all(|a| m.contains(a)) {
                    m.insert(h.clone());
                    changed = true;
                }
            }
        }
        if !changed {
            return m;
        }
    }
}

/// Whether some proper subset of `i` is a model of the positive program.
fn has_smaller_model(p: &Program, i: &BTreeSet<Atom>) -> bool {
    if p.rules.iter().all(|r| r.head.len() <= 1) {
        // Every model contains the least model, which satisfies the
        // constraints whenever a superset does.
        return least_model(p) != *i;
    }
    let atoms: Vec<&Atom> = i.iter().collect();
    let n = atoms.len();
    assert!(n < 64, "minimality check over {n} atoms");
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    (0..full).any(|mask| {
        let j: BTreeSet<Atom> = atoms
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, a)| (*a).clone())
            .collect();
        is_model_of_positive(p, &j)
    })
}

pub(crate) fn is_answer_set_ground(p: &Program, i: &AnswerSet) -> bool {
    let reduct = gl_reduct(p, i);
    is_model_of_positive(&reduct, &i.atoms) && !has_smaller_model(&reduct, &i.atoms)
}

/// Whether `i` is a subset-minimal model of `Gr(p)^i`. Unsafe programs
/// have no answer sets.
pub fn is_answer_set(p: &Program, i: &AnswerSet) -> bool {
    if !i.atoms.iter().all(Atom::is_ground) {
        return false;
    }
    if p.is_ground() {
        return is_answer_set_ground(p, i);
    }
    match ground(p) {
        Ok(g) => is_answer_set_ground(&g, i),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asp::{CmpOp, Literal};

    fn a(p: &str) -> Atom {
        Atom::ground(p, Vec::<String>::new())
    }

    fn set(atoms: &[&str]) -> AnswerSet {
        AnswerSet::new(atoms.iter().map(|p| a(p)))
    }

    fn rule(head: &[&str], pos: &[&str], neg: &[&str]) -> Rule {
        Rule {
            head: head.iter().map(|p| a(p)).collect(),
            pos: pos.iter().map(|p| a(p)).collect(),
            neg: neg.iter().map(|p| a(p)).collect(),
            counts: Vec::new(),
        }
    }

    fn program(rules: Vec<Rule>) -> Program {
        Program {
            rules,
            ..Default::default()
        }
    }

    #[test]
    fn constraint_with_false_body_is_satisfied() {
        assert!(satisfies(&set(&[]), &rule(&[], &["p"], &[])));
        assert!(!satisfies(&set(&["p"]), &rule(&[], &["p"], &[])));
    }

    #[test]
    fn disjunctive_head() {
        assert!(satisfies(
            &set(&["c", "a"]),
            &rule(&["a", "b"], &["c"], &[])
        ));
        assert!(!satisfies(&set(&["c"]), &rule(&["a", "b"], &["c"], &[])));
    }

    #[test]
    fn count_over_instances() {
        let i = AnswerSet::new([
            Atom::ground("r", ["a", "b"]),
            Atom::ground("A", ["b"]),
            Atom::ground("r", ["a", "c"]),
        ]);
        let c = CountExpr {
            head: Atom::new("r", vec![Term::constant("a"), Term::var("Y")]),
            conditions: vec![Literal::pos(Atom::new("A", vec![Term::var("Y")]))],
            op: CmpOp::Gt,
            bound: 0,
        };
        assert_eq!(count_instances(&i.atoms, &c).len(), 1);
        assert!(count_holds(&i, &c));
        let negated = CountExpr {
            conditions: vec![Literal::neg(Atom::new("A", vec![Term::var("Y")]))],
            op: CmpOp::Eq,
            bound: 1,
            ..c
        };
        assert!(count_holds(&i, &negated));
    }

    #[test]
    fn reduct() {
        let p = program(vec![rule(&["a"], &[], &["b"])]);
        assert_eq!(
            gl_reduct(&p, &set(&["a"])),
            program(vec![rule(&["a"], &[], &[])])
        );
        assert_eq!(gl_reduct(&p, &set(&["b"])), program(vec![]));
    }

    #[test]
    fn even_loop() {
        let p = program(vec![rule(&["a"], &[], &["b"]), rule(&["b"], &[], &["a"])]);
        assert!(is_answer_set(&p, &set(&["a"])));
        assert!(is_answer_set(&p, &set(&["b"])));
        assert!(!is_answer_set(&p, &set(&[])));
        assert!(!is_answer_set(&p, &set(&["a", "b"])));
    }

    #[test]
    fn disjunction_is_minimal() {
        let p = program(vec![rule(&["a", "b"], &[], &[])]);
        assert!(is_answer_set(&p, &set(&["a"])));
        assert!(!is_answer_set(&p, &set(&["a", "b"])));
    }

    #[test]
    fn unfounded_atom() {
        let p = program(vec![rule(&["a"], &["a"], &[])]);
        assert!(!is_answer_set(&p, &set(&["a"])));
        assert!(is_answer_set(&p, &set(&[])));
    }

    #[test]
    fn facts_must_be_included() {
        let mut p = program(vec![]);
        p.add_fact(a("f"));
        assert!(!is_answer_set(&p, &set(&[])));
        assert!(is_answer_set(&p, &set(&["f"])));
    }
}
