//! Compilation of a normalized knowledge base into a guess-and-check answer
//! set program, and projection of answer sets back to fact sets.
//!
//! `Π_gen` guesses, for every individual, concept name and role name,
//! whether the fact holds (`c_A` / `nc_A`, `r_r` / `nr_r`); `Π_chk` rules out
//! guesses violating a GCI, a role axiom or the ABox. The `nc_` and `nr_`
//! predicates carry no negation semantics of their own; the clash
//! constraints make them behave as complements.

use std::collections::BTreeSet;

use crate::asp::{Atom, CmpOp, CountExpr, Literal, Program, Rule, Term};
use crate::model::{ABoxRepresentation, Axiom, Concept, Fact, Role, Vocabulary};
use crate::normalize::{is_normalized_disjunct, NormalizedKb};
use crate::{Error, Result};

/// Predicate names of the translation. Concept names map to `c_<name>` and
/// `nc_<name>`, role names to `r_<name>` and `nr_<name>`, nominal guards to
/// `o_<name>`; the prefixes keep the mapping injective and disjoint from
/// `top` and the false marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateMangling {
    vocabulary: Vocabulary,
}

pub const TOP: &str = "top";

/// A zero-ary atom that is asserted and forbidden at once, making the
/// program inconsistent.
pub const FALSE_MARKER: &str = "bm_false";

impl PredicateMangling {
    pub fn new(vocabulary: Vocabulary) -> Self {
        PredicateMangling { vocabulary }
    }

    pub fn concept_pos(&self, a: &str) -> String {
        format!("c_{a}")
    }

    pub fn concept_neg(&self, a: &str) -> String {
        format!("nc_{a}")
    }

    pub fn role_pos(&self, r: &str) -> String {
        format!("r_{r}")
    }

    pub fn role_neg(&self, r: &str) -> String {
        format!("nr_{r}")
    }

    pub fn nominal_guard(&self, a: &str) -> String {
        format!("o_{a}")
    }

    /// The fact a positive concept or role atom stands for.
    pub fn decode(&self, atom: &Atom) -> Option<Fact> {
        let consts: Vec<&str> = atom
            .args
            .iter()
            .map(|t| match t {
                Term::Const(c) => Some(c.as_str()),
                Term::Var(_) => None,
            })
            .collect::<Option<_>>()?;
        if let (Some(a), [x]) = (atom.predicate.strip_prefix("c_"), consts.as_slice()) {
            if self.vocabulary.concepts.contains(a) {
                return Some(Fact::concept(a, *x));
            }
        }
        if let (Some(r), [x, y]) = (atom.predicate.strip_prefix("r_"), consts.as_slice()) {
            if self.vocabulary.roles.contains(r) {
                return Some(Fact::role(r, *x, *y));
            }
        }
        None
    }
}

fn var(v: &str) -> Term {
    Term::var(v)
}

fn unsupported_universal(ax: &Axiom) -> Error {
    Error::Unsupported {
        construct: "universal role".into(),
        axiom: ax.to_string(),
    }
}

/// `ar(r, x, y)`: `r_r(x, y)` for a role name, `r_s(y, x)` for `s⁻`.
pub fn ar(m: &PredicateMangling, role: &Role, x: Term, y: Term) -> Result<Atom> {
    match role {
        Role::Atomic(r) => Ok(Atom::new(m.role_pos(r), vec![x, y])),
        Role::Inverse(s) => Ok(Atom::new(m.role_pos(s), vec![y, x])),
        Role::Universal => Err(Error::Unsupported {
            construct: "universal role".into(),
            axiom: "U".into(),
        }),
    }
}

/// The guess part: a complementary guess pair per concept and role name and
/// a `top` fact per individual.
pub fn pi_gen(vocab: &Vocabulary, m: &PredicateMangling) -> Program {
    let mut p = Program::new();
    let x = || var("X");
    let y = || var("Y");
    for a in &vocab.individuals {
        p.add_fact(Atom::ground(TOP, [a.as_str()]));
    }
    for a in &vocab.concepts {
        let (c, nc) = (m.concept_pos(a), m.concept_neg(a));
        for (h, n) in [(&c, &nc), (&nc, &c)] {
            p.add_rule(Rule {
                head: vec![Atom::new(h.clone(), vec![x()])],
                pos: vec![Atom::new(TOP, vec![x()])],
                neg: vec![Atom::new(n.clone(), vec![x()])],
                counts: Vec::new(),
            });
        }
    }
    for r in &vocab.roles {
        let (rp, rn) = (m.role_pos(r), m.role_neg(r));
        for (h, n) in [(&rp, &rn), (&rn, &rp)] {
            p.add_rule(Rule {
                head: vec![Atom::new(h.clone(), vec![x(), y()])],
                pos: vec![Atom::new(TOP, vec![x()]), Atom::new(TOP, vec![y()])],
                neg: vec![Atom::new(n.clone(), vec![x(), y()])],
                counts: Vec::new(),
            });
        }
    }
    p
}

/// Body elements and side facts for one disjunct.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Translated {
    pub pos: Vec<Atom>,
    pub neg: Vec<Atom>,
    pub counts: Vec<CountExpr>,
    pub facts: Vec<Atom>,
}

/// `trans(C)` for a normalized disjunct over the element variable `x`.
/// `y` names the successor variable this disjunct may use; distinct
/// disjuncts of one GCI must get distinct `y`.
pub fn trans_concept(m: &PredicateMangling, c: &Concept, x: &str, y: &str) -> Result<Translated> {
    if !is_normalized_disjunct(c) {
        return Err(Error::NotNormalized(format!("disjunct `{c}`")));
    }
    let mut t = Translated::default();
    let xv = || var(x);
    let yv = || var(y);
    // The filler's atom over `y` and whether the filler is positive.
    let filler = |d: &Concept| -> (Atom, bool) {
        match d {
            Concept::Name(a) => (Atom::new(m.concept_pos(a), vec![yv()]), true),
            Concept::Not(inner) => match &**inner {
                Concept::Name(a) => (Atom::new(m.concept_pos(a), vec![yv()]), false),
                _ => unreachable!("literal filler"),
            },
            _ => unreachable!("literal filler"),
        }
    };
    let count = |n: u32, r: &Role, d: &Concept, op: CmpOp| -> Result<CountExpr> {
        let (atom, positive) = filler(d);
        Ok(CountExpr {
            head: ar(m, r, xv(), yv())?,
            conditions: vec![Literal { atom, positive }],
            op,
            bound: n,
        })
    };
    match c {
        Concept::Name(a) => t.neg.push(Atom::new(m.concept_pos(a), vec![xv()])),
        Concept::Nominal(inds) => {
            let a = &inds[0];
            t.neg.push(Atom::new(m.nominal_guard(a), vec![xv()]));
            t.facts.push(Atom::ground(m.nominal_guard(a), [a.as_str()]));
        }
        Concept::SelfRestriction(r) => t.neg.push(ar(m, r, xv(), xv())?),
        Concept::Not(inner) => match &**inner {
            Concept::Name(a) => t.pos.push(Atom::new(m.concept_pos(a), vec![xv()])),
            Concept::SelfRestriction(r) => t.pos.push(ar(m, r, xv(), xv())?),
            _ => unreachable!("normalized disjunct"),
        },
        Concept::Forall(r, d) => {
            let (atom, positive) = filler(d);
            t.pos.push(ar(m, r, xv(), yv())?);
            if positive {
                t.neg.push(atom);
            } else {
                t.pos.push(atom);
            }
        }
        Concept::AtLeast(n, r, d) => t.counts.push(count(*n, r, d, CmpOp::Lt)?),
        Concept::AtMost(n, r, d) => t.counts.push(count(*n, r, d, CmpOp::Gt)?),
        _ => unreachable!("normalized disjunct"),
    }
    Ok(t)
}

fn gci_disjuncts(c: &Concept, out: &mut Vec<Concept>) {
    match c {
        Concept::Or(a, b) => {
            gci_disjuncts(a, out);
            gci_disjuncts(b, out);
        }
        Concept::Bot => {}
        other => out.push(other.clone()),
    }
}

/// One constraint per GCI `⊤ ⊑ C1 ⊔ … ⊔ Cn`, guarded by `top(X)`
/// so that it is safe. Nominal guard facts are collected once.
pub fn pi_chk_tbox(tbox: &[Axiom], m: &PredicateMangling) -> Result<Program> {
    let mut p = Program::new();
    for ax in tbox {
        let Axiom::Gci(Concept::Top, rhs) = ax else {
            return Err(Error::NotNormalized(format!("GCI `{ax}`")));
        };
        if rhs.mentions_universal_role() {
            return Err(unsupported_universal(ax));
        }
        let mut ds = Vec::new();
        gci_disjuncts(rhs, &mut ds);
        let mut rule =
            Rule::constraint(vec![Atom::new(TOP, vec![var("X")])], Vec::new(), Vec::new());
        for (k, d) in ds.iter().enumerate() {
            let y = if ds.len() == 1 {
                "Y".to_string()
            } else {
                format!("Y{k}")
            };
            let t = trans_concept(m, d, "X", &y)?;
            rule.pos.extend(t.pos);
            rule.neg.extend(t.neg);
            rule.counts.extend(t.counts);
            for f in t.facts {
                p.add_fact(f);
            }
        }
        p.add_rule(rule);
    }
    Ok(p)
}

/// Role inclusions (chains of length one or two) and disjointness.
pub fn pi_chk_rbox(rbox: &[Axiom], m: &PredicateMangling) -> Result<Program> {
    let mut p = Program::new();
    let (x, y, z) = (|| var("X"), || var("Y"), || var("Z"));
    for ax in rbox {
        if ax.mentions_universal_role() {
            return Err(unsupported_universal(ax));
        }
        let rule = match ax {
            Axiom::Ria(chain, sup) => match chain.as_slice() {
                [s] => Rule::constraint(
                    vec![ar(m, s, x(), y())?],
                    vec![ar(m, sup, x(), y())?],
                    Vec::new(),
                ),
                [s1, s2] => Rule::constraint(
                    vec![ar(m, s1, x(), y())?, ar(m, s2, y(), z())?],
                    vec![ar(m, sup, x(), z())?],
                    Vec::new(),
                ),
                _ => return Err(Error::NotNormalized(format!("role chain in `{ax}`"))),
            },
            Axiom::Disjoint(r, s) => Rule::constraint(
                vec![ar(m, s, x(), y())?, ar(m, r, x(), y())?],
                Vec::new(),
                Vec::new(),
            ),
            _ => return Err(Error::NotNormalized(format!("RBox axiom `{ax}`"))),
        };
        p.add_rule(rule);
    }
    Ok(p)
}

/// ABox facts plus the clash constraints for every concept and role name.
/// Equality axioms are decided syntactically: a violated one adds the
/// false marker.
pub fn pi_chk_abox(abox: &[Axiom], vocab: &Vocabulary, m: &PredicateMangling) -> Result<Program> {
    let mut p = Program::new();
    let mut inconsistent = false;
    for ax in abox {
        match ax {
            Axiom::ConceptAssertion(Concept::Top, _) => {}
            Axiom::ConceptAssertion(Concept::Name(a), s) => {
                p.add_fact(Atom::ground(m.concept_pos(a), [s.as_str()]))
            }
            Axiom::ConceptAssertion(Concept::Not(inner), s)
                if matches!(**inner, Concept::Name(_)) =>
            {
                let Concept::Name(a) = &**inner else {
                    unreachable!()
                };
                p.add_fact(Atom::ground(m.concept_neg(a), [s.as_str()]));
            }
            Axiom::RoleAssertion(Role::Atomic(r), s, t) => {
                p.add_fact(Atom::ground(m.role_pos(r), [s.as_str(), t.as_str()]))
            }
            Axiom::RoleAssertion(Role::Universal, ..) => return Err(unsupported_universal(ax)),
            Axiom::Equality(a, b) => inconsistent |= a != b,
            Axiom::Inequality(a, b) => inconsistent |= a == b,
            _ => return Err(Error::NotNormalized(format!("ABox axiom `{ax}`"))),
        }
    }
    if inconsistent {
        let f = Atom::ground(FALSE_MARKER, Vec::<String>::new());
        p.add_fact(f.clone());
        p.add_rule(Rule::constraint(vec![f], Vec::new(), Vec::new()));
    }
    let (x, y) = (|| var("X"), || var("Y"));
    for a in &vocab.concepts {
        p.add_rule(Rule::constraint(
            vec![
                Atom::new(m.concept_pos(a), vec![x()]),
                Atom::new(m.concept_neg(a), vec![x()]),
            ],
            Vec::new(),
            Vec::new(),
        ));
    }
    for r in &vocab.roles {
        p.add_rule(Rule::constraint(
            vec![
                Atom::new(m.role_pos(r), vec![x(), y()]),
                Atom::new(m.role_neg(r), vec![x(), y()]),
            ],
            Vec::new(),
            Vec::new(),
        ));
    }
    Ok(p)
}

/// `Π(K) = Π_gen(K) ∪ Π_chk(K)` together with what is needed to read its
/// answer sets back.
#[derive(Debug, Clone)]
pub struct Translation {
    pub program: Program,
    pub mangling: PredicateMangling,
    pub normalized: NormalizedKb,
}

impl Translation {
    /// The model of the source knowledge base an answer set stands for.
    pub fn project(&self, i: &crate::asp::AnswerSet) -> ABoxRepresentation {
        project_answer_set(i, &self.mangling, &self.normalized)
    }
}

pub fn translate(kb: &NormalizedKb) -> Result<Translation> {
    let vocab = &kb.kb.vocabulary;
    let m = PredicateMangling::new(vocab.clone());
    let mut program = pi_gen(vocab, &m);
    program.extend(pi_chk_tbox(&kb.kb.tbox, &m)?);
    program.extend(pi_chk_rbox(&kb.kb.rbox, &m)?);
    program.extend(pi_chk_abox(&kb.kb.abox, vocab, &m)?);
    program.check_safety()?;
    Ok(Translation {
        program,
        mangling: m,
        normalized: kb.clone(),
    })
}

/// Keeps the positive concept and role atoms and then drops the names
/// introduced by normalization.
pub fn project_answer_set(
    i: &crate::asp::AnswerSet,
    m: &PredicateMangling,
    kb: &NormalizedKb,
) -> ABoxRepresentation {
    let facts: BTreeSet<Fact> = i.atoms.iter().filter_map(|a| m.decode(a)).collect();
    kb.project(&ABoxRepresentation { facts })
}
