//! Structural normalization of knowledge bases.
//!
//! After normalization every GCI has the form `⊤ ⊑ C1 ⊔ … ⊔ Cn` where each
//! `Ci` is a literal, a singleton nominal, `∀r.B`, `∃r.Self`, `¬∃r.Self`,
//! `≥n r.B` or `≤n r.B` for a literal `B`; concept assertions are over
//! literals, role assertions over role names, and role chains have length at
//! most two. Complex subconcepts are replaced by fresh concept names `Q_C`
//! whose polarity is chosen by [`pos`] so that the result is a
//! model-conservative extension of the input: projecting away the fresh
//! names from the models of the output gives exactly the models of the
//! input.

use std::collections::HashSet;
use std::fmt;

use indexmap::{IndexMap, IndexSet};

use crate::error::Sort;
use crate::model::{ABoxRepresentation, Axiom, Concept, KnowledgeBase, Role, Vocabulary};

/// Negation normal form.
///
/// Negation is pushed inwards until it only sits on concept names,
/// nominals and Self restrictions; `∃r.C` becomes `≥1 r.C`.
pub fn nnf(c: &Concept) -> Concept {
    use Concept::*;
    match c {
        Top | Bot | Name(_) | Nominal(_) | SelfRestriction(_) => c.clone(),
        And(a, b) => Concept::and(nnf(a), nnf(b)),
        Or(a, b) => Concept::or(nnf(a), nnf(b)),
        Forall(r, d) => Concept::forall(r.clone(), nnf(d)),
        Exists(r, d) => AtLeast(1, r.clone(), Box::new(nnf(d))),
        AtLeast(n, r, d) => Concept::at_least(*n, r.clone(), nnf(d)),
        AtMost(n, r, d) => Concept::at_most(*n, r.clone(), nnf(d)),
        Not(inner) => match &**inner {
            Top => Bot,
            Bot => Top,
            Name(_) | Nominal(_) | SelfRestriction(_) => c.clone(),
            Not(d) => nnf(d),
            And(a, b) => Concept::or(
                nnf(&Concept::not((**a).clone())),
                nnf(&Concept::not((**b).clone())),
            ),
            Or(a, b) => Concept::and(
                nnf(&Concept::not((**a).clone())),
                nnf(&Concept::not((**b).clone())),
            ),
            Forall(r, d) => AtLeast(1, r.clone(), Box::new(nnf(&Concept::not((**d).clone())))),
            Exists(r, d) => Concept::forall(r.clone(), nnf(&Concept::not((**d).clone()))),
            AtLeast(n, r, d) => Concept::at_most(n - 1, r.clone(), nnf(d)),
            AtMost(n, r, d) => AtLeast(n + 1, r.clone(), Box::new(nnf(d))),
        },
    }
}

/// Dotted negation: flips the polarity of a literal, and is the negation
/// normal form of the complement on any other concept.
pub fn dotted_neg(c: &Concept) -> Concept {
    match c {
        Concept::Name(_) => Concept::not(c.clone()),
        Concept::Not(inner) if matches!(**inner, Concept::Name(_)) => (**inner).clone(),
        _ => simplify(&nnf(&Concept::not(c.clone()))),
    }
}

/// Polarity of a concept in negation normal form: whether its fresh name
/// stands for a subset (`true`) or for the complement of a subset (`false`).
pub fn pos(c: &Concept) -> bool {
    use Concept::*;
    match c {
        Top | Bot => false,
        Name(_) | Nominal(_) | SelfRestriction(_) | AtLeast(..) | Exists(..) => true,
        Not(inner) => match &**inner {
            Name(_) | Nominal(_) | SelfRestriction(_) => false,
            _ => pos(&nnf(c)),
        },
        And(a, b) | Or(a, b) => pos(a) || pos(b),
        Forall(_, d) => pos(d),
        AtMost(0, _, d) => pos(&dotted_neg(d)),
        AtMost(..) => true,
    }
}

/// Removes `⊤` and `⊥` where they can be absorbed and splits negated
/// nominals with several individuals into conjunctions. Expects and
/// preserves negation normal form; the result is equivalent to the input.
pub fn simplify(c: &Concept) -> Concept {
    use Concept::*;
    match c {
        And(a, b) => match (simplify(a), simplify(b)) {
            (Bot, _) | (_, Bot) => Bot,
            (Top, x) | (x, Top) => x,
            (x, y) => Concept::and(x, y),
        },
        Or(a, b) => match (simplify(a), simplify(b)) {
            (Top, _) | (_, Top) => Top,
            (Bot, x) | (x, Bot) => x,
            (x, y) => Concept::or(x, y),
        },
        Forall(r, d) => match simplify(d) {
            Top => Top,
            d => Concept::forall(r.clone(), d),
        },
        Exists(r, d) | AtLeast(1, r, d) => match simplify(d) {
            Bot => Bot,
            d => AtLeast(1, r.clone(), Box::new(d)),
        },
        AtLeast(n, r, d) => match simplify(d) {
            Bot => Bot,
            d => Concept::at_least(*n, r.clone(), d),
        },
        AtMost(n, r, d) => match simplify(d) {
            Bot => Top,
            d => Concept::at_most(*n, r.clone(), d),
        },
        Not(inner) => match &**inner {
            Nominal(inds) if inds.len() > 1 => {
                Concept::and_all(inds.iter().map(|a| Concept::not(Nominal(vec![a.clone()]))))
            }
            Top => Bot,
            Bot => Top,
            _ => c.clone(),
        },
        _ => c.clone(),
    }
}

/// Fresh names introduced by normalization.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FreshNameTable {
    /// `Q_C` for each normalized concept `C`.
    pub by_concept: IndexMap<Concept, String>,
    /// `r_(r1∘r2)` for each decomposed chain prefix.
    pub by_chain_prefix: IndexMap<(Role, Role), String>,
    /// Individuals added to keep the domain non-empty.
    pub individuals: Vec<String>,
    taken: HashSet<String>,
    next_concept: usize,
    next_role: usize,
}

impl FreshNameTable {
    /// An empty table whose names avoid every name of `source`.
    pub fn new(source: &Vocabulary) -> Self {
        let taken = [Sort::Individual, Sort::Concept, Sort::Role]
            .into_iter()
            .flat_map(|s| source.set(s).iter().cloned())
            .collect();
        FreshNameTable {
            taken,
            ..Default::default()
        }
    }

    fn allocate(&mut self, prefix: &str, counter: Counter) -> String {
        loop {
            let n = match counter {
                Counter::Concept => &mut self.next_concept,
                Counter::Role => &mut self.next_role,
            };
            let name = format!("{prefix}{n}");
            *n += 1;
            if self.taken.insert(name.clone()) {
                return name;
            }
        }
    }

    /// The fresh name for `c`, allocated on first request.
    pub fn concept_name(&mut self, c: &Concept) -> String {
        if let Some(name) = self.by_concept.get(c) {
            return name.clone();
        }
        let name = self.allocate("q_", Counter::Concept);
        self.by_concept.insert(c.clone(), name.clone());
        name
    }

    pub fn chain_role(&mut self, r1: &Role, r2: &Role) -> String {
        let key = (r1.clone(), r2.clone());
        if let Some(name) = self.by_chain_prefix.get(&key) {
            return name.clone();
        }
        let name = self.allocate("chain_", Counter::Role);
        self.by_chain_prefix.insert(key, name.clone());
        name
    }

    fn guard_individual(&mut self) -> String {
        let mut k = 0;
        let name = loop {
            let name = format!("a{k}");
            if self.taken.insert(name.clone()) {
                break name;
            }
            k += 1;
        };
        self.individuals.push(name.clone());
        name
    }

    pub fn is_empty(&self) -> bool {
        self.by_concept.is_empty() && self.by_chain_prefix.is_empty() && self.individuals.is_empty()
    }

    /// One line per fresh name: `name = expression`.
    pub fn legend(&self) -> Vec<String> {
        let concepts = self.by_concept.iter().map(|(c, q)| format!("{q} = {c}"));
        let roles = self
            .by_chain_prefix
            .iter()
            .map(|((r1, r2), r)| format!("{r} = {r1} o {r2}"));
        let inds = self
            .individuals
            .iter()
            .map(|a| format!("{a} = (domain guard)"));
        concepts.chain(roles).chain(inds).collect()
    }
}

#[derive(Clone, Copy)]
enum Counter {
    Concept,
    Role,
}

/// `α_C`: the fresh literal standing for `C`.
pub fn alpha(c: &Concept, fresh: &mut FreshNameTable) -> Concept {
    let q = Concept::Name(fresh.concept_name(c));
    if pos(c) {
        q
    } else {
        Concept::not(q)
    }
}

/// A normalized knowledge base together with what is needed to map its
/// models back to the source vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedKb {
    pub kb: KnowledgeBase,
    pub fresh: FreshNameTable,
    pub source_vocabulary: Vocabulary,
}

impl NormalizedKb {
    pub fn project(&self, rep: &ABoxRepresentation) -> ABoxRepresentation {
        project_model(rep, &self.fresh, &self.source_vocabulary)
    }
}

impl fmt::Display for NormalizedKb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.fresh.legend() {
            writeln!(f, "# {line}")?;
        }
        f.write_str(&crate::parser::print_kb(&self.kb))
    }
}

fn disjuncts(c: Concept, out: &mut Vec<Concept>) {
    match c {
        Concept::Or(a, b) => {
            disjuncts(*a, out);
            disjuncts(*b, out);
        }
        Concept::Nominal(inds) if inds.len() > 1 => {
            out.extend(inds.into_iter().map(|a| Concept::Nominal(vec![a])));
        }
        other => out.push(other),
    }
}

fn conjuncts(c: Concept, out: &mut Vec<Concept>) {
    match c {
        Concept::And(a, b) => {
            conjuncts(*a, out);
            conjuncts(*b, out);
        }
        other => out.push(other),
    }
}

/// Whether `c` is one of the disjunct shapes allowed in a normalized GCI.
pub fn is_normalized_disjunct(c: &Concept) -> bool {
    match c {
        Concept::Name(_) | Concept::SelfRestriction(_) => true,
        Concept::Nominal(inds) => inds.len() == 1,
        Concept::Not(inner) => matches!(**inner, Concept::Name(_) | Concept::SelfRestriction(_)),
        Concept::Forall(_, d) | Concept::AtMost(_, _, d) => d.is_literal(),
        Concept::AtLeast(n, _, d) => *n >= 1 && d.is_literal(),
        _ => false,
    }
}

fn is_normalized_gci(ax: &Axiom) -> bool {
    match ax {
        Axiom::Gci(Concept::Top, Concept::Bot) => true,
        Axiom::Gci(Concept::Top, rhs) => {
            let mut ds = Vec::new();
            disjuncts_shallow(rhs, &mut ds);
            ds.iter().all(|d| is_normalized_disjunct(d))
        }
        _ => false,
    }
}

fn disjuncts_shallow<'a>(c: &'a Concept, out: &mut Vec<&'a Concept>) {
    match c {
        Concept::Or(a, b) => {
            disjuncts_shallow(a, out);
            disjuncts_shallow(b, out);
        }
        other => out.push(other),
    }
}

fn is_normalized_assertion(ax: &Axiom) -> bool {
    match ax {
        Axiom::ConceptAssertion(c, _) => c.is_literal() || *c == Concept::Top,
        Axiom::RoleAssertion(r, _, _) => matches!(r, Role::Atomic(_)),
        Axiom::Equality(..) | Axiom::Inequality(..) => true,
        _ => false,
    }
}

fn is_normalized_rbox_axiom(ax: &Axiom) -> bool {
    match ax {
        Axiom::Ria(chain, _) => !chain.is_empty() && chain.len() <= 2,
        Axiom::Disjoint(..) => true,
        _ => false,
    }
}

/// Whether `kb` is in normal form. `⊤(a)` is accepted as an ABox assertion
/// and `⊤ ⊑ ⊥` stands for the empty disjunction.
pub fn is_normalized(kb: &KnowledgeBase) -> bool {
    !kb.abox.is_empty()
        && kb.abox.iter().all(is_normalized_assertion)
        && kb.tbox.iter().all(is_normalized_gci)
        && kb.rbox.iter().all(is_normalized_rbox_axiom)
}

struct Omega<'a> {
    fresh: &'a mut FreshNameTable,
    out: IndexSet<Axiom>,
}

impl Omega<'_> {
    fn axiom(&mut self, ax: &Axiom) {
        match ax {
            Axiom::Gci(..) if is_normalized_gci(ax) => self.emit(ax.clone()),
            Axiom::Gci(c1, c2) => {
                let c = nnf(&Concept::or(Concept::not(c1.clone()), c2.clone()));
                self.gci(vec![c]);
            }
            Axiom::ConceptAssertion(d, s) => self.assertion(d, s),
            Axiom::RoleAssertion(Role::Inverse(r), s, t) => self.emit(Axiom::RoleAssertion(
                Role::Atomic(r.clone()),
                t.clone(),
                s.clone(),
            )),
            Axiom::Ria(chain, sup) if chain.len() > 2 => {
                let prefix = Role::Atomic(self.fresh.chain_role(&chain[0], &chain[1]));
                self.emit(Axiom::Ria(chain[..2].to_vec(), prefix.clone()));
                let mut rest = vec![prefix];
                rest.extend_from_slice(&chain[2..]);
                self.axiom(&Axiom::Ria(rest, sup.clone()));
            }
            _ => self.emit(ax.clone()),
        }
    }

    fn emit(&mut self, ax: Axiom) {
        self.out.insert(ax);
    }

    fn bottom(&mut self) {
        self.emit(Axiom::Gci(Concept::Top, Concept::Bot));
    }

    fn assertion(&mut self, d: &Concept, s: &str) {
        let d = simplify(&nnf(d));
        match d {
            Concept::Top => self.emit(Axiom::ConceptAssertion(Concept::Top, s.to_string())),
            Concept::Bot => self.bottom(),
            d if d.is_literal() => self.emit(Axiom::ConceptAssertion(d, s.to_string())),
            d => {
                let a = alpha(&d, self.fresh);
                self.emit(Axiom::ConceptAssertion(a.clone(), s.to_string()));
                self.gci(vec![dotted_neg(&a), d]);
            }
        }
    }

    /// `Ω(⊤ ⊑ ⊔ parts)`.
    fn gci(&mut self, parts: Vec<Concept>) {
        let mut ds = Vec::new();
        for p in parts {
            disjuncts(simplify(&p), &mut ds);
        }
        ds.retain(|d| *d != Concept::Bot);
        if ds.contains(&Concept::Top) {
            return;
        }
        let mut seen = HashSet::new();
        ds.retain(|d| seen.insert(d.clone()));
        if ds
            .iter()
            .any(|d| d.is_literal() && seen.contains(&dotted_neg(d)))
        {
            return;
        }

        while let Some(i) = ds
            .iter()
            .position(|d| !is_normalized_disjunct(d) && !is_negated_nominal(d))
        {
            let d = ds[i].clone();
            match d {
                Concept::And(..) => {
                    let a = alpha(&d, self.fresh);
                    let mut cs = Vec::new();
                    conjuncts(d, &mut cs);
                    for c in cs {
                        self.gci(vec![dotted_neg(&a), c]);
                    }
                    ds[i] = a;
                }
                Concept::Forall(r, filler) => {
                    let a = alpha(&filler, self.fresh);
                    self.gci(vec![dotted_neg(&a), *filler]);
                    ds[i] = Concept::forall(r, a);
                }
                Concept::AtLeast(n, r, filler) => {
                    let a = alpha(&filler, self.fresh);
                    self.gci(vec![dotted_neg(&a), *filler]);
                    ds[i] = Concept::AtLeast(n, r, Box::new(a));
                }
                Concept::AtMost(n, r, filler) => {
                    let neg = dotted_neg(&filler);
                    let a = alpha(&neg, self.fresh);
                    self.gci(vec![dotted_neg(&a), neg]);
                    ds[i] = Concept::at_most(n, r, dotted_neg(&a));
                }
                other => unreachable!("not in negation normal form: {other:?}"),
            }
        }

        // Replacing a subconcept by its own fresh name can leave `¬̇q ⊔ q`.
        let mut seen = HashSet::new();
        ds.retain(|d| seen.insert(d.clone()));
        if ds
            .iter()
            .any(|d| d.is_literal() && seen.contains(&dotted_neg(d)))
        {
            return;
        }

        if let Some(i) = ds.iter().position(is_negated_nominal) {
            let Concept::Not(inner) = ds.remove(i) else {
                unreachable!()
            };
            let Concept::Nominal(inds) = *inner else {
                unreachable!()
            };
            if ds.is_empty() {
                self.bottom();
            } else {
                self.assertion(&Concept::or_all(ds), &inds[0]);
            }
            return;
        }

        self.emit(Axiom::Gci(Concept::Top, Concept::or_all(ds)));
    }
}

fn is_negated_nominal(c: &Concept) -> bool {
    matches!(c, Concept::Not(inner) if matches!(**inner, Concept::Nominal(_)))
}

/// `Ω(α)` for a single axiom. Fresh names are drawn from (and recorded in)
/// `fresh`; structurally equal outputs are merged.
pub fn omega_axiom(ax: &Axiom, fresh: &mut FreshNameTable) -> Vec<Axiom> {
    let mut omega = Omega {
        fresh,
        out: IndexSet::new(),
    };
    omega.axiom(ax);
    omega.out.into_iter().collect()
}

/// `Ω(K)`. When the ABox would come out empty a `⊤(a)` assertion is added
/// for the first individual (or a fresh one if there are none).
pub fn normalize(kb: &KnowledgeBase) -> NormalizedKb {
    let mut fresh = FreshNameTable::new(&kb.vocabulary);
    let mut omega = Omega {
        fresh: &mut fresh,
        out: IndexSet::new(),
    };
    for ax in kb.axioms() {
        omega.axiom(ax);
    }
    let axioms = omega.out;

    let mut out = KnowledgeBase {
        vocabulary: kb.vocabulary.clone(),
        ..Default::default()
    };
    for ax in axioms {
        out.push(ax)
            .expect("fresh names never clash with source names");
    }
    if out.abox.is_empty() {
        let a = match out.vocabulary.individuals.first() {
            Some(a) => a.clone(),
            None => fresh.guard_individual(),
        };
        out.push(Axiom::ConceptAssertion(Concept::Top, a))
            .expect("individual name");
    }
    NormalizedKb {
        kb: out,
        fresh,
        source_vocabulary: kb.vocabulary.clone(),
    }
}

/// Drops every fact that mentions a name outside `source` (fresh concepts,
/// fresh roles, guard individuals).
pub fn project_model(
    rep: &ABoxRepresentation,
    fresh: &FreshNameTable,
    source: &Vocabulary,
) -> ABoxRepresentation {
    rep.iter()
        .filter(|f| !fresh.by_concept.values().any(|q| q == f.predicate()))
        .filter(|f| {
            let pred_sort = match f {
                crate::model::Fact::Concept(..) => Sort::Concept,
                crate::model::Fact::Role(..) => Sort::Role,
            };
            source.set(pred_sort).contains(f.predicate())
                && f.individuals().all(|a| source.individuals.contains(a))
        })
        .cloned()
        .collect()
}
