//! Knowledge bases, vocabularies and bounded interpretations.
//!
//! Individuals double as domain elements: a [`BoundedInterpretation`] has
//! domain exactly `N_I` and maps every individual to itself, so
//! interpretations that are not bounded cannot be represented at all.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result, Sort};

/// Finite, pairwise disjoint sets of individual, concept and role names.
///
/// Each set keeps insertion order, which is the order of first use. That
/// order drives grounding and brute-force enumeration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    pub individuals: IndexSet<String>,
    pub concepts: IndexSet<String>,
    pub roles: IndexSet<String>,
}

impl Vocabulary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sort_of(&self, name: &str) -> Option<Sort> {
        if self.individuals.contains(name) {
            Some(Sort::Individual)
        } else if self.concepts.contains(name) {
            Some(Sort::Concept)
        } else if self.roles.contains(name) {
            Some(Sort::Role)
        } else {
            None
        }
    }

    /// Adds `name` with the given sort. Re-adding a name with its own sort is
    /// a no-op; adding it under a different sort is a sort clash.
    pub fn declare(&mut self, name: &str, sort: Sort) -> Result<()> {
        if name.is_empty() {
            return Err(Error::Syntax {
                span: Default::default(),
                message: "empty name".into(),
            });
        }
        match self.sort_of(name) {
            Some(existing) if existing == sort => Ok(()),
            Some(existing) => Err(Error::SortClash {
                name: name.to_string(),
                first: existing,
                second: sort,
                span: None,
            }),
            None => {
                self.set_mut(sort).insert(name.to_string());
                Ok(())
            }
        }
    }

    fn set_mut(&mut self, sort: Sort) -> &mut IndexSet<String> {
        match sort {
            Sort::Individual => &mut self.individuals,
            Sort::Concept => &mut self.concepts,
            Sort::Role => &mut self.roles,
        }
    }

    pub fn set(&self, sort: Sort) -> &IndexSet<String> {
        match sort {
            Sort::Individual => &self.individuals,
            Sort::Concept => &self.concepts,
            Sort::Role => &self.roles,
        }
    }

    pub fn require(&self, name: &str, sort: Sort) -> Result<()> {
        if self.set(sort).contains(name) {
            Ok(())
        } else {
            Err(Error::UnknownName {
                name: name.to_string(),
                sort,
            })
        }
    }

    /// Merges `other` into `self`, keeping `self`'s names first.
    pub fn extend(&mut self, other: &Vocabulary) -> Result<()> {
        for sort in [Sort::Individual, Sort::Concept, Sort::Role] {
            for name in other.set(sort) {
                self.declare(name, sort)?;
            }
        }
        Ok(())
    }

    /// True when every name of `self` appears in `other` with the same sort.
    pub fn is_subset(&self, other: &Vocabulary) -> bool {
        [Sort::Individual, Sort::Concept, Sort::Role]
            .into_iter()
            .all(|sort| self.set(sort).iter().all(|n| other.set(sort).contains(n)))
    }

    /// Number of bits of a candidate interpretation:
    /// `|N_C|·|N_I| + |N_R|·|N_I|²`.
    pub fn candidate_bits(&self) -> usize {
        let n = self.individuals.len();
        self.concepts.len() * n + self.roles.len() * n * n
    }
}

/// Role expressions: role names, their inverses and the universal role.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Atomic(String),
    Inverse(String),
    Universal,
}

impl Role {
    pub fn atomic(name: impl Into<String>) -> Self {
        Role::Atomic(name.into())
    }

    pub fn inverse_of(name: impl Into<String>) -> Self {
        Role::Inverse(name.into())
    }

    /// The inverse of this role. Double inverses collapse, so `Inverse` only
    /// ever wraps a role name.
    pub fn inverse(&self) -> Role {
        match self {
            Role::Atomic(n) => Role::Inverse(n.clone()),
            Role::Inverse(n) => Role::Atomic(n.clone()),
            Role::Universal => Role::Universal,
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            Role::Atomic(n) | Role::Inverse(n) => Some(n),
            Role::Universal => None,
        }
    }
}

/// Concept expressions.
///
/// `Exists` is kept as a distinct constructor so that input can be printed
/// back the way it was written; normalization rewrites it to `AtLeast(1, ..)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Concept {
    Top,
    Bot,
    Name(String),
    Not(Box<Concept>),
    And(Box<Concept>, Box<Concept>),
    Or(Box<Concept>, Box<Concept>),
    /// Non-empty list of individuals.
    Nominal(Vec<String>),
    Forall(Role, Box<Concept>),
    Exists(Role, Box<Concept>),
    SelfRestriction(Role),
    /// Cardinality is at least one; see [`Concept::at_least`].
    AtLeast(u32, Role, Box<Concept>),
    AtMost(u32, Role, Box<Concept>),
}

impl Concept {
    pub fn name(name: impl Into<String>) -> Self {
        Concept::Name(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(c: Concept) -> Self {
        Concept::Not(Box::new(c))
    }

    pub fn and(a: Concept, b: Concept) -> Self {
        Concept::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Concept, b: Concept) -> Self {
        Concept::Or(Box::new(a), Box::new(b))
    }

    /// Left-nested conjunction of `parts`; `Top` when empty.
    pub fn and_all(parts: impl IntoIterator<Item = Concept>) -> Self {
        parts
            .into_iter()
            .reduce(Concept::and)
            .unwrap_or(Concept::Top)
    }

    /// Left-nested disjunction of `parts`; `Bot` when empty.
    pub fn or_all(parts: impl IntoIterator<Item = Concept>) -> Self {
        parts
            .into_iter()
            .reduce(Concept::or)
            .unwrap_or(Concept::Bot)
    }

    pub fn nominal<S: Into<String>>(individuals: impl IntoIterator<Item = S>) -> Self {
        Concept::Nominal(individuals.into_iter().map(Into::into).collect())
    }

    pub fn forall(r: Role, c: Concept) -> Self {
        Concept::Forall(r, Box::new(c))
    }

    pub fn exists(r: Role, c: Concept) -> Self {
        Concept::Exists(r, Box::new(c))
    }

    /// `≥n r.C`. Since `≥0 r.C` holds everywhere it is built as `Top`.
    pub fn at_least(n: u32, r: Role, c: Concept) -> Self {
        if n == 0 {
            Concept::Top
        } else {
            Concept::AtLeast(n, r, Box::new(c))
        }
    }

    pub fn at_most(n: u32, r: Role, c: Concept) -> Self {
        Concept::AtMost(n, r, Box::new(c))
    }

    /// A concept name or a negated concept name.
    pub fn is_literal(&self) -> bool {
        match self {
            Concept::Name(_) => true,
            Concept::Not(inner) => matches!(**inner, Concept::Name(_)),
            _ => false,
        }
    }

    /// Calls `f` on every name in this expression, with its sort.
    pub fn visit_names<'a>(&'a self, f: &mut impl FnMut(&'a str, Sort)) {
        match self {
            Concept::Top | Concept::Bot => {}
            Concept::Name(n) => f(n, Sort::Concept),
            Concept::Not(c) => c.visit_names(f),
            Concept::And(a, b) | Concept::Or(a, b) => {
                a.visit_names(f);
                b.visit_names(f);
            }
            Concept::Nominal(inds) => inds.iter().for_each(|i| f(i, Sort::Individual)),
            Concept::Forall(r, c)
            | Concept::Exists(r, c)
            | Concept::AtLeast(_, r, c)
            | Concept::AtMost(_, r, c) => {
                visit_role(r, f);
                c.visit_names(f);
            }
            Concept::SelfRestriction(r) => visit_role(r, f),
        }
    }

    pub fn mentions_universal_role(&self) -> bool {
        match self {
            Concept::Top | Concept::Bot | Concept::Name(_) | Concept::Nominal(_) => false,
            Concept::Not(c) => c.mentions_universal_role(),
            Concept::And(a, b) | Concept::Or(a, b) => {
                a.mentions_universal_role() || b.mentions_universal_role()
            }
            Concept::SelfRestriction(r) => *r == Role::Universal,
            Concept::Forall(r, c)
            | Concept::Exists(r, c)
            | Concept::AtLeast(_, r, c)
            | Concept::AtMost(_, r, c) => *r == Role::Universal || c.mentions_universal_role(),
        }
    }
}

fn visit_role<'a>(r: &'a Role, f: &mut impl FnMut(&'a str, Sort)) {
    if let Some(n) = r.name() {
        f(n, Sort::Role)
    }
}

/// SROIQ axioms. Assertions go to the ABox, GCIs to the TBox, role
/// inclusions and disjointness to the RBox.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Gci(Concept, Concept),
    /// `r1 ∘ … ∘ rn ⊑ r` with a non-empty chain.
    Ria(Vec<Role>, Role),
    Disjoint(Role, Role),
    ConceptAssertion(Concept, String),
    RoleAssertion(Role, String, String),
    Equality(String, String),
    Inequality(String, String),
}

/// Which component of a knowledge base an axiom belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    ABox,
    TBox,
    RBox,
}

impl Axiom {
    pub fn component(&self) -> Component {
        match self {
            Axiom::Gci(..) => Component::TBox,
            Axiom::Ria(..) | Axiom::Disjoint(..) => Component::RBox,
            _ => Component::ABox,
        }
    }

    pub fn visit_names<'a>(&'a self, f: &mut impl FnMut(&'a str, Sort)) {
        match self {
            Axiom::Gci(a, b) => {
                a.visit_names(f);
                b.visit_names(f);
            }
            Axiom::Ria(chain, sup) => {
                chain.iter().for_each(|r| visit_role(r, f));
                visit_role(sup, f);
            }
            Axiom::Disjoint(r, s) => {
                visit_role(r, f);
                visit_role(s, f);
            }
            Axiom::ConceptAssertion(c, a) => {
                c.visit_names(f);
                f(a, Sort::Individual);
            }
            Axiom::RoleAssertion(r, a, b) => {
                visit_role(r, f);
                f(a, Sort::Individual);
                f(b, Sort::Individual);
            }
            Axiom::Equality(a, b) | Axiom::Inequality(a, b) => {
                f(a, Sort::Individual);
                f(b, Sort::Individual);
            }
        }
    }

    pub fn mentions_universal_role(&self) -> bool {
        match self {
            Axiom::Gci(a, b) => a.mentions_universal_role() || b.mentions_universal_role(),
            Axiom::Ria(chain, sup) => chain.iter().chain([sup]).any(|r| *r == Role::Universal),
            Axiom::Disjoint(r, s) => *r == Role::Universal || *s == Role::Universal,
            Axiom::ConceptAssertion(c, _) => c.mentions_universal_role(),
            Axiom::RoleAssertion(r, _, _) => *r == Role::Universal,
            Axiom::Equality(..) | Axiom::Inequality(..) => false,
        }
    }

    /// Checks every name against `vocab`.
    pub fn check_vocabulary(&self, vocab: &Vocabulary) -> Result<()> {
        let mut result = Ok(());
        self.visit_names(&mut |name, sort| {
            if result.is_ok() {
                result = match vocab.sort_of(name) {
                    Some(s) if s == sort => Ok(()),
                    Some(s) => Err(Error::SortClash {
                        name: name.to_string(),
                        first: s,
                        second: sort,
                        span: None,
                    }),
                    None => Err(Error::UnknownName {
                        name: name.to_string(),
                        sort,
                    }),
                };
            }
        });
        result
    }
}

/// A knowledge base `(A, T, R)` together with its vocabulary.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    pub vocabulary: Vocabulary,
    pub abox: Vec<Axiom>,
    pub tbox: Vec<Axiom>,
    pub rbox: Vec<Axiom>,
}

impl KnowledgeBase {
    /// Builds a knowledge base whose vocabulary is exactly the names used
    /// by `axioms`.
    pub fn new(axioms: impl IntoIterator<Item = Axiom>) -> Result<Self> {
        Self::with_declarations(Vocabulary::new(), axioms)
    }

    /// Builds a knowledge base over `declared` extended by the names the
    /// axioms use.
    pub fn with_declarations(
        declared: Vocabulary,
        axioms: impl IntoIterator<Item = Axiom>,
    ) -> Result<Self> {
        let mut kb = KnowledgeBase {
            vocabulary: declared,
            ..Default::default()
        };
        for ax in axioms {
            kb.push(ax)?;
        }
        Ok(kb)
    }

    /// Appends `ax`, declaring any names it introduces.
    pub fn push(&mut self, ax: Axiom) -> Result<()> {
        let mut result = Ok(());
        ax.visit_names(&mut |name, sort| {
            if result.is_ok() {
                result = self.vocabulary.declare(name, sort);
            }
        });
        result?;
        match ax.component() {
            Component::ABox => self.abox.push(ax),
            Component::TBox => self.tbox.push(ax),
            Component::RBox => self.rbox.push(ax),
        }
        Ok(())
    }

    /// All axioms: ABox, then TBox, then RBox.
    pub fn axioms(&self) -> impl Iterator<Item = &Axiom> {
        self.abox.iter().chain(&self.tbox).chain(&self.rbox)
    }

    pub fn len(&self) -> usize {
        self.abox.len() + self.tbox.len() + self.rbox.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The names occurring in the axioms of `kb`, each in its sort, in order of
/// first occurrence (ABox, then TBox, then RBox). Declared-but-unused names
/// are not included.
pub fn vocabulary_of(kb: &KnowledgeBase) -> Result<Vocabulary> {
    let mut vocab = Vocabulary::new();
    let mut result = Ok(());
    for ax in kb.axioms() {
        ax.visit_names(&mut |name, sort| {
            if result.is_ok() {
                result = vocab.declare(name, sort);
            }
        });
    }
    result.map(|_| vocab)
}

/// An atomic fact `A(a)` or `r(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fact {
    Concept(String, String),
    Role(String, String, String),
}

impl Fact {
    pub fn concept(name: impl Into<String>, ind: impl Into<String>) -> Self {
        Fact::Concept(name.into(), ind.into())
    }

    pub fn role(name: impl Into<String>, a: impl Into<String>, b: impl Into<String>) -> Self {
        Fact::Role(name.into(), a.into(), b.into())
    }

    /// The concept or role name of the fact.
    pub fn predicate(&self) -> &str {
        match self {
            Fact::Concept(n, _) | Fact::Role(n, _, _) => n,
        }
    }

    pub fn individuals(&self) -> impl Iterator<Item = &str> {
        let (a, b) = match self {
            Fact::Concept(_, a) => (a.as_str(), None),
            Fact::Role(_, a, b) => (a.as_str(), Some(b.as_str())),
        };
        std::iter::once(a).chain(b)
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Concept(c, a) => write!(f, "{c}({a})"),
            Fact::Role(r, a, b) => write!(f, "{r}({a}, {b})"),
        }
    }
}

/// A bounded interpretation written as a set of atomic assertions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ABoxRepresentation {
    pub facts: BTreeSet<Fact>,
}

impl ABoxRepresentation {
    pub fn new(facts: impl IntoIterator<Item = Fact>) -> Self {
        Self {
            facts: facts.into_iter().collect(),
        }
    }

    pub fn contains(&self, fact: &Fact) -> bool {
        self.facts.contains(fact)
    }

    pub fn insert(&mut self, fact: Fact) -> bool {
        self.facts.insert(fact)
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Fact> {
        self.facts.iter()
    }
}

impl FromIterator<Fact> for ABoxRepresentation {
    fn from_iter<T: IntoIterator<Item = Fact>>(iter: T) -> Self {
        Self::new(iter)
    }
}

/// An interpretation with domain `N_I` in which every individual denotes
/// itself. Every concept and role name of the vocabulary has an entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedInterpretation {
    pub vocabulary: Vocabulary,
    pub concept_ext: BTreeMap<String, BTreeSet<String>>,
    pub role_ext: BTreeMap<String, BTreeSet<(String, String)>>,
}

impl BoundedInterpretation {
    /// All extensions empty.
    pub fn empty(vocabulary: Vocabulary) -> Self {
        let concept_ext = vocabulary
            .concepts
            .iter()
            .map(|c| (c.clone(), BTreeSet::new()))
            .collect();
        let role_ext = vocabulary
            .roles
            .iter()
            .map(|r| (r.clone(), BTreeSet::new()))
            .collect();
        Self {
            vocabulary,
            concept_ext,
            role_ext,
        }
    }

    pub fn domain(&self) -> &IndexSet<String> {
        &self.vocabulary.individuals
    }
}

/// `I_A`: the interpretation whose extensions are read off the facts.
pub fn interpretation_of_abox(
    vocab: &Vocabulary,
    rep: &ABoxRepresentation,
) -> Result<BoundedInterpretation> {
    let mut interp = BoundedInterpretation::empty(vocab.clone());
    for fact in rep.iter() {
        for ind in fact.individuals() {
            vocab.require(ind, Sort::Individual)?;
        }
        match fact {
            Fact::Concept(c, a) => {
                vocab.require(c, Sort::Concept)?;
                interp
                    .concept_ext
                    .get_mut(c)
                    .expect("entry for every concept")
                    .insert(a.clone());
            }
            Fact::Role(r, a, b) => {
                vocab.require(r, Sort::Role)?;
                interp
                    .role_ext
                    .get_mut(r)
                    .expect("entry for every role")
                    .insert((a.clone(), b.clone()));
            }
        }
    }
    Ok(interp)
}

/// `A_I := {r(a,b) | (a,b) ∈ r^I} ∪ {A(a) | a ∈ A^I}`.
pub fn abox_of_interpretation(interp: &BoundedInterpretation) -> ABoxRepresentation {
    let concepts = interp
        .concept_ext
        .iter()
        .flat_map(|(c, ext)| ext.iter().map(move |a| Fact::concept(c, a)));
    let roles = interp
        .role_ext
        .iter()
        .flat_map(|(r, ext)| ext.iter().map(move |(a, b)| Fact::role(r, a, b)));
    concepts.chain(roles).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_kb() -> KnowledgeBase {
        KnowledgeBase::new([
            Axiom::ConceptAssertion(Concept::name("A"), "a".into()),
            Axiom::ConceptAssertion(Concept::name("A"), "b".into()),
            Axiom::RoleAssertion(Role::atomic("s"), "a".into(), "b".into()),
            Axiom::Gci(
                Concept::Top,
                Concept::exists(Role::atomic("r"), Concept::name("B")),
            ),
            Axiom::Gci(
                Concept::Top,
                Concept::at_most(1, Role::inverse_of("r"), Concept::Top),
            ),
            Axiom::Disjoint(Role::atomic("s"), Role::atomic("r")),
        ])
        .unwrap()
    }

    fn names(set: &IndexSet<String>) -> Vec<&str> {
        set.iter().map(String::as_str).collect()
    }

    #[test]
    fn vocabulary_of_simple_kb() {
        let kb = KnowledgeBase::new([
            Axiom::ConceptAssertion(Concept::name("A"), "a".into()),
            Axiom::RoleAssertion(Role::atomic("s"), "a".into(), "b".into()),
        ])
        .unwrap();
        let v = vocabulary_of(&kb).unwrap();
        assert_eq!(names(&v.individuals), ["a", "b"]);
        assert_eq!(names(&v.concepts), ["A"]);
        assert_eq!(names(&v.roles), ["s"]);
    }

    #[test]
    fn vocabulary_of_empty_kb() {
        let v = vocabulary_of(&KnowledgeBase::default()).unwrap();
        assert!(v.individuals.is_empty() && v.concepts.is_empty() && v.roles.is_empty());
    }

    #[test]
    fn vocabulary_of_worked_example() {
        let v = vocabulary_of(&example_kb()).unwrap();
        assert_eq!(names(&v.individuals), ["a", "b"]);
        assert_eq!(names(&v.concepts), ["A", "B"]);
        assert_eq!(names(&v.roles), ["s", "r"]);
    }

    #[test]
    fn sort_clash_is_reported() {
        let err = KnowledgeBase::new([
            Axiom::ConceptAssertion(Concept::name("A"), "a".into()),
            Axiom::RoleAssertion(Role::atomic("A"), "a".into(), "a".into()),
        ])
        .unwrap_err();
        assert!(matches!(err, Error::SortClash { .. }), "{err}");
    }

    #[test]
    fn declared_names_extend_vocabulary() {
        let mut decl = Vocabulary::new();
        decl.declare("C", Sort::Concept).unwrap();
        let kb = KnowledgeBase::with_declarations(
            decl,
            [Axiom::ConceptAssertion(Concept::name("A"), "a".into())],
        )
        .unwrap();
        assert_eq!(names(&kb.vocabulary.concepts), ["C", "A"]);
        assert_eq!(names(&vocabulary_of(&kb).unwrap().concepts), ["A"]);
    }

    #[test]
    fn at_least_zero_is_top() {
        assert_eq!(
            Concept::at_least(0, Role::atomic("r"), Concept::name("A")),
            Concept::Top
        );
    }

    #[test]
    fn double_inverse_collapses() {
        let r = Role::atomic("r");
        assert_eq!(r.inverse().inverse(), r);
        assert_eq!(Role::Universal.inverse(), Role::Universal);
    }

    #[test]
    fn interpretation_from_single_fact() {
        let vocab = example_kb().vocabulary;
        let rep = ABoxRepresentation::new([Fact::concept("A", "a")]);
        let i = interpretation_of_abox(&vocab, &rep).unwrap();
        assert_eq!(i.concept_ext["A"], BTreeSet::from(["a".to_string()]));
        assert!(i.concept_ext["B"].is_empty());
        assert!(i.role_ext.values().all(BTreeSet::is_empty));
    }

    #[test]
    fn empty_abox_gives_empty_interpretation() {
        let vocab = example_kb().vocabulary;
        let i = interpretation_of_abox(&vocab, &ABoxRepresentation::default()).unwrap();
        assert_eq!(i, BoundedInterpretation::empty(vocab));
        assert!(abox_of_interpretation(&i).is_empty());
    }

    #[test]
    fn worked_example_model_round_trips() {
        let vocab = example_kb().vocabulary;
        let rep = ABoxRepresentation::new([
            Fact::concept("A", "a"),
            Fact::concept("A", "b"),
            Fact::concept("B", "a"),
            Fact::concept("B", "b"),
            Fact::role("s", "a", "b"),
            Fact::role("r", "a", "a"),
            Fact::role("r", "b", "b"),
        ]);
        let i = interpretation_of_abox(&vocab, &rep).unwrap();
        let pair = |a: &str, b: &str| (a.to_string(), b.to_string());
        assert_eq!(i.role_ext["s"], BTreeSet::from([pair("a", "b")]));
        assert_eq!(
            i.role_ext["r"],
            BTreeSet::from([pair("a", "a"), pair("b", "b")])
        );
        assert_eq!(i.concept_ext["B"].len(), 2);
        assert_eq!(abox_of_interpretation(&i), rep);
    }

    #[test]
    fn unknown_fact_name_is_rejected() {
        let vocab = example_kb().vocabulary;
        let rep = ABoxRepresentation::new([Fact::concept("Z", "a")]);
        assert!(matches!(
            interpretation_of_abox(&vocab, &rep),
            Err(Error::UnknownName { .. })
        ));
        let rep = ABoxRepresentation::new([Fact::concept("A", "z")]);
        assert!(interpretation_of_abox(&vocab, &rep).is_err());
    }
}
