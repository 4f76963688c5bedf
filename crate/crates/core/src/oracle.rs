//! Direct evaluation of the SROIQ semantics over bounded interpretations.
//!
//! Nothing here goes through the ASP pipeline: this module is the reference
//! the compilation is checked against. Concept expressions are compiled into
//! a table of structurally distinct subexpressions, and extensions are
//! computed bottom-up over that table, so checking a model takes time
//! polynomial in the size of the knowledge base and `|N_I|`.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result, Sort};
use crate::model::{
    ABoxRepresentation, Axiom, BoundedInterpretation, Concept, Fact, KnowledgeBase, Role,
    Vocabulary,
};

/// Default limit on `|N_C|·|N_I| + |N_R|·|N_I|²` for brute-force enumeration.
pub const DEFAULT_CAP: usize = 24;

/// Environment variable that overrides [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "BOUNDED_DL_BRUTEFORCE_CAP";

/// [`DEFAULT_CAP`], or the value of [`CAP_ENV`] when set to a number.
pub fn default_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// An interpretation over an indexed vocabulary: `concepts[c][x]` and
/// `roles[r][x * n + y]`, indices following vocabulary order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub n: usize,
    pub concepts: Vec<Vec<bool>>,
    pub roles: Vec<Vec<bool>>,
}

impl Candidate {
    pub fn empty(vocab: &Vocabulary) -> Self {
        let n = vocab.individuals.len();
        Candidate {
            n,
            concepts: vec![vec![false; n]; vocab.concepts.len()],
            roles: vec![vec![false; n * n]; vocab.roles.len()],
        }
    }

    /// Bit `k` of `bits` decides the `k`-th fact: concept facts first
    /// (concept-major), then role facts (role-major, then row-major pairs).
    pub fn from_bits(vocab: &Vocabulary, bits: u64) -> Self {
        let mut c = Candidate::empty(vocab);
        let mut k = 0;
        for ext in c.concepts.iter_mut().chain(c.roles.iter_mut()) {
            for slot in ext.iter_mut() {
                *slot = bits >> k & 1 == 1;
                k += 1;
            }
        }
        c
    }

    pub fn from_abox(vocab: &Vocabulary, rep: &ABoxRepresentation) -> Result<Self> {
        let mut c = Candidate::empty(vocab);
        let ind = |a: &str| {
            vocab
                .individuals
                .get_index_of(a)
                .ok_or_else(|| Error::UnknownName {
                    name: a.to_string(),
                    sort: Sort::Individual,
                })
        };
        for fact in rep.iter() {
            match fact {
                Fact::Concept(name, a) => {
                    let ci = index_of(vocab, name, Sort::Concept)?;
                    c.concepts[ci][ind(a)?] = true;
                }
                Fact::Role(name, a, b) => {
                    let ri = index_of(vocab, name, Sort::Role)?;
                    let n = c.n;
                    c.roles[ri][ind(a)? * n + ind(b)?] = true;
                }
            }
        }
        Ok(c)
    }

    pub fn from_interpretation(i: &BoundedInterpretation) -> Result<Self> {
        Self::from_abox(&i.vocabulary, &crate::model::abox_of_interpretation(i))
    }

    pub fn to_abox(&self, vocab: &Vocabulary) -> ABoxRepresentation {
        let inds = &vocab.individuals;
        let mut rep = ABoxRepresentation::default();
        for (ci, ext) in self.concepts.iter().enumerate() {
            for (x, _) in ext.iter().enumerate().filter(|(_, b)| **b) {
                rep.insert(Fact::concept(&vocab.concepts[ci], &inds[x]));
            }
        }
        for (ri, ext) in self.roles.iter().enumerate() {
            for (k, _) in ext.iter().enumerate().filter(|(_, b)| **b) {
                rep.insert(Fact::role(
                    &vocab.roles[ri],
                    &inds[k / self.n],
                    &inds[k % self.n],
                ));
            }
        }
        rep
    }
}

fn index_of(vocab: &Vocabulary, name: &str, sort: Sort) -> Result<usize> {
    vocab
        .set(sort)
        .get_index_of(name)
        .ok_or_else(|| Error::UnknownName {
            name: name.to_string(),
            sort,
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum RoleRef {
    Atomic(usize),
    Inverse(usize),
    Universal,
}

impl RoleRef {
    fn holds(self, c: &Candidate, x: usize, y: usize) -> bool {
        match self {
            RoleRef::Atomic(r) => c.roles[r][x * c.n + y],
            RoleRef::Inverse(r) => c.roles[r][y * c.n + x],
            RoleRef::Universal => true,
        }
    }
}

type NodeId = usize;

#[derive(Debug, Clone)]
enum Node {
    Top,
    Bot,
    Name(usize),
    Not(NodeId),
    And(NodeId, NodeId),
    Or(NodeId, NodeId),
    Nominal(Vec<usize>),
    Forall(RoleRef, NodeId),
    Exists(RoleRef, NodeId),
    SelfRestriction(RoleRef),
    AtLeast(u32, RoleRef, NodeId),
    AtMost(u32, RoleRef, NodeId),
}

#[derive(Debug, Clone)]
enum Check {
    Gci(NodeId, NodeId),
    Ria(Vec<RoleRef>, RoleRef),
    Disjoint(RoleRef, RoleRef),
    ConceptAssertion(NodeId, usize),
    RoleAssertion(RoleRef, usize, usize),
    Const(bool),
}

/// Concept expressions compiled against a vocabulary, one node per
/// structurally distinct subexpression, children before parents.
#[derive(Debug, Clone, Default)]
struct Compiler {
    nodes: Vec<Node>,
    ids: HashMap<Concept, NodeId>,
}

impl Compiler {
    fn role(&self, vocab: &Vocabulary, r: &Role) -> Result<RoleRef> {
        Ok(match r {
            Role::Atomic(n) => RoleRef::Atomic(index_of(vocab, n, Sort::Role)?),
            Role::Inverse(n) => RoleRef::Inverse(index_of(vocab, n, Sort::Role)?),
            Role::Universal => RoleRef::Universal,
        })
    }

    fn concept(&mut self, vocab: &Vocabulary, c: &Concept) -> Result<NodeId> {
        if let Some(&id) = self.ids.get(c) {
            return Ok(id);
        }
        let node = match c {
            Concept::Top => Node::Top,
            Concept::Bot => Node::Bot,
            Concept::Name(n) => Node::Name(index_of(vocab, n, Sort::Concept)?),
            Concept::Not(d) => Node::Not(self.concept(vocab, d)?),
            Concept::And(a, b) => Node::And(self.concept(vocab, a)?, self.concept(vocab, b)?),
            Concept::Or(a, b) => Node::Or(self.concept(vocab, a)?, self.concept(vocab, b)?),
            Concept::Nominal(inds) => Node::Nominal(
                inds.iter()
                    .map(|a| index_of(vocab, a, Sort::Individual))
                    .collect::<Result<_>>()?,
            ),
            Concept::Forall(r, d) => Node::Forall(self.role(vocab, r)?, self.concept(vocab, d)?),
            Concept::Exists(r, d) => Node::Exists(self.role(vocab, r)?, self.concept(vocab, d)?),
            Concept::SelfRestriction(r) => Node::SelfRestriction(self.role(vocab, r)?),
            Concept::AtLeast(k, r, d) => {
                Node::AtLeast(*k, self.role(vocab, r)?, self.concept(vocab, d)?)
            }
            Concept::AtMost(k, r, d) => {
                Node::AtMost(*k, self.role(vocab, r)?, self.concept(vocab, d)?)
            }
        };
        let id = self.nodes.len();
        self.nodes.push(node);
        self.ids.insert(c.clone(), id);
        Ok(id)
    }

    fn axiom(&mut self, vocab: &Vocabulary, ax: &Axiom) -> Result<Check> {
        let ind = |a: &str| index_of(vocab, a, Sort::Individual);
        Ok(match ax {
            Axiom::Gci(c, d) => Check::Gci(self.concept(vocab, c)?, self.concept(vocab, d)?),
            Axiom::Ria(chain, sup) => Check::Ria(
                chain
                    .iter()
                    .map(|r| self.role(vocab, r))
                    .collect::<Result<_>>()?,
                self.role(vocab, sup)?,
            ),
            Axiom::Disjoint(r, s) => Check::Disjoint(self.role(vocab, r)?, self.role(vocab, s)?),
            Axiom::ConceptAssertion(c, a) => {
                Check::ConceptAssertion(self.concept(vocab, c)?, ind(a)?)
            }
            Axiom::RoleAssertion(r, a, b) => {
                Check::RoleAssertion(self.role(vocab, r)?, ind(a)?, ind(b)?)
            }
            Axiom::Equality(a, b) => {
                ind(a)?;
                ind(b)?;
                Check::Const(a == b)
            }
            Axiom::Inequality(a, b) => {
                ind(a)?;
                ind(b)?;
                Check::Const(a != b)
            }
        })
    }

    /// Extensions of every node, children first.
    fn evaluate(&self, c: &Candidate) -> Vec<Vec<bool>> {
        let n = c.n;
        let mut ext: Vec<Vec<bool>> = Vec::with_capacity(self.nodes.len());
        let count = |ext: &[Vec<bool>], r: RoleRef, d: NodeId, x: usize| {
            (0..n).filter(|&y| r.holds(c, x, y) && ext[d][y]).count()
        };
        for node in &self.nodes {
            let e: Vec<bool> = match node {
                Node::Top => vec![true; n],
                Node::Bot => vec![false; n],
                Node::Name(i) => c.concepts[*i].clone(),
                Node::Not(d) => ext[*d].iter().map(|b| !b).collect(),
                Node::And(a, b) => (0..n).map(|x| ext[*a][x] && ext[*b][x]).collect(),
                Node::Or(a, b) => (0..n).map(|x| ext[*a][x] || ext[*b][x]).collect(),
                Node::Nominal(inds) => (0..n).map(|x| inds.contains(&x)).collect(),
                Node::Forall(r, d) => (0..n)
                    .map(|x| (0..n).all(|y| !r.holds(c, x, y) || ext[*d][y]))
                    .collect(),
                Node::Exists(r, d) => (0..n)
                    .map(|x| (0..n).any(|y| r.holds(c, x, y) && ext[*d][y]))
                    .collect(),
                Node::SelfRestriction(r) => (0..n).map(|x| r.holds(c, x, x)).collect(),
                Node::AtLeast(k, r, d) => (0..n)
                    .map(|x| count(&ext, *r, *d, x) >= *k as usize)
                    .collect(),
                Node::AtMost(k, r, d) => (0..n)
                    .map(|x| count(&ext, *r, *d, x) <= *k as usize)
                    .collect(),
            };
            ext.push(e);
        }
        ext
    }
}

fn relation(c: &Candidate, r: RoleRef) -> Vec<bool> {
    let n = c.n;
    (0..n * n).map(|k| r.holds(c, k / n, k % n)).collect()
}

fn compose(n: usize, left: &[bool], right: &[bool]) -> Vec<bool> {
    let mut out = vec![false; n * n];
    for x in 0..n {
        for y in (0..n).filter(|&y| left[x * n + y]) {
            for z in 0..n {
                out[x * n + z] |= right[y * n + z];
            }
        }
    }
    out
}

fn holds(check: &Check, c: &Candidate, ext: &[Vec<bool>]) -> bool {
    let n = c.n;
    match check {
        Check::Gci(a, b) => (0..n).all(|x| !ext[*a][x] || ext[*b][x]),
        Check::Ria(chain, sup) => {
            let composed = chain.iter().skip(1).fold(relation(c, chain[0]), |acc, r| {
                compose(n, &acc, &relation(c, *r))
            });
            (0..n * n).all(|k| !composed[k] || sup.holds(c, k / n, k % n))
        }
        Check::Disjoint(r, s) => {
            (0..n * n).all(|k| !(r.holds(c, k / n, k % n) && s.holds(c, k / n, k % n)))
        }
        Check::ConceptAssertion(d, a) => ext[*d][*a],
        Check::RoleAssertion(r, a, b) => r.holds(c, *a, *b),
        Check::Const(b) => *b,
    }
}

/// Memoized concept and role extensions over one interpretation.
#[derive(Debug, Clone)]
pub struct ExtensionTable {
    vocabulary: Vocabulary,
    compiler: Compiler,
    candidate: Candidate,
    ext: Vec<Vec<bool>>,
}

impl ExtensionTable {
    /// Computes the extension of every subexpression of `concepts` in `i`.
    pub fn compute<'a>(
        i: &BoundedInterpretation,
        concepts: impl IntoIterator<Item = &'a Concept>,
    ) -> Result<Self> {
        let mut compiler = Compiler::default();
        for c in concepts {
            compiler.concept(&i.vocabulary, c)?;
        }
        let candidate = Candidate::from_interpretation(i)?;
        let ext = compiler.evaluate(&candidate);
        Ok(ExtensionTable {
            vocabulary: i.vocabulary.clone(),
            compiler,
            candidate,
            ext,
        })
    }

    /// The extension of `c`, if it is a subexpression of the query.
    pub fn concept(&self, c: &Concept) -> Option<BTreeSet<String>> {
        let id = *self.compiler.ids.get(c)?;
        Some(
            self.ext[id]
                .iter()
                .enumerate()
                .filter(|(_, b)| **b)
                .map(|(x, _)| self.vocabulary.individuals[x].clone())
                .collect(),
        )
    }

    /// The extension of a role chain (a single role when `chain.len() == 1`).
    pub fn chain(&self, chain: &[Role]) -> Result<BTreeSet<(String, String)>> {
        let n = self.candidate.n;
        let refs: Vec<RoleRef> = chain
            .iter()
            .map(|r| self.compiler.role(&self.vocabulary, r))
            .collect::<Result<_>>()?;
        let Some((first, rest)) = refs.split_first() else {
            return Ok(BTreeSet::new());
        };
        let rel = rest
            .iter()
            .fold(relation(&self.candidate, *first), |acc, r| {
                compose(n, &acc, &relation(&self.candidate, *r))
            });
        let inds = &self.vocabulary.individuals;
        Ok(rel
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(k, _)| (inds[k / n].clone(), inds[k % n].clone()))
            .collect())
    }
}

/// `r^I` for a role expression.
pub fn extend_role(i: &BoundedInterpretation, r: &Role) -> Result<BTreeSet<(String, String)>> {
    ExtensionTable::compute(i, [])?.chain(std::slice::from_ref(r))
}

/// `C^I` for a concept expression.
pub fn extend_concept(i: &BoundedInterpretation, c: &Concept) -> Result<BTreeSet<String>> {
    let table = ExtensionTable::compute(i, [c])?;
    Ok(table.concept(c).expect("compiled"))
}

/// `I ⊨ α`.
pub fn satisfies_axiom(i: &BoundedInterpretation, ax: &Axiom) -> Result<bool> {
    let mut compiler = Compiler::default();
    let check = compiler.axiom(&i.vocabulary, ax)?;
    let candidate = Candidate::from_interpretation(i)?;
    let ext = compiler.evaluate(&candidate);
    Ok(holds(&check, &candidate, &ext))
}

/// A knowledge base compiled for repeated model checks over a fixed
/// vocabulary.
#[derive(Debug, Clone)]
pub struct ModelChecker {
    vocabulary: Vocabulary,
    compiler: Compiler,
    checks: Vec<Check>,
}

impl ModelChecker {
    /// Compiles `kb` against its own vocabulary.
    pub fn new(kb: &KnowledgeBase) -> Result<Self> {
        Self::over(kb, &kb.vocabulary)
    }

    /// Compiles `axioms` against `vocab`; unknown names are errors.
    pub fn over(kb: &KnowledgeBase, vocab: &Vocabulary) -> Result<Self> {
        Self::for_axioms(kb.axioms(), vocab)
    }

    pub fn for_axioms<'a>(
        axioms: impl IntoIterator<Item = &'a Axiom>,
        vocab: &Vocabulary,
    ) -> Result<Self> {
        let mut compiler = Compiler::default();
        let checks = axioms
            .into_iter()
            .map(|ax| compiler.axiom(vocab, ax))
            .collect::<Result<_>>()?;
        Ok(ModelChecker {
            vocabulary: vocab.clone(),
            compiler,
            checks,
        })
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocabulary
    }

    pub fn is_model(&self, c: &Candidate) -> bool {
        let ext = self.compiler.evaluate(c);
        self.checks.iter().all(|ch| holds(ch, c, &ext))
    }

    /// Per-axiom verdicts, in axiom order.
    pub fn verdicts(&self, c: &Candidate) -> Vec<bool> {
        let ext = self.compiler.evaluate(c);
        self.checks.iter().map(|ch| holds(ch, c, &ext)).collect()
    }

    pub fn is_model_abox(&self, rep: &ABoxRepresentation) -> Result<bool> {
        Ok(self.is_model(&Candidate::from_abox(&self.vocabulary, rep)?))
    }
}

/// `I ⊨ K` for a bounded interpretation over the vocabulary of `kb`.
pub fn is_bounded_model(i: &BoundedInterpretation, kb: &KnowledgeBase) -> Result<bool> {
    if i.vocabulary != kb.vocabulary {
        return Err(Error::Verification(
            "interpretation and knowledge base have different vocabularies".into(),
        ));
    }
    let checker = ModelChecker::new(kb)?;
    Ok(checker.is_model(&Candidate::from_interpretation(i)?))
}

/// Lazily enumerates every bounded model of a knowledge base by testing all
/// `2^(|N_C|·|N_I| + |N_R|·|N_I|²)` candidate interpretations.
#[derive(Debug, Clone)]
pub struct BruteForceModels {
    checker: ModelChecker,
    next: u64,
    end: u64,
}

impl Iterator for BruteForceModels {
    type Item = ABoxRepresentation;

    fn next(&mut self) -> Option<ABoxRepresentation> {
        while self.next < self.end {
            let c = Candidate::from_bits(&self.checker.vocabulary, self.next);
            self.next += 1;
            if self.checker.is_model(&c) {
                return Some(c.to_abox(&self.checker.vocabulary));
            }
        }
        None
    }
}

/// Brute-force enumeration with the cap from [`default_cap`].
pub fn enumerate_bounded_models_bruteforce(kb: &KnowledgeBase) -> Result<BruteForceModels> {
    enumerate_bounded_models_capped(kb, default_cap())
}

pub fn enumerate_bounded_models_capped(kb: &KnowledgeBase, cap: usize) -> Result<BruteForceModels> {
    let bits = kb.vocabulary.candidate_bits();
    if bits > cap || bits >= 63 {
        return Err(Error::CapExceeded { bits, cap });
    }
    Ok(BruteForceModels {
        checker: ModelChecker::new(kb)?,
        next: 0,
        end: 1u64 << bits,
    })
}

/// `K ⊨_bm α`, by checking `α` in every brute-forced bounded model.
pub fn entails_bm_bruteforce(kb: &KnowledgeBase, ax: &Axiom) -> Result<bool> {
    let query = ModelChecker::for_axioms([ax], &kb.vocabulary)?;
    for model in enumerate_bounded_models_bruteforce(kb)? {
        if !query.is_model_abox(&model)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::interpretation_of_abox;
    use crate::parser::parse_kb;

    const EXAMPLE: &str = "Top SubClassOf some r B. Top SubClassOf <= 1 inv(r) Top. \
                           Disjoint(s, r). A(a). A(b). s(a,b).";

    fn example() -> KnowledgeBase {
        parse_kb(EXAMPLE).unwrap()
    }

    fn seven_facts() -> ABoxRepresentation {
        ABoxRepresentation::new([
            Fact::concept("A", "a"),
            Fact::concept("A", "b"),
            Fact::concept("B", "a"),
            Fact::concept("B", "b"),
            Fact::role("s", "a", "b"),
            Fact::role("r", "a", "a"),
            Fact::role("r", "b", "b"),
        ])
    }

    fn model() -> BoundedInterpretation {
        interpretation_of_abox(&example().vocabulary, &seven_facts()).unwrap()
    }

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn pairs(xs: &[(&str, &str)]) -> BTreeSet<(String, String)> {
        xs.iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn role_extensions() {
        let m = model();
        assert_eq!(
            extend_role(&m, &Role::inverse_of("s")).unwrap(),
            pairs(&[("b", "a")])
        );
        assert_eq!(
            extend_role(&m, &Role::Universal).unwrap(),
            pairs(&[("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")])
        );
        assert_eq!(
            extend_role(&m, &Role::atomic("r")).unwrap(),
            pairs(&[("a", "a"), ("b", "b")])
        );
        assert!(matches!(
            extend_role(&m, &Role::atomic("zz")),
            Err(Error::UnknownName { .. })
        ));
    }

    #[test]
    fn concept_extensions_on_worked_example() {
        let m = model();
        let r = Role::atomic("r");
        assert_eq!(
            extend_concept(&m, &Concept::exists(r.clone(), Concept::name("B"))).unwrap(),
            set(&["a", "b"])
        );
        assert_eq!(
            extend_concept(&m, &Concept::at_most(1, r.inverse(), Concept::Top)).unwrap(),
            set(&["a", "b"])
        );
        assert_eq!(
            extend_concept(&m, &Concept::SelfRestriction(r.clone())).unwrap(),
            set(&["a", "b"])
        );
        assert_eq!(
            extend_concept(&m, &Concept::exists(Role::atomic("s"), Concept::Top)).unwrap(),
            set(&["a"])
        );
        assert_eq!(
            extend_concept(&m, &Concept::forall(Role::atomic("s"), Concept::Bot)).unwrap(),
            set(&["b"])
        );
        assert_eq!(
            extend_concept(&m, &Concept::nominal(["b"])).unwrap(),
            set(&["b"])
        );
        assert_eq!(
            extend_concept(
                &m,
                &Concept::at_least(2, Role::Universal, Concept::name("A"))
            )
            .unwrap(),
            set(&["a", "b"])
        );
    }

    #[test]
    fn axioms_on_worked_example() {
        let m = model();
        let sat = |ax: Axiom| satisfies_axiom(&m, &ax).unwrap();
        assert!(sat(Axiom::Disjoint(Role::atomic("s"), Role::atomic("r"))));
        assert!(sat(Axiom::Equality("a".into(), "a".into())));
        assert!(!sat(Axiom::Equality("a".into(), "b".into())));
        assert!(sat(Axiom::Inequality("a".into(), "b".into())));
        assert!(!sat(Axiom::Inequality("b".into(), "b".into())));
        assert!(sat(Axiom::Gci(Concept::Top, Concept::name("B"))));
        assert!(sat(Axiom::Ria(
            vec![Role::atomic("s"), Role::atomic("r")],
            Role::atomic("s")
        )));
        assert!(!sat(Axiom::Ria(
            vec![Role::atomic("s"), Role::inverse_of("s")],
            Role::atomic("s")
        )));
        assert!(sat(Axiom::RoleAssertion(
            Role::inverse_of("s"),
            "b".into(),
            "a".into()
        )));
    }

    #[test]
    fn bounded_model_checks() {
        let kb = example();
        assert!(is_bounded_model(&model(), &kb).unwrap());
        let empty = BoundedInterpretation::empty(kb.vocabulary.clone());
        assert!(!is_bounded_model(&empty, &kb).unwrap());
        let mut facts = seven_facts();
        facts.facts.remove(&Fact::role("r", "b", "b"));
        let broken = interpretation_of_abox(&kb.vocabulary, &facts).unwrap();
        assert!(!is_bounded_model(&broken, &kb).unwrap());
        let verdicts = ModelChecker::new(&kb)
            .unwrap()
            .verdicts(&Candidate::from_interpretation(&broken).unwrap());
        // only the existential GCI fails
        assert_eq!(
            verdicts,
            [true, true, true, false, true, true],
            "axiom order is ABox, TBox, RBox"
        );
    }

    #[test]
    fn brute_force_small_cases() {
        let kb = parse_kb("A(a).").unwrap();
        let models: Vec<_> = enumerate_bounded_models_bruteforce(&kb).unwrap().collect();
        assert_eq!(models, [ABoxRepresentation::new([Fact::concept("A", "a")])]);

        let kb = parse_kb("A(a). Top SubClassOf not A.").unwrap();
        assert_eq!(enumerate_bounded_models_bruteforce(&kb).unwrap().count(), 0);

        let models: Vec<_> = enumerate_bounded_models_bruteforce(&example())
            .unwrap()
            .collect();
        assert!(models.contains(&seven_facts()));
    }

    #[test]
    fn cap_is_enforced() {
        let kb = parse_kb("r(a,b). r(b,c). r(c,d). A(a). B(a).").unwrap();
        // 2·4 + 1·16 = 24 bits fits the default cap, one more role does not
        assert!(enumerate_bounded_models_capped(&kb, 24).is_ok());
        let kb = parse_kb("r(a,b). r(b,c). r(c,d). A(a). B(a). C(a).").unwrap();
        assert!(matches!(
            enumerate_bounded_models_capped(&kb, 24),
            Err(Error::CapExceeded { bits: 28, cap: 24 })
        ));
    }

    #[test]
    fn worked_example_entailments() {
        let kb = example();
        let r = Role::atomic("r");
        let alpha = Axiom::Gci(
            Concept::Top,
            Concept::exists(r.clone(), Concept::exists(r.clone(), Concept::name("B"))),
        );
        let beta = Axiom::Gci(Concept::Top, Concept::name("B"));
        let gamma = Axiom::Gci(Concept::Top, Concept::SelfRestriction(r));
        for ax in [alpha, beta, gamma] {
            assert!(entails_bm_bruteforce(&kb, &ax).unwrap(), "{ax}");
        }
        let not_a = Axiom::Gci(Concept::Top, Concept::not(Concept::name("A")));
        assert!(!entails_bm_bruteforce(&kb, &not_a).unwrap());
    }

    #[test]
    fn candidate_bit_layout_round_trips() {
        let vocab = example().vocabulary;
        for bits in [0u64, 1, 0b1011_0110, (1 << 12) - 1] {
            let c = Candidate::from_bits(&vocab, bits);
            let rep = c.to_abox(&vocab);
            assert_eq!(rep.len(), bits.count_ones() as usize);
            assert_eq!(Candidate::from_abox(&vocab, &rep).unwrap(), c);
        }
    }
}
