//! End-to-end reasoning tasks: satisfiability, model extraction and
//! enumeration, and entailment under the bounded-model semantics.
//!
//! Every task runs `normalize → translate → solve → project`. Each model
//! handed out is checked against the original knowledge base with the
//! [`oracle`](crate::oracle) unless verification is switched off.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use crate::asp::{solve_with, AnswerSets, Engine, SolveOptions};
use crate::model::{ABoxRepresentation, Axiom, Concept, KnowledgeBase};
use crate::normalize::normalize;
use crate::oracle::ModelChecker;
use crate::translate::{translate, Translation};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Satisfiability,
    Entailment,
    Extraction,
    Enumeration,
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Task::Satisfiability => "check-sat",
            Task::Entailment => "entails",
            Task::Extraction => "extract",
            Task::Enumeration => "models",
        })
    }
}

/// Best-effort counters; not covered by any determinism guarantee.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub engine: Engine,
    pub ground_rules: usize,
    pub variables: usize,
    pub branches: u64,
    pub models: usize,
    pub elapsed: Duration,
}

impl fmt::Display for Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "engine={} ground_rules={} variables={} branches={} models={} elapsed={:.3}s",
            self.engine,
            self.ground_rules,
            self.variables,
            self.branches,
            self.models,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReasoningResult {
    pub task: Task,
    /// Satisfiable, or entailed.
    pub verdict: bool,
    /// A model when satisfiable, a countermodel when not entailed.
    pub witness: Option<ABoxRepresentation>,
    pub stats: Stats,
}

impl ReasoningResult {
    pub fn is_sat(&self) -> bool {
        self.task == Task::Satisfiability && self.verdict
    }

    pub fn is_entailed(&self) -> bool {
        self.task == Task::Entailment && self.verdict
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reasoner {
    /// Check every model against the original knowledge base.
    pub verify: bool,
    pub solve: SolveOptions,
}

impl Default for Reasoner {
    fn default() -> Self {
        Reasoner {
            verify: true,
            solve: SolveOptions::default(),
        }
    }
}

impl Reasoner {
    pub fn new() -> Self {
        Self::default()
    }

    /// Skips the oracle check of models and the answer-set re-check.
    pub fn unverified() -> Self {
        Reasoner {
            verify: false,
            solve: SolveOptions {
                verify: false,
                ..SolveOptions::default()
            },
        }
    }

    /// Compiles `kb` to its program.
    pub fn compile(&self, kb: &KnowledgeBase) -> Result<Translation> {
        if kb.vocabulary.individuals.is_empty() {
            return Err(Error::NoIndividuals);
        }
        translate(&normalize(kb))
    }

    /// The distinct bounded models of `kb`, in a fixed order, at most
    /// `limit` of them.
    pub fn enumerate_models(&self, kb: &KnowledgeBase, limit: Option<usize>) -> Result<Models> {
        let translation = self.compile(kb)?;
        let answer_sets = solve_with(&translation.program, self.solve)?;
        let checker = if self.verify {
            Some(ModelChecker::new(kb)?)
        } else {
            None
        };
        Ok(Models {
            translation,
            answer_sets,
            checker,
            seen: HashSet::new(),
            remaining: limit,
            started: Instant::now(),
        })
    }

    /// The first model in enumeration order, if any.
    pub fn extract_model(&self, kb: &KnowledgeBase) -> Result<Option<ABoxRepresentation>> {
        self.enumerate_models(kb, Some(1))?.next().transpose()
    }

    pub fn check_sat(&self, kb: &KnowledgeBase) -> Result<ReasoningResult> {
        let mut models = self.enumerate_models(kb, Some(1))?;
        let witness = models.next().transpose()?;
        Ok(ReasoningResult {
            task: Task::Satisfiability,
            verdict: witness.is_some(),
            witness,
            stats: models.stats(),
        })
    }

    /// `kb ⊨_bm ax`: `ax` holds in every bounded model of `kb`. Names in
    /// `ax` must belong to the vocabulary of `kb`, since new individuals
    /// would change the domain.
    pub fn entails(&self, kb: &KnowledgeBase, ax: &Axiom) -> Result<ReasoningResult> {
        ax.check_vocabulary(&kb.vocabulary)?;
        let query = ModelChecker::for_axioms([ax], &kb.vocabulary)?;
        let mut models = self.enumerate_models(kb, None)?;
        let mut countermodel = None;
        for m in models.by_ref() {
            let m = m?;
            if !query.is_model_abox(&m)? {
                countermodel = Some(m);
                break;
            }
        }
        Ok(ReasoningResult {
            task: Task::Entailment,
            verdict: countermodel.is_none(),
            witness: countermodel,
            stats: models.stats(),
        })
    }
}

/// Lazy sequence of bounded models; see [`Reasoner::enumerate_models`].
pub struct Models {
    translation: Translation,
    answer_sets: AnswerSets,
    checker: Option<ModelChecker>,
    seen: HashSet<ABoxRepresentation>,
    remaining: Option<usize>,
    started: Instant,
}

impl Models {
    pub fn translation(&self) -> &Translation {
        &self.translation
    }

    pub fn stats(&self) -> Stats {
        let s = self.answer_sets.stats();
        Stats {
            engine: s.engine,
            ground_rules: s.ground_rules,
            variables: s.variables,
            branches: s.branches,
            models: self.seen.len(),
            elapsed: self.started.elapsed(),
        }
    }
}

impl Iterator for Models {
    type Item = Result<ABoxRepresentation>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == Some(0) {
            return None;
        }
        for i in self.answer_sets.by_ref() {
            let model = self.translation.project(&i);
            // Auxiliary names can make several answer sets project to the
            // same model.
            if !self.seen.insert(model.clone()) {
                continue;
            }
            if let Some(checker) = &self.checker {
                match checker.is_model_abox(&model) {
                    Ok(true) => {}
                    Ok(false) => {
                        return Some(Err(Error::Verification(format!(
                            "answer set projects to a non-model: {i}"
                        ))))
                    }
                    Err(e) => return Some(Err(e)),
                }
            }
            if let Some(r) = &mut self.remaining {
                *r -= 1;
            }
            return Some(Ok(model));
        }
        None
    }
}

/// `K ∪ {⊤ ⊑ {a1, …, an}} ∪ {ai ≉ aj | i < j}`: under the classical
/// semantics its models are exactly the bounded models of `K` (up to
/// renaming the domain).
pub fn axiomatize_bm(kb: &KnowledgeBase) -> Result<KnowledgeBase> {
    let inds: Vec<String> = kb.vocabulary.individuals.iter().cloned().collect();
    if inds.is_empty() {
        return Err(Error::NoIndividuals);
    }
    let mut out = kb.clone();
    out.push(Axiom::Gci(Concept::Top, Concept::Nominal(inds.clone())))?;
    for (i, a) in inds.iter().enumerate() {
        for b in &inds[i + 1..] {
            out.push(Axiom::Inequality(a.clone(), b.clone()))?;
        }
    }
    Ok(out)
}

/// A propositional literal `p_var` or `¬p_var`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SatLiteral {
    pub var: u32,
    pub positive: bool,
}

impl SatLiteral {
    pub fn pos(var: u32) -> Self {
        SatLiteral {
            var,
            positive: true,
        }
    }

    pub fn neg(var: u32) -> Self {
        SatLiteral {
            var,
            positive: false,
        }
    }

    /// `A_p` or `¬A_p`.
    pub fn concept(&self) -> Concept {
        let a = Concept::name(format!("p{}", self.var));
        if self.positive {
            a
        } else {
            Concept::not(a)
        }
    }
}

/// The one-individual knowledge base `{⊤(a), ⊤ ⊑ ⊓_clauses ⊔_literals C_l}`,
/// bounded-model satisfiable iff the clause set is satisfiable.
pub fn reduce_3sat(clauses: &[Vec<SatLiteral>]) -> KnowledgeBase {
    let mut kb = KnowledgeBase::default();
    kb.push(Axiom::ConceptAssertion(Concept::Top, "a".into()))
        .expect("fresh knowledge base");
    if !clauses.is_empty() {
        let cnf = Concept::and_all(
            clauses
                .iter()
                .map(|c| Concept::or_all(c.iter().map(SatLiteral::concept))),
        );
        kb.push(Axiom::Gci(Concept::Top, cnf))
            .expect("concept names only");
    }
    kb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Fact;
    use crate::parser::{parse_axiom, parse_kb};

    const WORKED: &str = "Top SubClassOf some r B. Top SubClassOf <= 1 inv(r) Top. \
                          Disjoint(s, r). A(a). A(b). s(a, b).";

    #[test]
    fn worked_example() {
        let kb = parse_kb(WORKED).unwrap();
        let r = Reasoner::new();
        assert!(r.check_sat(&kb).unwrap().is_sat());
        for q in [
            "Top SubClassOf some r some r B",
            "Top SubClassOf B",
            "Top SubClassOf self r",
        ] {
            let ax = parse_axiom(q, &kb.vocabulary).unwrap();
            assert!(r.entails(&kb, &ax).unwrap().is_entailed(), "{q}");
        }
        let ax = parse_axiom("Top SubClassOf not A", &kb.vocabulary).unwrap();
        let res = r.entails(&kb, &ax).unwrap();
        assert!(!res.verdict);
        assert!(res.witness.unwrap().contains(&Fact::concept("A", "a")));
    }

    #[test]
    fn unsat_kb() {
        let kb = parse_kb("A(a). Top SubClassOf not A.").unwrap();
        let res = Reasoner::new().check_sat(&kb).unwrap();
        assert!(!res.verdict);
        assert!(res.witness.is_none());
        assert_eq!(Reasoner::new().extract_model(&kb).unwrap(), None);
    }

    #[test]
    fn two_models() {
        let kb = parse_kb("concept A. Top(a).").unwrap();
        let models: Vec<_> = Reasoner::new()
            .enumerate_models(&kb, None)
            .unwrap()
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(models.len(), 2);
        let first = Reasoner::new().extract_model(&kb).unwrap().unwrap();
        assert_eq!(first, models[0]);
    }

    #[test]
    fn axiomatization() {
        let kb = parse_kb("A(a). r(a, b).").unwrap();
        let bm = axiomatize_bm(&kb).unwrap();
        assert_eq!(bm.len(), kb.len() + 2);
        assert!(bm
            .tbox
            .contains(&Axiom::Gci(Concept::Top, Concept::nominal(["a", "b"]))));
        assert!(bm.abox.contains(&Axiom::Inequality("a".into(), "b".into())));
        assert!(axiomatize_bm(&KnowledgeBase::default()).is_err());
    }

    #[test]
    fn sat_reduction() {
        let r = Reasoner::new();
        let sat = reduce_3sat(&[vec![
            SatLiteral::pos(1),
            SatLiteral::neg(2),
            SatLiteral::pos(3),
        ]]);
        assert!(r.check_sat(&sat).unwrap().verdict);
        let unsat = reduce_3sat(&[vec![SatLiteral::pos(1)], vec![SatLiteral::neg(1)]]);
        assert!(!r.check_sat(&unsat).unwrap().verdict);
        assert!(r.check_sat(&reduce_3sat(&[])).unwrap().verdict);
    }

    #[test]
    fn universal_role_points_to_oracle() {
        let kb = parse_kb("Top SubClassOf only U A. A(a).").unwrap();
        let err = Reasoner::new().check_sat(&kb).unwrap_err();
        assert!(err.to_string().contains("oracle"), "{err}");
    }

    #[test]
    fn foreign_names_in_query_are_rejected() {
        let kb = parse_kb("A(a).").unwrap();
        let ax = parse_axiom("B(a)", &Default::default());
        assert!(ax.is_err() || Reasoner::new().entails(&kb, &ax.unwrap()).is_err());
    }
}
