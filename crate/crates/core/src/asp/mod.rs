//! A small answer set programming kernel.
//!
//! Programs are finite sets of (disjunctive) rules with default negation in
//! the body and `#count` expressions. [`ground`] instantiates variables over
//! the constants of the program, [`gl_reduct`] and [`is_answer_set`] follow
//! the Gelfond–Lifschitz definition literally, and [`solve`] enumerates
//! answer sets either naively (any program, few atoms) or by branching on the
//! guess atoms of guess-and-check programs.

mod emit;
mod ground;
mod semantics;
mod solve;

use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexSet;

pub use emit::emit_text;
pub use ground::{ground, universe};
pub use semantics::{count_holds, gl_reduct, is_answer_set, satisfies};
pub use solve::{
    solve, solve_with, AnswerSets, Engine, SolveOptions, SolveStats, DEFAULT_NAIVE_CAP,
};

/// A constant or a variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Const(String),
    Var(String),
}

impl Term {
    pub fn constant(s: impl Into<String>) -> Self {
        Term::Const(s.into())
    }

    pub fn var(s: impl Into<String>) -> Self {
        Term::Var(s.into())
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }
}

/// `p(t1, …, tn)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Atom {
            predicate: predicate.into(),
            args,
        }
    }

    /// A ground atom over constants.
    pub fn ground<S: Into<String>>(
        predicate: impl Into<String>,
        args: impl IntoIterator<Item = S>,
    ) -> Self {
        Atom::new(
            predicate,
            args.into_iter().map(|a| Term::Const(a.into())).collect(),
        )
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn is_ground(&self) -> bool {
        !self.args.iter().any(Term::is_var)
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v.as_str()),
            Term::Const(_) => None,
        })
    }
}

/// A possibly default-negated atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal {
            atom,
            positive: true,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal {
            atom,
            positive: false,
        }
    }
}

/// Comparison of a `#count` expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CmpOp {
    Le,
    Lt,
    Eq,
    Gt,
    Ge,
}

impl CmpOp {
    pub fn holds(self, n: usize, bound: u32) -> bool {
        let u = bound as usize;
        match self {
            CmpOp::Le => n <= u,
            CmpOp::Lt => n < u,
            CmpOp::Eq => n == u,
            CmpOp::Gt => n > u,
            CmpOp::Ge => n >= u,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Le => "<=",
            CmpOp::Lt => "<",
            CmpOp::Eq => "=",
            CmpOp::Gt => ">",
            CmpOp::Ge => ">=",
        }
    }
}

/// `#count{ l : l1, …, li } ⋈ u`: the number of distinct ground instances of
/// `head` that are true and whose conditions hold, compared with `bound`.
/// Variables that occur only here are local to the expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CountExpr {
    pub head: Atom,
    pub conditions: Vec<Literal>,
    pub op: CmpOp,
    pub bound: u32,
}

impl CountExpr {
    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.head
            .vars()
            .chain(self.conditions.iter().flat_map(|l| l.atom.vars()))
    }
}

/// `h1 | … | hn :- b1, …, bk, not bk+1, …, not bm, counts`. An empty head
/// makes the rule a constraint.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub head: Vec<Atom>,
    pub pos: Vec<Atom>,
    pub neg: Vec<Atom>,
    pub counts: Vec<CountExpr>,
}

impl Rule {
    pub fn constraint(pos: Vec<Atom>, neg: Vec<Atom>, counts: Vec<CountExpr>) -> Self {
        Rule {
            head: Vec::new(),
            pos,
            neg,
            counts,
        }
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    pub fn is_ground(&self) -> bool {
        self.head
            .iter()
            .chain(&self.pos)
            .chain(&self.neg)
            .all(Atom::is_ground)
            && self.counts.iter().all(|c| {
                let outer = self.outer_vars();
                c.vars().all(|v| !outer.contains(v))
            })
    }

    /// Variables of the head, the bodies, and those count variables that
    /// also occur outside their count expression.
    pub fn outer_vars(&self) -> BTreeSet<&str> {
        self.head
            .iter()
            .chain(&self.pos)
            .chain(&self.neg)
            .flat_map(Atom::vars)
            .collect()
    }

    /// Local variables of a count expression of this rule.
    pub fn local_vars<'a>(&'a self, count: &'a CountExpr) -> Vec<&'a str> {
        let outer = self.outer_vars();
        let mut seen = Vec::new();
        for v in count.vars() {
            if !outer.contains(v) && !seen.contains(&v) {
                seen.push(v);
            }
        }
        seen
    }

    /// Every variable must occur in the positive body; count-local variables
    /// must occur in a positive atom of their count expression.
    pub fn check_safety(&self) -> Result<(), String> {
        if self.head.is_empty()
            && self.pos.is_empty()
            && self.neg.is_empty()
            && self.counts.is_empty()
        {
            return Err("empty rule".into());
        }
        let bound: BTreeSet<&str> = self.pos.iter().flat_map(Atom::vars).collect();
        for v in self.head.iter().chain(&self.neg).flat_map(Atom::vars) {
            if !bound.contains(v) {
                return Err(format!("variable {v} does not occur in the positive body"));
            }
        }
        for c in &self.counts {
            let local_bound: BTreeSet<&str> = c
                .head
                .vars()
                .chain(
                    c.conditions
                        .iter()
                        .filter(|l| l.positive)
                        .flat_map(|l| l.atom.vars()),
                )
                .collect();
            for v in self.local_vars(c) {
                if !local_bound.contains(v) {
                    return Err(format!(
                        "count variable {v} is not bound by a positive atom"
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A finite set of rules together with ground facts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Program {
    pub rules: Vec<Rule>,
    pub facts: IndexSet<Atom>,
}

impl Program {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_rule(&mut self, rule: Rule) {
        self.rules.push(rule);
    }

    /// Adds a ground fact.
    pub fn add_fact(&mut self, atom: Atom) {
        debug_assert!(atom.is_ground(), "fact {atom} is not ground");
        self.facts.insert(atom);
    }

    pub fn extend(&mut self, other: Program) {
        self.rules.extend(other.rules);
        self.facts.extend(other.facts);
    }

    pub fn is_ground(&self) -> bool {
        self.rules.iter().all(Rule::is_ground)
    }

    pub fn check_safety(&self) -> crate::Result<()> {
        for r in &self.rules {
            r.check_safety()
                .map_err(|e| crate::Error::UnsafeRule(format!("{r}: {e}")))?;
        }
        Ok(())
    }
}

/// A set of ground atoms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnswerSet {
    pub atoms: BTreeSet<Atom>,
}

impl AnswerSet {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Self {
        AnswerSet {
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.atoms.contains(a)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn is_subset(&self, other: &AnswerSet) -> bool {
        self.atoms.is_subset(&other.atoms)
    }
}

impl fmt::Display for AnswerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms: Vec<String> = self.atoms.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", atoms.join(", "))
    }
}
