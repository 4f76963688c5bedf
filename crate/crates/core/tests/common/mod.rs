//! Generators and independent reference implementations shared by the
//! integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bounded_dl::asp::{
    is_answer_set, AnswerSet, Atom, CmpOp, CountExpr, Literal, Program, Rule, Term,
};
use bounded_dl::error::Sort;
use bounded_dl::oracle::{Candidate, ModelChecker};
use bounded_dl::reasoner::SatLiteral;
use bounded_dl::{ABoxRepresentation, Axiom, Concept, KnowledgeBase, Role, Vocabulary};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size limits for [`random_kb`].
#[derive(Debug, Clone, Copy)]
pub struct KbShape {
    pub individuals: usize,
    pub concepts: usize,
    pub roles: usize,
    pub axioms: usize,
    pub depth: usize,
}

pub const SMALL: KbShape = KbShape {
    individuals: 2,
    concepts: 2,
    roles: 1,
    axioms: 3,
    depth: 2,
};

struct Names {
    individuals: Vec<String>,
    concepts: Vec<String>,
    roles: Vec<String>,
}

impl Names {
    fn individual(&self, g: &mut impl Rng) -> String {
        self.individuals.choose(g).unwrap().clone()
    }

    fn role(&self, g: &mut impl Rng) -> Option<Role> {
        let name = self.roles.choose(g)?.clone();
        Some(if g.gen_bool(0.3) {
            Role::inverse_of(name)
        } else {
            Role::atomic(name)
        })
    }

    fn concept(&self, g: &mut impl Rng, depth: usize) -> Concept {
        let leaf = depth == 0 || g.gen_bool(0.3);
        if leaf {
            return match g.gen_range(0..6) {
                0 => Concept::Top,
                1 => Concept::Bot,
                2 => {
                    let k = g.gen_range(1..=self.individuals.len());
                    let picked: Vec<String> =
                        self.individuals.choose_multiple(g, k).cloned().collect();
                    Concept::nominal(picked)
                }
                3 => match self.role(g) {
                    Some(r) => Concept::SelfRestriction(r),
                    None => Concept::Top,
                },
                _ => match self.concepts.choose(g) {
                    Some(c) => Concept::name(c.clone()),
                    None => Concept::Top,
                },
            };
        }
        let sub = |g: &mut ChaCha8Rng| self.concept(g, depth - 1);
        let mut g2 = ChaCha8Rng::seed_from_u64(g.gen());
        let role = self.role(g);
        match (g.gen_range(0..7), role) {
            (0, _) => Concept::not(sub(&mut g2)),
            (1, _) => Concept::and(sub(&mut g2), sub(&mut g2)),
            (2, _) => Concept::or(sub(&mut g2), sub(&mut g2)),
            (3, Some(r)) => Concept::forall(r, sub(&mut g2)),
            (4, Some(r)) => Concept::exists(r, sub(&mut g2)),
            (5, Some(r)) => Concept::at_least(g.gen_range(1..=2), r, sub(&mut g2)),
            (6, Some(r)) => Concept::at_most(g.gen_range(0..=2), r, sub(&mut g2)),
            _ => Concept::not(sub(&mut g2)),
        }
    }

    fn axiom(&self, g: &mut ChaCha8Rng, depth: usize) -> Axiom {
        let role = self.role(g);
        match (g.gen_range(0..10), role) {
            (0..=3, _) => Axiom::Gci(self.concept(g, depth), self.concept(g, depth)),
            (4, Some(_)) => {
                let len = g.gen_range(1..=3);
                let chain = (0..len).map(|_| self.role(g).unwrap()).collect();
                let name = self.roles.choose(g).unwrap().clone();
                Axiom::Ria(chain, Role::atomic(name))
            }
            (5, Some(r)) => Axiom::Disjoint(r, self.role(g).unwrap()),
            (6, Some(r)) => Axiom::RoleAssertion(r, self.individual(g), self.individual(g)),
            (7, _) if g.gen_bool(0.5) => Axiom::Equality(self.individual(g), self.individual(g)),
            (7, _) => Axiom::Inequality(self.individual(g), self.individual(g)),
            _ => Axiom::ConceptAssertion(self.concept(g, depth), self.individual(g)),
        }
    }
}

/// A random knowledge base within `shape`, covering every constructor
/// except the universal role. Every declared name is part of the
/// vocabulary even when no axiom mentions it.
pub fn random_kb(seed: u64, shape: KbShape) -> KnowledgeBase {
    let mut g = rng(seed);
    let names = Names {
        individuals: (0..g.gen_range(1..=shape.individuals))
            .map(|i| format!("a{i}"))
            .collect(),
        concepts: (0..g.gen_range(0..=shape.concepts))
            .map(|i| format!("A{i}"))
            .collect(),
        roles: (0..g.gen_range(0..=shape.roles))
            .map(|i| format!("r{i}"))
            .collect(),
    };
    let mut vocab = Vocabulary::new();
    for (set, sort) in [
        (&names.individuals, Sort::Individual),
        (&names.concepts, Sort::Concept),
        (&names.roles, Sort::Role),
    ] {
        for n in set {
            vocab.declare(n, sort).unwrap();
        }
    }
    let axioms: Vec<Axiom> = (0..g.gen_range(0..=shape.axioms))
        .map(|_| names.axiom(&mut g, shape.depth))
        .collect();
    KnowledgeBase::with_declarations(vocab, axioms).unwrap()
}

/// Every model of `checker` among the interpretations of its vocabulary,
/// without going through the enumeration helpers of the library.
pub fn all_models(checker: &ModelChecker) -> BTreeSet<ABoxRepresentation> {
    let vocab = checker.vocabulary();
    let bits = vocab.candidate_bits();
    assert!(bits <= 24, "{bits} bits is too many to enumerate");
    (0..1u64 << bits)
        .map(|b| Candidate::from_bits(vocab, b))
        .filter(|c| checker.is_model(c))
        .map(|c| c.to_abox(vocab))
        .collect()
}

/// Number of ways to complete a `box_size²` Sudoku grid, by plain
/// backtracking over cells.
pub fn count_sudoku(box_size: usize, givens: &[(usize, usize, usize)]) -> usize {
    let n = box_size * box_size;
    let mut grid = vec![0usize; n * n];
    for &(r, c, v) in givens {
        grid[(r - 1) * n + (c - 1)] = v;
    }
    fn ok(grid: &[usize], n: usize, b: usize, idx: usize, v: usize) -> bool {
        let (r, c) = (idx / n, idx % n);
        for k in 0..n {
            if (k != c && grid[r * n + k] == v) || (k != r && grid[k * n + c] == v) {
                return false;
            }
        }
        let (br, bc) = (r / b * b, c / b * b);
        for rr in br..br + b {
            for cc in bc..bc + b {
                if (rr, cc) != (r, c) && grid[rr * n + cc] == v {
                    return false;
                }
            }
        }
        true
    }
    fn go(grid: &mut Vec<usize>, n: usize, b: usize, idx: usize) -> usize {
        if idx == n * n {
            return 1;
        }
        if grid[idx] != 0 {
            return if ok(grid, n, b, idx, grid[idx]) {
                go(grid, n, b, idx + 1)
            } else {
                0
            };
        }
        let mut total = 0;
        for v in 1..=n {
            if ok(grid, n, b, idx, v) {
                grid[idx] = v;
                total += go(grid, n, b, idx + 1);
                grid[idx] = 0;
            }
        }
        total
    }
    go(&mut grid, n, box_size, 0)
}

/// A random clause set over `vars` variables: 1 to 3 literals per clause.
pub fn random_cnf(g: &mut impl Rng, vars: u32, clauses: usize) -> Vec<Vec<SatLiteral>> {
    (0..clauses)
        .map(|_| {
            (0..g.gen_range(1..=3))
                .map(|_| {
                    let v = g.gen_range(1..=vars);
                    if g.gen_bool(0.5) {
                        SatLiteral::pos(v)
                    } else {
                        SatLiteral::neg(v)
                    }
                })
                .collect()
        })
        .collect()
}

/// Satisfiability by truth table.
pub fn truth_table_sat(vars: u32, clauses: &[Vec<SatLiteral>]) -> bool {
    (0..1u32 << vars).any(|bits| {
        clauses.iter().all(|cl| {
            cl.iter()
                .any(|l| (bits >> (l.var - 1) & 1 == 1) == l.positive)
        })
    })
}

fn prop(i: usize) -> Atom {
    Atom::ground(format!("p{i}"), Vec::<String>::new())
}

/// A random ground program over at most `atoms` propositional atoms, with
/// disjunctive heads, default negation and count constraints.
pub fn random_ground_program(g: &mut impl Rng, atoms: usize) -> Program {
    let mut p = Program::new();
    let pick = |g: &mut dyn rand::RngCore, k: usize| -> Vec<Atom> {
        (0..k).map(|_| prop(g.gen_range(0..atoms))).collect()
    };
    for _ in 0..g.gen_range(1..=atoms + 2) {
        let head_len = match g.gen_range(0..10) {
            0..=1 => 0,
            2..=7 => 1,
            _ => 2,
        };
        let (pos_len, neg_len) = (g.gen_range(0..=2), g.gen_range(0..=2));
        let mut rule = Rule {
            head: pick(g, head_len),
            pos: pick(g, pos_len),
            neg: pick(g, neg_len),
            counts: Vec::new(),
        };
        if rule.head.is_empty() && g.gen_bool(0.3) {
            rule.counts.push(CountExpr {
                head: Atom::new("one", vec![Term::constant("t")]),
                conditions: vec![Literal::pos(prop(g.gen_range(0..atoms)))],
                op: [CmpOp::Le, CmpOp::Lt, CmpOp::Eq, CmpOp::Gt, CmpOp::Ge][g.gen_range(0..5)],
                bound: g.gen_range(0..=1),
            });
            if g.gen_bool(0.5) {
                rule.counts[0].head = prop(g.gen_range(0..atoms));
                rule.counts[0].conditions.clear();
            }
        }
        if rule.head.is_empty()
            && rule.pos.is_empty()
            && rule.neg.is_empty()
            && rule.counts.is_empty()
        {
            rule.pos = pick(g, 1);
        }
        p.add_rule(rule);
    }
    p
}

/// A random guess-and-check program over `consts` constants: the pair
/// `c_k(X) :- dom(X), not nc_k(X).` and `nc_k(X) :- dom(X), not c_k(X).`
/// for each `k`, plus constraints over them, some with counts.
pub fn random_guess_program(g: &mut impl Rng, preds: usize, consts: usize) -> Program {
    let mut p = Program::new();
    let x = || Term::var("X");
    let y = || Term::var("Y");
    for k in 0..consts {
        p.add_fact(Atom::ground("dom", [format!("d{k}")]));
    }
    for i in 0..preds {
        let (c, nc) = (format!("c{i}"), format!("nc{i}"));
        for (h, n) in [(&c, &nc), (&nc, &c)] {
            p.add_rule(Rule {
                head: vec![Atom::new(h.clone(), vec![x()])],
                pos: vec![Atom::new("dom", vec![x()])],
                neg: vec![Atom::new(n.clone(), vec![x()])],
                counts: Vec::new(),
            });
        }
    }
    let lit = |g: &mut dyn rand::RngCore, v: Term| {
        let i = g.gen_range(0..preds);
        let name = if g.gen_bool(0.5) {
            format!("c{i}")
        } else {
            format!("nc{i}")
        };
        Atom::new(name, vec![v])
    };
    for _ in 0..g.gen_range(1..=4) {
        let mut pos = vec![Atom::new("dom", vec![x()])];
        for _ in 0..g.gen_range(0..=2) {
            pos.push(lit(g, x()));
        }
        let mut counts = Vec::new();
        if g.gen_bool(0.4) {
            let cond = lit(g, y());
            counts.push(CountExpr {
                head: cond.clone(),
                conditions: vec![Literal::pos(cond)],
                op: [CmpOp::Le, CmpOp::Lt, CmpOp::Eq, CmpOp::Gt, CmpOp::Ge][g.gen_range(0..5)],
                bound: g.gen_range(0..=consts as u32),
            });
        }
        p.add_rule(Rule::constraint(pos, Vec::new(), counts));
    }
    p
}

/// Every ground atom that `p` can mention: predicates of `p` applied to
/// tuples of its constants, keeping the arity each predicate is used with.
pub fn herbrand_base(p: &Program) -> Vec<Atom> {
    let universe: Vec<String> = bounded_dl::asp::universe(p).into_iter().collect();
    let mut preds = BTreeSet::new();
    let mut note = |a: &Atom| {
        preds.insert((a.predicate.clone(), a.arity()));
    };
    p.facts.iter().for_each(&mut note);
    for r in &p.rules {
        r.head
            .iter()
            .chain(&r.pos)
            .chain(&r.neg)
            .for_each(&mut note);
        for c in &r.counts {
            note(&c.head);
            c.conditions.iter().for_each(|l| note(&l.atom));
        }
    }
    let mut out = Vec::new();
    for (pred, arity) in preds {
        let mut idx = vec![0; arity];
        loop {
            out.push(Atom::ground(
                pred.clone(),
                idx.iter().map(|&i| universe[i].clone()),
            ));
            let mut k = 0;
            while k < arity {
                idx[k] += 1;
                if idx[k] < universe.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == arity {
                break;
            }
        }
    }
    out
}

/// Answer sets of `p` by checking every set of atoms that contains the
/// facts against the definition.
pub fn exhaustive_answer_sets(p: &Program) -> BTreeSet<AnswerSet> {
    let open: Vec<Atom> = herbrand_base(p)
        .into_iter()
        .filter(|a| !p.facts.contains(a))
        .collect();
    assert!(
        open.len() <= 16,
        "{} atoms is too many to enumerate",
        open.len()
    );
    (0..1u32 << open.len())
        .map(|bits| {
            let chosen = open.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1);
            AnswerSet::new(
                p.facts
                    .iter()
                    .cloned()
                    .chain(chosen.map(|(_, a)| a.clone())),
            )
        })
        .filter(|i| is_answer_set(p, i))
        .collect()
}
