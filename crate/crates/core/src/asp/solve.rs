//! Answer-set enumeration.
//!
//! Two engines. The naive one grounds the program and tests every subset of
//! the derivable atoms, so it handles any program but only a handful of
//! atoms. The guess engine recognises guess-and-check programs (facts,
//! complementary pairs `p(V) :- not p'(V), G` / `p'(V) :- not p(V), G` over
//! fact-only guards `G`, and constraints), turns each guarded pair instance
//! into one boolean variable and searches depth-first with propagation over
//! the ground constraints. Both yield answer sets in a fixed order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use super::ground::{apply, ground};
use super::semantics::{is_answer_set_ground, unify};
use super::{AnswerSet, Atom, CmpOp, Program, Rule, Term};
use crate::{Error, Result};

/// Largest number of non-fact candidate atoms the naive engine accepts.
pub const DEFAULT_NAIVE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Guess engine when the program has the right shape, naive otherwise.
    #[default]
    Auto,
    Naive,
    Guess,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Auto => "auto",
            Engine::Naive => "naive",
            Engine::Guess => "guess",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub engine: Engine,
    pub naive_cap: usize,
    /// Re-check every answer set against the definition before yielding it.
    pub verify: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            engine: Engine::Auto,
            naive_cap: DEFAULT_NAIVE_CAP,
            verify: true,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub engine: Engine,
    /// Ground rules (naive) or ground constraints (guess).
    pub ground_rules: usize,
    /// Boolean variables of the search, or candidate atoms for naive.
    pub variables: usize,
    pub branches: u64,
    pub answer_sets: usize,
}

/// Answer sets of `p` with default options.
pub fn solve(p: &Program) -> Result<AnswerSets> {
    solve_with(p, SolveOptions::default())
}

pub fn solve_with(p: &Program, opts: SolveOptions) -> Result<AnswerSets> {
    p.check_safety()?;
    let inner = match opts.engine {
        Engine::Naive => Inner::Naive(naive(p, opts.naive_cap)?),
        Engine::Guess => Inner::Guess(Box::new(GuessSearch::new(p)?)),
        Engine::Auto => match GuessSearch::new(p) {
            Ok(g) => Inner::Guess(Box::new(g)),
            Err(guess_err) => match naive(p, opts.naive_cap) {
                Ok(n) => Inner::Naive(n),
                Err(_) => return Err(guess_err),
            },
        },
    };
    let stats = match &inner {
        Inner::Naive(n) => SolveStats {
            engine: Engine::Naive,
            ground_rules: n.ground_rules,
            variables: n.variables,
            ..Default::default()
        },
        Inner::Guess(g) => SolveStats {
            engine: Engine::Guess,
            ground_rules: g.nogoods.len(),
            variables: g.vars.len(),
            ..Default::default()
        },
    };
    let ground_program = if opts.verify { Some(ground(p)?) } else { None };
    Ok(AnswerSets {
        inner,
        stats,
        check: ground_program,
    })
}

/// Lazy sequence of answer sets.
pub struct AnswerSets {
    inner: Inner,
    stats: SolveStats,
    check: Option<Program>,
}

enum Inner {
    Naive(Naive),
    Guess(Box<GuessSearch>),
}

impl AnswerSets {
    pub fn stats(&self) -> SolveStats {
        let mut s = self.stats;
        if let Inner::Guess(g) = &self.inner {
            s.branches = g.branches;
        }
        s
    }
}

impl Iterator for AnswerSets {
    type Item = AnswerSet;

    fn next(&mut self) -> Option<AnswerSet> {
        let next = match &mut self.inner {
            Inner::Naive(n) => n.found.next(),
            Inner::Guess(g) => g.next(),
        }?;
        if let Some(g) = &self.check {
            assert!(
                is_answer_set_ground(g, &next),
                "solver produced a set that is not an answer set: {next}"
            );
        }
        self.stats.answer_sets += 1;
        Some(next)
    }
}

struct Naive {
    found: std::vec::IntoIter<AnswerSet>,
    ground_rules: usize,
    variables: usize,
}

fn naive(p: &Program, cap: usize) -> Result<Naive> {
    let g = ground(p)?;
    let facts: BTreeSet<Atom> = g.facts.iter().cloned().collect();
    let candidates: Vec<Atom> = g
        .rules
        .iter()
        .flat_map(|r| r.head.iter())
        .filter(|a| !facts.contains(*a))
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if candidates.len() > cap {
        return Err(Error::SolverContract(format!(
            "{} candidate atoms exceed the naive engine cap of {cap}",
            candidates.len()
        )));
    }
    let mut found = Vec::new();
    for mask in 0u64..(1u64 << candidates.len()) {
        let mut atoms = facts.clone();
        atoms.extend(
            candidates
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, a)| a.clone()),
        );
        let i = AnswerSet { atoms };
        if is_answer_set_ground(&g, &i) {
            found.push(i);
        }
    }
    found.sort();
    Ok(Naive {
        found: found.into_iter(),
        ground_rules: g.rules.len(),
        variables: candidates.len(),
    })
}

// ---------------------------------------------------------------------------
// Guess engine

type Var = usize;

/// `(v, b)` is true iff variable `v` has value `b`.
type Lit = (Var, bool);

#[derive(Debug, Clone)]
enum Part {
    Lit(Lit),
    /// `#count ⋈ bound` over elements that are conjunctions of literals;
    /// `base` elements are already true.
    Count {
        elems: Vec<Vec<Lit>>,
        base: usize,
        op: CmpOp,
        bound: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    True,
    False,
    Open,
}

/// How a ground atom is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Value {
    True,
    False,
    Lit(Lit),
}

struct GuessPair {
    pos: String,
    neg: String,
    vars: Vec<String>,
    guard: Vec<Atom>,
}

/// Recognises `p(V) :- not q(V), G` where `V` are distinct variables and
/// `G` only uses predicates that never occur in a head.
fn guess_rule(r: &Rule, head_preds: &BTreeSet<&str>) -> Option<GuessPair> {
    let ([h], [n]) = (r.head.as_slice(), r.neg.as_slice()) else {
        return None;
    };
    if !r.counts.is_empty() || n.args != h.args || n.predicate == h.predicate {
        return None;
    }
    let mut vars = Vec::new();
    for t in &h.args {
        match t {
            Term::Var(v) if !vars.contains(v) => vars.push(v.clone()),
            _ => return None,
        }
    }
    if r.pos
        .iter()
        .any(|a| head_preds.contains(a.predicate.as_str()))
    {
        return None;
    }
    Some(GuessPair {
        pos: h.predicate.clone(),
        neg: n.predicate.clone(),
        vars,
        guard: r.pos.clone(),
    })
}

struct GuessSearch {
    /// Positive atom of each variable; variables are in atom order.
    vars: Vec<Atom>,
    /// Atom of the other polarity for each variable.
    complements: Vec<Atom>,
    /// Atoms true in every answer set; atoms that are neither facts nor
    /// variable atoms are false.
    facts: BTreeSet<Atom>,
    nogoods: Vec<Vec<Part>>,
    watches: Vec<Vec<usize>>,
    vals: Vec<Option<bool>>,
    trail: Vec<Var>,
    /// `(trail length before, var, flipped)`.
    decisions: Vec<(usize, Var, bool)>,
    started: bool,
    done: bool,
    branches: u64,
}

fn contract(msg: impl Into<String>) -> Error {
    Error::SolverContract(msg.into())
}

impl GuessSearch {
    fn new(p: &Program) -> Result<Self> {
        let head_preds: BTreeSet<&str> = p
            .rules
            .iter()
            .flat_map(|r| r.head.iter().map(|a| a.predicate.as_str()))
            .collect();
        let facts: BTreeSet<Atom> = p.facts.iter().cloned().collect();

        // Guess pairs, keyed by predicate.
        let mut pairs: BTreeMap<String, GuessPair> = BTreeMap::new();
        let mut constraints = Vec::new();
        for r in &p.rules {
            if r.is_constraint() {
                constraints.push(r);
                continue;
            }
            let g = guess_rule(r, &head_preds).ok_or_else(|| {
                contract(format!(
                    "rule `{r}` is neither a guess rule nor a constraint"
                ))
            })?;
            if pairs.contains_key(&g.pos) {
                return Err(contract(format!(
                    "predicate {} has several guess rules",
                    g.pos
                )));
            }
            pairs.insert(g.pos.clone(), g);
        }

        let instances = |g: &GuessPair| -> BTreeSet<Vec<String>> {
            let mut out = BTreeSet::new();
            let guard: Vec<&Atom> = g.guard.iter().collect();
            let mut b = BTreeMap::new();
            join_facts(&facts, &guard, &mut b, &mut |b| {
                out.insert(
                    g.vars
                        .iter()
                        .map(|v| b.get(v.as_str()).map(|c| c.to_string()))
                        .collect::<Option<Vec<_>>>()
                        .expect("guard binds the head variables (safety)"),
                );
            });
            out
        };

        // Each complementary pair contributes one variable per instance
        // that is not already fixed by a fact.
        let mut value: HashMap<Atom, Value> = HashMap::new();
        let mut vars: Vec<(Atom, Atom)> = Vec::new();
        let mut seen = BTreeSet::new();
        for g in pairs.values() {
            if seen.contains(&g.pos) {
                continue;
            }
            let other = pairs
                .get(&g.neg)
                .filter(|o| o.neg == g.pos)
                .ok_or_else(|| contract(format!("guess rule for {} has no complement", g.pos)))?;
            seen.insert(g.pos.clone());
            seen.insert(other.pos.clone());
            let mine = instances(g);
            if mine != instances(other) {
                return Err(contract(format!(
                    "guess rules for {} and {} have different guards",
                    g.pos, other.pos
                )));
            }
            for args in mine {
                let p_atom = Atom::ground(g.pos.clone(), args.clone());
                let q_atom = Atom::ground(g.neg.clone(), args);
                match (facts.contains(&p_atom), facts.contains(&q_atom)) {
                    (false, false) => vars.push((p_atom, q_atom)),
                    (true, false) => {
                        value.insert(q_atom, Value::False);
                    }
                    (false, true) => {
                        value.insert(p_atom, Value::False);
                    }
                    (true, true) => {}
                }
            }
        }
        vars.sort();
        for (k, (p_atom, q_atom)) in vars.iter().enumerate() {
            value.insert(p_atom.clone(), Value::Lit((k, true)));
            value.insert(q_atom.clone(), Value::Lit((k, false)));
        }
        for f in &facts {
            value.insert(f.clone(), Value::True);
        }

        // Atoms that may be true, for joining constraint bodies.
        let possible: BTreeSet<Atom> = value
            .iter()
            .filter(|(_, v)| **v != Value::False)
            .map(|(a, _)| a.clone())
            .collect();
        let value_of = |a: &Atom| value.get(a).copied().unwrap_or(Value::False);

        let mut nogoods = Vec::new();
        let mut root_conflict = false;
        for r in constraints {
            let pos: Vec<&Atom> = r.pos.iter().collect();
            let mut b = BTreeMap::new();
            let mut err = None;
            join_facts(&possible, &pos, &mut b, &mut |b| {
                if err.is_some() {
                    return;
                }
                let mut parts = Vec::new();
                for a in &r.pos {
                    match value_of(&apply(a, b)) {
                        Value::True => {}
                        Value::False => return,
                        Value::Lit(l) => parts.push(Part::Lit(l)),
                    }
                }
                for a in &r.neg {
                    match value_of(&apply(a, b)) {
                        Value::True => return,
                        Value::False => {}
                        Value::Lit((v, s)) => parts.push(Part::Lit((v, !s))),
                    }
                }
                for c in &r.counts {
                    let head = apply(&c.head, b);
                    let locals: BTreeSet<&str> = c
                        .conditions
                        .iter()
                        .flat_map(|l| l.atom.vars())
                        .filter(|v| !b.contains_key(v))
                        .collect();
                    let head_vars: BTreeSet<&str> = head.vars().collect();
                    if !locals.is_subset(&head_vars) {
                        err = Some(contract(format!(
                            "count in `{r}` has local variables outside its head"
                        )));
                        return;
                    }
                    let mut elems = Vec::new();
                    let mut base = 0;
                    for_each_match(&possible, &head, &mut |hb| {
                        let mut lits = Vec::new();
                        let atoms = std::iter::once((&c.head, true))
                            .chain(c.conditions.iter().map(|l| (&l.atom, l.positive)));
                        for (a, positive) in atoms {
                            let g = apply(&apply(a, b), hb);
                            match (value_of(&g), positive) {
                                (Value::True, true) | (Value::False, false) => {}
                                (Value::True, false) | (Value::False, true) => return,
                                (Value::Lit((v, s)), positive) => lits.push((v, s == positive)),
                            }
                        }
                        lits.sort();
                        lits.dedup();
                        if lits.iter().any(|&(v, s)| lits.contains(&(v, !s))) {
                            return;
                        }
                        if lits.is_empty() {
                            base += 1;
                        } else {
                            elems.push(lits);
                        }
                    });
                    let part = Part::Count {
                        elems,
                        base,
                        op: c.op,
                        bound: c.bound,
                    };
                    match part_status(&part, &[]) {
                        Status::True => {}
                        Status::False => return,
                        Status::Open => parts.push(part),
                    }
                }
                if parts.is_empty() {
                    root_conflict = true;
                }
                nogoods.push(parts);
            });
            if let Some(e) = err {
                return Err(e);
            }
        }

        let mut watches = vec![Vec::new(); vars.len()];
        for (k, ng) in nogoods.iter().enumerate() {
            let mut vs: Vec<Var> = ng
                .iter()
                .flat_map(|p| match p {
                    Part::Lit((v, _)) => vec![*v],
                    Part::Count { elems, .. } => elems.iter().flatten().map(|(v, _)| *v).collect(),
                })
                .collect();
            vs.sort_unstable();
            vs.dedup();
            for v in vs {
                watches[v].push(k);
            }
        }

        let n = vars.len();
        let (vars, complements) = vars.into_iter().unzip();
        Ok(GuessSearch {
            vars,
            complements,
            facts,
            nogoods,
            watches,
            vals: vec![None; n],
            trail: Vec::new(),
            decisions: Vec::new(),
            started: false,
            done: root_conflict,
            branches: 0,
        })
    }

    fn lit_status(&self, (v, s): Lit) -> Status {
        match self.vals[v] {
            None => Status::Open,
            Some(b) if b == s => Status::True,
            Some(_) => Status::False,
        }
    }

    fn assign(&mut self, (v, s): Lit, queue: &mut Vec<usize>) -> bool {
        match self.vals[v] {
            Some(b) => b == s,
            None => {
                self.vals[v] = Some(s);
                self.trail.push(v);
                queue.extend(self.watches[v].iter().copied());
                true
            }
        }
    }

    /// Unit propagation over the nogoods in `queue`; false on conflict.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(k) = queue.pop() {
            let mut open = None;
            let mut n_open = 0;
            let mut inactive = false;
            for (i, part) in self.nogoods[k].iter().enumerate() {
                match part_status(part, &self.vals) {
                    Status::False => {
                        inactive = true;
                        break;
                    }
                    Status::Open => {
                        n_open += 1;
                        open = Some(i);
                    }
                    Status::True => {}
                }
            }
            if inactive || n_open > 1 {
                continue;
            }
            let Some(i) = open else {
                return false;
            };
            // The last open part must fail.
            let forced: Vec<Lit> = match &self.nogoods[k][i] {
                Part::Lit((v, s)) => vec![(*v, !s)],
                Part::Count {
                    elems,
                    base,
                    op,
                    bound,
                } => count_forcing(elems, *base, *op, *bound, |l| self.lit_status(l)),
            };
            for l in forced {
                if !self.assign(l, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let v = self.trail.pop().expect("trail");
            self.vals[v] = None;
        }
    }

    /// Flips the most recent unflipped decision; false when exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some((len, v, flipped)) = self.decisions.pop() {
            self.undo_to(len);
            if flipped {
                continue;
            }
            self.decisions.push((len, v, true));
            self.branches += 1;
            let mut queue = Vec::new();
            self.assign((v, true), &mut queue);
            if self.propagate(queue) {
                return true;
            }
        }
        false
    }

    fn current(&self) -> AnswerSet {
        let mut atoms = self.facts.clone();
        for (v, val) in self.vals.iter().enumerate() {
            if val.expect("complete assignment") {
                atoms.insert(self.vars[v].clone());
            } else {
                atoms.insert(self.complements[v].clone());
            }
        }
        AnswerSet { atoms }
    }

    fn next(&mut self) -> Option<AnswerSet> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.propagate((0..self.nogoods.len()).collect()) {
                self.done = true;
                return None;
            }
        } else if !self.backtrack() {
            self.done = true;
            return None;
        }
        loop {
            match self.vals.iter().position(Option::is_none) {
                None => return Some(self.current()),
                Some(v) => {
                    self.decisions.push((self.trail.len(), v, false));
                    self.branches += 1;
                    let mut queue = Vec::new();
                    self.assign((v, false), &mut queue);
                    if !self.propagate(queue) && !self.backtrack() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

fn elem_status(elem: &[Lit], vals: &[Option<bool>]) -> Status {
    let mut open = false;
    for &(v, s) in elem {
        match vals.get(v).copied().flatten() {
            None => open = true,
            Some(b) if b != s => return Status::False,
            Some(_) => {}
        }
    }
    if open {
        Status::Open
    } else {
        Status::True
    }
}

/// Bounds on the count: `(certainly true, possibly true)`.
fn count_bounds(elems: &[Vec<Lit>], base: usize, vals: &[Option<bool>]) -> (usize, usize) {
    let (mut lo, mut hi) = (base, base);
    for e in elems {
        match elem_status(e, vals) {
            Status::True => {
                lo += 1;
                hi += 1;
            }
            Status::Open => hi += 1,
            Status::False => {}
        }
    }
    (lo, hi)
}

fn part_status(part: &Part, vals: &[Option<bool>]) -> Status {
    match part {
        Part::Lit((v, s)) => match vals.get(*v).copied().flatten() {
            None => Status::Open,
            Some(b) if b == *s => Status::True,
            Some(_) => Status::False,
        },
        Part::Count {
            elems,
            base,
            op,
            bound,
        } => {
            // With no assignment `vals` is empty and every element is open.
            let (lo, hi) = count_bounds(elems, *base, vals);
            let u = *bound as usize;
            let (always, never) = match op {
                CmpOp::Gt => (lo > u, hi <= u),
                CmpOp::Ge => (lo >= u, hi < u),
                CmpOp::Lt => (hi < u, lo >= u),
                CmpOp::Le => (hi <= u, lo > u),
                CmpOp::Eq => (lo == u && hi == u, u < lo || u > hi),
            };
            if always {
                Status::True
            } else if never {
                Status::False
            } else {
                Status::Open
            }
        }
    }
}

/// Literals forced so that an open count comparison comes out false.
fn count_forcing(
    elems: &[Vec<Lit>],
    base: usize,
    op: CmpOp,
    bound: u32,
    status: impl Fn(Lit) -> Status,
) -> Vec<Lit> {
    let statuses: Vec<Status> = elems
        .iter()
        .map(|e| {
            let mut open = false;
            for &l in e {
                match status(l) {
                    Status::False => return Status::False,
                    Status::Open => open = true,
                    Status::True => {}
                }
            }
            if open {
                Status::Open
            } else {
                Status::True
            }
        })
        .collect();
    let lo = base + statuses.iter().filter(|s| **s == Status::True).count();
    let hi = lo + statuses.iter().filter(|s| **s == Status::Open).count();
    let u = bound as usize;
    // Largest count still allowed, or smallest count required.
    let at_most = match op {
        CmpOp::Gt => Some(u),
        CmpOp::Ge => u.checked_sub(1),
        _ => None,
    };
    let at_least = match op {
        CmpOp::Lt => Some(u),
        CmpOp::Le => Some(u + 1),
        _ => None,
    };
    let mut out = Vec::new();
    if at_most == Some(lo) {
        // No further element may become true.
        for (e, s) in elems.iter().zip(&statuses) {
            if *s != Status::Open {
                continue;
            }
            let open: Vec<Lit> = e
                .iter()
                .copied()
                .filter(|&l| status(l) == Status::Open)
                .collect();
            if let [(v, s)] = open.as_slice() {
                out.push((*v, !s));
            }
        }
    } else if at_least == Some(hi) {
        // Every element that can be true must be.
        for (e, s) in elems.iter().zip(&statuses) {
            if *s == Status::Open {
                out.extend(e.iter().copied().filter(|&l| status(l) == Status::Open));
            }
        }
    }
    out
}

fn join_facts<'a>(
    atoms: &'a BTreeSet<Atom>,
    pattern: &[&'a Atom],
    binding: &mut BTreeMap<&'a str, &'a str>,
    found: &mut dyn FnMut(&BTreeMap<&'a str, &'a str>),
) {
    let Some((first, rest)) = pattern.split_first() else {
        found(binding);
        return;
    };
    let grounded = apply(first, binding);
    if grounded.is_ground() {
        if let Some(a) = atoms.get(&grounded) {
            let before = binding.clone();
            if unify(first, a, binding) {
                join_facts(atoms, rest, binding, found);
            }
            *binding = before;
        }
        return;
    }
    for a in atoms
        .range(Atom::new(first.predicate.clone(), Vec::new())..)
        .take_while(|a| a.predicate == first.predicate)
    {
        let before = binding.clone();
        if unify(first, a, binding) {
            join_facts(atoms, rest, binding, found);
        }
        *binding = before;
    }
}

/// Calls `found` with the binding of every atom of `atoms` matching `head`.
fn for_each_match(
    atoms: &BTreeSet<Atom>,
    head: &Atom,
    found: &mut dyn FnMut(&BTreeMap<&str, &str>),
) {
    let mut b = BTreeMap::new();
    join_facts(atoms, &[head], &mut b, found);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asp::is_answer_set;

    fn a(p: &str) -> Atom {
        Atom::ground(p, Vec::<String>::new())
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

    fn all(p: &Program, engine: Engine) -> Vec<AnswerSet> {
        solve_with(
            p,
            SolveOptions {
                engine,
                ..Default::default()
            },
        )
        .unwrap()
        .collect()
    }

    #[test]
    fn even_loop_both_engines() {
        let p = program(vec![rule(&["a"], &[], &["b"]), rule(&["b"], &[], &["a"])]);
        let expected = vec![AnswerSet::new([a("a")]), AnswerSet::new([a("b")])];
        assert_eq!(all(&p, Engine::Naive), expected);
        let mut guess = all(&p, Engine::Guess);
        guess.sort();
        assert_eq!(guess, expected);
    }

    #[test]
    fn unreachable_requirement() {
        let p = program(vec![rule(&[], &[], &["a"])]);
        assert!(all(&p, Engine::Auto).is_empty());
    }

    #[test]
    fn disjunction_needs_naive() {
        let p = program(vec![rule(&["a", "b"], &[], &[])]);
        assert!(solve_with(
            &p,
            SolveOptions {
                engine: Engine::Guess,
                ..Default::default()
            }
        )
        .is_err());
        assert_eq!(all(&p, Engine::Auto).len(), 2);
    }

    fn guess_program() -> Program {
        let x = || Term::var("X");
        let y = || Term::var("Y");
        let mut p = Program::new();
        for c in ["a", "b", "c"] {
            p.add_fact(Atom::ground("top", [c]));
        }
        p.add_rule(Rule {
            head: vec![Atom::new("r", vec![x(), y()])],
            pos: vec![Atom::new("top", vec![x()]), Atom::new("top", vec![y()])],
            neg: vec![Atom::new("nr", vec![x(), y()])],
            counts: vec![],
        });
        p.add_rule(Rule {
            head: vec![Atom::new("nr", vec![x(), y()])],
            pos: vec![Atom::new("top", vec![x()]), Atom::new("top", vec![y()])],
            neg: vec![Atom::new("r", vec![x(), y()])],
            counts: vec![],
        });
        // Every element has exactly one successor.
        for op in [CmpOp::Lt, CmpOp::Gt] {
            p.add_rule(Rule::constraint(
                vec![Atom::new("top", vec![x()])],
                vec![],
                vec![super::super::CountExpr {
                    head: Atom::new("r", vec![x(), y()]),
                    conditions: vec![],
                    op,
                    bound: 1,
                }],
            ));
        }
        p
    }

    #[test]
    fn count_constraints_propagate() {
        let p = guess_program();
        let sols = all(&p, Engine::Guess);
        assert_eq!(sols.len(), 27);
        for s in &sols {
            assert!(is_answer_set(&p, s));
        }
    }
}
