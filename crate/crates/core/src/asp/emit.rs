//! Solver-compatible text output.

use std::collections::BTreeSet;
use std::fmt;

use super::{Atom, CountExpr, Literal, Program, Rule, Term};

fn is_plain_constant(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        Some(c) if c.is_ascii_digit() => s.chars().all(|c| c.is_ascii_digit()),
        _ => false,
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) if is_plain_constant(c) => f.write_str(c),
            // Anything else would read as a variable or fail to lex.
            Term::Const(c) => write!(f, "\"{}\"", c.replace('\\', "\\\\").replace('"', "\\\"")),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, t) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{t}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("not ")?;
        }
        write!(f, "{}", self.atom)
    }
}

impl fmt::Display for CountExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&count_text(self, &BTreeSet::new()))
    }
}

// The tuple lists the head variables not fixed by the rule, so distinct
// tuples are distinct head atoms.
fn count_text(c: &CountExpr, outer: &BTreeSet<&str>) -> String {
    let mut tuple: Vec<&str> = Vec::new();
    for v in c.head.vars() {
        if !outer.contains(v) && !tuple.contains(&v) {
            tuple.push(v);
        }
    }
    let tuple = if tuple.is_empty() {
        "0".to_string()
    } else {
        tuple.join(",")
    };
    let mut out = format!("#count{{ {tuple} : {}", c.head);
    for l in &c.conditions {
        out.push_str(&format!(", {l}"));
    }
    out.push_str(&format!(" }} {} {}", c.op.symbol(), c.bound));
    out
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outer = self.outer_vars();
        let head: Vec<String> = self.head.iter().map(ToString::to_string).collect();
        f.write_str(&head.join(" | "))?;
        let body: Vec<String> = self
            .pos
            .iter()
            .map(ToString::to_string)
            .chain(self.neg.iter().map(|a| format!("not {a}")))
            .chain(self.counts.iter().map(|c| count_text(c, &outer)))
            .collect();
        if !body.is_empty() {
            if !head.is_empty() {
                f.write_str(" ")?;
            }
            write!(f, ":- {}", body.join(", "))?;
        }
        f.write_str(".")
    }
}

/// One fact or rule per line, facts first, in program order.
pub fn emit_text(p: &Program) -> String {
    let mut out = String::new();
    for a in &p.facts {
        out.push_str(&format!("{a}.\n"));
    }
    for r in &p.rules {
        out.push_str(&format!("{r}\n"));
    }
    out
}
