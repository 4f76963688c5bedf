//! Text syntax for knowledge bases (`.kb` files).
//!
//! ```text
//! kb       := (stmt ".")*
//! stmt     := concept "SubClassOf" concept
//!           | role ("o" role)* "SubRoleOf" role
//!           | "Disjoint" "(" role "," role ")"
//!           | concept "(" ind ")" | role "(" ind "," ind ")"
//!           | ind "=" ind | ind "!=" ind
//!           | ("individual" | "concept" | "role") name
//! role     := name | "inv" "(" name ")" | "U"
//! concept  := "Top" | "Bot" | name | "not" concept
//!           | concept "and" concept | concept "or" concept
//!           | "{" ind ("," ind)* "}"
//!           | "some" role concept | "only" role concept | "self" role
//!           | ">=" nat role concept | "<=" nat role concept
//!           | "(" concept ")"
//! ```
//!
//! `not`, the quantifiers and the number restrictions bind tighter than
//! `and`, which binds tighter than `or`; both binary connectives associate
//! to the left. `#` starts a comment that runs to the end of the line.

use std::fmt;

use crate::error::{Error, Result, Sort, SourceSpan};
use crate::model::{Axiom, Concept, KnowledgeBase, Role, Vocabulary};

const KEYWORDS: &[&str] = &[
    "Top",
    "Bot",
    "not",
    "and",
    "or",
    "some",
    "only",
    "self",
    "inv",
    "U",
    "o",
    "SubClassOf",
    "SubRoleOf",
    "Disjoint",
    "individual",
    "concept",
    "role",
];

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(u32),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Dot,
    Eq,
    Neq,
    Ge,
    Le,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Nat(n) => write!(f, "`{n}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Neq => f.write_str("`!=`"),
            Tok::Ge => f.write_str("`>=`"),
            Tok::Le => f.write_str("`<=`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, SourceSpan)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    let (mut line, mut col) = (1, 1);

    while let Some(&(offset, c)) = chars.peek() {
        let span = SourceSpan {
            line,
            column: col,
            offset,
        };
        let mut advance = |chars: &mut std::iter::Peekable<std::str::CharIndices>| {
            let (_, c) = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };

        if c.is_whitespace() {
            advance(&mut chars);
            continue;
        }
        if c == '#' {
            while let Some(&(_, c)) = chars.peek() {
                if c == '\n' {
                    break;
                }
                advance(&mut chars);
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(advance(&mut chars));
                } else {
                    break;
                }
            }
            out.push((Tok::Ident(s), span));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(advance(&mut chars));
                } else {
                    break;
                }
            }
            let n = s.parse::<u32>().map_err(|_| Error::Lexical {
                span,
                message: format!("number `{s}` out of range"),
            })?;
            out.push((Tok::Nat(n), span));
            continue;
        }
        advance(&mut chars);
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            '.' => Tok::Dot,
            '=' => Tok::Eq,
            '!' | '>' | '<' => {
                if matches!(chars.peek(), Some(&(_, '='))) {
                    advance(&mut chars);
                    match c {
                        '!' => Tok::Neq,
                        '>' => Tok::Ge,
                        _ => Tok::Le,
                    }
                } else {
                    return Err(Error::Lexical {
                        span,
                        message: format!("expected `=` after `{c}`"),
                    });
                }
            }
            other => {
                return Err(Error::Lexical {
                    span,
                    message: format!("unexpected character `{}`", other.escape_default()),
                })
            }
        };
        out.push((tok, span));
    }
    let end = SourceSpan {
        line,
        column: col,
        offset: text.len(),
    };
    out.push((Tok::Eof, end));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, SourceSpan)>,
    pos: usize,
    /// Names seen in the current statement, for sort-clash spans.
    names: Vec<(String, SourceSpan)>,
}

type PResult<T> = std::result::Result<T, Error>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn span(&self) -> SourceSpan {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        Err(Error::Syntax {
            span: self.span(),
            message: format!("expected {expected}, found {}", self.peek()),
        })
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(&tok.to_string())
        }
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn eat_kw(&mut self, kw: &str) -> bool {
        if self.is_kw(kw) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn name(&mut self, what: &str) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !is_keyword(&s) => {
                self.names.push((s.clone(), self.span()));
                self.bump();
                Ok(s)
            }
            _ => self.error(what),
        }
    }

    fn nat(&mut self) -> PResult<u32> {
        match *self.peek() {
            Tok::Nat(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.error("a number"),
        }
    }

    fn role(&mut self) -> PResult<Role> {
        if self.eat_kw("U") {
            return Ok(Role::Universal);
        }
        if self.is_kw("inv") && *self.peek_at(1) == Tok::LParen {
            self.bump();
            self.bump();
            let n = self.name("a role name")?;
            self.expect(Tok::RParen)?;
            return Ok(Role::Inverse(n));
        }
        Ok(Role::Atomic(self.name("a role")?))
    }

    fn concept(&mut self) -> PResult<Concept> {
        let mut c = self.conjunction()?;
        while self.eat_kw("or") {
            c = Concept::or(c, self.conjunction()?);
        }
        Ok(c)
    }

    fn conjunction(&mut self) -> PResult<Concept> {
        let mut c = self.unary()?;
        while self.eat_kw("and") {
            c = Concept::and(c, self.unary()?);
        }
        Ok(c)
    }

    fn unary(&mut self) -> PResult<Concept> {
        if self.eat_kw("not") {
            return Ok(Concept::not(self.unary()?));
        }
        if self.eat_kw("some") {
            let r = self.role()?;
            return Ok(Concept::exists(r, self.unary()?));
        }
        if self.eat_kw("only") {
            let r = self.role()?;
            return Ok(Concept::forall(r, self.unary()?));
        }
        if self.eat_kw("self") {
            return Ok(Concept::SelfRestriction(self.role()?));
        }
        match self.peek() {
            Tok::Ge => {
                self.bump();
                let n = self.nat()?;
                let r = self.role()?;
                Ok(Concept::at_least(n, r, self.unary()?))
            }
            Tok::Le => {
                self.bump();
                let n = self.nat()?;
                let r = self.role()?;
                Ok(Concept::at_most(n, r, self.unary()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> PResult<Concept> {
        if self.eat_kw("Top") {
            return Ok(Concept::Top);
        }
        if self.eat_kw("Bot") {
            return Ok(Concept::Bot);
        }
        match self.peek() {
            Tok::LParen => {
                self.bump();
                let c = self.concept()?;
                self.expect(Tok::RParen)?;
                Ok(c)
            }
            Tok::LBrace => {
                self.bump();
                let mut inds = vec![self.name("an individual")?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    inds.push(self.name("an individual")?);
                }
                self.expect(Tok::RBrace)?;
                Ok(Concept::Nominal(inds))
            }
            _ => Ok(Concept::Name(self.name("a concept")?)),
        }
    }

    fn role_statement(&mut self) -> PResult<Axiom> {
        let mut chain = vec![self.role()?];
        while self.eat_kw("o") {
            chain.push(self.role()?);
        }
        if self.eat_kw("SubRoleOf") {
            let sup = self.role()?;
            return Ok(Axiom::Ria(chain, sup));
        }
        if chain.len() == 1 && *self.peek() == Tok::LParen {
            self.bump();
            let a = self.name("an individual")?;
            self.expect(Tok::Comma)?;
            let b = self.name("an individual")?;
            self.expect(Tok::RParen)?;
            return Ok(Axiom::RoleAssertion(chain.pop().expect("one role"), a, b));
        }
        self.error("`SubRoleOf`, `o` or a role assertion")
    }

    fn concept_statement(&mut self) -> PResult<Axiom> {
        let c = self.concept()?;
        if self.eat_kw("SubClassOf") {
            let d = self.concept()?;
            return Ok(Axiom::Gci(c, d));
        }
        if *self.peek() == Tok::LParen {
            self.bump();
            let a = self.name("an individual")?;
            self.expect(Tok::RParen)?;
            return Ok(Axiom::ConceptAssertion(c, a));
        }
        self.error("`SubClassOf` or a concept assertion")
    }

    /// One statement without its terminating dot.
    fn statement(&mut self) -> PResult<Statement> {
        if let Tok::Ident(kw) = self.peek().clone() {
            let sort = match kw.as_str() {
                "individual" => Some(Sort::Individual),
                "concept" => Some(Sort::Concept),
                "role" => Some(Sort::Role),
                _ => None,
            };
            if let Some(sort) = sort {
                self.bump();
                return Ok(Statement::Declare(self.name("a name")?, sort));
            }
            if kw == "Disjoint" && *self.peek_at(1) == Tok::LParen {
                self.bump();
                self.bump();
                let r = self.role()?;
                self.expect(Tok::Comma)?;
                let s = self.role()?;
                self.expect(Tok::RParen)?;
                return Ok(Statement::Axiom(Axiom::Disjoint(r, s)));
            }
            if !is_keyword(&kw) && matches!(self.peek_at(1), Tok::Eq | Tok::Neq) {
                let a = self.name("an individual")?;
                let equal = self.bump() == Tok::Eq;
                let b = self.name("an individual")?;
                return Ok(Statement::Axiom(if equal {
                    Axiom::Equality(a, b)
                } else {
                    Axiom::Inequality(a, b)
                }));
            }
        }

        let start = self.pos;
        let role_attempt = self.role_statement();
        if let Ok(ax) = role_attempt {
            return Ok(Statement::Axiom(ax));
        }
        let role_reach = self.pos;
        self.pos = start;
        self.names.clear();
        match self.concept_statement() {
            Ok(ax) => Ok(Statement::Axiom(ax)),
            Err(e) if self.pos >= role_reach => Err(e),
            Err(_) => role_attempt.map(Statement::Axiom),
        }
    }
}

enum Statement {
    Axiom(Axiom),
    Declare(String, Sort),
}

/// Parses a knowledge base. Names are ordered by first use, declarations
/// included.
pub fn parse_kb(text: &str) -> Result<KnowledgeBase> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        names: Vec::new(),
    };
    let mut kb = KnowledgeBase::default();
    while *p.peek() != Tok::Eof {
        p.names.clear();
        let stmt_span = p.span();
        let stmt = p.statement()?;
        p.expect(Tok::Dot)?;
        let located = |e: Error, names: &[(String, SourceSpan)]| match e {
            Error::SortClash {
                name,
                first,
                second,
                ..
            } => {
                let span = names
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map_or(stmt_span, |(_, s)| *s);
                Error::SortClash {
                    name,
                    first,
                    second,
                    span: Some(span),
                }
            }
            other => other,
        };
        match stmt {
            Statement::Declare(name, sort) => kb
                .vocabulary
                .declare(&name, sort)
                .map_err(|e| located(e, &p.names))?,
            Statement::Axiom(ax) => kb.push(ax).map_err(|e| located(e, &p.names))?,
        }
    }
    Ok(kb)
}

/// Parses a single axiom (with or without the trailing dot) whose names
/// must all belong to `vocab`.
pub fn parse_axiom(text: &str, vocab: &Vocabulary) -> Result<Axiom> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        names: Vec::new(),
    };
    let ax = match p.statement()? {
        Statement::Axiom(ax) => ax,
        Statement::Declare(..) => {
            return Err(Error::Syntax {
                span: SourceSpan::default(),
                message: "expected an axiom, found a declaration".into(),
            })
        }
    };
    if *p.peek() == Tok::Dot {
        p.bump();
    }
    if *p.peek() != Tok::Eof {
        return p.error("end of input");
    }
    ax.check_vocabulary(vocab)?;
    Ok(ax)
}

/// Prints `kb` so that [`parse_kb`] gives back a structurally equal
/// knowledge base: TBox, RBox, ABox, then declarations of unused names.
pub fn print_kb(kb: &KnowledgeBase) -> String {
    let mut out = String::new();
    for ax in kb.tbox.iter().chain(&kb.rbox).chain(&kb.abox) {
        out.push_str(&format!("{ax}.\n"));
    }
    let used = crate::model::vocabulary_of(kb).unwrap_or_default();
    for (sort, kw) in [
        (Sort::Individual, "individual"),
        (Sort::Concept, "concept"),
        (Sort::Role, "role"),
    ] {
        for name in kb.vocabulary.set(sort) {
            if !used.set(sort).contains(name) {
                out.push_str(&format!("{kw} {name}.\n"));
            }
        }
    }
    out
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Atomic(n) => f.write_str(n),
            Role::Inverse(n) => write!(f, "inv({n})"),
            Role::Universal => f.write_str("U"),
        }
    }
}

const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_UNARY: u8 = 3;

fn write_concept(f: &mut fmt::Formatter<'_>, c: &Concept, prec: u8) -> fmt::Result {
    let binary = |f: &mut fmt::Formatter<'_>, a, b, op, own| {
        if prec > own {
            f.write_str("(")?;
        }
        write_concept(f, a, own)?;
        write!(f, " {op} ")?;
        write_concept(f, b, own + 1)?;
        if prec > own {
            f.write_str(")")?;
        }
        Ok(())
    };
    match c {
        Concept::Top => f.write_str("Top"),
        Concept::Bot => f.write_str("Bot"),
        Concept::Name(n) => f.write_str(n),
        Concept::Not(c) => {
            f.write_str("not ")?;
            write_concept(f, c, PREC_UNARY)
        }
        Concept::And(a, b) => binary(f, a, b, "and", PREC_AND),
        Concept::Or(a, b) => binary(f, a, b, "or", PREC_OR),
        Concept::Nominal(inds) => write!(f, "{{{}}}", inds.join(", ")),
        Concept::Forall(r, c) => {
            write!(f, "only {r} ")?;
            write_concept(f, c, PREC_UNARY)
        }
        Concept::Exists(r, c) => {
            write!(f, "some {r} ")?;
            write_concept(f, c, PREC_UNARY)
        }
        Concept::SelfRestriction(r) => write!(f, "self {r}"),
        Concept::AtLeast(n, r, c) => {
            write!(f, ">= {n} {r} ")?;
            write_concept(f, c, PREC_UNARY)
        }
        Concept::AtMost(n, r, c) => {
            write!(f, "<= {n} {r} ")?;
            write_concept(f, c, PREC_UNARY)
        }
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_concept(f, self, PREC_OR)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Gci(c, d) => write!(f, "{c} SubClassOf {d}"),
            Axiom::Ria(chain, sup) => {
                let chain: Vec<String> = chain.iter().map(ToString::to_string).collect();
                write!(f, "{} SubRoleOf {sup}", chain.join(" o "))
            }
            Axiom::Disjoint(r, s) => write!(f, "Disjoint({r}, {s})"),
            Axiom::ConceptAssertion(c, a) => match c {
                Concept::Top | Concept::Bot | Concept::Name(_) | Concept::Nominal(_) => {
                    write!(f, "{c}({a})")
                }
                _ => write!(f, "({c})({a})"),
            },
            Axiom::RoleAssertion(r, a, b) => write!(f, "{r}({a}, {b})"),
            Axiom::Equality(a, b) => write!(f, "{a} = {b}"),
            Axiom::Inequality(a, b) => write!(f, "{a} != {b}"),
        }
    }
}
