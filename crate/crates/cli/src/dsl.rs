//! The declaration/query language.
//!
//! ```text
//! A = (T=[0.3,0.4] U [0.45,0.5], I={0.1}, F={0.6} U [0.66,0.7]);
//! B = (T={0.5}, I={0}, F={0.5});
//! eval !A;
//! eval A -> B;
//! classify A \/ B;
//! table A (+) B;
//! ```
//!
//! Precedence, tightest first: `!`, `/\`, then `\/` `(+)` `|` `nor` (left
//! associative), then `->` (right associative), then `<->`. `#` starts a
//! comment that runs to the end of the line.

use std::collections::BTreeMap;
use std::fmt;

use neutrosophic_core::nsset::parse_set_prefix;
use neutrosophic_core::{Connective, Error as CoreError, Expr, NLValue, NsSet};

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DslError {
    #[error("{pos}: syntax error: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        pos: Pos,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("{pos}: syntax error: {message}")]
    BadLiteral { pos: Pos, message: &'static str },
    #[error("{pos}: invalid value: {source}")]
    Value { pos: Pos, source: CoreError },
    #[error("{pos}: `{name}` is already assigned")]
    DuplicateAssignment { pos: Pos, name: String },
    #[error("{pos}: unbound atom `{name}`")]
    UnboundAtom { pos: Pos, name: String },
}

impl DslError {
    pub fn pos(&self) -> Pos {
        match self {
            DslError::Syntax { pos, .. }
            | DslError::BadLiteral { pos, .. }
            | DslError::Value { pos, .. }
            | DslError::DuplicateAssignment { pos, .. }
            | DslError::UnboundAtom { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Assign { name: String, value: NLValue },
    Eval(Expr),
    Classify(Expr),
    Table(Expr),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Program {
    pub statements: Vec<Statement>,
    /// Start of each statement, parallel to `statements`. Empty for programs
    /// built in code.
    pub positions: Vec<Pos>,
}

impl Program {
    pub fn position(&self, index: usize) -> Pos {
        self.positions.get(index).copied().unwrap_or_default()
    }

    /// Checks single assignment and that every queried atom is assigned
    /// earlier. `table` substitutes its own values and is exempt.
    pub fn validate(&self) -> Result<(), DslError> {
        let mut bound: BTreeMap<&str, ()> = BTreeMap::new();
        for (k, stmt) in self.statements.iter().enumerate() {
            let pos = self.position(k);
            match stmt {
                Statement::Assign { name, .. } => {
                    if bound.insert(name, ()).is_some() {
                        return Err(DslError::DuplicateAssignment {
                            pos,
                            name: name.clone(),
                        });
                    }
                }
                Statement::Eval(e) | Statement::Classify(e) => {
                    if let Some(name) = e.atoms().into_iter().find(|a| !bound.contains_key(a)) {
                        return Err(DslError::UnboundAtom {
                            pos,
                            name: name.to_string(),
                        });
                    }
                }
                Statement::Table(_) => {}
            }
        }
        Ok(())
    }
}

const KEYWORDS: [&str; 4] = ["eval", "classify", "table", "nor"];

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn position_of(&self, offset: usize) -> Pos {
        let before = &self.src[..offset];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |i| i + 1);
        Pos {
            line,
            col: before[line_start..].chars().count() + 1,
        }
    }

    fn here(&self) -> Pos {
        self.position_of(self.pos)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_trivia(&mut self) {
        loop {
            let rest = self.rest();
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                break;
            }
        }
    }

    fn found(&self) -> String {
        match self.rest().chars().next() {
            None => "end of input".into(),
            Some(c) if c.is_alphanumeric() || c == '_' => {
                format!(
                    "`{}`",
                    self.rest()
                        .split(|c: char| !(c.is_alphanumeric() || c == '_'))
                        .next()
                        .unwrap_or("")
                )
            }
            Some(c) => format!("`{c}`"),
        }
    }

    fn syntax(&self, expected: &[&'static str]) -> DslError {
        DslError::Syntax {
            pos: self.here(),
            expected: expected.to_vec(),
            found: self.found(),
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_trivia();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &'static str) -> Result<(), DslError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.syntax(&[tok]))
        }
    }

    fn peek_ident(&mut self) -> Option<&'a str> {
        self.skip_trivia();
        let rest = self.rest();
        let first = rest.chars().next()?;
        if !(first.is_ascii_alphabetic() || first == '_') {
            return None;
        }
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        Some(&rest[..len])
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.peek_ident() == Some(kw) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn program(&mut self) -> Result<Program, DslError> {
        let mut program = Program::default();
        loop {
            self.skip_trivia();
            if self.rest().is_empty() {
                return Ok(program);
            }
            program.positions.push(self.here());
            let stmt = self.statement()?;
            program.statements.push(stmt);
        }
    }

    fn statement(&mut self) -> Result<Statement, DslError> {
        let stmt = match self.peek_ident() {
            Some("eval") => {
                self.pos += 4;
                Statement::Eval(self.expr()?)
            }
            Some("classify") => {
                self.pos += 8;
                Statement::Classify(self.expr()?)
            }
            Some("table") => {
                self.pos += 5;
                Statement::Table(self.expr()?)
            }
            Some(name) if !KEYWORDS.contains(&name) => {
                self.pos += name.len();
                self.expect("=")?;
                let value = self.triple()?;
                Statement::Assign {
                    name: name.to_string(),
                    value,
                }
            }
            _ => return Err(self.syntax(&["identifier", "`eval`", "`classify`", "`table`"])),
        };
        self.expect(";")?;
        Ok(stmt)
    }

    fn component(&mut self, label: &'static str) -> Result<NsSet, DslError> {
        if !self.eat_keyword(label) {
            return Err(self.syntax(&[label]));
        }
        self.expect("=")?;
        self.skip_trivia();
        let start = self.pos;
        match parse_set_prefix(self.rest()) {
            Ok((set, used)) => {
                self.pos += used;
                Ok(set)
            }
            Err(CoreError::Parse { offset, message }) => Err(DslError::BadLiteral {
                pos: self.position_of(start + offset),
                message,
            }),
            Err(source) => Err(DslError::Value {
                pos: self.position_of(start),
                source,
            }),
        }
    }

    fn triple(&mut self) -> Result<NLValue, DslError> {
        self.expect("(")?;
        let start = self.here();
        let t = self.component("T")?;
        self.expect(",")?;
        let i = self.component("I")?;
        self.expect(",")?;
        let f = self.component("F")?;
        self.expect(")")?;
        NLValue::new(t, i, f).map_err(|source| DslError::Value { pos: start, source })
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.implication()?;
        while self.eat("<->") {
            let rhs = self.implication()?;
            lhs = Expr::bin(Connective::Iff, lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Expr, DslError> {
        let lhs = self.disjunction()?;
        if self.eat("->") {
            let rhs = self.implication()?;
            return Ok(Expr::bin(Connective::Imp, lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction_op(&mut self) -> Option<Connective> {
        if self.eat("\\/") {
            Some(Connective::Or)
        } else if self.eat("(+)") {
            Some(Connective::Xor)
        } else if self.eat("|") {
            Some(Connective::Nand)
        } else if self.eat_keyword("nor") {
            Some(Connective::Nor)
        } else {
            None
        }
    }

    fn disjunction(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.conjunction()?;
        while let Some(op) = self.disjunction_op() {
            let rhs = self.conjunction()?;
            lhs = Expr::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.unary()?;
        while self.eat("/\\") {
            let rhs = self.unary()?;
            lhs = Expr::bin(Connective::And, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, DslError> {
        if self.eat("!") {
            return Ok(Expr::not(self.unary()?));
        }
        self.skip_trivia();
        if !self.rest().starts_with("(+)") && self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        match self.peek_ident() {
            Some(name) if !KEYWORDS.contains(&name) => {
                self.pos += name.len();
                Ok(Expr::atom(name))
            }
            _ => Err(self.syntax(&["identifier", "`!`", "`(`"])),
        }
    }
}

/// Parses and validates a program.
pub fn parse_program(text: &str) -> Result<Program, DslError> {
    let program = Parser { src: text, pos: 0 }.program()?;
    program.validate()?;
    Ok(program)
}

/// Parses a single expression, e.g. for `table` from the command line.
pub fn parse_expr(text: &str) -> Result<Expr, DslError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_trivia();
    if !p.rest().is_empty() {
        return Err(p.syntax(&["end of expression"]));
    }
    Ok(e)
}

/// Parses a `(T=..., I=..., F=...)` literal.
pub fn parse_value(text: &str) -> Result<NLValue, DslError> {
    let mut p = Parser { src: text, pos: 0 };
    let v = p.triple()?;
    p.skip_trivia();
    if !p.rest().is_empty() {
        return Err(p.syntax(&["end of value"]));
    }
    Ok(v)
}

pub fn connective_symbol(op: Connective) -> &'static str {
    match op {
        Connective::And => "/\\",
        Connective::Or => "\\/",
        Connective::Xor => "(+)",
        Connective::Imp => "->",
        Connective::Iff => "<->",
        Connective::Nand => "|",
        Connective::Nor => "nor",
    }
}

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Atom(_) => 6,
        Expr::Not(_) => 5,
        Expr::Bin(op, ..) => match op {
            Connective::And => 4,
            Connective::Or | Connective::Xor | Connective::Nand | Connective::Nor => 3,
            Connective::Imp => 2,
            Connective::Iff => 1,
        },
    }
}

/// Renders an expression with the fewest parentheses that parse back to the
/// same tree.
pub struct ExprDisplay<'a>(pub &'a Expr);

impl fmt::Display for ExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
            if parens {
                write!(f, "({})", ExprDisplay(e))
            } else {
                write!(f, "{}", ExprDisplay(e))
            }
        }
        let e = self.0;
        match e {
            Expr::Atom(name) => f.write_str(name),
            Expr::Not(inner) => {
                f.write_str("!")?;
                child(f, inner, precedence(inner) < 5)
            }
            Expr::Bin(op, l, r) => {
                let p = precedence(e);
                let right_assoc = *op == Connective::Imp;
                child(
                    f,
                    l,
                    precedence(l) < p || (precedence(l) == p && right_assoc),
                )?;
                write!(f, " {} ", connective_symbol(*op))?;
                child(
                    f,
                    r,
                    precedence(r) < p || (precedence(r) == p && !right_assoc),
                )
            }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Assign { name, value } => write!(f, "{name} = {value};"),
            Statement::Eval(e) => write!(f, "eval {};", ExprDisplay(e)),
            Statement::Classify(e) => write!(f, "classify {};", ExprDisplay(e)),
            Statement::Table(e) => write!(f, "table {};", ExprDisplay(e)),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for stmt in &self.statements {
            writeln!(f, "{stmt}")?;
        }
        Ok(())
    }
}
