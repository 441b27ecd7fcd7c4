//! Reader for the TPTP FOF subset this crate emits.
//!
//! Checks syntax and closedness only; it is used to confirm that emitted
//! problems are well formed and read back to the formulas they came from.

use thiserror::Error;

use crate::fol::{Formula, Term};
use crate::translator::{Role, TptpFormula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct TptpSyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LowerWord(String),
    UpperWord(String),
    Dollar(String),
    Punct(&'static str),
    Eof,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

const PUNCT: [&str; 17] = [
    "<~>", "<=>", "=>", "<=", "~|", "~&", "!=", "(", ")", "[", "]", ",", ".", ":", "&", "|", "~",
];

impl<'a> Lexer<'a> {
    fn skip_space(&mut self) {
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c == b'%' {
                while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else if c.is_ascii_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) {
        if self.src[self.pos] == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        self.pos += 1;
    }

    fn next(&mut self) -> Result<(Tok, usize, usize), TptpSyntaxError> {
        self.skip_space();
        let (line, col) = (self.line, self.col);
        if self.pos >= self.src.len() {
            return Ok((Tok::Eof, line, col));
        }
        let rest = &self.src[self.pos..];
        for p in PUNCT {
            if rest.starts_with(p.as_bytes()) {
                for _ in 0..p.len() {
                    self.bump();
                }
                return Ok((Tok::Punct(p), line, col));
            }
        }
        for (p, tok) in [("!", "!"), ("?", "?"), ("=", "=")] {
            if rest.starts_with(p.as_bytes()) {
                self.bump();
                return Ok((Tok::Punct(tok), line, col));
            }
        }
        let c = rest[0];
        if c.is_ascii_alphabetic() || c == b'$' {
            let start = self.pos;
            self.bump();
            while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                self.bump();
            }
            let word = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
            let tok = if c == b'$' {
                Tok::Dollar(word)
            } else if c.is_ascii_uppercase() {
                Tok::UpperWord(word)
            } else {
                Tok::LowerWord(word)
            };
            return Ok((tok, line, col));
        }
        Err(TptpSyntaxError {
            line,
            column: col,
            message: format!("unexpected character `{}`", c as char),
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, TptpSyntaxError> {
        let mut lexer = Lexer {
            src: text.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        };
        let (tok, line, col) = lexer.next()?;
        Ok(Parser { lexer, tok, line, col })
    }

    fn advance(&mut self) -> Result<Tok, TptpSyntaxError> {
        let (tok, line, col) = self.lexer.next()?;
        self.line = line;
        self.col = col;
        Ok(std::mem::replace(&mut self.tok, tok))
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, TptpSyntaxError> {
        Err(TptpSyntaxError {
            line: self.line,
            column: self.col,
            message: message.into(),
        })
    }

    fn expect(&mut self, p: &'static str) -> Result<(), TptpSyntaxError> {
        if self.tok == Tok::Punct(p) {
            self.advance()?;
            Ok(())
        } else {
            self.error(format!("expected `{p}`, found {:?}", self.tok))
        }
    }

    fn lower_word(&mut self) -> Result<String, TptpSyntaxError> {
        match self.advance()? {
            Tok::LowerWord(w) => Ok(w),
            other => self.error(format!("expected a lower-case word, found {other:?}")),
        }
    }

    fn annotated(&mut self) -> Result<TptpFormula, TptpSyntaxError> {
        let kw = self.lower_word()?;
        if kw != "fof" {
            return self.error(format!("expected `fof`, found `{kw}`"));
        }
        self.expect("(")?;
        let name = self.lower_word()?;
        self.expect(",")?;
        let role = match self.lower_word()?.as_str() {
            "axiom" => Role::Axiom,
            "conjecture" => Role::Conjecture,
            other => return self.error(format!("unsupported role `{other}`")),
        };
        self.expect(",")?;
        let formula = self.formula()?;
        self.expect(")")?;
        self.expect(".")?;
        if let Some(v) = formula.free_vars().first() {
            return self.error(format!("formula `{name}` has free variable {v}"));
        }
        Ok(TptpFormula { name, role, formula })
    }

    fn formula(&mut self) -> Result<Formula, TptpSyntaxError> {
        let first = self.unit()?;
        let op = match &self.tok {
            Tok::Punct(p @ ("&" | "|" | "=>" | "<=" | "<=>" | "<~>" | "~|" | "~&")) => *p,
            _ => return Ok(first),
        };
        self.advance()?;
        if op == "&" || op == "|" {
            let mut members = vec![first, self.unit()?];
            while self.tok == Tok::Punct(op) {
                self.advance()?;
                members.push(self.unit()?);
            }
            return Ok(if op == "&" { Formula::And(members) } else { Formula::Or(members) });
        }
        let second = self.unit()?;
        Ok(match op {
            "=>" => Formula::implies(first, second),
            "<=" => Formula::implies(second, first),
            "<=>" => Formula::iff(first, second),
            "<~>" => Formula::not(Formula::iff(first, second)),
            "~|" => Formula::not(Formula::Or(vec![first, second])),
            _ => Formula::not(Formula::And(vec![first, second])),
        })
    }

    fn unit(&mut self) -> Result<Formula, TptpSyntaxError> {
        match self.tok.clone() {
            Tok::Punct("~") => {
                self.advance()?;
                Ok(Formula::not(self.unit()?))
            }
            Tok::Punct(q @ ("!" | "?")) => {
                self.advance()?;
                self.expect("[")?;
                let mut vars = Vec::new();
                loop {
                    match self.advance()? {
                        Tok::UpperWord(v) => vars.push(v),
                        other => return self.error(format!("expected a variable, found {other:?}")),
                    }
                    if self.tok == Tok::Punct(",") {
                        self.advance()?;
                    } else {
                        break;
                    }
                }
                self.expect("]")?;
                self.expect(":")?;
                let body = Box::new(self.unit()?);
                Ok(if q == "!" { Formula::Forall(vars, body) } else { Formula::Exists(vars, body) })
            }
            Tok::Punct("(") => {
                self.advance()?;
                let f = self.formula()?;
                self.expect(")")?;
                Ok(f)
            }
            Tok::Dollar(w) if w == "$true" || w == "$false" => {
                self.advance()?;
                Ok(if w == "$true" { Formula::True } else { Formula::False })
            }
            _ => self.atomic(),
        }
    }

    fn atomic(&mut self) -> Result<Formula, TptpSyntaxError> {
        let lhs = self.term()?;
        match self.tok {
            Tok::Punct("=") => {
                self.advance()?;
                Ok(Formula::eq(lhs, self.term()?))
            }
            Tok::Punct("!=") => {
                self.advance()?;
                Ok(Formula::not(Formula::eq(lhs, self.term()?)))
            }
            _ => match lhs {
                Term::Const(p) => Ok(Formula::prop(p)),
                Term::App(p, args) => Ok(Formula::atom(p, args)),
                Term::Var(v) => self.error(format!("variable {v} used as a formula")),
            },
        }
    }

    fn term(&mut self) -> Result<Term, TptpSyntaxError> {
        match self.advance()? {
            Tok::UpperWord(v) => Ok(Term::Var(v)),
            Tok::LowerWord(f) => {
                if self.tok != Tok::Punct("(") {
                    return Ok(Term::Const(f));
                }
                self.advance()?;
                let mut args = vec![self.term()?];
                while self.tok == Tok::Punct(",") {
                    self.advance()?;
                    args.push(self.term()?);
                }
                self.expect(")")?;
                Ok(Term::App(f, args))
            }
            other => self.error(format!("expected a term, found {other:?}")),
        }
    }
}

/// Parses a problem into its annotated formulas, rejecting malformed or open formulas.
pub fn parse_tptp(text: &str) -> Result<Vec<TptpFormula>, TptpSyntaxError> {
    let mut p = Parser::new(text)?;
    let mut out: Vec<TptpFormula> = Vec::new();
    while p.tok != Tok::Eof {
        let f = p.annotated()?;
        if out.iter().any(|g| g.name == f.name) {
            return p.error(format!("duplicate formula name `{}`", f.name));
        }
        if f.role == Role::Conjecture && out.iter().any(|g| g.role == Role::Conjecture) {
            return p.error("more than one conjecture");
        }
        out.push(f);
    }
    Ok(out)
}
