//! Reader and writer for OWL 2 functional-style syntax (`.ofn`).
//!
//! Supported grammar, with `#` comments running to end of line:
//!
//! ```text
//! document   := prefix* 'Ontology' '(' [iri] axiom* ')'
//! prefix     := 'Prefix' '(' pname ':' '=' full-iri ')'
//! axiom      := 'Declaration' '(' entity ')'
//!             | 'SubClassOf' '(' ce ce ')'
//!             | ('EquivalentClasses' | 'DisjointClasses') '(' ce ce+ ')'
//!             | 'SubObjectPropertyOf' '(' (ope | chain) ope ')'
//!             | ('EquivalentObjectProperties' | 'DisjointObjectProperties') '(' ope ope+ ')'
//!             | 'InverseObjectProperties' '(' ope ope ')'
//!             | <Characteristic>'ObjectProperty' '(' ope ')'
//!             | ('ObjectPropertyDomain' | 'ObjectPropertyRange') '(' ope ce ')'
//!             | 'ClassAssertion' '(' ce ind ')'
//!             | ('ObjectPropertyAssertion' | 'NegativeObjectPropertyAssertion') '(' ope ind ind ')'
//!             | ('SameIndividual' | 'DifferentIndividuals') '(' ind ind+ ')'
//! chain      := 'ObjectPropertyChain' '(' ope ope+ ')'
//! ope        := iri | 'ObjectInverseOf' '(' ope ')'
//! ce         := iri | 'ObjectIntersectionOf' '(' ce ce+ ')' | 'ObjectUnionOf' '(' ce ce+ ')'
//!             | 'ObjectComplementOf' '(' ce ')' | 'ObjectOneOf' '(' ind+ ')'
//!             | ('ObjectSomeValuesFrom' | 'ObjectAllValuesFrom') '(' ope ce ')'
//!             | 'ObjectHasValue' '(' ope ind ')' | 'ObjectHasSelf' '(' ope ')'
//!             | ('ObjectMinCardinality' | 'ObjectMaxCardinality' | 'ObjectExactCardinality')
//!               '(' n ope [ce] ')'
//! ```
//!
//! Any other OWL 2 keyword is rejected with an "unsupported construct" error.

use std::fmt;

use thiserror::Error;

use crate::model::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if let Some(expected) = &self.expected {
            write!(f, " (expected {expected})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Equals,
    FullIri(String),
    /// Bare word containing a colon, e.g. `:hasUncle` or `owl:Thing`.
    PrefixedName(String, String),
    Keyword(String),
    Integer(u32),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Equals => "`=`".into(),
            Tok::FullIri(s) => format!("`<{s}>`"),
            Tok::PrefixedName(p, l) => format!("`{p}:{l}`"),
            Tok::Keyword(k) => format!("`{k}`"),
            Tok::Integer(n) => format!("`{n}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.column,
        }
    }

    fn error(&self, pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError {
            line: pos.line,
            column: pos.column,
            message: message.into(),
            expected: None,
        }
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(&c) = self.chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn next_token(&mut self) -> Result<(Tok, Pos), ParseError> {
        self.skip_trivia();
        let start = self.pos();
        let Some(&c) = self.chars.peek() else {
            return Ok((Tok::Eof, start));
        };
        let tok = match c {
            '(' => {
                self.bump();
                Tok::LParen
            }
            ')' => {
                self.bump();
                Tok::RParen
            }
            '=' => {
                self.bump();
                Tok::Equals
            }
            '<' => {
                self.bump();
                let mut iri = String::new();
                loop {
                    match self.bump() {
                        Some('>') => break,
                        Some(c) if c.is_whitespace() => {
                            return Err(self.error(start, "whitespace inside IRI"))
                        }
                        Some(c) => iri.push(c),
                        None => return Err(self.error(start, "unterminated IRI")),
                    }
                }
                if iri.is_empty() {
                    return Err(self.error(start, "empty IRI"));
                }
                Tok::FullIri(iri)
            }
            '"' => {
                return Err(self.error(
                    start,
                    "unsupported construct: literals (data values are not supported)",
                ))
            }
            _ => {
                let mut word = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | '<' | '>' | '=' | '"' | '#') {
                        break;
                    }
                    word.push(c);
                    self.bump();
                }
                if word.is_empty() {
                    self.bump();
                    return Err(self.error(start, format!("unexpected character `{c}`")));
                }
                if let Some((prefix, local)) = word.split_once(':') {
                    if prefix == "_" {
                        return Err(self.error(
                            start,
                            "unsupported construct: anonymous individuals",
                        ));
                    }
                    Tok::PrefixedName(prefix.to_string(), local.to_string())
                } else if word.chars().all(|c| c.is_ascii_digit()) {
                    let n = word
                        .parse()
                        .map_err(|_| self.error(start, format!("integer `{word}` out of range")))?;
                    Tok::Integer(n)
                } else {
                    Tok::Keyword(word)
                }
            }
        };
        Ok((tok, start))
    }
}

/// OWL 2 functional-syntax keywords that are valid OWL but outside the supported fragment.
const UNSUPPORTED: &[&str] = &[
    "Import",
    "Annotation",
    "AnnotationAssertion",
    "SubAnnotationPropertyOf",
    "AnnotationPropertyDomain",
    "AnnotationPropertyRange",
    "DataProperty",
    "Datatype",
    "AnnotationProperty",
    "DataIntersectionOf",
    "DataUnionOf",
    "DataComplementOf",
    "DataOneOf",
    "DatatypeRestriction",
    "DataSomeValuesFrom",
    "DataAllValuesFrom",
    "DataHasValue",
    "DataMinCardinality",
    "DataMaxCardinality",
    "DataExactCardinality",
    "SubDataPropertyOf",
    "EquivalentDataProperties",
    "DisjointDataProperties",
    "DataPropertyDomain",
    "DataPropertyRange",
    "FunctionalDataProperty",
    "DatatypeDefinition",
    "HasKey",
    "DataPropertyAssertion",
    "NegativeDataPropertyAssertion",
    "DisjointUnion",
];

fn is_data_keyword(k: &str) -> bool {
    k.starts_with("Data") || k.contains("DataProperty") || k == "Datatype"
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    pos: Pos,
    prefixes: PrefixMap,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> PResult<Self> {
        let mut lexer = Lexer::new(text);
        let (tok, pos) = lexer.next_token()?;
        Ok(Parser {
            lexer,
            tok,
            pos,
            prefixes: PrefixMap::new(),
        })
    }

    fn advance(&mut self) -> PResult<Tok> {
        let (tok, pos) = self.lexer.next_token()?;
        self.pos = pos;
        Ok(std::mem::replace(&mut self.tok, tok))
    }

    fn error_here(&self, message: impl Into<String>, expected: Option<&str>) -> ParseError {
        ParseError {
            line: self.pos.line,
            column: self.pos.column,
            message: message.into(),
            expected: expected.map(str::to_string),
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        self.error_here(format!("unexpected {}", self.tok.describe()), Some(expected))
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if self.tok == tok {
            self.advance()?;
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn keyword(&mut self, expected: &str) -> PResult<(String, Pos)> {
        match &self.tok {
            Tok::Keyword(k) => {
                let k = k.clone();
                let pos = self.pos;
                self.advance()?;
                Ok((k, pos))
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn unsupported_at(&self, pos: Pos, keyword: &str) -> ParseError {
        let what = if is_data_keyword(keyword) {
            format!("unsupported construct `{keyword}`: data properties and datatypes are not supported")
        } else if UNSUPPORTED.contains(&keyword) {
            format!("unsupported construct `{keyword}`")
        } else {
            format!("unknown keyword `{keyword}`")
        };
        ParseError {
            line: pos.line,
            column: pos.column,
            message: what,
            expected: None,
        }
    }

    fn is_iri_token(&self) -> bool {
        matches!(self.tok, Tok::FullIri(_) | Tok::PrefixedName(..))
    }

    fn iri(&mut self, expected: &str) -> PResult<Iri> {
        let pos = self.pos;
        let at = |message: String| ParseError {
            line: pos.line,
            column: pos.column,
            message,
            expected: None,
        };
        let iri = match &self.tok {
            Tok::FullIri(s) => Iri::new(s.clone()).map_err(|e| at(e.to_string()))?,
            Tok::PrefixedName(p, l) => {
                let ns = self.prefixes.get(p).map_err(|e| at(e.to_string()))?;
                Iri::new(format!("{ns}{l}")).map_err(|e| at(e.to_string()))?
            }
            _ => return Err(self.unexpected(expected)),
        };
        self.advance()?;
        Ok(iri)
    }

    fn document(&mut self) -> PResult<Ontology> {
        loop {
            match &self.tok {
                Tok::Keyword(k) if k == "Prefix" => self.prefix_decl()?,
                Tok::Keyword(k) if k == "Ontology" => break,
                _ => return Err(self.unexpected("`Prefix` or `Ontology`")),
            }
        }
        self.advance()?;
        self.expect(Tok::LParen)?;
        let iri = if self.is_iri_token() {
            let iri = self.iri("ontology IRI")?;
            if self.is_iri_token() {
                // version IRI is accepted and dropped
                self.iri("version IRI")?;
            }
            Some(iri)
        } else {
            None
        };
        let mut axioms = Vec::new();
        while self.tok != Tok::RParen {
            if self.tok == Tok::Eof {
                return Err(self.unexpected("an axiom or `)`"));
            }
            axioms.push(self.axiom()?);
        }
        self.advance()?;
        if self.tok != Tok::Eof {
            return Err(self.unexpected("end of input"));
        }
        Ok(Ontology {
            iri,
            prefixes: std::mem::take(&mut self.prefixes),
            axioms,
        })
    }

    fn prefix_decl(&mut self) -> PResult<()> {
        self.advance()?;
        self.expect(Tok::LParen)?;
        let name = match &self.tok {
            Tok::PrefixedName(p, l) if l.is_empty() => p.clone(),
            _ => return Err(self.unexpected("prefix name such as `:` or `owl:`")),
        };
        self.advance()?;
        self.expect(Tok::Equals)?;
        let ns = match &self.tok {
            Tok::FullIri(s) => s.clone(),
            _ => return Err(self.unexpected("full IRI in angle brackets")),
        };
        self.advance()?;
        self.expect(Tok::RParen)?;
        self.prefixes.insert(name, ns);
        Ok(())
    }

    fn axiom(&mut self) -> PResult<Axiom> {
        let (kw, kw_pos) = self.keyword("axiom keyword")?;
        self.expect(Tok::LParen)?;
        if matches!(&self.tok, Tok::Keyword(k) if k == "Annotation") {
            return Err(self.unsupported_at(self.pos, "Annotation"));
        }
        let axiom = match kw.as_str() {
            "Declaration" => {
                let (entity, pos) = self.keyword("entity kind")?;
                let kind = match entity.as_str() {
                    "Class" => EntityKind::Class,
                    "ObjectProperty" => EntityKind::ObjectProperty,
                    "NamedIndividual" => EntityKind::NamedIndividual,
                    other => return Err(self.unsupported_at(pos, other)),
                };
                self.expect(Tok::LParen)?;
                let iri = self.iri("entity IRI")?;
                self.expect(Tok::RParen)?;
                Axiom::Declaration(kind, iri)
            }
            "SubClassOf" => {
                let sub = self.class_expr()?;
                let sup = self.class_expr()?;
                Axiom::SubClassOf(sub, sup)
            }
            "EquivalentClasses" => Axiom::EquivalentClasses(self.class_list(2)?),
            "DisjointClasses" => Axiom::DisjointClasses(self.class_list(2)?),
            "SubObjectPropertyOf" => {
                let sub = if matches!(&self.tok, Tok::Keyword(k) if k == "ObjectPropertyChain") {
                    self.advance()?;
                    self.expect(Tok::LParen)?;
                    let chain = self.ope_list(2)?;
                    self.expect(Tok::RParen)?;
                    PropertyOrChain::Chain(chain)
                } else {
                    PropertyOrChain::Property(self.ope()?)
                };
                let sup = self.ope()?;
                Axiom::SubObjectPropertyOf(sub, sup)
            }
            "EquivalentObjectProperties" => Axiom::EquivalentObjectProperties(self.ope_list(2)?),
            "DisjointObjectProperties" => Axiom::DisjointObjectProperties(self.ope_list(2)?),
            "InverseObjectProperties" => {
                let a = self.ope()?;
                let b = self.ope()?;
                Axiom::InverseObjectProperties(a, b)
            }
            "ObjectPropertyDomain" => {
                let p = self.ope()?;
                Axiom::ObjectPropertyDomain(p, self.class_expr()?)
            }
            "ObjectPropertyRange" => {
                let p = self.ope()?;
                Axiom::ObjectPropertyRange(p, self.class_expr()?)
            }
            "ClassAssertion" => {
                let c = self.class_expr()?;
                Axiom::ClassAssertion(c, self.iri("individual")?)
            }
            "ObjectPropertyAssertion" | "NegativeObjectPropertyAssertion" => {
                let p = self.ope()?;
                let a = self.iri("individual")?;
                let b = self.iri("individual")?;
                if kw == "ObjectPropertyAssertion" {
                    Axiom::ObjectPropertyAssertion(p, a, b)
                } else {
                    Axiom::NegativeObjectPropertyAssertion(p, a, b)
                }
            }
            "SameIndividual" => Axiom::SameIndividual(self.individual_list(2)?),
            "DifferentIndividuals" => Axiom::DifferentIndividuals(self.individual_list(2)?),
            other => match Characteristic::from_keyword(other) {
                Some(c) => Axiom::Characteristic(c, self.ope()?),
                None => return Err(self.unsupported_at(kw_pos, other)),
            },
        };
        self.expect(Tok::RParen)?;
        Ok(axiom)
    }

    fn ope(&mut self) -> PResult<Ope> {
        match &self.tok {
            Tok::Keyword(k) if k == "ObjectInverseOf" => {
                self.advance()?;
                self.expect(Tok::LParen)?;
                let inner = self.ope()?;
                self.expect(Tok::RParen)?;
                Ok(Ope::inverse_of(inner))
            }
            Tok::Keyword(k) => Err(self.unsupported_at(self.pos, &k.clone())),
            _ => {
                let pos = self.pos;
                let iri = self.iri("object property")?;
                if iri.as_str() == format!("{OWL_NS}topObjectProperty")
                    || iri.as_str() == format!("{OWL_NS}bottomObjectProperty")
                {
                    return Err(ParseError {
                        line: pos.line,
                        column: pos.column,
                        message: format!("unsupported construct `{iri}`"),
                        expected: None,
                    });
                }
                Ok(Ope::Named(iri))
            }
        }
    }

    fn ope_list(&mut self, min: usize) -> PResult<Vec<Ope>> {
        let mut list = Vec::new();
        while self.tok != Tok::RParen && self.tok != Tok::Eof {
            list.push(self.ope()?);
        }
        if list.len() < min {
            return Err(self.error_here(
                format!("expected at least {min} property expressions"),
                Some("object property expression"),
            ));
        }
        Ok(list)
    }

    fn class_list(&mut self, min: usize) -> PResult<Vec<ClassExpr>> {
        let mut list = Vec::new();
        while self.tok != Tok::RParen && self.tok != Tok::Eof {
            list.push(self.class_expr()?);
        }
        if list.len() < min {
            return Err(self.error_here(
                format!("expected at least {min} class expressions"),
                Some("class expression"),
            ));
        }
        Ok(list)
    }

    fn individual_list(&mut self, min: usize) -> PResult<Vec<Iri>> {
        let mut list = Vec::new();
        while self.tok != Tok::RParen && self.tok != Tok::Eof {
            list.push(self.iri("individual")?);
        }
        if list.len() < min {
            return Err(self.error_here(
                format!("expected at least {min} individuals"),
                Some("individual"),
            ));
        }
        Ok(list)
    }

    fn class_expr(&mut self) -> PResult<ClassExpr> {
        if self.is_iri_token() {
            let iri = self.iri("class expression")?;
            return Ok(match iri.as_str() {
                OWL_THING => ClassExpr::Thing,
                OWL_NOTHING => ClassExpr::Nothing,
                _ => ClassExpr::Named(iri),
            });
        }
        let (kw, kw_pos) = self.keyword("class expression")?;
        self.expect(Tok::LParen)?;
        let ce = match kw.as_str() {
            "ObjectIntersectionOf" => ClassExpr::IntersectionOf(self.class_list(2)?),
            "ObjectUnionOf" => ClassExpr::UnionOf(self.class_list(2)?),
            "ObjectComplementOf" => ClassExpr::ComplementOf(Box::new(self.class_expr()?)),
            "ObjectOneOf" => ClassExpr::OneOf(self.individual_list(1)?),
            "ObjectSomeValuesFrom" => {
                let p = self.ope()?;
                ClassExpr::some(p, self.class_expr()?)
            }
            "ObjectAllValuesFrom" => {
                let p = self.ope()?;
                ClassExpr::all(p, self.class_expr()?)
            }
            "ObjectHasValue" => {
                let p = self.ope()?;
                ClassExpr::HasValue(p, self.iri("individual")?)
            }
            "ObjectHasSelf" => ClassExpr::HasSelf(self.ope()?),
            "ObjectMinCardinality" | "ObjectMaxCardinality" | "ObjectExactCardinality" => {
                let n = match self.tok {
                    Tok::Integer(n) => n,
                    _ => return Err(self.unexpected("non-negative integer")),
                };
                self.advance()?;
                let p = self.ope()?;
                let filler = if self.tok == Tok::RParen {
                    ClassExpr::Thing
                } else {
                    self.class_expr()?
                };
                match kw.as_str() {
                    "ObjectMinCardinality" => ClassExpr::min(n, p, filler),
                    "ObjectMaxCardinality" => ClassExpr::max(n, p, filler),
                    _ => ClassExpr::exact(n, p, filler),
                }
            }
            other => return Err(self.unsupported_at(kw_pos, other)),
        };
        self.expect(Tok::RParen)?;
        Ok(ce)
    }
}

pub fn parse_ontology(text: &str) -> Result<Ontology, ParseError> {
    Parser::new(text)?.document()
}

struct Writer<'a> {
    prefixes: &'a PrefixMap,
    out: String,
}

impl Writer<'_> {
    fn iri(&mut self, iri: &Iri) {
        match self.prefixes.abbreviate(iri) {
            Some(short) => self.out.push_str(&short),
            None => {
                self.out.push('<');
                self.out.push_str(iri.as_str());
                self.out.push('>');
            }
        }
    }

    fn open(&mut self, keyword: &str) {
        self.out.push_str(keyword);
        self.out.push_str("( ");
    }

    fn close(&mut self) {
        self.out.push_str(" )");
    }

    fn sep(&mut self) {
        self.out.push(' ');
    }

    fn ope(&mut self, ope: &Ope) {
        match ope {
            Ope::Named(iri) => self.iri(iri),
            Ope::InverseOf(inner) => {
                self.open("ObjectInverseOf");
                self.ope(inner);
                self.close();
            }
        }
    }

    fn opes(&mut self, list: &[Ope]) {
        for (i, p) in list.iter().enumerate() {
            if i > 0 {
                self.sep();
            }
            self.ope(p);
        }
    }

    fn classes(&mut self, list: &[ClassExpr]) {
        for (i, c) in list.iter().enumerate() {
            if i > 0 {
                self.sep();
            }
            self.class(c);
        }
    }

    fn individuals(&mut self, list: &[Iri]) {
        for (i, a) in list.iter().enumerate() {
            if i > 0 {
                self.sep();
            }
            self.iri(a);
        }
    }

    fn class(&mut self, ce: &ClassExpr) {
        match ce {
            ClassExpr::Named(iri) => self.iri(iri),
            ClassExpr::Thing => self.iri(&Iri::new(OWL_THING).expect("static IRI")),
            ClassExpr::Nothing => self.iri(&Iri::new(OWL_NOTHING).expect("static IRI")),
            ClassExpr::IntersectionOf(list) => {
                self.open("ObjectIntersectionOf");
                self.classes(list);
                self.close();
            }
            ClassExpr::UnionOf(list) => {
                self.open("ObjectUnionOf");
                self.classes(list);
                self.close();
            }
            ClassExpr::ComplementOf(c) => {
                self.open("ObjectComplementOf");
                self.class(c);
                self.close();
            }
            ClassExpr::OneOf(list) => {
                self.open("ObjectOneOf");
                self.individuals(list);
                self.close();
            }
            ClassExpr::SomeValuesFrom(p, c) | ClassExpr::AllValuesFrom(p, c) => {
                self.open(if matches!(ce, ClassExpr::SomeValuesFrom(..)) {
                    "ObjectSomeValuesFrom"
                } else {
                    "ObjectAllValuesFrom"
                });
                self.ope(p);
                self.sep();
                self.class(c);
                self.close();
            }
            ClassExpr::HasValue(p, a) => {
                self.open("ObjectHasValue");
                self.ope(p);
                self.sep();
                self.iri(a);
                self.close();
            }
            ClassExpr::HasSelf(p) => {
                self.open("ObjectHasSelf");
                self.ope(p);
                self.close();
            }
            ClassExpr::MinCardinality(n, p, c)
            | ClassExpr::MaxCardinality(n, p, c)
            | ClassExpr::ExactCardinality(n, p, c) => {
                self.open(match ce {
                    ClassExpr::MinCardinality(..) => "ObjectMinCardinality",
                    ClassExpr::MaxCardinality(..) => "ObjectMaxCardinality",
                    _ => "ObjectExactCardinality",
                });
                self.out.push_str(&n.to_string());
                self.sep();
                self.ope(p);
                if **c != ClassExpr::Thing {
                    self.sep();
                    self.class(c);
                }
                self.close();
            }
        }
    }

    fn axiom(&mut self, axiom: &Axiom) {
        match axiom {
            Axiom::Declaration(kind, iri) => {
                self.open("Declaration");
                self.open(kind.keyword());
                self.iri(iri);
                self.close();
            }
            Axiom::SubClassOf(a, b) => {
                self.open("SubClassOf");
                self.classes(&[a.clone(), b.clone()]);
            }
            Axiom::EquivalentClasses(list) => {
                self.open("EquivalentClasses");
                self.classes(list);
            }
            Axiom::DisjointClasses(list) => {
                self.open("DisjointClasses");
                self.classes(list);
            }
            Axiom::SubObjectPropertyOf(sub, sup) => {
                self.open("SubObjectPropertyOf");
                match sub {
                    PropertyOrChain::Property(p) => self.ope(p),
                    PropertyOrChain::Chain(list) => {
                        self.open("ObjectPropertyChain");
                        self.opes(list);
                        self.close();
                    }
                }
                self.sep();
                self.ope(sup);
            }
            Axiom::EquivalentObjectProperties(list) => {
                self.open("EquivalentObjectProperties");
                self.opes(list);
            }
            Axiom::DisjointObjectProperties(list) => {
                self.open("DisjointObjectProperties");
                self.opes(list);
            }
            Axiom::InverseObjectProperties(a, b) => {
                self.open("InverseObjectProperties");
                self.opes(&[a.clone(), b.clone()]);
            }
            Axiom::Characteristic(c, p) => {
                self.open(c.keyword());
                self.ope(p);
            }
            Axiom::ObjectPropertyDomain(p, c) | Axiom::ObjectPropertyRange(p, c) => {
                self.open(if matches!(axiom, Axiom::ObjectPropertyDomain(..)) {
                    "ObjectPropertyDomain"
                } else {
                    "ObjectPropertyRange"
                });
                self.ope(p);
                self.sep();
                self.class(c);
            }
            Axiom::ClassAssertion(c, a) => {
                self.open("ClassAssertion");
                self.class(c);
                self.sep();
                self.iri(a);
            }
            Axiom::ObjectPropertyAssertion(p, a, b)
            | Axiom::NegativeObjectPropertyAssertion(p, a, b) => {
                self.open(if matches!(axiom, Axiom::ObjectPropertyAssertion(..)) {
                    "ObjectPropertyAssertion"
                } else {
                    "NegativeObjectPropertyAssertion"
                });
                self.ope(p);
                self.sep();
                self.individuals(&[a.clone(), b.clone()]);
            }
            Axiom::SameIndividual(list) => {
                self.open("SameIndividual");
                self.individuals(list);
            }
            Axiom::DifferentIndividuals(list) => {
                self.open("DifferentIndividuals");
                self.individuals(list);
            }
        }
        self.close();
    }
}

/// Writes `o` in canonical form: prefix header, then one axiom per line.
pub fn serialize_ontology(o: &Ontology) -> String {
    let mut w = Writer {
        prefixes: &o.prefixes,
        out: String::new(),
    };
    for (prefix, ns) in o.prefixes.iter() {
        w.out.push_str(&format!("Prefix({prefix}:=<{ns}>)\n"));
    }
    w.out.push_str("Ontology(");
    if let Some(iri) = &o.iri {
        w.out.push('<');
        w.out.push_str(iri.as_str());
        w.out.push('>');
    }
    w.out.push('\n');
    for axiom in &o.axioms {
        w.axiom(axiom);
        w.out.push('\n');
    }
    w.out.push_str(")\n");
    w.out
}
