//! Text front-end for programs and queries.
//!
//! ```text
//! program := { clause } ;
//! clause  := "(" literal [ "<-" literal { ("&" | ",") literal } ] "," weight ")" "." ;
//! literal := [ "~" ] atom ;
//! ```
//!
//! `%` starts a comment running to the end of the line. The Unicode
//! glyphs `∼`, `←` and `∧` are accepted as alternatives to `~`, `<-` and
//! `&`.

use std::fmt;

use thiserror::Error;

use crate::types::{
    is_atom_name, Atom, Clause, Degree, Literal, Program, ValidationReport, WeightedClause,
};

/// Location of a syntax error; 1-based line and column, length in
/// characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{span}: {message}")]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
}

/// All syntax errors found in one input; never empty.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseErrorList(pub Vec<ParseError>);

impl fmt::Display for ParseErrorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Clauses in source order, before program-level validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedProgram {
    pub clauses: Vec<WeightedClause>,
    pub spans: Vec<SourceSpan>,
}

impl ParsedProgram {
    /// Certain clauses.
    pub fn pi(&self) -> Vec<WeightedClause> {
        self.clauses
            .iter()
            .filter(|c| c.is_certain())
            .cloned()
            .collect()
    }

    /// Uncertain clauses.
    pub fn delta(&self) -> Vec<WeightedClause> {
        self.clauses
            .iter()
            .filter(|c| !c.is_certain())
            .cloned()
            .collect()
    }

    pub fn validate(self) -> Result<Program, ValidationReport> {
        Program::new(self.clauses)
    }
}

/// Failure to turn program text into a valid [`Program`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("{0}")]
    Parse(#[from] ParseErrorList),
    #[error(transparent)]
    Invalid(#[from] ValidationReport),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    And,
    Dot,
    Arrow,
    Tilde,
    Ident(String),
    Number(String),
    Unknown(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::And => f.write_str("`&`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Arrow => f.write_str("`<-`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Number(s) => write!(f, "`{s}`"),
            Tok::Unknown(c) => write!(f, "`{c}`"),
        }
    }
}

fn lex(text: &str) -> Vec<(Tok, SourceSpan)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let start = SourceSpan {
            line,
            column: col,
            length: 1,
        };
        let mut len = 1;
        let tok = match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
                continue;
            }
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '&' | '\u{2227}' => Tok::And,
            '~' | '\u{223c}' | '\u{00ac}' => Tok::Tilde,
            '\u{2190}' => Tok::Arrow,
            '<' if chars.get(i + 1) == Some(&'-') => {
                len = 2;
                Tok::Arrow
            }
            '.' if !chars.get(i + 1).is_some_and(char::is_ascii_digit) => Tok::Dot,
            c if c.is_ascii_digit() || c == '.' => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j < chars.len()
                    && chars[j] == '.'
                    && chars.get(j + 1).is_some_and(char::is_ascii_digit)
                {
                    j += 1;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                }
                len = j - i;
                Tok::Number(chars[i..j].iter().collect())
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                len = j - i;
                Tok::Ident(chars[i..j].iter().collect())
            }
            other => Tok::Unknown(other),
        };
        out.push((
            tok,
            SourceSpan {
                length: len,
                ..start
            },
        ));
        i += len;
        col += len;
    }
    out
}

struct Parser {
    toks: Vec<(Tok, SourceSpan)>,
    pos: usize,
    end: SourceSpan,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn new(text: &str) -> Parser {
        let toks = lex(text);
        let end = match text.lines().enumerate().last() {
            Some((n, l)) => SourceSpan {
                line: n + 1,
                column: l.chars().count().max(1),
                length: 1,
            },
            None => SourceSpan {
                line: 1,
                column: 1,
                length: 1,
            },
        };
        Parser { toks, pos: 0, end }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn span(&self) -> SourceSpan {
        self.toks.get(self.pos).map(|(_, s)| *s).unwrap_or(self.end)
    }

    fn error<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            span: self.span(),
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, wanted: &str) -> PResult<T> {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> PResult<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.unexpected(wanted)
        }
    }

    fn literal(&mut self) -> PResult<Literal> {
        let negated = if self.peek() == Some(&Tok::Tilde) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.peek() {
            Some(Tok::Ident(name)) if is_atom_name(name) => {
                let atom = Atom::new(name).expect("checked atom name");
                self.pos += 1;
                Ok(Literal { atom, negated })
            }
            Some(Tok::Ident(name)) => self.error(format!(
                "`{name}` is not an atom name (atoms start with a lowercase letter)"
            )),
            _ => self.unexpected("an atom"),
        }
    }

    fn weight(&mut self) -> PResult<Degree> {
        match self.peek() {
            Some(Tok::Number(text)) => {
                let parsed = text.parse::<Degree>();
                match parsed {
                    Ok(d) if d.is_zero() => self
                        .error("weight 0 carries no information; clauses need a weight in (0, 1]"),
                    Ok(d) => {
                        self.pos += 1;
                        Ok(d)
                    }
                    Err(e) => self.error(e.to_string()),
                }
            }
            _ => self.unexpected("a weight"),
        }
    }

    fn clause(&mut self) -> PResult<WeightedClause> {
        self.expect(Tok::LParen, "`(`")?;
        let head = self.literal()?;
        let mut body = Vec::new();
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            body.push(self.literal()?);
            loop {
                match self.peek() {
                    Some(Tok::And) => {
                        self.pos += 1;
                        body.push(self.literal()?);
                    }
                    Some(Tok::Comma) => {
                        if matches!(self.toks.get(self.pos + 1), Some((Tok::Number(_), _))) {
                            break;
                        }
                        self.pos += 1;
                        body.push(self.literal()?);
                    }
                    _ => break,
                }
            }
        }
        self.expect(Tok::Comma, "`,` before the weight")?;
        let weight = self.weight()?;
        self.expect(Tok::RParen, "`)`")?;
        self.expect(Tok::Dot, "`.` after the clause")?;
        Ok(WeightedClause::new(Clause::new(head, body), weight).expect("weight checked non-zero"))
    }

    /// Skips to just past the next clause terminator.
    fn recover(&mut self) {
        while let Some(t) = self.peek() {
            let done = *t == Tok::Dot;
            self.pos += 1;
            if done {
                break;
            }
        }
    }
}

/// Parses every clause of `text`, reporting all syntax errors found.
pub fn parse_program(text: &str) -> Result<ParsedProgram, ParseErrorList> {
    let mut p = Parser::new(text);
    let mut out = ParsedProgram::default();
    let mut errors = Vec::new();
    while p.peek().is_some() {
        let start = p.span();
        match p.clause() {
            Ok(c) => {
                out.clauses.push(c);
                out.spans.push(start);
            }
            Err(e) => {
                errors.push(e);
                p.recover();
            }
        }
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(ParseErrorList(errors))
    }
}

/// Parses and validates in one step.
pub fn load_program(text: &str) -> Result<Program, LoadError> {
    Ok(parse_program(text)?.validate()?)
}

/// Parses a single literal such as `engine_ok` or `~fuel_ok`.
pub fn parse_query(text: &str) -> Result<Literal, ParseError> {
    let mut p = Parser::new(text);
    let lit = p.literal()?;
    if p.peek().is_some() {
        return p.unexpected("end of query");
    }
    Ok(lit)
}

/// Glyph set used by [`serialize_program_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Glyphs {
    #[default]
    Ascii,
    Unicode,
}

/// Canonical text of a program: one clause per line in source order.
pub fn serialize_program(program: &Program) -> String {
    serialize_program_with(program, Glyphs::Ascii)
}

pub fn serialize_program_with(program: &Program, glyphs: Glyphs) -> String {
    let (neg, arrow, and) = match glyphs {
        Glyphs::Ascii => ("~", " <- ", " & "),
        Glyphs::Unicode => ("\u{223c}", " \u{2190} ", " \u{2227} "),
    };
    let lit = |l: &Literal| format!("{}{}", if l.negated { neg } else { "" }, l.atom);
    let mut out = String::new();
    for (_, c) in program.clauses() {
        out.push('(');
        out.push_str(&lit(c.head()));
        if !c.body().is_empty() {
            out.push_str(arrow);
            let body: Vec<String> = c.body().iter().map(lit).collect();
            out.push_str(&body.join(and));
        }
        out.push_str(&format!(", {}).\n", c.weight()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(text: &str) -> WeightedClause {
        let mut p = parse_program(text).unwrap();
        assert_eq!(p.clauses.len(), 1);
        p.clauses.remove(0)
    }

    #[test]
    fn certain_rule() {
        let c = single("(~fuel_ok <- pump_clog, 1).");
        assert_eq!(c.head(), &"~fuel_ok".parse().unwrap());
        assert_eq!(c.body(), &["pump_clog".parse().unwrap()]);
        assert!(c.is_certain());
    }

    #[test]
    fn certain_fact() {
        let c = single("(sw1, 1).");
        assert!(c.clause().is_fact());
        assert!(c.is_certain());
        assert_eq!(c.head().to_string(), "sw1");
    }

    #[test]
    fn uncertain_rule_with_either_separator() {
        let c = single("(engine_ok <- fuel_ok & oil_ok, 0.3).");
        assert_eq!(c.weight(), Degree::new(3, 10).unwrap());
        assert_eq!(c.body().len(), 2);
        let c = single("(~low_speed <- sw2, sw3, 0.8).");
        assert_eq!(c.body().len(), 2);
        assert_eq!(c.weight(), Degree::new(8, 10).unwrap());
    }

    #[test]
    fn unicode_glyphs() {
        let c = single("(\u{223c}low_speed \u{2190} sw2 \u{2227} sw3, 0.8).");
        assert_eq!(c.to_string(), "(~low_speed <- sw2 & sw3, 0.8)");
    }

    #[test]
    fn comments_and_whitespace() {
        let p = parse_program("% header\n(a, 1). % trailing\n\n  ( b <- a ,0.5 ) .\n").unwrap();
        assert_eq!(p.clauses.len(), 2);
        assert_eq!(
            p.spans[1],
            SourceSpan {
                line: 4,
                column: 3,
                length: 1
            }
        );
    }

    #[test]
    fn multiple_errors_are_reported() {
        let text = "(a, 1).\n(b <- , 0.5).\n(c, 0).\n(d, 1.5).\n(Bad, 1).\n(e, 0.2)";
        let errs = parse_program(text).unwrap_err().0;
        assert_eq!(errs.len(), 5);
        let lines: Vec<usize> = errs.iter().map(|e| e.span.line).collect();
        assert_eq!(lines, vec![2, 3, 4, 5, 6]);
        assert!(errs[1].message.contains("weight 0"));
    }

    #[test]
    fn error_spans_stay_inside_input() {
        for text in [
            "(",
            "(a",
            "(a,",
            "(a, 1",
            "(a, 1)",
            "x",
            ")",
            "(a <- b c, 1).",
        ] {
            let errs = parse_program(text).unwrap_err().0;
            for e in errs {
                assert_eq!(e.span.line, 1, "{text}");
                assert!(
                    e.span.column >= 1 && e.span.column <= text.chars().count(),
                    "{text}: {e}"
                );
                assert!(e.span.length >= 1);
            }
        }
    }

    #[test]
    fn queries() {
        assert_eq!(
            parse_query("engine_ok").unwrap(),
            "engine_ok".parse().unwrap()
        );
        let q = parse_query("  ~fuel_ok ").unwrap();
        assert!(q.negated);
        assert_eq!(q.atom.name(), "fuel_ok");
        assert!(parse_query("").is_err());
        assert!(parse_query("a b").is_err());
        assert!(parse_query("~").is_err());
    }

    #[test]
    fn serialization() {
        assert_eq!(serialize_program(&Program::empty()), "");
        let p = load_program("(q, 0.95).\n(r <- q, sw, 1).\n(sw, 1).").unwrap();
        assert_eq!(
            serialize_program(&p),
            "(q, 0.95).\n(r <- q & sw, 1).\n(sw, 1).\n"
        );
        let u = serialize_program_with(&p, Glyphs::Unicode);
        assert!(u.contains("\u{2190}"));
        assert_eq!(load_program(&u).unwrap(), p);
    }
}
