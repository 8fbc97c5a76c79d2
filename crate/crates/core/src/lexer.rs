//! Tokenizer shared by the cycle-notation and group-spec parsers.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    Colon,
    Arrow,
    Int(u64),
    Ident(String),
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Semicolon => "';'".into(),
            Tok::Colon => "':'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Int(v) => format!("'{v}'"),
            Tok::Ident(s) => format!("'{s}'"),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut push = |tok| out.push(Spanned { tok, line: l, column: col });
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
                continue;
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '#' => {
                // comment to end of line
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    column += 1;
                }
                continue;
            }
            '(' => {
                chars.next();
                push(Tok::LParen);
            }
            ')' => {
                chars.next();
                push(Tok::RParen);
            }
            '[' => {
                chars.next();
                push(Tok::LBracket);
            }
            ']' => {
                chars.next();
                push(Tok::RBracket);
            }
            ',' => {
                chars.next();
                push(Tok::Comma);
            }
            ';' => {
                chars.next();
                push(Tok::Semicolon);
            }
            ':' => {
                chars.next();
                push(Tok::Colon);
            }
            '-' => {
                chars.next();
                if chars.peek() == Some(&'>') {
                    chars.next();
                    column += 1;
                    push(Tok::Arrow);
                } else {
                    return Err(Error::parse(l, col, "unexpected '-' (expected '->')"));
                }
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                    column += 1;
                }
                let v = s
                    .parse::<u64>()
                    .map_err(|_| Error::parse(l, col, format!("integer '{s}' out of range")))?;
                push(Tok::Int(v));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    s.push(d);
                    chars.next();
                    column += 1;
                }
                push(Tok::Ident(s));
                continue;
            }
            other => return Err(Error::parse(l, col, format!("unexpected character '{other}'"))),
        }
        column += 1;
    }
    Ok(out)
}

/// Cursor over a token stream with position-aware errors.
pub(crate) struct Cursor<'a> {
    toks: &'a [Spanned],
    pos: usize,
    end: (usize, usize),
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(toks: &'a [Spanned], text: &str) -> Self {
        let lines = text.split('\n').count().max(1);
        let last = text.split('\n').next_back().unwrap_or("");
        Cursor {
            toks,
            pos: 0,
            end: (lines, last.chars().count() + 1),
        }
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    pub(crate) fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|s| &s.tok)
    }

    pub(crate) fn next(&mut self) -> Option<&'a Spanned> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    /// Position of the next token, or of end-of-input.
    pub(crate) fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.column))
            .unwrap_or(self.end)
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        Error::parse(line, column, message)
    }

    pub(crate) fn unexpected(&self, expected: &str) -> Error {
        match self.toks.get(self.pos) {
            Some(s) => Error::parse(
                s.line,
                s.column,
                format!("expected {expected}, found {}", s.tok.describe()),
            ),
            None => self.error(format!("expected {expected}, found end of input")),
        }
    }

    pub(crate) fn expect(&mut self, tok: &Tok) -> Result<()> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect_int(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.unexpected("an integer")),
        }
    }
}
