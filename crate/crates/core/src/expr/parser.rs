//! Recursive-descent parser for the formula syntax.
//!
//! ```text
//! formula := quant | implication
//! quant   := ("forall" | "exists") IDENT "in" IDENT ":" formula
//! implication := conj (("->" | "<->") formula)?      right associative
//! conj    := unary (("&" | "^") unary)*              left associative
//! unary   := "!" unary | "~" unary | quant | atom
//! atom    := "true" | "false" | IDENT ("[" IDENT "]")? | "(" formula ")"
//! ```
//!
//! A quantifier body extends as far right as possible.

use std::fmt;

use thiserror::Error;

use super::ast::Expr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: index variable `{var}` is not bound by an enclosing quantifier")]
    UnboundIndex {
        line: usize,
        column: usize,
        var: String,
    },
    #[error("{line}:{column}: unexpected character {ch:?}")]
    BadChar { line: usize, column: usize, ch: char },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    Forall,
    Exists,
    In,
    Colon,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Amp,
    Caret,
    Arrow,
    DArrow,
    Bang,
    Tilde,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::True => f.write_str("`true`"),
            Tok::False => f.write_str("`false`"),
            Tok::Forall => f.write_str("`forall`"),
            Tok::Exists => f.write_str("`exists`"),
            Tok::In => f.write_str("`in`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::DArrow => f.write_str("`<->`"),
            Tok::Bang => f.write_str("`!`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        let mut push = |tok: Tok, width: usize, i: &mut usize, column: &mut usize| {
            out.push(Spanned {
                tok,
                line: l,
                column: col,
            });
            *i += width;
            *column += width;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                column += 1;
            }
            '&' => push(Tok::Amp, 1, &mut i, &mut column),
            '^' => push(Tok::Caret, 1, &mut i, &mut column),
            '!' => push(Tok::Bang, 1, &mut i, &mut column),
            '~' => push(Tok::Tilde, 1, &mut i, &mut column),
            ':' => push(Tok::Colon, 1, &mut i, &mut column),
            '(' => push(Tok::LParen, 1, &mut i, &mut column),
            ')' => push(Tok::RParen, 1, &mut i, &mut column),
            '[' => push(Tok::LBracket, 1, &mut i, &mut column),
            ']' => push(Tok::RBracket, 1, &mut i, &mut column),
            '-' if chars.get(i + 1) == Some(&'>') => push(Tok::Arrow, 2, &mut i, &mut column),
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                push(Tok::DArrow, 3, &mut i, &mut column)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                column += i - start;
                let tok = match word.as_str() {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    "in" => Tok::In,
                    _ => Tok::Ident(word),
                };
                out.push(Spanned {
                    tok,
                    line: l,
                    column: col,
                });
            }
            other => {
                return Err(ParseError::BadChar {
                    line,
                    column,
                    ch: other,
                })
            }
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    bound: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn formula(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek().tok, Tok::Forall | Tok::Exists) {
            return self.quantifier();
        }
        let lhs = self.conj()?;
        match self.peek().tok {
            Tok::Arrow => {
                self.bump();
                Ok(lhs.implies(self.formula()?))
            }
            Tok::DArrow => {
                self.bump();
                Ok(lhs.iff(self.formula()?))
            }
            _ => Ok(lhs),
        }
    }

    fn quantifier(&mut self) -> Result<Expr, ParseError> {
        let universal = self.bump().tok == Tok::Forall;
        let var = self.ident()?;
        self.expect(Tok::In, "`in`")?;
        let domain = self.ident()?;
        self.expect(Tok::Colon, "`:`")?;
        self.bound.push(var.clone());
        let body = self.formula();
        self.bound.pop();
        let body = body?;
        Ok(if universal {
            Expr::forall(var, domain, body)
        } else {
            Expr::exists(var, domain, body)
        })
    }

    fn conj(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Amp => {
                    self.bump();
                    lhs = lhs.and(self.unary()?);
                }
                Tok::Caret => {
                    self.bump();
                    lhs = lhs.meet(self.unary()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().tok {
            Tok::Bang => {
                self.bump();
                Ok(self.unary()?.strong_neg())
            }
            Tok::Tilde => {
                self.bump();
                Ok(self.unary()?.weak_neg())
            }
            Tok::Forall | Tok::Exists => self.quantifier(),
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().tok.clone() {
            Tok::True => {
                self.bump();
                Ok(Expr::True)
            }
            Tok::False => {
                self.bump();
                Ok(Expr::False)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.bump();
                if self.peek().tok != Tok::LBracket {
                    return Ok(Expr::pred(name));
                }
                self.bump();
                let at = self.peek().clone();
                let var = self.ident()?;
                if !self.bound.contains(&var) {
                    return Err(ParseError::UnboundIndex {
                        line: at.line,
                        column: at.column,
                        var,
                    });
                }
                self.expect(Tok::RBracket, "`]`")?;
                Ok(Expr::indexed(name, var))
            }
            _ => Err(self.error(&[
                "identifier",
                "`true`",
                "`false`",
                "`(`",
                "`!`",
                "`~`",
                "`forall`",
                "`exists`",
            ])),
        }
    }
}

/// Parses one formula. Trailing input is an error.
pub fn parse(source: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(source)?,
        pos: 0,
        bound: Vec::new(),
    };
    let expr = p.formula()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.error(&["`&`", "`^`", "`->`", "`<->`", "end of input"]));
    }
    Ok(expr)
}
