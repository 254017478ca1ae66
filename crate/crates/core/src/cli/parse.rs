//! Recursive-descent parser for the surface syntax
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' nat)?
//! primary := nat ('/' nat)? | 'X' | 'Y' | '(' expr ')'
//! ```
//!
//! Products are evaluated left to right in the noncommutative algebra.
//! Juxtaposition is not multiplication.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Result, WeylError};
use crate::{Rational, Weyl};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let push = |out: &mut Vec<Token>, tok| {
            out.push(Token {
                tok,
                line: l,
                column: col,
            })
        };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
                column += 1;
            }
            push(&mut out, Tok::Num(digits.parse().unwrap()));
            continue;
        }
        let tok = match c {
            'X' => Tok::X,
            'Y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(WeylError::Syntax {
                    line,
                    column,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        chars.next();
        column += 1;
        push(&mut out, tok);
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(t: &Token, message: impl Into<String>) -> WeylError {
        WeylError::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Weyl> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Weyl> {
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Weyl> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Weyl> {
        let base = self.primary()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let t = self.next();
        match t.tok.clone() {
            Tok::Num(n) => {
                let n = u32::try_from(n).map_err(|_| Self::error(&t, "exponent too large"))?;
                Ok(base.pow(n))
            }
            Tok::Minus => Err(WeylError::NegativeExponent {
                line: t.line,
                column: t.column,
            }),
            _ => Err(Self::error(&t, "expected a nonnegative integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<Weyl> {
        let t = self.next();
        match t.tok.clone() {
            Tok::X => Ok(Weyl::x()),
            Tok::Y => Ok(Weyl::y()),
            Tok::Num(n) => {
                let mut den = BigInt::from(1u32);
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let d = self.next();
                    match d.tok {
                        Tok::Num(v) if v.is_zero() => {
                            return Err(WeylError::ZeroDenominator {
                                line: d.line,
                                column: d.column,
                            })
                        }
                        Tok::Num(v) => den = v,
                        _ => return Err(Self::error(&d, "expected a denominator")),
                    }
                }
                Ok(Weyl::constant(Rational::new(n, den)))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(Self::error(&close, "expected ')'"));
                }
                Ok(inner)
            }
            Tok::End => Err(Self::error(&t, "unexpected end of input")),
            other => Err(Self::error(&t, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an expression into normal form.
pub fn parse(text: &str) -> Result<Weyl> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let value = parser.expr()?;
    let t = parser.peek().clone();
    if t.tok != Tok::End {
        return Err(Parser::error(
            &t,
            "expected an operator ('*' is required between factors)",
        ));
    }
    Ok(value)
}
