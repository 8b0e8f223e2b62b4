//! Recursive-descent parser for the element expression grammar:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | 'd1' | 'd2' | 'L' '(' rational ',' rational ')'
//!         | ('rising'|'falling') '(' expr ',' rational ',' nat ')'
//!         | '(' expr ')'
//! ```
//!
//! Whitespace-insensitive; `^` binds tighter than `*`, which binds tighter
//! than `+`/`-`; `*` and `+` associate to the left. Rationals are `p` or
//! `p/q` and may carry a sign in atom position, so canonical renderings of
//! elements with negative leading coefficients parse back. Syntax errors
//! carry a 1-based column.

use crate::algebra::{falling_factorial, rising_factorial, AlgElement};
use crate::scalar::{GroupVec, Rational};
use crate::Error;

/// Parse tree over rationals, the generators, and the factorial forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExprAst {
    Rat(Rational),
    D1,
    D2,
    /// `L(x1, x2)`; the zero vector is accepted and evaluates to zero.
    L(Rational, Rational),
    Rising(Box<ExprAst>, Rational, u32),
    Falling(Box<ExprAst>, Rational, u32),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Nat(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Comma,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    end_col: usize,
}

fn lex(input: &str) -> Result<Lexer, Error> {
    let chars: Vec<char> = input.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, col));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, col));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Nat(chars[start..i].iter().collect()), col));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            _ => {
                return Err(Error::Parse {
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(Lexer { toks, end_col: chars.len() + 1 })
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { column: self.col(), message: message.into() }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), Error> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn nat(&mut self) -> Result<u32, Error> {
        match self.peek() {
            Some(Tok::Nat(s)) => {
                let v = s
                    .parse::<u32>()
                    .map_err(|_| self.err("natural number out of range"))?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err("expected a natural number")),
        }
    }

    /// `['-'] nat ['/' nat]`
    fn rational(&mut self) -> Result<Rational, Error> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let col = self.col();
        let num = match self.peek() {
            Some(Tok::Nat(s)) => s.clone(),
            _ => return Err(self.err("expected a rational number")),
        };
        self.pos += 1;
        let text = if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let den = match self.peek() {
                Some(Tok::Nat(s)) => s.clone(),
                _ => return Err(self.err("expected a denominator")),
            };
            self.pos += 1;
            format!("{num}/{den}")
        } else {
            num
        };
        let mut r = Rational::parse(&text)
            .map_err(|_| Error::Parse { column: col, message: format!("invalid rational `{text}`") })?;
        if neg {
            r = -r;
        }
        Ok(r)
    }

    fn expr(&mut self) -> Result<ExprAst, Error> {
        let mut node = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    node = ExprAst::Add(Box::new(node), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    node = ExprAst::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, Error> {
        let mut node = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            node = ExprAst::Mul(Box::new(node), Box::new(self.factor()?));
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<ExprAst, Error> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let n = self.nat()?;
            return Ok(ExprAst::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst, Error> {
        match self.peek().cloned() {
            Some(Tok::Minus) => {
                // sign in atom position: a negative rational or negated atom
                self.pos += 1;
                let inner = self.atom()?;
                Ok(match inner {
                    ExprAst::Rat(r) => ExprAst::Rat(-r),
                    other => ExprAst::Neg(Box::new(other)),
                })
            }
            Some(Tok::Nat(_)) => Ok(ExprAst::Rat(self.rational()?)),
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "d1" => Ok(ExprAst::D1),
                    "d2" => Ok(ExprAst::D2),
                    "L" => {
                        self.expect(Tok::LParen, "`(` after `L`")?;
                        let x1 = self.rational()?;
                        self.expect(Tok::Comma, "`,`")?;
                        let x2 = self.rational()?;
                        self.expect(Tok::RParen, "`)`")?;
                        Ok(ExprAst::L(x1, x2))
                    }
                    "rising" | "falling" => {
                        self.expect(Tok::LParen, &format!("`(` after `{name}`"))?;
                        let e = self.expr()?;
                        self.expect(Tok::Comma, "`,`")?;
                        let a = self.rational()?;
                        self.expect(Tok::Comma, "`,`")?;
                        let n = self.nat()?;
                        self.expect(Tok::RParen, "`)`")?;
                        let boxed = Box::new(e);
                        Ok(if name == "rising" {
                            ExprAst::Rising(boxed, a, n)
                        } else {
                            ExprAst::Falling(boxed, a, n)
                        })
                    }
                    _ => {
                        self.pos -= 1;
                        Err(self.err(format!("unknown name `{name}`")))
                    }
                }
            }
            _ => Err(self.err("expected an expression")),
        }
    }
}

/// Parses an element expression; errors carry a 1-based column.
pub fn parse_expr(input: &str) -> Result<ExprAst, Error> {
    let lexer = lex(input)?;
    let mut p = Parser { toks: lexer.toks, pos: 0, end_col: lexer.end_col };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(ast)
}

/// Evaluates a parse tree to a normal-form element.
pub fn eval_expr(ast: &ExprAst) -> AlgElement {
    match ast {
        ExprAst::Rat(r) => AlgElement::scalar(r.clone()),
        ExprAst::D1 => AlgElement::d1(),
        ExprAst::D2 => AlgElement::d2(),
        ExprAst::L(x1, x2) => AlgElement::l(GroupVec::new(x1.clone(), x2.clone())),
        ExprAst::Rising(e, a, n) => rising_factorial(&eval_expr(e), a, *n as usize),
        ExprAst::Falling(e, a, n) => falling_factorial(&eval_expr(e), a, *n as usize),
        ExprAst::Neg(e) => -&eval_expr(e),
        ExprAst::Add(l, r) => &eval_expr(l) + &eval_expr(r),
        ExprAst::Sub(l, r) => &eval_expr(l) - &eval_expr(r),
        ExprAst::Mul(l, r) => eval_expr(l).multiply(&eval_expr(r)),
        ExprAst::Pow(e, n) => eval_expr(e).power(*n as usize),
    }
}
