//! Text format for differential expressions.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' intLiteral)?
//! base   := rational | ident | call | '(' expr ')'
//! call   := ('sin' | 'cos') '(' ident ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-t^2` is `-(t^2)`. Identifiers
//! are coordinates, constants, or `xi` with a prime tail (`xi''` is the
//! second derivative). Rational literals are integers, `p/q` (handled by
//! the `/` operator), or exact decimals like `0.25`. Errors carry the byte
//! offset into the source.

use num::{BigInt, BigRational};
use std::fmt;
use std::sync::Arc;

use crate::symkernel::{DiffExpr, Generator, KernelError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdent { offset: usize, name: String },
    #[error("{0}")]
    Kernel(#[from] KernelError),
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { offset, message: message.into() }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Ast {
    Rational(BigRational),
    /// Identifier with its source offset; `primes` counts a `'` tail.
    Ident { name: String, primes: u32, offset: usize },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i32),
    Call { func: TrigFn, arg: String, offset: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigFn {
    Sin,
    Cos,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident { name: String, primes: u32 },
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut lx = Lexer { src: src.as_bytes(), pos: 0 };
        let mut out = Vec::new();
        loop {
            lx.skip_ws();
            if lx.pos >= lx.src.len() {
                return Ok(out);
            }
            let start = lx.pos;
            let c = lx.src[lx.pos];
            let tok = match c {
                b'+' => { lx.pos += 1; Tok::Plus }
                b'-' => { lx.pos += 1; Tok::Minus }
                b'*' => { lx.pos += 1; Tok::Star }
                b'/' => { lx.pos += 1; Tok::Slash }
                b'^' => { lx.pos += 1; Tok::Caret }
                b'(' => { lx.pos += 1; Tok::LParen }
                b')' => { lx.pos += 1; Tok::RParen }
                b'0'..=b'9' => lx.number()?,
                b'.' => return Err(syntax(start, "decimal literal needs a leading digit")),
                c if c.is_ascii_alphabetic() || c == b'_' => lx.ident()?,
                other => {
                    return Err(syntax(
                        start,
                        format!("unexpected character `{}`", other as char),
                    ))
                }
            };
            out.push((tok, start));
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<Tok, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let int_part = &self.src[start..self.pos];
        let mut value = BigRational::from_integer(
            BigInt::parse_bytes(int_part, 10).expect("digits"),
        );
        // Exact decimal fraction: 1.25 = 125/100. A '.' must be followed by
        // a digit, otherwise it is a stray character.
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            if self.pos + 1 >= self.src.len() || !self.src[self.pos + 1].is_ascii_digit() {
                return Err(syntax(self.pos, "expected digits after decimal point"));
            }
            self.pos += 1;
            let frac_start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let frac = &self.src[frac_start..self.pos];
            let numer = BigInt::parse_bytes(frac, 10).expect("digits");
            let denom = BigInt::from(10u32).pow(frac.len() as u32);
            value += BigRational::new(numer, denom);
        }
        Ok(Tok::Num(value))
    }

    fn ident(&mut self) -> Result<Tok, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .to_string();
        let mut primes = 0u32;
        while self.pos < self.src.len() && self.src[self.pos] == b'\'' {
            primes += 1;
            self.pos += 1;
        }
        Ok(Tok::Ident { name, primes })
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some((Tok::Plus, _)) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Ast::Add(Box::new(lhs), Box::new(rhs));
                }
                Some((Tok::Minus, _)) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Ast::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some((Tok::Star, _)) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = Ast::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some((Tok::Slash, _)) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = Ast::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        if matches!(self.peek(), Some((Tok::Minus, _))) {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Ast::Neg(Box::new(inner)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        let base = self.base()?;
        if matches!(self.peek(), Some((Tok::Caret, _))) {
            self.pos += 1;
            let exp = self.int_literal()?;
            return Ok(Ast::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn int_literal(&mut self) -> Result<i32, ParseError> {
        let mut negative = false;
        if matches!(self.peek(), Some((Tok::Minus, _))) {
            negative = true;
            self.pos += 1;
        }
        let offset = self.here();
        match self.next() {
            Some((Tok::Num(q), _)) if q.is_integer() => {
                let v: i32 = q
                    .to_integer()
                    .try_into()
                    .map_err(|_| syntax(offset, "exponent out of range"))?;
                Ok(if negative { -v } else { v })
            }
            Some((Tok::Num(_), o)) => Err(syntax(o, "exponent must be an integer literal")),
            _ => Err(syntax(offset, "expected integer exponent after `^`")),
        }
    }

    fn base(&mut self) -> Result<Ast, ParseError> {
        let offset = self.here();
        match self.next() {
            Some((Tok::Num(q), _)) => Ok(Ast::Rational(q)),
            Some((Tok::Ident { name, primes }, o)) => {
                if (name == "sin" || name == "cos") && matches!(self.peek(), Some((Tok::LParen, _))) {
                    if primes > 0 {
                        return Err(syntax(o, "prime suffix is not valid on a function name"));
                    }
                    self.pos += 1;
                    let arg_offset = self.here();
                    let arg = match self.next() {
                        Some((Tok::Ident { name, primes: 0 }, _)) => name,
                        Some((Tok::Ident { primes: _, .. }, ao)) => {
                            return Err(syntax(ao, "trig argument must be a plain identifier"))
                        }
                        _ => return Err(syntax(arg_offset, "expected identifier inside call")),
                    };
                    match self.next() {
                        Some((Tok::RParen, _)) => {}
                        _ => return Err(syntax(self.here(), "expected `)` to close call")),
                    }
                    let func = if name == "sin" { TrigFn::Sin } else { TrigFn::Cos };
                    Ok(Ast::Call { func, arg, offset: o })
                } else {
                    Ok(Ast::Ident { name, primes, offset: o })
                }
            }
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    _ => Err(syntax(self.here(), "expected `)`")),
                }
            }
            Some((tok, o)) => Err(syntax(o, format!("unexpected token {tok:?}"))),
            None => Err(syntax(offset, "unexpected end of input")),
        }
    }
}

/// Parse source text into a syntax tree without resolving identifiers.
pub fn parse(source: &str) -> Result<Ast, ParseError> {
    let toks = Lexer::tokens(source)?;
    let mut p = Parser { toks, pos: 0, end: source.len() };
    let ast = p.expr()?;
    if let Some((tok, o)) = p.peek() {
        return Err(syntax(*o, format!("trailing input starting with {tok:?}")));
    }
    Ok(ast)
}

/// Name-resolution context: which identifiers are coordinates or constants,
/// and whether the `xi` tower is available (it needs a `t` coordinate).
#[derive(Clone, Debug)]
pub struct ResolveCtx {
    pub coords: Vec<Arc<str>>,
    pub constants: Vec<Arc<str>>,
    pub allow_xi: bool,
}

impl ResolveCtx {
    /// Context for closed forms of `xi(t)`: only `t` and the constants.
    pub fn xi_form() -> ResolveCtx {
        ResolveCtx {
            coords: vec![Arc::from("t")],
            constants: vec![Arc::from("C1"), Arc::from("C2")],
            allow_xi: false,
        }
    }
}

/// Resolve a syntax tree into a differential expression.
pub fn lower(ast: &Ast, ctx: &ResolveCtx) -> Result<DiffExpr, ParseError> {
    match ast {
        Ast::Rational(q) => Ok(DiffExpr::from_rational(q.clone())),
        Ast::Ident { name, primes, offset } => {
            if name == "xi" {
                if !ctx.allow_xi {
                    return Err(ParseError::UnknownIdent { offset: *offset, name: name.clone() });
                }
                return Ok(DiffExpr::generator(Generator::Xi(*primes)));
            }
            if *primes > 0 {
                return Err(syntax(*offset, "prime suffix is only valid on `xi`"));
            }
            if let Some(c) = ctx.coords.iter().find(|c| c.as_ref() == name) {
                return Ok(DiffExpr::generator(Generator::Coord(c.clone())));
            }
            if let Some(c) = ctx.constants.iter().find(|c| c.as_ref() == name) {
                return Ok(DiffExpr::generator(Generator::Const(c.clone())));
            }
            Err(ParseError::UnknownIdent { offset: *offset, name: name.clone() })
        }
        Ast::Neg(inner) => Ok(lower(inner, ctx)?.neg()),
        Ast::Add(a, b) => Ok(lower(a, ctx)?.add(&lower(b, ctx)?)),
        Ast::Sub(a, b) => Ok(lower(a, ctx)?.sub(&lower(b, ctx)?)),
        Ast::Mul(a, b) => Ok(lower(a, ctx)?.mul(&lower(b, ctx)?)),
        Ast::Div(a, b) => {
            let num = lower(a, ctx)?;
            let den = lower(b, ctx)?;
            num.checked_div(&den).map_err(ParseError::from)
        }
        Ast::Pow(base, e) => {
            let b = lower(base, ctx)?;
            b.pow(*e).map_err(ParseError::from)
        }
        Ast::Call { func, arg, offset } => {
            let coord = ctx
                .coords
                .iter()
                .find(|c| c.as_ref() == arg)
                .ok_or_else(|| ParseError::UnknownIdent { offset: *offset, name: arg.clone() })?;
            Ok(DiffExpr::generator(match func {
                TrigFn::Sin => Generator::Sin(coord.clone()),
                TrigFn::Cos => Generator::Cos(coord.clone()),
            }))
        }
    }
}

/// Parse and resolve in one step.
pub fn parse_expr(source: &str, ctx: &ResolveCtx) -> Result<DiffExpr, ParseError> {
    lower(&parse(source)?, ctx)
}

/// Parse a closed form for `xi(t)` (polynomial / rational in `t` with
/// constants `C1`, `C2`).
pub fn parse_xi_form(source: &str) -> Result<DiffExpr, ParseError> {
    parse_expr(source, &ResolveCtx::xi_form())
}

impl fmt::Display for TrigFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrigFn::Sin => write!(f, "sin"),
            TrigFn::Cos => write!(f, "cos"),
        }
    }
}
