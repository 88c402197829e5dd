//! Expression parsing and lowering.
//!
//! Grammar (no implicit multiplication; `/` occurs only inside numeric
//! literals):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' int)?
//! atom   := number | 'i' | func '(' [int] 't' ')' | '(' expr ')'
//! number := int ['/' int]
//! func   := sin | cos | sinh | cosh
//! ```
//!
//! Lowering evaluates the tree over one of two families: `sin`/`cos` build a
//! [`TrigPoly`], `sinh`/`cosh` build a hyperbolic [`CanonicalForm`] (with
//! `x = cosh t`, `y = sinh t`), and scalars join either side. The families
//! cannot be mixed in one expression. `sinh`/`cosh` take the plain argument
//! `t`: there is no finite expansion of `sinh(nt)` in the circle's sense, so
//! a frequency multiplier is rejected rather than silently accepted.
//!
//! A separate entry point [`parse_bipoly`] reads polynomials in the curve
//! coordinates `x`, `y` for quotient-ring reduction; it shares the tokenizer
//! and the operator grammar but not the trig atoms.

use core::fmt;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::bipoly::BiPoly;
use crate::gauss::GaussRational;
use crate::quotient::{CanonicalForm, Modulus};
use crate::trig::TrigPoly;
use crate::unipoly::UniPoly;

/// What went wrong while reading an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnknownName(String),
    Expected(&'static str),
    ZeroDenominator,
    NumberTooLarge,
}

/// A syntax error, located by byte offset into the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: ", self.pos)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character '{c}'"),
            ParseErrorKind::UnknownName(w) => write!(f, "unknown name '{w}'"),
            ParseErrorKind::Expected(what) => write!(f, "expected {what}"),
            ParseErrorKind::ZeroDenominator => f.write_str("denominator is zero"),
            ParseErrorKind::NumberTooLarge => f.write_str("number too large"),
        }
    }
}

impl core::error::Error for ParseError {}

/// The trigonometric function names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigFn {
    Sin,
    Cos,
    Sinh,
    Cosh,
}

/// Lexical token kinds. `x` and `y` occur only in the bivariate grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Int(BigInt),
    Slash,
    ImagUnit,
    VarT,
    VarX,
    VarY,
    Func(TrigFn),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

/// A token with its byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: usize,
}

/// Splits the source into tokens, skipping whitespace.
pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut iter = src.char_indices().peekable();
    while let Some(&(pos, ch)) = iter.peek() {
        let kind = match ch {
            c if c.is_whitespace() => {
                iter.next();
                continue;
            }
            '0'..='9' => {
                let mut end = pos;
                while let Some(&(p, c)) = iter.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    end = p + c.len_utf8();
                    iter.next();
                }
                let value: BigInt = src[pos..end].parse().expect("digit run");
                tokens.push(Token {
                    kind: TokenKind::Int(value),
                    pos,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = pos;
                while let Some(&(p, c)) = iter.peek() {
                    if !c.is_ascii_alphabetic() {
                        break;
                    }
                    end = p + c.len_utf8();
                    iter.next();
                }
                let kind = match &src[pos..end] {
                    "sin" => TokenKind::Func(TrigFn::Sin),
                    "cos" => TokenKind::Func(TrigFn::Cos),
                    "sinh" => TokenKind::Func(TrigFn::Sinh),
                    "cosh" => TokenKind::Func(TrigFn::Cosh),
                    "t" => TokenKind::VarT,
                    "x" => TokenKind::VarX,
                    "y" => TokenKind::VarY,
                    "i" => TokenKind::ImagUnit,
                    word => {
                        return Err(ParseError {
                            pos,
                            kind: ParseErrorKind::UnknownName(String::from(word)),
                        })
                    }
                };
                tokens.push(Token { kind, pos });
                continue;
            }
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '^' => TokenKind::Caret,
            '/' => TokenKind::Slash,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            other => {
                return Err(ParseError {
                    pos,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        iter.next();
        tokens.push(Token { kind, pos });
    }
    Ok(tokens)
}

/// A parsed expression node, located by byte offset.
#[derive(Debug, Clone, PartialEq)]
pub struct Ast {
    pub kind: AstKind,
    pub pos: usize,
}

/// Expression shapes. Frequency multipliers and exponents are plain
/// machine integers; literals are exact rationals.
#[derive(Debug, Clone, PartialEq)]
pub enum AstKind {
    Rational(BigRational),
    ImagUnit,
    Wave { func: TrigFn, multiplier: u32 },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Tokens {
    tokens: Vec<Token>,
    index: usize,
    end: usize,
}

impl Tokens {
    fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Tokens {
            tokens: tokenize(src)?,
            index: 0,
            end: src.len(),
        })
    }

    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.index).map(|t| &t.kind)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.index).map_or(self.end, |t| t.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.index).cloned();
        if t.is_some() {
            self.index += 1;
        }
        t
    }

    fn error(&self, what: &'static str) -> ParseError {
        ParseError {
            pos: self.pos(),
            kind: ParseErrorKind::Expected(what),
        }
    }

    fn expect(&mut self, kind: &TokenKind, what: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(kind) {
            self.advance();
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    /// Consumes an integer token and narrows it to `u32`.
    fn small_int(&mut self, what: &'static str) -> Result<u32, ParseError> {
        let pos = self.pos();
        match self.advance().map(|t| t.kind) {
            Some(TokenKind::Int(v)) => v.to_u32().ok_or(ParseError {
                pos,
                kind: ParseErrorKind::NumberTooLarge,
            }),
            _ => Err(ParseError {
                pos,
                kind: ParseErrorKind::Expected(what),
            }),
        }
    }

    fn at_end(&self) -> Result<(), ParseError> {
        if self.index == self.tokens.len() {
            Ok(())
        } else {
            Err(self.error("end of expression"))
        }
    }
}

/// Parses a full trigonometric expression.
pub fn parse(src: &str) -> Result<Ast, ParseError> {
    let mut tokens = Tokens::new(src)?;
    let ast = parse_expr(&mut tokens)?;
    tokens.at_end()?;
    Ok(ast)
}

fn parse_expr(t: &mut Tokens) -> Result<Ast, ParseError> {
    let mut lhs = parse_term(t)?;
    loop {
        let add = match t.peek() {
            Some(TokenKind::Plus) => true,
            Some(TokenKind::Minus) => false,
            _ => return Ok(lhs),
        };
        let pos = t.pos();
        t.advance();
        let rhs = parse_term(t)?;
        let kind = if add {
            AstKind::Add(Box::new(lhs), Box::new(rhs))
        } else {
            AstKind::Sub(Box::new(lhs), Box::new(rhs))
        };
        lhs = Ast { kind, pos };
    }
}

fn parse_term(t: &mut Tokens) -> Result<Ast, ParseError> {
    let mut lhs = parse_factor(t)?;
    while t.peek() == Some(&TokenKind::Star) {
        let pos = t.pos();
        t.advance();
        let rhs = parse_factor(t)?;
        lhs = Ast {
            kind: AstKind::Mul(Box::new(lhs), Box::new(rhs)),
            pos,
        };
    }
    Ok(lhs)
}

fn parse_factor(t: &mut Tokens) -> Result<Ast, ParseError> {
    if t.peek() == Some(&TokenKind::Minus) {
        let pos = t.pos();
        t.advance();
        let inner = parse_factor(t)?;
        return Ok(Ast {
            kind: AstKind::Neg(Box::new(inner)),
            pos,
        });
    }
    let atom = parse_atom(t)?;
    if t.peek() == Some(&TokenKind::Caret) {
        t.advance();
        let exponent = t.small_int("an integer exponent")?;
        let pos = atom.pos;
        return Ok(Ast {
            kind: AstKind::Pow(Box::new(atom), exponent),
            pos,
        });
    }
    Ok(atom)
}

/// Parses the optional `'/' int` continuation of a numeric literal.
fn rational_tail(t: &mut Tokens, numerator: BigInt) -> Result<BigRational, ParseError> {
    if t.peek() != Some(&TokenKind::Slash) {
        return Ok(BigRational::from(numerator));
    }
    t.advance();
    let den_pos = t.pos();
    match t.advance().map(|tok| tok.kind) {
        Some(TokenKind::Int(denominator)) => {
            if denominator.is_zero() {
                Err(ParseError {
                    pos: den_pos,
                    kind: ParseErrorKind::ZeroDenominator,
                })
            } else {
                Ok(BigRational::new(numerator, denominator))
            }
        }
        _ => Err(ParseError {
            pos: den_pos,
            kind: ParseErrorKind::Expected("a denominator"),
        }),
    }
}

fn parse_atom(t: &mut Tokens) -> Result<Ast, ParseError> {
    let pos = t.pos();
    match t.peek() {
        Some(TokenKind::Int(_)) => {
            let Some(TokenKind::Int(numerator)) = t.advance().map(|tok| tok.kind) else {
                unreachable!("peeked an integer");
            };
            let value = rational_tail(t, numerator)?;
            Ok(Ast {
                kind: AstKind::Rational(value),
                pos,
            })
        }
        Some(TokenKind::ImagUnit) => {
            t.advance();
            Ok(Ast {
                kind: AstKind::ImagUnit,
                pos,
            })
        }
        Some(TokenKind::Func(func)) => {
            let func = *func;
            t.advance();
            t.expect(&TokenKind::LParen, "'(' after the function name")?;
            let multiplier = if matches!(t.peek(), Some(TokenKind::Int(_))) {
                t.small_int("a frequency multiplier")?
            } else {
                1
            };
            t.expect(&TokenKind::VarT, "the variable 't'")?;
            t.expect(&TokenKind::RParen, "')'")?;
            Ok(Ast {
                kind: AstKind::Wave { func, multiplier },
                pos,
            })
        }
        Some(TokenKind::LParen) => {
            t.advance();
            let inner = parse_expr(t)?;
            t.expect(&TokenKind::RParen, "')'")?;
            Ok(inner)
        }
        _ => Err(t.error("a number, 'i', a trig function, or '('")),
    }
}

/// Why an expression could not be lowered to a single family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerErrorKind {
    /// `sin`/`cos` and `sinh`/`cosh` in the same expression.
    MixedFamilies,
    /// `sinh`/`cosh` with a frequency multiplier other than 1.
    HyperbolicMultiplier,
}

/// A semantic error, located at the offending operator or function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerError {
    pub pos: usize,
    pub kind: LowerErrorKind,
}

impl fmt::Display for LowerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: ", self.pos)?;
        match self.kind {
            LowerErrorKind::MixedFamilies => {
                f.write_str("circular and hyperbolic functions cannot be mixed")
            }
            LowerErrorKind::HyperbolicMultiplier => {
                f.write_str("sinh/cosh take the plain argument t")
            }
        }
    }
}

impl core::error::Error for LowerError {}

/// The value of a lowered expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Lowered {
    /// A trigonometric polynomial in `t`; scalar expressions land here too.
    Circular(TrigPoly),
    /// A polynomial in `cosh t`, `sinh t`, canonical on the hyperbola.
    Hyperbolic(CanonicalForm),
}

enum Value {
    Scalar(GaussRational),
    Circ(TrigPoly),
    Hyp(CanonicalForm),
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Sub,
    Mul,
}

fn apply(op: BinOp, lhs: Value, rhs: Value, pos: usize) -> Result<Value, LowerError> {
    match (lhs, rhs) {
        (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(match op {
            BinOp::Add => &a + &b,
            BinOp::Sub => &a - &b,
            BinOp::Mul => &a * &b,
        })),
        (Value::Circ(a), Value::Circ(b)) => Ok(Value::Circ(match op {
            BinOp::Add => &a + &b,
            BinOp::Sub => &a - &b,
            BinOp::Mul => &a * &b,
        })),
        (Value::Hyp(a), Value::Hyp(b)) => {
            let combined = match op {
                BinOp::Add => a.add(&b),
                BinOp::Sub => a.sub(&b),
                BinOp::Mul => a.mul(&b),
            };
            Ok(Value::Hyp(combined.expect("both sides are hyperbolic")))
        }
        (Value::Scalar(a), Value::Circ(b)) => apply(op, Value::Circ(TrigPoly::constant(a)), Value::Circ(b), pos),
        (Value::Circ(a), Value::Scalar(b)) => apply(op, Value::Circ(a), Value::Circ(TrigPoly::constant(b)), pos),
        (Value::Scalar(a), Value::Hyp(b)) => apply(
            op,
            Value::Hyp(CanonicalForm::constant(a, Modulus::Hyperbola)),
            Value::Hyp(b),
            pos,
        ),
        (Value::Hyp(a), Value::Scalar(b)) => apply(
            op,
            Value::Hyp(a),
            Value::Hyp(CanonicalForm::constant(b, Modulus::Hyperbola)),
            pos,
        ),
        (Value::Circ(_), Value::Hyp(_)) | (Value::Hyp(_), Value::Circ(_)) => Err(LowerError {
            pos,
            kind: LowerErrorKind::MixedFamilies,
        }),
    }
}

fn power(base: Value, exponent: u32) -> Value {
    match base {
        Value::Scalar(a) => Value::Scalar(scalar_pow(&a, exponent)),
        Value::Circ(f) => Value::Circ(pow_by_squaring(
            TrigPoly::constant(GaussRational::from(1)),
            f,
            exponent,
            |a, b| a * b,
        )),
        Value::Hyp(c) => {
            let one = CanonicalForm::constant(GaussRational::from(1), Modulus::Hyperbola);
            Value::Hyp(pow_by_squaring(one, c, exponent, |a, b| {
                a.mul(b).expect("both sides are hyperbolic")
            }))
        }
    }
}

fn scalar_pow(base: &GaussRational, exponent: u32) -> GaussRational {
    pow_by_squaring(GaussRational::from(1), base.clone(), exponent, |a, b| a * b)
}

fn pow_by_squaring<T: Clone>(one: T, mut base: T, mut exponent: u32, mul: impl Fn(&T, &T) -> T) -> T {
    let mut acc = one;
    while exponent > 0 {
        if exponent & 1 == 1 {
            acc = mul(&acc, &base);
        }
        exponent >>= 1;
        if exponent > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

fn eval(ast: &Ast) -> Result<Value, LowerError> {
    match &ast.kind {
        AstKind::Rational(r) => Ok(Value::Scalar(GaussRational::real(r.clone()))),
        AstKind::ImagUnit => Ok(Value::Scalar(GaussRational::i())),
        AstKind::Wave { func, multiplier } => match func {
            TrigFn::Sin => Ok(Value::Circ(TrigPoly::sin(*multiplier as usize))),
            TrigFn::Cos => Ok(Value::Circ(TrigPoly::cos(*multiplier as usize))),
            TrigFn::Sinh | TrigFn::Cosh => {
                if *multiplier != 1 {
                    return Err(LowerError {
                        pos: ast.pos,
                        kind: LowerErrorKind::HyperbolicMultiplier,
                    });
                }
                let form = match func {
                    TrigFn::Sinh => {
                        CanonicalForm::new(UniPoly::zero(), UniPoly::one(), Modulus::Hyperbola)
                    }
                    _ => CanonicalForm::new(UniPoly::x(), UniPoly::zero(), Modulus::Hyperbola),
                };
                Ok(Value::Hyp(form))
            }
        },
        AstKind::Neg(inner) => Ok(match eval(inner)? {
            Value::Scalar(a) => Value::Scalar(-a),
            Value::Circ(f) => Value::Circ(-f),
            Value::Hyp(c) => Value::Hyp(c.neg()),
        }),
        AstKind::Add(a, b) => apply(BinOp::Add, eval(a)?, eval(b)?, ast.pos),
        AstKind::Sub(a, b) => apply(BinOp::Sub, eval(a)?, eval(b)?, ast.pos),
        AstKind::Mul(a, b) => apply(BinOp::Mul, eval(a)?, eval(b)?, ast.pos),
        AstKind::Pow(base, exponent) => Ok(power(eval(base)?, *exponent)),
    }
}

/// Evaluates a parsed expression into one of the two families. Expressions
/// without any trig function come back as circular constants.
pub fn lower(ast: &Ast) -> Result<Lowered, LowerError> {
    Ok(match eval(ast)? {
        Value::Scalar(a) => Lowered::Circular(TrigPoly::constant(a)),
        Value::Circ(f) => Lowered::Circular(f),
        Value::Hyp(c) => Lowered::Hyperbolic(c),
    })
}

/// Direct numeric evaluation of the expression tree at the argument `t`,
/// with no algebraic rewriting at all — the independent side of a float
/// cross-check against [`lower`]. `None` when a rational constant does not
/// fit in `f64`; overflow during evaluation surfaces as non-finite parts.
pub fn eval_f64(ast: &Ast, t: f64) -> Option<Complex64> {
    match &ast.kind {
        AstKind::Rational(r) => GaussRational::real(r.clone()).to_f64(),
        AstKind::ImagUnit => Some(Complex64::new(0.0, 1.0)),
        AstKind::Wave { func, multiplier } => {
            let arg = f64::from(*multiplier) * t;
            let value = match func {
                TrigFn::Sin => libm::sin(arg),
                TrigFn::Cos => libm::cos(arg),
                TrigFn::Sinh => libm::sinh(arg),
                TrigFn::Cosh => libm::cosh(arg),
            };
            Some(Complex64::new(value, 0.0))
        }
        AstKind::Neg(inner) => Some(-eval_f64(inner, t)?),
        AstKind::Add(a, b) => Some(eval_f64(a, t)? + eval_f64(b, t)?),
        AstKind::Sub(a, b) => Some(eval_f64(a, t)? - eval_f64(b, t)?),
        AstKind::Mul(a, b) => Some(eval_f64(a, t)? * eval_f64(b, t)?),
        AstKind::Pow(base, exponent) => Some(eval_f64(base, t)?.powu(*exponent)),
    }
}

/// Parses a polynomial in the curve coordinates `x`, `y` (same operator
/// grammar, atoms `number | 'i' | 'x' | 'y' | '(' expr ')'`).
pub fn parse_bipoly(src: &str) -> Result<BiPoly, ParseError> {
    let mut tokens = Tokens::new(src)?;
    let poly = bipoly_expr(&mut tokens)?;
    tokens.at_end()?;
    Ok(poly)
}

fn bipoly_expr(t: &mut Tokens) -> Result<BiPoly, ParseError> {
    let mut lhs = bipoly_term(t)?;
    loop {
        let add = match t.peek() {
            Some(TokenKind::Plus) => true,
            Some(TokenKind::Minus) => false,
            _ => return Ok(lhs),
        };
        t.advance();
        let rhs = bipoly_term(t)?;
        lhs = if add { &lhs + &rhs } else { &lhs - &rhs };
    }
}

fn bipoly_term(t: &mut Tokens) -> Result<BiPoly, ParseError> {
    let mut lhs = bipoly_factor(t)?;
    while t.peek() == Some(&TokenKind::Star) {
        t.advance();
        let rhs = bipoly_factor(t)?;
        lhs = &lhs * &rhs;
    }
    Ok(lhs)
}

fn bipoly_factor(t: &mut Tokens) -> Result<BiPoly, ParseError> {
    if t.peek() == Some(&TokenKind::Minus) {
        t.advance();
        return Ok(-&bipoly_factor(t)?);
    }
    let atom = bipoly_atom(t)?;
    if t.peek() == Some(&TokenKind::Caret) {
        t.advance();
        let exponent = t.small_int("an integer exponent")?;
        return Ok(pow_by_squaring(
            BiPoly::constant(GaussRational::from(1)),
            atom,
            exponent,
            |a, b| a * b,
        ));
    }
    Ok(atom)
}

fn bipoly_atom(t: &mut Tokens) -> Result<BiPoly, ParseError> {
    match t.peek() {
        Some(TokenKind::Int(_)) => {
            let Some(TokenKind::Int(numerator)) = t.advance().map(|tok| tok.kind) else {
                unreachable!("peeked an integer");
            };
            let value = rational_tail(t, numerator)?;
            Ok(BiPoly::constant(GaussRational::real(value)))
        }
        Some(TokenKind::ImagUnit) => {
            t.advance();
            Ok(BiPoly::constant(GaussRational::i()))
        }
        Some(TokenKind::VarX) => {
            t.advance();
            Ok(BiPoly::x())
        }
        Some(TokenKind::VarY) => {
            t.advance();
            Ok(BiPoly::y())
        }
        Some(TokenKind::LParen) => {
            t.advance();
            let inner = bipoly_expr(t)?;
            t.expect(&TokenKind::RParen, "')'")?;
            Ok(inner)
        }
        _ => Err(t.error("a number, 'i', 'x', 'y', or '('")),
    }
}
