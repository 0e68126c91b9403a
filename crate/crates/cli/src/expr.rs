//! Polynomial expressions in `X` and `Y`.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary ('*' unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! exponent := INT ('^' exponent)?          right-associative
//! atom     := INT ('/' INT)? | 'X' | 'Y' | '(' expr ')'
//! ```

use std::fmt;

use implicit_series::{BiSeries, Field, FieldDescriptor};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    X,
    Y,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    Syntax { offset: usize, message: String },
    ExponentNegative { offset: usize },
    LiteralNotInField { literal: String, field: FieldDescriptor },
}

impl ExprError {
    pub fn is_syntax(&self) -> bool {
        !matches!(self, ExprError::LiteralNotInField { .. })
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            ExprError::ExponentNegative { offset } => {
                write!(f, "syntax error at byte {offset}: exponents must be nonnegative integers")
            }
            ExprError::LiteralNotInField { literal, field } => {
                write!(f, "literal {literal} does not exist in field {field}")
            }
        }
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
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

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "`{n}`"),
            Token::X => f.write_str("`X`"),
            Token::Y => f.write_str("`Y`"),
            Token::Plus => f.write_str("`+`"),
            Token::Minus => f.write_str("`-`"),
            Token::Star => f.write_str("`*`"),
            Token::Slash => f.write_str("`/`"),
            Token::Caret => f.write_str("`^`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let token = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                pos += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n: BigInt = text[start..pos].parse().expect("ascii digits");
                tokens.push((start, Token::Int(n)));
                continue;
            }
            b'X' => Token::X,
            b'Y' => Token::Y,
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            _ => {
                let ch = text[pos..].chars().next().expect("in bounds");
                return Err(ExprError::Syntax {
                    offset: pos,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        tokens.push((pos, token));
        pos += 1;
    }
    tokens.push((text.len(), Token::End));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        if t != Token::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            offset: self.offset(),
            message: format!("expected {expected}, found {}", self.peek()),
        })
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Token::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if *self.peek() == Token::Caret {
            self.bump();
            let e = self.exponent()?;
            let offset = self.offset();
            let e = e.to_u64().ok_or_else(|| ExprError::Syntax {
                offset,
                message: "exponent too large".into(),
            })?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<BigInt, ExprError> {
        let offset = self.offset();
        let base = match self.bump() {
            Token::Int(n) => n,
            Token::Minus => return Err(ExprError::ExponentNegative { offset }),
            _ => {
                self.pos -= 1;
                return self.error("a nonnegative integer exponent");
            }
        };
        if *self.peek() == Token::Caret {
            self.bump();
            let e = self.exponent()?;
            let e = e.to_u32().filter(|&e| e <= 64).ok_or_else(|| ExprError::Syntax {
                offset,
                message: "exponent too large".into(),
            })?;
            return Ok(num_traits::pow(base, e as usize));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().clone() {
            Token::Int(n) => {
                self.bump();
                if *self.peek() == Token::Slash {
                    self.bump();
                    match self.peek().clone() {
                        Token::Int(d) => {
                            self.bump();
                            Ok(Expr::Ratio(n, d))
                        }
                        _ => self.error("an integer denominator"),
                    }
                } else {
                    Ok(Expr::Int(n))
                }
            }
            Token::X => {
                self.bump();
                Ok(Expr::X)
            }
            Token::Y => {
                self.bump();
                Ok(Expr::Y)
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Token::RParen {
                    return self.error("`)`");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.error("a number, `X`, `Y` or `(`"),
        }
    }
}

/// Parses `text` and checks that every literal exists in the field `d`.
pub fn parse_expression(text: &str, d: FieldDescriptor) -> Result<Expr, ExprError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let expr = parser.expr()?;
    if *parser.peek() != Token::End {
        return parser.error("an operator or end of input");
    }
    check_literals(&expr, d)?;
    Ok(expr)
}

fn check_literals(e: &Expr, d: FieldDescriptor) -> Result<(), ExprError> {
    match e {
        Expr::Ratio(n, den) => {
            let vanishes = match d.modulus() {
                None => den.is_zero(),
                Some(p) => (den % BigInt::from(p)).is_zero(),
            };
            if vanishes {
                return Err(ExprError::LiteralNotInField {
                    literal: format!("{n}/{den}"),
                    field: d,
                });
            }
            Ok(())
        }
        Expr::Int(_) | Expr::X | Expr::Y => Ok(()),
        Expr::Neg(a) | Expr::Pow(a, _) => check_literals(a, d),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            check_literals(a, d)?;
            check_literals(b, d)
        }
    }
}

impl Expr {
    /// Upper bounds on the `X`- and `Y`-degree.
    pub fn degree_bound(&self) -> (u64, u64) {
        match self {
            Expr::Int(_) | Expr::Ratio(..) => (0, 0),
            Expr::X => (1, 0),
            Expr::Y => (0, 1),
            Expr::Neg(a) => a.degree_bound(),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (a, b) = (a.degree_bound(), b.degree_bound());
                (a.0.max(b.0), a.1.max(b.1))
            }
            Expr::Mul(a, b) => {
                let (a, b) = (a.degree_bound(), b.degree_bound());
                (a.0.saturating_add(b.0), a.1.saturating_add(b.1))
            }
            Expr::Pow(a, e) => {
                let (dx, dy) = a.degree_bound();
                (dx.saturating_mul(*e), dy.saturating_mul(*e))
            }
        }
    }

    pub fn mentions_x(&self) -> bool {
        match self {
            Expr::X => true,
            Expr::Int(_) | Expr::Ratio(..) | Expr::Y => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.mentions_x(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.mentions_x() || b.mentions_x(),
        }
    }

    /// Evaluates the expression in bivariate series arithmetic on the box
    /// `(x_order, y_order)`.
    pub fn lower<F: Field>(&self, k: &F, x_order: usize, y_order: usize) -> Result<BiSeries<F>, ExprError> {
        let constant = |c| BiSeries::constant(k.clone(), c, x_order, y_order);
        Ok(match self {
            Expr::Int(n) => constant(k.from_bigint(n)),
            Expr::Ratio(n, d) => constant(k.from_ratio(n, d).ok_or_else(|| ExprError::LiteralNotInField {
                literal: format!("{n}/{d}"),
                field: k.descriptor(),
            })?),
            Expr::X => BiSeries::x(k.clone(), x_order, y_order),
            Expr::Y => BiSeries::y(k.clone(), x_order, y_order),
            Expr::Neg(a) => a.lower(k, x_order, y_order)?.neg(),
            Expr::Add(a, b) => a
                .lower(k, x_order, y_order)?
                .add(&b.lower(k, x_order, y_order)?)
                .expect("same box"),
            Expr::Sub(a, b) => a
                .lower(k, x_order, y_order)?
                .sub(&b.lower(k, x_order, y_order)?)
                .expect("same box"),
            Expr::Mul(a, b) => a
                .lower(k, x_order, y_order)?
                .mul(&b.lower(k, x_order, y_order)?)
                .expect("same box"),
            Expr::Pow(a, e) => a.lower(k, x_order, y_order)?.pow(*e),
        })
    }
}

/// Canonical text for a bivariate polynomial, terms ordered by `X`-degree
/// then `Y`-degree. Parsing the result reproduces the same coefficients.
pub fn format_polynomial<F: Field>(p: &BiSeries<F>) -> String {
    let k = p.field();
    let mut out = String::new();
    for (i, j, c) in p.terms() {
        let mut coeff = k.format(c);
        let negative = coeff.starts_with('-');
        if negative {
            coeff.remove(0);
        }
        let mut factors = Vec::new();
        match i {
            0 => {}
            1 => factors.push("X".to_string()),
            _ => factors.push(format!("X^{i}")),
        }
        match j {
            0 => {}
            1 => factors.push("Y".to_string()),
            _ => factors.push(format!("Y^{j}")),
        }
        if coeff != "1" || factors.is_empty() {
            factors.insert(0, coeff);
        }
        let body = factors.join("*");
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
