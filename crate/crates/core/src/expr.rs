//! Expression language for plane elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' int)?
//! base   := 'x' | 'y' | 'u' | 'q' | 'i' | scalar | '(' expr ')'
//! scalar := digits ('/' digits | '.' digits)?
//! ```
//!
//! Whitespace is ignored. Exponents are nonnegative except on `q`. Decimal
//! literals are converted to rationals exactly, so `0.3` means `3/10`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::plane::PlaneElement;
use crate::scalar::{fmt_rational, GaussianRational, QScalar};

/// Largest exponent accepted on a non-`q` base.
const MAX_EXPONENT: i64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    X,
    Y,
    U,
    Q,
    /// The imaginary unit.
    I,
    Scalar(BigRational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Neg(Box<Expr>),
    Paren(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(char),
    Num(BigRational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        column,
        message: message.into(),
    }
}

/// Tokens paired with their 1-based starting column.
fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            'x' | 'y' | 'u' | 'q' | 'i' => Some(Tok::Ident(c)),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, col));
            i += 1;
            continue;
        }
        if !c.is_ascii_digit() {
            return Err(syntax(col, format!("unexpected character '{c}'")));
        }
        let digits = |i: &mut usize| -> String {
            let start = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[start..*i].iter().collect()
        };
        let whole: BigInt = digits(&mut i).parse().expect("ascii digits");
        let value = match chars.get(i) {
            Some('/') => {
                i += 1;
                let dcol = i + 1;
                let d = digits(&mut i);
                if d.is_empty() {
                    return Err(syntax(dcol, "expected denominator after '/'"));
                }
                let den: BigInt = d.parse().expect("ascii digits");
                if den.is_zero() {
                    return Err(syntax(dcol, "zero denominator"));
                }
                BigRational::new(whole, den)
            }
            Some('.') => {
                i += 1;
                let frac = digits(&mut i);
                if frac.is_empty() {
                    return Err(syntax(i + 1, "expected digits after '.'"));
                }
                let scale = BigInt::from(10u32).pow(frac.len() as u32);
                let f: BigInt = frac.parse().expect("ascii digits");
                BigRational::new(whole * &scale + f, scale)
            }
            _ => BigRational::from_integer(whole),
        };
        out.push((Tok::Num(value), col));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    /// Column of the current token, or of the last token at end of input.
    fn col(&self) -> usize {
        match self.toks.get(self.pos) {
            Some(t) => t.1,
            None => self.end_col,
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let n = match self.bump() {
            Some(Tok::Num(n)) if n.is_integer() => n.to_integer(),
            _ => return Err(syntax(col, "expected an integer exponent")),
        };
        let n: i64 = i64::try_from(&n).map_err(|_| syntax(col, "exponent too large"))?;
        let e = if negative { -n } else { n };
        if e < 0 && base != Expr::Q {
            return Err(syntax(col, "negative exponents are only allowed on q"));
        }
        if base != Expr::Q && e > MAX_EXPONENT {
            return Err(syntax(col, format!("exponent exceeds {MAX_EXPONENT}")));
        }
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn base(&mut self) -> Result<Expr> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Ident('x')) => Ok(Expr::X),
            Some(Tok::Ident('y')) => Ok(Expr::Y),
            Some(Tok::Ident('u')) => Ok(Expr::U),
            Some(Tok::Ident('q')) => Ok(Expr::Q),
            Some(Tok::Ident(_)) => Ok(Expr::I),
            Some(Tok::Num(n)) => Ok(Expr::Scalar(n)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        Ok(Expr::Paren(Box::new(inner)))
                    }
                    Some(_) => Err(syntax(self.col(), "expected ')'")),
                    None => Err(syntax(col, "unclosed '('")),
                }
            }
            Some(t) => Err(syntax(col, format!("unexpected {}", describe(&t)))),
            None => Err(syntax(col, "unexpected end of input")),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::Ident(_) | Tok::Num(_) => "operand",
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(syntax(1, "empty expression"));
    }
    let end_col = toks.last().map_or(1, |t| t.1);
    let mut p = Parser {
        toks,
        pos: 0,
        end_col,
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        let col = p.col();
        let t = p.bump().expect("checked above");
        return Err(syntax(col, format!("unexpected {}", describe(&t))));
    }
    Ok(e)
}

impl Expr {
    pub fn eval(&self) -> PlaneElement {
        match self {
            Expr::X => PlaneElement::x(),
            Expr::Y => PlaneElement::y(),
            Expr::U => PlaneElement::u(),
            Expr::Q => PlaneElement::scalar(QScalar::q()),
            Expr::I => PlaneElement::from(GaussianRational::i()),
            Expr::Scalar(r) => PlaneElement::from(GaussianRational::from_rational(r.clone())),
            Expr::Add(a, b) => a.eval() + b.eval(),
            Expr::Sub(a, b) => a.eval() - b.eval(),
            Expr::Mul(a, b) => a.eval() * b.eval(),
            Expr::Pow(b, e) => {
                if **b == Expr::Q {
                    PlaneElement::scalar(QScalar::q_pow(*e))
                } else {
                    b.eval().pow(*e as u32)
                }
            }
            Expr::Neg(a) => -a.eval(),
            Expr::Paren(a) => a.eval(),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::X => write!(f, "x"),
            Expr::Y => write!(f, "y"),
            Expr::U => write!(f, "u"),
            Expr::Q => write!(f, "q"),
            Expr::I => write!(f, "i"),
            Expr::Scalar(r) => write!(f, "{}", fmt_rational(r)),
            Expr::Add(a, b) => write!(f, "{a} + {b}"),
            Expr::Sub(a, b) => write!(f, "{a} - {b}"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Pow(b, e) => write!(f, "{b}^{e}"),
            Expr::Neg(a) => write!(f, "-{a}"),
            Expr::Paren(a) => write!(f, "({a})"),
        }
    }
}

/// Parses and evaluates to normal form.
pub fn parse_plane(src: &str) -> Result<PlaneElement> {
    Ok(parse(src)?.eval())
}

/// Parses a Laurent polynomial in `q`; the expression must not involve `x`, `y`, `u`.
pub fn parse_qscalar(src: &str) -> Result<QScalar> {
    parse_plane(src)?
        .as_scalar()
        .ok_or_else(|| Error::InvalidParameter(format!("'{src}' is not a scalar")))
}

/// Parses a Gaussian rational such as `1/2`, `-3`, `0.25+1/3*i`.
pub fn parse_gaussian(src: &str) -> Result<GaussianRational> {
    parse_qscalar(src)?
        .as_constant()
        .ok_or_else(|| Error::InvalidParameter(format!("'{src}' depends on q")))
}

/// Parses a nonzero positive rational such as `1/2` or `2.5`.
pub fn parse_positive_rational(src: &str) -> Result<BigRational> {
    let g = parse_gaussian(src)?;
    if !g.is_real() || g.re <= BigRational::zero() {
        return Err(Error::InvalidParameter(format!("'{src}' is not a positive rational")));
    }
    Ok(g.re)
}
