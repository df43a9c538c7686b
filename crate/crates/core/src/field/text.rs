//! Canonical text form of quadratic scalars and decimal approximation.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! S := R | R "+" R SURD | R "-" R SURD | R SURD
//! R := ["-"] digits ["/" digits]
//! SURD := "r" digits
//! ```
//!
//! The canonical form omits zero parts, so `√5` is written `1r5` and `5/4`
//! alone is `5/4`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::quadratic::{common_denominator, QuadraticScalar, Radicand};
use super::FieldError;

/// Parses a scalar. The radicand comes from the `r<d>` token; rationals get
/// the default radicand.
pub fn parse_scalar(text: &str) -> Result<QuadraticScalar, FieldError> {
    Parser::new(text).scalar(None)
}

/// Parses a scalar that must belong to `Q(√radicand)`.
pub fn parse_scalar_in(text: &str, radicand: Radicand) -> Result<QuadraticScalar, FieldError> {
    Parser::new(text).scalar(Some(radicand))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> FieldError {
        FieldError::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt, FieldError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit run parses"))
    }

    fn rational(&mut self) -> Result<BigRational, FieldError> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let numer = self.digits()?;
        let denom = if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                self.pos = at;
                return Err(self.err("zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let r = BigRational::new(numer, denom);
        Ok(if negative { -r } else { r })
    }

    fn surd(&mut self) -> Result<Option<Radicand>, FieldError> {
        if self.peek() != Some(b'r') {
            return Ok(None);
        }
        self.pos += 1;
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let d: u32 = s.parse().map_err(|_| self.err("expected radicand after 'r'"))?;
        Radicand::new(d).map(Some).map_err(|_| self.err(format!("radicand {d} is not squarefree")))
    }

    fn scalar(mut self, expected: Option<Radicand>) -> Result<QuadraticScalar, FieldError> {
        let first = self.rational()?;
        let (a, b, radicand) = if let Some(r) = self.surd()? {
            (BigRational::zero(), first, Some(r))
        } else {
            match self.peek() {
                Some(op @ (b'+' | b'-')) => {
                    self.pos += 1;
                    let second = self.rational()?;
                    let r = self.surd()?.ok_or_else(|| self.err("expected surd token 'r<d>'"))?;
                    let b = if op == b'-' { -second } else { second };
                    (first, b, Some(r))
                }
                _ => (first, BigRational::zero(), None),
            }
        };
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        let radicand = match (radicand, expected) {
            (Some(r), Some(e)) if r != e => {
                return Err(FieldError::RadicandMismatch(r.get(), e.get()));
            }
            (Some(r), _) => r,
            (None, Some(e)) => e,
            (None, None) => Radicand::default(),
        };
        Ok(QuadraticScalar::new(a, b, radicand))
    }
}

fn format_rational(r: &BigRational, out: &mut String) {
    out.push_str(&r.numer().to_string());
    if !r.denom().is_one() {
        out.push('/');
        out.push_str(&r.denom().to_string());
    }
}

/// Canonical text: `p/q`, `p/q+r/sr5`, `p/q-r/sr5` or `r/sr5`.
pub fn format_scalar(x: &QuadraticScalar) -> String {
    let (a, b) = (x.rational_part(), x.surd_part());
    let mut out = String::new();
    if b.is_zero() {
        format_rational(a, &mut out);
        return out;
    }
    if !a.is_zero() {
        format_rational(a, &mut out);
        out.push(if b.is_negative() { '-' } else { '+' });
        format_rational(&b.abs(), &mut out);
    } else {
        format_rational(b, &mut out);
    }
    out.push('r');
    out.push_str(&x.radicand().to_string());
    out
}

/// Decimal approximation with `digits` places after the point, rounded half
/// away from zero. Computed with integer square roots only.
pub fn to_decimal(x: &QuadraticScalar, digits: usize) -> String {
    let negative = x.sign() < 0;
    let x = x.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    // |x|·10^k + 1/2 = (P + Q·√d) / D with integers P, Q and D > 0
    let den: BigInt = common_denominator(&x) * 2;
    let p: BigInt = (x.rational_part() * BigRational::from_integer(den.clone())).to_integer() * &scale + &den / 2;
    let q = (x.surd_part() * BigRational::from_integer(den.clone())).to_integer() * &scale;
    let floor_surd = floor_sqrt_multiple(&q, x.radicand());
    let rounded: BigInt = (p + floor_surd).div_floor(&den);
    let mut body = rounded.to_string();
    if digits > 0 {
        if body.len() <= digits {
            body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
        }
        body.insert(body.len() - digits, '.');
    }
    if negative && rounded.sign() != Sign::NoSign {
        body.insert(0, '-');
    }
    body
}

/// `floor(q·√d)` for an integer `q`.
fn floor_sqrt_multiple(q: &BigInt, d: Radicand) -> BigInt {
    if q.is_zero() {
        return BigInt::zero();
    }
    let root = (q * q * BigInt::from(d.get())).sqrt();
    // q·√d is irrational, so the integer root is strictly below it
    if q.is_positive() {
        root
    } else {
        -root - 1
    }
}
