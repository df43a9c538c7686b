//! Elements `a + b·√d` of a real quadratic field with rational `a`, `b`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::FieldError;

/// Radicand used when none is given.
pub const DEFAULT_RADICAND: u32 = 5;

/// A squarefree integer `d >= 2`; the field is `Q(√d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radicand(u32);

impl Radicand {
    pub fn new(d: u32) -> Result<Self, FieldError> {
        if d < 2 || !is_squarefree(d) {
            return Err(FieldError::BadRadicand(d));
        }
        Ok(Radicand(d))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for Radicand {
    fn default() -> Self {
        Radicand(DEFAULT_RADICAND)
    }
}

impl fmt::Display for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_squarefree(d: u32) -> bool {
    let mut k = 2u64;
    while k * k <= d as u64 {
        if (d as u64).is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Exact element `a + b·√d`.
///
/// Rational values (`b = 0`) are compatible with every radicand, so `0` and
/// `1` built through [`Zero`]/[`One`] combine freely with elements of any
/// field. Two irrational operands must agree on the radicand; the operator
/// impls panic otherwise, the `checked_*` methods return an error.
#[derive(Clone, Debug)]
pub struct QuadraticScalar {
    a: BigRational,
    b: BigRational,
    radicand: Radicand,
}

impl QuadraticScalar {
    pub fn new(a: BigRational, b: BigRational, radicand: Radicand) -> Self {
        QuadraticScalar { a, b, radicand }
    }

    /// `a + b·√5` from small integer fractions; handy for constants and tests.
    ///
    /// Panics if either denominator is zero.
    pub fn from_fracs(a: (i64, i64), b: (i64, i64)) -> Self {
        QuadraticScalar::new(ratio(a.0, a.1), ratio(b.0, b.1), Radicand::default())
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadraticScalar::new(a, BigRational::zero(), Radicand::default())
    }

    pub fn from_int(n: i64) -> Self {
        QuadraticScalar::from_rational(BigRational::from_integer(n.into()))
    }

    /// `√d` itself.
    pub fn sqrt_radicand(radicand: Radicand) -> Self {
        QuadraticScalar::new(BigRational::zero(), BigRational::one(), radicand)
    }

    /// `(1 + √5) / 2`.
    pub fn golden_ratio() -> Self {
        QuadraticScalar::from_fracs((1, 2), (1, 2))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> Radicand {
        self.radicand
    }

    /// Same value, tagged with `radicand`. Fails for irrational values of
    /// another field.
    pub fn with_radicand(mut self, radicand: Radicand) -> Result<Self, FieldError> {
        if !self.b.is_zero() && self.radicand != radicand {
            return Err(FieldError::RadicandMismatch(self.radicand.get(), radicand.get()));
        }
        self.radicand = radicand;
        Ok(self)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn conjugate(&self) -> Self {
        QuadraticScalar::new(self.a.clone(), -self.b.clone(), self.radicand)
    }

    /// Field norm `a² − d·b²`; zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - d_ratio(self.radicand) * &self.b * &self.b
    }

    /// Sign of the real value, decided without floating point.
    ///
    /// With mixed component signs the larger of `|a|` and `|b|·√d` wins; the
    /// comparison `a² ⋛ d·b²` is done on cross-multiplied integers. Equality
    /// there is impossible for `b ≠ 0` since `d` is not a square.
    pub fn sign(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 || sa == sb {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // a = p/q, b = r/s:  a² vs d·b²  <=>  p²·s² vs d·r²·q²
        let (p, q) = (self.a.numer(), self.a.denom());
        let (r, s) = (self.b.numer(), self.b.denom());
        let lhs = p * p * s * s;
        let rhs = BigInt::from(self.radicand.get()) * r * r * q * q;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            _ => sb,
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    fn join(&self, other: &Self) -> Result<Radicand, FieldError> {
        if self.b.is_zero() {
            Ok(other.radicand)
        } else if other.b.is_zero() || self.radicand == other.radicand {
            Ok(self.radicand)
        } else {
            Err(FieldError::RadicandMismatch(self.radicand.get(), other.radicand.get()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        let radicand = self.join(other)?;
        Ok(QuadraticScalar::new(&self.a + &other.a, &self.b + &other.b, radicand))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        let radicand = self.join(other)?;
        Ok(QuadraticScalar::new(&self.a - &other.a, &self.b - &other.b, radicand))
    }

    /// `(a + b√d)(c + e√d) = (ac + d·be) + (ae + bc)√d`
    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        let radicand = self.join(other)?;
        if other.b.is_zero() {
            return Ok(QuadraticScalar::new(&self.a * &other.a, &self.b * &other.a, radicand));
        }
        if self.b.is_zero() {
            return Ok(QuadraticScalar::new(&self.a * &other.a, &self.a * &other.b, radicand));
        }
        let a = &self.a * &other.a + d_ratio(radicand) * &self.b * &other.b;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(QuadraticScalar::new(a, b, radicand))
    }

    /// Multiplies by the conjugate of `other` and divides by its norm.
    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        if other.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let radicand = self.join(other)?;
        let norm = other.norm();
        let num = self.checked_mul(&other.conjugate())?;
        Ok(QuadraticScalar::new(num.a / &norm, num.b / norm, radicand))
    }

    pub fn recip(&self) -> Result<Self, FieldError> {
        QuadraticScalar::one().checked_div(self)
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, exp: i32) -> Result<Self, FieldError> {
        let mut base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = QuadraticScalar::one().with_radicand(self.radicand)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn d_ratio(r: Radicand) -> BigRational {
    BigRational::from_integer(BigInt::from(r.get()))
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialEq for QuadraticScalar {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.radicand == other.radicand)
    }
}

impl Eq for QuadraticScalar {}

impl Hash for QuadraticScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.radicand.hash(state);
        }
    }
}

impl PartialOrd for QuadraticScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(diff.sign().cmp(&0))
    }
}

impl Zero for QuadraticScalar {
    fn zero() -> Self {
        QuadraticScalar::from_rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadraticScalar {
    fn one() -> Self {
        QuadraticScalar::from_rational(BigRational::one())
    }
}

impl FromPrimitive for QuadraticScalar {
    fn from_i64(n: i64) -> Option<Self> {
        Some(QuadraticScalar::from_int(n))
    }

    fn from_u64(n: u64) -> Option<Self> {
        Some(QuadraticScalar::from_rational(BigRational::from_integer(n.into())))
    }
}

impl ToPrimitive for QuadraticScalar {
    fn to_i64(&self) -> Option<i64> {
        self.to_rational().filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_i64())
    }

    fn to_u64(&self) -> Option<u64> {
        self.to_rational().filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_u64())
    }

    fn to_f64(&self) -> Option<f64> {
        let root = (self.radicand.get() as f64).sqrt();
        Some(self.a.to_f64()? + self.b.to_f64()? * root)
    }
}

impl Neg for QuadraticScalar {
    type Output = QuadraticScalar;
    fn neg(self) -> Self::Output {
        QuadraticScalar::new(-self.a, -self.b, self.radicand)
    }
}

impl Neg for &QuadraticScalar {
    type Output = QuadraticScalar;
    fn neg(self) -> Self::Output {
        QuadraticScalar::new(-&self.a, -&self.b, self.radicand)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $Trait<&'a QuadraticScalar> for &'a QuadraticScalar {
            type Output = QuadraticScalar;
            fn $method(self, rhs: &'a QuadraticScalar) -> QuadraticScalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $Trait<QuadraticScalar> for QuadraticScalar {
            type Output = QuadraticScalar;
            fn $method(self, rhs: QuadraticScalar) -> QuadraticScalar {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $Trait<&'a QuadraticScalar> for QuadraticScalar {
            type Output = QuadraticScalar;
            fn $method(self, rhs: &'a QuadraticScalar) -> QuadraticScalar {
                (&self).$method(rhs)
            }
        }

        impl<'a> $Trait<QuadraticScalar> for &'a QuadraticScalar {
            type Output = QuadraticScalar;
            fn $method(self, rhs: QuadraticScalar) -> QuadraticScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl fmt::Display for QuadraticScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_scalar(self))
    }
}

impl std::str::FromStr for QuadraticScalar {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::text::parse_scalar(s)
    }
}

impl From<i64> for QuadraticScalar {
    fn from(n: i64) -> Self {
        QuadraticScalar::from_int(n)
    }
}

impl From<BigRational> for QuadraticScalar {
    fn from(r: BigRational) -> Self {
        QuadraticScalar::from_rational(r)
    }
}

/// Least common multiple of the two component denominators.
pub(crate) fn common_denominator(x: &QuadraticScalar) -> BigInt {
    x.a.denom().lcm(x.b.denom())
}
