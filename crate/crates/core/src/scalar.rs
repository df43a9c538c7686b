//! The scalar abstraction the linear algebra and balancing code is generic
//! over.
//!
//! Exact types (`QuadraticScalar`, `BigRational`) treat only zero as
//! negligible and eliminate with the first usable pivot, so results are
//! canonical. Floating-point types use an absolute tolerance and partial
//! pivoting; they exist for cross-checks, not for producing weights.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::field::QuadraticScalar;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    /// Whether arithmetic is exact. Decides the elimination strategy.
    const EXACT: bool;

    /// Treated as zero by elimination and balancing checks.
    fn is_negligible(&self) -> bool;

    /// -1, 0 or +1 (0 for negligible values).
    fn signum(&self) -> i8;

    /// Rough absolute value, used for pivot choice in inexact types.
    fn magnitude(&self) -> f64;
}

impl Scalar for QuadraticScalar {
    const EXACT: bool = true;

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn signum(&self) -> i8 {
        self.sign()
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().map_or(f64::INFINITY, f64::abs)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn signum(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().map_or(f64::INFINITY, f64::abs)
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn is_negligible(&self) -> bool {
                self.abs() <= $tol
            }

            fn signum(&self) -> i8 {
                if self.is_negligible() {
                    0
                } else if *self > 0.0 {
                    1
                } else {
                    -1
                }
            }

            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);
