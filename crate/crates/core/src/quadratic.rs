//! Exact arithmetic in the field `Q(sqrt 5)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `a + b sqrt(5)` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticNumber {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadraticNumber {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadraticNumber { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        QuadraticNumber::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num / den`, rational.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        QuadraticNumber::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn sqrt5() -> Self {
        QuadraticNumber::new(BigRational::zero(), BigRational::one())
    }

    /// The golden ratio `(1 + sqrt 5) / 2`.
    pub fn golden() -> Self {
        let half = BigRational::new(1.into(), 2.into());
        QuadraticNumber::new(half.clone(), half)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b sqrt(5)`.
    pub fn conjugate(&self) -> Self {
        QuadraticNumber::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a^2 - 5 b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(5.into()) * &self.b * &self.b
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(QuadraticNumber::new(c.a / &n, c.b / n))
    }
}

impl Zero for QuadraticNumber {
    fn zero() -> Self {
        QuadraticNumber::from_int(0)
    }

    fn is_zero(&self) -> bool {
        QuadraticNumber::is_zero(self)
    }
}

impl One for QuadraticNumber {
    fn one() -> Self {
        QuadraticNumber::from_int(1)
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        QuadraticNumber::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        QuadraticNumber::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let five = BigRational::from_integer(5.into());
        QuadraticNumber::new(
            &self.a * &rhs.a + five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Div for &QuadraticNumber {
    type Output = QuadraticNumber;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self * &rhs.inverse().expect("division by zero in Q(sqrt 5)")
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, rhs: QuadraticNumber) -> QuadraticNumber {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -&self
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt5", self.b)
        } else {
            write!(f, "{} + {}*sqrt5", self.a, self.b)
        }
    }
}
