//! Arbitrary-precision exact scalars.
//!
//! Three kinds of numbers carry every certified statement in this crate:
//! [`Integer`], [`Rational`], and [`PiPowerRational`] for exact values of
//! the shape `c * pi^m` with `c` rational and `m >= 0`.  All comparisons on
//! the first two are exact; comparisons mixing different powers of pi go
//! through a certified rational enclosure of pi in [`pi`].

pub mod pi;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;

/// Arbitrary-precision rational, stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from machine-word numerator and denominator.
///
/// Panics if `denom` is zero.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(Integer::from(numer), Integer::from(denom))
}

/// Raises `base` to the power `exp` exactly, with `base^0 = 1`.
pub fn integer_pow(base: &Integer, exp: u32) -> Integer {
    if exp == 0 {
        return Integer::one();
    }
    Pow::pow(base, exp)
}

/// Raises a rational to a nonnegative integer power exactly.
pub fn rational_pow(base: &Rational, exp: u32) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    // Powers of a reduced fraction stay reduced, so the raw constructor is
    // safe here.
    Rational::new_raw(Pow::pow(base.numer(), exp), Pow::pow(base.denom(), exp))
}

/// Returns the largest integer `r` with `r^2 <= x`.
pub fn isqrt_floor(x: &Integer) -> Result<Integer, Error> {
    if x.is_negative() {
        return Err(Error::NegativeInput {
            context: "integer square root",
        });
    }
    Ok(num_integer::Roots::sqrt(x))
}

/// An exact value `coeff * pi^pi_power`.
///
/// The representation is canonical: zero always carries power zero, so
/// structural equality (`==`) coincides with symbolic equality.  Values with
/// the same power compare numerically through their coefficients; comparing
/// across different powers requires a certified enclosure of pi and is
/// provided by [`PiPowerRational::numeric_cmp`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiPowerRational {
    coeff: Rational,
    pi_power: u32,
}

impl PiPowerRational {
    /// Creates `coeff * pi^pi_power`, normalising zero to power zero.
    pub fn new(coeff: Rational, pi_power: u32) -> Self {
        if coeff.is_zero() {
            Self { coeff, pi_power: 0 }
        } else {
            Self { coeff, pi_power }
        }
    }

    /// The rational value `coeff` with no pi factor.
    pub fn from_rational(coeff: Rational) -> Self {
        Self::new(coeff, 0)
    }

    /// The integer value `value` with no pi factor.
    pub fn from_integer(value: i64) -> Self {
        Self::from_rational(Rational::from_integer(Integer::from(value)))
    }

    /// `pi^power` with coefficient one.
    pub fn pi_to(power: u32) -> Self {
        Self::new(Rational::one(), power)
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_power(&self) -> u32 {
        self.pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Returns the coefficient when the value is a plain rational (power
    /// zero), `None` otherwise.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.pi_power == 0).then_some(&self.coeff)
    }

    /// Multiplies by a plain rational factor.
    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(&self.coeff * factor, self.pi_power)
    }

    /// Multiplies two values: coefficients multiply, powers add.
    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.coeff * &other.coeff, self.pi_power + other.pi_power)
    }

    /// Divides by `other`.  Returns `None` when `other` is zero or when the
    /// quotient would need a negative power of pi.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.pi_power < other.pi_power {
            return None;
        }
        Some(Self::new(
            &self.coeff / &other.coeff,
            self.pi_power - other.pi_power,
        ))
    }

    /// Compares two values numerically, certifying any comparison across
    /// distinct powers of pi with a rational enclosure of pi.
    pub fn numeric_cmp(&self, other: &Self) -> Result<Ordering, Error> {
        pi::compare_values(self, other)
    }

    /// Approximate floating-point value, for plotting and display only.
    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        c * std::f64::consts::PI.powi(self.pi_power as i32)
    }
}

/// Multiplies two pi-power rationals; see [`PiPowerRational::mul`].
pub fn pi_mul(a: &PiPowerRational, b: &PiPowerRational) -> PiPowerRational {
    a.mul(b)
}

impl fmt::Display for PiPowerRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{} * pi", self.coeff),
            p => write!(f, "{} * pi^{}", self.coeff, p),
        }
    }
}
