//! Correctly rounded decimal rendering.
//!
//! Output strings are the only place decimals appear in this crate, and
//! they are produced entirely by integer arithmetic: the value scaled by
//! `10^digits` is rounded to the nearest integer with ties to even, with
//! square roots and powers of pi handled through exact squared comparisons
//! and certified enclosures.  The same input therefore renders to the same
//! bytes on every platform.

use num_integer::Integer as IntegerOps;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::exact::{integer_pow, isqrt_floor, pi, rational_pow, Integer, Rational};
use crate::spectrum::{distinct_eigenvalue, SphereDim};
use crate::weyl::weyl_coefficient;

fn pow10(digits: u32) -> Integer {
    integer_pow(&Integer::from(10), digits)
}

// Nearest integer to a/b with ties to even, for a >= 0, b > 0.
fn round_half_even(a: &Integer, b: &Integer) -> Integer {
    let (q, r) = a.div_rem(b);
    let doubled: Integer = r * 2;
    match doubled.cmp(b) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q.is_odd() {
                q + 1
            } else {
                q
            }
        }
    }
}

fn render(magnitude: &Integer, digits: u32, negative: bool) -> String {
    let sign = if negative && !magnitude.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{magnitude}");
    }
    let mut s = magnitude.to_string();
    let width = digits as usize + 1;
    if s.len() < width {
        s = format!("{}{}", "0".repeat(width - s.len()), s);
    }
    let point = s.len() - digits as usize;
    format!("{sign}{}.{}", &s[..point], &s[point..])
}

/// Renders a rational to `digits` decimal places, round-half-even.
pub fn format_rational(value: &Rational, digits: u32) -> String {
    let negative = value.is_negative();
    let abs = value.abs();
    let scaled = abs.numer() * pow10(digits);
    let m = round_half_even(&scaled, abs.denom());
    render(&m, digits, negative)
}

/// Renders `scale * sqrt(radicand)` to `digits` decimal places.
///
/// The scaled value is rounded by comparing squares: with
/// `m = floor(|value| 10^digits)`, the half-way test is the exact integer
/// comparison `(2m+1)^2 b` versus `4a` where `a/b = value^2 10^(2 digits)`.
pub fn format_sqrt(scale: &Rational, radicand: &Integer, digits: u32) -> String {
    assert!(!radicand.is_negative(), "radicand must be nonnegative");
    let negative = scale.is_negative();
    let abs = scale.abs();
    let a = abs.numer() * abs.numer() * radicand * pow10(2 * digits);
    let b = abs.denom() * abs.denom();
    let m = isqrt_floor(&a.div_floor(&b)).expect("square of a real is nonnegative");
    let up = {
        let half_sq = integer_pow(&(&m * 2 + 1), 2) * &b;
        match half_sq.cmp(&(&a * 4)) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => m.is_odd(),
        }
    };
    let rounded = if up { m + 1 } else { m };
    render(&rounded, digits, negative)
}

/// Renders `coeff * pi^pi_power * sqrt(radicand)` (`pi_power >= 1`) to
/// `digits` decimal places.
///
/// Lower and upper bounds of the value are formed from a certified pi
/// enclosure and exact square-root bounds, and the precision is escalated
/// until both bounds round to the same string.  Because the value is
/// irrational it never sits on a rounding boundary, so the loop terminates
/// unless the precision cap is reached.
pub fn format_pi_power_sqrt(
    coeff: &Rational,
    pi_power: u32,
    radicand: &Rational,
    digits: u32,
) -> Result<String, Error> {
    assert!(pi_power >= 1, "use format_sqrt for plain square roots");
    assert!(!radicand.is_negative(), "radicand must be nonnegative");
    if coeff.is_zero() || radicand.is_zero() {
        return Ok(render(&Integer::zero(), digits, false));
    }
    let negative = coeff.is_negative();
    let abs = coeff.abs();
    let scale_10 = pow10(digits);
    let mut bits = pi::START_BITS;
    loop {
        let enc = pi::enclosure(bits);
        let den = radicand.denom() << bits;
        let u = isqrt_floor(&((radicand.numer() * radicand.denom()) << (2 * bits)))
            .expect("radicand is nonnegative");
        let sqrt_lo = Rational::new(u.clone(), den.clone());
        let sqrt_hi = Rational::new(u + 1, den);
        let v_lo = &abs * rational_pow(&enc.lo, pi_power) * sqrt_lo;
        let v_hi = &abs * rational_pow(&enc.hi, pi_power) * sqrt_hi;
        let m_lo = round_half_even(&(v_lo.numer() * &scale_10), v_lo.denom());
        let m_hi = round_half_even(&(v_hi.numer() * &scale_10), v_hi.denom());
        if m_lo == m_hi {
            return Ok(render(&m_lo, digits, negative));
        }
        if bits >= pi::MAX_BITS {
            return Err(Error::PrecisionExceeded { bits });
        }
        bits = (bits * 2).min(pi::MAX_BITS);
    }
}

/// The Weyl function value `w(v_k) = (2/n!) v_k^(n/2)` as a correctly
/// rounded decimal: an exact rational for even `n`, a rational multiple of
/// `sqrt(v_k)` for odd `n`.
pub fn weyl_node_decimal(dim: SphereDim, k: u64, digits: u32) -> String {
    let n = dim.get();
    let v = distinct_eigenvalue(dim, k);
    let coeff = weyl_coefficient(dim);
    if n.is_multiple_of(2) {
        let value = coeff * Rational::from_integer(integer_pow(&v, n / 2));
        format_rational(&value, digits)
    } else {
        let scale = coeff * Rational::from_integer(integer_pow(&v, (n - 1) / 2));
        format_sqrt(&scale, &v, digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    #[test]
    fn plain_rational_rounding() {
        assert_eq!(format_rational(&rational(1, 1), 3), "1.000");
        assert_eq!(format_rational(&rational(-22, 7), 4), "-3.1429");
        assert_eq!(format_rational(&rational(1, 3), 6), "0.333333");
        assert_eq!(format_rational(&rational(2, 3), 6), "0.666667");
    }

    #[test]
    fn ties_round_to_even() {
        assert_eq!(format_rational(&rational(1, 8), 2), "0.12");
        assert_eq!(format_rational(&rational(3, 8), 2), "0.38");
        assert_eq!(format_rational(&rational(1, 4), 1), "0.2");
        assert_eq!(format_rational(&rational(5, 2), 0), "2");
        assert_eq!(format_rational(&rational(7, 2), 0), "4");
        assert_eq!(format_rational(&rational(-1, 8), 2), "-0.12");
    }

    #[test]
    fn negative_zero_never_appears() {
        assert_eq!(format_rational(&rational(-1, 1000), 2), "0.00");
    }

    #[test]
    fn sqrt_rendering() {
        assert_eq!(
            format_sqrt(&rational(1, 1), &Integer::from(2), 6),
            "1.414214"
        );
        assert_eq!(format_sqrt(&rational(2, 1), &Integer::from(9), 3), "6.000");
        assert_eq!(format_sqrt(&rational(-1, 1), &Integer::from(2), 2), "-1.41");
        // 0.5 * sqrt(25) = 2.5 is an exact tie at zero digits.
        assert_eq!(format_sqrt(&rational(1, 2), &Integer::from(25), 0), "2");
        assert_eq!(format_sqrt(&rational(0, 1), &Integer::from(7), 3), "0.000");
    }

    #[test]
    fn pi_power_rendering() {
        assert_eq!(
            format_pi_power_sqrt(&rational(1, 1), 1, &rational(1, 1), 8).unwrap(),
            "3.14159265"
        );
        assert_eq!(
            format_pi_power_sqrt(&rational(1, 1), 2, &rational(1, 1), 6).unwrap(),
            "9.869604"
        );
        assert_eq!(
            format_pi_power_sqrt(&rational(1, 2), 1, &rational(2, 1), 6).unwrap(),
            "2.221441"
        );
        assert_eq!(
            format_pi_power_sqrt(&rational(0, 1), 3, &rational(5, 1), 2).unwrap(),
            "0.00"
        );
    }

    #[test]
    fn weyl_node_values() {
        let s2 = SphereDim::new(2).unwrap();
        assert_eq!(weyl_node_decimal(s2, 5, 6), "30.000000");
        let s3 = SphereDim::new(3).unwrap();
        // (2/3!) * 8^(3/2) = 16 sqrt(2) / 3.
        assert_eq!(weyl_node_decimal(s3, 2, 6), "7.542472");
        let s1 = SphereDim::new(1).unwrap();
        assert_eq!(weyl_node_decimal(s1, 3, 6), "6.000000");
        let s15 = SphereDim::new(15).unwrap();
        assert_eq!(weyl_node_decimal(s15, 1, 6), "0.001012");
        assert_eq!(weyl_node_decimal(s15, 0, 6), "0.000000");
    }
}
