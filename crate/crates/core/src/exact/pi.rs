//! Certified rational enclosures of pi.
//!
//! The enclosure comes from the Machin identity
//! `pi = 16 arctan(1/5) - 4 arctan(1/239)`, evaluated in scaled integer
//! arithmetic: every series term is a floored integer division, and the
//! floor errors plus the alternating-series tails are added up into an
//! explicit interval radius.  No floating point is involved, so the bounds
//! are rigorous and suitable for deciding strict comparisons.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::{rational_pow, Integer, PiPowerRational, Rational};
use crate::error::Error;

/// Starting enclosure precision in bits.
pub const START_BITS: u32 = 128;

/// Maximum enclosure precision; comparisons still undecided here fail with
/// [`Error::PrecisionExceeded`] rather than guessing.
pub const MAX_BITS: u32 = 4096;

const GUARD_BITS: u32 = 16;

/// A rational interval guaranteed to contain pi.
#[derive(Clone, Debug)]
pub struct PiEnclosure {
    pub lo: Rational,
    pub hi: Rational,
    pub bits: u32,
}

impl PiEnclosure {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Computes an enclosure of pi of width at most `2^-bits`.
pub fn enclosure(bits: u32) -> PiEnclosure {
    assert!(
        bits <= MAX_BITS,
        "enclosure precision capped at {MAX_BITS} bits"
    );
    let scale: Integer = Integer::one() << (bits + GUARD_BITS);
    let (sum5, err5) = arctan_inv_scaled(5, &scale);
    let (sum239, err239) = arctan_inv_scaled(239, &scale);
    let approx = 16 * sum5 - 4 * sum239;
    let radius = 16 * err5 + 4 * err239;
    // The guard bits must absorb twice the radius or the advertised width
    // would be violated.
    debug_assert!(&radius * 2 <= Integer::one() << GUARD_BITS);
    PiEnclosure {
        lo: Rational::new(&approx - &radius, scale.clone()),
        hi: Rational::new(approx + radius, scale),
        bits,
    }
}

/// Evaluates `scale * arctan(1/x)` by the alternating Gregory series with
/// floored divisions.  Returns the scaled sum together with an integer
/// radius that bounds the total error in units of `1/scale`: one unit per
/// kept term for the floors and one for the discarded tail.
fn arctan_inv_scaled(x: u64, scale: &Integer) -> (Integer, Integer) {
    let x_sq = Integer::from(x) * Integer::from(x);
    let mut power = Integer::from(x);
    let mut sum = Integer::zero();
    let mut terms: u64 = 0;
    let mut j: u64 = 0;
    loop {
        let denom = &power * Integer::from(2 * j + 1);
        let term = scale / denom;
        if term.is_zero() {
            break;
        }
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        terms += 1;
        power *= &x_sq;
        j += 1;
    }
    (sum, Integer::from(terms + 1))
}

/// Compares a rational `x` against `pi^power` for `power >= 1`, escalating
/// precision from [`START_BITS`] to [`MAX_BITS`] by doubling until the
/// enclosure separates the two values.
pub fn compare_with_pi_power(x: &Rational, power: u32) -> Result<Ordering, Error> {
    assert!(
        power >= 1,
        "power zero comparisons are plain rational comparisons"
    );
    if !x.is_positive() {
        return Ok(Ordering::Less);
    }
    let mut bits = START_BITS;
    loop {
        let enc = enclosure(bits);
        if *x < rational_pow(&enc.lo, power) {
            return Ok(Ordering::Less);
        }
        if *x > rational_pow(&enc.hi, power) {
            return Ok(Ordering::Greater);
        }
        if bits >= MAX_BITS {
            return Err(Error::PrecisionExceeded { bits });
        }
        bits = (bits * 2).min(MAX_BITS);
    }
}

/// Numerically compares two pi-power rationals.
///
/// Equal powers reduce to exact coefficient comparison.  Distinct powers
/// reduce to `compare_with_pi_power` on the coefficient ratio, which cannot
/// report equality because a nonzero rational never equals a positive power
/// of pi.
pub fn compare_values(a: &PiPowerRational, b: &PiPowerRational) -> Result<Ordering, Error> {
    let sign = |v: &PiPowerRational| -> i8 {
        if v.coeff().is_zero() {
            0
        } else if v.coeff().is_positive() {
            1
        } else {
            -1
        }
    };
    let (sa, sb) = (sign(a), sign(b));
    if sa != sb {
        return Ok(sa.cmp(&sb));
    }
    if sa == 0 {
        return Ok(Ordering::Equal);
    }
    if a.pi_power() == b.pi_power() {
        return Ok(a.coeff().cmp(b.coeff()));
    }
    let (small, large, swapped) = if a.pi_power() < b.pi_power() {
        (a, b, false)
    } else {
        (b, a, true)
    };
    // small vs large reduces to small.coeff vs large.coeff * pi^d; dividing
    // by large.coeff flips the ordering when the common sign is negative.
    let d = large.pi_power() - small.pi_power();
    let ratio = small.coeff() / large.coeff();
    let mut ord = compare_with_pi_power(&ratio, d)?;
    if sa < 0 {
        ord = ord.reverse();
    }
    if swapped {
        ord = ord.reverse();
    }
    Ok(ord)
}
