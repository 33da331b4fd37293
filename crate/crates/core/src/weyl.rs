//! Exact comparisons between the counting function and the Weyl function.
//!
//! For `S^n` the Weyl function is `w(x) = (2/n!) x^(n/2)`, and its leading
//! coefficient matches the counting function so closely that their
//! difference changes sign inside every spectral gap once `k` is large
//! enough.  Writing `P = n! N(v_k) = (2k+n)(k+n-1)...(k+1)`, the two facts
//! that drive everything here are obtained by clearing `2/n!` and squaring:
//!
//! ```text
//! w(v_k)   < N(v_k)    iff  4 v_k^n     < P^2
//! N(v_k)   < w(v_(k+1)) iff  P^2        < 4 v_(k+1)^n
//! ```
//!
//! Both are integer comparisons, so every sign reported by this module is
//! exact.  When both hold, the strictly increasing `w` crosses the level
//! `N(v_k)` exactly once inside `(v_k, v_(k+1))`, and bisection with the
//! same squared test encloses the crossing to any requested width.  For
//! low dimensions the second inequality holds for every `k`; in higher
//! dimensions it fails for an initial run of indices, and the regime report
//! maps that exceptional set against the proven threshold `n^2/4 - n`.

use num_traits::{Signed, ToPrimitive};
use std::cmp::Ordering;

use crate::error::Error;
use crate::exact::{integer_pow, Integer, PiPowerRational, Rational};
use crate::geometry;
use crate::spectrum::{counting_numerator, distinct_eigenvalue, SphereDim};

/// The Weyl function `w(x) = (2/n!) x^(n/2)` of `S^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylFunction {
    dim: SphereDim,
    coeff: Rational,
}

impl WeylFunction {
    pub fn new(dim: SphereDim) -> Self {
        Self {
            dim,
            coeff: weyl_coefficient(dim),
        }
    }

    pub fn dim(&self) -> SphereDim {
        self.dim
    }

    /// The exact leading coefficient `2/n!`.
    pub fn coefficient(&self) -> &Rational {
        &self.coeff
    }

    /// Approximate evaluation for plotting and display only; every
    /// certified statement goes through the exact comparisons instead.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        c * x.powf(self.dim.get() as f64 / 2.0)
    }
}

/// The Weyl coefficient `2/n!` in lowest terms.
pub fn weyl_coefficient(dim: SphereDim) -> Rational {
    Rational::new(Integer::from(2), crate::spectrum::factorial(dim.get()))
}

/// Exact sign of a difference of spectral quantities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComparisonSign {
    Below,
    Equal,
    Above,
}

impl ComparisonSign {
    /// `-1`, `0`, or `1`; the form used in CSV output.
    pub fn as_i8(self) -> i8 {
        match self {
            Self::Below => -1,
            Self::Equal => 0,
            Self::Above => 1,
        }
    }
}

impl From<Ordering> for ComparisonSign {
    fn from(ord: Ordering) -> Self {
        match ord {
            Ordering::Less => Self::Below,
            Ordering::Equal => Self::Equal,
            Ordering::Greater => Self::Above,
        }
    }
}

/// Exact sign of `w(v_k) - N(v_k)`, by the squared integer comparison
/// `4 v_k^n` versus `P^2`.
pub fn compare_w_vs_n_at_node(dim: SphereDim, k: u64) -> ComparisonSign {
    let n = dim.get();
    let v = distinct_eigenvalue(dim, k);
    let p = counting_numerator(dim, &Integer::from(k));
    let lhs: Integer = 4 * integer_pow(&v, n);
    let rhs = &p * &p;
    ComparisonSign::from(lhs.cmp(&rhs))
}

/// Exact sign of `N(v_k) - w(v_(k+1))`, by the squared integer comparison
/// `P^2` versus `4 v_(k+1)^n`.
pub fn compare_n_vs_w_next_node(dim: SphereDim, k: u64) -> ComparisonSign {
    let n = dim.get();
    let v_next = distinct_eigenvalue(dim, k + 1);
    let p = counting_numerator(dim, &Integer::from(k));
    let lhs = &p * &p;
    let rhs = 4 * integer_pow(&v_next, n);
    ComparisonSign::from(lhs.cmp(&rhs))
}

/// A certified enclosure of the unique point `x*` in `(v_k, v_(k+1))` with
/// `w(x*) = N(v_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingRecord {
    pub k: u64,
    pub lower: Integer,
    pub upper: Integer,
    pub enclosure_lo: Rational,
    pub enclosure_hi: Rational,
    pub width: Rational,
}

impl CrossingRecord {
    /// Independently re-checks every invariant of the record: endpoint
    /// identities, strict interiority, the certified bracketing
    /// `w(enclosure_lo) <= N(v_k) <= w(enclosure_hi)` as cleared integer
    /// comparisons, and the width arithmetic.
    pub fn verify(&self, dim: SphereDim) -> bool {
        let lower_ok = self.lower == distinct_eigenvalue(dim, self.k);
        let upper_ok = self.upper == distinct_eigenvalue(dim, self.k + 1);
        let lower_rat = Rational::from_integer(self.lower.clone());
        let upper_rat = Rational::from_integer(self.upper.clone());
        let interior = lower_rat < self.enclosure_lo
            && self.enclosure_lo <= self.enclosure_hi
            && self.enclosure_hi < upper_rat;
        let p = counting_numerator(dim, &Integer::from(self.k));
        let p_sq = &p * &p;
        let bracket = weyl_sq_vs_level(dim, &self.enclosure_lo, &p_sq) != Ordering::Greater
            && weyl_sq_vs_level(dim, &self.enclosure_hi, &p_sq) != Ordering::Less;
        let width_ok = self.width == &self.enclosure_hi - &self.enclosure_lo;
        lower_ok && upper_ok && interior && bracket && width_ok
    }
}

// Sign of w(x)^2 - (N n!)^2 / 4 at a rational probe x = a/b, cleared to the
// integer comparison 4 a^n vs p_sq b^n.
fn weyl_sq_vs_level(dim: SphereDim, x: &Rational, p_sq: &Integer) -> Ordering {
    let n = dim.get();
    let lhs: Integer = 4 * integer_pow(x.numer(), n);
    let rhs = p_sq * integer_pow(x.denom(), n);
    lhs.cmp(&rhs)
}

/// Brackets the crossing of `w` with the level `N(v_k)` inside the open
/// spectral gap `(v_k, v_(k+1))`.
///
/// Returns a record exactly when `w(v_k) < N(v_k) < w(v_(k+1))`; bisection
/// on the squared comparison refines the bracket until its width is at most
/// `tol` and both endpoints are strictly inside the gap.  A probe that hits
/// the crossing exactly collapses the enclosure to a point.
pub fn crossing_in_interval(
    dim: SphereDim,
    k: u64,
    tol: &Rational,
) -> Result<Option<CrossingRecord>, Error> {
    if !tol.is_positive() {
        return Err(Error::NonPositiveTolerance {
            value: tol.to_string(),
        });
    }
    if compare_w_vs_n_at_node(dim, k) != ComparisonSign::Below
        || compare_n_vs_w_next_node(dim, k) != ComparisonSign::Below
    {
        return Ok(None);
    }
    let lower = distinct_eigenvalue(dim, k);
    let upper = distinct_eigenvalue(dim, k + 1);
    let p = counting_numerator(dim, &Integer::from(k));
    let p_sq = &p * &p;

    let lower_rat = Rational::from_integer(lower.clone());
    let upper_rat = Rational::from_integer(upper.clone());
    let mut lo = lower_rat.clone();
    let mut hi = upper_rat.clone();
    let two = Rational::from_integer(Integer::from(2));
    loop {
        let done = &hi - &lo <= *tol && lo > lower_rat && hi < upper_rat;
        if done {
            break;
        }
        let mid = (&lo + &hi) / &two;
        match weyl_sq_vs_level(dim, &mid, &p_sq) {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => {
                lo = mid.clone();
                hi = mid;
                break;
            }
        }
    }
    let width = &hi - &lo;
    Ok(Some(CrossingRecord {
        k,
        lower,
        upper,
        enclosure_lo: lo,
        enclosure_hi: hi,
        width,
    }))
}

/// Collects the crossings in all gaps `(v_k, v_(k+1))` for `k <= k_max`.
/// The number of crossings is the length of the returned list.
pub fn crossing_count(
    dim: SphereDim,
    k_max: u64,
    tol: &Rational,
) -> Result<Vec<CrossingRecord>, Error> {
    let mut out = Vec::new();
    for k in 0..=k_max {
        if let Some(record) = crossing_in_interval(dim, k, tol)? {
            out.push(record);
        }
    }
    Ok(out)
}

/// Where the generic inequality `N(v_k) < w(v_(k+1))` fails for `S^n`.
///
/// `exceptional_set` lists every scanned `k` with `N(v_k) >= w(v_(k+1))`;
/// `stable_threshold` is the smallest `K` such that the strict inequality
/// holds from `K` through the scan limit; `proven_bound` is the analytic
/// threshold `max(0, floor(n^2/4 - n) + 1)` beyond which the inequality is
/// guaranteed, so the scan proves the threshold is global whenever it
/// reaches the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegimeReport {
    pub dim: SphereDim,
    pub scan_limit: u64,
    pub exceptional_set: Vec<u64>,
    pub stable_threshold: u64,
    pub proven_bound: u64,
}

/// The analytic threshold `max(0, floor(n^2/4 - n) + 1)`: for every
/// `k` at or beyond it, `N(v_k) < w(v_(k+1))` is guaranteed.
pub fn proven_threshold_bound(dim: SphereDim) -> u64 {
    let n = i64::from(dim.get());
    (n * n - 4 * n).div_euclid(4).saturating_add(1).max(0) as u64
}

/// Scans `k = 0..=scan_limit` and reports the exceptional set, empirical
/// stable threshold, and the proven bound.
///
/// Requires `scan_limit > proven_threshold_bound(dim)` so the threshold is
/// certainly inside the scan; an exceptional index at or beyond the bound
/// would contradict the analytic guarantee and reports as an internal error.
pub fn regime_report(dim: SphereDim, scan_limit: u64) -> Result<RegimeReport, Error> {
    let bound = proven_threshold_bound(dim);
    if scan_limit < bound + 1 {
        return Err(Error::ScanLimitTooSmall {
            dim: dim.get(),
            scan_limit,
            bound,
        });
    }
    let mut exceptional_set = Vec::new();
    for k in 0..=scan_limit {
        if compare_n_vs_w_next_node(dim, k) != ComparisonSign::Below {
            if k >= bound {
                return Err(Error::Internal {
                    context: "exceptional index at or beyond the proven threshold bound",
                });
            }
            exceptional_set.push(k);
        }
    }
    let stable_threshold = exceptional_set.last().map_or(0, |last| last + 1);
    Ok(RegimeReport {
        dim,
        scan_limit,
        exceptional_set,
        stable_threshold,
        proven_bound: bound,
    })
}

/// The second-term constant `c2 = (omega_(n-2) / (6 (2 pi)^(n-1))) n (n-1) s_n`
/// of the expansion `N(x) ~ w(x) + c2 x^(n/2 - 1)`, reduced symbolically.
///
/// The pi powers of `omega_(n-2)` and `s_n` sum to exactly `n - 1`, so the
/// constant always collapses to a plain rational.
pub fn two_term_constant(dim: SphereDim) -> Result<Rational, Error> {
    let n = dim.get();
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            dim: n,
            context: "two-term expansion needs dimension at least 2",
        });
    }
    let omega = geometry::ball_volume(n - 2).value;
    let surface = geometry::sphere_volume(n).value;
    let scale = Rational::new(
        Integer::from(n) * Integer::from(n - 1),
        Integer::from(6) * integer_pow(&Integer::from(2), n - 1),
    );
    let numerator = omega.mul(&surface).scale(&scale);
    let reduced = numerator
        .div(&PiPowerRational::pi_to(n - 1))
        .and_then(|v| v.as_rational().cloned());
    reduced.ok_or(Error::Internal {
        context: "pi powers failed to cancel in the two-term constant",
    })
}

/// Evaluates the two-term expansion `w(x) + c2 x^(n/2 - 1)` in floating
/// point; the constant itself is exact, only this final evaluation rounds.
pub fn two_term_weyl(dim: SphereDim, x: f64) -> Result<f64, Error> {
    if x < 0.0 {
        return Err(Error::NegativeInput {
            context: "two-term expansion argument",
        });
    }
    let c2 = two_term_constant(dim)?;
    let w = WeylFunction::new(dim).eval_f64(x);
    let exponent = dim.get() as f64 / 2.0 - 1.0;
    Ok(w + c2.to_f64().unwrap_or(f64::NAN) * x.powf(exponent))
}
