//! The Laplace spectrum of the round sphere `S^n`.
//!
//! The distinct Dirichlet-free eigenvalues of the Laplacian on `S^n` are
//! `v_k = k(k + n - 1)` for `k = 0, 1, 2, ...`, with the multiplicity of
//! `v_k` given by the dimension of degree-`k` spherical harmonics:
//!
//! ```text
//! mult(v_k) = C(n+k, k) - C(n+k-2, k-2)
//! ```
//!
//! under the convention `C(m, j) = 0` for `j < 0`, which reproduces the
//! familiar cases `1` for `k = 0` and `n + 1` for `k = 1`.  Summing the
//! multiplicities telescopes, giving the counting function at the nodes,
//!
//! ```text
//! N(v_k) = C(n+k, k) + C(n+k-1, k-1)
//!        = (2/n!) (k + n/2) (k+n-1) (k+n-2) ... (k+1),
//! ```
//!
//! and between nodes `N` is the right-continuous step function extending
//! these values.  Everything here is exact integer arithmetic.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::exact::{isqrt_floor, Integer};

/// Dimension of a round sphere; always at least one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SphereDim(u32);

impl SphereDim {
    pub fn new(n: u32) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::UnsupportedDimension {
                dim: 0,
                context: "sphere dimension must be at least 1",
            });
        }
        Ok(Self(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl std::fmt::Display for SphereDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One distinct eigenvalue of `S^n` with its index, multiplicity, and the
/// cumulative count `N(v_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub k: u64,
    pub eigenvalue: Integer,
    pub multiplicity: Integer,
    pub cumulative: Integer,
}

/// The distinct eigenvalue `v_k = k(k + n - 1)`.
pub fn distinct_eigenvalue(dim: SphereDim, k: u64) -> Integer {
    eigenvalue_big(dim, &Integer::from(k))
}

pub(crate) fn eigenvalue_big(dim: SphereDim, k: &Integer) -> Integer {
    k * (k + Integer::from(dim.get() - 1))
}

/// Binomial coefficient `C(m, j)`, zero whenever `j < 0` or `j > m`.
///
/// Computed multiplicatively over the smaller side of the coefficient with
/// a running exact division, so no factorial-sized intermediates appear.
pub fn binomial(m: &Integer, j: &Integer) -> Integer {
    if j.is_negative() || j > m {
        return Integer::zero();
    }
    let other = m - j;
    let side = j.min(&other).to_u32().expect("binomial side exceeds u32");
    let mut acc = Integer::one();
    for i in 1..=side {
        acc = acc * (m - Integer::from(side) + Integer::from(i)) / Integer::from(i);
    }
    acc
}

/// Multiplicity of `v_k` as an eigenvalue on `S^n`.
pub fn multiplicity(dim: SphereDim, k: u64) -> Integer {
    let n = Integer::from(dim.get());
    let k = Integer::from(k);
    binomial(&(&n + &k), &k) - binomial(&(&n + &k - 2), &(&k - 2))
}

/// `N(v_k)` by the closed form `C(n+k, k) + C(n+k-1, k-1)`.
pub fn counting_closed_form(dim: SphereDim, k: u64) -> Integer {
    counting_closed_form_big(dim, &Integer::from(k))
}

pub(crate) fn counting_closed_form_big(dim: SphereDim, k: &Integer) -> Integer {
    let n = Integer::from(dim.get());
    binomial(&(&n + k), k) + binomial(&(&n + k - 1), &(k - 1))
}

/// The cleared numerator `n! * N(v_k) = (2k + n) (k+n-1) (k+n-2) ... (k+1)`.
///
/// Sign comparisons against the Weyl function square this quantity rather
/// than dividing by `n!`, keeping everything in integers.
pub fn counting_numerator(dim: SphereDim, k: &Integer) -> Integer {
    let n = dim.get();
    let mut p = 2 * k + Integer::from(n);
    for j in 1..n {
        p *= k + Integer::from(j);
    }
    p
}

pub(crate) fn factorial(n: u32) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= Integer::from(i);
    }
    acc
}

/// `N(v_k)` by the product form `(2/n!)(k + n/2)(k+n-1)...(k+1)`.
///
/// The value is provably an integer; a failed exact division reports an
/// internal consistency error rather than rounding.
pub fn counting_product_form(dim: SphereDim, k: u64) -> Result<Integer, Error> {
    let p = counting_numerator(dim, &Integer::from(k));
    let (q, r) = num_integer::Integer::div_rem(&p, &factorial(dim.get()));
    if !r.is_zero() {
        return Err(Error::Internal {
            context: "product form of the counting function is not an integer",
        });
    }
    Ok(q)
}

/// `N(v_k)` by brute summation of multiplicities, the independent oracle
/// for the closed form.
pub fn counting_brute(dim: SphereDim, k: u64) -> Integer {
    let mut total = Integer::zero();
    for j in 0..=k {
        total += multiplicity(dim, j);
    }
    total
}

/// `N(x)` for arbitrary `x >= 0`: the number of eigenvalues at most `x`,
/// counted with multiplicity.
///
/// The largest `k` with `k(k + n - 1) <= x` is recovered exactly from the
/// integer square root of the discriminant `(n-1)^2 + 4x`, then evaluated
/// by the closed form.
pub fn counting_at(dim: SphereDim, x: &Integer) -> Result<Integer, Error> {
    if x.is_negative() {
        return Err(Error::NegativeInput {
            context: "counting function argument",
        });
    }
    let nm1 = Integer::from(dim.get() - 1);
    let root = isqrt_floor(&(&nm1 * &nm1 + 4 * x))?;
    let k = (root - &nm1) / 2;
    debug_assert!(eigenvalue_big(dim, &k) <= *x);
    debug_assert!(eigenvalue_big(dim, &(&k + 1)) > *x);
    Ok(counting_closed_form_big(dim, &k))
}

/// The first `k_max + 1` rows of the distinct spectrum with cumulative
/// counts accumulated by summation.
pub fn spectrum_entries(dim: SphereDim, k_max: u64) -> Vec<SpectrumEntry> {
    let mut out = Vec::with_capacity(k_max as usize + 1);
    let mut cumulative = Integer::zero();
    for k in 0..=k_max {
        let m = multiplicity(dim, k);
        cumulative += &m;
        out.push(SpectrumEntry {
            k,
            eigenvalue: distinct_eigenvalue(dim, k),
            multiplicity: m,
            cumulative: cumulative.clone(),
        });
    }
    out
}
