//! Dirichlet eigenvalue counting on rectangular boxes.
//!
//! For a box with side lengths `a_1, ..., a_n`, the Dirichlet Laplace
//! eigenvalues are `pi^2 q` with `q = sum_i m_i^2 / a_i^2` over positive
//! integer modes `m_i`, so counting eigenvalues is bounded lattice
//! enumeration.  Boxes tile Euclidean space, and for tiling domains the
//! counting function never exceeds the Weyl function
//!
//! ```text
//! w(x) = (omega_n / (2 pi)^n) vol x^(n/2),
//! ```
//!
//! which at `x = pi^2 q` collapses to `omega_n vol q^(n/2) / 2^n`.  Every
//! node-level comparison between `N` and `w` here is either an exact
//! rational comparison (after squaring away the half powers) or a certified
//! comparison against a power of pi; nothing is decided by floating point.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::exact::{isqrt_floor, pi, rational_pow, Integer, Rational};
use crate::geometry::ball_volume;
use crate::weyl::ComparisonSign;

/// Default cap on enumerated lattice points.
pub const DEFAULT_ENUM_BUDGET: u64 = 100_000_000;

/// A rectangular box with positive rational side lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxDomain {
    sides: Vec<Rational>,
}

impl BoxDomain {
    pub fn new(sides: Vec<Rational>) -> Result<Self, Error> {
        if sides.is_empty() {
            return Err(Error::EmptyBox);
        }
        for side in &sides {
            if !side.is_positive() {
                return Err(Error::NonPositiveSide {
                    value: side.to_string(),
                });
            }
        }
        Ok(Self { sides })
    }

    pub fn dim(&self) -> u32 {
        self.sides.len() as u32
    }

    pub fn sides(&self) -> &[Rational] {
        &self.sides
    }

    pub fn volume(&self) -> Rational {
        self.sides
            .iter()
            .fold(Rational::from_integer(Integer::from(1)), |acc, s| acc * s)
    }
}

/// A single Dirichlet eigenvalue `pi^2 * value_over_pi_sq` of a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxEigenvalue {
    pub modes: Vec<u64>,
    pub value_over_pi_sq: Rational,
}

impl BoxEigenvalue {
    /// The eigenvalue for a given mode vector; all modes must be positive.
    pub fn for_modes(domain: &BoxDomain, modes: Vec<u64>) -> Result<Self, Error> {
        if modes.len() != domain.sides.len() || modes.contains(&0) {
            return Err(Error::Internal {
                context: "mode vector must have one positive entry per side",
            });
        }
        let mut q = Rational::zero();
        for (m, a) in modes.iter().zip(&domain.sides) {
            let m_sq = Rational::from_integer(Integer::from(*m) * Integer::from(*m));
            q += m_sq / (a * a);
        }
        Ok(Self {
            modes,
            value_over_pi_sq: q,
        })
    }
}

// The integer skeleton of the enumeration: with sides a_i = p_i / s_i in
// lowest terms and D = prod p_i^2, the level sum q = sum m_i^2 / a_i^2
// clears to t / D with t = sum m_i^2 w_i and integer weights
// w_i = s_i^2 prod_{j != i} p_j^2.  The constraint q <= q_max becomes
// t <= floor(q_max * D).
struct ClearedBox {
    weights: Vec<Integer>,
    denom: Integer,
    bound: Integer,
}

impl ClearedBox {
    fn new(domain: &BoxDomain, q_max: &Rational) -> Self {
        let mut denom = Integer::from(1);
        for side in &domain.sides {
            denom *= side.numer() * side.numer();
        }
        let weights = domain
            .sides
            .iter()
            .map(|side| {
                let p_sq = side.numer() * side.numer();
                side.denom() * side.denom() * (&denom / p_sq)
            })
            .collect();
        let bound = num_integer::Integer::div_floor(&(q_max.numer() * &denom), q_max.denom());
        Self {
            weights,
            denom,
            bound,
        }
    }

    // Upper bound on the modes along each axis given every other mode is at
    // least one; the product bounds the number of enumerated points.
    fn axis_caps(&self) -> Vec<Integer> {
        let total_min: Integer = self.weights.iter().sum();
        self.weights
            .iter()
            .map(|w| {
                let rem = &self.bound - (&total_min - w);
                if rem < *w {
                    Integer::zero()
                } else {
                    isqrt_floor(&num_integer::Integer::div_floor(&rem, w))
                        .expect("remaining budget is nonnegative")
                }
            })
            .collect()
    }

    fn check_budget(&self, budget: u64) -> Result<(), Error> {
        let mut est = Integer::from(1);
        for cap in self.axis_caps() {
            est *= cap;
        }
        if est > Integer::from(budget) {
            return Err(Error::BudgetExceeded {
                needed: est.to_string(),
                budget,
            });
        }
        Ok(())
    }
}

// Counts lattice points with sum m_i^2 w_i <= remaining, closed form on the
// innermost axis.
fn count_points(weights: &[Integer], remaining: &Integer) -> Integer {
    let (w, rest) = weights.split_first().expect("at least one axis");
    if rest.is_empty() {
        if remaining < w {
            return Integer::zero();
        }
        return isqrt_floor(&num_integer::Integer::div_floor(remaining, w))
            .expect("remaining is nonnegative");
    }
    let mut total = Integer::zero();
    let mut m: u64 = 1;
    loop {
        let used = Integer::from(m) * Integer::from(m) * w;
        if used > *remaining {
            break;
        }
        total += count_points(rest, &(remaining - used));
        m += 1;
    }
    total
}

// Accumulates the multiplicity of every cleared level t <= bound.
fn collect_levels(
    weights: &[Integer],
    remaining: &Integer,
    acc: &Integer,
    levels: &mut BTreeMap<Integer, u64>,
) {
    let (w, rest) = weights.split_first().expect("at least one axis");
    let mut m: u64 = 1;
    loop {
        let used = Integer::from(m) * Integer::from(m) * w;
        if used > *remaining {
            break;
        }
        let acc_here = acc + &used;
        if rest.is_empty() {
            *levels.entry(acc_here).or_insert(0) += 1;
        } else {
            collect_levels(rest, &(remaining - &used), &acc_here, levels);
        }
        m += 1;
    }
}

fn validate_q_max(q_max: &Rational) -> Result<(), Error> {
    if !q_max.is_positive() {
        return Err(Error::NonPositiveQMax {
            value: q_max.to_string(),
        });
    }
    Ok(())
}

/// Counts Dirichlet eigenvalues `pi^2 q` of the box with `q <= q_max`,
/// with multiplicity, by exact lattice enumeration.
pub fn box_counting(domain: &BoxDomain, q_max: &Rational, budget: u64) -> Result<Integer, Error> {
    validate_q_max(q_max)?;
    let cleared = ClearedBox::new(domain, q_max);
    cleared.check_budget(budget)?;
    Ok(count_points(&cleared.weights, &cleared.bound))
}

/// One distinct eigenvalue level of the box with its cumulative count and
/// the exact sign of `N - w` there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxNode {
    pub q: Rational,
    pub count: Integer,
    pub sign: ComparisonSign,
}

/// Node-by-node record of the Polya comparison on a box.
///
/// `verdict` reports whether no node violates the tiling-domain inequality
/// `N <= w`; `all_strictly_below` additionally records whether every node
/// comparison was strict (degenerate boxes such as the unit interval
/// achieve exact equality `N = w` at every node).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyaReport {
    pub nodes: Vec<BoxNode>,
    pub verdict: bool,
    pub all_strictly_below: bool,
}

/// The Weyl value at a node, factored as `A * pi^power * sqrt(radicand)`:
/// returns `(A, power, radicand)` with `A` rational and `radicand` equal to
/// `q` in odd dimensions and `1` in even dimensions.
pub fn weyl_node_parts(domain: &BoxDomain, q: &Rational) -> (Rational, u32, Rational) {
    let n = domain.dim();
    let omega = ball_volume(n).value;
    let base = omega.coeff() * domain.volume()
        / Rational::from_integer(crate::exact::integer_pow(&Integer::from(2), n));
    if n.is_multiple_of(2) {
        (
            base * rational_pow(q, n / 2),
            omega.pi_power(),
            Rational::from_integer(Integer::from(1)),
        )
    } else {
        (
            base * rational_pow(q, (n - 1) / 2),
            omega.pi_power(),
            q.clone(),
        )
    }
}

// Exact sign of N - w at a node, via rational comparison when no pi power
// survives and a certified pi enclosure otherwise.  Squaring is valid in
// every branch because both sides are positive at a node.
fn node_sign(count: &Integer, parts: &(Rational, u32, Rational)) -> Result<ComparisonSign, Error> {
    let (a, power, radicand) = parts;
    let n_rat = Rational::from_integer(count.clone());
    let ord = if *power == 0 {
        // N vs A sqrt(radicand): compare squares exactly.
        let lhs = &n_rat * &n_rat;
        let rhs = a * a * radicand;
        lhs.cmp(&rhs)
    } else {
        // N vs A pi^p sqrt(radicand): compare N^2 vs A^2 radicand pi^(2p).
        let ratio = &n_rat * &n_rat / (a * a * radicand);
        pi::compare_with_pi_power(&ratio, 2 * power)?
    };
    Ok(ComparisonSign::from(ord))
}

/// Enumerates every distinct level `q <= q_max` and compares `N(pi^2 q)`
/// with `w(pi^2 q)` exactly at each.
pub fn polya_report(
    domain: &BoxDomain,
    q_max: &Rational,
    budget: u64,
) -> Result<PolyaReport, Error> {
    validate_q_max(q_max)?;
    let cleared = ClearedBox::new(domain, q_max);
    cleared.check_budget(budget)?;
    let mut levels = BTreeMap::new();
    collect_levels(
        &cleared.weights,
        &cleared.bound,
        &Integer::zero(),
        &mut levels,
    );
    let mut nodes = Vec::with_capacity(levels.len());
    let mut cumulative = Integer::zero();
    let mut verdict = true;
    let mut all_strictly_below = true;
    for (t, mult) in levels {
        cumulative += Integer::from(mult);
        let q = Rational::new(t, cleared.denom.clone());
        let parts = weyl_node_parts(domain, &q);
        let sign = node_sign(&cumulative, &parts)?;
        match sign {
            ComparisonSign::Above => {
                verdict = false;
                all_strictly_below = false;
            }
            ComparisonSign::Equal => all_strictly_below = false,
            ComparisonSign::Below => {}
        }
        nodes.push(BoxNode {
            q,
            count: cumulative.clone(),
            sign,
        });
    }
    Ok(PolyaReport {
        nodes,
        verdict,
        all_strictly_below,
    })
}

/// True when no level `q <= q_max` violates the tiling-domain inequality
/// `N(pi^2 q) <= w(pi^2 q)`.
pub fn box_polya_check(domain: &BoxDomain, q_max: &Rational, budget: u64) -> Result<bool, Error> {
    Ok(polya_report(domain, q_max, budget)?.verdict)
}
