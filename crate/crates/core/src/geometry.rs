//! Exact volumes of Euclidean unit balls and round spheres.
//!
//! We write `omega_n` for the volume of the unit ball in `R^n` and `s_n`
//! for the Riemannian volume of the unit sphere `S^n` sitting in `R^(n+1)`.
//! The two sequences interlock through
//!
//! ```text
//! omega_0 = 1,   omega_n = s_(n-1) / n      (n >= 1)
//! s_0     = 2,   s_n     = 2 pi omega_(n-1) (n >= 1)
//! ```
//!
//! from which the product identity `omega_n s_n = 2 (2 pi)^n / n!` follows
//! by induction.  Every value is an exact rational times a power of pi, so
//! the identity can be checked symbolically with no tolerance.

use std::sync::{Mutex, OnceLock};

use crate::exact::{rational, PiPowerRational, Rational};
use crate::spectrum::factorial;
use num_traits::Pow;

/// Volume `omega_n` of the unit ball in `R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallVolume {
    pub n: u32,
    pub value: PiPowerRational,
}

/// Riemannian volume `s_n` of the unit sphere `S^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereVolume {
    pub n: u32,
    pub value: PiPowerRational,
}

// Memoized (omega_d, s_d) pairs, extended on demand; every dimension below
// a query is needed anyway.
fn table() -> &'static Mutex<Vec<(PiPowerRational, PiPowerRational)>> {
    static TABLE: OnceLock<Mutex<Vec<(PiPowerRational, PiPowerRational)>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        Mutex::new(vec![(
            PiPowerRational::one(),
            PiPowerRational::from_integer(2),
        )])
    })
}

fn pair(n: u32) -> (PiPowerRational, PiPowerRational) {
    let mut memo = table().lock().expect("volume memo poisoned");
    while memo.len() <= n as usize {
        let d = memo.len() as u32;
        let (prev_ball, prev_sphere) = memo.last().expect("memo seeded").clone();
        let ball = prev_sphere.scale(&rational(1, d as i64));
        let sphere = prev_ball.mul(&PiPowerRational::new(rational(2, 1), 1));
        memo.push((ball, sphere));
    }
    memo[n as usize].clone()
}

/// The exact ball volume `omega_n`.
pub fn ball_volume(n: u32) -> BallVolume {
    BallVolume {
        n,
        value: pair(n).0,
    }
}

/// The exact sphere volume `s_n`.
pub fn sphere_volume(n: u32) -> SphereVolume {
    SphereVolume {
        n,
        value: pair(n).1,
    }
}

/// Checks the product identity `omega_n s_n = 2 (2 pi)^n / n!` symbolically.
pub fn product_identity_check(n: u32) -> bool {
    let product = ball_volume(n).value.mul(&sphere_volume(n).value);
    let expected = PiPowerRational::new(
        Rational::new(
            Pow::pow(&crate::exact::Integer::from(2), n) * 2,
            factorial(n),
        ),
        n,
    );
    product == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_dimensional_balls() {
        assert_eq!(ball_volume(0).value, PiPowerRational::one());
        assert_eq!(ball_volume(1).value, PiPowerRational::from_integer(2));
        assert_eq!(ball_volume(2).value, PiPowerRational::pi_to(1));
        assert_eq!(
            ball_volume(3).value,
            PiPowerRational::new(rational(4, 3), 1)
        );
        assert_eq!(
            ball_volume(4).value,
            PiPowerRational::new(rational(1, 2), 2)
        );
    }

    #[test]
    fn low_dimensional_spheres() {
        assert_eq!(sphere_volume(0).value, PiPowerRational::from_integer(2));
        assert_eq!(
            sphere_volume(1).value,
            PiPowerRational::new(rational(2, 1), 1)
        );
        assert_eq!(
            sphere_volume(2).value,
            PiPowerRational::new(rational(4, 1), 1)
        );
        assert_eq!(
            sphere_volume(3).value,
            PiPowerRational::new(rational(2, 1), 2)
        );
    }

    #[test]
    fn product_identity_small_and_large() {
        for n in [0, 1, 2, 5, 30] {
            assert!(product_identity_check(n), "identity fails at n={n}");
        }
    }

    #[test]
    fn pi_power_bookkeeping() {
        for n in 0..=20u32 {
            assert_eq!(ball_volume(n).value.pi_power(), n / 2);
            if n >= 1 {
                assert_eq!(sphere_volume(n).value.pi_power(), n.div_ceil(2));
            }
        }
    }
}
