//! Deterministic scans pinning the spectral layers against independent
//! closed forms and frozen expected values.

use num_traits::One;

use sphere_weyl::boxes::{box_counting, polya_report, BoxDomain, DEFAULT_ENUM_BUDGET};
use sphere_weyl::decimal::weyl_node_decimal;
use sphere_weyl::exact::{integer_pow, isqrt_floor, rational, Integer, PiPowerRational, Rational};
use sphere_weyl::geometry::{ball_volume, product_identity_check, sphere_volume};
use sphere_weyl::spectrum::{
    binomial, counting_at, counting_brute, counting_closed_form, counting_product_form,
    distinct_eigenvalue, multiplicity, SphereDim,
};
use sphere_weyl::weyl::{
    compare_n_vs_w_next_node, crossing_count, crossing_in_interval, regime_report,
    two_term_constant, ComparisonSign,
};

fn dim(n: u32) -> SphereDim {
    SphereDim::new(n).unwrap()
}

#[test]
fn three_way_counting_equality() {
    for n in 1..=10u32 {
        let d = dim(n);
        for k in 0..=200u64 {
            let closed = counting_closed_form(d, k);
            assert_eq!(closed, counting_brute(d, k), "brute mismatch n={n} k={k}");
            assert_eq!(
                closed,
                counting_product_form(d, k).unwrap(),
                "product mismatch n={n} k={k}"
            );
        }
    }
}

#[test]
fn closed_forms_on_the_circle_and_two_sphere() {
    let s1 = dim(1);
    let s2 = dim(2);
    for k in 0..=10_000u64 {
        assert_eq!(counting_closed_form(s1, k), Integer::from(2 * k + 1));
        let succ = Integer::from(k + 1);
        assert_eq!(counting_closed_form(s2, k), &succ * &succ);
    }
}

#[test]
fn multiplicities_positive_and_counts_increasing() {
    for n in 1..=20u32 {
        let d = dim(n);
        let mut prev = Integer::from(0);
        for k in 0..=2000u64 {
            let m = multiplicity(d, k);
            assert!(m >= Integer::one(), "multiplicity below 1 at n={n} k={k}");
            let count = &prev + &m;
            assert!(count > prev, "count not increasing at n={n} k={k}");
            prev = count;
        }
        assert_eq!(prev, counting_closed_form(d, 2000));
    }
}

// The case split (1 for k=0, n+1 for k=1, binomial difference beyond) is
// the oracle for the single-expression multiplicity.
#[test]
fn multiplicity_case_split_oracle() {
    for n in 1..=20u32 {
        let d = dim(n);
        assert_eq!(multiplicity(d, 0), Integer::one());
        assert_eq!(multiplicity(d, 1), Integer::from(n + 1));
        for k in 2..=100u64 {
            let top = Integer::from(n as u64 + k);
            let expected =
                binomial(&top, &Integer::from(k)) - binomial(&(top - 2), &Integer::from(k - 2));
            assert_eq!(
                multiplicity(d, k),
                expected,
                "case split mismatch n={n} k={k}"
            );
        }
    }
}

#[test]
fn counting_at_agrees_with_nodes() {
    for n in 1..=10u32 {
        let d = dim(n);
        for k in 1..=500u64 {
            let v = distinct_eigenvalue(d, k);
            assert_eq!(counting_at(d, &v).unwrap(), counting_closed_form(d, k));
            assert_eq!(
                counting_at(d, &(v - 1)).unwrap(),
                counting_closed_form(d, k - 1)
            );
        }
    }
}

// Equality between N and w at or across nodes never occurs in the scanned
// range; if it ever did, it would be a genuinely new fact and must surface
// as a loud failure, not be masked.
#[test]
fn no_equalities_in_scanned_range() {
    use sphere_weyl::weyl::compare_w_vs_n_at_node;
    for n in 1..=8u32 {
        let d = dim(n);
        for k in 0..=500u64 {
            assert_ne!(compare_w_vs_n_at_node(d, k), ComparisonSign::Equal);
            assert_ne!(compare_n_vs_w_next_node(d, k), ComparisonSign::Equal);
        }
    }
}

#[test]
fn regime_reports_low_dimensions() {
    // (n, exceptional set, stable threshold) for a scan limit of 600.
    let expected: [(u32, &[u64], u64); 12] = [
        (1, &[], 0),
        (2, &[], 0),
        (3, &[], 0),
        (4, &[], 0),
        (5, &[0], 1),
        (6, &[0, 1], 2),
        (7, &[0, 1, 2], 3),
        (8, &[0, 1, 2, 3, 4], 5),
        (9, &[0, 1, 2, 3, 4, 5, 6], 7),
        (10, &[0, 1, 2, 3, 4, 5, 6, 7, 8], 9),
        (11, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11], 12),
        (12, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14], 15),
    ];
    for (n, set, threshold) in expected {
        let report = regime_report(dim(n), 600).unwrap();
        assert_eq!(
            report.exceptional_set, set,
            "exceptional set mismatch at n={n}"
        );
        assert_eq!(
            report.stable_threshold, threshold,
            "threshold mismatch at n={n}"
        );
        assert!(report.stable_threshold <= report.proven_bound);
    }
}

#[test]
fn regime_report_s15() {
    let report = regime_report(dim(15), 200).unwrap();
    let expected: Vec<u64> = (0..=25).collect();
    assert_eq!(report.exceptional_set, expected);
    assert_eq!(report.stable_threshold, 26);
    assert_eq!(report.proven_bound, 42);
}

#[test]
fn s15_crossings_avoid_exceptional_gaps() {
    let tol = rational(1, 10);
    let records = crossing_count(dim(15), 35, &tol).unwrap();
    assert_eq!(records.len(), 10);
    for record in &records {
        assert!(
            record.k >= 26,
            "crossing inside the exceptional run at k={}",
            record.k
        );
        assert!(record.verify(dim(15)));
    }
}

#[test]
fn circle_crossings_sit_at_odd_squares_over_four() {
    // On S^1, w(x) = 2 sqrt(x) meets N(v_k) = 2k+1 at x = (2k+1)^2 / 4.
    let tol = rational(1, 100);
    for k in 0..=49u64 {
        let record = crossing_in_interval(dim(1), k, &tol).unwrap().unwrap();
        let target = Rational::new(Integer::from((2 * k + 1) * (2 * k + 1)), Integer::from(4));
        assert!(
            record.enclosure_lo <= target && target <= record.enclosure_hi,
            "crossing enclosure misses the exact value at k={k}"
        );
        assert!(record.verify(dim(1)));
    }
}

#[test]
fn s15_frozen_spot_values() {
    let d = dim(15);
    assert_eq!(
        counting_closed_form(d, 100),
        "4481022609740261436".parse::<Integer>().unwrap()
    );
    // The counting function first reaches 10^8 at k = 14.
    let hundred_million = integer_pow(&Integer::from(10), 8);
    assert!(counting_closed_form(d, 13) < hundred_million);
    assert!(counting_closed_form(d, 14) >= hundred_million);
    assert_eq!(compare_n_vs_w_next_node(d, 25), ComparisonSign::Above);
    assert_eq!(compare_n_vs_w_next_node(d, 26), ComparisonSign::Below);
    assert_eq!(weyl_node_decimal(d, 30, 3), "388002807967.128");
}

#[test]
fn two_term_constants_low_dimensions() {
    let expected = [
        (2, rational(2, 3)),
        (3, rational(1, 1)),
        (4, rational(2, 3)),
        (5, rational(5, 18)),
        (6, rational(1, 12)),
        (7, rational(7, 360)),
        (8, rational(1, 270)),
    ];
    for (n, c2) in expected {
        assert_eq!(
            two_term_constant(dim(n)).unwrap(),
            c2,
            "constant mismatch at n={n}"
        );
    }
}

#[test]
fn volume_identities_up_to_fifty() {
    let two_pi = PiPowerRational::new(rational(2, 1), 1);
    for n in 0..=50u32 {
        assert!(product_identity_check(n), "product identity fails at n={n}");
        assert_eq!(ball_volume(n).value.pi_power(), n / 2);
        if n >= 1 {
            assert_eq!(sphere_volume(n).value.pi_power(), n.div_ceil(2));
            // The induction step behind the identity.
            let lhs = ball_volume(n).value.mul(&sphere_volume(n).value);
            let rhs = ball_volume(n - 1)
                .value
                .mul(&sphere_volume(n - 1).value)
                .mul(&two_pi)
                .scale(&rational(1, n as i64));
            assert_eq!(lhs, rhs, "induction step fails at n={n}");
        }
    }
}

#[test]
fn interval_counts_follow_floor_sqrt() {
    let interval = BoxDomain::new(vec![rational(1, 1)]).unwrap();
    let samples: [(i64, i64); 8] = [
        (1, 1),
        (10, 1),
        (1000, 1),
        (12345, 7),
        (99991, 3),
        (999_999, 1),
        (1_000_000, 1),
        (314159, 100),
    ];
    for (num, den) in samples {
        let q = rational(num, den);
        let count = box_counting(&interval, &q, DEFAULT_ENUM_BUDGET).unwrap();
        let expected = isqrt_floor(&(Integer::from(num) / Integer::from(den))).unwrap();
        assert_eq!(count, expected, "interval count mismatch at q={num}/{den}");
    }
}

#[test]
fn tiling_boxes_hold_polya_at_scale() {
    let square = BoxDomain::new(vec![rational(1, 1); 2]).unwrap();
    let report = polya_report(&square, &rational(1000, 1), DEFAULT_ENUM_BUDGET).unwrap();
    assert!(report.verdict);
    assert!(report.all_strictly_below);

    let rect = BoxDomain::new(vec![rational(1, 1), rational(2, 1)]).unwrap();
    let report = polya_report(&rect, &rational(50, 1), DEFAULT_ENUM_BUDGET).unwrap();
    assert!(report.verdict);
    assert!(report.all_strictly_below);

    let cube = BoxDomain::new(vec![rational(1, 1); 3]).unwrap();
    let report = polya_report(&cube, &rational(50, 1), DEFAULT_ENUM_BUDGET).unwrap();
    assert!(report.verdict);
    assert!(report.all_strictly_below);
}
