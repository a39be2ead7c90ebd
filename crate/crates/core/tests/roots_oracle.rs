//! Solver-vs-oracle equivalence: the simultaneous-iteration roots must match
//! the argument-principle subdivision oracle to 1e−8 with equal
//! multiplicities, over both the documented example and a randomized suite.

mod common;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zlocus::model::StructuredFunction;
use zlocus::qtheta::{qexp_series, QSpec};
use zlocus::roots::{find_roots, roots_of_structured};

fn appendix_function() -> StructuredFunction {
    StructuredFunction::build(
        Complex64::new(60.0, 0.0),
        vec![2.0, 2.5, 3.0, 4.0],
        Complex64::new(5.0, 5.0),
        0,
        vec![1.0, 5.0],
    )
    .unwrap()
}

#[test]
fn appendix_polynomial_matches_winding_oracle() {
    let s = appendix_function();
    let found = roots_of_structured(&s).unwrap();
    let oracle = common::oracle_zeros(&s, 4e-9);
    assert_eq!(found.trusted.total_count(), 8);
    assert_eq!(oracle.iter().map(|(_, m)| m).sum::<i64>(), 8);
    for (z, mult) in &oracle {
        let close = found
            .trusted
            .entries()
            .iter()
            .find(|e| (e.location - z).norm() < 1e-8)
            .unwrap_or_else(|| panic!("oracle zero {z} unmatched"));
        assert_eq!(i64::from(close.multiplicity), *mult);
    }
}

#[test]
fn random_structured_functions_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for trial in 0..100 {
        let s = common::random_structured(&mut rng, 4);
        let found = roots_of_structured(&s)
            .unwrap_or_else(|e| panic!("solver failed on trial {trial}: {e}"));
        let oracle = common::oracle_zeros(&s, 4e-9);
        let expanded = found.trusted.expanded();
        let oracle_count: i64 = oracle.iter().map(|(_, m)| m).sum();
        assert_eq!(
            expanded.len() as i64,
            oracle_count,
            "count mismatch on trial {trial}"
        );
        for (z, mult) in &oracle {
            let matching = found
                .trusted
                .entries()
                .iter()
                .find(|e| (e.location - z).norm() < 1e-8)
                .unwrap_or_else(|| panic!("trial {trial}: oracle zero {z} unmatched"));
            assert_eq!(
                i64::from(matching.multiplicity),
                *mult,
                "multiplicity mismatch at {z} on trial {trial}"
            );
        }
    }
}

#[test]
fn completeness_root_count_equals_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..40 {
        let s = common::random_structured(&mut rng, 4);
        let series = s.expand_to_series();
        let degree = series.degree();
        if degree == 0 {
            continue;
        }
        let found = find_roots(&series).unwrap();
        let total = found.trusted.total_count()
            + found
                .unconfirmed
                .iter()
                .map(|e| e.multiplicity as usize)
                .sum::<usize>();
        assert_eq!(total, degree);
    }
}

#[test]
fn truncation_stability_of_trusted_zeros() {
    // roots inside 0.8·trust move by less than 1e−9 when N grows by 20
    for &(re, im) in &[(0.5, 0.0), (-0.6, 0.0)] {
        let q = Complex64::new(re, im);
        let coarse = qexp_series(&QSpec::new(q, 60).unwrap());
        let fine = qexp_series(&QSpec::new(q, 80).unwrap());
        let coarse_roots = find_roots(&coarse).unwrap().trusted;
        let fine_roots = find_roots(&fine).unwrap().trusted;
        let limit = 0.8 * coarse.trust_radius().min(fine.trust_radius());
        for e in coarse_roots.entries().iter().filter(|e| e.location.norm() <= limit) {
            let matching = fine_roots
                .entries()
                .iter()
                .map(|f| (f.location - e.location).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(
                matching < 1e-9 * e.location.norm().max(1.0),
                "zero {} moved by {matching:e} for q = {q}",
                e.location
            );
        }
    }
}

#[test]
fn sorting_is_input_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let s = common::random_structured(&mut rng, 4);
    let found = roots_of_structured(&s).unwrap();
    let mut raw = found.trusted.expanded();
    let reference = zlocus::roots::cluster_multiplicities(&raw, zlocus::roots::SORT_TOLERANCE);
    raw.reverse();
    let reversed = zlocus::roots::cluster_multiplicities(&raw, zlocus::roots::SORT_TOLERANCE);
    assert_eq!(reference.entries().len(), reversed.entries().len());
    for (x, y) in reference.entries().iter().zip(reversed.entries()) {
        assert!((x.location - y.location).norm() < 1e-14);
        assert_eq!(x.multiplicity, y.multiplicity);
    }
}
