//! The library against independent brute force on small shapes.

mod common;

use std::collections::BTreeSet;

use common::Raw;
use z2z4::{word, AdditiveCode, Limits, MixedWord};

const CAP: u128 = 1 << 20;

fn code_of(alpha: usize, beta: usize, gens: &[Raw]) -> AdditiveCode {
    AdditiveCode::new(alpha, beta, gens.iter().map(common::mixed).collect()).unwrap()
}

fn raw_set(code: &AdditiveCode) -> BTreeSet<Raw> {
    code.enumerate(CAP)
        .unwrap()
        .iter()
        .map(common::raw)
        .collect()
}

#[test]
fn lee_distance_of_listed_pair() {
    let a = common::raw(&word("1|1302"));
    let b = common::raw(&word("1|3102"));
    let diff = common::add(&a, &common::scale(3, &b));
    assert_eq!(common::lee_weight(&diff), 4);
    assert_eq!(word("1|1302").lee_distance(&word("1|3102")).unwrap(), 4);
}

#[test]
fn gray_weight_of_generator_by_direct_count() {
    let bits = common::gray(&common::raw(&word("1|1302")));
    assert_eq!(bits.iter().filter(|&&b| b == 1).count(), 5);
    assert_eq!(word("1|1302").gray_image().hamming_weight(), 5);
}

#[test]
fn gray_isometry_exhaustive_small_shapes() {
    for (alpha, beta) in [(0, 1), (1, 0), (1, 1), (2, 1), (1, 2), (2, 2)] {
        let all = common::ambient(alpha, beta);
        for a in &all {
            for b in &all {
                let (ma, mb) = (common::mixed(a), common::mixed(b));
                let gray_d = ma.gray_image().hamming_distance(&mb.gray_image()).unwrap();
                assert_eq!(gray_d, ma.lee_distance(&mb).unwrap());
                let diff = common::add(a, &common::scale(3, b));
                assert_eq!(gray_d, common::lee_weight(&diff));
                assert_eq!(ma.inner_product(&mb).unwrap().value(), common::inner(a, b));
            }
        }
    }
}

#[test]
fn enumeration_and_dual_match_brute_force_for_single_generators() {
    for (alpha, beta) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for g in common::ambient(alpha, beta) {
            let code = code_of(alpha, beta, std::slice::from_ref(&g));
            let expected = common::span(alpha, beta, &[g]);
            assert_eq!(raw_set(&code), expected);
            let dual = code.dual(&Limits::default()).unwrap();
            assert_eq!(raw_set(&dual), common::dual(alpha, beta, &expected));
        }
    }
}

#[test]
fn enumeration_matches_brute_force_for_generator_pairs() {
    let (alpha, beta) = (1, 2);
    let all = common::ambient(alpha, beta);
    for a in &all {
        for b in &all {
            let code = code_of(alpha, beta, &[a.clone(), b.clone()]);
            assert_eq!(
                raw_set(&code),
                common::span(alpha, beta, &[a.clone(), b.clone()])
            );
        }
    }
}

#[test]
fn paut_matches_full_scan() {
    let cases: &[(usize, usize, &[&str])] = &[
        (4, 4, &["1010|1213"]),
        (4, 4, &["1101|1231"]),
        (2, 2, &["10|11", "11|31"]),
        (3, 3, &["101|121"]),
        (3, 2, &["110|12", "011|20"]),
        (0, 4, &["|1302"]),
        (4, 0, &["1100|"]),
    ];
    for &(alpha, beta, gens) in cases {
        let code = AdditiveCode::new(alpha, beta, gens.iter().map(|g| word(g)).collect()).unwrap();
        let group = z2z4::paut(&code, &Limits::default()).unwrap();
        let expected = common::paut(alpha, beta, &raw_set(&code));
        assert_eq!(group.elements(), &expected, "{gens:?}");
    }
}

#[test]
fn paut_of_listed_code_has_order_eight() {
    // the brute-force oracle is the reference for this code
    let words = common::span(4, 4, &[common::raw(&word("1010|1213"))]);
    assert_eq!(common::paut(4, 4, &words).len(), 8);
}

#[test]
fn weight_profiles_match_brute_force() {
    for (alpha, beta) in [(2, 2), (1, 3)] {
        for g in common::ambient(alpha, beta) {
            let code = code_of(alpha, beta, std::slice::from_ref(&g));
            let profile = z2z4::weight_profile(&code, CAP).unwrap();
            let mut counts = std::collections::BTreeMap::new();
            for w in common::span(alpha, beta, &[g]) {
                *counts.entry(common::lee_weight(&w)).or_insert(0usize) += 1;
            }
            assert_eq!(profile.0, counts);
        }
    }
}

#[test]
fn gray_image_of_small_code_by_table() {
    let code = AdditiveCode::new(1, 1, vec![word("0|1")]).unwrap();
    let image: BTreeSet<Vec<u8>> = code
        .gray_image(CAP)
        .unwrap()
        .words
        .iter()
        .map(|b| b.bits().iter().map(|x| x.value()).collect())
        .collect();
    let expected: BTreeSet<Vec<u8>> = common::span(1, 1, &[(vec![0], vec![1])])
        .iter()
        .map(common::gray)
        .collect();
    assert_eq!(image, expected);
    assert_eq!(
        expected,
        BTreeSet::from([vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![0, 1, 0]])
    );
}

#[test]
fn shift_of_generator_is_not_a_codeword() {
    let words = common::span(2, 2, &[common::raw(&word("10|11"))]);
    let shifted = common::raw(&word("10|11").cyclic_shift());
    assert_eq!(shifted, (vec![0, 1], vec![1, 1]));
    assert!(!words.contains(&shifted));
    let _: MixedWord = common::mixed(&shifted);
}
