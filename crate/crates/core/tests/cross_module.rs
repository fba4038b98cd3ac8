//! Agreement between independently computed quantities, through the public API.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use quadisc::codes::{
    distance_distribution, dual_distribution, dual_of, extend_code, pairwise_distance_distribution,
    random_code, BinaryCode,
};
use quadisc::discrepancy::{
    analyze, discrepancy_brute, discrepancy_dual, discrepancy_from_values, discrepancy_spectrum,
    energy, extension_identity,
};
use quadisc::kernels::{lambda_brute, lambda_eval};
use quadisc::lp_bounds::{bound_hamming_type, check_certificate, primal_discrepancy_lp};
use quadisc::metric_space::{
    general_discrepancy, hamming_cube, weighted_discrepancy, weighted_dual_discrepancy,
    WeightVector,
};
use quadisc::Scalar;

fn word_list() -> impl Strategy<Value = (usize, Vec<u64>)> {
    (1usize..=9).prop_flat_map(|n| (Just(n), prop::collection::vec(0u64..1 << n, 1..=12)))
}

fn code_of(n: usize, words: Vec<u64>) -> BinaryCode {
    BinaryCode::from_multiset(n, words, "prop").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_routes_agree((n, words) in word_list()) {
        let code = code_of(n, words);
        let a = analyze(&code, Some(12)).unwrap();
        prop_assert!(a.all_agree());
        prop_assert_eq!(a.value(), &discrepancy_brute(&code).unwrap());
        prop_assert!(a.value() >= &BigRational::from_integer(0.into()));
    }

    #[test]
    fn float_path_tracks_exact((n, words) in word_list()) {
        let code = code_of(n, words);
        let dist = pairwise_distance_distribution(&code).unwrap();
        let exact = discrepancy_spectrum(&dist);
        let values: Vec<f64> = dist.values().iter().map(Scalar::as_f64).collect();
        let approx = discrepancy_from_values(&(code.size() as f64), &values).unwrap();
        prop_assert!((approx - exact.as_f64()).abs() <= 1e-9 * (1.0 + approx.abs()));
    }

    #[test]
    fn energy_below_lp_optimum((n, mut words) in word_list()) {
        words.sort_unstable();
        words.dedup();
        let code = code_of(n, words);
        let e = energy(&pairwise_distance_distribution(&code).unwrap());
        let lp = primal_discrepancy_lp(n, code.size()).unwrap();
        prop_assert!(e <= lp.energy);
        if n % 2 == 1 {
            prop_assert!(e <= bound_hamming_type(n, code.size()).unwrap());
        }
    }

    #[test]
    fn cube_space_matches_code((n, words) in word_list()) {
        let n = n.min(7);
        let words: Vec<u64> = words.into_iter().map(|w| w & ((1 << n) - 1)).collect();
        let cube = hamming_cube(n).unwrap();
        let subset: Vec<usize> = words.iter().map(|&w| w as usize).collect();
        let code = code_of(n, words);
        let g = general_discrepancy(&cube, &subset).unwrap();
        prop_assert_eq!(g.value(), &discrepancy_spectrum(&pairwise_distance_distribution(&code).unwrap()));
    }

    #[test]
    fn weighted_dual_form((n, words) in word_list(), raw in prop::collection::vec(0i64..5, 10)) {
        let n = n.min(6);
        let words: Vec<u64> = words.into_iter().map(|w| w & ((1 << n) - 1)).collect();
        let g: Vec<BigRational> = raw[..=n].iter().map(|&v| BigRational::new(v.into(), 2.into())).collect();
        let weights = WeightVector::new(g).unwrap();
        let subset: Vec<usize> = words.iter().map(|&w| w as usize).collect();
        let wd = weighted_discrepancy(&hamming_cube(n).unwrap(), &subset, &weights).unwrap();
        let dual = dual_of(&pairwise_distance_distribution(&code_of(n, words)).unwrap()).unwrap();
        prop_assert_eq!(wd.value(), &weighted_dual_discrepancy(&dual, &weights).unwrap());
        prop_assert_eq!(wd.value(), &wd.kernel_difference);
    }

    #[test]
    fn kernel_matches_definition(n in 1usize..=10, x in any::<u64>(), y in any::<u64>()) {
        let mask = (1u64 << n) - 1;
        let (x, y) = (x & mask, y & mask);
        let w = (x ^ y).count_ones() as usize;
        prop_assert_eq!(lambda_brute(n, x, y).unwrap(), lambda_eval(n, w).unwrap());
    }
}

#[test]
fn extension_of_random_odd_codes() {
    for seed in 0..20u64 {
        let n = 3 + 2 * (seed % 4) as usize;
        let code = random_code(n, 2 + (seed % 9) as usize, seed).unwrap();
        let check = extension_identity(&code).unwrap();
        assert!(check.holds(), "{check}");
        let ext = extend_code(&code).unwrap();
        assert_eq!(discrepancy_brute(&ext).unwrap(), check.lhs);
    }
}

#[test]
fn dual_distribution_of_linear_codes_is_dual_weight_distribution() {
    for id in [
        "hamming:3",
        "simplex:4",
        "subcube:9:4",
        "extend:hamming:3",
        "repetition:8",
        "qr17",
    ] {
        let code = quadisc::code_from_id(id).unwrap();
        let dual = dual_distribution(&code).unwrap();
        let dual_code = code.dual_code().unwrap();
        let weights = distance_distribution(&dual_code).unwrap();
        assert_eq!(dual.values(), weights.values().as_slice(), "{id}");
        assert_eq!(
            discrepancy_dual(&dual).unwrap(),
            discrepancy_spectrum(&distance_distribution(&code).unwrap())
        );
    }
}

#[test]
fn zero_certificate_is_rejected_everywhere() {
    for n in 1..=8 {
        let zeros = vec![BigRational::from_integer(BigInt::from(0)); n + 1];
        let c = check_certificate(n, 2, &zeros).unwrap();
        assert!(!c.feasible);
        assert_eq!(c.violations.len(), n);
    }
}
