use d2kit::corpus::random_extension;
use d2kit::depth2::{d2_by_summands, left_d2_quasibase, right_d2_quasibase, verify_quasibase};
use d2kit::duality::{build_s, build_t};
use d2kit::linalg::Field;
use d2kit::properties::Side;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn solver_quasibases_verify_and_agree_with_the_oracle(seed in 0u64..10_000) {
        let ext = random_extension(Field::Rational, 6, seed).unwrap();
        for (side, qb) in [(Side::Right, right_d2_quasibase(&ext)), (Side::Left, left_d2_quasibase(&ext))] {
            if let Some(qb) = &qb {
                prop_assert!(verify_quasibase(&ext, qb));
            }
            prop_assert_eq!(qb.is_some(), d2_by_summands(&ext, side));
        }
    }

    #[test]
    fn depth_two_sides_swap_under_opposites(seed in 0u64..10_000) {
        let ext = random_extension(Field::Rational, 6, seed).unwrap();
        let op = ext.opposite();
        prop_assert_eq!(right_d2_quasibase(&ext).is_some(), left_d2_quasibase(&op).is_some());
        prop_assert_eq!(left_d2_quasibase(&ext).is_some(), right_d2_quasibase(&op).is_some());
    }

    #[test]
    fn opposite_audit_passes(seed in 0u64..10_000) {
        let ext = random_extension(Field::Rational, 5, seed).unwrap();
        prop_assert!(d2kit::opposite::audit(&ext).unwrap().passed());
    }

    #[test]
    fn characterization_is_consistent(seed in 0u64..10_000) {
        let ext = random_extension(Field::Rational, 6, seed).unwrap();
        prop_assert!(d2kit::characterization::characterization(&ext).unwrap().consistent);
    }

    #[test]
    fn op_and_cop_are_involutions(seed in 0u64..10_000) {
        let ext = random_extension(Field::Rational, 6, seed).unwrap();
        if let Some(qb) = right_d2_quasibase(&ext) {
            for h in [build_s(&ext, &qb, None).unwrap(), build_t(&ext, &qb, None).unwrap()] {
                prop_assert!(h.op().op().same_data(&h));
                prop_assert!(h.cop().cop().same_data(&h));
                prop_assert!(h.op().cop().first_failing_axiom().is_none());
            }
        }
    }
}

#[test]
fn non_projective_module_with_a_dual_isomorphism_is_not_frobenius() {
    let ext = random_extension(Field::Rational, 6, 20).unwrap();
    assert!(d2kit::properties::frobenius_system(&ext, 0).unwrap().is_none());
}

#[test]
fn bijective_galois_map_with_large_coinvariants_is_not_galois() {
    let ext = random_extension(Field::Rational, 6, 39).unwrap();
    let ch = d2kit::characterization::characterization(&ext).unwrap();
    assert!(ch.right_d2 && ch.galois_map_bijective && !ch.right_balanced);
    assert!(!ch.coinvariants_are_b && !ch.galois && ch.consistent);
}
