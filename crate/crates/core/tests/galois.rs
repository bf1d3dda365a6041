use d2kit::corollaries::{converse_frobenius_check, right_endo_corollary, ConverseReport};
use d2kit::corpus::case;
use d2kit::linalg::Field;
use d2kit::tower::Tower;

fn ext(name: &str) -> d2kit::extension::Extension {
    case(name, Field::Rational).unwrap().extension
}

#[test]
fn coinvariants_of_the_tower_coaction_are_right_multiplications() {
    let e = ext("paper-matrix");
    let tower = Tower::new(&e).unwrap();
    let g = tower.galois().unwrap();
    let rho = tower.rho_image();
    assert_eq!(rho.dim(), 9);
    assert!(g.coinvariants.contains_subspace(&rho) && rho.contains_subspace(&g.coinvariants));
    assert!(g.summary().bijective && g.summary().closed_form_is_inverse);
}

#[test]
fn right_endomorphism_extension_of_the_upper_triangular_base() {
    let r = right_endo_corollary(&ext("triangular-over-scalars")).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.dim_e, 9);
}

#[test]
fn converse_on_normal_and_non_normal_subgroups() {
    match converse_frobenius_check(&ext("s3-over-a3"), 0).unwrap() {
        ConverseReport::Checked { e_left_d2, e_right_d2, left_d2, right_d2, implication_holds, .. } => {
            assert!(e_left_d2 && e_right_d2 && left_d2 && right_d2 && implication_holds);
        }
        r => panic!("{r:?}"),
    }
    match converse_frobenius_check(&ext("s3-over-transposition"), 0).unwrap() {
        ConverseReport::Checked { e_left_d2, e_right_d2, left_d2, right_d2, implication_holds, .. } => {
            assert!(!left_d2 && !right_d2 && implication_holds);
            assert!(!(e_left_d2 && e_right_d2));
        }
        r => panic!("{r:?}"),
    }
    assert!(matches!(converse_frobenius_check(&ext("paper-matrix"), 0).unwrap(), ConverseReport::Skipped { .. }));
}
