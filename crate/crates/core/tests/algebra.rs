use d2kit::algebra::Algebra;
use d2kit::groups;
use d2kit::linalg::{solve_linear, Field, Scalar};
use proptest::prelude::*;

fn s3(field: Field) -> Algebra {
    Algebra::group_algebra(field, groups::symmetric3().table()).unwrap()
}

fn element(field: Field, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

proptest! {
    #[test]
    fn units_of_f7_s3_match_the_regular_determinant(xs in prop::collection::vec(0i64..7, 6)) {
        let f = Field::Prime(7);
        let a = s3(f);
        let x = element(f, &xs);
        let det = a.left_mul_matrix(&x).determinant();
        prop_assert_eq!(a.is_invertible_coords(&x), !det.is_zero());
        if let Some(y) = solve_linear(&a.left_mul_matrix(&x), a.unit()) {
            prop_assert_eq!(a.mul_coords(&y, &x), a.unit().to_vec());
        }
    }

    #[test]
    fn group_algebra_products_are_associative(xs in prop::collection::vec(-3i64..=3, 18)) {
        let f = Field::Rational;
        let a = s3(f);
        let (x, y, z) = (element(f, &xs[..6]), element(f, &xs[6..12]), element(f, &xs[12..]));
        prop_assert_eq!(a.mul_coords(&a.mul_coords(&x, &y), &z), a.mul_coords(&x, &a.mul_coords(&y, &z)));
    }

    #[test]
    fn opposite_reverses_products(xs in prop::collection::vec(-3i64..=3, 8)) {
        let f = Field::Rational;
        let a = Algebra::matrix_algebra(f, 2);
        let op = a.opposite();
        let (x, y) = (element(f, &xs[..4]), element(f, &xs[4..]));
        prop_assert_eq!(op.mul_coords(&x, &y), a.mul_coords(&y, &x));
        prop_assert!(op.opposite().same_data(&a));
    }
}
