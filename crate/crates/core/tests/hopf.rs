use d2kit::algebra::Algebra;
use d2kit::corpus::{case, identity, scalars_into};
use d2kit::depth2::right_d2_quasibase;
use d2kit::hopf::{kanzaki_element, HopfAlgebroid};
use d2kit::linalg::{Field, Scalar};

fn q(s: &str) -> Scalar {
    Field::Rational.parse(s).unwrap()
}

fn coords(field: Field, dim: usize, entries: &[(usize, usize, &str)]) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim * dim];
    for (i, j, x) in entries {
        v[i * dim + j] = field.parse(x).unwrap();
    }
    v
}

#[test]
fn kanzaki_element_of_a_product_of_fields() {
    let f = Field::Rational;
    let b = Algebra::product_algebra(&Algebra::ground(f), &Algebra::ground(f)).unwrap();
    let e = kanzaki_element(&b).unwrap();
    assert_eq!(e.0, coords(f, 2, &[(0, 0, "1"), (1, 1, "1")]));
    assert!(e.verify(&b));
}

#[test]
fn kanzaki_element_of_2x2_matrices() {
    let f = Field::Rational;
    let b = Algebra::matrix_algebra(f, 2);
    let e = kanzaki_element(&b).unwrap();
    // ½ Σ e_ij ⊗ e_ji with e_ij at index 2i + j
    let mut expected = vec![f.zero(); 16];
    for i in 0..2 {
        for j in 0..2 {
            expected[(2 * i + j) * 4 + 2 * j + i] = q("1/2");
        }
    }
    assert_eq!(e.0, expected);
}

#[test]
fn matrices_over_f2_are_not_kanzaki_separable() {
    assert!(kanzaki_element(&Algebra::matrix_algebra(Field::Prime(2), 2)).is_none());
    assert!(kanzaki_element(&Algebra::matrix_algebra(Field::Prime(3), 2)).is_some());
}

#[test]
fn antipode_on_m2_over_diagonal() {
    let c = case("m2-over-diagonal", Field::Rational).unwrap();
    let h = HopfAlgebroid::new(&c.extension).unwrap();
    assert!(h.passes());
    let one = h.bialgebroid.total.unit().to_vec();
    assert_eq!(h.tau.mul_vec(&one), one);
    let report = h.report(true).unwrap();
    assert!(report.representative_independent);
    assert!(report.intermediate.iter().all(|c| c.passed));
}

#[test]
fn ground_field_base_gives_the_flip() {
    let a = Algebra::matrix_algebra(Field::Rational, 2);
    let ext = scalars_into(a);
    let h = HopfAlgebroid::new(&ext).unwrap();
    assert!(h.passes());
    let tee = ext.tee();
    let n = ext.n();
    for (i, w) in tee.reps.iter().enumerate() {
        let flipped = d2kit::tensor::flip(n, n, w);
        assert_eq!(tee.coords(&ext, &flipped).unwrap(), h.tau.col(i));
    }
}

#[test]
fn every_kanzaki_corpus_case_is_a_hopf_algebroid() {
    for name in d2kit::corpus::CASE_NAMES {
        let c = case(name, Field::Rational).unwrap();
        let ext = &c.extension;
        match (right_d2_quasibase(ext), kanzaki_element(ext.base())) {
            (Some(_), Some(_)) => assert!(HopfAlgebroid::new(ext).unwrap().passes(), "{name}"),
            _ => assert!(HopfAlgebroid::new(ext).is_err(), "{name}"),
        }
    }
    assert!(HopfAlgebroid::new(&identity(Algebra::matrix_algebra(Field::Prime(2), 2))).is_err());
}
