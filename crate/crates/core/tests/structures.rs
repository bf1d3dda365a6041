//! Dimensions and structure maps of the spaces attached to an extension,
//! against independent constructions from Kronecker products.

use d2kit::corpus::case;
use d2kit::depth2::{is_h_separable, left_d2_quasibase, right_d2_quasibase, verify_quasibase, Quasibase};
use d2kit::extension::Extension;
use d2kit::linalg::{nullspace, rank, vec_ops, Field, Matrix, Scalar, Subspace};
use d2kit::properties::{frobenius_system, is_balanced, split_projection, Side};

fn ext(name: &str) -> Extension {
    case(name, Field::Rational).unwrap().extension
}

fn stack(blocks: &[Matrix]) -> Matrix {
    blocks[1..].iter().fold(blocks[0].clone(), |acc, b| acc.vstack(b))
}

/// Dimension of `{X : XM = MX for all M}` via `(M ⊗ 1 − 1 ⊗ Mᵀ) vec X = 0`.
fn commutant_dim(field: Field, n: usize, ops: &[Matrix]) -> usize {
    let id = Matrix::identity(field, n);
    let blocks: Vec<Matrix> = ops.iter().map(|m| m.kron(&id).sub(&id.kron(&m.transpose()))).collect();
    n * n - rank(&stack(&blocks))
}

/// Relations `xb ⊗ y − x ⊗ by` as columns of one matrix.
fn relations(e: &Extension) -> Matrix {
    let id = Matrix::identity(e.field(), e.n());
    let blocks: Vec<Matrix> = e
        .right_b_ops()
        .iter()
        .zip(e.left_b_ops())
        .map(|(r, l)| r.kron(&id).sub(&id.kron(l)))
        .collect();
    blocks[1..].iter().fold(blocks[0].clone(), |acc, b| acc.hstack(b))
}

fn tensor_dim(e: &Extension) -> usize {
    e.n() * e.n() - rank(&relations(e))
}

/// `dim {w : bw − wb ∈ relations}` minus the relations.
fn tee_dim(e: &Extension) -> usize {
    let f = e.field();
    let n = e.n();
    let id = Matrix::identity(f, n);
    let rel = relations(e);
    let m = e.left_b_ops().len();
    let k = rel.cols();
    let mut rows: Vec<Matrix> = Vec::new();
    for (i, (l, r)) in e.left_b_ops().iter().zip(e.right_b_ops()).enumerate() {
        let comm = l.kron(&id).sub(&id.kron(r));
        let mut block = comm;
        for j in 0..m {
            let piece = if i == j { rel.scale(&f.from_i64(-1)) } else { Matrix::zeros(f, n * n, k) };
            block = block.hstack(&piece);
        }
        rows.push(block);
    }
    let kernel = nullspace(&stack(&rows));
    let w_part = Subspace::span(f, n * n, kernel.vectors().into_iter().map(|v| v[..n * n].to_vec()));
    w_part.dim() - rank(&rel)
}

fn e_unit(f: Field, i: usize, j: usize, n: usize) -> Vec<Scalar> {
    vec_ops::unit(f, n * n, i * n + j)
}

#[test]
fn centralizer_of_the_upper_triangular_embedding() {
    let e = ext("paper-matrix");
    let f = e.field();
    let expected = Subspace::span(f, 9, [e_unit(f, 0, 0, 3), e_unit(f, 1, 0, 3), vec_ops::add(&e_unit(f, 1, 1, 3), &e_unit(f, 2, 2, 3))]);
    let r = &e.centralizer().space;
    assert_eq!(r.dim(), 3);
    assert!(r.contains_subspace(&expected) && expected.contains_subspace(r));
}

#[test]
fn endomorphism_dimensions_match_kronecker_commutants() {
    for name in ["paper-matrix", "s3-over-a3", "m2-over-diagonal", "c4-over-c2"] {
        let e = ext(name);
        let f = e.field();
        let n = e.n();
        let both: Vec<Matrix> = e.left_b_ops().iter().chain(e.right_b_ops()).cloned().collect();
        assert_eq!(e.bimodule_endos().dim(), commutant_dim(f, n, &both), "{name} S");
        assert_eq!(e.left_endos().dim(), commutant_dim(f, n, e.left_b_ops()), "{name} 𝓔");
        assert_eq!(e.right_endos().dim(), commutant_dim(f, n, e.right_b_ops()), "{name} E");
    }
    assert_eq!(ext("paper-matrix").left_endos().dim(), 27);
    assert_eq!(ext("s3-over-a3").left_endos().dim(), 12);
    // K ⊂ upper triangular: 𝓔 = End(B_K) ≅ M_3
    assert_eq!(ext("triangular-over-scalars").left_endos().dim(), 9);
}

#[test]
fn tensor_and_invariant_dimensions_match_kronecker_oracles() {
    for name in ["paper-matrix", "s3-over-a3", "s3-over-transposition", "m2-over-diagonal", "c4-over-c2"] {
        let e = ext(name);
        assert_eq!(e.tensor().dim(), tensor_dim(&e), "{name} A ⊗_B A");
        assert_eq!(e.tee().dim(), tee_dim(&e), "{name} T");
    }
    assert_eq!(ext("paper-matrix").tensor().dim(), 27);
    assert_eq!(ext("s3-over-a3").tensor().dim(), 12);
}

#[test]
fn left_balance_matches_a_double_commutant() {
    for name in ["paper-matrix", "s3-over-transposition", "m2-over-diagonal"] {
        let e = ext(name);
        let f = e.field();
        let endos = e.left_endos().maps();
        let double = commutant_dim(f, e.n(), &endos);
        assert_eq!(is_balanced(&e, Side::Left), double == e.base().dim(), "{name}");
    }
}

#[test]
fn group_extension_over_normal_subgroup_is_frobenius_and_split() {
    let e = ext("s3-over-a3");
    let sys = frobenius_system(&e, 1).unwrap().expect("Frobenius");
    let a = e.total();
    let n = e.n();
    let phi_a = |x: &[Scalar]| e.embedding().mul_vec(&sys.phi.mul_vec(x));
    for t in 0..n {
        let (mut left, mut right) = (a.zero_vector(), a.zero_vector());
        for (i, j, c) in d2kit::tensor::terms(n, &sys.dual) {
            vec_ops::axpy(&mut left, c, &a.mul_coords(&a.basis_vector(i), &phi_a(a.basis_product(j, t))));
            vec_ops::axpy(&mut right, c, &a.mul_coords(&phi_a(a.basis_product(t, i)), &a.basis_vector(j)));
        }
        assert_eq!(left, a.basis_vector(t));
        assert_eq!(right, a.basis_vector(t));
    }
    let p = split_projection(&e).expect("split");
    assert_eq!(p.mul(e.embedding()), Matrix::identity(e.field(), e.base().dim()));
}

#[test]
fn h_separability_forces_both_quasibases() {
    for name in d2kit::corpus::CASE_NAMES {
        let e = ext(name);
        if is_h_separable(&e) {
            assert!(right_d2_quasibase(&e).is_some() && left_d2_quasibase(&e).is_some(), "{name}");
        }
    }
    assert!(is_h_separable(&ext("paper-matrix")));
}

#[test]
fn hand_built_quasibase_for_matrices_over_scalars() {
    // γ_(k,l)(x) = x_kl 1 and u_(k,l) = Σ_m e_mm ⊗ e_kl
    let e = ext("scalars-into-m2");
    let f = e.field();
    let tee = e.tee();
    let pairs = (0..2)
        .flat_map(|k| (0..2).map(move |l| (k, l)))
        .map(|(k, l)| {
            let mut gamma = Matrix::zeros(f, 4, 4);
            for i in 0..2 {
                // γ(x) = x_kl · 1
                gamma.set(3 * i, 2 * k + l, f.one());
            }
            let mut amb = vec_ops::zeros(f, 16);
            for m in 0..2 {
                vec_ops::axpy(&mut amb, &f.one(), &vec_ops::outer(&e_unit(f, m, m, 2), &e_unit(f, k, l, 2)));
            }
            (e.bimodule_endos().coords(&gamma).unwrap(), tee.coords(&e, &amb).unwrap())
        })
        .collect();
    let qb = Quasibase { side: Side::Right, pairs };
    assert!(verify_quasibase(&e, &qb));
}

#[test]
fn coinvariants_of_the_regular_coaction_are_the_target_image() {
    for name in ["paper-matrix", "s3-over-a3", "m2-over-diagonal"] {
        let e = ext(name);
        let qb = right_d2_quasibase(&e).unwrap();
        let s = d2kit::duality::build_s(&e, &qb, None).unwrap();
        let coinv = d2kit::comodule::Coaction::regular(&s).unwrap().coinvariants();
        let target = Subspace::span(e.field(), s.dim(), (0..s.base.dim()).map(|r| s.target.col(r)));
        assert!(coinv.contains_subspace(&target) && target.contains_subspace(&coinv), "{name}");
    }
}
