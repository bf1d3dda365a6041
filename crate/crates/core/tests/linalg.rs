use d2kit::linalg::{inverse, nullspace, rank, rank_factor, solve_linear, Field, Matrix};
use proptest::prelude::*;

/// Plain elimination mod 7 on machine integers.
fn rank_mod7(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(7)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = (1..7).find(|x| x * m[r][c] % 7 == 1).unwrap();
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c] * inv % 7;
                for j in 0..cols {
                    m[i][j] = (m[i][j] - f * m[r][j]).rem_euclid(7);
                }
            }
        }
        r += 1;
    }
    r
}

fn matrix(field: Field, rows: &[Vec<i64>]) -> Matrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Matrix::from_i64(field, &refs)
}

fn entries(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

proptest! {
    #[test]
    fn rank_over_f7_matches_plain_elimination(rows in entries(5, 5)) {
        prop_assert_eq!(rank(&matrix(Field::Prime(7), &rows)), rank_mod7(&rows));
    }

    #[test]
    fn solutions_resubstitute(rows in entries(4, 6), x in prop::collection::vec(-4i64..=4, 6)) {
        let f = Field::Rational;
        let a = matrix(f, &rows);
        let b = a.mul_vec(&x.iter().map(|&v| f.from_i64(v)).collect::<Vec<_>>());
        let sol = solve_linear(&a, &b).expect("consistent by construction");
        prop_assert_eq!(a.mul_vec(&sol), b);
    }

    #[test]
    fn nullspace_is_annihilated_and_complete(rows in entries(4, 6)) {
        let a = matrix(Field::Rational, &rows);
        let k = nullspace(&a);
        prop_assert_eq!(k.dim() + rank(&a), 6);
        for v in k.vectors() {
            prop_assert!(a.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_factorization_reconstructs(rows in entries(5, 4)) {
        let a = matrix(Field::Rational, &rows);
        let (c, r) = rank_factor(&a);
        prop_assert_eq!(c.cols(), rank(&a));
        prop_assert_eq!(c.mul(&r), a);
    }

    #[test]
    fn inverse_exists_iff_determinant_is_nonzero(rows in entries(4, 4)) {
        let a = matrix(Field::Rational, &rows);
        match inverse(&a) {
            Some(inv) => prop_assert_eq!(a.mul(&inv), Matrix::identity(Field::Rational, 4)),
            None => prop_assert!(a.determinant().is_zero()),
        }
    }
}
