//! Operations on coordinate vectors of `V ⊗_K W`, index `i * dim W + j`.

use crate::linalg::{vec_ops, Matrix, Scalar};

/// `(P ⊗ id) t` where `P` acts on the first factor.
pub fn apply_first(p: &Matrix, dim_w: usize, t: &[Scalar]) -> Vec<Scalar> {
    let dim_v = p.cols();
    assert_eq!(t.len(), dim_v * dim_w);
    let mut out = vec_ops::zeros(p.field(), p.rows() * dim_w);
    for i in 0..dim_v {
        let row = &t[i * dim_w..(i + 1) * dim_w];
        if vec_ops::is_zero(row) {
            continue;
        }
        for a in 0..p.rows() {
            let x = p.get(a, i);
            if x.is_zero() {
                continue;
            }
            vec_ops::axpy(&mut out[a * dim_w..(a + 1) * dim_w], x, row);
        }
    }
    out
}

/// `(id ⊗ Q) t` where `Q` acts on the second factor.
pub fn apply_second(q: &Matrix, dim_v: usize, t: &[Scalar]) -> Vec<Scalar> {
    let dim_w = q.cols();
    assert_eq!(t.len(), dim_v * dim_w);
    let out_w = q.rows();
    let mut out = vec_ops::zeros(q.field(), dim_v * out_w);
    for i in 0..dim_v {
        for j in 0..dim_w {
            let x = &t[i * dim_w + j];
            if x.is_zero() {
                continue;
            }
            for b in 0..out_w {
                let y = q.get(b, j);
                if !y.is_zero() {
                    out[i * out_w + b].add_mul(x, y);
                }
            }
        }
    }
    out
}

/// `(P ⊗ Q) t`.
pub fn apply_both(p: &Matrix, q: &Matrix, t: &[Scalar]) -> Vec<Scalar> {
    apply_second(q, p.rows(), &apply_first(p, q.cols(), t))
}

/// `t ↦ flip(t)`: `v ⊗ w ↦ w ⊗ v`.
pub fn flip(dim_v: usize, dim_w: usize, t: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(t.len(), dim_v * dim_w);
    let mut out = t.to_vec();
    for i in 0..dim_v {
        for j in 0..dim_w {
            out[j * dim_v + i] = t[i * dim_w + j].clone();
        }
    }
    out
}

/// Nonzero simple-tensor terms `(i, j, coefficient)`.
pub fn terms(dim_w: usize, t: &[Scalar]) -> impl Iterator<Item = (usize, usize, &Scalar)> {
    t.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(move |(k, x)| (k / dim_w, k % dim_w, x))
}

/// Evaluates the bilinear map `(x, y) ↦ g(x, y)` on a tensor given its
/// values on basis pairs.
pub fn contract<F>(dim_w: usize, out_len: usize, t: &[Scalar], mut g: F) -> Vec<Scalar>
where
    F: FnMut(usize, usize) -> Vec<Scalar>,
{
    let field = t.first().map(Scalar::field).expect("empty tensor");
    let mut acc = vec_ops::zeros(field, out_len);
    for (i, j, x) in terms(dim_w, t) {
        vec_ops::axpy(&mut acc, x, &g(i, j));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn first_and_second_factor_actions_commute() {
        let q = Field::Rational;
        let p = Matrix::from_i64(q, &[&[1, 2], &[0, 1]]);
        let r = Matrix::from_i64(q, &[&[0, 1, 0], &[1, 0, 0], &[2, 0, 1]]);
        let t: Vec<Scalar> = (0..6).map(|v| q.from_i64(v * v - 3)).collect();
        let a = apply_second(&r, 2, &apply_first(&p, 3, &t));
        let b = apply_first(&p, 3, &apply_second(&r, 2, &t));
        assert_eq!(a, b);
        assert_eq!(a, p.kron(&r).mul_vec(&t));
        assert_eq!(flip(3, 2, &flip(2, 3, &t)), t);
    }
}
