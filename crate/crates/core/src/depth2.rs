//! Central projectivity certificates, depth-two quasibases and
//! H-separability.

use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::hom::{HomSpace, Intertwine};
use crate::linalg::{rank_factor, solve_linear, tensor_quotient, vec_ops, Field, Matrix, QuotientSpace, Scalar};
use crate::properties::Side;
use crate::tensor;

/// A finite-dimensional bimodule given by the actions of generators of the
/// left and right acting algebras.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub dim: usize,
    pub left_ops: Vec<Matrix>,
    pub right_ops: Vec<Matrix>,
}

impl Bimodule {
    /// `M ⊕ N` with block-diagonal actions.
    pub fn direct_sum(&self, o: &Bimodule) -> Result<Bimodule> {
        if self.left_ops.len() != o.left_ops.len() || self.right_ops.len() != o.right_ops.len() {
            return Err(Error::Shape("direct sum of bimodules over different generator lists".into()));
        }
        let block = |x: &Matrix, y: &Matrix| {
            let f = x.field();
            let top = x.hstack(&Matrix::zeros(f, x.rows(), y.cols()));
            let bottom = Matrix::zeros(f, y.rows(), x.cols()).hstack(y);
            top.vstack(&bottom)
        };
        Ok(Bimodule {
            dim: self.dim + o.dim,
            left_ops: self.left_ops.iter().zip(&o.left_ops).map(|(x, y)| block(x, y)).collect(),
            right_ops: self.right_ops.iter().zip(&o.right_ops).map(|(x, y)| block(x, y)).collect(),
        })
    }
}

/// Bimodule maps `dom → cod`.
pub fn bimodule_homs(field: Field, dom: &Bimodule, cod: &Bimodule) -> HomSpace {
    let mut c = Vec::new();
    for (x, y) in dom.left_ops.iter().zip(&cod.left_ops) {
        c.push(Intertwine::new(x.clone(), y.clone()));
    }
    for (x, y) in dom.right_ops.iter().zip(&cod.right_ops) {
        c.push(Intertwine::new(x.clone(), y.clone()));
    }
    HomSpace::intertwiners(field, dom.dim, cod.dim, &c)
}

/// `id_M = Σ_j ι_j ∘ π_j` with `ι_j: N → M`, `π_j: M → N` bimodule maps.
#[derive(Clone, Debug)]
pub struct CentralProjectivityCertificate {
    pub injectors: Vec<Matrix>,
    pub retractors: Vec<Matrix>,
    /// Coefficients over the product basis `ι_a ∘ π_b`.
    pub coefficients: Matrix,
}

impl CentralProjectivityCertificate {
    pub fn len(&self) -> usize {
        self.injectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.injectors.is_empty()
    }

    pub fn verify(&self, dim_m: usize, field: Field) -> bool {
        let mut acc = Matrix::zeros(field, dim_m, dim_m);
        for (i, p) in self.injectors.iter().zip(&self.retractors) {
            acc = acc.add(&i.mul(p));
        }
        acc == Matrix::identity(field, dim_m)
    }
}

/// Decides whether `M` is a direct summand of some `N^k` by asking whether
/// `id_M` lies in the span of all composites `M → N → M`.
pub fn centrally_projective(field: Field, m: &Bimodule, n: &Bimodule) -> Option<CentralProjectivityCertificate> {
    let into = bimodule_homs(field, n, m).maps();
    let out = bimodule_homs(field, m, n).maps();
    if m.dim == 0 {
        let z = Matrix::zeros(field, 0, 0);
        return Some(CentralProjectivityCertificate { injectors: vec![], retractors: vec![], coefficients: z });
    }
    if into.is_empty() || out.is_empty() {
        return None;
    }
    let mut cols = Vec::with_capacity(into.len() * out.len());
    for i in &into {
        for p in &out {
            cols.push(i.mul(p).to_vec());
        }
    }
    let sys = Matrix::from_cols(field, m.dim * m.dim, cols);
    let c = solve_linear(&sys, &Matrix::identity(field, m.dim).to_vec())?;
    let coefficients = Matrix::from_vec(field, into.len(), out.len(), c);
    let (left, right) = rank_factor(&coefficients);
    let injectors = (0..left.cols())
        .map(|j| combine_maps(field, &into, &left.col(j), m.dim, n.dim))
        .collect();
    let retractors = (0..right.rows())
        .map(|j| combine_maps(field, &out, right.row(j), n.dim, m.dim))
        .collect();
    let cert = CentralProjectivityCertificate { injectors, retractors, coefficients };
    debug_assert!(cert.verify(m.dim, field));
    Some(cert)
}

fn combine_maps(field: Field, maps: &[Matrix], c: &[Scalar], rows: usize, cols: usize) -> Matrix {
    let mut acc = Matrix::zeros(field, rows, cols);
    for (x, f) in c.iter().zip(maps) {
        if !x.is_zero() {
            acc = acc.add(&f.scale(x));
        }
    }
    acc
}

/// `A ⊗_B A` with the requested actions on quotient coordinates: `left`
/// and `right` say whether `A` or only `B` acts on that side.
pub fn tensor_bimodule(ext: &Extension, left_by_a: bool, right_by_a: bool) -> Bimodule {
    let n = ext.n();
    let q = ext.tensor();
    let field = ext.field();
    let a = ext.total();
    let lops: &[Matrix] = if left_by_a { a.left_basis_ops() } else { ext.left_b_ops() };
    let rops: &[Matrix] = if right_by_a { a.right_basis_ops() } else { ext.right_b_ops() };
    let induce_left = |l: &Matrix| q.induced_map(|c| tensor::apply_first(l, n, &vec_ops::unit(field, n * n, c)));
    let induce_right = |r: &Matrix| q.induced_map(|c| tensor::apply_second(r, n, &vec_ops::unit(field, n * n, c)));
    Bimodule {
        dim: q.dim(),
        left_ops: lops.iter().map(induce_left).collect(),
        right_ops: rops.iter().map(induce_right).collect(),
    }
}

/// `A` itself with the same acting algebras.
pub fn regular_bimodule(ext: &Extension, left_by_a: bool, right_by_a: bool) -> Bimodule {
    let a = ext.total();
    Bimodule {
        dim: ext.n(),
        left_ops: if left_by_a { a.left_basis_ops().to_vec() } else { ext.left_b_ops().to_vec() },
        right_ops: if right_by_a { a.right_basis_ops().to_vec() } else { ext.right_b_ops().to_vec() },
    }
}

/// Direct-summand test of `A ⊗_B A` in `A^k`, independent of `S` and `T`:
/// right D2 uses `A`-`B`-bimodules, left D2 uses `B`-`A`-bimodules.
pub fn d2_by_summands(ext: &Extension, side: Side) -> bool {
    let (l, r) = match side {
        Side::Right => (true, false),
        Side::Left => (false, true),
    };
    centrally_projective(ext.field(), &tensor_bimodule(ext, l, r), &regular_bimodule(ext, l, r)).is_some()
}

/// `A ⊗_B A` centrally projective over `A` as `A`-`A`-bimodules.
pub fn is_h_separable(ext: &Extension) -> bool {
    h_separability_certificate(ext).is_some()
}

pub fn h_separability_certificate(ext: &Extension) -> Option<CentralProjectivityCertificate> {
    centrally_projective(ext.field(), &tensor_bimodule(ext, true, true), &regular_bimodule(ext, true, true))
}

/// Paired elements `(S-coords, T-coords)`: `(γ_j, u_j)` on the right side,
/// `(β_i, t_i)` on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasibase {
    pub side: Side,
    pub pairs: Vec<(Vec<Scalar>, Vec<Scalar>)>,
}

impl Quasibase {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Quotient image of `(L_x ⊗ id) u` (right) or `(id ⊗ R_x) t` (left) for
/// every `T`-basis element and `A`-basis `x`.
fn moved_tee(ext: &Extension, side: Side) -> Vec<Vec<Vec<Scalar>>> {
    let n = ext.n();
    let a = ext.total();
    let q = ext.tensor();
    ext.tee()
        .reps
        .iter()
        .map(|u| {
            (0..n)
                .map(|x| match side {
                    Side::Right => q.project(&tensor::apply_first(&a.left_basis_ops()[x], n, u)),
                    Side::Left => q.project(&tensor::apply_second(&a.right_basis_ops()[x], n, u)),
                })
                .collect()
        })
        .collect()
}

/// `S ⊗_R T` balanced so that the quasibase expression is well defined:
/// `ρ(r)γ ⊗ u = γ ⊗ uτ(r)` (right) or `λ(r)β ⊗ t = β ⊗ tσ(r)` (left).
fn balanced_pairs(ext: &Extension, side: Side) -> QuotientSpace {
    let a = ext.total();
    let r = ext.centralizer();
    let s = ext.bimodule_endos();
    let s_alg = ext.s_algebra();
    let tee = ext.tee();
    let (p, q): (Vec<Matrix>, Vec<Matrix>) = (0..r.algebra.dim())
        .map(|k| {
            let x = r.inclusion.col(k);
            let (op, t_elt) = match side {
                Side::Right => (a.right_mul_matrix(&x), tee.tau.col(k)),
                Side::Left => (a.left_mul_matrix(&x), tee.sigma.col(k)),
            };
            let in_s = s.coords(&op).expect("multiplication by R is a B-bimodule map");
            (s_alg.left_mul_matrix(&in_s), tee.algebra.right_mul_matrix(&t_elt))
        })
        .unzip();
    tensor_quotient(ext.field(), s.dim(), &p, tee.dim(), &q)
}

/// Solves for a quasibase by linear feasibility over `S ⊗_R T` and extracts
/// pairs by rank factorization. The identity is one-sidedly `A`-linear, so
/// it is imposed on `1 ⊗ a′` (right) or `a ⊗ 1` (left) only.
pub fn solve_quasibase(ext: &Extension, side: Side) -> Option<Quasibase> {
    let field = ext.field();
    let q = ext.tensor();
    let d = q.dim();
    let s = ext.bimodule_endos();
    let tee = ext.tee();
    let a = ext.total();
    let n = ext.n();
    if d == 0 {
        return Some(Quasibase { side, pairs: vec![] });
    }
    if s.dim() == 0 || tee.dim() == 0 {
        return None;
    }
    let moved = moved_tee(ext, side);
    let s_maps = s.maps();
    let unknowns = balanced_pairs(ext, side);
    let dt = tee.dim();
    let cols = (0..unknowns.dim())
        .map(|k| {
            let idx = unknowns.section_index(k);
            let (g, m) = (&s_maps[idx / dt], &moved[idx % dt]);
            let mut col = Vec::with_capacity(n * d);
            for x in 0..n {
                let mut acc = vec_ops::zeros(field, d);
                for (y, c) in g.col(x).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    vec_ops::axpy(&mut acc, c, &m[y]);
                }
                col.extend(acc);
            }
            col
        })
        .collect();
    let one = a.unit();
    let target: Vec<Scalar> = (0..n)
        .flat_map(|x| {
            let e = a.basis_vector(x);
            match side {
                Side::Right => q.project(&vec_ops::outer(one, &e)),
                Side::Left => q.project(&vec_ops::outer(&e, one)),
            }
        })
        .collect();
    let sys = Matrix::from_cols(field, n * d, cols);
    let c = solve_linear(&sys, &target)?;
    let coeff = Matrix::from_vec(field, s.dim(), dt, unknowns.section(&c));
    let (left, right) = rank_factor(&coeff);
    let pairs = (0..left.cols()).map(|j| (left.col(j), right.row(j).to_vec())).collect();
    let qb = Quasibase { side, pairs };
    debug_assert!(verify_quasibase(ext, &qb));
    Some(qb)
}

pub fn right_d2_quasibase(ext: &Extension) -> Option<Quasibase> {
    solve_quasibase(ext, Side::Right)
}

pub fn left_d2_quasibase(ext: &Extension) -> Option<Quasibase> {
    solve_quasibase(ext, Side::Left)
}

/// Checks `Σ_j a γ_j(a′) u_j = a ⊗ a′` (right) or `Σ_i t_i β_i(a) a′ = a ⊗ a′`
/// (left) on all ambient basis pairs.
pub fn verify_quasibase(ext: &Extension, qb: &Quasibase) -> bool {
    let n = ext.n();
    let q = ext.tensor();
    let s = ext.bimodule_endos();
    let tee = ext.tee();
    let a = ext.total();
    let field = ext.field();
    if qb.pairs.iter().any(|(g, u)| g.len() != s.dim() || u.len() != tee.dim()) {
        return false;
    }
    let terms: Vec<(Matrix, Vec<Scalar>)> = qb.pairs.iter().map(|(g, u)| (s.combine(g), tee.to_ambient_or_zero(u, n * n, field))).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let mut acc = vec_ops::zeros(field, n * n);
            for (g, u) in &terms {
                let moved = match qb.side {
                    Side::Right => {
                        let x = a.mul_coords(&a.basis_vector(i), &g.col(j));
                        tensor::apply_first(&a.left_mul_matrix(&x), n, u)
                    }
                    Side::Left => {
                        let x = a.mul_coords(&g.col(i), &a.basis_vector(j));
                        tensor::apply_second(&a.right_mul_matrix(&x), n, u)
                    }
                };
                vec_ops::axpy(&mut acc, &field.one(), &moved);
            }
            let target = ext.simple_tensor(&a.basis_vector(i), &a.basis_vector(j));
            q.is_zero(&vec_ops::sub(&acc, &target))
        })
    })
}

/// `A ⊗_R T → A ⊗_B A`, `m ⊗ t ↦ m t¹ ⊗ t²`, is bijective.
pub fn emtee_is_iso(ext: &Extension) -> bool {
    let n = ext.n();
    let field = ext.field();
    let tee = ext.tee();
    let r = ext.centralizer();
    let a = ext.total();
    let right_r: Vec<Matrix> = (0..r.algebra.dim()).map(|k| a.right_mul_matrix(&r.inclusion.col(k))).collect();
    let left_r_on_t: Vec<Matrix> = (0..r.algebra.dim())
        .map(|k| {
            let rk = r.algebra.basis_vector(k);
            Matrix::from_cols(
                field,
                tee.dim(),
                (0..tee.dim())
                    .map(|t| tee.r_action(ext, &rk, &vec_ops::unit(field, tee.dim(), t), r.algebra.unit()))
                    .collect(),
            )
        })
        .collect();
    let src = crate::linalg::tensor_quotient(field, n, &right_r, tee.dim(), &left_r_on_t);
    if src.dim() != ext.tensor().dim() {
        return false;
    }
    let q = ext.tensor();
    let cols: Vec<Vec<Scalar>> = (0..src.dim())
        .map(|k| {
            let amb = src.section_index(k);
            let (m, t) = (amb / tee.dim(), amb % tee.dim());
            q.project(&tensor::apply_first(&a.left_basis_ops()[m], n, &tee.reps[t]))
        })
        .collect();
    cols.is_empty() || crate::linalg::rank(&Matrix::from_cols(field, q.dim(), cols)) == q.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    fn scalars_into(a: Algebra) -> Extension {
        let f = a.field();
        let emb = Matrix::from_cols(f, a.dim(), vec![a.unit().to_vec()]);
        Extension::new(Algebra::ground(f), a, emb).unwrap()
    }

    #[test]
    fn direct_sum_certificate_has_two_terms() {
        let ext = scalars_into(Algebra::matrix_algebra(Field::Rational, 2));
        let n = regular_bimodule(&ext, true, true);
        let cert = centrally_projective(Field::Rational, &n, &n).unwrap();
        assert_eq!(cert.len(), 1);
        let nn = n.direct_sum(&n).unwrap();
        let cert = centrally_projective(Field::Rational, &nn, &n).unwrap();
        assert_eq!(cert.len(), 2);
        assert!(cert.verify(8, Field::Rational));
    }

    #[test]
    fn free_extension_has_both_quasibases() {
        let ext = scalars_into(Algebra::matrix_algebra(Field::Rational, 2));
        let r = right_d2_quasibase(&ext).unwrap();
        let l = left_d2_quasibase(&ext).unwrap();
        assert!(verify_quasibase(&ext, &r));
        assert!(verify_quasibase(&ext, &l));
        assert!(d2_by_summands(&ext, Side::Right));
        assert!(is_h_separable(&ext));
        assert!(emtee_is_iso(&ext));
    }
}
