//! Balanced, split, generator and Frobenius detection for an extension.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::hom::{HomSpace, Intertwine};
use crate::linalg::{rank, solve_linear, vec_ops, Field, Matrix, Scalar, Subspace};

/// Grid evaluations allowed before the deterministic Frobenius fallback gives up.
pub const FROBENIUS_GRID_LIMIT: u64 = 250_000;

const RANDOM_TRIALS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A Frobenius homomorphism `φ: A → B` with dual bases `Σ x_i ⊗ y_i`.
#[derive(Clone, Debug)]
pub struct FrobeniusSystem {
    /// `dim B × dim A`.
    pub phi: Matrix,
    /// Ambient `A ⊗_K A` coordinates of `Σ x_i ⊗ y_i`.
    pub dual: Vec<Scalar>,
}

/// `Hom_{B-B}(A, B)`.
pub fn bimodule_maps_to_base(ext: &Extension) -> HomSpace {
    let b = ext.base();
    let mut c = Vec::new();
    for i in 0..b.dim() {
        c.push(Intertwine::new(ext.left_b_ops()[i].clone(), b.left_basis_ops()[i].clone()));
        c.push(Intertwine::new(ext.right_b_ops()[i].clone(), b.right_basis_ops()[i].clone()));
    }
    HomSpace::intertwiners(ext.field(), ext.n(), b.dim(), &c)
}

/// `Hom(A_B, B_B)`.
pub fn right_dual(ext: &Extension) -> HomSpace {
    let b = ext.base();
    let c: Vec<Intertwine> = (0..b.dim())
        .map(|i| Intertwine::new(ext.right_b_ops()[i].clone(), b.right_basis_ops()[i].clone()))
        .collect();
    HomSpace::intertwiners(ext.field(), ext.n(), b.dim(), &c)
}

/// Bicommutant test: `A_B` is balanced when the endomorphisms of `A` over
/// `End(A_B)` are exactly the right multiplications by `B`; the left side
/// uses `End(_B A)` and left multiplications.
pub fn is_balanced(ext: &Extension, side: Side) -> bool {
    let (endos, b_ops) = match side {
        Side::Right => (ext.right_endos(), ext.right_b_ops()),
        Side::Left => (ext.left_endos(), ext.left_b_ops()),
    };
    let c: Vec<Intertwine> = endos.maps().into_iter().map(|f| Intertwine::new(f.clone(), f)).collect();
    let bicommutant = HomSpace::intertwiners(ext.field(), ext.n(), ext.n(), &c);
    let b_span = Subspace::span(ext.field(), ext.n() * ext.n(), b_ops.iter().map(Matrix::to_vec));
    bicommutant.dim() == b_span.dim()
}

/// A `B`-`B`-bimodule projection `E: A → B` with `E ∘ emb = id_B`.
pub fn split_projection(ext: &Extension) -> Option<Matrix> {
    if !ext.is_proper() {
        return None;
    }
    let h = bimodule_maps_to_base(ext);
    let m = ext.base().dim();
    let cols: Vec<Vec<Scalar>> = h.maps().iter().map(|f| f.mul(ext.embedding()).to_vec()).collect();
    if cols.is_empty() {
        return None;
    }
    let sys = Matrix::from_cols(ext.field(), m * m, cols);
    let c = solve_linear(&sys, &Matrix::identity(ext.field(), m).to_vec())?;
    let e = h.combine(&c);
    debug_assert_eq!(e.mul(ext.embedding()), Matrix::identity(ext.field(), m));
    Some(e)
}

/// `A_B` is a generator iff the trace ideal `Σ h(A)`, `h ∈ Hom(A_B, B_B)`, is `B`.
pub fn is_right_generator(ext: &Extension) -> bool {
    let h = right_dual(ext);
    let m = ext.base().dim();
    let images = Subspace::span(ext.field(), m, h.maps().iter().flat_map(|f| (0..f.cols()).map(|j| f.col(j)).collect::<Vec<_>>()));
    images.dim() == m
}

/// Searches for a Frobenius homomorphism. `Ok(None)` is a certified
/// negative; `Err(SearchLimit)` means the deterministic grid was too large.
pub fn frobenius_system(ext: &Extension, seed: u64) -> Result<Option<FrobeniusSystem>> {
    let n = ext.n();
    let dual_space = right_dual(ext);
    if dual_space.dim() != n {
        return Ok(None);
    }
    let h = bimodule_maps_to_base(ext);
    let k = h.dim();
    if k == 0 {
        return Ok(None);
    }
    let a = ext.total();
    // columns: H-coordinates of φ_k ∘ L_{e_a}
    let blocks: Vec<Matrix> = h
        .maps()
        .iter()
        .map(|phi| {
            let cols = a
                .left_basis_ops()
                .iter()
                .map(|l| dual_space.coords(&phi.mul(l)).expect("φ(a −) is right B-linear"))
                .collect();
            Matrix::from_cols(ext.field(), n, cols)
        })
        .collect();
    let field = ext.field();
    let combo = |c: &[Scalar]| -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for (x, b) in c.iter().zip(&blocks) {
            if !x.is_zero() {
                m = m.add(&b.scale(x));
            }
        }
        m
    };
    let found = |c: &[Scalar]| rank(&combo(c)) == n;

    let mut hit: Option<Vec<Scalar>> = None;
    for i in 0..k {
        let c = vec_ops::unit(field, k, i);
        if found(&c) {
            hit = Some(c);
            break;
        }
    }
    if hit.is_none() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_TRIALS {
            let c: Vec<Scalar> = (0..k).map(|_| field.from_i64(rng.gen_range(-7..=7))).collect();
            if found(&c) {
                hit = Some(c);
                break;
            }
        }
    }
    if hit.is_none() {
        hit = grid_search(field, n, k, &found)?;
    }
    let Some(c) = hit else { return Ok(None) };
    let phi = h.combine(&c);
    // φ gives A ≅ Hom(A_B, B_B); dual bases for it exist iff A_B is f.g. projective
    Ok(dual_bases(ext, &phi).map(|dual| FrobeniusSystem { phi, dual }))
}

/// Evaluates on `{0..n}^k`; a nonzero determinant polynomial of degree
/// `≤ n` cannot vanish on the whole grid.
fn grid_search(field: Field, n: usize, k: usize, found: &dyn Fn(&[Scalar]) -> bool) -> Result<Option<Vec<Scalar>>> {
    if let Field::Prime(p) = field {
        if p <= n as u64 {
            return Err(Error::SearchLimit(format!("grid needs {} distinct values but p = {p}", n + 1)));
        }
    }
    let base = (n + 1) as u64;
    let total = base.checked_pow(k as u32).filter(|&t| t <= FROBENIUS_GRID_LIMIT).ok_or_else(|| {
        Error::SearchLimit(format!("Frobenius grid {}^{k} exceeds {FROBENIUS_GRID_LIMIT}", n + 1))
    })?;
    let mut digits = vec![0u64; k];
    for _ in 0..total {
        let c: Vec<Scalar> = digits.iter().map(|&d| field.from_i64(d as i64)).collect();
        if found(&c) {
            return Ok(Some(c));
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < base {
                break;
            }
            *d = 0;
        }
    }
    Ok(None)
}

/// Solves `Σ x_i φ(y_i a) = a` for `Σ x_i ⊗ y_i` and checks the mirror
/// identity `Σ φ(a x_i) y_i = a`.
pub fn dual_bases(ext: &Extension, phi: &Matrix) -> Option<Vec<Scalar>> {
    let a = ext.total();
    let n = ext.n();
    let field = ext.field();
    let to_a = |x: &[Scalar]| ext.embedding().mul_vec(&phi.mul_vec(x));
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut col = Vec::with_capacity(n * n);
            for t in 0..n {
                let v = a.mul_coords(&a.basis_vector(i), &to_a(a.basis_product(j, t)));
                col.extend(v);
            }
            cols.push(col);
        }
    }
    let sys = Matrix::from_cols(field, n * n, cols);
    let w = solve_linear(&sys, &Matrix::identity(field, n).to_vec())?;
    let ok = (0..n).all(|t| {
        let mut acc = a.zero_vector();
        for (i, j, c) in crate::tensor::terms(n, &w) {
            let v = a.mul_coords(&to_a(a.basis_product(t, i)), &a.basis_vector(j));
            vec_ops::axpy(&mut acc, c, &v);
        }
        acc == a.basis_vector(t)
    });
    ok.then_some(w)
}

/// `f ↦ Σ f(x_i) ⊗ y_i` is a bijection `End(A_B) → A ⊗_B A`, and
/// `g ↦ Σ x_i ⊗ g(y_i)` is a bijection `End(_B A) → A ⊗_B A`.
pub fn frobenius_endo_iso(ext: &Extension, sys: &FrobeniusSystem) -> bool {
    let n = ext.n();
    let q = ext.tensor();
    let bijective = |endos: &HomSpace, apply: &dyn Fn(&Matrix) -> Vec<Scalar>| {
        if endos.dim() != q.dim() {
            return false;
        }
        let cols: Vec<Vec<Scalar>> = endos.maps().iter().map(|f| q.project(&apply(f))).collect();
        cols.is_empty() || rank(&Matrix::from_cols(ext.field(), q.dim(), cols)) == q.dim()
    };
    bijective(ext.right_endos(), &|f| crate::tensor::apply_first(f, n, &sys.dual))
        && bijective(ext.left_endos(), &|g| crate::tensor::apply_second(g, n, &sys.dual))
}

/// `a ⊗ c ↦ (r ↦ arc)` from `A ⊗_B A` to `Hom(R_K, A_K)`; the codomain
/// index of `r_k ↦ x` is `k * dim A + i`.
pub fn sandwich_map(ext: &Extension) -> Matrix {
    let a = ext.total();
    let n = ext.n();
    let q = ext.tensor();
    let r = ext.centralizer();
    let k = r.algebra.dim();
    let cols = (0..q.dim())
        .map(|c| {
            let idx = q.section_index(c);
            let (x, y) = (a.basis_vector(idx / n), a.basis_vector(idx % n));
            (0..k).flat_map(|j| a.mul_coords(&a.mul_coords(&x, &r.inclusion.col(j)), &y)).collect()
        })
        .collect();
    Matrix::from_cols(ext.field(), k * n, cols)
}

/// Whether [`sandwich_map`] is bijective.
pub fn sandwich_map_is_bijective(ext: &Extension) -> bool {
    let m = sandwich_map(ext);
    m.is_square() && rank(&m) == m.rows()
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

    fn identity(a: Algebra) -> Extension {
        let emb = Matrix::identity(a.field(), a.dim());
        Extension::new(a.clone(), a, emb).unwrap()
    }

    #[test]
    fn identity_extension_is_everything() {
        let ext = identity(Algebra::matrix_algebra(Field::Rational, 2));
        assert!(is_balanced(&ext, Side::Left));
        assert!(is_balanced(&ext, Side::Right));
        assert_eq!(split_projection(&ext), Some(Matrix::identity(Field::Rational, 4)));
        assert!(is_right_generator(&ext));
        let sys = frobenius_system(&ext, 1).unwrap().unwrap();
        assert!(frobenius_endo_iso(&ext, &sys));
    }

    #[test]
    fn matrix_algebra_over_scalars() {
        let ext = scalars_into(Algebra::matrix_algebra(Field::Rational, 2));
        assert!(is_balanced(&ext, Side::Right));
        assert!(is_balanced(&ext, Side::Left));
        let sys = frobenius_system(&ext, 7).unwrap().unwrap();
        assert!(dual_bases(&ext, &sys.phi).is_some());
        assert!(frobenius_endo_iso(&ext, &sys));
        assert!(split_projection(&ext).is_some());
    }
}
