//! Finite-dimensional unital associative algebras given by structure
//! constants.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{rank, vec_ops, Field, Matrix, Scalar, Subspace};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Opaque identity of a constructed algebra. Elements remember which
/// algebra they live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraId(u64);

/// `e_i e_j = Σ_k c[i][j][k] e_k`, validated at construction.
#[derive(Clone, Debug)]
pub struct Algebra {
    id: AlgebraId,
    field: Field,
    dim: usize,
    structure: Vec<Scalar>,
    unit: Vec<Scalar>,
    left_basis: OnceLock<Vec<Matrix>>,
    right_basis: OnceLock<Vec<Matrix>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: AlgebraId,
    coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn algebra_id(&self) -> AlgebraId {
        self.algebra
    }
}

impl Algebra {
    /// Validates associativity and the unit on all basis elements.
    pub fn new(field: Field, dim: usize, structure: Vec<Scalar>, unit: Vec<Scalar>) -> Result<Self> {
        if structure.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "structure has {} constants, expected {}",
                structure.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(Error::Shape(format!("unit has length {}, expected {dim}", unit.len())));
        }
        if structure.iter().chain(&unit).any(|s| s.field() != field) {
            return Err(Error::Shape("scalars from a different field".into()));
        }
        let a = Self::from_parts(field, dim, structure, unit);
        a.check_unit()?;
        a.check_associative()?;
        Ok(a)
    }

    fn from_parts(field: Field, dim: usize, structure: Vec<Scalar>, unit: Vec<Scalar>) -> Self {
        Algebra {
            id: AlgebraId(NEXT_ID.fetch_add(1, Ordering::Relaxed)),
            field,
            dim,
            structure,
            unit,
            left_basis: OnceLock::new(),
            right_basis: OnceLock::new(),
        }
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            if self.mul_coords(&self.unit, &e) != e || self.mul_coords(&e, &self.unit) != e {
                return Err(Error::NotUnital(i));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let mut lhs = vec_ops::zeros(self.field, n);
                    for (a, x) in ij.iter().enumerate() {
                        if !x.is_zero() {
                            vec_ops::axpy(&mut lhs, x, self.basis_product(a, k));
                        }
                    }
                    let jk = self.basis_product(j, k);
                    let mut rhs = vec_ops::zeros(self.field, n);
                    for (b, x) in jk.iter().enumerate() {
                        if !x.is_zero() {
                            vec_ops::axpy(&mut rhs, x, self.basis_product(i, b));
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure(&self) -> &[Scalar] {
        &self.structure
    }

    /// Same structure constants and unit (identity ignored).
    pub fn same_data(&self, o: &Algebra) -> bool {
        self.field == o.field && self.dim == o.dim && self.structure == o.structure && self.unit == o.unit
    }

    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim;
        &self.structure[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vec_ops::unit(self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec_ops::zeros(self.field, self.dim)
    }

    pub fn mul_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                vec_ops::axpy(&mut out, &ab, self.basis_product(i, j));
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_cols(self.field, self.dim, (0..self.dim).map(|j| self.mul_coords(x, &self.basis_vector(j))).collect())
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_cols(self.field, self.dim, (0..self.dim).map(|j| self.mul_coords(&self.basis_vector(j), x)).collect())
    }

    /// Left multiplication matrices of the basis elements.
    pub fn left_basis_ops(&self) -> &[Matrix] {
        self.left_basis
            .get_or_init(|| (0..self.dim).map(|i| self.left_mul_matrix(&self.basis_vector(i))).collect())
    }

    pub fn right_basis_ops(&self) -> &[Matrix] {
        self.right_basis
            .get_or_init(|| (0..self.dim).map(|i| self.right_mul_matrix(&self.basis_vector(i))).collect())
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<AlgebraElement> {
        if coords.len() != self.dim {
            return Err(Error::Shape(format!("element has {} coordinates, algebra dim {}", coords.len(), self.dim)));
        }
        Ok(AlgebraElement { algebra: self.id, coords })
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement { algebra: self.id, coords: self.unit.clone() }
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.algebra != self.id || y.algebra != self.id {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement { algebra: self.id, coords: self.mul_coords(&x.coords, &y.coords) })
    }

    /// An element is a unit iff its left regular representation is invertible.
    pub fn is_invertible(&self, x: &AlgebraElement) -> Result<bool> {
        if x.algebra != self.id {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.is_invertible_coords(&x.coords))
    }

    pub fn is_invertible_coords(&self, x: &[Scalar]) -> bool {
        rank(&self.left_mul_matrix(x)) == self.dim
    }

    /// Structure constants transposed in the first two indices.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut s = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                s.extend_from_slice(self.basis_product(j, i));
            }
        }
        Self::from_parts(self.field, n, s, self.unit.clone())
    }

    /// The one-dimensional algebra `K`.
    pub fn ground(field: Field) -> Algebra {
        Self::from_parts(field, 1, vec![field.one()], vec![field.one()])
    }

    /// `M_n(K)` on matrix units, `e_{ij}` at index `i * n + j`.
    pub fn matrix_algebra(field: Field, n: usize) -> Algebra {
        let d = n * n;
        let mut s = vec![field.zero(); d * d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    // e_ij e_jl = e_il
                    let a = i * n + j;
                    let b = j * n + l;
                    s[(a * d + b) * d + i * n + l] = field.one();
                }
            }
        }
        let unit = (0..d).map(|k| if k / n == k % n { field.one() } else { field.zero() }).collect();
        Self::from_parts(field, d, s, unit)
    }

    /// Group algebra from a multiplication table `table[g][h] = gh`.
    pub fn group_algebra(field: Field, table: &[Vec<usize>]) -> Result<Algebra> {
        let identity = check_group(table)?;
        let n = table.len();
        let mut s = vec![field.zero(); n * n * n];
        for g in 0..n {
            for h in 0..n {
                s[(g * n + h) * n + table[g][h]] = field.one();
            }
        }
        Algebra::new(field, n, s, vec_ops::unit(field, n, identity))
    }

    /// Direct product `A × B` with basis `(e_i, 0), (0, f_j)`.
    pub fn product_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra> {
        if a.field != b.field {
            return Err(Error::Shape("product of algebras over different fields".into()));
        }
        let field = a.field;
        let d = a.dim + b.dim;
        let mut s = vec![field.zero(); d * d * d];
        for i in 0..a.dim {
            for j in 0..a.dim {
                for (k, x) in a.basis_product(i, j).iter().enumerate() {
                    s[(i * d + j) * d + k] = x.clone();
                }
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                for (k, x) in b.basis_product(i, j).iter().enumerate() {
                    s[((a.dim + i) * d + a.dim + j) * d + a.dim + k] = x.clone();
                }
            }
        }
        let mut unit = a.unit.clone();
        unit.extend_from_slice(&b.unit);
        Algebra::new(field, d, s, unit)
    }

    /// The subalgebra spanned by `space`, on its echelon basis; errors when
    /// `space` is not closed under multiplication or misses the unit.
    pub fn subalgebra(&self, space: &Subspace) -> Result<Algebra> {
        let basis = space.vectors();
        let k = basis.len();
        let mut s = Vec::with_capacity(k * k * k);
        for x in &basis {
            for y in &basis {
                let p = self.mul_coords(x, y);
                let c = space
                    .coords(&p)
                    .ok_or_else(|| Error::Shape("subspace not closed under multiplication".into()))?;
                s.extend(c);
            }
        }
        let unit = space
            .coords(&self.unit)
            .ok_or_else(|| Error::Shape("subspace does not contain the unit".into()))?;
        Algebra::new(self.field, k, s, unit)
    }

    /// Algebra of linear maps on `field^n` spanned by `space` (row-major
    /// vectorized `n × n` matrices), under composition.
    pub fn operator_algebra(field: Field, n: usize, space: &Subspace) -> Result<Algebra> {
        assert_eq!(space.ambient(), n * n);
        let maps: Vec<Matrix> = space
            .vectors()
            .into_iter()
            .map(|v| Matrix::from_vec(field, n, n, v))
            .collect();
        let k = maps.len();
        let mut s = Vec::with_capacity(k * k * k);
        for f in &maps {
            for g in &maps {
                let c = space
                    .coords(&f.mul(g).to_vec())
                    .ok_or_else(|| Error::Shape("operator space not closed under composition".into()))?;
                s.extend(c);
            }
        }
        let unit = space
            .coords(&Matrix::identity(field, n).to_vec())
            .ok_or_else(|| Error::Shape("operator space does not contain the identity".into()))?;
        Algebra::new(field, k, s, unit)
    }

    /// Whether the linear map `m: self → o` is a unital algebra homomorphism.
    pub fn is_homomorphism(&self, o: &Algebra, m: &Matrix) -> bool {
        if m.mul_vec(&self.unit) != o.unit {
            return false;
        }
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let lhs = m.mul_vec(self.basis_product(i, j));
                let rhs = o.mul_coords(&m.col(i), &m.col(j));
                lhs == rhs
            })
        })
    }
}

fn check_group(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(Error::NotAGroup("table is not a closed n×n table".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("associativity fails on ({a},{b},{c})")));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for g in 0..n {
        if !(0..n).any(|h| table[g][h] == identity && table[h][g] == identity) {
            return Err(Error::NotAGroup(format!("element {g} has no inverse")));
        }
    }
    Ok(identity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn s3_table() -> Vec<Vec<usize>> {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|&x| x == p).unwrap();
        perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect()
    }

    #[test]
    fn ground_field_is_valid() {
        let k = Algebra::new(q(), 1, vec![q().one()], vec![q().one()]).unwrap();
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn matrix_units() {
        let m2 = Algebra::matrix_algebra(q(), 2);
        let m2 = Algebra::new(q(), 4, m2.structure().to_vec(), m2.unit().to_vec()).unwrap();
        assert_eq!(m2.unit(), &[q().one(), q().zero(), q().zero(), q().one()]);
        // e12 e21 = e11
        assert_eq!(m2.mul_coords(&m2.basis_vector(1), &m2.basis_vector(2)), m2.basis_vector(0));
        assert_eq!(Algebra::matrix_algebra(q(), 3).dim(), 9);
    }

    #[test]
    fn perturbation_breaks_associativity() {
        let m2 = Algebra::matrix_algebra(q(), 2);
        let mut s = m2.structure().to_vec();
        // e12 e21 = e11 + e12
        s[(4 + 2) * 4 + 1] = q().one();
        let err = Algebra::new(q(), 4, s, m2.unit().to_vec()).unwrap_err();
        assert!(matches!(err, Error::NotAssociative(..)));
    }

    #[test]
    fn bad_unit_detected() {
        let m2 = Algebra::matrix_algebra(q(), 2);
        let err = Algebra::new(q(), 4, m2.structure().to_vec(), m2.basis_vector(0)).unwrap_err();
        assert!(matches!(err, Error::NotUnital(_)));
    }

    #[test]
    fn opposite_is_involution() {
        let m2 = Algebra::matrix_algebra(q(), 2);
        assert!(m2.opposite().opposite().same_data(&m2));
        let c = Algebra::product_algebra(&Algebra::ground(q()), &Algebra::ground(q())).unwrap();
        assert!(c.opposite().same_data(&c));
    }

    #[test]
    fn transpose_is_anti_isomorphism() {
        let n = 2;
        let m2 = Algebra::matrix_algebra(q(), n);
        let mut t = Matrix::zeros(q(), 4, 4);
        for i in 0..n {
            for j in 0..n {
                t.set(j * n + i, i * n + j, q().one());
            }
        }
        assert!(m2.is_homomorphism(&m2.opposite(), &t));
        assert!(!m2.is_homomorphism(&m2, &t));
    }

    #[test]
    fn group_and_product_algebras() {
        let s3 = Algebra::group_algebra(q(), &s3_table()).unwrap();
        assert_eq!(s3.dim(), 6);
        for g in 0..6 {
            assert!(s3.is_invertible_coords(&s3.basis_vector(g)));
        }
        let kk = Algebra::product_algebra(&Algebra::ground(q()), &Algebra::ground(q())).unwrap();
        assert_eq!(kk.dim(), 2);
        assert_eq!(kk.unit(), &[q().one(), q().one()]);
        let bad = vec![vec![0, 1], vec![0, 1]];
        assert!(matches!(Algebra::group_algebra(q(), &bad), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn cross_algebra_multiplication_is_an_error() {
        let a = Algebra::matrix_algebra(q(), 2);
        let b = Algebra::matrix_algebra(q(), 2);
        let x = a.one();
        let y = b.one();
        assert!(matches!(a.mul(&x, &y), Err(Error::AlgebraMismatch)));
        assert_eq!(a.mul(&x, &a.one()).unwrap(), a.one());
    }
}
