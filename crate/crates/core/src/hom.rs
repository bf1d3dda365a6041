//! Spaces of intertwining linear maps.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::linalg::{Echelon, Field, Matrix, Scalar, Subspace};

/// A pair `(X, Y)` imposing `f ∘ X = Y ∘ f` on `f: V → W`, with `X` acting
/// on `V` and `Y` on `W`.
#[derive(Clone, Debug)]
pub struct Intertwine {
    pub on_domain: Matrix,
    pub on_codomain: Matrix,
}

impl Intertwine {
    pub fn new(on_domain: Matrix, on_codomain: Matrix) -> Self {
        Intertwine { on_domain, on_codomain }
    }
}

/// Basis of all linear maps `V → W` satisfying a family of intertwining
/// equations, canonical in row-major vectorized coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace {
    field: Field,
    dom: usize,
    cod: usize,
    space: Subspace,
}

impl HomSpace {
    pub fn intertwiners(field: Field, dom: usize, cod: usize, constraints: &[Intertwine]) -> Self {
        let mut e = Echelon::new(field, cod * dom);
        for c in constraints {
            let (x, y) = (&c.on_domain, &c.on_codomain);
            assert_eq!((x.rows(), x.cols()), (dom, dom), "domain operator shape");
            assert_eq!((y.rows(), y.cols()), (cod, cod), "codomain operator shape");
            for i in 0..cod {
                for k in 0..dom {
                    // (f X)_{ik} - (Y f)_{ik} = Σ_j f_ij X_jk - Σ_l Y_il f_lk
                    let mut row: Vec<(usize, Scalar)> = Vec::new();
                    for j in 0..dom {
                        let v = x.get(j, k);
                        if !v.is_zero() {
                            row.push((i * dom + j, v.clone()));
                        }
                    }
                    for l in 0..cod {
                        let v = y.get(i, l);
                        if !v.is_zero() {
                            row.push((l * dom + k, -v));
                        }
                    }
                    if !row.is_empty() {
                        e.insert_sparse(&row);
                    }
                }
            }
        }
        HomSpace { field, dom, cod, space: e.nullspace() }
    }

    /// The span of the given maps, as a (not necessarily intertwining) space.
    pub fn spanned_by(field: Field, dom: usize, cod: usize, maps: &[Matrix]) -> Self {
        let space = Subspace::span(field, dom * cod, maps.iter().map(Matrix::to_vec));
        HomSpace { field, dom, cod, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn domain_dim(&self) -> usize {
        self.dom
    }

    pub fn codomain_dim(&self) -> usize {
        self.cod
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn map(&self, i: usize) -> Matrix {
        Matrix::from_vec(self.field, self.cod, self.dom, self.space.vector(i).to_vec())
    }

    pub fn maps(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.map(i)).collect()
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Matrix {
        Matrix::from_vec(self.field, self.cod, self.dom, self.space.combine(coeffs))
    }

    /// Coordinates of `f`, or `None` if `f` is not in the space.
    pub fn coords(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        if (f.rows(), f.cols()) != (self.cod, self.dom) {
            return None;
        }
        self.space.coords(f.data())
    }

    pub fn contains(&self, f: &Matrix) -> bool {
        self.coords(f).is_some()
    }

    /// Composition algebra of an endomorphism space.
    pub fn algebra(&self) -> Result<Algebra> {
        assert_eq!(self.dom, self.cod, "only endomorphism spaces form algebras");
        Algebra::operator_algebra(self.field, self.dom, &self.space)
    }

    pub fn same_space(&self, o: &HomSpace) -> bool {
        self.dom == o.dom && self.cod == o.cod && self.space == o.space
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutant_of_a_diagonal_operator() {
        let q = Field::Rational;
        let d = Matrix::from_i64(q, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let h = HomSpace::intertwiners(q, 3, 3, &[Intertwine::new(d.clone(), d.clone())]);
        // block diagonal 1 + 4
        assert_eq!(h.dim(), 5);
        for f in h.maps() {
            assert_eq!(f.mul(&d), d.mul(&f));
        }
        assert!(h.contains(&Matrix::identity(q, 3)));
        assert_eq!(h.algebra().unwrap().dim(), 5);
    }
}
