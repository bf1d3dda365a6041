//! Left comodule algebras over a left bialgebroid: axioms, coinvariants and
//! the Galois map `C ⊗_D C → S′ ⊗_{R′} C`.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::bialgebroid::{first_failure, pairs, singles, AxiomCheck, Bialgebroid, Chirality};
use crate::error::{Error, Result};
use crate::linalg::{inverse, nullspace, rank, tensor_quotient, vec_ops, Matrix, QuotientSpace, Scalar, Subspace};
use crate::tensor;

/// `δ: C → S′ ⊗_{R′} C` with an algebra map `R′ → C`. The tensor product is
/// balanced by `t(r)x ⊗ c = x ⊗ ι(r)c`; ambient index of `h_i ⊗ c_j` is
/// `i * dim C + j`.
#[derive(Clone, Debug)]
pub struct Coaction {
    pub bialgebroid: Bialgebroid,
    pub carrier: Algebra,
    pub base_map: Matrix,
    pub tensor: QuotientSpace,
    pub delta: Matrix,
}

/// The Galois map on `C ⊗_D C` for a coinvariant subalgebra `D`.
#[derive(Clone, Debug)]
pub struct GaloisMap {
    pub domain: QuotientSpace,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct GaloisReport {
    pub dim_domain: usize,
    pub dim_codomain: usize,
    pub rank: usize,
    pub bijective: bool,
    pub dim_coinvariants: usize,
}

fn left_ops(h: &Algebra, m: &Matrix) -> Vec<Matrix> {
    (0..m.cols()).map(|k| h.left_mul_matrix(&m.col(k))).collect()
}

impl Coaction {
    /// `images[i]` is `δ(c_i)` as an ambient `S′ ⊗_K C` vector.
    pub fn from_ambient(bialgebroid: Bialgebroid, carrier: Algebra, base_map: Matrix, images: &[Vec<Scalar>]) -> Result<Coaction> {
        if bialgebroid.chirality != Chirality::Left {
            return Err(Error::Shape("coactions are taken over left bialgebroids".into()));
        }
        if base_map.rows() != carrier.dim() || base_map.cols() != bialgebroid.base.dim() || images.len() != carrier.dim() {
            return Err(Error::DimensionMismatch("coaction data does not match carrier and base".into()));
        }
        let f = carrier.field();
        let p = left_ops(&bialgebroid.total, &bialgebroid.target);
        let q = left_ops(&carrier, &base_map);
        let tensor = tensor_quotient(f, bialgebroid.dim(), &p, carrier.dim(), &q);
        let cols = images.iter().map(|v| tensor.project(v)).collect();
        let delta = Matrix::from_cols(f, tensor.dim(), cols);
        Ok(Coaction { bialgebroid, carrier, base_map, tensor, delta })
    }

    /// The bialgebroid coacting on itself by `Δ`, with `R′ → S′` the source.
    pub fn regular(h: &Bialgebroid) -> Result<Coaction> {
        let d = h.dim();
        let images: Vec<Vec<Scalar>> = (0..d).map(|i| h.comult_rep(i)).collect();
        Coaction::from_ambient(h.clone(), h.total.clone(), h.source.clone(), &images)
    }

    fn dim_h(&self) -> usize {
        self.bialgebroid.dim()
    }

    fn dim_c(&self) -> usize {
        self.carrier.dim()
    }

    /// Ambient representative of `δ(c_i)`.
    pub fn rep(&self, i: usize) -> Vec<Scalar> {
        self.tensor.section(&self.delta.col(i))
    }

    /// `1 ⊗ c` in quotient coordinates.
    pub fn trivial_image(&self, c: &[Scalar]) -> Vec<Scalar> {
        self.tensor.project(&vec_ops::outer(self.bialgebroid.total.unit(), c))
    }

    fn counit_applied(&self, w: &[Scalar]) -> Vec<Scalar> {
        let h = &self.bialgebroid;
        let c = &self.carrier;
        tensor::contract(self.dim_c(), self.dim_c(), w, |i, j| {
            let r = h.counit.col(i);
            c.mul_coords(&self.base_map.mul_vec(&r), &c.basis_vector(j))
        })
    }

    /// `S′ ⊗_{R′} S′ ⊗_{R′} C` built on the quotient of the first two factors.
    fn triple_tensor(&self) -> QuotientSpace {
        let h = &self.bialgebroid;
        let d = self.dim_h();
        let f = self.carrier.field();
        let p2: Vec<Matrix> = left_ops(&h.total, &h.target)
            .iter()
            .map(|m| h.tensor.induced_map(|c| tensor::apply_second(m, d, &vec_ops::unit(f, d * d, c))))
            .collect();
        tensor_quotient(f, h.tensor.dim(), &p2, self.dim_c(), &left_ops(&self.carrier, &self.base_map))
    }

    fn coassociativity(&self) -> Option<String> {
        let h = &self.bialgebroid;
        let (d, m) = (self.dim_h(), self.dim_c());
        let q2 = &h.tensor;
        let q3 = self.triple_tensor();
        let f = self.carrier.field();
        let reps: Vec<Vec<Scalar>> = (0..m).map(|i| self.rep(i)).collect();
        first_failure(singles(m), |c| {
            let w = &reps[c[0]];
            let mut lhs = vec_ops::zeros(f, q2.dim() * m);
            let mut rhs = vec_ops::zeros(f, q2.dim() * m);
            for (k, j, x) in tensor::terms(m, w) {
                for (a, y) in h.comult.col(k).iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                    lhs[a * m + j].add_mul(x, y);
                }
                for (l, i, y) in tensor::terms(m, &reps[j]) {
                    let xy = x * y;
                    for (a, z) in q2.project_unit(k * d + l).iter().enumerate().filter(|(_, z)| !z.is_zero()) {
                        rhs[a * m + i].add_mul(&xy, z);
                    }
                }
            }
            q3.is_zero(&vec_ops::sub(&lhs, &rhs))
        })
    }
}

impl Coaction {
    /// Comodule-algebra axioms on basis elements and pairs; never errors.
    pub fn verify(&self) -> Vec<AxiomCheck> {
        let h = &self.bialgebroid;
        let c = &self.carrier;
        let (d, m, k) = (self.dim_h(), self.dim_c(), h.base.dim());
        let reps: Vec<Vec<Scalar>> = (0..m).map(|i| self.rep(i)).collect();
        let mut out = vec![AxiomCheck::new(
            "base map is a unital homomorphism",
            (!h.base.is_homomorphism(c, &self.base_map)).then(|| "R′ → C is not multiplicative and unital".into()),
        )];
        let one_image = self.delta.mul_vec(c.unit());
        out.push(AxiomCheck::new(
            "coaction is unital",
            (one_image != self.trivial_image(c.unit())).then(|| "δ(1) != 1⊗1".into()),
        ));
        out.push(AxiomCheck::new(
            "counit law",
            first_failure(singles(m), |i| self.counit_applied(&reps[i[0]]) == c.basis_vector(i[0])),
        ));
        out.push(AxiomCheck::new("coassociativity", self.coassociativity()));
        out.push(AxiomCheck::new(
            "coaction is a base module map",
            first_failure(pairs(k, m), |p| {
                let r = h.base.basis_vector(p[0]);
                let lhs = self.delta.mul_vec(&c.mul_coords(&self.base_map.mul_vec(&r), &c.basis_vector(p[1])));
                let moved = tensor::apply_first(&h.total.left_mul_matrix(&h.source_of(&r)), m, &reps[p[1]]);
                lhs == self.tensor.project(&moved)
            }),
        ));
        let homogeneous = first_failure(pairs(k, m), |p| {
            let r = h.base.basis_vector(p[0]);
            let a = tensor::apply_first(&h.total.right_mul_matrix(&h.target_of(&r)), m, &reps[p[1]]);
            let b = tensor::apply_second(&c.right_mul_matrix(&self.base_map.mul_vec(&r)), d, &reps[p[1]]);
            self.tensor.is_zero(&vec_ops::sub(&a, &b))
        });
        let multiplicative = if homogeneous.is_some() {
            Some("not checked: homogeneity fails".into())
        } else {
            first_failure(pairs(m, m), |p| {
                let lhs = self.delta.mul_vec(c.basis_product(p[0], p[1]));
                let rhs = self.product(&reps[p[0]], &reps[p[1]]);
                lhs == self.tensor.project(&rhs)
            })
        };
        out.push(AxiomCheck::new("coaction image is homogeneous", homogeneous));
        out.push(AxiomCheck::new("coaction is multiplicative", multiplicative));
        out
    }

    /// `(x ⊗ c)(y ⊗ c′) = xy ⊗ cc′` on ambient vectors.
    fn product(&self, w: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let h = &self.bialgebroid.total;
        let c = &self.carrier;
        let m = self.dim_c();
        let mut out = vec_ops::zeros(c.field(), self.dim_h() * m);
        let zt: Vec<(usize, usize, &Scalar)> = tensor::terms(m, z).collect();
        for (i, j, x) in tensor::terms(m, w) {
            for &(k, l, y) in &zt {
                let xy = x * y;
                let (p, q) = (h.basis_product(i, k), c.basis_product(j, l));
                for (a, pa) in p.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let s = &xy * pa;
                    for (b, qb) in q.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        out[a * m + b].add_mul(&s, qb);
                    }
                }
            }
        }
        out
    }

    /// `{c : δ(c) = 1 ⊗ c}`.
    pub fn coinvariants(&self) -> Subspace {
        let m = self.dim_c();
        let f = self.carrier.field();
        let cols = (0..m)
            .map(|i| vec_ops::sub(&self.delta.col(i), &self.trivial_image(&self.carrier.basis_vector(i))))
            .collect();
        nullspace(&Matrix::from_cols(f, self.tensor.dim(), cols))
    }

    /// `β(c ⊗ c′) = c₍₋₁₎ ⊗ c₍₀₎c′` on `C ⊗_D C`.
    pub fn galois_map(&self, coinvariants: &Subspace) -> Result<GaloisMap> {
        let c = &self.carrier;
        let m = self.dim_c();
        let d = self.dim_h();
        if coinvariants.ambient() != m {
            return Err(Error::DimensionMismatch("coinvariant subspace lives in another algebra".into()));
        }
        let vs = coinvariants.vectors();
        let rights: Vec<Matrix> = vs.iter().map(|v| c.right_mul_matrix(v)).collect();
        let lefts: Vec<Matrix> = vs.iter().map(|v| c.left_mul_matrix(v)).collect();
        let domain = tensor_quotient(c.field(), m, &rights, m, &lefts);
        let reps: Vec<Vec<Scalar>> = (0..m).map(|i| self.rep(i)).collect();
        let cols = (0..domain.dim())
            .map(|q| {
                let idx = domain.section_index(q);
                let (i, j) = (idx / m, idx % m);
                self.tensor.project(&tensor::apply_second(&c.right_mul_matrix(&c.basis_vector(j)), d, &reps[i]))
            })
            .collect();
        let matrix = Matrix::from_cols(c.field(), self.tensor.dim(), cols);
        Ok(GaloisMap { domain, matrix })
    }
}

impl GaloisMap {
    pub fn is_bijective(&self) -> bool {
        self.matrix.is_square() && rank(&self.matrix) == self.matrix.rows()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.matrix.is_square() {
            inverse(&self.matrix)
        } else {
            None
        }
    }

    pub fn report(&self, coinvariants: &Subspace) -> GaloisReport {
        let r = rank(&self.matrix);
        GaloisReport {
            dim_domain: self.matrix.cols(),
            dim_codomain: self.matrix.rows(),
            rank: r,
            bijective: self.matrix.is_square() && r == self.matrix.rows(),
            dim_coinvariants: coinvariants.dim(),
        }
    }
}
