//! An algebra extension `B → A` and its derived spaces: the centralizer `R`,
//! the endomorphism algebras `S = End(_B A_B)`, `𝓔 = End(_B A)`,
//! `E = End(A_B)`, the tensor square `A ⊗_B A` and its `B`-central part `T`.

use std::sync::OnceLock;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::hom::{HomSpace, Intertwine};
use crate::linalg::{rank, tensor_quotient, vec_ops, Echelon, Field, Matrix, QuotientSpace, Scalar, Subspace};
use crate::tensor;

#[derive(Clone, Debug)]
pub struct Extension {
    b: Algebra,
    a: Algebra,
    emb: Matrix,
    proper: bool,
    left_ops: Vec<Matrix>,
    right_ops: Vec<Matrix>,
    cache: Cache,
}

#[derive(Clone, Debug, Default)]
struct Cache {
    centralizer: OnceLock<Centralizer>,
    bimodule_endos: OnceLock<HomSpace>,
    left_endos: OnceLock<HomSpace>,
    right_endos: OnceLock<HomSpace>,
    s: OnceLock<Algebra>,
    left_e: OnceLock<Algebra>,
    right_e: OnceLock<Algebra>,
    tensor: OnceLock<QuotientSpace>,
    tee: OnceLock<Tee>,
}

/// `R = C_A(B)` with its inclusion into `A` (columns are `R`-basis vectors).
#[derive(Clone, Debug)]
pub struct Centralizer {
    pub space: Subspace,
    pub algebra: Algebra,
    pub inclusion: Matrix,
}

impl Extension {
    /// `emb` is `dim A × dim B`, column `i` the image of `b_i`.
    pub fn new(b: Algebra, a: Algebra, emb: Matrix) -> Result<Self> {
        if b.field() != a.field() || emb.field() != a.field() {
            return Err(Error::Shape("algebras and embedding over different fields".into()));
        }
        if (emb.rows(), emb.cols()) != (a.dim(), b.dim()) {
            return Err(Error::Shape(format!(
                "embedding is {}×{}, expected {}×{}",
                emb.rows(),
                emb.cols(),
                a.dim(),
                b.dim()
            )));
        }
        if emb.mul_vec(b.unit()) != a.unit() {
            return Err(Error::EmbeddingNotUnital);
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let lhs = emb.mul_vec(b.basis_product(i, j));
                if lhs != a.mul_coords(&emb.col(i), &emb.col(j)) {
                    return Err(Error::NotHomomorphism(i, j));
                }
            }
        }
        let proper = rank(&emb) == b.dim();
        let left_ops = (0..b.dim()).map(|i| a.left_mul_matrix(&emb.col(i))).collect();
        let right_ops = (0..b.dim()).map(|i| a.right_mul_matrix(&emb.col(i))).collect();
        Ok(Extension { b, a, emb, proper, left_ops, right_ops, cache: Cache::default() })
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn base(&self) -> &Algebra {
        &self.b
    }

    pub fn total(&self) -> &Algebra {
        &self.a
    }

    pub fn embedding(&self) -> &Matrix {
        &self.emb
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    /// `dim A`.
    pub fn n(&self) -> usize {
        self.a.dim()
    }

    /// Left multiplications by the images of the `B`-basis.
    pub fn left_b_ops(&self) -> &[Matrix] {
        &self.left_ops
    }

    pub fn right_b_ops(&self) -> &[Matrix] {
        &self.right_ops
    }

    /// `A^op ← B^op` with the same embedding matrix.
    pub fn opposite(&self) -> Extension {
        Extension::new(self.b.opposite(), self.a.opposite(), self.emb.clone())
            .expect("opposite of a valid extension is valid")
    }

    pub fn centralizer(&self) -> &Centralizer {
        self.cache.centralizer.get_or_init(|| {
            let n = self.n();
            let mut e = Echelon::new(self.field(), n);
            for (l, r) in self.left_ops.iter().zip(&self.right_ops) {
                let c = l.sub(r);
                for i in 0..n {
                    e.insert(c.row(i).to_vec());
                }
            }
            let space = e.nullspace();
            let algebra = self.a.subalgebra(&space).expect("centralizer is a unital subalgebra");
            let inclusion = Matrix::from_cols(self.field(), n, space.vectors());
            Centralizer { space, algebra, inclusion }
        })
    }

    /// `S = End(_B A_B)` as a space of maps.
    pub fn bimodule_endos(&self) -> &HomSpace {
        self.cache.bimodule_endos.get_or_init(|| {
            let c: Vec<Intertwine> = self
                .left_ops
                .iter()
                .chain(&self.right_ops)
                .map(|m| Intertwine::new(m.clone(), m.clone()))
                .collect();
            HomSpace::intertwiners(self.field(), self.n(), self.n(), &c)
        })
    }

    /// `𝓔 = End(_B A)`.
    pub fn left_endos(&self) -> &HomSpace {
        self.cache.left_endos.get_or_init(|| {
            let c: Vec<Intertwine> = self.left_ops.iter().map(|m| Intertwine::new(m.clone(), m.clone())).collect();
            HomSpace::intertwiners(self.field(), self.n(), self.n(), &c)
        })
    }

    /// `E = End(A_B)`.
    pub fn right_endos(&self) -> &HomSpace {
        self.cache.right_endos.get_or_init(|| {
            let c: Vec<Intertwine> = self.right_ops.iter().map(|m| Intertwine::new(m.clone(), m.clone())).collect();
            HomSpace::intertwiners(self.field(), self.n(), self.n(), &c)
        })
    }

    pub fn s_algebra(&self) -> &Algebra {
        self.cache.s.get_or_init(|| self.bimodule_endos().algebra().expect("S is an algebra"))
    }

    pub fn left_endo_algebra(&self) -> &Algebra {
        self.cache.left_e.get_or_init(|| self.left_endos().algebra().expect("End(_B A) is an algebra"))
    }

    pub fn right_endo_algebra(&self) -> &Algebra {
        self.cache.right_e.get_or_init(|| self.right_endos().algebra().expect("End(A_B) is an algebra"))
    }

    /// `A ⊗_B A` as a quotient of `A ⊗_K A`.
    pub fn tensor(&self) -> &QuotientSpace {
        self.cache
            .tensor
            .get_or_init(|| tensor_quotient(self.field(), self.n(), &self.right_ops, self.n(), &self.left_ops))
    }

    pub fn tee(&self) -> &Tee {
        self.cache.tee.get_or_init(|| Tee::build(self))
    }

    /// `λ: A → E`, `λ(a)(x) = ax`, as a matrix into `E`-coordinates.
    pub fn lambda_map(&self) -> Matrix {
        let e = self.right_endos();
        Matrix::from_cols(
            self.field(),
            e.dim(),
            self.a.left_basis_ops().iter().map(|l| e.coords(l).expect("left multiplication is right B-linear")).collect(),
        )
    }

    /// `ρ: A → 𝓔`, `ρ(a)(x) = xa`, as a matrix into `𝓔`-coordinates.
    pub fn rho_map(&self) -> Matrix {
        let e = self.left_endos();
        Matrix::from_cols(
            self.field(),
            e.dim(),
            self.a.right_basis_ops().iter().map(|r| e.coords(r).expect("right multiplication is left B-linear")).collect(),
        )
    }

    /// Ambient coordinates of `x ⊗ y` in `A ⊗_K A`.
    pub fn simple_tensor(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        vec_ops::outer(x, y)
    }

    /// Multiplication map `A ⊗_K A → A`, `x ⊗ y ↦ xy`.
    pub fn multiply_tensor(&self, t: &[Scalar]) -> Vec<Scalar> {
        let n = self.n();
        tensor::contract(n, n, t, |i, j| self.a.basis_product(i, j).to_vec())
    }

    /// Inclusion of `R`-coordinates into `A`-coordinates.
    pub fn r_to_a(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.centralizer().inclusion.mul_vec(r)
    }

    /// `A`-coordinates of an element of `R` to `R`-coordinates.
    pub fn a_to_r(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        self.centralizer().space.coords(x)
    }
}

/// `T = (A ⊗_B A)^B` with multiplication `tt′ = t′¹t¹ ⊗ t²t′²`.
#[derive(Clone, Debug)]
pub struct Tee {
    /// `T` inside the quotient coordinates of `A ⊗_B A`.
    pub space: Subspace,
    /// Ambient `A ⊗_K A` representatives of the `T`-basis.
    pub reps: Vec<Vec<Scalar>>,
    pub algebra: Algebra,
    /// `σ(r) = 1 ⊗ r`, a homomorphism `R → T`.
    pub sigma: Matrix,
    /// `τ(r) = r ⊗ 1`, an anti-homomorphism `R → T`.
    pub tau: Matrix,
}

impl Tee {
    fn build(ext: &Extension) -> Tee {
        let field = ext.field();
        let n = ext.n();
        let q = ext.tensor();
        let mut e = Echelon::new(field, q.dim());
        for (l, r) in ext.left_b_ops().iter().zip(ext.right_b_ops()) {
            let lq = q.induced_map(|c| tensor::apply_first(l, n, &vec_ops::unit(field, n * n, c)));
            let rq = q.induced_map(|c| tensor::apply_second(r, n, &vec_ops::unit(field, n * n, c)));
            let d = lq.sub(&rq);
            for i in 0..d.rows() {
                e.insert(d.row(i).to_vec());
            }
        }
        let space = e.nullspace();
        let reps: Vec<Vec<Scalar>> = space.vectors().iter().map(|v| q.section(v)).collect();
        let k = reps.len();
        let coords_of = |amb: &[Scalar]| -> Vec<Scalar> {
            space.coords(&q.project(amb)).expect("value lies in T")
        };
        let mut s = Vec::with_capacity(k * k * k);
        for t in &reps {
            for u in &reps {
                s.extend(coords_of(&tee_product_ambient(ext, t, u)));
            }
        }
        let one = ext.simple_tensor(ext.total().unit(), ext.total().unit());
        let unit = coords_of(&one);
        let algebra = Algebra::new(field, k, s, unit).expect("T is a unital associative algebra");
        let r = ext.centralizer();
        let one_a = ext.total().unit().to_vec();
        let sigma = Matrix::from_cols(
            field,
            k,
            (0..r.algebra.dim()).map(|i| coords_of(&ext.simple_tensor(&one_a, &r.inclusion.col(i)))).collect(),
        );
        let tau = Matrix::from_cols(
            field,
            k,
            (0..r.algebra.dim()).map(|i| coords_of(&ext.simple_tensor(&r.inclusion.col(i), &one_a))).collect(),
        );
        Tee { space, reps, algebra, sigma, tau }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Ambient representative of a `T`-coordinate vector.
    pub fn to_ambient(&self, t: &[Scalar]) -> Vec<Scalar> {
        let field = t.first().map(Scalar::field).expect("empty T element");
        let mut out = vec_ops::zeros(field, self.reps.first().map_or(0, Vec::len));
        for (c, rep) in t.iter().zip(&self.reps) {
            if !c.is_zero() {
                vec_ops::axpy(&mut out, c, rep);
            }
        }
        out
    }

    /// Like [`Tee::to_ambient`], but total on empty input.
    pub fn to_ambient_or_zero(&self, t: &[Scalar], ambient: usize, field: Field) -> Vec<Scalar> {
        if t.is_empty() {
            return vec_ops::zeros(field, ambient);
        }
        self.to_ambient(t)
    }

    /// `T`-coordinates of an ambient tensor, or `None` if its class is not in `T`.
    pub fn coords(&self, ext: &Extension, amb: &[Scalar]) -> Option<Vec<Scalar>> {
        self.space.coords(&ext.tensor().project(amb))
    }

    /// `r · t · r′ = r t¹ ⊗ t² r′` in `T`-coordinates.
    pub fn r_action(&self, ext: &Extension, r: &[Scalar], t: &[Scalar], r2: &[Scalar]) -> Vec<Scalar> {
        let a = ext.total();
        let n = ext.n();
        let l = a.left_mul_matrix(&ext.r_to_a(r));
        let rr = a.right_mul_matrix(&ext.r_to_a(r2));
        let amb = tensor::apply_both(&l, &rr, &self.to_ambient(t));
        debug_assert_eq!(amb.len(), n * n);
        self.coords(ext, &amb).expect("R-action preserves T")
    }
}

/// `t′¹t¹ ⊗ t²t′²` on ambient representatives.
pub fn tee_product_ambient(ext: &Extension, t: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
    let n = ext.n();
    let a = ext.total();
    let mut out = vec_ops::zeros(ext.field(), n * n);
    for (k, l, d) in tensor::terms(n, u) {
        let moved = tensor::apply_both(&a.left_basis_ops()[k], &a.right_basis_ops()[l], t);
        vec_ops::axpy(&mut out, d, &moved);
    }
    out
}
