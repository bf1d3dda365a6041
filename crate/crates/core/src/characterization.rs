//! The right `T`-coaction `a ↦ Σ_j γ_j(a) ⊗ u_j` on `A`, its Galois map
//! `β_R: A ⊗_B A → A ⊗_R T`, the transport to a left `T^op_cop`-coaction on
//! `A^op`, and the balanced depth-two characterization of Galois extensions.

use serde::Serialize;

use crate::bialgebroid::{first_failure, pairs, AxiomCheck, Bialgebroid};
use crate::comodule::Coaction;
use crate::depth2::{right_d2_quasibase, Quasibase};
use crate::duality::{build_t, pairings};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::linalg::{rank, tensor_quotient, vec_ops, Matrix, QuotientSpace, Scalar, Subspace};
use crate::properties::{is_balanced, Side};
use crate::tensor;

#[derive(Debug)]
pub struct RightCoaction<'a> {
    pub ext: &'a Extension,
    pub qb: Quasibase,
    pub t: Bialgebroid,
    /// `A ⊗_R T` with `ar ⊗ t = a ⊗ tτ(r)`; ambient index `i * dim T + z`.
    pub tensor: QuotientSpace,
    pub delta: Matrix,
    gammas: Vec<Matrix>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Characterization {
    pub right_d2: bool,
    pub right_balanced: bool,
    pub galois_map_bijective: bool,
    pub coinvariants_are_b: bool,
    /// `β_R` bijective with coinvariants exactly `B`.
    pub galois: bool,
    pub consistent: bool,
}

impl<'a> RightCoaction<'a> {
    pub fn new(ext: &'a Extension) -> Result<RightCoaction<'a>> {
        let qb = right_d2_quasibase(ext)
            .ok_or_else(|| Error::StageDependency { stage: "comodule".into(), needs: "a right D2 extension".into() })?;
        RightCoaction::with_quasibase(ext, qb)
    }

    pub fn with_quasibase(ext: &'a Extension, qb: Quasibase) -> Result<RightCoaction<'a>> {
        let fld = ext.field();
        let a = ext.total();
        let n = ext.n();
        let t = build_t(ext, &qb, None)?;
        let dt = t.dim();
        let r = ext.centralizer();
        let (p, q): (Vec<Matrix>, Vec<Matrix>) = (0..r.algebra.dim())
            .map(|k| (a.right_mul_matrix(&r.inclusion.col(k)), t.total.right_mul_matrix(&t.target.col(k))))
            .unzip();
        let tensor = tensor_quotient(fld, n, &p, dt, &q);
        let gammas: Vec<Matrix> = qb.pairs.iter().map(|(g, _)| ext.bimodule_endos().combine(g)).collect();
        let cols = (0..n)
            .map(|i| {
                let mut acc = vec_ops::zeros(fld, n * dt);
                for (g, (_, u)) in gammas.iter().zip(&qb.pairs) {
                    acc = vec_ops::add(&acc, &vec_ops::outer(&g.col(i), u));
                }
                tensor.project(&acc)
            })
            .collect();
        let delta = Matrix::from_cols(fld, tensor.dim(), cols);
        Ok(RightCoaction { ext, qb, t, tensor, delta, gammas })
    }

    fn dim_t(&self) -> usize {
        self.t.dim()
    }

    /// `ϱ_T(1) = 1 ⊗ 1` and `α(a) = Σ_j γ_j(a)[α|u_j]`.
    pub fn checks(&self) -> Vec<AxiomCheck> {
        let ext = self.ext;
        let a = ext.total();
        let n = ext.n();
        let r = ext.centralizer();
        let unital = self.delta.mul_vec(a.unit()) == self.tensor.project(&vec_ops::outer(a.unit(), self.t.total.unit()));
        let brackets = pairings(ext).bracket;
        let smaps = ext.bimodule_endos().maps();
        let recovers = first_failure(pairs(smaps.len(), n), |c| {
            let mut acc = vec_ops::zeros(ext.field(), n);
            for (g, (_, u)) in self.gammas.iter().zip(&self.qb.pairs) {
                let mut pairing = vec_ops::zeros(ext.field(), r.algebra.dim());
                for (z, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    vec_ops::axpy(&mut pairing, x, &brackets[c[0]][z]);
                }
                acc = vec_ops::add(&acc, &a.mul_coords(&g.col(c[1]), &r.inclusion.mul_vec(&pairing)));
            }
            acc == smaps[c[0]].col(c[1])
        });
        vec![
            AxiomCheck::new("coaction is unital", (!unital).then(|| "ϱ(1) != 1⊗1".into())),
            AxiomCheck::new("pairing with the coaction recovers S", recovers),
        ]
    }

    /// `a ↦ a ⊗ 1` coinvariants `{a : ϱ(a) = a ⊗ 1}`.
    pub fn coinvariants(&self) -> Subspace {
        let n = self.ext.n();
        let one_t = self.t.total.unit();
        let cols = (0..n)
            .map(|i| {
                let e = self.ext.total().basis_vector(i);
                vec_ops::sub(&self.delta.col(i), &self.tensor.project(&vec_ops::outer(&e, one_t)))
            })
            .collect();
        crate::linalg::nullspace(&Matrix::from_cols(self.ext.field(), self.tensor.dim(), cols))
    }

    /// `β_R(a ⊗ a′) = a a′₍₀₎ ⊗ a′₍₁₎` on quotient coordinates of `A ⊗_B A`.
    pub fn galois_map(&self) -> Matrix {
        let ext = self.ext;
        let n = ext.n();
        let dt = self.dim_t();
        let a = ext.total();
        let q = ext.tensor();
        let cols = (0..q.dim())
            .map(|k| {
                let idx = q.section_index(k);
                let (i, j) = (idx / n, idx % n);
                let mut acc = vec_ops::zeros(ext.field(), n * dt);
                for (g, (_, u)) in self.gammas.iter().zip(&self.qb.pairs) {
                    let x = a.mul_coords(&a.basis_vector(i), &g.col(j));
                    acc = vec_ops::add(&acc, &vec_ops::outer(&x, u));
                }
                self.tensor.project(&acc)
            })
            .collect();
        Matrix::from_cols(ext.field(), self.tensor.dim(), cols)
    }

    /// The left coaction `ā ↦ Σ_j ū_j ⊗ γ_j(a)` of `T^op_cop` on `A^op`.
    pub fn transported(&self) -> Result<Coaction> {
        let ext = self.ext;
        let n = ext.n();
        let images: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut acc = vec_ops::zeros(ext.field(), self.dim_t() * n);
                for (g, (_, u)) in self.gammas.iter().zip(&self.qb.pairs) {
                    acc = vec_ops::add(&acc, &vec_ops::outer(u, &g.col(i)));
                }
                acc
            })
            .collect();
        let t_op_cop = self.t.op().cop();
        Coaction::from_ambient(t_op_cop, ext.total().opposite(), ext.centralizer().inclusion.clone(), &images)
    }

    /// `β(bar(a ⊗ a′)) = bar(β_R(a ⊗ a′))` on every quotient basis element.
    pub fn square_commutes(&self, transported: &Coaction) -> Result<bool> {
        let ext = self.ext;
        let n = ext.n();
        let dt = self.dim_t();
        let emb = ext.embedding();
        let b_image = Subspace::span(ext.field(), n, (0..emb.cols()).map(|i| emb.col(i)));
        let gm = transported.galois_map(&b_image)?;
        let beta_r = self.galois_map();
        let q = ext.tensor();
        Ok((0..q.dim()).all(|k| {
            let idx = q.section_index(k);
            let (i, j) = (idx / n, idx % n);
            let barred = gm.domain.project(&vec_ops::unit(ext.field(), n * n, j * n + i));
            let lhs = gm.matrix.mul_vec(&barred);
            let rhs = self.tensor.section(&beta_r.col(k));
            lhs == transported.tensor.project(&tensor::flip(n, dt, &rhs))
        }))
    }
}

/// `(right D2 ∧ A_B balanced) ⟺ β_R bijective`, each side computed on its
/// own. Without a right quasibase there is no coaction and `β_R` is taken
/// as not bijective.
pub fn characterization(ext: &Extension) -> Result<Characterization> {
    let right_balanced = is_balanced(ext, Side::Right);
    let (right_d2, bijective, coinvariants_are_b) = match right_d2_quasibase(ext) {
        None => (false, false, false),
        Some(qb) => {
            let rc = RightCoaction::with_quasibase(ext, qb)?;
            let m = rc.galois_map();
            let b = Subspace::span(ext.field(), ext.n(), (0..ext.base().dim()).map(|i| ext.embedding().col(i)));
            let coinv = rc.coinvariants();
            (true, m.is_square() && rank(&m) == m.rows(), coinv.contains_subspace(&b) && b.contains_subspace(&coinv))
        }
    };
    let galois = bijective && coinvariants_are_b;
    Ok(Characterization {
        right_d2,
        right_balanced,
        galois_map_bijective: bijective,
        coinvariants_are_b,
        galois,
        consistent: (right_d2 && right_balanced) == galois,
    })
}
