//! The right endomorphism extension `λ: A → E = End(A_B)`: its left
//! `S_cop`-coaction, the smash-product picture `A # S ≅ E`, and the
//! converse audit for Frobenius generator extensions.

use serde::Serialize;

use crate::bialgebroid::{all_passed, first_failure, pairs, AxiomCheck};
use crate::comodule::Coaction;
use crate::depth2::{left_d2_quasibase, right_d2_quasibase, Quasibase};
use crate::duality::s_from_quasibase;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::linalg::{rank, tensor_quotient, vec_ops, Matrix, QuotientSpace, Scalar, Subspace};
use crate::properties::{frobenius_system, is_balanced, is_right_generator, Side};
use crate::tensor;

/// `E | A` through `λ`.
pub fn right_endo_extension(ext: &Extension) -> Extension {
    Extension::new(ext.total().clone(), ext.right_endo_algebra().clone(), ext.lambda_map())
        .expect("λ is an injective unital homomorphism")
}

#[derive(Clone, Debug, Serialize)]
pub struct RightEndoReport {
    pub dim_e: usize,
    pub left_d2: bool,
    pub left_balanced: bool,
    pub coaction: Vec<AxiomCheck>,
    pub coinvariants_are_a: bool,
    pub galois_bijective: bool,
    pub smash_iso: bool,
    pub smash_coaction: Option<String>,
}

impl RightEndoReport {
    pub fn passed(&self) -> bool {
        self.left_d2
            && self.left_balanced
            && all_passed(&self.coaction)
            && self.coinvariants_are_a
            && self.galois_bijective
            && self.smash_iso
            && self.smash_coaction.is_none()
    }
}

/// `δ_L(g) = Σ_i β_i ⊗ g(−t_i¹)t_i²` over `S_cop`, base map `ρ: R^op → E`.
pub fn left_coaction_on_e(ext: &Extension, left: &Quasibase) -> Result<Coaction> {
    let f = ext.field();
    let a = ext.total();
    let n = ext.n();
    let e = ext.right_endos();
    let s = ext.bimodule_endos();
    let r = ext.centralizer();
    let base_map = Matrix::from_cols(
        f,
        e.dim(),
        (0..r.algebra.dim()).map(|k| e.coords(&a.right_mul_matrix(&r.inclusion.col(k))).expect("ρ(r) is right B-linear")).collect(),
    );
    let terms: Vec<(Vec<Scalar>, Vec<(usize, usize, Scalar)>)> = left
        .pairs
        .iter()
        .map(|(b, t)| {
            let rep = ext.tee().to_ambient(t);
            (b.clone(), tensor::terms(n, &rep).map(|(p, q, c)| (p, q, c.clone())).collect())
        })
        .collect();
    let images: Vec<Vec<Scalar>> = e
        .maps()
        .iter()
        .map(|g| {
            let mut acc = vec_ops::zeros(f, s.dim() * e.dim());
            for (beta, rep) in &terms {
                let mut m = Matrix::zeros(f, n, n);
                for (p, q, c) in rep {
                    let piece = a.right_basis_ops()[*q].mul(g).mul(&a.right_basis_ops()[*p]);
                    m = m.add(&piece.scale(c));
                }
                let coords = e.coords(&m).expect("g(−t¹)t² is right B-linear");
                acc = vec_ops::add(&acc, &vec_ops::outer(beta, &coords));
            }
            acc
        })
        .collect();
    let s_cop = s_from_quasibase(ext, left).cop();
    Coaction::from_ambient(s_cop, ext.right_endo_algebra().clone(), base_map, &images)
}

/// `A ⊗_R S` with `ar ⊗ α = a ⊗ λ(r)∘α`, and `a ⊗ α ↦ λ(a)∘α` into `E`.
fn smash(ext: &Extension) -> (QuotientSpace, Matrix) {
    let f = ext.field();
    let a = ext.total();
    let n = ext.n();
    let s_alg = ext.s_algebra();
    let s = ext.bimodule_endos();
    let e = ext.right_endos();
    let r = ext.centralizer();
    let (p, q): (Vec<Matrix>, Vec<Matrix>) = (0..r.algebra.dim())
        .map(|k| {
            let x = r.inclusion.col(k);
            let src = s.coords(&a.left_mul_matrix(&x)).expect("λ(r) is a bimodule map");
            (a.right_mul_matrix(&x), s_alg.left_mul_matrix(&src))
        })
        .collect();
    let quotient = tensor_quotient(f, n, &p, s.dim(), &q);
    let maps = s.maps();
    let cols = (0..quotient.dim())
        .map(|k| {
            let idx = quotient.section_index(k);
            let composed = a.left_basis_ops()[idx / s.dim()].mul(&maps[idx % s.dim()]);
            e.coords(&composed).expect("λ(a)∘α is right B-linear")
        })
        .collect();
    let m = Matrix::from_cols(f, e.dim(), cols);
    (quotient, m)
}

pub fn right_endo_corollary(ext: &Extension) -> Result<RightEndoReport> {
    let left = left_d2_quasibase(ext)
        .ok_or_else(|| Error::StageDependency { stage: "tower".into(), needs: "a left D2 extension".into() })?;
    let endo = right_endo_extension(ext);
    let coaction = left_coaction_on_e(ext, &left)?;
    let lambda = ext.lambda_map();
    let a_image = Subspace::span(ext.field(), lambda.rows(), (0..lambda.cols()).map(|i| lambda.col(i)));
    let coinv = coaction.coinvariants();
    let galois = coaction.galois_map(&a_image)?;
    let (quotient, smash_map) = smash(ext);
    let smash_iso = smash_map.is_square() && rank(&smash_map) == smash_map.rows();
    let smash_coaction = smash_coaction_check(ext, &coaction, &quotient, &smash_map);
    Ok(RightEndoReport {
        dim_e: endo.total().dim(),
        left_d2: left_d2_quasibase(&endo).is_some(),
        left_balanced: is_balanced(&endo, Side::Left),
        coaction: coaction.verify(),
        coinvariants_are_a: coinv.contains_subspace(&a_image) && a_image.contains_subspace(&coinv),
        galois_bijective: galois.is_bijective(),
        smash_iso,
        smash_coaction,
    })
}

/// `δ_L(a # α) = α₍₂₎ ⊗ a # α₍₁₎` on basis elements of `A ⊗_R S`.
fn smash_coaction_check(ext: &Extension, coaction: &Coaction, quotient: &QuotientSpace, smash_map: &Matrix) -> Option<String> {
    let s = &coaction.bialgebroid;
    let d = s.dim();
    let n = ext.n();
    let de = coaction.carrier.dim();
    let lift = |a: usize, alpha: usize| smash_map.mul_vec(&quotient.project_unit(a * d + alpha));
    first_failure(pairs(n, d), |c| {
        let lhs = coaction.delta.mul_vec(&lift(c[0], c[1]));
        // terms of Δ_cop(α) come as α₍₂₎ ⊗ α₍₁₎
        let mut rhs = vec_ops::zeros(ext.field(), d * de);
        for (x, y, w) in tensor::terms(d, &s.comult_rep(c[1])) {
            vec_ops::axpy(&mut rhs, w, &vec_ops::outer(&s.total.basis_vector(x), &lift(c[0], y)));
        }
        lhs == coaction.tensor.project(&rhs)
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConverseReport {
    Skipped { reason: String },
    Checked {
        dim_e: usize,
        e_left_d2: bool,
        e_right_d2: bool,
        left_d2: bool,
        right_d2: bool,
        implication_holds: bool,
    },
}

/// For a Frobenius extension with `A_B` a generator: `E | A` D2 ⇒ `A | B` D2.
pub fn converse_frobenius_check(ext: &Extension, seed: u64) -> Result<ConverseReport> {
    if frobenius_system(ext, seed)?.is_none() {
        return Ok(ConverseReport::Skipped { reason: "not a Frobenius extension".into() });
    }
    if !is_right_generator(ext) {
        return Ok(ConverseReport::Skipped { reason: "A_B is not a generator".into() });
    }
    let endo = right_endo_extension(ext);
    let (e_left_d2, e_right_d2) = (left_d2_quasibase(&endo).is_some(), right_d2_quasibase(&endo).is_some());
    let (left_d2, right_d2) = (left_d2_quasibase(ext).is_some(), right_d2_quasibase(ext).is_some());
    Ok(ConverseReport::Checked {
        dim_e: endo.total().dim(),
        e_left_d2,
        e_right_d2,
        left_d2,
        right_d2,
        implication_holds: !(e_left_d2 && e_right_d2) || (left_d2 && right_d2),
    })
}
