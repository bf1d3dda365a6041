//! The left bialgebroid `S = End(_B A_B)` and the right bialgebroid
//! `T = (A ⊗_B A)^B` over the centralizer, and the pairings between them.

use serde::Serialize;

use crate::bialgebroid::{all_passed, AxiomCheck, Bialgebroid, Chirality};
use crate::depth2::Quasibase;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::hom::{HomSpace, Intertwine};
use crate::linalg::{rank, vec_ops, Matrix, Scalar};
use crate::properties::Side;
use crate::tensor;

/// `Σ_{kl} c_kl L_{e_k} α L_{e_l}` for `u = Σ c_kl e_k ⊗ e_l`: `x ↦ u¹ α(u² x)`.
pub(crate) fn sandwich_right(ext: &Extension, u: &[Scalar], alpha: &Matrix) -> Matrix {
    let a = ext.total();
    let n = ext.n();
    let mut acc = Matrix::zeros(ext.field(), n, n);
    for (k, l, c) in tensor::terms(n, u) {
        acc = acc.add(&a.left_basis_ops()[k].mul(alpha).mul(&a.left_basis_ops()[l]).scale(c));
    }
    acc
}

/// `x ↦ α(x t¹) t²`.
pub(crate) fn sandwich_left(ext: &Extension, t: &[Scalar], alpha: &Matrix) -> Matrix {
    let a = ext.total();
    let n = ext.n();
    let mut acc = Matrix::zeros(ext.field(), n, n);
    for (k, l, c) in tensor::terms(n, t) {
        acc = acc.add(&a.right_basis_ops()[l].mul(alpha).mul(&a.right_basis_ops()[k]).scale(c));
    }
    acc
}

fn s_coords(ext: &Extension, f: &Matrix) -> Vec<Scalar> {
    ext.bimodule_endos().coords(f).expect("map lies in S")
}

fn r_coords(ext: &Extension, x: &[Scalar]) -> Vec<Scalar> {
    ext.a_to_r(x).expect("value lies in R")
}

/// `Δ_S` on the `S`-basis as ambient `S ⊗ S` vectors, from either formula.
pub fn s_comult_ambient(ext: &Extension, qb: &Quasibase) -> Vec<Vec<Scalar>> {
    let s = ext.bimodule_endos();
    let tee = ext.tee();
    let d = s.dim();
    let terms: Vec<(Matrix, Vec<Scalar>, Vec<Scalar>)> = qb
        .pairs
        .iter()
        .map(|(g, u)| (s.combine(g), g.clone(), tee.to_ambient(u)))
        .collect();
    s.maps()
        .iter()
        .map(|alpha| {
            let mut acc = vec_ops::zeros(ext.field(), d * d);
            for (_, g, u) in &terms {
                match qb.side {
                    // Σ_j γ_j ⊗ u_j¹ α(u_j² −)
                    Side::Right => {
                        let right = s_coords(ext, &sandwich_right(ext, u, alpha));
                        acc = vec_ops::add(&acc, &vec_ops::outer(g, &right));
                    }
                    // Σ_i α(− t_i¹) t_i² ⊗ β_i
                    Side::Left => {
                        let left = s_coords(ext, &sandwich_left(ext, u, alpha));
                        acc = vec_ops::add(&acc, &vec_ops::outer(&left, g));
                    }
                }
            }
            acc
        })
        .collect()
}

/// Source `λ|_R`, target `ρ|_R` in `S`-coordinates.
fn s_source_target(ext: &Extension) -> (Matrix, Matrix) {
    let a = ext.total();
    let r = ext.centralizer();
    let k = r.algebra.dim();
    let src = (0..k).map(|i| s_coords(ext, &a.left_mul_matrix(&r.inclusion.col(i)))).collect();
    let tgt = (0..k).map(|i| s_coords(ext, &a.right_mul_matrix(&r.inclusion.col(i)))).collect();
    let d = ext.bimodule_endos().dim();
    (Matrix::from_cols(ext.field(), d, src), Matrix::from_cols(ext.field(), d, tgt))
}

fn s_counit(ext: &Extension) -> Matrix {
    let one = ext.total().unit();
    let k = ext.centralizer().algebra.dim();
    let cols = ext.bimodule_endos().maps().iter().map(|f| r_coords(ext, &f.mul_vec(one))).collect();
    Matrix::from_cols(ext.field(), k, cols)
}

/// `S` from a quasibase of either side, without verification.
pub fn s_from_quasibase(ext: &Extension, qb: &Quasibase) -> Bialgebroid {
    let (source, target) = s_source_target(ext);
    Bialgebroid::from_ambient(
        Chirality::Left,
        ext.s_algebra().clone(),
        ext.centralizer().algebra.clone(),
        source,
        target,
        &s_comult_ambient(ext, qb),
        s_counit(ext),
    )
}

fn failure(axiom: &str, report: &[AxiomCheck]) -> Error {
    let bad = report.iter().find(|c| !c.passed).expect("some check failed");
    Error::AxiomFailure {
        axiom: format!("{axiom}: {}", bad.axiom),
        witness: bad.witness.clone().unwrap_or_default(),
    }
}

/// The left bialgebroid `S` from a right quasibase, cross-checked against
/// the left-quasibase formula when one is supplied.
pub fn build_s(ext: &Extension, right: &Quasibase, left: Option<&Quasibase>) -> Result<Bialgebroid> {
    let s = s_from_quasibase(ext, right);
    let report = s.verify();
    if !all_passed(&report) {
        return Err(failure("S", &report));
    }
    if let Some(l) = left {
        let other = s_from_quasibase(ext, l);
        if other.comult != s.comult {
            return Err(Error::AxiomFailure {
                axiom: "S comultiplication formulas agree".into(),
                witness: "left- and right-quasibase formulas differ".into(),
            });
        }
    }
    Ok(s)
}

/// `Δ_T` on the `T`-basis as ambient `T ⊗ T` vectors.
pub fn t_comult_ambient(ext: &Extension, qb: &Quasibase) -> Vec<Vec<Scalar>> {
    let s = ext.bimodule_endos();
    let tee = ext.tee();
    let n = ext.n();
    let d = tee.dim();
    let terms: Vec<(Matrix, Vec<Scalar>)> = qb.pairs.iter().map(|(g, u)| (s.combine(g), u.clone())).collect();
    tee.reps
        .iter()
        .map(|t| {
            let mut acc = vec_ops::zeros(ext.field(), d * d);
            for (g, u) in &terms {
                match qb.side {
                    // Σ_j (t¹ ⊗ γ_j(t²)) ⊗ u_j
                    Side::Right => {
                        let first = tee.coords(ext, &tensor::apply_second(g, n, t)).expect("lies in T");
                        acc = vec_ops::add(&acc, &vec_ops::outer(&first, u));
                    }
                    // Σ_i t_i ⊗ (β_i(t¹) ⊗ t²)
                    Side::Left => {
                        let second = tee.coords(ext, &tensor::apply_first(g, n, t)).expect("lies in T");
                        acc = vec_ops::add(&acc, &vec_ops::outer(u, &second));
                    }
                }
            }
            acc
        })
        .collect()
}

fn t_counit(ext: &Extension) -> Matrix {
    let tee = ext.tee();
    let k = ext.centralizer().algebra.dim();
    let cols = tee.reps.iter().map(|t| r_coords(ext, &ext.multiply_tensor(t))).collect();
    Matrix::from_cols(ext.field(), k, cols)
}

pub fn t_from_quasibase(ext: &Extension, qb: &Quasibase) -> Bialgebroid {
    let tee = ext.tee();
    Bialgebroid::from_ambient(
        Chirality::Right,
        tee.algebra.clone(),
        ext.centralizer().algebra.clone(),
        tee.sigma.clone(),
        tee.tau.clone(),
        &t_comult_ambient(ext, qb),
        t_counit(ext),
    )
}

/// The right bialgebroid `T` from a quasibase of either side.
pub fn build_t(ext: &Extension, qb: &Quasibase, other: Option<&Quasibase>) -> Result<Bialgebroid> {
    let t = t_from_quasibase(ext, qb);
    let report = t.verify();
    if !all_passed(&report) {
        return Err(failure("T", &report));
    }
    if let Some(o) = other {
        if t_from_quasibase(ext, o).comult != t.comult {
            return Err(Error::AxiomFailure {
                axiom: "T comultiplication formulas agree".into(),
                witness: "left- and right-quasibase formulas differ".into(),
            });
        }
    }
    Ok(t)
}

/// `⟨α|t⟩ = α(t¹)t²` and `[α|t] = t¹α(t²)` on basis pairs, in `R`-coordinates.
#[derive(Clone, Debug)]
pub struct Pairings {
    /// `angle[i][j] = ⟨α_i | t_j⟩`.
    pub angle: Vec<Vec<Vec<Scalar>>>,
    pub bracket: Vec<Vec<Vec<Scalar>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    /// `t ↦ [−|t]` is a bijection `T → Hom(S_R, R_R)`.
    pub bracket_nondegenerate: bool,
    /// `α ↦ ⟨α|−⟩` is a bijection `S → Hom(T_R, R_R)`.
    pub angle_nondegenerate: bool,
    /// `Σ_j γ_j(−)[α|u_j] = α` for every `S`-basis `α`.
    pub dual_bases_identity: Option<bool>,
    pub checks: Vec<AxiomCheck>,
}

pub fn pairings(ext: &Extension) -> Pairings {
    let s = ext.bimodule_endos();
    let tee = ext.tee();
    let n = ext.n();
    let eval = |first: bool| -> Vec<Vec<Vec<Scalar>>> {
        s.maps()
            .iter()
            .map(|alpha| {
                tee.reps
                    .iter()
                    .map(|t| {
                        let moved = if first { tensor::apply_first(alpha, n, t) } else { tensor::apply_second(alpha, n, t) };
                        r_coords(ext, &ext.multiply_tensor(&moved))
                    })
                    .collect()
            })
            .collect()
    };
    Pairings { angle: eval(true), bracket: eval(false) }
}

/// Whether `x ↦ (y ↦ form(x, y))` is a bijection from `X` onto the given
/// hom space `Hom(Y, R)`; `form[x][y]` is in `R`-coordinates.
fn induces_iso(hom: &HomSpace, dim_x: usize, value: impl Fn(usize) -> Matrix) -> bool {
    if hom.dim() != dim_x {
        return false;
    }
    let mut cols = Vec::with_capacity(dim_x);
    for x in 0..dim_x {
        match hom.coords(&value(x)) {
            Some(c) => cols.push(c),
            None => return false,
        }
    }
    dim_x == 0 || rank(&Matrix::from_cols(hom.field(), hom.dim(), cols)) == dim_x
}

pub fn pairing_report(ext: &Extension, right_qb: Option<&Quasibase>) -> PairingReport {
    let field = ext.field();
    let s = ext.bimodule_endos();
    let tee = ext.tee();
    let r = ext.centralizer();
    let a = ext.total();
    let k = r.algebra.dim();
    let p = pairings(ext);

    // S_R: α·r = ρ(r)∘α
    let s_right: Vec<Matrix> = (0..k)
        .map(|i| {
            let rho = a.right_mul_matrix(&r.inclusion.col(i));
            Matrix::from_cols(field, s.dim(), s.maps().iter().map(|f| s_coords(ext, &rho.mul(f))).collect())
        })
        .collect();
    let r_right = r.algebra.right_basis_ops();
    let hom_s = HomSpace::intertwiners(
        field,
        s.dim(),
        k,
        &s_right.iter().zip(r_right).map(|(x, y)| Intertwine::new(x.clone(), y.clone())).collect::<Vec<_>>(),
    );
    let bracket_nondegenerate = induces_iso(&hom_s, tee.dim(), |t| {
        Matrix::from_cols(field, k, (0..s.dim()).map(|alpha| p.bracket[alpha][t].clone()).collect())
    });

    // T_R: t·r = t σ(r)
    let t_right: Vec<Matrix> = (0..k).map(|i| tee.algebra.right_mul_matrix(&tee.sigma.col(i))).collect();
    let hom_t = HomSpace::intertwiners(
        field,
        tee.dim(),
        k,
        &t_right.iter().zip(r_right).map(|(x, y)| Intertwine::new(x.clone(), y.clone())).collect::<Vec<_>>(),
    );
    let angle_nondegenerate = induces_iso(&hom_t, s.dim(), |alpha| {
        Matrix::from_cols(field, k, (0..tee.dim()).map(|t| p.angle[alpha][t].clone()).collect())
    });

    let mut checks = Vec::new();
    let one_one = tee.coords(ext, &ext.simple_tensor(a.unit(), a.unit())).expect("1⊗1 lies in T");
    let id_s = s_coords(ext, &Matrix::identity(field, ext.n()));
    let angle_unit = {
        let mut acc = vec_ops::zeros(field, k);
        for (i, x) in id_s.iter().enumerate() {
            for (j, y) in one_one.iter().enumerate() {
                let xy = x * y;
                if !xy.is_zero() {
                    vec_ops::axpy(&mut acc, &xy, &p.angle[i][j]);
                }
            }
        }
        acc
    };
    checks.push(AxiomCheck::new(
        "pairing of identity with unit is 1",
        (angle_unit != r.algebra.unit()).then(|| "⟨id|1⊗1⟩ != 1".into()),
    ));

    let dual_bases_identity = right_qb.map(|qb| {
        s.maps().iter().enumerate().all(|(i, alpha)| {
            let mut acc = Matrix::zeros(field, ext.n(), ext.n());
            for (g, u) in &qb.pairs {
                let mut pair = vec_ops::zeros(field, k);
                for (j, c) in u.iter().enumerate() {
                    if !c.is_zero() {
                        vec_ops::axpy(&mut pair, c, &p.bracket[i][j]);
                    }
                }
                let rho = a.right_mul_matrix(&ext.r_to_a(&pair));
                acc = acc.add(&rho.mul(&s.combine(g)));
            }
            acc == *alpha
        })
    });
    PairingReport { bracket_nondegenerate, angle_nondegenerate, dual_bases_identity, checks }
}
