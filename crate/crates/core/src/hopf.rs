//! Kanzaki separability and the antipode `τ(t) = e¹t² ⊗ t¹e²` making the
//! left bialgebroid `T^op_cop` a Hopf algebroid.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::bialgebroid::{all_passed, first_failure, pairs, singles, AxiomCheck, Bialgebroid};
use crate::depth2::{right_d2_quasibase, Quasibase};
use crate::duality::build_t;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::linalg::{inverse, nullspace, rank, solve_linear, tensor_quotient, vec_ops, Matrix, QuotientSpace, Scalar};
use crate::tensor;

/// A symmetric separability element `e ∈ B ⊗_K B`, ambient index `i * dim B + j`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparabilityElement(pub Vec<Scalar>);

/// The linear conditions `be = eb`, `e¹b ⊗ e² = e¹ ⊗ be²` stacked over
/// `e¹e² = 0 = e²e¹`, together with the right-hand side for `= 1`.
fn kanzaki_system(b: &Algebra) -> (Matrix, Vec<Scalar>) {
    let f = b.field();
    let m = b.dim();
    let id = Matrix::identity(f, m);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs = Vec::new();
    for (l, r) in b.left_basis_ops().iter().zip(b.right_basis_ops()) {
        for op in [l.kron(&id).sub(&id.kron(r)), r.kron(&id).sub(&id.kron(l))] {
            rows.extend(op.row_vecs());
            rhs.extend(std::iter::repeat_with(|| f.zero()).take(m * m));
        }
    }
    for flipped in [false, true] {
        for c in 0..m {
            rows.push(
                (0..m * m)
                    .map(|k| {
                        let (i, j) = (k / m, k % m);
                        let (x, y) = if flipped { (j, i) } else { (i, j) };
                        b.basis_product(x, y)[c].clone()
                    })
                    .collect(),
            );
            rhs.push(b.unit()[c].clone());
        }
    }
    (Matrix::from_rows_with_cols(f, rows, m * m), rhs)
}

impl SeparabilityElement {
    pub fn verify(&self, b: &Algebra) -> bool {
        let (m, rhs) = kanzaki_system(b);
        m.mul_vec(&self.0) == rhs
    }

    /// Terms `(e¹, e²)` pushed into `A`.
    pub fn in_total(&self, ext: &Extension) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
        let m = ext.base().dim();
        let emb = ext.embedding();
        tensor::terms(m, &self.0)
            .map(|(i, j, c)| (vec_ops::scale(&emb.col(i), c), emb.col(j)))
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        vec_ops::to_strings(&self.0)
    }
}

/// The canonical solution of the Kanzaki system (free variables zero).
pub fn kanzaki_element(b: &Algebra) -> Option<SeparabilityElement> {
    let (m, rhs) = kanzaki_system(b);
    solve_linear(&m, &rhs).map(SeparabilityElement)
}

/// A second solution, canonical plus the first homogeneous direction.
pub fn second_kanzaki_element(b: &Algebra) -> Option<SeparabilityElement> {
    let first = kanzaki_element(b)?;
    let (m, _) = kanzaki_system(b);
    let null = nullspace(&m);
    (null.dim() > 0).then(|| SeparabilityElement(vec_ops::add(&first.0, null.vector(0))))
}

/// `x ⊗ y ↦ e¹y ⊗ xe²` on `A ⊗_K A`, ambient to ambient.
fn twist_ambient(ext: &Extension, terms: &[(Vec<Scalar>, Vec<Scalar>)], w: &[Scalar]) -> Vec<Scalar> {
    let a = ext.total();
    let n = ext.n();
    let flipped = tensor::flip(n, n, w);
    let mut out = vec_ops::zeros(ext.field(), n * n);
    for (e1, e2) in terms {
        let moved = tensor::apply_both(&a.left_mul_matrix(e1), &a.right_mul_matrix(e2), &flipped);
        out = vec_ops::add(&out, &moved);
    }
    out
}

/// Matrix of `τ` on `T`-coordinates, computed on section representatives.
pub fn antipode(ext: &Extension, e: &SeparabilityElement) -> Result<Matrix> {
    let tee = ext.tee();
    let terms = e.in_total(ext);
    let cols = tee
        .reps
        .iter()
        .enumerate()
        .map(|(i, w)| {
            tee.coords(ext, &twist_ambient(ext, &terms, w))
                .ok_or_else(|| Error::NotInT(format!("τ(t{i}) is not B-central")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_cols(ext.field(), tee.dim(), cols))
}

/// Whether the twist kills every relation `xb ⊗ y − x ⊗ by` of `A ⊗_B A`,
/// so `τ` does not depend on the chosen representatives.
pub fn representative_independent(ext: &Extension, e: &SeparabilityElement) -> bool {
    let f = ext.field();
    let n = ext.n();
    let terms = e.in_total(ext);
    let q = ext.tensor();
    ext.left_b_ops().iter().zip(ext.right_b_ops()).all(|(l, r)| {
        (0..n * n).all(|c| {
            let u = vec_ops::unit(f, n * n, c);
            let rel = vec_ops::sub(&tensor::apply_first(r, n, &u), &tensor::apply_second(l, n, &u));
            q.is_zero(&twist_ambient(ext, &terms, &rel))
        })
    })
}

/// `T^op_cop` with the antipode, plus the triple tensor `A ⊗_B A ⊗_B A`
/// and the isomorphism `t ⊗ t′ ↦ t′¹ ⊗ t′²t¹ ⊗ t²` into it.
#[derive(Clone, Debug)]
pub struct HopfAlgebroid<'a> {
    pub ext: &'a Extension,
    pub bialgebroid: Bialgebroid,
    pub e: SeparabilityElement,
    pub tau: Matrix,
    qb: Quasibase,
    triple: QuotientSpace,
    iq: Matrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfReport {
    pub e: Vec<String>,
    pub tau: Vec<Vec<String>>,
    pub representative_independent: bool,
    pub axioms: Vec<AxiomCheck>,
    pub intermediate: Vec<AxiomCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_e: Option<SecondElement>,
}

/// Outcome of the same checks under another separability element.
#[derive(Clone, Debug, Serialize)]
pub struct SecondElement {
    pub e: Vec<String>,
    pub same_antipode: bool,
    pub same_outcomes: bool,
}

impl<'a> HopfAlgebroid<'a> {
    pub fn new(ext: &'a Extension) -> Result<HopfAlgebroid<'a>> {
        let qb = right_d2_quasibase(ext)
            .ok_or_else(|| Error::StageDependency { stage: "hopf".into(), needs: "a right D2 extension".into() })?;
        let e = kanzaki_element(ext.base())
            .ok_or_else(|| Error::StageDependency { stage: "hopf".into(), needs: "a Kanzaki separable base".into() })?;
        HopfAlgebroid::with(ext, &qb, e)
    }

    pub fn with(ext: &'a Extension, qb: &Quasibase, e: SeparabilityElement) -> Result<HopfAlgebroid<'a>> {
        let tau = antipode(ext, &e)?;
        HopfAlgebroid::with_antipode(ext, qb, e, tau)
    }

    /// Any candidate `τ`, for testing the verifier against perturbations.
    pub fn with_antipode(ext: &'a Extension, qb: &Quasibase, e: SeparabilityElement, tau: Matrix) -> Result<HopfAlgebroid<'a>> {
        let bialgebroid = build_t(ext, qb, None)?.op().cop();
        let f = ext.field();
        let n = ext.n();
        let q = ext.tensor();
        let rights: Vec<Matrix> = ext
            .right_b_ops()
            .iter()
            .map(|r| q.induced_map(|c| tensor::apply_second(r, n, &vec_ops::unit(f, n * n, c))))
            .collect();
        let triple = tensor_quotient(f, q.dim(), &rights, n, ext.left_b_ops());
        let mut h = HopfAlgebroid { ext, bialgebroid, e, tau, qb: qb.clone(), triple, iq: Matrix::zeros(f, 0, 0) };
        let dt = h.dim();
        let reps = &ext.tee().reps;
        let cols = (0..dt * dt).map(|c| h.iq_ambient(&reps[c / dt], &reps[c % dt])).collect();
        h.iq = Matrix::from_cols(f, h.triple.dim(), cols);
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.bialgebroid.dim()
    }

    /// Class of an `A ⊗_K A ⊗_K A` vector in the triple tensor.
    fn triple_class(&self, w: &[Scalar]) -> Vec<Scalar> {
        let n = self.ext.n();
        let q = self.ext.tensor();
        let mut out = vec_ops::zeros(self.ext.field(), q.dim() * n);
        for (ij, k, x) in tensor::terms(n, w) {
            for (p, y) in q.project_unit(ij).iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[p * n + k].add_mul(x, y);
            }
        }
        self.triple.project(&out)
    }

    /// `t′¹ ⊗ t′²t¹ ⊗ t²` on ambient representatives.
    fn iq_ambient(&self, t: &[Scalar], t2: &[Scalar]) -> Vec<Scalar> {
        let a = self.ext.total();
        let n = self.ext.n();
        let mut out = vec_ops::zeros(self.ext.field(), n * n * n);
        for (p, q, x) in tensor::terms(n, t2) {
            for (r, s, y) in tensor::terms(n, t) {
                let xy = x * y;
                for (m, z) in a.basis_product(q, r).iter().enumerate().filter(|(_, z)| !z.is_zero()) {
                    out[(p * n + m) * n + s].add_mul(&xy, z);
                }
            }
        }
        self.triple_class(&out)
    }

    /// `iq` on `T ⊗_{R^op} T` quotient coordinates.
    fn iq_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.iq.mul_vec(&self.bialgebroid.tensor.section(v))
    }

    /// `τ^{-1}(t₍₂₎)₍₁₎ ⊗ τ^{-1}(t₍₂₎)₍₂₎ t₍₁₎` in quotient coordinates.
    fn eq21_lhs(&self, tau_inv: &Matrix, i: usize) -> Vec<Scalar> {
        let h = &self.bialgebroid;
        let d = self.dim();
        let mut out = vec_ops::zeros(h.field(), d * d);
        for (x, y, c) in tensor::terms(d, &h.comult_rep(i)) {
            let z = tau_inv.col(y);
            for (p, q, w) in tensor::terms(d, &h.comult_rep_of(&z)) {
                let prod = h.total.mul_coords(&h.total.basis_vector(q), &h.total.basis_vector(x));
                vec_ops::axpy(&mut out, &(c * w), &vec_ops::outer(&h.total.basis_vector(p), &prod));
            }
        }
        h.tensor.project(&out)
    }

    /// `τ(t₍₁₎)₍₁₎ t₍₂₎ ⊗ τ(t₍₁₎)₍₂₎` in quotient coordinates.
    fn eq22_lhs(&self, i: usize) -> Vec<Scalar> {
        let h = &self.bialgebroid;
        let d = self.dim();
        let mut out = vec_ops::zeros(h.field(), d * d);
        for (x, y, c) in tensor::terms(d, &h.comult_rep(i)) {
            let z = self.tau.col(x);
            for (p, q, w) in tensor::terms(d, &h.comult_rep_of(&z)) {
                let prod = h.total.mul_coords(&h.total.basis_vector(p), &h.total.basis_vector(y));
                vec_ops::axpy(&mut out, &(c * w), &vec_ops::outer(&prod, &h.total.basis_vector(q)));
            }
        }
        h.tensor.project(&out)
    }
}

/// Places `A ⊗ A` terms around a unit: `slot` 0, 1, 2 gives `1⊗w`, `w¹⊗1⊗w²`, `w⊗1`.
fn with_unit(n: usize, one: &[Scalar], w: &[Scalar], slot: usize) -> Vec<Scalar> {
    let f = one[0].field();
    let mut out = vec_ops::zeros(f, n * n * n);
    for (i, j, c) in tensor::terms(n, w) {
        for (m, u) in one.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
            let idx = match slot {
                0 => (m * n + i) * n + j,
                1 => (i * n + m) * n + j,
                _ => (i * n + j) * n + m,
            };
            out[idx].add_mul(c, u);
        }
    }
    out
}

impl HopfAlgebroid<'_> {
    /// Anti-multiplicativity, involution and the three antipode axioms.
    pub fn verify(&self) -> Vec<AxiomCheck> {
        let h = &self.bialgebroid;
        let d = self.dim();
        let t = &self.tau;
        let one = h.total.unit();
        let anti = first_failure(pairs(d, d), |p| {
            let lhs = t.mul_vec(h.total.basis_product(p[0], p[1]));
            lhs == h.total.mul_coords(&t.col(p[1]), &t.col(p[0]))
        });
        let involution = first_failure(singles(d), |i| t.mul_vec(&t.col(i[0])) == h.total.basis_vector(i[0]));
        let target = first_failure(singles(h.base.dim()), |r| t.mul_vec(&h.target.col(r[0])) == h.source.col(r[0]));
        let second = match inverse(t) {
            None => Some("τ is not invertible".into()),
            Some(inv) => first_failure(singles(d), |i| {
                self.eq21_lhs(&inv, i[0]) == h.tensor.project(&vec_ops::outer(&inv.col(i[0]), one))
            }),
        };
        let third = first_failure(singles(d), |i| self.eq22_lhs(i[0]) == h.tensor.project(&vec_ops::outer(one, &t.col(i[0]))));
        vec![
            AxiomCheck::new("antipode is anti-multiplicative", anti),
            AxiomCheck::new("antipode is an involution", involution),
            AxiomCheck::new("antipode sends target to source", target),
            AxiomCheck::new("τ⁻¹(t₍₂₎)₍₁₎ ⊗ τ⁻¹(t₍₂₎)₍₂₎t₍₁₎ = τ⁻¹(t) ⊗ 1", second),
            AxiomCheck::new("τ(t₍₁₎)₍₁₎t₍₂₎ ⊗ τ(t₍₁₎)₍₂₎ = 1 ⊗ τ(t)", third),
        ]
    }

    /// The same identities pushed into `(A ⊗_B A ⊗_B A)^B`, with the right
    /// sides computed from `e` directly rather than from `τ`.
    pub fn intermediate(&self) -> Vec<AxiomCheck> {
        let h = &self.bialgebroid;
        let ext = self.ext;
        let n = ext.n();
        let d = self.dim();
        let one = ext.total().unit();
        let reps = &ext.tee().reps;
        let terms = self.e.in_total(ext);
        let well_defined = first_failure(singles(d * d), |c| {
            let projected = h.tensor.project_unit(c[0]);
            self.iq.col(c[0]) == self.iq_of(&projected)
        });
        let restricted = self.iq.mul(&h.tensor.section_matrix());
        let injective = (rank(&restricted) != h.tensor.dim()).then(|| "iq has a kernel".to_string());
        let comult = first_failure(singles(d), |i| {
            self.iq_of(&h.comult.col(i[0])) == self.triple_class(&with_unit(n, one, &reps[i[0]], 1))
        });
        let second = match inverse(&self.tau) {
            None => Some("τ is not invertible".into()),
            Some(inv) => first_failure(singles(d), |i| {
                let twisted = twist_ambient(ext, &terms, &reps[i[0]]);
                self.iq_of(&self.eq21_lhs(&inv, i[0])) == self.triple_class(&with_unit(n, one, &twisted, 0))
            }),
        };
        let third = first_failure(singles(d), |i| {
            let twisted = twist_ambient(ext, &terms, &reps[i[0]]);
            self.iq_of(&self.eq22_lhs(i[0])) == self.triple_class(&with_unit(n, one, &twisted, 2))
        });
        vec![
            AxiomCheck::new("iq is well defined on T ⊗ T", well_defined),
            AxiomCheck::new("iq is injective", injective),
            AxiomCheck::new("iq(Δ(t)) = t¹ ⊗ 1 ⊗ t²", comult),
            AxiomCheck::new("iq of the second axiom is 1 ⊗ e¹t² ⊗ t¹e²", second),
            AxiomCheck::new("iq of the third axiom is e¹t² ⊗ t¹e² ⊗ 1", third),
        ]
    }

    /// Full report; with `compare_second` the checks are rerun under a
    /// second separability element when one exists.
    pub fn report(&self, compare_second: bool) -> Result<HopfReport> {
        let axioms = self.verify();
        let intermediate = self.intermediate();
        let second_e = match compare_second.then(|| second_kanzaki_element(self.ext.base())).flatten() {
            None => None,
            Some(e2) => {
                let other = HopfAlgebroid::with(self.ext, &self.qb, e2.clone())?;
                let outcomes = |a: &[AxiomCheck], b: &[AxiomCheck]| a.iter().zip(b).all(|(x, y)| x.passed == y.passed);
                Some(SecondElement {
                    e: e2.to_strings(),
                    same_antipode: other.tau == self.tau,
                    same_outcomes: outcomes(&axioms, &other.verify()) && outcomes(&intermediate, &other.intermediate()),
                })
            }
        };
        Ok(HopfReport {
            e: self.e.to_strings(),
            tau: self.tau.to_strings(),
            representative_independent: representative_independent(self.ext, &self.e),
            axioms,
            intermediate,
            second_e,
        })
    }

    pub fn passes(&self) -> bool {
        all_passed(&self.verify()) && all_passed(&self.intermediate())
    }
}
