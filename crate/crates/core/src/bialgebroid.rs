//! Bialgebroids over a noncommutative base given by explicit structure
//! maps, with an axiom verifier and the op/cop transforms.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::linalg::{tensor_quotient, vec_ops, Echelon, Field, Matrix, QuotientSpace, Scalar, Subspace};
use crate::tensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Left,
    Right,
}

impl Chirality {
    pub fn flip(self) -> Chirality {
        match self {
            Chirality::Left => Chirality::Right,
            Chirality::Right => Chirality::Left,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn new(axiom: impl Into<String>, witness: Option<String>) -> Self {
        AxiomCheck { axiom: axiom.into(), passed: witness.is_none(), witness }
    }
}

pub fn all_passed(report: &[AxiomCheck]) -> bool {
    report.iter().all(|c| c.passed)
}

/// First failing basis tuple of a predicate, formatted as a witness.
pub fn first_failure<I, F>(cases: I, mut holds: F) -> Option<String>
where
    I: IntoIterator<Item = Vec<usize>>,
    F: FnMut(&[usize]) -> bool,
{
    cases.into_iter().find(|c| !holds(c)).map(|c| format!("basis indices {c:?}"))
}

pub(crate) fn singles(d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d).map(|i| vec![i])
}

pub(crate) fn pairs(d: usize, e: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d).flat_map(move |i| (0..e).map(move |j| vec![i, j]))
}

/// `(H, R, s, t, Δ, ε)`. For a left bialgebroid the `R`-bimodule on `H` is
/// `r·x·r′ = t(r′)s(r)x`, for a right one `r·x·r′ = x s(r′) t(r)`.
/// `Δ` is stored in quotient coordinates of `H ⊗_R H`.
#[derive(Clone, Debug)]
pub struct Bialgebroid {
    pub chirality: Chirality,
    pub total: Algebra,
    pub base: Algebra,
    /// `dim H × dim R`.
    pub source: Matrix,
    pub target: Matrix,
    pub tensor: QuotientSpace,
    /// `dim(H ⊗_R H) × dim H`.
    pub comult: Matrix,
    /// `dim R × dim H`.
    pub counit: Matrix,
}

/// Right action of `R` on the first factor and left action on the second
/// factor, as operators on `H`, per base basis element.
fn balancing_ops(ch: Chirality, total: &Algebra, source: &Matrix, target: &Matrix) -> (Vec<Matrix>, Vec<Matrix>) {
    let k = source.cols();
    match ch {
        // x·r = t(r)x, r·y = s(r)y
        Chirality::Left => (
            (0..k).map(|i| total.left_mul_matrix(&target.col(i))).collect(),
            (0..k).map(|i| total.left_mul_matrix(&source.col(i))).collect(),
        ),
        // x·r = x s(r), r·y = y t(r)
        Chirality::Right => (
            (0..k).map(|i| total.right_mul_matrix(&source.col(i))).collect(),
            (0..k).map(|i| total.right_mul_matrix(&target.col(i))).collect(),
        ),
    }
}

/// `H ⊗_R H` for the given structure.
pub fn tensor_for(ch: Chirality, total: &Algebra, source: &Matrix, target: &Matrix) -> QuotientSpace {
    let (p, q) = balancing_ops(ch, total, source, target);
    tensor_quotient(total.field(), total.dim(), &p, total.dim(), &q)
}

impl Bialgebroid {
    /// Builds from `Δ` given on the `H`-basis as ambient `H ⊗_K H` vectors.
    pub fn from_ambient(
        chirality: Chirality,
        total: Algebra,
        base: Algebra,
        source: Matrix,
        target: Matrix,
        comult_ambient: &[Vec<Scalar>],
        counit: Matrix,
    ) -> Bialgebroid {
        let tensor = tensor_for(chirality, &total, &source, &target);
        let cols = comult_ambient.iter().map(|v| tensor.project(v)).collect();
        let comult = Matrix::from_cols(total.field(), tensor.dim(), cols);
        Bialgebroid { chirality, total, base, source, target, tensor, comult, counit }
    }

    pub fn field(&self) -> Field {
        self.total.field()
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    /// Ambient representative of `Δ(x)` for basis `x = h_i`.
    pub fn comult_rep(&self, i: usize) -> Vec<Scalar> {
        self.tensor.section(&self.comult.col(i))
    }

    pub fn comult_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.comult.mul_vec(x)
    }

    pub fn source_of(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.source.mul_vec(r)
    }

    pub fn target_of(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.target.mul_vec(r)
    }

    /// `r·x·r′` on `H`.
    pub fn bimodule_action(&self, r: &[Scalar], x: &[Scalar], r2: &[Scalar]) -> Vec<Scalar> {
        let h = &self.total;
        match self.chirality {
            Chirality::Left => h.mul_coords(&h.mul_coords(&self.target_of(r2), &self.source_of(r)), x),
            Chirality::Right => h.mul_coords(&h.mul_coords(x, &self.source_of(r2)), &self.target_of(r)),
        }
    }

    /// `r·(x ⊗ y)·r′ = (r·x) ⊗ (y·r′)` on ambient vectors.
    fn tensor_bimodule_action(&self, r: &[Scalar], w: &[Scalar], r2: &[Scalar]) -> Vec<Scalar> {
        let h = &self.total;
        let one = self.base.unit();
        let act = |a: &[Scalar], b: &[Scalar]| {
            Matrix::from_cols(self.field(), self.dim(), (0..self.dim()).map(|j| self.bimodule_action(a, &h.basis_vector(j), b)).collect())
        };
        tensor::apply_both(&act(r, one), &act(one, r2), w)
    }

    /// `(ε ⊗ id)` and `(id ⊗ ε)` on an ambient simple tensor basis.
    fn counit_left(&self, w: &[Scalar]) -> Vec<Scalar> {
        let h = &self.total;
        let d = self.dim();
        tensor::contract(d, d, w, |i, j| {
            let e = self.counit.col(i);
            match self.chirality {
                Chirality::Left => h.mul_coords(&self.source_of(&e), &h.basis_vector(j)),
                Chirality::Right => h.mul_coords(&h.basis_vector(j), &self.target_of(&e)),
            }
        })
    }

    fn counit_right(&self, w: &[Scalar]) -> Vec<Scalar> {
        let h = &self.total;
        let d = self.dim();
        tensor::contract(d, d, w, |i, j| {
            let e = self.counit.col(j);
            match self.chirality {
                Chirality::Left => h.mul_coords(&self.target_of(&e), &h.basis_vector(i)),
                Chirality::Right => h.mul_coords(&h.basis_vector(i), &self.source_of(&e)),
            }
        })
    }

    /// Operators giving the Takeuchi condition: `Δ(x)(t(r)⊗1) = Δ(x)(1⊗s(r))`
    /// (left) or `(s(r)⊗1)Δ(x) = (1⊗t(r))Δ(x)` (right), on quotient coords.
    fn takeuchi_ops(&self) -> Vec<Matrix> {
        let h = &self.total;
        let d = self.dim();
        let f = self.field();
        (0..self.base.dim())
            .map(|k| {
                let (p, q) = match self.chirality {
                    Chirality::Left => (h.right_mul_matrix(&self.target.col(k)), h.right_mul_matrix(&self.source.col(k))),
                    Chirality::Right => (h.left_mul_matrix(&self.source.col(k)), h.left_mul_matrix(&self.target.col(k))),
                };
                let a = self.tensor.induced_map(|c| tensor::apply_first(&p, d, &vec_ops::unit(f, d * d, c)));
                let b = self.tensor.induced_map(|c| tensor::apply_second(&q, d, &vec_ops::unit(f, d * d, c)));
                a.sub(&b)
            })
            .collect()
    }

    /// The Takeuchi subspace of `H ⊗_R H` in quotient coordinates.
    pub fn takeuchi_subspace(&self) -> Subspace {
        let mut e = Echelon::new(self.field(), self.tensor.dim());
        for m in self.takeuchi_ops() {
            for i in 0..m.rows() {
                e.insert(m.row(i).to_vec());
            }
        }
        e.nullspace()
    }

    /// Factorwise product of two ambient tensors.
    fn tensor_product(&self, w: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let h = &self.total;
        let d = self.dim();
        let mut out = vec_ops::zeros(self.field(), d * d);
        let zt: Vec<(usize, usize, &Scalar)> = tensor::terms(d, z).collect();
        for (i, j, x) in tensor::terms(d, w) {
            for &(k, l, y) in &zt {
                let xy = x * y;
                let (p, q) = (h.basis_product(i, k), h.basis_product(j, l));
                for (a, pa) in p.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    let c = &xy * pa;
                    for (b, qb) in q.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        out[a * d + b].add_mul(&c, qb);
                    }
                }
            }
        }
        out
    }

    /// `H ⊗_R H ⊗_R H` as `(H ⊗_R H) ⊗_R H`.
    fn triple_tensor(&self) -> QuotientSpace {
        let (p, q) = balancing_ops(self.chirality, &self.total, &self.source, &self.target);
        let d = self.dim();
        let f = self.field();
        let p2: Vec<Matrix> = p
            .iter()
            .map(|m| self.tensor.induced_map(|c| tensor::apply_second(m, d, &vec_ops::unit(f, d * d, c))))
            .collect();
        tensor_quotient(f, self.tensor.dim(), &p2, d, &q)
    }

    fn coassociativity(&self) -> Option<String> {
        let d = self.dim();
        let q2 = &self.tensor;
        let q3 = self.triple_tensor();
        let f = self.field();
        // Δ ⊗ id on ambient H⊗H lands in Q2 ⊗ H
        let delta_left = |w: &[Scalar]| -> Vec<Scalar> {
            let mut out = vec_ops::zeros(f, q2.dim() * d);
            for (i, j, c) in tensor::terms(d, w) {
                let di = self.comult.col(i);
                for (k, x) in di.iter().enumerate() {
                    if !x.is_zero() {
                        out[k * d + j].add_mul(c, x);
                    }
                }
            }
            out
        };
        // id ⊗ Δ: h_i ⊗ (h_k ⊗ h_l) regrouped as (h_i ⊗ h_k) ⊗ h_l
        let delta_right = |w: &[Scalar]| -> Vec<Scalar> {
            let mut out = vec_ops::zeros(f, q2.dim() * d);
            for (i, j, c) in tensor::terms(d, w) {
                let rep = self.comult_rep(j);
                for (k, l, x) in tensor::terms(d, &rep) {
                    let pair = q2.project_unit(i * d + k);
                    let cx = c * x;
                    for (m, y) in pair.iter().enumerate() {
                        if !y.is_zero() {
                            out[m * d + l].add_mul(&cx, y);
                        }
                    }
                }
            }
            out
        };
        first_failure(singles(d), |c| {
            let w = self.comult_rep(c[0]);
            q3.is_zero(&vec_ops::sub(&delta_left(&w), &delta_right(&w)))
        })
    }

    /// Every axiom on all basis elements or pairs; never errors.
    pub fn verify(&self) -> Vec<AxiomCheck> {
        self.run_checks(false)
    }

    /// Name of the first failing axiom, stopping there.
    pub fn first_failing_axiom(&self) -> Option<AxiomCheck> {
        self.run_checks(true).into_iter().find(|c| !c.passed)
    }

    fn run_checks(&self, stop_early: bool) -> Vec<AxiomCheck> {
        type Check<'a> = (&'static str, Box<dyn Fn() -> Option<String> + 'a>);
        let h = &self.total;
        let r = &self.base;
        let d = self.dim();
        let k = r.dim();
        let rb = move |i: usize| r.basis_vector(i);
        let hb = move |i: usize| h.basis_vector(i);
        let one_r = r.unit();
        let checks: Vec<Check> = vec![
            ("source is a unital homomorphism", Box::new(move || {
                if self.source_of(one_r) != h.unit() {
                    return Some("s(1) != 1".into());
                }
                first_failure(pairs(k, k), |c| {
                    self.source_of(&r.mul_coords(&rb(c[0]), &rb(c[1])))
                        == h.mul_coords(&self.source.col(c[0]), &self.source.col(c[1]))
                })
            })),
            ("target is a unital anti-homomorphism", Box::new(move || {
                if self.target_of(one_r) != h.unit() {
                    return Some("t(1) != 1".into());
                }
                first_failure(pairs(k, k), |c| {
                    self.target_of(&r.mul_coords(&rb(c[0]), &rb(c[1])))
                        == h.mul_coords(&self.target.col(c[1]), &self.target.col(c[0]))
                })
            })),
            ("source and target images commute", Box::new(move || {
                first_failure(pairs(k, k), |c| {
                    let (s, t) = (self.source.col(c[0]), self.target.col(c[1]));
                    h.mul_coords(&s, &t) == h.mul_coords(&t, &s)
                })
            })),
            ("comultiplication is a base bimodule map", Box::new(move || {
                // r·x·r′ = (r·x)·r′, so each side separately on generators
                first_failure(pairs(d, 2 * k), |c| {
                    let (rl, rr) = if c[1] < k { (rb(c[1]), one_r.to_vec()) } else { (one_r.to_vec(), rb(c[1] - k)) };
                    let x = self.bimodule_action(&rl, &hb(c[0]), &rr);
                    let lhs = self.comult_rep_of(&x);
                    let rhs = self.tensor_bimodule_action(&rl, &self.comult_rep(c[0]), &rr);
                    self.tensor.is_zero(&vec_ops::sub(&lhs, &rhs))
                })
            })),
            ("counit is a base bimodule map", Box::new(move || {
                first_failure(pairs(d, 2 * k), |c| {
                    let (rl, rr) = if c[1] < k { (rb(c[1]), one_r.to_vec()) } else { (one_r.to_vec(), rb(c[1] - k)) };
                    let x = self.bimodule_action(&rl, &hb(c[0]), &rr);
                    let lhs = self.counit.mul_vec(&x);
                    lhs == r.mul_coords(&r.mul_coords(&rl, &self.counit.col(c[0])), &rr)
                })
            })),
            ("coassociativity", Box::new(move || self.coassociativity())),
            ("left counit law", Box::new(move || {
                first_failure(singles(d), |c| self.counit_left(&self.comult_rep(c[0])) == hb(c[0]))
            })),
            ("right counit law", Box::new(move || {
                first_failure(singles(d), |c| self.counit_right(&self.comult_rep(c[0])) == hb(c[0]))
            })),
            ("Takeuchi condition", Box::new(move || {
                let takeuchi = self.takeuchi_subspace();
                first_failure(singles(d), |c| takeuchi.contains(&self.comult.col(c[0])))
            })),
            // meaningful only once the Takeuchi condition holds; run_checks
            // orders it after that check
            ("comultiplication is multiplicative", Box::new(move || {
                let reps: Vec<Vec<Scalar>> = (0..d).map(|i| self.comult_rep(i)).collect();
                first_failure(pairs(d, d), |c| {
                    let lhs = self.comult_rep_of(&h.mul_coords(&hb(c[0]), &hb(c[1])));
                    let rhs = self.tensor_product(&reps[c[0]], &reps[c[1]]);
                    self.tensor.is_zero(&vec_ops::sub(&lhs, &rhs))
                })
            })),
            ("comultiplication is unital", Box::new(move || {
                let one = h.unit();
                let diff = vec_ops::sub(&self.comult_rep_of(one), &vec_ops::outer(one, one));
                (!self.tensor.is_zero(&diff)).then(|| "Δ(1) != 1⊗1".into())
            })),
            ("counit is unital", Box::new(move || (self.counit.mul_vec(h.unit()) != one_r).then(|| "ε(1) != 1".into()))),
            ("counit multiplicativity", Box::new(move || {
                first_failure(pairs(d, d), |c| {
                    let (x, y) = (hb(c[0]), hb(c[1]));
                    let e = |v: &[Scalar]| self.counit.mul_vec(v);
                    let lhs = e(&h.mul_coords(&x, &y));
                    match self.chirality {
                        Chirality::Left => {
                            let ey = e(&y);
                            lhs == e(&h.mul_coords(&x, &self.source_of(&ey))) && lhs == e(&h.mul_coords(&x, &self.target_of(&ey)))
                        }
                        Chirality::Right => {
                            let ex = e(&x);
                            lhs == e(&h.mul_coords(&self.source_of(&ex), &y)) && lhs == e(&h.mul_coords(&self.target_of(&ex), &y))
                        }
                    }
                })
            })),
        ];
        let mut out = Vec::new();
        let mut takeuchi_failed = false;
        for (name, check) in checks {
            let witness = if name == "comultiplication is multiplicative" && takeuchi_failed {
                Some("not checked: Takeuchi condition fails".into())
            } else {
                check()
            };
            if name == "Takeuchi condition" {
                takeuchi_failed = witness.is_some();
            }
            let failed = witness.is_some();
            out.push(AxiomCheck::new(name, witness));
            if failed && stop_early {
                break;
            }
        }
        out
    }

    pub(crate) fn comult_rep_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.tensor.section(&self.comult_of(x))
    }

    /// `H^op` with source and target exchanged; the other chirality.
    pub fn op(&self) -> Bialgebroid {
        Bialgebroid {
            chirality: self.chirality.flip(),
            total: self.total.opposite(),
            base: self.base.clone(),
            source: self.target.clone(),
            target: self.source.clone(),
            tensor: self.tensor.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
    }

    /// Co-opposite comultiplication over `R^op`, source and target exchanged.
    pub fn cop(&self) -> Bialgebroid {
        let d = self.dim();
        let flipped: Vec<Vec<Scalar>> = (0..d).map(|i| tensor::flip(d, d, &self.comult_rep(i))).collect();
        Bialgebroid::from_ambient(
            self.chirality,
            self.total.clone(),
            self.base.opposite(),
            self.target.clone(),
            self.source.clone(),
            &flipped,
            self.counit.clone(),
        )
    }

    /// Whether `φ: H → H′` (with base map `ψ: R → R′`) transports every
    /// structure map of `self` onto `o`. `φ` must be bijective.
    pub fn isomorphic_via(&self, o: &Bialgebroid, phi: &Matrix, psi: &Matrix) -> Option<String> {
        let d = self.dim();
        if o.dim() != d || o.base.dim() != self.base.dim() || o.chirality != self.chirality {
            return Some("shapes or chirality differ".into());
        }
        if crate::linalg::rank(phi) != d {
            return Some("total map is not bijective".into());
        }
        if !self.total.is_homomorphism(&o.total, phi) {
            return Some("total map is not an algebra homomorphism".into());
        }
        if !self.base.is_homomorphism(&o.base, psi) {
            return Some("base map is not an algebra homomorphism".into());
        }
        if phi.mul(&self.source) != o.source.mul(psi) {
            return Some("source maps differ".into());
        }
        if phi.mul(&self.target) != o.target.mul(psi) {
            return Some("target maps differ".into());
        }
        if psi.mul(&self.counit) != o.counit.mul(phi) {
            return Some("counits differ".into());
        }
        first_failure(singles(d), |c| {
            let w = tensor::apply_both(phi, phi, &self.comult_rep(c[0]));
            o.tensor.project(&w) == o.comult.mul_vec(&phi.col(c[0]))
        })
        .map(|w| format!("comultiplications differ at {w}"))
    }

    /// Same structure maps entry-wise (tensor quotient coordinates agree).
    pub fn same_data(&self, o: &Bialgebroid) -> bool {
        self.chirality == o.chirality
            && self.total.same_data(&o.total)
            && self.base.same_data(&o.base)
            && self.source == o.source
            && self.target == o.target
            && self.comult == o.comult
            && self.counit == o.counit
            && self.tensor.same_relations(&o.tensor)
    }
}
