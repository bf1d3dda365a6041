//! Audits relating an extension `A | B` to `A^op | B^op` through the bar
//! maps `a ↦ ā`, `f ↦ f̄`, `a ⊗ c ↦ c̄ ⊗ ā`. Each audit builds both sides
//! independently and compares.

use serde::Serialize;

use crate::bialgebroid::{all_passed, AxiomCheck, Bialgebroid};
use crate::characterization::RightCoaction;
use crate::depth2::{left_d2_quasibase, right_d2_quasibase, verify_quasibase, Quasibase};
use crate::duality::{s_from_quasibase, t_from_quasibase};
use crate::error::Result;
use crate::extension::Extension;
use crate::hopf::{antipode, kanzaki_element};
use crate::linalg::{rank, Matrix, Subspace};
use crate::properties::Side;
use crate::tensor;

/// Bar maps between an extension and its opposite, in basis coordinates.
#[derive(Clone, Debug)]
pub struct Bar {
    /// `R → R(A^op | B^op)`.
    pub r: Matrix,
    /// `S → S(A^op | B^op)`.
    pub s: Matrix,
    /// `T → T(A^op | B^op)`.
    pub t: Matrix,
}

impl Bar {
    pub fn new(ext: &Extension, op: &Extension) -> Option<Bar> {
        let f = ext.field();
        let n = ext.n();
        let r = ext.centralizer();
        let r_cols = (0..r.algebra.dim()).map(|i| op.a_to_r(&r.inclusion.col(i))).collect::<Option<Vec<_>>>()?;
        let s_cols = ext.bimodule_endos().maps().iter().map(|m| op.bimodule_endos().coords(m)).collect::<Option<Vec<_>>>()?;
        let t_cols = ext.tee().reps.iter().map(|w| op.tee().coords(op, &tensor::flip(n, n, w))).collect::<Option<Vec<_>>>()?;
        Some(Bar {
            r: Matrix::from_cols(f, op.centralizer().algebra.dim(), r_cols),
            s: Matrix::from_cols(f, op.bimodule_endos().dim(), s_cols),
            t: Matrix::from_cols(f, op.tee().dim(), t_cols),
        })
    }

    fn quasibase(&self, qb: &Quasibase) -> Quasibase {
        let side = match qb.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        Quasibase { side, pairs: qb.pairs.iter().map(|(g, u)| (self.s.mul_vec(g), self.t.mul_vec(u))).collect() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OppositeAudit {
    /// Right D2 of `A | B` against left D2 of `A^op | B^op`, and the mirror.
    pub d2_sides: Vec<AxiomCheck>,
    /// Bar maps are algebra isomorphisms; barred quasibases verify.
    pub bar_maps: Vec<AxiomCheck>,
    /// `S_cop`, `T_cop` against the bialgebroids built on the opposite.
    pub cop_bialgebroids: Vec<AxiomCheck>,
    /// The transported left coaction against the one built on `A`.
    pub transported_coaction: Vec<AxiomCheck>,
}

impl OppositeAudit {
    pub fn passed(&self) -> bool {
        [&self.d2_sides, &self.bar_maps, &self.cop_bialgebroids, &self.transported_coaction]
            .iter()
            .all(|r| all_passed(r))
    }
}

fn check(name: &str, ok: bool, witness: impl FnOnce() -> String) -> AxiomCheck {
    AxiomCheck::new(name, (!ok).then(witness))
}

fn iso(name: &str, dom: &crate::algebra::Algebra, cod: &crate::algebra::Algebra, m: &Matrix) -> AxiomCheck {
    let ok = m.is_square() && rank(m) == m.rows() && dom.is_homomorphism(cod, m);
    check(name, ok, || "not a bijective algebra map".into())
}

/// `H_cop` of one side against the bialgebroid built on the other side.
fn cop_matches(name: &str, h: &Bialgebroid, built: &Bialgebroid, phi: &Matrix, psi: &Matrix) -> AxiomCheck {
    AxiomCheck::new(name, h.cop().isomorphic_via(built, phi, psi))
}

/// When `A | B` is left D2: `A^op | B^op` is right D2 with `S_cop`, `T_cop`,
/// and the antipodes correspond when both bases are Kanzaki separable.
fn teecop(ext: &Extension, op: &Extension, bar: &Bar, label: &str) -> Result<Vec<AxiomCheck>> {
    let Some(left) = left_d2_quasibase(ext) else { return Ok(vec![]) };
    let Some(right_op) = right_d2_quasibase(op) else {
        return Ok(vec![AxiomCheck::new(format!("{label}: opposite is right D2"), Some("no right quasibase".into()))]);
    };
    let (s, t) = (s_from_quasibase(ext, &left), t_from_quasibase(ext, &left));
    let (s_op, t_op) = (s_from_quasibase(op, &right_op), t_from_quasibase(op, &right_op));
    let mut out = vec![
        cop_matches(&format!("{label}: S_cop matches S of the opposite"), &s, &s_op, &bar.s, &bar.r),
        cop_matches(&format!("{label}: T_cop matches T of the opposite"), &t, &t_op, &bar.t, &bar.r),
    ];
    if let (Some(e), Some(e_op)) = (kanzaki_element(ext.base()), kanzaki_element(op.base())) {
        let tau = antipode(ext, &e)?;
        let tau_op = antipode(op, &e_op)?;
        out.push(check(&format!("{label}: antipodes correspond under bar"), bar.t.mul(&tau) == tau_op.mul(&bar.t), || {
            "bar ∘ τ != τ′ ∘ bar".into()
        }));
    }
    Ok(out)
}

pub fn audit(ext: &Extension) -> Result<OppositeAudit> {
    let op = ext.opposite();
    let bar = Bar::new(ext, &op).expect("bar maps are defined on a valid extension");
    let back = Bar::new(&op, ext).expect("bar maps are defined on a valid extension");
    let (right, left) = (right_d2_quasibase(ext), left_d2_quasibase(ext));
    let (right_op, left_op) = (right_d2_quasibase(&op), left_d2_quasibase(&op));
    let d2_sides = vec![
        check("right D2 iff opposite left D2", right.is_some() == left_op.is_some(), || {
            format!("right D2 {}, opposite left D2 {}", right.is_some(), left_op.is_some())
        }),
        check("left D2 iff opposite right D2", left.is_some() == right_op.is_some(), || {
            format!("left D2 {}, opposite right D2 {}", left.is_some(), right_op.is_some())
        }),
    ];
    let mut bar_maps = vec![
        iso("bar is an isomorphism R^op → R′", &ext.centralizer().algebra.opposite(), &op.centralizer().algebra, &bar.r),
        iso("bar is an isomorphism S → S′", ext.s_algebra(), op.s_algebra(), &bar.s),
        iso("bar is an isomorphism T → T′", &ext.tee().algebra, &op.tee().algebra, &bar.t),
    ];
    for (qb, name) in [(&right, "barred right quasibase is a left quasibase"), (&left, "barred left quasibase is a right quasibase")] {
        if let Some(qb) = qb {
            bar_maps.push(check(name, verify_quasibase(&op, &bar.quasibase(qb)), || "identity fails".into()));
        }
    }
    let mut cop_bialgebroids = teecop(ext, &op, &bar, "A")?;
    cop_bialgebroids.extend(teecop(&op, ext, &back, "A^op")?);
    let transported_coaction = match right {
        None => vec![],
        Some(qb) => transported_checks(ext, qb)?,
    };
    Ok(OppositeAudit { d2_sides, bar_maps, cop_bialgebroids, transported_coaction })
}

/// Right `T`-coaction on `A` against the left `T^op_cop`-coaction on `A^op`.
fn transported_checks(ext: &Extension, qb: Quasibase) -> Result<Vec<AxiomCheck>> {
    let rc = RightCoaction::with_quasibase(ext, qb)?;
    let tr = rc.transported()?;
    let verified = tr.verify();
    let coinv = rc.coinvariants();
    let coinv_op = tr.coinvariants();
    let emb = ext.embedding();
    let b_image = Subspace::span(ext.field(), ext.n(), (0..emb.cols()).map(|i| emb.col(i)));
    let gm = tr.galois_map(&b_image)?;
    let beta_r = rc.galois_map();
    let bij_r = beta_r.is_square() && rank(&beta_r) == beta_r.rows();
    Ok(vec![
        AxiomCheck::new(
            "transported coaction is a left comodule algebra",
            verified.iter().find(|c| !c.passed).map(|c| c.axiom.clone()),
        ),
        check("coinvariants agree on both sides", coinv.contains_subspace(&coinv_op) && coinv_op.contains_subspace(&coinv), || {
            format!("dims {} and {}", coinv.dim(), coinv_op.dim())
        }),
        check("Galois maps commute with bar", rc.square_commutes(&tr)?, || "square fails".into()),
        check("Galois maps are bijective together", gm.is_bijective() == bij_r, || {
            format!("left {}, right {}", gm.is_bijective(), bij_r)
        }),
    ])
}
