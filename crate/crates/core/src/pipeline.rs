//! Staged checks on one extension, producing a deterministic report.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::bialgebroid::{all_passed, AxiomCheck};
use crate::corpus::{Expectation, Expected, Flag, Quantity};
use crate::depth2::Quasibase;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::io::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Validate,
    Centralizer,
    D2,
    Bialgebroid,
    Comodule,
    Galois,
    Figure1,
    Hopf,
    Tower,
    Converse,
}

impl Stage {
    pub const ALL: [Stage; 10] = [
        Stage::Validate,
        Stage::Centralizer,
        Stage::D2,
        Stage::Bialgebroid,
        Stage::Comodule,
        Stage::Galois,
        Stage::Figure1,
        Stage::Hopf,
        Stage::Tower,
        Stage::Converse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Validate => "validate",
            Stage::Centralizer => "centralizer",
            Stage::D2 => "d2",
            Stage::Bialgebroid => "bialgebroid",
            Stage::Comodule => "comodule",
            Stage::Galois => "galois",
            Stage::Figure1 => "figure1",
            Stage::Hopf => "hopf",
            Stage::Tower => "tower",
            Stage::Converse => "converse",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Stage> {
        Stage::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown stage {s:?}")))
    }
}

/// `all` or a comma-separated list of stage names.
pub fn parse_stages(csv: &str) -> Result<BTreeSet<Stage>> {
    if csv.trim() == "all" {
        return Ok(Stage::ALL.into_iter().collect());
    }
    csv.split(',').map(|s| s.trim().parse()).collect()
}

#[derive(Clone, Debug)]
pub struct Config {
    pub stages: BTreeSet<Stage>,
    /// Largest accepted `dim A`.
    pub dim_cap: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { stages: Stage::ALL.into_iter().collect(), dim_cap: 9, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ran,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct StageReport {
    pub stage: Stage,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub checks: Vec<AxiomCheck>,
    pub values: BTreeMap<String, Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl StageReport {
    fn new(stage: Stage) -> StageReport {
        StageReport { stage, status: Status::Ran, reason: None, checks: vec![], values: BTreeMap::new(), elapsed: Duration::ZERO }
    }

    fn skip(&mut self, reason: impl Into<String>) {
        self.status = Status::Skipped;
        self.reason = Some(reason.into());
    }

    fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.into(), serde_json::to_value(v).expect("report values serialize"));
    }

    fn check(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks.push(AxiomCheck::new(name, (!ok).then(witness)));
    }

    fn extend(&mut self, prefix: &str, checks: Vec<AxiomCheck>) {
        self.checks.extend(checks.into_iter().map(|c| AxiomCheck { axiom: format!("{prefix}: {}", c.axiom), ..c }));
    }

    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpectationOutcome {
    #[serde(flatten)]
    pub expectation: Expectation,
    /// `None` when no executed stage computes the quantity.
    pub actual: Option<Value>,
    pub passed: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub case: String,
    pub field: String,
    pub seed: u64,
    pub dim_cap: usize,
    pub stages: Vec<StageReport>,
    pub expectations: Vec<ExpectationOutcome>,
    pub passed: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn flag_key(f: Flag) -> &'static str {
    match f {
        Flag::Proper => "proper",
        Flag::RightD2 => "right_d2",
        Flag::LeftD2 => "left_d2",
        Flag::HSeparable => "h_separable",
        Flag::Frobenius => "frobenius",
        Flag::Split => "split",
        Flag::BalancedLeft => "balanced_left",
        Flag::BalancedRight => "balanced_right",
        Flag::KanzakiBase => "kanzaki_base",
        Flag::RightGenerator => "right_generator",
    }
}

fn quantity_key(q: Quantity) -> &'static str {
    match q {
        Quantity::DimCentralizer => "dim_r",
        Quantity::DimTensor => "dim_tensor",
        Quantity::DimLeftEndos => "dim_left_endos",
        Quantity::DimHomRA => "dim_hom_r_a",
    }
}

fn evaluate(expectations: &[Expectation], stages: &[StageReport]) -> Vec<ExpectationOutcome> {
    let lookup = |key: &str| stages.iter().filter(|s| s.status == Status::Ran).find_map(|s| s.values.get(key)).cloned();
    expectations
        .iter()
        .map(|e| {
            let (actual, want) = match e.expected {
                Expected::Flag { flag, value } => (lookup(flag_key(flag)), json!(value)),
                Expected::Dim { quantity, value } => (lookup(quantity_key(quantity)), json!(value)),
            };
            let passed = actual.as_ref().map(|a| *a == want);
            ExpectationOutcome { expectation: *e, actual, passed }
        })
        .collect()
}

/// Quasibases computed once per run.
struct Context<'a> {
    ext: &'a Extension,
    seed: u64,
    right: Option<Option<Quasibase>>,
    left: Option<Option<Quasibase>>,
}

impl<'a> Context<'a> {
    fn right(&mut self) -> Option<Quasibase> {
        let ext = self.ext;
        self.right.get_or_insert_with(|| crate::depth2::right_d2_quasibase(ext)).clone()
    }

    fn left(&mut self) -> Option<Quasibase> {
        let ext = self.ext;
        self.left.get_or_insert_with(|| crate::depth2::left_d2_quasibase(ext)).clone()
    }
}

/// Runs the configured stages in order. `Err` only for the dimension cap;
/// mathematical preconditions that fail skip the stage with a reason.
pub fn run(case: &str, ext: &Extension, expectations: &[Expectation], cfg: &Config) -> Result<Report> {
    if ext.n() > cfg.dim_cap {
        return Err(Error::DimensionCapExceeded { what: "A".into(), dim: ext.n(), cap: cfg.dim_cap });
    }
    let mut ctx = Context { ext, seed: cfg.seed, right: None, left: None };
    let mut stages = Vec::new();
    for &stage in &cfg.stages {
        let start = Instant::now();
        let mut rep = StageReport::new(stage);
        if let Err(e) = run_stage(&mut ctx, &mut rep) {
            rep.check("stage completed", false, || e.to_string());
        }
        rep.elapsed = start.elapsed();
        stages.push(rep);
    }
    let outcomes = evaluate(expectations, &stages);
    let passed = stages.iter().all(StageReport::passed) && outcomes.iter().all(|o| o.passed != Some(false));
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        case: case.into(),
        field: ext.field().to_string(),
        seed: cfg.seed,
        dim_cap: cfg.dim_cap,
        stages,
        expectations: outcomes,
        passed,
    })
}

fn run_stage(ctx: &mut Context, rep: &mut StageReport) -> Result<()> {
    match rep.stage {
        Stage::Validate => validate(ctx.ext, rep),
        Stage::Centralizer => centralizer(ctx.ext, rep),
        Stage::D2 => d2(ctx, rep),
        Stage::Bialgebroid => bialgebroid(ctx, rep),
        Stage::Comodule => comodule(ctx, rep),
        Stage::Galois => galois(ctx, rep),
        Stage::Figure1 => figure1(ctx, rep),
        Stage::Hopf => hopf(ctx, rep),
        Stage::Tower => tower(ctx, rep),
        Stage::Converse => converse(ctx, rep),
    }
}

const NEEDS_RIGHT_D2: &str = "requires a right D2 extension";

fn validate(ext: &Extension, rep: &mut StageReport) -> Result<()> {
    rep.value("dim_a", ext.n());
    rep.value("dim_b", ext.base().dim());
    rep.value("proper", ext.is_proper());
    Ok(())
}

fn centralizer(ext: &Extension, rep: &mut StageReport) -> Result<()> {
    use crate::properties::sandwich_map_is_bijective;
    let dim_r = ext.centralizer().algebra.dim();
    rep.value("dim_r", dim_r);
    rep.value("dim_tensor", ext.tensor().dim());
    rep.value("dim_s", ext.bimodule_endos().dim());
    rep.value("dim_t", ext.tee().dim());
    rep.value("dim_left_endos", ext.left_endos().dim());
    rep.value("dim_right_endos", ext.right_endos().dim());
    rep.value("dim_hom_r_a", dim_r * ext.n());
    let h_sep = crate::depth2::is_h_separable(ext);
    rep.value("h_separable", h_sep);
    let sandwich = sandwich_map_is_bijective(ext);
    rep.value("sandwich_map_bijective", sandwich);
    // the converse needs Hom over the center of A, not over K
    if sandwich {
        rep.check("a ⊗ c ↦ (r ↦ arc) bijective implies H-separable", h_sep, || "no central projectivity certificate".into());
    }
    Ok(())
}

fn d2(ctx: &mut Context, rep: &mut StageReport) -> Result<()> {
    use crate::depth2::{d2_by_summands, verify_quasibase};
    use crate::properties::{frobenius_system, is_balanced, is_right_generator, split_projection, Side};
    let ext = ctx.ext;
    let (right, left) = (ctx.right(), ctx.left());
    rep.value("right_d2", right.is_some());
    rep.value("left_d2", left.is_some());
    for (qb, side) in [(&right, "right"), (&left, "left")] {
        if let Some(qb) = qb {
            rep.value(&format!("{side}_quasibase_len"), qb.len());
            rep.check(&format!("{side} quasibase satisfies its identity"), verify_quasibase(ext, qb), || "identity fails".into());
        }
    }
    if ext.tensor().dim() <= 16 {
        for (found, side, name) in [(right.is_some(), Side::Right, "right"), (left.is_some(), Side::Left, "left")] {
            let oracle = d2_by_summands(ext, side);
            rep.check(&format!("{name} D2 agrees with the direct-summand oracle"), oracle == found, || {
                format!("solver {found}, oracle {oracle}")
            });
        }
    }
    rep.value("balanced_left", is_balanced(ext, Side::Left));
    rep.value("balanced_right", is_balanced(ext, Side::Right));
    rep.value("frobenius", frobenius_system(ext, ctx.seed)?.is_some());
    rep.value("split", split_projection(ext).is_some());
    rep.value("right_generator", is_right_generator(ext));
    rep.value("kanzaki_base", crate::hopf::kanzaki_element(ext.base()).is_some());
    Ok(())
}

fn bialgebroid(ctx: &mut Context, rep: &mut StageReport) -> Result<()> {
    use crate::duality::{build_s, build_t, pairing_report};
    let ext = ctx.ext;
    let audit = crate::opposite::audit(ext)?;
    rep.extend("opposite", audit.d2_sides);
    rep.extend("opposite", audit.bar_maps);
    rep.extend("opposite", audit.cop_bialgebroids);
    let Some(right) = ctx.right() else {
        rep.value("built", false);
        return Ok(());
    };
    let left = ctx.left();
    let s = build_s(ext, &right, left.as_ref())?;
    let t = build_t(ext, &right, left.as_ref())?;
    rep.value("built", true);
    rep.extend("S", s.verify());
    rep.extend("T", t.verify());
    for (name, h) in [("S", &s), ("T", &t)] {
        rep.check(&format!("{name}: op is an involution"), h.op().op().same_data(h), || "op∘op differs".into());
        rep.check(&format!("{name}: cop is an involution"), h.cop().cop().same_data(h), || "cop∘cop differs".into());
        rep.extend(&format!("{name} op"), h.op().verify());
        rep.extend(&format!("{name} cop"), h.cop().verify());
    }
    let pairing = pairing_report(ext, Some(&right));
    rep.extend("pairing", pairing.checks.clone());
    rep.value("pairing", &pairing);
    Ok(())
}

fn comodule(ctx: &mut Context, rep: &mut StageReport) -> Result<()> {
    let Some(qb) = ctx.right() else {
        rep.skip(NEEDS_RIGHT_D2);
        return Ok(());
    };
    let ext = ctx.ext;
    let tower = crate::tower::Tower::with_quasibase(ext, qb.clone())?;
    rep.extend("coaction on End(_B A)", tower.coaction.verify());
    rep.extend("coaction on End(_B A)", tower.coaction_checks());
    rep.extend("action on A", tower.action_checks()?);
    let rc = crate::characterization::RightCoaction::with_quasibase(ext, qb)?;
    rep.extend("right coaction on A", rc.checks());
    let tr = rc.transported()?;
    rep.extend("transported coaction on A^op", tr.verify());
    Ok(())
}

fn galois(ctx: &mut Context, rep: &mut StageReport) -> Result<()> {
    let ext = ctx.ext;
    let ch = crate::characterization::characterization(ext)?;
    rep.check("right D2 and balanced iff the right Galois map is bijective", ch.consistent, || format!("{ch:?}"));
    rep.value("characterization", &ch);
    let Some(qb) = ctx.right() else {
        rep.value("galois_built", false);
        return Ok(());
    };
    let tower = crate::tower::Tower::with_quasibase(ext, qb)?;
    let g = tower.galois()?;
    let summary = g.summary();
    let rho = tower.rho_image();
    rep.check("coinvariants are the right multiplications", g.coinvariants.contains_subspace(&rho) && rho.contains_subspace(&g.coinvariants), || {
        format!("dim coinvariants {}, dim ρ(A) {}", g.coinvariants.dim(), rho.dim())
    });
    rep.check("Galois map is bijective", summary.bijective, || "rank deficient".into());
    rep.check("closed form is a two-sided inverse", summary.closed_form_is_inverse, || "products differ from identity".into());
    rep.value("galois_built", true);
    rep.value("galois", &summary);
    Ok(())
}

fn figure1(ctx: &mut Context, rep: &mut StageReport) -> Result<()> {
    let Some(qb) = ctx.right() else {
        rep.skip(NEEDS_RIGHT_D2);
        return Ok(());
    };
    let tower = crate::tower::Tower::with_quasibase(ctx.ext, qb)?;
    let g = tower.galois()?;
    let f = tower.factorization(&g);
    rep.check("flip is bijective", f.flip_bijective, String::new);
    rep.check("dual-basis map is bijective", f.dual_basis_map_bijective, String::new);
    rep.check("Ψ is bijective", f.psi_bijective, String::new);
    rep.check("Hom identification is bijective", f.identification_bijective, String::new);
    rep.check("composite equals the Galois map", f.composite_equals_galois_map, String::new);
    rep.value("factorization", &f);
    Ok(())
}

fn hopf(ctx: &mut Context, rep: &mut StageReport) -> Result<()> {
    let ext = ctx.ext;
    let Some(qb) = ctx.right() else {
        rep.skip(NEEDS_RIGHT_D2);
        return Ok(());
    };
    let Some(e) = crate::hopf::kanzaki_element(ext.base()) else {
        rep.skip("requires a Kanzaki separable base");
        return Ok(());
    };
    let h = crate::hopf::HopfAlgebroid::with(ext, &qb, e)?;
    let r = h.report(true)?;
    rep.check("antipode is independent of representatives", r.representative_independent, String::new);
    rep.extend("antipode", r.axioms.clone());
    rep.extend("via iq", r.intermediate.clone());
    if let Some(s) = &r.second_e {
        rep.check("axiom outcomes agree for a second separability element", s.same_outcomes, String::new);
    }
    rep.value("hopf", &r);
    Ok(())
}

fn tower(ctx: &mut Context, rep: &mut StageReport) -> Result<()> {
    let ext = ctx.ext;
    if let Some(qb) = ctx.right() {
        let tower = crate::tower::Tower::with_quasibase(ext, qb)?;
        let g = tower.galois()?;
        let endo = tower.endo_quasibase(&g)?;
        rep.check("generated quasibase of the endomorphism extension: essential identity", endo.essential_identity, String::new);
        rep.check(
            "generated quasibase of the endomorphism extension verifies",
            crate::depth2::verify_quasibase(&endo.endo, &endo.quasibase),
            String::new,
        );
        rep.check(
            "endomorphism extension is left D2 by an independent solve",
            crate::depth2::left_d2_quasibase(&endo.endo).is_some(),
            String::new,
        );
        let rg = tower.restricted_galois(&g, &endo.endo);
        rep.check("restricted Galois map is bijective onto S", rg.bijective, String::new);
        rep.check("restricted Galois map agrees with the Galois map", rg.agrees_with_galois_map, String::new);
        rep.check("restricted Galois map is anti-multiplicative", rg.anti_multiplicative, String::new);
        rep.check("restricted Galois map is unital", rg.unital, String::new);
        rep.check("restricted Galois map respects counits", rg.counit_compatible, String::new);
        rep.check("restricted Galois map respects source and target", rg.source_target_compatible, String::new);
        rep.value("restricted_galois", &rg);
    }
    if ctx.left().is_some() {
        let r = crate::corollaries::right_endo_corollary(ext)?;
        rep.check("End(A_B) | A is left D2", r.left_d2, String::new);
        rep.check("End(A_B) | A is left balanced", r.left_balanced, String::new);
        rep.extend("coaction on End(A_B)", r.coaction.clone());
        rep.check("coinvariants of End(A_B) are λ(A)", r.coinvariants_are_a, String::new);
        rep.check("left Galois map on End(A_B) is bijective", r.galois_bijective, String::new);
        rep.check("A # S → End(A_B) is bijective", r.smash_iso, String::new);
        rep.check("coaction on A # S is α₍₂₎ ⊗ a # α₍₁₎", r.smash_coaction.is_none(), || r.smash_coaction.clone().unwrap_or_default());
        rep.value("right_endo", &r);
    }
    Ok(())
}

fn converse(ctx: &mut Context, rep: &mut StageReport) -> Result<()> {
    use crate::corollaries::ConverseReport;
    let r = crate::corollaries::converse_frobenius_check(ctx.ext, ctx.seed)?;
    match &r {
        ConverseReport::Skipped { reason } => rep.skip(reason.clone()),
        ConverseReport::Checked { implication_holds, .. } => {
            rep.check("End(A_B) | A D2 implies A | B D2", *implication_holds, String::new);
        }
    }
    rep.value("converse", &r);
    Ok(())
}
