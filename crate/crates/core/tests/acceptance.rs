//! One line per acceptance criterion; exits non-zero if any fails.
//! All comparisons are exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use d2kit::corpus::{case, group_pair, CorpusCase};
use d2kit::depth2::{d2_by_summands, is_h_separable, left_d2_quasibase, right_d2_quasibase, verify_quasibase};
use d2kit::duality::{build_s, build_t};
use d2kit::groups::{self, cycles, Group, Perm};
use d2kit::linalg::Field;
use d2kit::properties::{frobenius_system, sandwich_map, sandwich_map_is_bijective, split_projection, Side};
use d2kit::tower::Tower;

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn rational(name: &str) -> CorpusCase {
    case(name, Field::Rational).unwrap()
}

fn upper_triangular_example() -> Outcome {
    let ext = rational("paper-matrix").extension;
    let dim_r = ext.centralizer().algebra.dim();
    let dim_tensor = ext.tensor().dim();
    let dim_hom = sandwich_map(&ext).rows();
    ensure(dim_r == 3, || format!("dim R = {dim_r}"))?;
    ensure(dim_tensor == 27, || format!("dim A ⊗_B A = {dim_tensor}"))?;
    ensure(dim_hom == 27, || format!("dim Hom(R, A) = {dim_hom}"))?;
    ensure(sandwich_map_is_bijective(&ext), || "a ⊗ c ↦ (r ↦ arc) is not bijective".into())?;
    ensure(is_h_separable(&ext), || "not H-separable".into())?;
    ensure(left_d2_quasibase(&ext).is_some(), || "not left D2".into())?;
    let frob = frobenius_system(&ext, 0).map_err(|e| e.to_string())?;
    ensure(frob.is_none(), || "reported Frobenius".into())?;
    ensure(split_projection(&ext).is_none(), || "reported split".into())
}

fn group_pairs() -> Vec<(&'static str, Group, Vec<Perm>)> {
    vec![
        ("S_3 ⊃ A_3", groups::symmetric3(), vec![cycles(3, &[&[0, 1, 2]])]),
        ("S_3 ⊃ ⟨(01)⟩", groups::symmetric3(), vec![cycles(3, &[&[0, 1]])]),
        ("S_3 ⊃ S_3", groups::symmetric3(), vec![cycles(3, &[&[0, 1, 2]]), cycles(3, &[&[0, 1]])]),
        ("D_4 ⊃ center", groups::dihedral4(), vec![cycles(4, &[&[0, 2], &[1, 3]])]),
        ("D_4 ⊃ ⟨(13)⟩", groups::dihedral4(), vec![cycles(4, &[&[1, 3]])]),
        ("D_4 ⊃ rotations", groups::dihedral4(), vec![cycles(4, &[&[0, 1, 2, 3]])]),
        ("D_4 ⊃ ⟨(13), (02)⟩", groups::dihedral4(), vec![cycles(4, &[&[1, 3]]), cycles(4, &[&[0, 2]])]),
        ("C_4 ⊃ C_2", groups::cyclic(4), vec![cycles(4, &[&[0, 2], &[1, 3]])]),
        ("C_4 ⊃ 1", groups::cyclic(4), vec![]),
        ("Q_8 ⊃ center", groups::quaternion(), vec![cycles(8, &[&[0, 1], &[2, 3], &[4, 5], &[6, 7]])]),
    ]
}

fn normality_criterion() -> Outcome {
    let mut seen = Vec::new();
    for (label, g, gens) in group_pairs() {
        let h = g.subgroup(&gens).map_err(|e| e.to_string())?;
        let ext = group_pair(Field::Rational, &g, &h).map_err(|e| e.to_string())?;
        let (right, left) = (right_d2_quasibase(&ext).is_some(), left_d2_quasibase(&ext).is_some());
        let normal = g.is_normal(&h);
        ensure(right == normal && left == normal, || format!("{label}: right {right}, left {left}, normal {normal}"))?;
        seen.push((label, right));
    }
    for (label, expected) in [("S_3 ⊃ A_3", true), ("S_3 ⊃ ⟨(01)⟩", false), ("D_4 ⊃ center", true)] {
        let got = seen.iter().find(|(l, _)| *l == label).map(|p| p.1);
        ensure(got == Some(expected), || format!("{label}: D2 {got:?}, expected {expected}"))?;
    }
    Ok(())
}

fn quasibase_soundness() -> Outcome {
    for c in common::cases() {
        let ext = &c.extension;
        for (side, qb) in [(Side::Right, right_d2_quasibase(ext)), (Side::Left, left_d2_quasibase(ext))] {
            if let Some(qb) = &qb {
                ensure(verify_quasibase(ext, qb), || format!("{} {side:?}: quasibase fails", c.info.name))?;
            }
            if ext.tensor().dim() <= 16 {
                let oracle = d2_by_summands(ext, side);
                ensure(oracle == qb.is_some(), || format!("{} {side:?}: solver {}, oracle {oracle}", c.info.name, qb.is_some()))?;
            }
        }
    }
    Ok(())
}

fn bialgebroid_axioms() -> Outcome {
    for c in common::cases() {
        let ext = &c.extension;
        let Some(right) = right_d2_quasibase(ext) else { continue };
        let left = left_d2_quasibase(ext);
        let s = build_s(ext, &right, left.as_ref()).map_err(|e| e.to_string())?;
        let t = build_t(ext, &right, left.as_ref()).map_err(|e| e.to_string())?;
        for (name, h) in [("S", &s), ("T", &t)] {
            if let Some(fail) = h.first_failing_axiom() {
                return Err(format!("{} {name}: {fail:?}", c.info.name));
            }
            let missed = common::uncaught_mutations(h, 11);
            ensure(missed.is_empty(), || format!("{} {name}: mutations not caught {missed:?}", c.info.name))?;
        }
    }
    Ok(())
}

fn failed(checks: &[d2kit::bialgebroid::AxiomCheck]) -> Option<String> {
    checks.iter().find(|c| !c.passed).map(|c| format!("{}: {}", c.axiom, c.witness.as_deref().unwrap_or("")))
}

fn right_d2_towers(mut f: impl FnMut(&str, &Tower, &d2kit::tower::TowerGalois) -> Outcome) -> Outcome {
    for c in common::cases() {
        let Some(qb) = right_d2_quasibase(&c.extension) else { continue };
        let tower = Tower::with_quasibase(&c.extension, qb).map_err(|e| e.to_string())?;
        let g = tower.galois().map_err(|e| e.to_string())?;
        f(&c.info.name, &tower, &g)?;
    }
    Ok(())
}

fn main_theorem() -> Outcome {
    right_d2_towers(|name, tower, g| {
        let mut checks = tower.coaction.verify();
        checks.extend(tower.coaction_checks());
        if let Some(f) = failed(&checks) {
            return Err(format!("{name}: {f}"));
        }
        let rho = tower.rho_image();
        ensure(g.coinvariants.contains_subspace(&rho) && rho.contains_subspace(&g.coinvariants), || format!("{name}: coinvariants ≠ ρ(A)"))?;
        let s = g.summary();
        ensure(s.bijective, || format!("{name}: Galois map not bijective"))?;
        ensure(s.closed_form_is_inverse, || format!("{name}: closed form is not a two-sided inverse"))?;
        ensure(tower.factorization(g).composite_equals_galois_map, || format!("{name}: factorization composite differs"))
    })
}

fn endo_left_quasibase() -> Outcome {
    right_d2_towers(|name, tower, g| {
        let endo = tower.endo_quasibase(g).map_err(|e| e.to_string())?;
        ensure(endo.essential_identity, || format!("{name}: essential identity fails"))?;
        ensure(verify_quasibase(&endo.endo, &endo.quasibase), || format!("{name}: generated quasibase fails"))?;
        ensure(left_d2_quasibase(&endo.endo).is_some(), || format!("{name}: independent solve says not left D2"))
    })
}

fn restricted_galois_iso() -> Outcome {
    right_d2_towers(|name, tower, g| {
        let endo = tower.endo_quasibase(g).map_err(|e| e.to_string())?;
        let r = tower.restricted_galois(g, &endo.endo);
        ensure(r.bijective, || format!("{name}: not bijective onto S"))?;
        ensure(r.agrees_with_galois_map, || format!("{name}: differs from the Galois map"))?;
        ensure(r.anti_multiplicative && r.unital, || format!("{name}: multiplication tables differ"))
    })
}

fn hopf_algebroids() -> Outcome {
    use d2kit::hopf::{kanzaki_element, HopfAlgebroid};
    let mut checked = Vec::new();
    for c in common::cases() {
        let ext = &c.extension;
        if right_d2_quasibase(ext).is_none() || kanzaki_element(ext.base()).is_none() {
            continue;
        }
        let h = HopfAlgebroid::new(ext).map_err(|e| e.to_string())?;
        let r = h.report(true).map_err(|e| e.to_string())?;
        ensure(r.representative_independent, || format!("{}: τ depends on representatives", c.info.name))?;
        if let Some(f) = failed(&r.axioms).or_else(|| failed(&r.intermediate)) {
            return Err(format!("{}: {f}", c.info.name));
        }
        checked.push(c.info.name);
    }
    ensure(checked.iter().any(|n| *n == "m2-over-diagonal"), || "M_2(Q) over the diagonal was not checked".into())?;
    let f2 = case("identity-m2", Field::Prime(2)).unwrap().extension;
    ensure(kanzaki_element(f2.base()).is_none(), || "M_2(F_2) reported Kanzaki separable".into())?;
    ensure(HopfAlgebroid::new(&f2).is_err(), || "Hopf algebroid built over M_2(F_2)".into())
}

fn opposite_audits() -> Outcome {
    for c in common::cases() {
        let a = d2kit::opposite::audit(&c.extension).map_err(|e| e.to_string())?;
        if !a.passed() {
            let all: Vec<_> = [a.d2_sides, a.bar_maps, a.cop_bialgebroids, a.transported_coaction].concat();
            return Err(format!("{}: {}", c.info.name, failed(&all).unwrap_or_default()));
        }
    }
    Ok(())
}

fn characterization() -> Outcome {
    for c in common::cases() {
        let ch = d2kit::characterization::characterization(&c.extension).map_err(|e| e.to_string())?;
        ensure(ch.consistent, || format!("{}: {ch:?}", c.info.name))?;
    }
    Ok(())
}

fn converse_audit() -> Outcome {
    use d2kit::corollaries::{converse_frobenius_check, ConverseReport};
    let mut checked = 0;
    for c in common::cases() {
        match converse_frobenius_check(&c.extension, 0).map_err(|e| e.to_string())? {
            ConverseReport::Skipped { .. } => {}
            ConverseReport::Checked { implication_holds, .. } => {
                checked += 1;
                ensure(implication_holds, || format!("{}: E | A D2 but A | B not", c.info.name))?;
            }
        }
    }
    ensure(checked > 0, || "no Frobenius generator case".into())
}

fn determinism() -> Outcome {
    use d2kit::pipeline::{run, Config};
    let cfg = Config { seed: 3, ..Config::default() };
    for name in ["paper-matrix", "m2-over-diagonal", "c4-over-c2"] {
        let c = rational(name);
        let once = || run(name, &c.extension, &c.info.expectations, &cfg).map(|r| r.to_json()).map_err(|e| e.to_string());
        ensure(once()? == once()?, || format!("{name}: reports differ"))?;
    }
    let random = || d2kit::corpus::random_extension(Field::Rational, 6, 42).map(|e| d2kit::io::extension_to_string(&e));
    ensure(random().ok() == random().ok(), || "random extension differs between runs".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("upper-triangular matrix example end to end", upper_triangular_example),
        ("group algebras: D2 iff normal subgroup", normality_criterion),
        ("quasibase soundness and oracle agreement", quasibase_soundness),
        ("bialgebroid axioms and mutation detection", bialgebroid_axioms),
        ("coaction, coinvariants, Galois map, factorization", main_theorem),
        ("left D2 quasibase of the endomorphism extension", endo_left_quasibase),
        ("restricted Galois map onto S", restricted_galois_iso),
        ("Hopf algebroid antipode over Kanzaki separable bases", hopf_algebroids),
        ("opposite-algebra audits", opposite_audits),
        ("right D2 and balanced iff Galois", characterization),
        ("converse for Frobenius generator extensions", converse_audit),
        ("byte-identical reports", determinism),
    ];
    let mut all = true;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        let outcome = outcome.and_then(|()| ensure(secs < 60.0, || format!("took {secs:.1} s")));
        match &outcome {
            Ok(()) => println!("criterion {:>2} PASS  {label} ({secs:.1} s)", i + 1),
            Err(why) => println!("criterion {:>2} FAIL  {label} ({secs:.1} s): {why}", i + 1),
        }
        all &= outcome.is_ok();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
