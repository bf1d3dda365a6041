//! JSON dumps of derived spaces and structures for one extension.

use serde_json::{json, Value};

use crate::bialgebroid::Bialgebroid;
use crate::depth2::{left_d2_quasibase, right_d2_quasibase, verify_quasibase, Quasibase};
use crate::duality::{build_s, build_t};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::io::{matrix_json, vector_json, AlgebraJson, SCHEMA_VERSION};
use crate::linalg::{vec_ops, Subspace};
use crate::tensor;

pub const TARGETS: &[&str] = &["R", "S", "T", "quasibases", "bialgebroids", "galois", "hopf"];

fn subspace_json(s: &Subspace) -> Value {
    json!(s.vectors().iter().map(|v| vector_json(v)).collect::<Vec<_>>())
}

fn quasibase_json(ext: &Extension, qb: &Quasibase) -> Value {
    json!({
        "side": qb.side,
        "pairs": qb.pairs.iter().map(|(s, t)| json!({"s": vector_json(s), "t": vector_json(t)})).collect::<Vec<_>>(),
        "verified": verify_quasibase(ext, qb),
    })
}

fn bialgebroid_json(h: &Bialgebroid) -> Value {
    json!({
        "chirality": h.chirality,
        "dim": h.dim(),
        "dim_base": h.base.dim(),
        "source": matrix_json(&h.source),
        "target": matrix_json(&h.target),
        "counit": matrix_json(&h.counit),
        "dim_tensor": h.tensor.dim(),
        "comultiplication": matrix_json(&h.comult),
        "axioms": h.verify(),
    })
}

/// Whether an ambient `A ⊗ A` vector commutes with every `b` modulo the
/// relations of `A ⊗_B A`.
fn is_central(ext: &Extension, w: &[crate::linalg::Scalar]) -> bool {
    let n = ext.n();
    let q = ext.tensor();
    ext.left_b_ops().iter().zip(ext.right_b_ops()).all(|(l, r)| {
        q.is_zero(&vec_ops::sub(&tensor::apply_first(l, n, w), &tensor::apply_second(r, n, w)))
    })
}

pub fn dump(ext: &Extension, target: &str) -> Result<Value> {
    let body = match target {
        "R" => {
            let r = ext.centralizer();
            json!({"dim": r.algebra.dim(), "basis_in_a": subspace_json(&r.space), "algebra": AlgebraJson::from_algebra(&r.algebra)})
        }
        "S" => json!({
            "dim": ext.bimodule_endos().dim(),
            "basis": ext.bimodule_endos().maps().iter().map(matrix_json).collect::<Vec<_>>(),
            "algebra": AlgebraJson::from_algebra(ext.s_algebra()),
        }),
        "T" => {
            let tee = ext.tee();
            json!({
                "dim": tee.dim(),
                "representatives": tee.reps.iter().map(|w| vector_json(w)).collect::<Vec<_>>(),
                "all_central": tee.reps.iter().all(|w| is_central(ext, w)),
                "algebra": AlgebraJson::from_algebra(&tee.algebra),
                "sigma": matrix_json(&tee.sigma),
                "tau": matrix_json(&tee.tau),
            })
        }
        "quasibases" => json!({
            "right": right_d2_quasibase(ext).map(|q| quasibase_json(ext, &q)),
            "left": left_d2_quasibase(ext).map(|q| quasibase_json(ext, &q)),
        }),
        "bialgebroids" => match right_d2_quasibase(ext) {
            None => json!({"built": false}),
            Some(qb) => {
                let left = left_d2_quasibase(ext);
                json!({
                    "S": bialgebroid_json(&build_s(ext, &qb, left.as_ref())?),
                    "T": bialgebroid_json(&build_t(ext, &qb, left.as_ref())?),
                })
            }
        },
        "galois" => {
            let ch = crate::characterization::characterization(ext)?;
            match right_d2_quasibase(ext) {
                None => json!({"characterization": ch}),
                Some(qb) => {
                    let tower = crate::tower::Tower::with_quasibase(ext, qb)?;
                    let g = tower.galois()?;
                    json!({
                        "characterization": ch,
                        "summary": g.summary(),
                        "coinvariants": subspace_json(&g.coinvariants),
                        "factorization": tower.factorization(&g),
                    })
                }
            }
        }
        "hopf" => match crate::hopf::HopfAlgebroid::new(ext) {
            Ok(h) => serde_json::to_value(h.report(true)?).expect("hopf report serializes"),
            Err(e) => json!({"available": false, "reason": e.to_string()}),
        },
        other => return Err(Error::UnknownDumpTarget(other.into())),
    };
    Ok(json!({"schema_version": SCHEMA_VERSION, "target": target, "data": body}))
}
