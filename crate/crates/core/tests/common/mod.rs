#![allow(dead_code)]

use d2kit::bialgebroid::Bialgebroid;
use d2kit::corpus::{case, CorpusCase, CASE_NAMES};
use d2kit::linalg::{Field, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn cases() -> impl Iterator<Item = CorpusCase> {
    CASE_NAMES.iter().map(|n| case(n, Field::Rational).unwrap())
}

fn bump(m: &mut Matrix, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let (i, j) = (rng.gen_range(0..m.rows()), rng.gen_range(0..m.cols()));
    let v = m.get(i, j) + &m.field().one();
    m.set(i, j, v);
    (i, j)
}

/// One structure map of `h` with a single entry increased by one.
pub fn mutate(h: &Bialgebroid, rng: &mut ChaCha8Rng) -> (Bialgebroid, String) {
    let mut out = h.clone();
    let which = rng.gen_range(0..4);
    let (name, m) = match which {
        0 => ("comultiplication", &mut out.comult),
        1 => ("counit", &mut out.counit),
        2 => ("source", &mut out.source),
        _ => ("target", &mut out.target),
    };
    let (i, j) = bump(m, rng);
    (out, format!("{name}[{i}][{j}] + 1"))
}

/// Ten single-entry mutations of `h`; returns those no axiom catches.
pub fn uncaught_mutations(h: &Bialgebroid, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..10)
        .filter_map(|_| {
            let (m, what) = mutate(h, &mut rng);
            m.first_failing_axiom().is_none().then_some(what)
        })
        .collect()
}
