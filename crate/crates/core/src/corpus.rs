//! Built-in extensions with known answers, and random small instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::groups::{self, cycles, Group};
use crate::linalg::{vec_ops, Field, Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    Proper,
    RightD2,
    LeftD2,
    HSeparable,
    Frobenius,
    Split,
    BalancedLeft,
    BalancedRight,
    KanzakiBase,
    RightGenerator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    DimCentralizer,
    DimTensor,
    DimLeftEndos,
    /// `dim Hom(R_K, A_K) = dim R · dim A`.
    DimHomRA,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Stated for this example in the literature.
    Published,
    /// Immediate from the construction.
    Immediate,
    /// A standard theorem applied to this instance.
    Theorem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Expected {
    Flag { flag: Flag, value: bool },
    Dim { quantity: Quantity, value: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    #[serde(flatten)]
    pub expected: Expected,
    pub source: Source,
}

fn flag(flag: Flag, value: bool, source: Source) -> Expectation {
    Expectation { expected: Expected::Flag { flag, value }, source }
}

fn dim(quantity: Quantity, value: usize, source: Source) -> Expectation {
    Expectation { expected: Expected::Dim { quantity, value }, source }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub expectations: Vec<Expectation>,
}

/// A named extension together with its expectations.
#[derive(Clone, Debug)]
pub struct CorpusCase {
    pub info: CaseInfo,
    pub extension: Extension,
}

pub const CASE_NAMES: &[&str] = &[
    "paper-matrix",
    "triangular-over-scalars",
    "s3-over-a3",
    "s3-over-transposition",
    "d4-over-center",
    "d4-over-reflection",
    "c4-over-c2",
    "q8-over-center",
    "scalars-into-m2",
    "scalars-into-qxq",
    "identity-m2",
    "scalars",
    "m2-over-diagonal",
];

pub fn case(name: &str, field: Field) -> Result<CorpusCase> {
    use Flag::*;
    use Source::*;
    let (description, extension, expectations) = match name {
        "paper-matrix" => (
            "M_3 over upper-triangular 2x2 matrices acting by left multiplication on themselves",
            triangular_in_m3(field)?,
            vec![
                flag(Proper, true, Immediate),
                flag(HSeparable, true, Published),
                flag(LeftD2, true, Published),
                flag(RightD2, true, Theorem),
                flag(Frobenius, false, Published),
                flag(Split, false, Published),
                flag(KanzakiBase, false, Theorem),
                dim(Quantity::DimCentralizer, 3, Published),
                dim(Quantity::DimTensor, 27, Published),
                dim(Quantity::DimHomRA, 27, Published),
                dim(Quantity::DimLeftEndos, 27, Published),
            ],
        ),
        "triangular-over-scalars" => (
            "upper-triangular 2x2 matrices over the ground field",
            scalars_into(upper_triangular(field)?),
            vec![
                flag(Proper, true, Immediate),
                flag(LeftD2, true, Published),
                flag(RightD2, true, Published),
                flag(Frobenius, false, Published),
                flag(Split, true, Immediate),
                flag(BalancedLeft, true, Immediate),
                flag(BalancedRight, true, Immediate),
                flag(KanzakiBase, true, Immediate),
                dim(Quantity::DimCentralizer, 3, Immediate),
                dim(Quantity::DimLeftEndos, 9, Published),
            ],
        ),
        "s3-over-a3" => group_case(field, "group algebra of S_3 over that of A_3", groups::symmetric3(), &[cycles(3, &[&[0, 1, 2]])])?,
        "s3-over-transposition" => {
            group_case(field, "group algebra of S_3 over that of a transposition", groups::symmetric3(), &[cycles(3, &[&[0, 1]])])?
        }
        "d4-over-center" => {
            group_case(field, "group algebra of D_4 over that of its center", groups::dihedral4(), &[cycles(4, &[&[0, 2], &[1, 3]])])?
        }
        "d4-over-reflection" => {
            group_case(field, "group algebra of D_4 over a vertex reflection", groups::dihedral4(), &[cycles(4, &[&[1, 3]])])?
        }
        "c4-over-c2" => group_case(field, "group algebra of C_4 over that of C_2", groups::cyclic(4), &[cycles(4, &[&[0, 2], &[1, 3]])])?,
        "q8-over-center" => {
            let q8 = groups::quaternion();
            let minus_one = cycles(8, &[&[0, 1], &[2, 3], &[4, 5], &[6, 7]]);
            group_case(field, "group algebra of Q_8 over that of its center", q8, &[minus_one])?
        }
        "scalars-into-m2" => (
            "2x2 matrices over the ground field",
            scalars_into(Algebra::matrix_algebra(field, 2)),
            vec![
                flag(Proper, true, Immediate),
                flag(LeftD2, true, Immediate),
                flag(RightD2, true, Immediate),
                flag(HSeparable, true, Theorem),
                flag(Frobenius, true, Theorem),
                flag(Split, true, Immediate),
                flag(KanzakiBase, true, Immediate),
            ],
        ),
        "scalars-into-qxq" => (
            "the product of two copies of the ground field over the diagonal scalars",
            scalars_into(Algebra::product_algebra(&Algebra::ground(field), &Algebra::ground(field))?),
            vec![
                flag(Proper, true, Immediate),
                flag(LeftD2, true, Immediate),
                flag(RightD2, true, Immediate),
                flag(HSeparable, false, Theorem),
                flag(Split, true, Immediate),
                flag(KanzakiBase, true, Immediate),
            ],
        ),
        "identity-m2" => (
            "2x2 matrices over themselves",
            identity(Algebra::matrix_algebra(field, 2)),
            vec![
                flag(Proper, true, Immediate),
                flag(LeftD2, true, Immediate),
                flag(RightD2, true, Immediate),
                flag(HSeparable, true, Immediate),
                flag(Frobenius, true, Immediate),
                flag(Split, true, Immediate),
                flag(BalancedLeft, true, Immediate),
                flag(BalancedRight, true, Immediate),
                flag(RightGenerator, true, Immediate),
                dim(Quantity::DimCentralizer, 1, Immediate),
                dim(Quantity::DimTensor, 4, Immediate),
            ],
        ),
        "scalars" => (
            "the ground field over itself",
            identity(Algebra::ground(field)),
            vec![
                flag(Proper, true, Immediate),
                flag(LeftD2, true, Immediate),
                flag(RightD2, true, Immediate),
                flag(HSeparable, true, Immediate),
                flag(Frobenius, true, Immediate),
                flag(Split, true, Immediate),
                flag(KanzakiBase, true, Immediate),
                dim(Quantity::DimTensor, 1, Immediate),
            ],
        ),
        "m2-over-diagonal" => (
            "2x2 matrices over the diagonal subalgebra",
            m2_over_diagonal(field)?,
            vec![
                flag(Proper, true, Immediate),
                flag(KanzakiBase, true, Immediate),
                dim(Quantity::DimCentralizer, 2, Immediate),
            ],
        ),
        other => return Err(Error::UnknownCase(other.to_string())),
    };
    let name = CASE_NAMES.iter().find(|n| **n == name).expect("listed case");
    Ok(CorpusCase { info: CaseInfo { name, description, expectations }, extension })
}

pub fn all_cases(field: Field) -> Result<Vec<CorpusCase>> {
    CASE_NAMES.iter().map(|n| case(n, field)).collect()
}

/// Case names and expectations without building the extensions.
pub fn manifest() -> Vec<CaseInfo> {
    CASE_NAMES
        .iter()
        .map(|n| case(n, Field::Rational).expect("built-in case builds").info)
        .collect()
}

fn group_case(
    field: Field,
    description: &'static str,
    g: Group,
    gens: &[Vec<usize>],
) -> Result<(&'static str, Extension, Vec<Expectation>)> {
    use Flag::*;
    use Source::*;
    let h = g.subgroup(gens)?;
    let normal = g.is_normal(&h);
    let ext = group_pair(field, &g, &h)?;
    let mut e = vec![
        flag(Proper, true, Immediate),
        flag(RightD2, normal, Published),
        flag(LeftD2, normal, Published),
        flag(RightGenerator, true, Immediate),
        flag(BalancedLeft, true, Theorem),
        flag(BalancedRight, true, Theorem),
    ];
    if field.characteristic() == 0 {
        e.push(flag(Frobenius, true, Theorem));
        e.push(flag(Split, true, Theorem));
        e.push(flag(KanzakiBase, true, Theorem));
    }
    e.push(dim(Quantity::DimTensor, g.order() * g.order() / h.len(), Immediate));
    Ok((description, ext, e))
}

/// `K H → K G` for a subgroup given by element indices.
pub fn group_pair(field: Field, g: &Group, h: &[usize]) -> Result<Extension> {
    let h = g.check_subgroup(h)?;
    let ga = Algebra::group_algebra(field, g.table())?;
    let sub: Vec<Vec<usize>> = h
        .iter()
        .map(|&x| h.iter().map(|&y| h.iter().position(|&z| z == g.table()[x][y]).expect("closed")).collect())
        .collect();
    let ha = Algebra::group_algebra(field, &sub)?;
    let emb = Matrix::from_cols(field, g.order(), h.iter().map(|&x| vec_ops::unit(field, g.order(), x)).collect());
    Extension::new(ha, ga, emb)
}

/// `K → A` via the unit.
pub fn scalars_into(a: Algebra) -> Extension {
    let f = a.field();
    let emb = Matrix::from_cols(f, a.dim(), vec![a.unit().to_vec()]);
    Extension::new(Algebra::ground(f), a, emb).expect("unit map is an extension")
}

pub fn identity(a: Algebra) -> Extension {
    let emb = Matrix::identity(a.field(), a.dim());
    Extension::new(a.clone(), a, emb).expect("identity is an extension")
}

/// Upper-triangular `2 × 2` matrices on the basis `⟨e_11, e_12, e_22⟩`.
pub fn upper_triangular(field: Field) -> Result<Algebra> {
    let m2 = Algebra::matrix_algebra(field, 2);
    let span = Subspace::span(field, 4, [0, 1, 3].map(|i| vec_ops::unit(field, 4, i)));
    m2.subalgebra(&span)
}

/// `M_3` over the image of the upper-triangular algebra under left
/// multiplication on itself: `[x, y, z] ↦ ((x,0,0),(0,x,y),(0,0,z))`.
pub fn triangular_in_m3(field: Field) -> Result<Extension> {
    let b = upper_triangular(field)?;
    let a = Algebra::matrix_algebra(field, 3);
    let unit = |i: usize, j: usize| vec_ops::unit(field, 9, i * 3 + j);
    let x = vec_ops::add(&unit(0, 0), &unit(1, 1));
    let y = unit(1, 2);
    let z = unit(2, 2);
    Extension::new(b, a, Matrix::from_cols(field, 9, vec![x, y, z]))
}

/// Diagonal `K × K` inside `M_2`.
pub fn m2_over_diagonal(field: Field) -> Result<Extension> {
    let b = Algebra::product_algebra(&Algebra::ground(field), &Algebra::ground(field))?;
    let a = Algebra::matrix_algebra(field, 2);
    let emb = Matrix::from_cols(field, 4, vec![vec_ops::unit(field, 4, 0), vec_ops::unit(field, 4, 3)]);
    Extension::new(b, a, emb)
}

/// Structured ambient algebras for random sampling.
fn random_ambient(field: Field, rng: &mut ChaCha8Rng, max_dim: usize) -> Result<Algebra> {
    let mut options: Vec<Algebra> = vec![upper_triangular(field)?, Algebra::matrix_algebra(field, 2)];
    for n in 2..=max_dim.min(6) {
        options.push(Algebra::group_algebra(field, groups::cyclic(n).table())?);
    }
    if max_dim >= 6 {
        options.push(Algebra::group_algebra(field, groups::symmetric3().table())?);
        let ut = upper_triangular(field)?;
        options.push(Algebra::product_algebra(&ut, &Algebra::ground(field))?);
        options.push(Algebra::product_algebra(&ut, &ut)?);
    }
    if max_dim >= 5 {
        options.push(Algebra::product_algebra(&Algebra::matrix_algebra(field, 2), &Algebra::ground(field))?);
    }
    options.retain(|a| a.dim() <= max_dim);
    Ok(options.choose(rng).expect("nonempty choice").clone())
}

/// Smallest unital subalgebra containing `gens`.
pub fn generated_subalgebra(a: &Algebra, gens: &[Vec<Scalar>]) -> Subspace {
    let field = a.field();
    let mut space = Subspace::span(field, a.dim(), std::iter::once(a.unit().to_vec()).chain(gens.iter().cloned()));
    loop {
        let basis = space.vectors();
        let mut products = Vec::new();
        for x in &basis {
            for y in &basis {
                products.push(a.mul_coords(x, y));
            }
        }
        let bigger = Subspace::span(field, a.dim(), basis.into_iter().chain(products));
        if bigger.dim() == space.dim() {
            return space;
        }
        space = bigger;
    }
}

/// A random subalgebra of a structured algebra of dimension at most
/// `max_dim`, reproducible from `seed`.
pub fn random_extension(field: Field, max_dim: usize, seed: u64) -> Result<Extension> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_ambient(field, &mut rng, max_dim.clamp(2, 6))?;
    let count = rng.gen_range(0..=2);
    let gens: Vec<Vec<Scalar>> = (0..count)
        .map(|_| {
            (0..a.dim())
                .map(|_| if rng.gen_bool(0.5) { field.zero() } else { field.from_i64(rng.gen_range(-2..=2)) })
                .collect()
        })
        .collect();
    let space = generated_subalgebra(&a, &gens);
    let b = a.subalgebra(&space)?;
    let emb = Matrix::from_cols(field, a.dim(), space.vectors());
    Extension::new(b, a, emb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_builds() {
        for c in all_cases(Field::Rational).unwrap() {
            assert!(!c.info.expectations.is_empty(), "{}", c.info.name);
        }
        assert!(matches!(case("nope", Field::Rational), Err(Error::UnknownCase(_))));
    }

    #[test]
    fn random_cases_are_reproducible() {
        for seed in 0..8 {
            let x = random_extension(Field::Rational, 6, seed).unwrap();
            let y = random_extension(Field::Rational, 6, seed).unwrap();
            assert!(x.total().same_data(y.total()));
            assert_eq!(x.embedding(), y.embedding());
        }
    }
}
