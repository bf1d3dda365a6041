//! Exact JSON encodings of algebras, extensions and matrices.
//!
//! Rationals are written as `"p/q"` strings and residues as integers. Every
//! file carries `schema_version`.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::linalg::{Field, Matrix, Scalar, ScalarJson};

pub const SCHEMA_VERSION: u32 = 1;

/// `structure[i][j]` holds the coordinates of `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: String,
    pub dim: usize,
    pub structure: Vec<Vec<Vec<ScalarJson>>>,
    pub unit: Vec<ScalarJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtensionJson {
    #[serde(default = "schema_version")]
    pub schema_version: u32,
    #[serde(rename = "B")]
    pub b: AlgebraJson,
    #[serde(rename = "A")]
    pub a: AlgebraJson,
    /// Rows of the `dim A × dim B` embedding matrix.
    pub embedding: Vec<Vec<ScalarJson>>,
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

pub fn vector_json(v: &[Scalar]) -> Vec<ScalarJson> {
    v.iter().map(ScalarJson::from).collect()
}

pub fn matrix_json(m: &Matrix) -> Vec<Vec<ScalarJson>> {
    (0..m.rows()).map(|i| vector_json(m.row(i))).collect()
}

fn parse_vector(v: &[ScalarJson], field: Field, len: usize, what: &str) -> Result<Vec<Scalar>> {
    if v.len() != len {
        return Err(Error::Parse(format!("{what}: expected {len} entries, found {}", v.len())));
    }
    v.iter().map(|x| x.to_scalar(field)).collect()
}

impl AlgebraJson {
    pub fn from_algebra(a: &Algebra) -> AlgebraJson {
        let d = a.dim();
        AlgebraJson {
            field: a.field().to_string(),
            dim: d,
            structure: (0..d).map(|i| (0..d).map(|j| vector_json(a.basis_product(i, j))).collect()).collect(),
            unit: vector_json(a.unit()),
        }
    }

    /// `field` overrides the declared field when given.
    pub fn to_algebra(&self, field: Option<Field>) -> Result<Algebra> {
        let f = match field {
            Some(f) => f,
            None => self.field.parse()?,
        };
        let d = self.dim;
        if self.structure.len() != d || self.structure.iter().any(|r| r.len() != d) {
            return Err(Error::Parse(format!("structure must be {d} × {d} × {d}")));
        }
        let mut s = Vec::with_capacity(d * d * d);
        for (i, row) in self.structure.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                s.extend(parse_vector(v, f, d, &format!("structure[{i}][{j}]"))?);
            }
        }
        Algebra::new(f, d, s, parse_vector(&self.unit, f, d, "unit")?)
    }
}

impl ExtensionJson {
    pub fn from_extension(ext: &Extension) -> ExtensionJson {
        ExtensionJson {
            schema_version: SCHEMA_VERSION,
            b: AlgebraJson::from_algebra(ext.base()),
            a: AlgebraJson::from_algebra(ext.total()),
            embedding: matrix_json(ext.embedding()),
        }
    }

    pub fn to_extension(&self, field: Option<Field>) -> Result<Extension> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema version {}", self.schema_version)));
        }
        let b = self.b.to_algebra(field)?;
        let a = self.a.to_algebra(field)?;
        if a.field() != b.field() {
            return Err(Error::Parse("A and B are over different fields".into()));
        }
        if self.embedding.len() != a.dim() {
            return Err(Error::Parse(format!("embedding must have {} rows", a.dim())));
        }
        let rows = self
            .embedding
            .iter()
            .enumerate()
            .map(|(i, r)| parse_vector(r, a.field(), b.dim(), &format!("embedding[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        Extension::new(b, a.clone(), Matrix::from_rows_with_cols(a.field(), rows, self.b.dim))
    }
}

pub fn parse_extension(text: &str, field: Option<Field>) -> Result<Extension> {
    let j: ExtensionJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    j.to_extension(field)
}

pub fn extension_to_string(ext: &Extension) -> String {
    serde_json::to_string_pretty(&ExtensionJson::from_extension(ext)).expect("extension JSON serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::case;

    #[test]
    fn extension_round_trip_is_exact() {
        for name in ["paper-matrix", "m2-over-diagonal"] {
            let ext = case(name, Field::Rational).unwrap().extension;
            let text = extension_to_string(&ext);
            let back = parse_extension(&text, None).unwrap();
            assert!(back.total().same_data(ext.total()));
            assert!(back.base().same_data(ext.base()));
            assert_eq!(back.embedding(), ext.embedding());
            assert_eq!(extension_to_string(&back), text);
        }
    }

    #[test]
    fn malformed_input_is_a_parse_error() {
        assert!(matches!(parse_extension("{", None), Err(Error::Parse(_))));
        let ext = case("scalars", Field::Rational).unwrap().extension;
        let mut j = ExtensionJson::from_extension(&ext);
        j.a.unit = vec![];
        assert!(matches!(j.to_extension(None), Err(Error::Parse(_))));
    }

    #[test]
    fn prime_field_scalars_are_integers() {
        let ext = case("m2-over-diagonal", Field::Prime(5)).unwrap().extension;
        let text = extension_to_string(&ext);
        assert!(text.contains("\"Fp:5\""));
        let back = parse_extension(&text, None).unwrap();
        assert_eq!(back.field(), Field::Prime(5));
    }
}
