//! Canonical JSON for coalgebras, algebras, modules and cover results.
//!
//! Structure constants are `[index, index, index, "coeff"]` rows sorted by
//! index, coefficients are decimal strings (`"3/2"`, or a residue mod p).
//! Output is pretty-printed with a trailing newline and is byte-stable.

use serde::{Deserialize, Serialize};

use crate::alg::Algebra;
use crate::coalg::Coalgebra;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Mat, Scalar, Subspace};
use crate::fdmod::{FDModule, Side};
use crate::quotient::{CoverFlags, CoverResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraJson {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    /// `[c, a, b, coeff]`: coefficient of `b_a ⊗ b_b` in `Δ(b_c)`.
    pub delta: Vec<(usize, usize, usize, String)>,
    pub eps: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    /// `[a, b, c, coeff]`: coefficient of `b_c` in `b_a · b_b`.
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleJson {
    /// Basis labels of the acting algebra.
    pub algebra: Vec<String>,
    pub side: Side,
    pub dim: usize,
    /// One matrix per algebra basis element, as rows.
    pub action: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverJson {
    #[serde(rename = "D")]
    pub d: CoalgebraJson,
    pub pi: Vec<Vec<String>>,
    pub kernel_basis: Vec<Vec<String>>,
    pub flags: CoverFlags,
}

pub fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn mat_rows(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| scalars(m.row(i))).collect()
}

pub fn basis_rows(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_vectors().iter().map(|v| scalars(v)).collect()
}

fn parse_all(field: FieldSpec, v: &[String]) -> Result<Vec<Scalar>> {
    v.iter().map(|s| field.parse_scalar(s)).collect()
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

impl From<&Coalgebra> for CoalgebraJson {
    fn from(c: &Coalgebra) -> Self {
        let mut delta: Vec<_> = c
            .entries()
            .into_iter()
            .map(|(c, a, b, v)| (c, a, b, v.to_string()))
            .collect();
        delta.sort();
        CoalgebraJson {
            field: c.field(),
            labels: c.labels().to_vec(),
            delta,
            eps: scalars(c.eps()),
        }
    }
}

impl CoalgebraJson {
    pub fn to_coalgebra(&self) -> Result<Coalgebra> {
        let f = self.field;
        let entries = self
            .delta
            .iter()
            .map(|(c, a, b, v)| Ok((*c, *a, *b, f.parse_scalar(v)?)))
            .collect::<Result<Vec<_>>>()?;
        Coalgebra::new(f, self.labels.clone(), entries, parse_all(f, &self.eps)?)
    }
}

impl From<&Algebra> for AlgebraJson {
    fn from(a: &Algebra) -> Self {
        let mut mult: Vec<_> = a
            .entries()
            .into_iter()
            .map(|(a, b, c, v)| (a, b, c, v.to_string()))
            .collect();
        mult.sort();
        AlgebraJson {
            field: a.field(),
            labels: a.labels().to_vec(),
            mult,
            unit: scalars(a.unit()),
        }
    }
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<Algebra> {
        let f = self.field;
        let entries = self
            .mult
            .iter()
            .map(|(a, b, c, v)| Ok((*a, *b, *c, f.parse_scalar(v)?)))
            .collect::<Result<Vec<_>>>()?;
        Algebra::new(f, self.labels.clone(), entries, parse_all(f, &self.unit)?)
    }
}

impl From<&FDModule> for ModuleJson {
    fn from(m: &FDModule) -> Self {
        ModuleJson {
            algebra: m.algebra().labels().to_vec(),
            side: m.side(),
            dim: m.dim(),
            action: m.action().iter().map(mat_rows).collect(),
        }
    }
}

impl From<&CoverResult> for CoverJson {
    fn from(r: &CoverResult) -> Self {
        CoverJson {
            d: CoalgebraJson::from(&r.d),
            pi: mat_rows(&r.pi),
            kernel_basis: basis_rows(&r.kernel.space),
            flags: r.flags,
        }
    }
}

pub fn coalgebra_to_json(c: &Coalgebra) -> String {
    to_string(&CoalgebraJson::from(c))
}

pub fn coalgebra_from_json(s: &str) -> Result<Coalgebra> {
    let j: CoalgebraJson = serde_json::from_str(s).map_err(parse_error)?;
    j.to_coalgebra()
}

pub fn algebra_to_json(a: &Algebra) -> String {
    to_string(&AlgebraJson::from(a))
}

pub fn algebra_from_json(s: &str) -> Result<Algebra> {
    let j: AlgebraJson = serde_json::from_str(s).map_err(parse_error)?;
    j.to_algebra()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    #[test]
    fn coalgebra_round_trip_is_byte_stable() {
        let q = Quiver::from_labels(&["a", "b"], &[("x", "a", "b")]).unwrap();
        let c = Coalgebra::path_coalgebra(FieldSpec::Rationals, &q, None).unwrap();
        let s = coalgebra_to_json(&c);
        let back = coalgebra_from_json(&s).unwrap();
        assert_eq!(back, c);
        assert_eq!(coalgebra_to_json(&back), s);
        assert!(s.contains("\"field\": \"q\""));
    }

    #[test]
    fn algebra_round_trip_over_fp() {
        let a = Algebra::triangular_example(FieldSpec::prime(3).unwrap());
        let s = algebra_to_json(&a);
        assert_eq!(algebra_from_json(&s).unwrap(), a);
    }

    #[test]
    fn rational_coefficients_parse() {
        let s = r#"{"field":"q","labels":["g"],"delta":[[0,0,0,"2/2"]],"eps":["1"]}"#;
        let c = coalgebra_from_json(s).unwrap();
        assert_eq!(c, Coalgebra::group_like(FieldSpec::Rationals, 1).with_labels(vec!["g".into()]));
    }

    #[test]
    fn errors_carry_positions() {
        match coalgebra_from_json("{\n  \"field\": 3\n}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            coalgebra_from_json(r#"{"field":"q","labels":["g"],"delta":[[0,0,0,"x"]],"eps":["1"]}"#),
            Err(Error::InvalidScalar(_))
        ));
    }
}
