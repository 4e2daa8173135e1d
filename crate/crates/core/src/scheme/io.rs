//! JSON formats for schemes and their tensors.
//!
//! A scheme file is `{"vertex_count": n, "classes": [[...row-major 0/1...], ...]}`;
//! constructors add `"family"` / `"params"` metadata. Tensors serialize as
//! nested arrays indexed `[k][i][j]`.

use super::{
    AssociationScheme, ClassMatrix, IntersectionTensor, KreinTensor, SchemeError, SchemeFamily,
};
use crate::matrix::{IntMatrix, Tensor3};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchemeJson {
    pub vertex_count: usize,
    pub classes: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<serde_json::Value>,
}

impl SchemeJson {
    pub fn from_scheme(scheme: &AssociationScheme) -> Self {
        let (family, params) = match scheme.family() {
            Some(SchemeFamily::Johnson { v, k }) => (
                Some("johnson".to_string()),
                Some(serde_json::json!({ "v": v, "k": k })),
            ),
            Some(SchemeFamily::Grassmann { q, v, dsub }) => (
                Some("grassmann".to_string()),
                Some(serde_json::json!({ "q": q, "v": v, "d": dsub })),
            ),
            Some(SchemeFamily::Group { order, orbit_mode }) => (
                Some("group".to_string()),
                Some(serde_json::json!({ "order": order, "orbits": orbit_mode })),
            ),
            None => (None, None),
        };
        SchemeJson {
            vertex_count: scheme.vertex_count(),
            classes: scheme
                .classes()
                .iter()
                .map(|c| c.matrix().data().to_vec())
                .collect(),
            family,
            params,
        }
    }

    /// Rebuilds (and re-verifies) the scheme.
    pub fn into_scheme(self) -> Result<AssociationScheme, SchemeError> {
        AssociationScheme::from_classes(self.into_class_matrices()?)
    }

    /// Parses the class matrices without requiring the axioms to hold,
    /// for feeding `verify_scheme` with arbitrary candidates.
    pub fn into_class_matrices(self) -> Result<Vec<ClassMatrix>, SchemeError> {
        let n = self.vertex_count;
        self.classes
            .into_iter()
            .enumerate()
            .map(|(idx, flat)| {
                if flat.len() != n * n {
                    return Err(SchemeError::DimensionMismatch(idx, flat.len(), n));
                }
                let m = IntMatrix::from_fn(n, n, |r, c| flat[r * n + c]);
                ClassMatrix::new(m)
            })
            .collect()
    }
}

/// Cayley-table input for group schemes. `orbits`, when present, supplies
/// the explicit partition of the non-identity elements.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupTableJson {
    pub table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntersectionJson {
    pub p: Vec<Vec<Vec<i64>>>,
}

impl IntersectionJson {
    pub fn from_tensor(t: &IntersectionTensor) -> Self {
        Self { p: t.p.to_nested() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KreinJson {
    pub q: Vec<Vec<Vec<f64>>>,
    pub multiplicities: Vec<usize>,
    pub integral_tol: f64,
    pub rounded: Vec<Vec<Vec<i64>>>,
    pub integral: Vec<Vec<Vec<bool>>>,
    pub all_integral: bool,
    pub min_entry: f64,
}

impl KreinJson {
    pub fn from_tensor(t: &KreinTensor, multiplicities: &[usize]) -> Self {
        let view = t.integrality();
        Self {
            q: t.q.to_nested(),
            multiplicities: multiplicities.to_vec(),
            integral_tol: t.integral_tol,
            rounded: view.rounded.to_nested(),
            integral: view.integral.to_nested(),
            all_integral: view.all_integral,
            min_entry: view.min_entry,
        }
    }

    pub fn into_tensor(self) -> Option<(KreinTensor, Vec<usize>)> {
        let q = Tensor3::from_nested(self.q)?;
        Some((KreinTensor { q, integral_tol: self.integral_tol }, self.multiplicities))
    }
}
