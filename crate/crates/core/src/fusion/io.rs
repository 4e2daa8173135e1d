//! JSON formats: ring `{"labels": [...], "N": [[[...]]], "dual": [...]}`;
//! models add `"S"`, `"twists"` (re/im pairs), `"qdims"`.

use super::model::AnyonModelData;
use super::ring::FusionRing;
use super::FusionError;
use crate::matrix::Tensor3;
use nalgebra::DMatrix;
use num::complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FusionRingJson {
    pub labels: Vec<String>,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<i64>>>,
    pub dual: Vec<usize>,
}

impl FusionRingJson {
    pub fn from_ring(ring: &FusionRing) -> Self {
        let dim = ring.rank();
        let n = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| (0..dim).map(|c| ring.n(a, b, c) as i64).collect())
                    .collect()
            })
            .collect();
        Self { labels: ring.labels().to_vec(), n, dual: ring.dual().to_vec() }
    }

    pub fn into_ring(self) -> Result<FusionRing, FusionError> {
        let tensor_i64 = Tensor3::from_nested(self.n).ok_or(FusionError::RaggedTensor)?;
        if let Some((idx, &v)) = tensor_i64.iter_indexed().find(|(_, &v)| v < 0) {
            return Err(FusionError::NegativeEntry { index: idx, value: v });
        }
        let n = Tensor3::from_fn(tensor_i64.dim(), |a, b, c| tensor_i64[(a, b, c)] as u64);
        FusionRing::new(self.labels, n, self.dual)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnyonModelJson {
    #[serde(flatten)]
    pub ring: FusionRingJson,
    #[serde(rename = "S")]
    pub s: Vec<Vec<f64>>,
    /// unit-modulus twists as (re, im)
    pub twists: Vec<(f64, f64)>,
    pub qdims: Vec<f64>,
}

impl AnyonModelJson {
    pub fn from_model(model: &AnyonModelData) -> Self {
        let r = model.ring.rank();
        let s = (0..r).map(|i| (0..r).map(|j| model.s_matrix[(i, j)]).collect()).collect();
        Self {
            ring: FusionRingJson::from_ring(&model.ring),
            s,
            twists: model.twists.iter().map(|t| (t.re, t.im)).collect(),
            qdims: model.qdims.clone(),
        }
    }

    pub fn into_model(self) -> Result<AnyonModelData, FusionError> {
        let ring = self.ring.into_ring()?;
        let r = ring.rank();
        if self.s.len() != r || self.s.iter().any(|row| row.len() != r) {
            return Err(FusionError::RaggedTensor);
        }
        let s_matrix = DMatrix::from_fn(r, r, |i, j| self.s[i][j]);
        let twists = self.twists.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
        Ok(AnyonModelData { ring, s_matrix, twists, qdims: self.qdims })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::model::ising_model;

    #[test]
    fn model_json_roundtrip() {
        let model = ising_model();
        let json = AnyonModelJson::from_model(&model);
        let text = serde_json::to_string(&json).unwrap();
        let back: AnyonModelJson = serde_json::from_str(&text).unwrap();
        let rebuilt = back.into_model().unwrap();
        assert_eq!(rebuilt.ring, model.ring);
        assert_eq!(rebuilt.s_matrix, model.s_matrix);
        assert_eq!(rebuilt.twists, model.twists);
    }

    #[test]
    fn negative_entry_rejected() {
        let json = FusionRingJson {
            labels: vec!["1".into()],
            n: vec![vec![vec![-1]]],
            dual: vec![0],
        };
        assert!(matches!(json.into_ring(), Err(FusionError::NegativeEntry { .. })));
    }
}
