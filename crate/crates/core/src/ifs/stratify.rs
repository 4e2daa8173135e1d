//! Distance stratification: V_n is the set of vertices at distance n from
//! the base, carrying the unit vector Φ_n = |V_n|^{-1/2} Σ_{x∈V_n} δ_x.

use super::graph::Graph;
use super::IfsError;
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratification {
    pub base: usize,
    /// V_0..V_D, each sorted ascending
    pub strata: Vec<Vec<usize>>,
    /// stratum index per vertex; None for vertices unreachable from base
    pub stratum_of: Vec<Option<usize>>,
    pub unreachable: Vec<usize>,
}

impl Stratification {
    /// D, the index of the last stratum.
    pub fn depth(&self) -> usize {
        self.strata.len() - 1
    }

    /// Φ_n as a dense vector over all vertices.
    pub fn strata_vector(&self, n: usize, vertex_count: usize) -> Vec<f64> {
        let mut v = vec![0.0; vertex_count];
        let w = 1.0 / (self.strata[n].len() as f64).sqrt();
        for &x in &self.strata[n] {
            v[x] = w;
        }
        v
    }
}

/// BFS strata from `base`. Unreachable vertices are reported in the result
/// and excluded from every stratum.
pub fn stratify(graph: &Graph, base: usize) -> Result<Stratification, IfsError> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(IfsError::EmptyGraph);
    }
    if base >= n {
        return Err(IfsError::VertexOutOfRange { vertex: base, vertex_count: n });
    }
    let mut dist: Vec<Option<usize>> = vec![None; n];
    dist[base] = Some(0);
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].unwrap();
        for u in graph.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = Some(dv + 1);
                queue.push_back(u);
            }
        }
    }
    let depth = dist.iter().flatten().max().copied().unwrap_or(0);
    let mut strata = vec![Vec::new(); depth + 1];
    let mut unreachable = Vec::new();
    for (v, d) in dist.iter().enumerate() {
        match d {
            Some(d) => strata[*d].push(v),
            None => unreachable.push(v),
        }
    }
    Ok(Stratification { base, strata, stratum_of: dist, unreachable })
}
