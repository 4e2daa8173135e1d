//! The arc space ℓ²(A(G)): one amplitude per directed arc (u, v).

use super::amplitude::Amplitude;
use super::WalkError;
use crate::ifs::Graph;
use std::collections::HashMap;
use std::ops::Range;

/// Directed arcs of a graph in lexicographic (source, target) order, with
/// the index structure the walk needs: per-source ranges and the reversal
/// permutation.
#[derive(Debug, Clone)]
pub struct ArcSpace {
    arcs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    out_range: Vec<Range<usize>>,
    reverse: Vec<usize>,
    degrees: Vec<usize>,
}

impl ArcSpace {
    pub fn new(graph: &Graph) -> Self {
        let arcs = graph.arcs();
        let index: HashMap<(usize, usize), usize> =
            arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let n = graph.vertex_count();
        let mut out_range = vec![0..0; n];
        let mut start = 0;
        for u in 0..n {
            let deg = graph.degree(u);
            out_range[u] = start..start + deg;
            start += deg;
        }
        let reverse = arcs.iter().map(|&(u, v)| index[&(v, u)]).collect();
        let degrees = (0..n).map(|u| graph.degree(u)).collect();
        Self { arcs, index, out_range, reverse, degrees }
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.out_range.len()
    }

    pub fn index_of(&self, arc: (usize, usize)) -> Option<usize> {
        self.index.get(&arc).copied()
    }

    pub fn out_arcs(&self, u: usize) -> Range<usize> {
        self.out_range[u].clone()
    }

    pub fn reverse_of(&self, arc_idx: usize) -> usize {
        self.reverse[arc_idx]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u]
    }
}

/// Amplitude vector over the arcs of an [`ArcSpace`].
#[derive(Debug, Clone, PartialEq)]
pub struct ArcState<S> {
    pub amplitudes: Vec<S>,
}

impl<S: Amplitude> ArcState<S> {
    /// Unit amplitude on a single arc.
    pub fn delta(space: &ArcSpace, arc: (usize, usize)) -> Result<Self, WalkError> {
        let idx = space
            .index_of(arc)
            .ok_or(WalkError::ArcNotFound { from: arc.0, to: arc.1 })?;
        let mut amplitudes = vec![S::zero(); space.arc_count()];
        amplitudes[idx] = S::one();
        Ok(Self { amplitudes })
    }

    pub fn from_amplitudes(space: &ArcSpace, amplitudes: Vec<S>) -> Result<Self, WalkError> {
        if amplitudes.len() != space.arc_count() {
            return Err(WalkError::DimensionMismatch {
                expected: space.arc_count(),
                actual: amplitudes.len(),
            });
        }
        Ok(Self { amplitudes })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Amplitude::norm_sqr_f64).sum()
    }
}
