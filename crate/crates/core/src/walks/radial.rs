//! Grover walk on the truncated degree-d tree, reduced to the symmetric
//! sector.
//!
//! Started from a single root arc, the walk stays inside the subspace fixed
//! by the tree automorphisms stabilizing that arc. The orbits are: arcs in
//! the branch under the marked child ("main") vs. arcs under the other
//! d − 1 root children ("side"), by edge level and direction. Tracking one
//! amplitude per orbit simulates trees far too large to hold explicitly
//! (a depth-102 degree-3 tree has ~1.5e31 vertices) with 4·depth numbers.

use super::amplitude::Amplitude;
use super::WalkError;

/// One amplitude per arc orbit. `main_out[n]` is the orbit of arcs from
/// level n to level n+1 inside the main branch; `main_in[n]` its reversal;
/// `side_*` the same under the other root children. Level 0 out-arcs are
/// the root arcs.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialState<S> {
    pub main_out: Vec<S>,
    pub main_in: Vec<S>,
    pub side_out: Vec<S>,
    pub side_in: Vec<S>,
}

impl<S: Amplitude> RadialState<S> {
    fn zero(depth: usize) -> Self {
        Self {
            main_out: vec![S::zero(); depth],
            main_in: vec![S::zero(); depth],
            side_out: vec![S::zero(); depth],
            side_in: vec![S::zero(); depth],
        }
    }
}

#[derive(Debug, Clone)]
pub struct RadialTreeWalk {
    degree: usize,
    depth: usize,
}

impl RadialTreeWalk {
    pub fn new(degree: usize, depth: usize) -> Result<Self, WalkError> {
        if degree < 2 {
            return Err(WalkError::BadParameter(
                "radial tree walk needs degree >= 2".into(),
            ));
        }
        if depth == 0 {
            return Err(WalkError::BadParameter("radial tree walk needs depth >= 1".into()));
        }
        Ok(Self { degree, depth })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Unit amplitude on the marked root arc (the paper's vacuum split).
    pub fn initial<S: Amplitude>(&self) -> RadialState<S> {
        let mut state = RadialState::zero(self.depth);
        state.main_out[0] = S::one();
        state
    }

    /// Arcs in the (branch, level, direction) orbit: main has (d−1)^n arcs
    /// at level n, side has (d−1)^{n+1}.
    pub fn orbit_count(&self, level: usize, main: bool) -> f64 {
        let b = (self.degree - 1) as f64;
        if main {
            b.powi(level as i32)
        } else {
            b.powi(level as i32 + 1)
        }
    }

    /// One U = SC step on the orbit amplitudes.
    pub fn step<S: Amplitude>(&self, state: &RadialState<S>) -> RadialState<S> {
        let d = self.degree;
        let depth = self.depth;
        let two_over_d = S::from_ratio(2, d as i64);
        let mut coined = RadialState::zero(depth);

        // root: 1 main arc and d−1 side arcs leave it
        let root_sum = state.main_out[0].add(&state.side_out[0].scale_usize(d - 1));
        let mixed = two_over_d.mul(&root_sum);
        coined.main_out[0] = mixed.sub(&state.main_out[0]);
        coined.side_out[0] = mixed.sub(&state.side_out[0]);

        // interior vertices at level n: the up-arc (in[n-1]) and d−1
        // down-arcs (out[n]) leave each one
        for n in 1..depth {
            let sum = state.main_in[n - 1].add(&state.main_out[n].scale_usize(d - 1));
            let mixed = two_over_d.mul(&sum);
            coined.main_in[n - 1] = mixed.sub(&state.main_in[n - 1]);
            coined.main_out[n] = mixed.sub(&state.main_out[n]);

            let sum = state.side_in[n - 1].add(&state.side_out[n].scale_usize(d - 1));
            let mixed = two_over_d.mul(&sum);
            coined.side_in[n - 1] = mixed.sub(&state.side_in[n - 1]);
            coined.side_out[n] = mixed.sub(&state.side_out[n]);
        }

        // leaves have degree 1: identity coin on their single up-arc
        coined.main_in[depth - 1] = state.main_in[depth - 1].clone();
        coined.side_in[depth - 1] = state.side_in[depth - 1].clone();

        // shift reverses every arc, i.e. swaps out/in per orbit
        RadialState {
            main_out: coined.main_in,
            main_in: coined.main_out,
            side_out: coined.side_in,
            side_in: coined.side_out,
        }
    }

    /// Total probability, weighting each orbit amplitude by its arc count.
    pub fn norm_sqr<S: Amplitude>(&self, state: &RadialState<S>) -> f64 {
        let mut total = 0.0;
        for n in 0..self.depth {
            let main_count = self.orbit_count(n, true);
            let side_count = self.orbit_count(n, false);
            total += main_count
                * (state.main_out[n].norm_sqr_f64() + state.main_in[n].norm_sqr_f64());
            total += side_count
                * (state.side_out[n].norm_sqr_f64() + state.side_in[n].norm_sqr_f64());
        }
        total
    }

    /// Snapshots for t = 0..steps starting from the vacuum split.
    pub fn run<S: Amplitude>(&self, steps: usize) -> Vec<RadialState<S>> {
        let mut snapshots = Vec::with_capacity(steps + 1);
        snapshots.push(self.initial::<S>());
        for _ in 0..steps {
            let next = self.step(snapshots.last().unwrap());
            snapshots.push(next);
        }
        snapshots
    }
}
