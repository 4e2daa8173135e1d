//! The Grover walk U = SC on the arc space: the coin applies the per-vertex
//! Grover matrix (2/deg(u) − δ) across the arcs leaving u, and the shift
//! reverses every arc.

use super::amplitude::Amplitude;
use super::arc::{ArcSpace, ArcState};
use super::WalkError;
use nalgebra::DMatrix;

/// The degree×degree Grover matrix: diagonal 2/deg − 1, off-diagonal 2/deg.
pub fn grover_coin(degree: usize) -> Result<DMatrix<f64>, WalkError> {
    if degree == 0 {
        return Err(WalkError::ZeroDegree);
    }
    let two_over = 2.0 / degree as f64;
    Ok(DMatrix::from_fn(degree, degree, |r, c| {
        if r == c {
            two_over - 1.0
        } else {
            two_over
        }
    }))
}

/// One U = SC application.
pub fn grover_step<S: Amplitude>(space: &ArcSpace, state: &ArcState<S>) -> ArcState<S> {
    let mut coined = vec![S::zero(); space.arc_count()];
    for u in 0..space.vertex_count() {
        let range = space.out_arcs(u);
        if range.is_empty() {
            continue;
        }
        let deg = space.degree(u);
        let two_over_deg = S::from_ratio(2, deg as i64);
        let mut sum = S::zero();
        for idx in range.clone() {
            sum = sum.add(&state.amplitudes[idx]);
        }
        let mixed = two_over_deg.mul(&sum);
        for idx in range {
            coined[idx] = mixed.sub(&state.amplitudes[idx]);
        }
    }
    let mut shifted = vec![S::zero(); space.arc_count()];
    for (idx, amp) in coined.into_iter().enumerate() {
        shifted[space.reverse_of(idx)] = amp;
    }
    ArcState { amplitudes: shifted }
}

/// Snapshots U^t(initial) for t = 0..steps. The initial state must be
/// normalized within 1e-12.
pub fn grover_walk_run<S: Amplitude>(
    space: &ArcSpace,
    initial: &ArcState<S>,
    steps: usize,
) -> Result<Vec<ArcState<S>>, WalkError> {
    let norm = initial.norm_sqr();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(WalkError::UnnormalizedInitial { norm_sqr: norm });
    }
    let mut snapshots = Vec::with_capacity(steps + 1);
    snapshots.push(initial.clone());
    for _ in 0..steps {
        let next = grover_step(space, snapshots.last().unwrap());
        snapshots.push(next);
    }
    Ok(snapshots)
}

/// Probability per vertex: P(v) = Σ over arcs leaving v of |amplitude|².
pub fn position_distribution<S: Amplitude>(space: &ArcSpace, state: &ArcState<S>) -> Vec<f64> {
    (0..space.vertex_count())
        .map(|v| space.out_arcs(v).map(|idx| state.amplitudes[idx].norm_sqr_f64()).sum())
        .collect()
}

/// Dense U = SC as an explicit matrix, the independent oracle for tests:
/// small graphs only.
pub fn dense_unitary(space: &ArcSpace) -> DMatrix<f64> {
    let m = space.arc_count();
    let mut coin = DMatrix::<f64>::zeros(m, m);
    for u in 0..space.vertex_count() {
        let range = space.out_arcs(u);
        if range.is_empty() {
            continue;
        }
        let h = grover_coin(space.degree(u)).expect("positive degree");
        for (a, i) in range.clone().enumerate() {
            for (b, j) in range.clone().enumerate() {
                coin[(i, j)] = h[(a, b)];
            }
        }
    }
    let mut shift = DMatrix::<f64>::zeros(m, m);
    for idx in 0..m {
        shift[(space.reverse_of(idx), idx)] = 1.0;
    }
    shift * coin
}
