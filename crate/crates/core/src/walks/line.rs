//! Coined walks on the integer line: U = S·T with the conditional shift
//! S = Π_0 ⊗ L⁺ + Π_1 ⊗ L⁻, plus the split-step variant
//! U = S_down·T(θ2)·S_up·T(θ1).

use super::WalkError;
use num::complex::Complex64;

/// 2×2 coin specification.
#[derive(Debug, Clone, PartialEq)]
pub enum CoinSpec {
    /// degree-2 Grover coin, the swap
    Grover,
    /// T = [[a, −b̄], [b, ā]] with |a|² + |b|² = 1
    Unitary2x2 { a: Complex64, b: Complex64 },
    /// R(θ) = [[cos θ, −sin θ], [sin θ, cos θ]]
    Rotation(f64),
    Hadamard,
}

impl CoinSpec {
    /// The realized matrix, validated unitary within 1e-12.
    pub fn matrix(&self) -> Result<[[Complex64; 2]; 2], WalkError> {
        let c = |re: f64| Complex64::new(re, 0.0);
        let m = match *self {
            CoinSpec::Grover => [[c(0.0), c(1.0)], [c(1.0), c(0.0)]],
            CoinSpec::Unitary2x2 { a, b } => [[a, -b.conj()], [b, a.conj()]],
            CoinSpec::Rotation(theta) => {
                [[c(theta.cos()), c(-theta.sin())], [c(theta.sin()), c(theta.cos())]]
            }
            CoinSpec::Hadamard => {
                let h = std::f64::consts::FRAC_1_SQRT_2;
                [[c(h), c(h)], [c(h), c(-h)]]
            }
        };
        let dev = unitarity_deviation(&m);
        if dev > 1e-12 {
            return Err(WalkError::NotUnitary { deviation: dev });
        }
        Ok(m)
    }
}

fn unitarity_deviation(m: &[[Complex64; 2]; 2]) -> f64 {
    let mut max_dev: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let dot: Complex64 = (0..2).map(|k| m[k][i].conj() * m[k][j]).sum();
            let expect = Complex64::new(f64::from(u8::from(i == j)), 0.0);
            max_dev = max_dev.max((dot - expect).norm());
        }
    }
    max_dev
}

/// Walker state: coin pair (coin-0, coin-1) per position on a window that
/// grows one slot per side per step, never truncating support.
#[derive(Debug, Clone, PartialEq)]
pub struct LineState {
    /// position of `amps[0]`
    pub offset: i64,
    pub amps: Vec<[Complex64; 2]>,
}

impl LineState {
    /// Unit amplitude at `position` in coin component `coin`.
    pub fn localized(position: i64, coin: usize) -> Self {
        let mut amp = [Complex64::new(0.0, 0.0); 2];
        amp[coin] = Complex64::new(1.0, 0.0);
        Self { offset: position, amps: vec![amp] }
    }

    pub fn total_probability(&self) -> f64 {
        self.amps.iter().flatten().map(Complex64::norm_sqr).sum()
    }

    pub fn amplitude(&self, position: i64) -> [Complex64; 2] {
        let idx = position - self.offset;
        if idx < 0 || idx as usize >= self.amps.len() {
            [Complex64::new(0.0, 0.0); 2]
        } else {
            self.amps[idx as usize]
        }
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        self.offset..self.offset + self.amps.len() as i64
    }

    /// Widened by one zero slot on each side.
    fn grown(&self) -> LineState {
        let zero = [Complex64::new(0.0, 0.0); 2];
        let mut amps = Vec::with_capacity(self.amps.len() + 2);
        amps.push(zero);
        amps.extend_from_slice(&self.amps);
        amps.push(zero);
        LineState { offset: self.offset - 1, amps }
    }

    fn apply_coin(&mut self, t: &[[Complex64; 2]; 2]) {
        for amp in &mut self.amps {
            let c0 = t[0][0] * amp[0] + t[0][1] * amp[1];
            let c1 = t[1][0] * amp[0] + t[1][1] * amp[1];
            *amp = [c0, c1];
        }
    }

    /// coin-0 moves +1, coin-1 moves −1 (uses the margin slots).
    fn shift_both(&mut self) {
        let n = self.amps.len();
        let zero = Complex64::new(0.0, 0.0);
        let mut next = vec![[zero; 2]; n];
        for i in 0..n {
            if i + 1 < n {
                next[i + 1][0] = self.amps[i][0];
            }
            if i > 0 {
                next[i - 1][1] = self.amps[i][1];
            }
        }
        self.amps = next;
    }

    /// coin-0 moves +1, coin-1 stays.
    fn shift_up(&mut self) {
        let n = self.amps.len();
        let zero = Complex64::new(0.0, 0.0);
        let mut moved = vec![zero; n];
        for i in 0..n.saturating_sub(1) {
            moved[i + 1] = self.amps[i][0];
        }
        for (amp, m) in self.amps.iter_mut().zip(moved) {
            amp[0] = m;
        }
    }

    /// coin-1 moves −1, coin-0 stays.
    fn shift_down(&mut self) {
        let n = self.amps.len();
        let zero = Complex64::new(0.0, 0.0);
        let mut moved = vec![zero; n];
        for i in 1..n {
            moved[i - 1] = self.amps[i][1];
        }
        for (amp, m) in self.amps.iter_mut().zip(moved) {
            amp[1] = m;
        }
    }
}

/// Snapshots of the coined walk U = S·T for t = 0..steps.
pub fn line_walk_run(
    coin: &CoinSpec,
    initial: &LineState,
    steps: usize,
) -> Result<Vec<LineState>, WalkError> {
    let t = coin.matrix()?;
    let mut snapshots = Vec::with_capacity(steps + 1);
    snapshots.push(initial.clone());
    for _ in 0..steps {
        let mut state = snapshots.last().unwrap().grown();
        state.apply_coin(&t);
        state.shift_both();
        snapshots.push(state);
    }
    Ok(snapshots)
}

/// Split-step walk: R(θ1), up-shift, R(θ2), down-shift per step.
pub fn split_step_run(
    theta1: f64,
    theta2: f64,
    initial: &LineState,
    steps: usize,
) -> Result<Vec<LineState>, WalkError> {
    let t1 = CoinSpec::Rotation(theta1).matrix()?;
    let t2 = CoinSpec::Rotation(theta2).matrix()?;
    let mut snapshots = Vec::with_capacity(steps + 1);
    snapshots.push(initial.clone());
    for _ in 0..steps {
        let mut state = snapshots.last().unwrap().grown();
        state.apply_coin(&t1);
        state.shift_up();
        state.apply_coin(&t2);
        state.shift_down();
        snapshots.push(state);
    }
    Ok(snapshots)
}
