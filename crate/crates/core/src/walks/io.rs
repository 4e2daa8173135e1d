//! CSV snapshot formats. Arc walks: `step,source,target,re,im,prob` with
//! rows grouped by step in arc order; line walks: `step,position,coin,re,im`.

use super::amplitude::{Amplitude, RealParts};
use super::arc::{ArcSpace, ArcState};
use super::line::LineState;
use std::fmt::Write;

pub fn arc_snapshots_csv<S: Amplitude + RealParts>(
    space: &ArcSpace,
    snapshots: &[ArcState<S>],
) -> String {
    let mut out = String::from("step,source,target,re,im,prob\n");
    for (step, snap) in snapshots.iter().enumerate() {
        for (idx, &(source, target)) in space.arcs().iter().enumerate() {
            let amp = &snap.amplitudes[idx];
            let (re, im) = amp.re_im();
            let prob = amp.norm_sqr_f64();
            writeln!(out, "{step},{source},{target},{re},{im},{prob}").unwrap();
        }
    }
    out
}

pub fn line_snapshots_csv(snapshots: &[LineState]) -> String {
    let mut out = String::from("step,position,coin,re,im\n");
    for (step, snap) in snapshots.iter().enumerate() {
        for position in snap.positions() {
            let amp = snap.amplitude(position);
            for (coin, a) in amp.iter().enumerate() {
                writeln!(out, "{step},{position},{coin},{},{}", a.re, a.im).unwrap();
            }
        }
    }
    out
}
