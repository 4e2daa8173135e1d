//! Scalar abstraction for walk amplitudes.
//!
//! The Grover coin has rational entries 2/d and 2/d − 1, so a walk started
//! from a rational state can be tracked exactly in `BigRational`; general
//! coins use `Complex64`.

use num::complex::Complex64;
use num::{BigInt, BigRational, FromPrimitive, Signed, ToPrimitive, Zero};

pub trait Amplitude: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale_usize(&self, n: usize) -> Self;
    /// |amplitude|² as f64 (lossy for rationals, used for norms/output).
    fn norm_sqr_f64(&self) -> f64;
    fn is_zero(&self) -> bool;
}

impl Amplitude for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn scale_usize(&self, n: usize) -> Self {
        self * n as f64
    }

    fn norm_sqr_f64(&self) -> f64 {
        self.norm_sqr()
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

impl Amplitude for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }

    fn one() -> Self {
        BigRational::from_integer(1.into())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn scale_usize(&self, n: usize) -> Self {
        self * BigRational::from_usize(n).expect("usize fits in BigRational")
    }

    fn norm_sqr_f64(&self) -> f64 {
        let sq = self * self;
        sq.to_f64().unwrap_or_else(|| {
            sq.numer().to_f64().unwrap_or(f64::NAN) / sq.denom().to_f64().unwrap_or(f64::NAN)
        })
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Real/imaginary view for serialization.
pub trait RealParts {
    fn re_im(&self) -> (f64, f64);
}

impl RealParts for Complex64 {
    fn re_im(&self) -> (f64, f64) {
        (self.re, self.im)
    }
}

impl RealParts for BigRational {
    fn re_im(&self) -> (f64, f64) {
        let v = self.to_f64().unwrap_or_else(|| {
            let s = if self.is_negative() { -1.0 } else { 1.0 };
            s * self.norm_sqr_f64().sqrt()
        });
        (v, 0.0)
    }
}
