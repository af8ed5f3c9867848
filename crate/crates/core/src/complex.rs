//! Minimal complex arithmetic for the roots-of-unity reduction formulas.
//!
//! Only the handful of operations those formulas need; no attempt at a
//! general complex library.

use crate::math;
use core::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl ComplexValue {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };

    #[inline]
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    #[inline]
    pub fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    /// exp(iθ)
    #[inline]
    pub fn cis(theta: f64) -> Self {
        Self::new(math::cos(theta), math::sin(theta))
    }

    #[inline]
    pub fn abs(self) -> f64 {
        // hypot without the std dependency; arguments here are never near
        // the overflow threshold
        math::sqrt(self.re * self.re + self.im * self.im)
    }

    pub fn exp(self) -> Self {
        let r = math::exp(self.re);
        Self::new(r * math::cos(self.im), r * math::sin(self.im))
    }

    /// Principal-branch logarithm.
    pub fn ln(self) -> Self {
        Self::new(math::log(self.abs()), libm::atan2(self.im, self.re))
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.re * s, self.im * s)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl Add for ComplexValue {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for ComplexValue {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for ComplexValue {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Div for ComplexValue {
    type Output = Self;
    fn div(self, d: Self) -> Self {
        let n = d.re * d.re + d.im * d.im;
        Self::new(
            (self.re * d.re + self.im * d.im) / n,
            (self.im * d.re - self.re * d.im) / n,
        )
    }
}

impl Neg for ComplexValue {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}
