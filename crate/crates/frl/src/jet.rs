//! Truncated third-order forward-mode numbers.
//!
//! [`Jet3`] carries a value together with mixed derivatives along up to three
//! seed directions: the algebra is `R[e1,e2,e3]` with `ei*ei = 0`, so products
//! truncate after the `e1*e2*e3` component. Seeding direction `u` into slot 1
//! and `v` into slot 2 makes `d12` the exact second directional derivative
//! `D^2 f[u, v]`; seeding all three slots makes `d123` the exact third
//! directional derivative. Repeated directions are fine (`D^2 f[u, u]` etc.).
//!
//! All derivative propagation is exact in floating point (no step sizes), which
//! is what lets the closed-form tensors be checked at 1e-8 and tighter.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet3 {
    pub v: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d12: f64,
    pub d13: f64,
    pub d23: f64,
    pub d123: f64,
}

impl Jet3 {
    pub const ZERO: Jet3 = Jet3::constant(0.0);

    #[inline]
    pub const fn constant(v: f64) -> Self {
        Jet3 { v, d1: 0.0, d2: 0.0, d3: 0.0, d12: 0.0, d13: 0.0, d23: 0.0, d123: 0.0 }
    }

    /// Value with first-order seeds in the three slots.
    #[inline]
    pub const fn seeded(v: f64, d1: f64, d2: f64, d3: f64) -> Self {
        Jet3 { v, d1, d2, d3, d12: 0.0, d13: 0.0, d23: 0.0, d123: 0.0 }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.v.is_finite()
            && self.d1.is_finite()
            && self.d2.is_finite()
            && self.d3.is_finite()
            && self.d12.is_finite()
            && self.d13.is_finite()
            && self.d23.is_finite()
            && self.d123.is_finite()
    }

    /// Compose with a univariate function given its derivatives at `self.v`.
    ///
    /// With `self = a + q` (`q` nilpotent), returns
    /// `p0 + p1*q + p2*q^2/2 + p3*q^3/6` in the truncated algebra.
    #[inline]
    pub fn compose(self, p0: f64, p1: f64, p2: f64, p3: f64) -> Self {
        let Jet3 { d1, d2, d3, d12, d13, d23, d123, .. } = self;
        // q^2 has only the mixed components; q^3 only the full one.
        let q2_12 = 2.0 * d1 * d2;
        let q2_13 = 2.0 * d1 * d3;
        let q2_23 = 2.0 * d2 * d3;
        let q2_123 = 2.0 * (d1 * d23 + d2 * d13 + d3 * d12);
        let q3_123 = 6.0 * d1 * d2 * d3;
        Jet3 {
            v: p0,
            d1: p1 * d1,
            d2: p1 * d2,
            d3: p1 * d3,
            d12: p1 * d12 + 0.5 * p2 * q2_12,
            d13: p1 * d13 + 0.5 * p2 * q2_13,
            d23: p1 * d23 + 0.5 * p2 * q2_23,
            d123: p1 * d123 + 0.5 * p2 * q2_123 + p3 / 6.0 * q3_123,
        }
    }

    #[inline]
    pub fn sqrt(self) -> Self {
        let r = self.v.sqrt();
        self.compose(r, 0.5 / r, -0.25 / (r * self.v), 0.375 / (r * self.v * self.v))
    }

    #[inline]
    pub fn exp(self) -> Self {
        let e = self.v.exp();
        self.compose(e, e, e, e)
    }

    /// Real power; requires a positive base.
    #[inline]
    pub fn powf(self, m: f64) -> Self {
        let a = self.v;
        let p0 = a.powf(m);
        let p1 = m * a.powf(m - 1.0);
        let p2 = m * (m - 1.0) * a.powf(m - 2.0);
        let p3 = m * (m - 1.0) * (m - 2.0) * a.powf(m - 3.0);
        self.compose(p0, p1, p2, p3)
    }

    #[inline]
    pub fn recip(self) -> Self {
        let a = self.v;
        self.compose(1.0 / a, -1.0 / (a * a), 2.0 / (a * a * a), -6.0 / (a * a * a * a))
    }

    #[inline]
    pub fn powi(self, k: u32) -> Self {
        let mut acc = Jet3::constant(1.0);
        for _ in 0..k {
            acc = acc * self;
        }
        acc
    }

    #[inline]
    pub fn scale(self, c: f64) -> Self {
        Jet3 {
            v: c * self.v,
            d1: c * self.d1,
            d2: c * self.d2,
            d3: c * self.d3,
            d12: c * self.d12,
            d13: c * self.d13,
            d23: c * self.d23,
            d123: c * self.d123,
        }
    }
}

impl Add for Jet3 {
    type Output = Jet3;
    #[inline]
    fn add(self, o: Jet3) -> Jet3 {
        Jet3 {
            v: self.v + o.v,
            d1: self.d1 + o.d1,
            d2: self.d2 + o.d2,
            d3: self.d3 + o.d3,
            d12: self.d12 + o.d12,
            d13: self.d13 + o.d13,
            d23: self.d23 + o.d23,
            d123: self.d123 + o.d123,
        }
    }
}

impl Sub for Jet3 {
    type Output = Jet3;
    #[inline]
    fn sub(self, o: Jet3) -> Jet3 {
        self + (-o)
    }
}

impl Neg for Jet3 {
    type Output = Jet3;
    #[inline]
    fn neg(self) -> Jet3 {
        self.scale(-1.0)
    }
}

impl Mul for Jet3 {
    type Output = Jet3;
    #[inline]
    fn mul(self, o: Jet3) -> Jet3 {
        let a = self;
        let b = o;
        Jet3 {
            v: a.v * b.v,
            d1: a.v * b.d1 + a.d1 * b.v,
            d2: a.v * b.d2 + a.d2 * b.v,
            d3: a.v * b.d3 + a.d3 * b.v,
            d12: a.v * b.d12 + a.d1 * b.d2 + a.d2 * b.d1 + a.d12 * b.v,
            d13: a.v * b.d13 + a.d1 * b.d3 + a.d3 * b.d1 + a.d13 * b.v,
            d23: a.v * b.d23 + a.d2 * b.d3 + a.d3 * b.d2 + a.d23 * b.v,
            d123: a.v * b.d123
                + a.d1 * b.d23
                + a.d2 * b.d13
                + a.d3 * b.d12
                + a.d12 * b.d3
                + a.d13 * b.d2
                + a.d23 * b.d1
                + a.d123 * b.v,
        }
    }
}

impl Div for Jet3 {
    type Output = Jet3;
    #[inline]
    fn div(self, o: Jet3) -> Jet3 {
        self * o.recip()
    }
}

impl Mul<f64> for Jet3 {
    type Output = Jet3;
    #[inline]
    fn mul(self, c: f64) -> Jet3 {
        self.scale(c)
    }
}

impl Add<f64> for Jet3 {
    type Output = Jet3;
    #[inline]
    fn add(self, c: f64) -> Jet3 {
        let mut r = self;
        r.v += c;
        r
    }
}

impl Sub<f64> for Jet3 {
    type Output = Jet3;
    #[inline]
    fn sub(self, c: f64) -> Jet3 {
        self + (-c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    // f(u, w) = u^2 w + exp(u w) / sqrt(w); derivatives seeded along u (slot 1)
    // and w (slots 2, 3) must match hand-computed partials.
    #[test]
    fn mixed_third_derivatives_of_composite() {
        let (u0, w0) = (0.7, 1.3);
        let u = Jet3 { v: u0, d1: 1.0, ..Jet3::ZERO };
        let w = Jet3 { v: w0, d2: 1.0, d3: 1.0, ..Jet3::ZERO };
        let f = u * u * w + (u * w).exp() / w.sqrt();

        let e = (u0 * w0 as f64).exp();
        let s = w0.sqrt();
        // f = u^2 w + e^{uw} w^{-1/2}
        let f_u = 2.0 * u0 * w0 + w0 * e / s;
        let f_uw = 2.0 * u0 + e / s + u0 * w0 * e / s - 0.5 * w0 * e / (s * w0);
        assert!(close(f.v, u0 * u0 * w0 + e / s, 1e-14));
        assert!(close(f.d1, f_u, 1e-14));
        // d/dw of f: u e^{uw} w^{-1/2} - 1/2 e^{uw} w^{-3/2} + u^2
        let f_w = u0 * e / s - 0.5 * e / (s * w0) + u0 * u0;
        assert!(close(f.d2, f_w, 1e-14));
        assert!(close(f.d3, f_w, 1e-14));
        assert!(close(f.d12, f_uw, 1e-14));
        // d^2/dw^2: u^2 e w^{-1/2} - u e w^{-3/2} + 3/4 e w^{-5/2}
        let f_ww = u0 * u0 * e / s - u0 * e / (s * w0) + 0.75 * e / (s * w0 * w0);
        assert!(close(f.d23, f_ww, 1e-14));
        // d^3/(du dw dw): differentiate f_ww w.r.t. u
        let f_uww = 2.0 * u0 * e / s + u0 * u0 * w0 * e / s - e / (s * w0) - u0 * w0 * e / (s * w0)
            + 0.75 * w0 * e / (s * w0 * w0);
        assert!(close(f.d123, f_uww, 1e-13));
    }

    #[test]
    fn powf_matches_repeated_multiplication() {
        let x = Jet3 { v: 1.9, d1: 0.3, d2: -0.2, d3: 1.1, ..Jet3::ZERO };
        let a = x.powf(3.0);
        let b = x * x * x;
        assert!(close(a.v, b.v, 1e-14));
        assert!(close(a.d123, b.d123, 1e-14));
        assert!(close(a.d12, b.d12, 1e-14));
    }

    #[test]
    fn division_roundtrip() {
        let x = Jet3 { v: 0.8, d1: 1.0, d2: 0.5, d3: -0.25, d12: 0.1, ..Jet3::ZERO };
        let y = Jet3 { v: 2.3, d1: -0.4, d2: 1.0, d3: 0.6, d23: 0.2, ..Jet3::ZERO };
        let z = (x / y) * y - x;
        for c in [z.v, z.d1, z.d2, z.d3, z.d12, z.d13, z.d23, z.d123] {
            assert!(c.abs() < 1e-14);
        }
    }
}
