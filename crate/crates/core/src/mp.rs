//! Scaled-integer multiprecision arithmetic.
//!
//! The Floquet relative errors decay like `Ω^{2N+5}` and reach magnitudes
//! near 1e-47 in the regimes the dispersion analysis probes; evaluating the
//! characteristic equations there is hopeless in `f64`, where the answer
//! drowns in cancellation noise long before it underflows. This module
//! provides a fixed-point representation `value = mantissa / 2^SCALE_BITS`
//! over `BigInt` mantissas: addition is exact, every other operation rounds
//! at an absolute `2^-SCALE_BITS`, which is orders of magnitude below
//! anything the analysis needs to resolve.
//!
//! Only the operations the dispersion module consumes are implemented:
//! field arithmetic, square roots, sine/cosine on a bounded range, and
//! conversions to `f64` and to log-magnitudes.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Fractional bits of the fixed-point representation (~500 decimal digits,
/// so magnitudes down to the 1e-280 reporting floor keep ~200 guard digits).
pub const SCALE_BITS: u32 = 1664;

/// A fixed-point real number, `value = mantissa / 2^SCALE_BITS`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mpf(BigInt);

impl Mpf {
    pub fn zero() -> Self {
        Mpf(BigInt::zero())
    }

    pub fn one() -> Self {
        Mpf(BigInt::from(1) << SCALE_BITS)
    }

    pub fn from_i64(v: i64) -> Self {
        Mpf(BigInt::from(v) << SCALE_BITS)
    }

    /// Exact conversion: every finite `f64` is a dyadic rational.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite());
        if x == 0.0 {
            return Self::zero();
        }
        let bits = x.abs().to_bits();
        let exp_bits = (bits >> 52) & 0x7ff;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if exp_bits == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), exp_bits as i64 - 1075)
        };
        let mut big = BigInt::from(mant);
        let shift = SCALE_BITS as i64 + exp;
        if shift >= 0 {
            big <<= shift as u32;
        } else {
            big >>= (-shift) as u32;
        }
        if x < 0.0 {
            big = -big;
        }
        Mpf(big)
    }

    /// Nearest `f64`; magnitudes below ~2^-1074 flush to zero.
    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        let mag = self.0.magnitude();
        let bits = mag.bits();
        let (top, shift) = if bits <= 63 {
            (mag.to_u64().unwrap(), 0i64)
        } else {
            let shift = bits - 63;
            ((mag >> shift).to_u64().unwrap(), shift as i64)
        };
        let e = shift - SCALE_BITS as i64;
        let mut v = top as f64;
        // Apply the power of two in safe chunks to dodge powi under/overflow.
        let mut rem = e;
        while rem != 0 {
            let step = rem.clamp(-900, 900);
            v *= 2f64.powi(step as i32);
            rem -= step;
            if v == 0.0 || v.is_infinite() {
                break;
            }
        }
        if self.0.is_negative() {
            -v
        } else {
            v
        }
    }

    /// `log2 |x|`, or `None` for zero. Accurate to ~1e-14, which is plenty
    /// for slope fits on log-log data.
    pub fn log2_abs(&self) -> Option<f64> {
        if self.0.is_zero() {
            return None;
        }
        let mag = self.0.magnitude();
        let bits = mag.bits();
        let shift = bits.saturating_sub(53);
        let top = (mag >> shift).to_u64().unwrap() as f64;
        Some(top.log2() + shift as f64 - SCALE_BITS as f64)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Mpf(self.0.abs())
    }

    /// Multiplication by a machine integer is exact.
    pub fn mul_i64(&self, k: i64) -> Self {
        Mpf(&self.0 * k)
    }

    /// Division by a machine integer rounds at one unit in the last place.
    pub fn div_i64(&self, k: i64) -> Self {
        assert!(k != 0);
        Mpf(&self.0 / k)
    }

    /// Square root of a nonnegative value via integer square root.
    pub fn sqrt(&self) -> Self {
        assert!(!self.0.is_negative(), "sqrt of negative value");
        if self.0.is_zero() {
            return Self::zero();
        }
        let scaled = self.0.magnitude() << SCALE_BITS;
        Mpf(BigInt::from(scaled.sqrt()))
    }

    /// Sine and cosine by Taylor series; intended for |x| ≲ 4 where the
    /// series converges in a couple hundred terms.
    pub fn sin_cos(&self) -> (Self, Self) {
        let x2 = self * self;
        // sin: t_0 = x, t_{k+1} = -t_k x^2 / ((2k+2)(2k+3))
        let mut sin = self.clone();
        let mut term = self.clone();
        let mut k: i64 = 0;
        while !term.0.is_zero() {
            term = &(-&term) * &x2;
            term = term.div_i64((2 * k + 2) * (2 * k + 3));
            sin = &sin + &term;
            k += 1;
            assert!(k < 10_000, "sin series failed to terminate");
        }
        // cos: t_0 = 1, t_{k+1} = -t_k x^2 / ((2k+1)(2k+2))
        let mut cos = Mpf::one();
        let mut term = Mpf::one();
        let mut k: i64 = 0;
        while !term.0.is_zero() {
            term = &(-&term) * &x2;
            term = term.div_i64((2 * k + 1) * (2 * k + 2));
            cos = &cos + &term;
            k += 1;
            assert!(k < 10_000, "cos series failed to terminate");
        }
        (sin, cos)
    }
}

impl PartialOrd for Mpf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.0.cmp(&other.0))
    }
}

impl Add for &Mpf {
    type Output = Mpf;
    fn add(self, rhs: &Mpf) -> Mpf {
        Mpf(&self.0 + &rhs.0)
    }
}

impl Sub for &Mpf {
    type Output = Mpf;
    fn sub(self, rhs: &Mpf) -> Mpf {
        Mpf(&self.0 - &rhs.0)
    }
}

impl Mul for &Mpf {
    type Output = Mpf;
    fn mul(self, rhs: &Mpf) -> Mpf {
        Mpf((&self.0 * &rhs.0) >> SCALE_BITS)
    }
}

impl Div for &Mpf {
    type Output = Mpf;
    fn div(self, rhs: &Mpf) -> Mpf {
        assert!(!rhs.0.is_zero(), "division by zero");
        Mpf((&self.0 << SCALE_BITS) / &rhs.0)
    }
}

impl Neg for &Mpf {
    type Output = Mpf;
    fn neg(self) -> Mpf {
        Mpf(-&self.0)
    }
}

/// Complex number over [`Mpf`].
#[derive(Debug, Clone, PartialEq)]
pub struct Cmpf {
    pub re: Mpf,
    pub im: Mpf,
}

impl Cmpf {
    pub fn new(re: Mpf, im: Mpf) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Mpf::zero(), Mpf::zero())
    }

    pub fn one() -> Self {
        Self::new(Mpf::one(), Mpf::zero())
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Self::new(Mpf::from_f64(re), Mpf::from_f64(im))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sqr();
        let num = self.mul(&o.conj());
        Self::new(&num.re / &d, &num.im / &d)
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        Self::new(self.re.mul_i64(k), self.im.mul_i64(k))
    }

    pub fn div_i64(&self, k: i64) -> Self {
        Self::new(self.re.div_i64(k), self.im.div_i64(k))
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    pub fn norm_sqr(&self) -> Mpf {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn norm(&self) -> Mpf {
        self.norm_sqr().sqrt()
    }

    /// Principal square root via the real-decomposition formulas.
    pub fn sqrt(&self) -> Self {
        if self.re.is_zero() && self.im.is_zero() {
            return Self::zero();
        }
        let r = self.norm();
        let two = Mpf::from_i64(2);
        if !self.re.is_negative() {
            let u = (&(&r + &self.re) / &two).sqrt();
            let v = &self.im / &u.mul_i64(2);
            Self::new(u, v)
        } else {
            let v_mag = (&(&r - &self.re) / &two).sqrt();
            let v = if self.im.is_negative() {
                -&v_mag
            } else {
                v_mag
            };
            let u = &self.im / &v.mul_i64(2);
            Self::new(u, v)
        }
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// `log10 |z|`, or `None` for zero.
    pub fn log10_abs(&self) -> Option<f64> {
        self.norm_sqr()
            .log2_abs()
            .map(|l2| 0.5 * l2 * std::f64::consts::LOG10_2)
    }
}

/// `e^{iΩ}` as (cos Ω, sin Ω).
pub fn exp_i(omega: &Mpf) -> Cmpf {
    let (s, c) = omega.sin_cos();
    Cmpf::new(c, s)
}
