//! Truncated power series with exact rational coefficients.
//!
//! A `Series` of order `N` is known modulo `z^N` and stores exactly `N`
//! coefficients. Binary operations return the smaller of the two orders;
//! differentiation loses one order.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Series of order `coeffs.len()`.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![Rat::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Series::from_poly(&Poly::one(), order)
    }

    /// Embeds `p` modulo `z^order`.
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Series::new((0..order).map(|k| p.coeff(k)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&Rat> {
        self.coeffs.get(n).ok_or(Error::IndexBeyondOrder {
            index: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.coeffs.iter().take(order).cloned().collect())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Series::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `z^k`; the order is unchanged.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); k.min(n)];
        coeffs.extend(self.coeffs.iter().take(n.saturating_sub(k)).cloned());
        Series::new(coeffs)
    }

    /// Exact division by `z^k`; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.order() <= k {
            return Err(Error::OrderTooSmall {
                have: self.order(),
                need: k + 1,
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisorNotUnit);
        }
        Ok(Series::new(self.coeffs[k..].to_vec()))
    }

    /// `self / rhs`, requiring `rhs(0) != 0`.
    ///
    /// Runs on integers: with `a = A / da`, `b = B / db` and `B0 = B[0]`,
    /// `Q_i = A_i B0^i - sum_{k=1}^{i} B_k Q_{i-k} B0^{k-1}` is integral and
    /// `q_i = Q_i db / (B0^{i+1} da)`.
    pub fn div(&self, rhs: &Series) -> Result<Series> {
        let n = self.order().min(rhs.order());
        if rhs.coeffs.first().is_none_or(Zero::is_zero) {
            return Err(Error::DivisorNotUnit);
        }
        let (a, da) = integer_parts(&self.coeffs[..n]);
        let (b, db) = integer_parts(&rhs.coeffs[..n]);
        let mut b0_pow = Vec::with_capacity(n + 1);
        b0_pow.push(BigInt::one());
        for i in 0..n {
            let next = &b0_pow[i] * &b[0];
            b0_pow.push(next);
        }
        let mut q: Vec<BigInt> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = &a[i] * &b0_pow[i];
            for k in 1..=i {
                if !b[k].is_zero() && !q[i - k].is_zero() {
                    acc -= &b[k] * &q[i - k] * &b0_pow[k - 1];
                }
            }
            q.push(acc);
        }
        Ok(Series::new(
            q.into_iter()
                .zip(&b0_pow[1..])
                .map(|(qi, p)| Rat::new(qi * &db, p * &da))
                .collect(),
        ))
    }

    pub fn recip(&self) -> Result<Series> {
        Series::one(self.order()).div(self)
    }

    /// Square root with constant term 1, via
    /// `y_n = (a_n - sum_{k=1}^{n-1} y_k y_{n-k}) / 2`.
    ///
    /// With `a = A / d` the scaled values `Y_n = (4d)^n y_n` are even integers
    /// for `n >= 1` and satisfy
    /// `Y_n = 2^{2n-1} d^{n-1} A_n - (sum_{k=1}^{n-1} Y_k Y_{n-k}) / 2`.
    pub fn sqrt(&self) -> Result<Series> {
        if self.coeffs.first().is_none_or(|c| !c.is_one()) {
            return Err(Error::NotUnitSquare);
        }
        let n = self.order();
        let (a, d) = integer_parts(&self.coeffs);
        let four_d = &d * 4u32;
        let two_d = &d * 2u32;
        let mut scale = Vec::with_capacity(n);
        scale.push(BigInt::one());
        for i in 1..n {
            let next = &scale[i - 1] * &four_d;
            scale.push(next);
        }
        let mut y: Vec<BigInt> = Vec::with_capacity(n);
        y.push(BigInt::one());
        for i in 1..n {
            let mut half_sum = BigInt::zero();
            for k in 1..i.div_ceil(2) {
                half_sum += &y[k] * &y[i - k];
            }
            if i % 2 == 0 {
                half_sum += (&y[i / 2] * &y[i / 2]) >> 1u32;
            }
            y.push(&a[i] * (&scale[i] / &two_d) - half_sum);
        }
        Ok(Series::new(
            y.into_iter()
                .zip(scale)
                .map(|(yi, s)| Rat::new(yi, s))
                .collect(),
        ))
    }

    pub fn derivative(&self) -> Result<Series> {
        if self.order() < 2 {
            return Err(Error::OrderTooSmall {
                have: self.order(),
                need: 2,
            });
        }
        Ok(Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        ))
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / rat(k as i64 + 1)),
        );
        Series::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut acc = Series::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

/// Common denominator `d` of `c` and the integers `d * c_i`.
fn integer_parts(c: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let d = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = c.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    (ints, d)
}

fn mul_integer(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().take(n).enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().take(n - i).enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Cauchy product truncated to the smaller order.
impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let (a, da) = integer_parts(&self.coeffs[..n]);
        let (b, db) = integer_parts(&rhs.coeffs[..n]);
        let den = da * db;
        Series::new(
            mul_integer(&a, &b, n)
                .into_iter()
                .map(|c| Rat::new(c, den.clone()))
                .collect(),
        )
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($Op:ident $op:ident),*) => {$(
        impl $Op for Series {
            type Output = Series;
            fn $op(self, rhs: Series) -> Series { (&self).$op(&rhs) }
        }
        impl $Op<&Series> for Series {
            type Output = Series;
            fn $op(self, rhs: &Series) -> Series { (&self).$op(rhs) }
        }
        impl $Op<Series> for &Series {
            type Output = Series;
            fn $op(self, rhs: Series) -> Series { self.$op(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
