//! Kernel-method closed forms for models A and B, evaluated as power series.
//!
//! Everything is written in terms of `A = z^2 s^2 = (1 - 3z + W) / 2`, where
//! `W = sqrt((1-z)(1-2z)(1-3z-2z^2))` and `s` is the small kernel root. With
//! `A` in place of `s^2` the `1/z` poles cancel before evaluation and every
//! division is by a unit. The identity `(A + z^2)^2 = (1-z)(1-2z) A` links the
//! forms below.

use crate::error::{Error, Result};
use crate::path_model::StepModel;
use crate::poly::Poly;
use crate::rat::frac;
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelContext {
    pub order: usize,
    /// `sqrt(P Q)`.
    pub w: Series,
    /// `(1 - 3z + W) / 2`.
    pub a: Series,
    /// `1 - 3z - 2z^2`.
    pub q: Poly,
    /// `(1-z)(1-2z) = 1 - 3z + 2z^2`.
    pub p: Poly,
}

impl KernelContext {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::OrderTooSmall { have: 0, need: 1 });
        }
        let p = Poly::from_ints(&[1, -3, 2]);
        let q = Poly::from_ints(&[1, -3, -2]);
        let w = Series::from_poly(&(&p * &q), order).sqrt()?;
        let a = (&Series::from_poly(&Poly::from_ints(&[1, -3]), order) + &w).scale(&frac(1, 2));
        Ok(KernelContext { order, w, a, q, p })
    }

    /// `A + z^2`.
    pub fn a_plus_z2(&self) -> Series {
        &self.a + &self.poly(&Poly::from_ints(&[0, 0, 1]))
    }

    fn poly(&self, p: &Poly) -> Series {
        Series::from_poly(p, self.order)
    }
}

pub fn kernel_context(order: usize) -> Result<KernelContext> {
    KernelContext::new(order)
}

#[derive(Clone, Copy)]
enum Variant {
    OddDoubled,
    EvenDoubled,
}

impl Variant {
    fn of(model: StepModel) -> Result<Self> {
        match model {
            StepModel::A => Ok(Variant::OddDoubled),
            StepModel::B => Ok(Variant::EvenDoubled),
            StepModel {
                even_loops,
                odd_loops,
            } => Err(Error::InvalidModel {
                even: even_loops,
                odd: odd_loops,
            }),
        }
    }

    /// `1 - z` for model A, `1 - 2z` for model B.
    fn even_damping(self) -> Poly {
        match self {
            Variant::OddDoubled => Poly::from_ints(&[1, -1]),
            Variant::EvenDoubled => Poly::from_ints(&[1, -2]),
        }
    }
}

/// Paths returning to level 0.
///
/// Model A: `(1 - 2z) / (A + z^2)`. Model B: `P / ((1 - 2z)(A + z^2))`.
pub fn f0_series(model: StepModel, order: usize) -> Result<Series> {
    let variant = Variant::of(model)?;
    let ctx = KernelContext::new(order)?;
    let denom = ctx.a_plus_z2();
    match variant {
        Variant::OddDoubled => ctx.poly(&Poly::from_ints(&[1, -2])).div(&denom),
        Variant::EvenDoubled => {
            let denom = &denom * &ctx.poly(&variant.even_damping());
            ctx.poly(&ctx.p).div(&denom)
        }
    }
}

/// Paths ending at level `2k`: `z^{2k} (A + z^2) / (D A^{k+1})` with
/// `D = 1 - z` (model A) or `D = 1 - 2z` (model B).
pub fn f_even_series(model: StepModel, k: usize, order: usize) -> Result<Series> {
    let variant = Variant::of(model)?;
    let ctx = KernelContext::new(order)?;
    let denom = &ctx.poly(&variant.even_damping()) * &ctx.a.pow(k as u32 + 1);
    Ok(ctx.a_plus_z2().div(&denom)?.shift_up(2 * k))
}

/// Paths ending at level `2k+1`: `z^{2k+1} / A^{k+1}`, the same in both models.
pub fn g_odd_series(k: usize, order: usize) -> Result<Series> {
    let ctx = KernelContext::new(order)?;
    Ok(ctx.a.pow(k as u32 + 1).recip()?.shift_up(2 * k + 1))
}

/// Open paths: `W / (D Q) + (W - Q) / (2 z Q)`.
pub fn open_series_closed(model: StepModel, order: usize) -> Result<Series> {
    let variant = Variant::of(model)?;
    // one extra order to absorb the division by z
    let ctx = KernelContext::new(order + 1)?;
    let q = ctx.poly(&ctx.q);
    let even = ctx
        .w
        .div(&(&q * &ctx.poly(&variant.even_damping())))?
        .truncate(order);
    let odd = (&ctx.w - &q)
        .shift_down(1)?
        .scale(&frac(1, 2))
        .div(&q.truncate(order))?;
    Ok(&even + &odd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_model::{level_series, open_series_dp};

    #[test]
    fn context_coefficients() {
        let ctx = kernel_context(7).unwrap();
        assert_eq!(ctx.w, Series::from_ints(&[1, -3, 0, 0, -2, -6, -18]));
        assert_eq!(ctx.a, Series::from_ints(&[1, -3, 0, 0, -1, -3, -9]));
        let one = kernel_context(1).unwrap();
        assert_eq!(one.w, Series::one(1));
        assert_eq!(one.a, Series::one(1));
        assert!(kernel_context(0).is_err());
    }

    #[test]
    fn kernel_identity() {
        let ctx = kernel_context(60).unwrap();
        let s = ctx.a_plus_z2();
        assert_eq!(&s * &s, &Series::from_poly(&ctx.p, 60) * &ctx.a);
        assert_eq!(&ctx.w * &ctx.w, Series::from_poly(&(&ctx.p * &ctx.q), 60));
    }

    #[test]
    fn f0_examples() {
        assert_eq!(
            f0_series(StepModel::A, 10).unwrap(),
            Series::from_ints(&[1, 1, 2, 5, 14, 41, 123, 375, 1158, 3615])
        );
        assert_eq!(
            f0_series(StepModel::B, 9).unwrap(),
            Series::from_ints(&[1, 2, 5, 13, 35, 97, 276, 804, 2391])
        );
        assert_eq!(f0_series(StepModel::A, 1).unwrap(), Series::one(1));
        assert_eq!(
            f0_series(StepModel::new(1, 3), 5),
            Err(Error::InvalidModel { even: 1, odd: 3 })
        );
    }

    #[test]
    fn f_even_examples() {
        assert_eq!(
            f_even_series(StepModel::A, 0, 4).unwrap(),
            f0_series(StepModel::A, 4).unwrap()
        );
        assert_eq!(
            f_even_series(StepModel::A, 1, 5).unwrap(),
            Series::from_ints(&[0, 0, 1, 4, 14])
        );
        assert_eq!(
            f_even_series(StepModel::B, 0, 3).unwrap(),
            Series::from_ints(&[1, 2, 5])
        );
        assert!(f_even_series(StepModel::CLASSICAL, 0, 3).is_err());
    }

    #[test]
    fn g_odd_examples() {
        assert_eq!(
            g_odd_series(0, 6).unwrap(),
            Series::from_ints(&[0, 1, 3, 9, 27, 82])
        );
        assert_eq!(
            g_odd_series(1, 4).unwrap(),
            Series::from_ints(&[0, 0, 0, 1])
        );
        assert_eq!(g_odd_series(0, 2).unwrap(), Series::from_ints(&[0, 1]));
    }

    #[test]
    fn open_examples() {
        assert_eq!(
            open_series_closed(StepModel::A, 5).unwrap(),
            Series::from_ints(&[1, 2, 6, 19, 62])
        );
        assert_eq!(
            open_series_closed(StepModel::B, 2).unwrap(),
            Series::from_ints(&[1, 3])
        );
        assert_eq!(open_series_closed(StepModel::A, 1).unwrap(), Series::one(1));
    }

    #[test]
    fn closed_forms_match_oracle() {
        for model in [StepModel::A, StepModel::B] {
            for k in 0..=6 {
                assert_eq!(
                    f_even_series(model, k, 30).unwrap(),
                    level_series(model, 2 * k, 30)
                );
                assert_eq!(
                    g_odd_series(k, 30).unwrap(),
                    level_series(model, 2 * k + 1, 30)
                );
            }
            assert_eq!(
                open_series_closed(model, 30).unwrap(),
                open_series_dp(model, 30)
            );
        }
    }

    #[test]
    fn levels_telescope_to_open_series() {
        let order = 16;
        for model in [StepModel::A, StepModel::B] {
            let mut total = Series::zero(order);
            for k in 0..=order / 2 {
                total = &total + &f_even_series(model, k, order).unwrap();
                total = &total + &g_odd_series(k, order).unwrap();
            }
            assert_eq!(total, open_series_closed(model, order).unwrap());
        }
    }
}
