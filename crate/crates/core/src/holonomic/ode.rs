use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{normalizing_factor, trim_trailing, PRecurrence};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{rat, Rat};
use crate::series::Series;

/// `sum_d coeffs[d](z) * y^{(d)} + inhomog(z) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearODE {
    coeffs: Vec<Poly>,
    inhomog: Poly,
}

impl LinearODE {
    /// Normalizes jointly over all coefficients and the inhomogeneity, with
    /// the top derivative's leading coefficient positive.
    pub fn new(mut coeffs: Vec<Poly>, inhomog: Poly) -> Result<Self> {
        trim_trailing(&mut coeffs);
        let lead = match coeffs.last().and_then(Poly::leading_coeff) {
            Some(c) => c.clone(),
            None => return Err(Error::ZeroEquation),
        };
        let f = normalizing_factor(&coeffs, inhomog.coeffs(), &lead);
        Ok(LinearODE {
            coeffs: coeffs.iter().map(|p| p.scale(&f)).collect(),
            inhomog: inhomog.scale(&f),
        })
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn inhomog(&self) -> &Poly {
        &self.inhomog
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inhomog.is_zero()
    }

    /// `sum_d coeffs[d] y^{(d)}` without the inhomogeneity, modulo
    /// `z^{y.order - order}`.
    pub fn apply_operator(&self, y: &Series) -> Result<Series> {
        let need = self.order() + 1;
        if y.order() < need {
            return Err(Error::OrderTooSmall {
                have: y.order(),
                need,
            });
        }
        let out_order = y.order() - self.order();
        let mut deriv = y.clone();
        let mut acc = Series::zero(out_order);
        for (d, q) in self.coeffs.iter().enumerate() {
            if d > 0 {
                deriv = deriv.derivative()?;
            }
            let term = &Series::from_poly(q, out_order) * &deriv.truncate(out_order);
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Full left-hand side, modulo `z^{y.order - order}`.
    pub fn residual(&self, y: &Series) -> Result<Series> {
        let op = self.apply_operator(y)?;
        let n = op.order();
        Ok(&op + &Series::from_poly(&self.inhomog, n))
    }
}

impl fmt::Display for LinearODE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, p) in self.coeffs.iter().enumerate().rev() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*y{}", p.display_in("z"), "'".repeat(d))?;
        }
        if !self.inhomog.is_zero() {
            write!(f, " + ({})", self.inhomog.display_in("z"))?;
        }
        f.write_str(" = 0")
    }
}

pub fn verify_ode(ode: &LinearODE, y: &Series) -> Result<bool> {
    Ok(ode.residual(y)?.is_zero())
}

/// Probe series used to self-check conversions: `1 / (1 - z - 3z^2/2)`.
fn probe(order: usize) -> Series {
    let denom = Series::new(
        [rat(1), rat(-1), Rat::new((-3).into(), 2.into())]
            .into_iter()
            .chain(std::iter::repeat(Rat::zero()))
            .take(order)
            .collect(),
    );
    denom.recip().expect("unit constant term")
}

/// Eliminates the inhomogeneity of `p1 y' + p0 y + r = 0` by differentiating
/// `(p1 y' + p0 y) / r`:
/// `r p1 y'' + (r (p1' + p0) - r' p1) y' + (r p0' - r' p0) y = 0`.
pub fn homogenize_ode(ode: &LinearODE) -> Result<LinearODE> {
    if ode.order() != 1 {
        return Err(Error::NotFirstOrder(ode.order()));
    }
    if ode.is_homogeneous() {
        return Err(Error::AlreadyHomogeneous);
    }
    let (p0, p1, r) = (&ode.coeffs[0], &ode.coeffs[1], &ode.inhomog);
    let dr = r.derivative();
    let y2 = r * p1;
    let y1 = &(r * &(&p1.derivative() + p0)) - &(&dr * p1);
    let y0 = &(r * &p0.derivative()) - &(&dr * p0);
    let hom = LinearODE::new(vec![y0, y1, y2], Poly::zero())?;

    // hom(y) is proportional to r (L y)' - r' (L y), L = p1 D + p0
    let y = probe(40);
    let ly = LinearODE::new(vec![p0.clone(), p1.clone()], Poly::zero())?.apply_operator(&y)?;
    let n = ly.order() - 1;
    let rs = Series::from_poly(r, n);
    let drs = Series::from_poly(&dr, n);
    let expected = &(&rs * &ly.derivative()?) - &(&drs * &ly.truncate(n));
    let got = hom.apply_operator(&y)?;
    if !proportional(&got, &expected) {
        return Err(Error::InternalInconsistency(
            "homogenized ODE disagrees with its construction",
        ));
    }
    Ok(hom)
}

fn proportional(a: &Series, b: &Series) -> bool {
    let (Some(i), Some(j)) = (a.valuation(), b.valuation()) else {
        return a.is_zero() && b.is_zero();
    };
    if i != j {
        return false;
    }
    let ratio = &a.coeffs()[i] / &b.coeffs()[i];
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .all(|(x, y)| *x == y * &ratio)
}

/// `x (x-1) ... (x-d+1)` as a polynomial in `n`, for `x = n + c`.
fn falling_factorial(c: i64, d: usize) -> Poly {
    (0..d).fold(Poly::one(), |acc, t| {
        &acc * &Poly::from_ints(&[c - t as i64, 1])
    })
}

/// Coefficient extraction `[z^n]`: `z^j y^{(d)}` contributes
/// `ff(n - j + d, d) a(n - j + d)`. Terms are collected by shift `d - j` and
/// re-indexed so the lowest shift multiplies `a(n)`. With `a(k) = 0` for
/// `k < 0` the resulting relation holds for every `n >= 0`; the inhomogeneity
/// lands in the right-hand side.
pub fn ode_to_recurrence(ode: &LinearODE) -> Result<PRecurrence> {
    let mut by_shift: BTreeMap<i64, Vec<(Rat, usize, i64)>> = BTreeMap::new();
    for (d, q) in ode.coeffs.iter().enumerate() {
        for (j, c) in q.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let s = d as i64 - j as i64;
                by_shift.entry(s).or_default().push((c.clone(), d, s));
            }
        }
    }
    let (&lo, _) = by_shift.iter().next().ok_or(Error::ZeroEquation)?;
    let (&hi, _) = by_shift.iter().next_back().expect("nonempty");
    let mut coeffs = vec![Poly::zero(); (hi - lo) as usize + 1];
    for (s, terms) in &by_shift {
        let slot = &mut coeffs[(s - lo) as usize];
        for (c, d, s) in terms {
            // a(n + s - lo) carries ff(n + s - lo, d)
            *slot = &*slot + &falling_factorial(s - lo, *d).scale(c);
        }
    }
    // relation n comes from the z-power m = n - lo; move -r_m to the right
    let rhs_len = (ode.inhomog.coeffs().len() as i64 + lo).max(0) as usize;
    let rhs = (0..rhs_len)
        .map(|n| {
            let m = n as i64 - lo;
            if m >= 0 {
                -ode.inhomog.coeff(m as usize)
            } else {
                Rat::zero()
            }
        })
        .collect();
    // the raw relation at n must equal [z^{n - lo}] of the operator applied
    let y = probe(48);
    let op = ode.apply_operator(&y)?;
    let agrees = (0..y.order().saturating_sub(coeffs.len() - 1)).all(|n| {
        let m = n as i64 - lo;
        let expected = match usize::try_from(m) {
            Ok(m) if m < op.order() => op.coeffs()[m].clone(),
            Ok(_) => return true,
            Err(_) => Rat::zero(),
        };
        super::recurrence::relation_at(&coeffs, y.coeffs(), n) == expected
    });
    if !agrees {
        return Err(Error::InternalInconsistency(
            "recurrence disagrees with the ODE",
        ));
    }
    PRecurrence::new(coeffs, rhs)
}
