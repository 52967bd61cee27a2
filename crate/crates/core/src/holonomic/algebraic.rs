use std::fmt;

use num_traits::Zero;

use super::{coeff_key, normalizing_factor, trim_trailing, LinearODE, GUARD};
use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::poly::Poly;
use crate::series::Series;

/// `sum_j coeffs[j](z) * y^j = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicEq {
    coeffs: Vec<Poly>,
}

impl AlgebraicEq {
    /// Normalizes: integer coefficients with gcd 1 and the leading coefficient
    /// of the highest `y` power positive. The zero equation is refused.
    pub fn new(mut coeffs: Vec<Poly>) -> Result<Self> {
        trim_trailing(&mut coeffs);
        let lead = match coeffs.last().and_then(Poly::leading_coeff) {
            Some(c) => c.clone(),
            None => return Err(Error::ZeroEquation),
        };
        let f = normalizing_factor(&coeffs, &[], &lead);
        Ok(AlgebraicEq {
            coeffs: coeffs.iter().map(|p| p.scale(&f)).collect(),
        })
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn degree_y(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest `z` degree among the coefficients.
    pub fn degree_z(&self) -> usize {
        self.coeffs
            .iter()
            .map(|p| p.degree().max(0) as usize)
            .max()
            .unwrap_or(0)
    }

    /// `sum_j coeffs[j] y^j` modulo `z^{y.order}`.
    pub fn residual(&self, y: &Series) -> Series {
        let n = y.order();
        // Horner in y
        self.coeffs.iter().rev().fold(Series::zero(n), |acc, p| {
            &(&acc * y) + &Series::from_poly(p, n)
        })
    }
}

impl fmt::Display for AlgebraicEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, p) in self.coeffs.iter().enumerate().rev() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})", p.display_in("z"))?;
            match j {
                0 => {}
                1 => f.write_str("*y")?,
                _ => write!(f, "*y^{j}")?,
            }
        }
        f.write_str(" = 0")
    }
}

pub fn verify_algebraic(eq: &AlgebraicEq, y: &Series) -> bool {
    eq.residual(y).is_zero()
}

/// Smallest relation `sum_{j <= max_deg_y} sum_{i <= max_deg_z} c_{ij} z^i y^j`
/// vanishing modulo `z^{y.order}`.
pub fn guess_algebraic(y: &Series, max_deg_y: usize, max_deg_z: usize) -> Result<AlgebraicEq> {
    let unknowns = (max_deg_y + 1) * (max_deg_z + 1);
    let need = unknowns + GUARD;
    if y.order() < need {
        return Err(Error::InsufficientTerms {
            have: y.order(),
            need,
        });
    }
    let n = y.order();
    let mut powers = vec![Series::one(n)];
    for j in 1..=max_deg_y {
        powers.push(&powers[j - 1] * y);
    }
    // column (j, i) holds the coefficients of z^i y^j
    let rows: Vec<Vec<_>> = (0..n)
        .map(|row| {
            let mut r = Vec::with_capacity(unknowns);
            for pw in &powers {
                for i in 0..=max_deg_z {
                    r.push(if row >= i {
                        pw.coeffs()[row - i].clone()
                    } else {
                        Zero::zero()
                    });
                }
            }
            r
        })
        .collect();

    let best = nullspace(&rows, unknowns)
        .into_iter()
        .map(|v| {
            let coeffs = v
                .chunks(max_deg_z + 1)
                .map(|c| Poly::new(c.to_vec()))
                .collect();
            AlgebraicEq::new(coeffs)
        })
        .filter_map(Result::ok)
        .min_by_key(|eq| (eq.degree_y() + eq.degree_z(), coeff_key(&eq.coeffs)))
        .ok_or(Error::NoRelationFound)?;

    if !verify_algebraic(&best, y) {
        return Err(Error::InternalInconsistency(
            "guessed algebraic equation fails",
        ));
    }
    Ok(best)
}

/// First-order linear ODE for the roots of `a y^2 + b y + c = 0`.
///
/// Implicit differentiation gives `y' = -(a' y^2 + b' y + c') / (2 a y + b)`.
/// Reducing `y^2` modulo the equation and inverting `2 a y + b` through
/// `(2 a y + b)^2 = b^2 - 4 a c` leaves `q1 y' + q0 y + r = 0` with
/// `q1 = a D`, `q0 = 2 a beta - alpha b`, `r = beta b - 2 alpha c`, where
/// `D = b^2 - 4ac`, `alpha = a b' - a' b`, `beta = a c' - a' c`. The common
/// polynomial factor of the three coefficients is cancelled.
pub fn algeq_to_ode(eq: &AlgebraicEq) -> Result<LinearODE> {
    if eq.degree_y() != 2 {
        return Err(Error::NotQuadratic(eq.degree_y()));
    }
    let (c, b, a) = (&eq.coeffs[0], &eq.coeffs[1], &eq.coeffs[2]);
    let disc = &(b * b) - &(&Poly::from_ints(&[4]) * &(a * c));
    if disc.is_zero() {
        return Err(Error::DegenerateDiscriminant);
    }
    let (da, db, dc) = (a.derivative(), b.derivative(), c.derivative());
    let alpha = &(a * &db) - &(&da * b);
    let beta = &(a * &dc) - &(&da * c);
    let two = Poly::from_ints(&[2]);
    let q1 = a * &disc;
    let q0 = &(&two * &(a * &beta)) - &(&alpha * b);
    let r = &(&beta * b) - &(&two * &(&alpha * c));

    let g = q1.gcd(&q0).gcd(&r);
    let reduce = |p: &Poly| p.div_rem(&g).0;
    let ode = LinearODE::new(vec![reduce(&q0), reduce(&q1)], reduce(&r))?;

    // -q1 P_z + (q0 y + r) P_y must be a multiple of P
    let (q0, q1, r) = (&ode.coeffs()[0], &ode.coeffs()[1], ode.inhomog());
    let e2 = &(&two * &(q0 * a)) - &(q1 * &da);
    let e1 = &(&(q0 * b) + &(&two * &(r * a))) - &(q1 * &db);
    let e0 = &(r * b) - &(q1 * &dc);
    let consistent = [(&e2, a), (&e1, b), (&e0, c)]
        .iter()
        .all(|(e, p)| (&(*e * a) - &(&e2 * *p)).is_zero());
    if !consistent {
        return Err(Error::InternalInconsistency(
            "ODE does not annihilate the algebraic roots",
        ));
    }
    Ok(ode)
}
