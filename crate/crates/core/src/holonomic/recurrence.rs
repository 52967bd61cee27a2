use std::fmt;

use num_traits::{One, Zero};

use super::{coeff_key, normalizing_factor, trim_rats, trim_trailing, GUARD};
use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::poly::Poly;
use crate::rat::{rat, Rat};

/// `sum_{i=0}^{r} coeffs[i](n) a(n+i) = rhs(n)` for all `n >= 0`, where
/// `rhs(n)` is zero from `valid_from = rhs.len()` on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PRecurrence {
    coeffs: Vec<Poly>,
    rhs: Vec<Rat>,
}

impl PRecurrence {
    /// Normalizes jointly over coefficients and right-hand side, making the
    /// leading coefficient of the lowest-shift polynomial positive.
    pub fn new(mut coeffs: Vec<Poly>, mut rhs: Vec<Rat>) -> Result<Self> {
        trim_trailing(&mut coeffs);
        trim_rats(&mut rhs);
        let sign_ref = match coeffs.iter().find_map(Poly::leading_coeff) {
            Some(c) => c.clone(),
            None => return Err(Error::ZeroEquation),
        };
        let f = normalizing_factor(&coeffs, &rhs, &sign_ref);
        Ok(PRecurrence {
            coeffs: coeffs.iter().map(|p| p.scale(&f)).collect(),
            rhs: rhs.iter().map(|v| v * &f).collect(),
        })
    }

    pub fn homogeneous(coeffs: Vec<Poly>) -> Result<Self> {
        PRecurrence::new(coeffs, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn rhs(&self) -> &[Rat] {
        &self.rhs
    }

    /// First index from which the relation is homogeneous.
    pub fn valid_from(&self) -> usize {
        self.rhs.len()
    }

    /// Largest coefficient degree in `n`.
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .map(|p| p.degree().max(0) as usize)
            .max()
            .unwrap_or(0)
    }

    fn rhs_at(&self, n: usize) -> Rat {
        self.rhs.get(n).cloned().unwrap_or_else(Rat::zero)
    }
}

/// `sum_i coeffs[i](n) seq[n+i]`; `seq` must reach index `n + r`.
pub(super) fn relation_at(coeffs: &[Poly], seq: &[Rat], n: usize) -> Rat {
    let x = rat(n as i64);
    coeffs
        .iter()
        .zip(&seq[n..])
        .map(|(p, a)| p.eval(&x) * a)
        .sum()
}

impl fmt::Display for PRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*a(n", p.display_in("n"))?;
            if i > 0 {
                write!(f, "+{i}")?;
            }
            f.write_str(")")?;
        }
        f.write_str(" = ")?;
        if self.rhs.is_empty() {
            f.write_str("0")
        } else {
            let parts: Vec<String> = self
                .rhs
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(n, v)| format!("{v}*[n={n}]"))
                .collect();
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Checks the relation at every `n` the sequence covers.
pub fn rec_verify(rec: &PRecurrence, seq: &[Rat]) -> bool {
    let r = rec.order();
    if seq.len() <= r {
        return true;
    }
    (0..seq.len() - r).all(|n| relation_at(&rec.coeffs, seq, n) == rec.rhs_at(n))
}

/// Unrolls the recurrence from `initial` until `terms` values exist.
pub fn rec_extend(rec: &PRecurrence, initial: &[Rat], terms: usize) -> Result<Vec<Rat>> {
    let r = rec.order();
    if initial.len() < r {
        return Err(Error::InsufficientInitialTerms {
            have: initial.len(),
            need: r,
        });
    }
    let mut seq = initial.to_vec();
    seq.truncate(terms.max(r));
    let lead = &rec.coeffs[r];
    while seq.len() < terms {
        let n = seq.len() - r;
        let x = rat(n as i64);
        let l = lead.eval(&x);
        if l.is_zero() {
            return Err(Error::LeadingCoeffVanishes(n));
        }
        let lower: Rat = rec.coeffs[..r]
            .iter()
            .zip(&seq[n..])
            .map(|(p, a)| p.eval(&x) * a)
            .sum();
        seq.push((rec.rhs_at(n) - lower) / l);
    }
    seq.truncate(terms);
    Ok(seq)
}

/// Homogeneous recurrence of order `<= max_order` with coefficient degree
/// `<= max_deg` annihilating `seq`. All available equations enter the solve,
/// and at least `GUARD` more than there are unknowns are required.
pub fn guess_recurrence(seq: &[Rat], max_order: usize, max_deg: usize) -> Result<PRecurrence> {
    let unknowns = (max_order + 1) * (max_deg + 1);
    let need = unknowns + max_order + GUARD;
    if seq.len() < need {
        return Err(Error::InsufficientTerms {
            have: seq.len(),
            need,
        });
    }
    // column (i, j) is n^j a(n+i)
    let rows: Vec<Vec<Rat>> = (0..seq.len() - max_order)
        .map(|n| {
            let x = rat(n as i64);
            let mut row = Vec::with_capacity(unknowns);
            for i in 0..=max_order {
                let mut pw = Rat::one();
                for _ in 0..=max_deg {
                    row.push(&pw * &seq[n + i]);
                    pw *= &x;
                }
            }
            row
        })
        .collect();

    let best = nullspace(&rows, unknowns)
        .into_iter()
        .filter_map(|v| {
            let coeffs = v
                .chunks(max_deg + 1)
                .map(|c| Poly::new(c.to_vec()))
                .collect();
            PRecurrence::homogeneous(coeffs).ok()
        })
        .min_by_key(|rec| (rec.order() + rec.degree(), coeff_key(&rec.coeffs)))
        .ok_or(Error::NoRelationFound)?;

    if !rec_verify(&best, seq) {
        return Err(Error::InternalInconsistency(
            "guessed recurrence fails on the data",
        ));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_model::{dp_table, StepModel};
    use crate::rat::frac;
    use num_bigint::BigInt;

    pub(crate) fn reference_rec() -> PRecurrence {
        PRecurrence::homogeneous(vec![
            Poly::from_ints(&[4, 4]),
            Poly::from_ints(&[4]),
            Poly::from_ints(&[-32, -9]),
            Poly::from_ints(&[28, 6]),
            Poly::from_ints(&[-6, -1]),
        ])
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn dp_column0(model: StepModel, terms: usize) -> Vec<Rat> {
        dp_table(model, terms - 1)
            .column(0)
            .into_iter()
            .map(|c| Rat::from_integer(BigInt::from(c)))
            .collect()
    }

    #[test]
    fn verifies_reference_terms() {
        let seq = ints(&[1, 1, 2, 5, 14, 41, 123, 375, 1158, 3615]);
        assert!(rec_verify(&reference_rec(), &seq));
        assert_eq!(relation_at(reference_rec().coeffs(), &seq, 0), rat(0));
        let mut bad = seq.clone();
        bad[7] += rat(1);
        assert!(!rec_verify(&reference_rec(), &bad));
    }

    #[test]
    fn extends_from_initial_values() {
        let seq = rec_extend(&reference_rec(), &ints(&[1, 1, 2, 5]), 10).unwrap();
        assert_eq!(seq, ints(&[1, 1, 2, 5, 14, 41, 123, 375, 1158, 3615]));
        assert_eq!(
            rec_extend(&reference_rec(), &ints(&[1, 1, 2, 5]), 2).unwrap(),
            ints(&[1, 1])
        );
        assert_eq!(
            rec_extend(&reference_rec(), &ints(&[1, 1]), 10),
            Err(Error::InsufficientInitialTerms { have: 2, need: 4 })
        );
    }

    #[test]
    fn extension_reaches_two_hundred() {
        let seq = rec_extend(&reference_rec(), &ints(&[1, 1, 2, 5]), 201).unwrap();
        assert_eq!(seq, dp_column0(StepModel::A, 201));
    }

    #[test]
    fn vanishing_leading_coefficient() {
        // (n - 2) a(n+1) - a(n) = 0 stalls at n = 2
        let rec = PRecurrence::homogeneous(vec![Poly::from_ints(&[-1]), Poly::from_ints(&[-2, 1])])
            .unwrap();
        assert_eq!(
            rec_extend(&rec, &ints(&[1]), 5),
            Err(Error::LeadingCoeffVanishes(2))
        );
    }

    #[test]
    fn inhomogeneous_relation() {
        // a(n+1) - a(n) = 1 at n = 0 only
        let rec = PRecurrence::new(
            vec![Poly::from_ints(&[-1]), Poly::from_ints(&[1])],
            vec![rat(1), rat(0)],
        )
        .unwrap();
        assert_eq!(rec.valid_from(), 1);
        assert_eq!(rec.rhs(), &[rat(-1)]);
        let seq = rec_extend(&rec, &ints(&[3]), 4).unwrap();
        assert_eq!(seq, ints(&[3, 4, 4, 4]));
        assert!(rec_verify(&rec, &seq));
    }

    #[test]
    fn guesses_reference_recurrence() {
        let seq = dp_column0(StepModel::A, 40);
        assert_eq!(guess_recurrence(&seq, 4, 1).unwrap(), reference_rec());
    }

    #[test]
    fn guesses_fibonacci() {
        let mut fib = vec![rat(0), rat(1)];
        for i in 2..20 {
            let next = &fib[i - 1] + &fib[i - 2];
            fib.push(next);
        }
        let rec = guess_recurrence(&fib, 2, 0).unwrap();
        assert_eq!(
            rec.coeffs(),
            &[
                Poly::from_ints(&[1]),
                Poly::from_ints(&[1]),
                Poly::from_ints(&[-1])
            ]
        );
    }

    #[test]
    fn order_two_is_not_enough() {
        let seq = dp_column0(StepModel::A, 40);
        assert_eq!(guess_recurrence(&seq, 2, 1), Err(Error::NoRelationFound));
    }

    #[test]
    fn guess_needs_enough_terms() {
        let seq = dp_column0(StepModel::A, 18);
        assert_eq!(
            guess_recurrence(&seq, 4, 1),
            Err(Error::InsufficientTerms { have: 18, need: 19 })
        );
    }

    #[test]
    fn scaling_invariance() {
        let seq = dp_column0(StepModel::A, 40);
        let scaled: Vec<Rat> = seq.iter().map(|a| a * frac(-7, 3)).collect();
        assert_eq!(guess_recurrence(&scaled, 4, 1).unwrap(), reference_rec());
    }

    #[test]
    fn model_b_recurrence() {
        let seq = dp_column0(StepModel::B, 60);
        let rec = guess_recurrence(&seq[..40], 4, 1).unwrap();
        assert!(rec_verify(&rec, &seq));
    }

    #[test]
    fn normalization_is_idempotent() {
        let rec = reference_rec();
        assert_eq!(
            PRecurrence::new(rec.coeffs().to_vec(), rec.rhs().to_vec()).unwrap(),
            rec
        );
        let neg: Vec<Poly> = rec.coeffs().iter().map(|p| p.scale(&frac(-1, 2))).collect();
        assert_eq!(PRecurrence::homogeneous(neg).unwrap(), rec);
    }

    #[test]
    fn display() {
        assert_eq!(
            reference_rec().to_string(),
            "(4*n + 4)*a(n) + (4)*a(n+1) + (-9*n - 32)*a(n+2) + (6*n + 28)*a(n+3) + (-n - 6)*a(n+4) = 0"
        );
    }
}
