//! Algebraic equation -> linear ODE -> P-recurrence conversions, with
//! undetermined-coefficient guessers for the first and last stage.
//!
//! Every object is kept content-normalized: integer coefficients with gcd 1
//! and a fixed sign convention, so equal relations compare equal.

mod algebraic;
mod ode;
mod recurrence;

pub use algebraic::{algeq_to_ode, guess_algebraic, verify_algebraic, AlgebraicEq};
pub use ode::{homogenize_ode, ode_to_recurrence, verify_ode, LinearODE};
pub use recurrence::{guess_recurrence, rec_extend, rec_verify, PRecurrence};

use num_traits::{Signed, Zero};

use crate::poly::Poly;
use crate::rat::{content_scale, Rat};

/// Extra equations every guesser demands beyond the unknown count.
pub const GUARD: usize = 5;

/// Scale factor that makes `polys` and `extra` integral with gcd 1, with the
/// sign chosen so that `sign_ref` becomes positive.
fn normalizing_factor(polys: &[Poly], extra: &[Rat], sign_ref: &Rat) -> Rat {
    let c = content_scale(
        polys
            .iter()
            .flat_map(|p| p.coeffs().iter())
            .chain(extra.iter()),
    );
    if sign_ref.is_negative() {
        -c
    } else {
        c
    }
}

fn trim_trailing(polys: &mut Vec<Poly>) {
    while polys.last().is_some_and(Poly::is_zero) {
        polys.pop();
    }
}

fn trim_rats(v: &mut Vec<Rat>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Lexicographic key on a coefficient list, used to choose deterministically
/// among nullspace basis vectors.
fn coeff_key(polys: &[Poly]) -> Vec<Rat> {
    polys
        .iter()
        .flat_map(|p| p.coeffs().iter().cloned())
        .collect()
}
