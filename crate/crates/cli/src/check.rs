//! Cross-verification behind `motzkin check`.

use clap::ValueEnum;
use motzkin_core::{
    algeq_to_ode, f0_series, f_even_series, g_odd_series, guess_algebraic, guess_recurrence,
    homogenize_ode, level_series, ode_to_recurrence, open_series_closed, open_series_dp,
    rec_extend, AlgebraicEq, Error, LinearODE, PRecurrence, Poly, Rat, Series, StepModel,
};
use serde::Serialize;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckWhat {
    All,
    F0,
    Levels,
    OddLevels,
    Open,
    Algeq,
    Ode,
    Recurrence,
    Guess,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// First coefficient index where the two sides differ.
    pub first_failure: Option<usize>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub terms: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// `(z^3 - z^2) y^2 + (1 - 3z + 2z^2) y + 2z - 1 = 0`.
pub fn reference_algeq() -> AlgebraicEq {
    AlgebraicEq::new(vec![
        Poly::from_ints(&[-1, 2]),
        Poly::from_ints(&[1, -3, 2]),
        Poly::from_ints(&[0, 0, -1, 1]),
    ])
    .expect("nonzero")
}

pub fn reference_ode() -> LinearODE {
    LinearODE::new(
        vec![
            Poly::from_ints(&[-2, 10, -14, 4, 4]),
            Poly::from_ints(&[0, -1, 6, -9, 0, 4]),
        ],
        Poly::from_ints(&[2, -7, 6]),
    )
    .expect("nonzero")
}

pub fn reference_recurrence() -> PRecurrence {
    PRecurrence::homogeneous(vec![
        Poly::from_ints(&[4, 4]),
        Poly::from_ints(&[4]),
        Poly::from_ints(&[-32, -9]),
        Poly::from_ints(&[28, 6]),
        Poly::from_ints(&[-6, -1]),
    ])
    .expect("nonzero")
}

pub fn first_mismatch(a: &[Rat], b: &[Rat]) -> Option<usize> {
    a.iter()
        .zip(b)
        .position(|(x, y)| x != y)
        .or_else(|| (a.len() != b.len()).then(|| a.len().min(b.len())))
}

fn compare(name: impl Into<String>, a: &Series, b: &Series) -> CheckResult {
    let first_failure = first_mismatch(a.coeffs(), b.coeffs());
    CheckResult {
        name: name.into(),
        passed: first_failure.is_none(),
        first_failure,
    }
}

fn zero_residual(name: impl Into<String>, residual: &Series) -> CheckResult {
    let first_failure = residual.valuation();
    CheckResult {
        name: name.into(),
        passed: first_failure.is_none(),
        first_failure,
    }
}

fn equal<T: PartialEq>(name: impl Into<String>, a: &T, b: &T) -> CheckResult {
    CheckResult {
        name: name.into(),
        passed: a == b,
        first_failure: None,
    }
}

/// Folds several comparisons into one result, keeping the earliest failure.
fn merge(name: impl Into<String>, parts: impl IntoIterator<Item = CheckResult>) -> CheckResult {
    let mut merged = CheckResult {
        name: name.into(),
        passed: true,
        first_failure: None,
    };
    for p in parts {
        if !p.passed {
            merged.passed = false;
            merged.first_failure = match (merged.first_failure, p.first_failure) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
    }
    merged
}

const MODELS: [StepModel; 2] = [StepModel::A, StepModel::B];

pub fn run_checks(what: CheckWhat, terms: usize) -> Result<CheckReport, Error> {
    if terms < 2 {
        return Err(Error::InsufficientTerms {
            have: terms,
            need: 2,
        });
    }
    let wants = |w: CheckWhat| what == CheckWhat::All || what == w;
    let mut checks = Vec::new();

    if wants(CheckWhat::F0) {
        for m in MODELS {
            checks.push(compare(
                format!("f0/{m}"),
                &f0_series(m, terms)?,
                &level_series(m, 0, terms),
            ));
        }
    }
    if wants(CheckWhat::Levels) {
        let max_level = 12.min(terms - 1);
        for m in MODELS {
            let mut parts = Vec::new();
            for level in 0..=max_level {
                let closed = if level % 2 == 0 {
                    f_even_series(m, level / 2, terms)?
                } else {
                    g_odd_series(level / 2, terms)?
                };
                parts.push(compare("", &closed, &level_series(m, level, terms)));
            }
            checks.push(merge(format!("levels/{m}"), parts));
        }
    }
    if wants(CheckWhat::OddLevels) {
        let parts = (1..terms).step_by(2).map(|level| {
            compare(
                "",
                &level_series(StepModel::A, level, terms),
                &level_series(StepModel::B, level, terms),
            )
        });
        checks.push(merge("odd-levels/A=B", parts));
    }
    if wants(CheckWhat::Open) {
        for m in MODELS {
            checks.push(compare(
                format!("open/{m}"),
                &open_series_closed(m, terms)?,
                &open_series_dp(m, terms),
            ));
        }
    }

    let f0a = f0_series(StepModel::A, terms)?;
    if wants(CheckWhat::Algeq) {
        checks.push(zero_residual(
            "algeq/residual",
            &reference_algeq().residual(&f0a),
        ));
    }
    if wants(CheckWhat::Ode) {
        let ode = algeq_to_ode(&reference_algeq())?;
        checks.push(equal("ode/derived=reference", &ode, &reference_ode()));
        checks.push(zero_residual(
            "ode/residual",
            &reference_ode().residual(&f0a)?,
        ));
        let hom = homogenize_ode(&reference_ode())?;
        checks.push(zero_residual(
            "homogeneous-ode/residual",
            &hom.residual(&f0a)?,
        ));
    }
    if wants(CheckWhat::Recurrence) {
        let rec = ode_to_recurrence(&reference_ode())?;
        checks.push(equal(
            "recurrence/derived=reference",
            &rec,
            &reference_recurrence(),
        ));
        let initial: Vec<Rat> = [1, 1, 2, 5]
            .iter()
            .map(|&v| Rat::from_integer(v.into()))
            .collect();
        let extended = rec_extend(&rec, &initial, terms)?;
        checks.push(compare(
            "recurrence/extend=dp",
            &Series::new(extended),
            &level_series(StepModel::A, 0, terms),
        ));
    }
    if wants(CheckWhat::Guess) {
        let dp = level_series(StepModel::A, 0, terms);
        match guess_algebraic(&dp, 2, 3) {
            Ok(eq) => checks.push(equal("guess/algeq", &eq, &reference_algeq())),
            Err(Error::InsufficientTerms { .. }) if what == CheckWhat::All => {}
            Err(e) => return Err(e),
        }
        match guess_recurrence(dp.coeffs(), 4, 1) {
            Ok(rec) => checks.push(equal("guess/recurrence", &rec, &reference_recurrence())),
            Err(Error::InsufficientTerms { .. }) if what == CheckWhat::All => {}
            Err(e) => return Err(e),
        }
    }

    Ok(CheckReport {
        terms,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
