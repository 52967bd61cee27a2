//! Motzkin step models with parity-dependent level-step multiplicities, and
//! the weighted dynamic-programming count that serves as ground truth for the
//! closed forms.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::rat::Rat;
use crate::series::Series;

/// Number of level-step variants available at even and at odd heights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StepModel {
    pub even_loops: u32,
    pub odd_loops: u32,
}

impl StepModel {
    /// Two level-step variants on odd levels.
    pub const A: StepModel = StepModel::new(1, 2);
    /// Two level-step variants on even levels.
    pub const B: StepModel = StepModel::new(2, 1);
    /// Classical Motzkin paths.
    pub const CLASSICAL: StepModel = StepModel::new(1, 1);

    pub const fn new(even_loops: u32, odd_loops: u32) -> Self {
        StepModel {
            even_loops,
            odd_loops,
        }
    }

    /// Level-step weight at `height`.
    pub fn loops_at(&self, height: usize) -> u32 {
        if height.is_multiple_of(2) {
            self.even_loops
        } else {
            self.odd_loops
        }
    }
}

impl fmt::Display for StepModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StepModel::A => f.write_str("A"),
            StepModel::B => f.write_str("B"),
            StepModel {
                even_loops,
                odd_loops,
            } => write!(f, "general({even_loops},{odd_loops})"),
        }
    }
}

/// `count(n, l)`: weighted number of paths of length `n` from height 0 to
/// height `l`. Rows are stored triangularly since `count(n, l) = 0` for `l > n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    model: StepModel,
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn model(&self) -> StepModel {
        self.model
    }

    /// Largest path length in the table.
    pub fn length(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn count(&self, n: usize, level: usize) -> BigUint {
        self.rows
            .get(n)
            .and_then(|row| row.get(level))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    pub fn column(&self, level: usize) -> Vec<BigUint> {
        (0..self.rows.len()).map(|n| self.count(n, level)).collect()
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.rows[n].iter().sum()
    }
}

/// `c(n+1, l) = c(n, l-1) + w(l) c(n, l) + c(n, l+1)` with `c(0, 0) = 1`.
pub fn dp_table(model: StepModel, length: usize) -> CountTable {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(length + 1);
    rows.push(vec![BigUint::from(1u32)]);
    for n in 0..length {
        let prev = &rows[n];
        let mut next = vec![BigUint::zero(); n + 2];
        for (l, slot) in next.iter_mut().enumerate() {
            if l >= 1 {
                *slot += &prev[l - 1];
            }
            if let Some(c) = prev.get(l) {
                let w = model.loops_at(l);
                if w != 0 {
                    *slot += c * w;
                }
            }
            if let Some(c) = prev.get(l + 1) {
                *slot += c;
            }
        }
        rows.push(next);
    }
    CountTable { model, rows }
}

fn to_rat(c: BigUint) -> Rat {
    Rat::from_integer(BigInt::from(c))
}

/// Generating function of paths ending at `level`, modulo `z^terms`.
pub fn level_series(model: StepModel, level: usize, terms: usize) -> Series {
    if terms == 0 {
        return Series::zero(0);
    }
    let table = dp_table(model, terms - 1);
    Series::new(table.column(level).into_iter().map(to_rat).collect())
}

/// Generating function of open paths (any end height), modulo `z^terms`.
pub fn open_series_dp(model: StepModel, terms: usize) -> Series {
    if terms == 0 {
        return Series::zero(0);
    }
    let table = dp_table(model, terms - 1);
    Series::new((0..terms).map(|n| to_rat(table.row_sum(n))).collect())
}
