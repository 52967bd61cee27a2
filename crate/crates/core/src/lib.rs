//! Exact enumeration of Motzkin paths whose level steps come in a
//! parity-dependent number of variants.
//!
//! * [`series`], [`poly`], [`rat`]: exact truncated power series and polynomials.
//! * [`path_model`]: step models and the dynamic-programming count.
//! * [`closed_form`]: kernel-method generating functions for models A and B.
//! * [`holonomic`]: algebraic equation, ODE and recurrence conversions and guessers.

pub mod closed_form;
pub mod error;
pub mod holonomic;
pub mod linalg;
pub mod path_model;
pub mod poly;
pub mod rat;
pub mod series;

pub use closed_form::{
    f0_series, f_even_series, g_odd_series, kernel_context, open_series_closed, KernelContext,
};
pub use error::{Error, Result};
pub use holonomic::{
    algeq_to_ode, guess_algebraic, guess_recurrence, homogenize_ode, ode_to_recurrence, rec_extend,
    rec_verify, verify_algebraic, verify_ode, AlgebraicEq, LinearODE, PRecurrence,
};
pub use path_model::{dp_table, level_series, open_series_dp, CountTable, StepModel};
pub use poly::Poly;
pub use rat::Rat;
pub use series::Series;
