use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor has zero constant term")]
    DivisorNotUnit,
    #[error("square root needs constant term exactly 1")]
    NotUnitSquare,
    #[error("series order {have} is too small, need at least {need}")]
    OrderTooSmall { have: usize, need: usize },
    #[error("coefficient index {index} is beyond series order {order}")]
    IndexBeyondOrder { index: usize, order: usize },
    #[error("closed forms exist only for model A (1,2) and model B (2,1), got ({even},{odd})")]
    InvalidModel { even: u32, odd: u32 },
    #[error("need at least {need} terms, got {have}")]
    InsufficientTerms { have: usize, need: usize },
    #[error("no relation found within the given degree bounds")]
    NoRelationFound,
    #[error("algebraic equation must have degree exactly 2 in y, got {0}")]
    NotQuadratic(usize),
    #[error("discriminant of the quadratic vanishes identically")]
    DegenerateDiscriminant,
    #[error("differential equation is already homogeneous")]
    AlreadyHomogeneous,
    #[error("only first-order equations can be homogenized, got order {0}")]
    NotFirstOrder(usize),
    #[error("equation has no nonzero coefficient")]
    ZeroEquation,
    #[error("leading coefficient of the recurrence vanishes at n = {0}")]
    LeadingCoeffVanishes(usize),
    #[error("need at least {need} initial terms, got {have}")]
    InsufficientInitialTerms { have: usize, need: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(&'static str),
}
