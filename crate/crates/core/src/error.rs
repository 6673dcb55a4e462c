use thiserror::Error;

use crate::rootsys::CartanType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported type {0}")]
    UnsupportedType(CartanType),

    #[error("zero root")]
    ZeroRoot,

    #[error("not Cartan-integral: 2<beta,alpha>/<alpha,alpha> = {0}")]
    NotCartanIntegral(String),

    #[error("not a Dynkin diagram: {0}")]
    NotDynkin(String),

    #[error("oracle too large: {0}")]
    OracleTooLarge(String),

    #[error("permutation is not an involution of the simple roots: {0}")]
    NotInvolutive(String),

    #[error("not a diagram automorphism: {0}")]
    NotDiagramAutomorphism(String),

    #[error("{0} is not a root of the base system")]
    NotARoot(String),

    #[error("root vanishes on t_k: {0}")]
    RootVanishes(String),

    #[error("lemma violation: {0}")]
    LemmaViolation(String),

    #[error("restriction axiom violation: {0}")]
    AxiomViolation(String),

    #[error("positivity violation: {0}")]
    PositivityViolation(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("parameter error: {0}")]
    Params(String),

    #[error("catalog inconsistency: {0}")]
    CatalogInconsistency(String),

    #[error("catalog format: {0}")]
    CatalogFormat(String),

    #[error("unknown formula tag {0:?}")]
    UnknownFormula(String),

    #[error("Hsiang violation: dim H*(M^T) = {fixed} exceeds dim H*(M) = {total}")]
    HsiangViolation { fixed: u64, total: u64 },

    #[error("not equivariantly formal: dim H*(M^T) = {fixed} but dim H*(M) = {total}")]
    NotFormal { fixed: u64, total: u64 },

    #[error("linear algebra: {0}")]
    Linear(String),
}

impl Error {
    /// True for errors raised by the catalog's own input checks (unknown
    /// labels, out-of-range parameters), as opposed to broken invariants.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::UnknownLabel(_)
                | Error::Params(_)
                | Error::UnsupportedType(_)
                | Error::CatalogFormat(_)
                | Error::UnknownFormula(_)
        )
    }
}
