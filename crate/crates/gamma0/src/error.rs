//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {0} is excluded; 6 must be invertible")]
    SmallCharacteristic(u64),

    #[error("field of size {p}^{k} exceeds the supported range")]
    FieldTooLarge { p: u64, k: u32 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("the zero polynomial has no weight")]
    ZeroPolynomial,

    #[error("points do not lie on the same curve")]
    PointsOnDifferentCurves,

    #[error("discriminant is zero: the Weierstrass model is singular")]
    SingularCurve,

    #[error("level {0} is not supported; only 2 and 3 are")]
    UnsupportedLevel(u64),

    #[error("extension degree search exceeded the cap of {0}")]
    DegreeCapExceeded(u32),

    #[error("certificates disagree: {0}")]
    CertificateMismatch(String),

    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
}
