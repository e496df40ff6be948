use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bandit instance needs at least one arm")]
    NoArms,

    #[error("non-finite value {value} in {what}")]
    NonFinite { what: &'static str, value: f64 },

    #[error(
        "best mean equals the threshold {threshold}; instance is neither positive nor negative"
    )]
    ThresholdTie { threshold: f64 },

    #[error("noise scale must lie in [0, 1], got {0}")]
    NoiseScale(f64),

    #[error("arm {arm} out of range for {arms} arms")]
    ArmOutOfRange { arm: usize, arms: usize },

    #[error("confidence level must lie in (0, 1), got {0}")]
    Delta(f64),

    #[error("sample count must be at least 1")]
    ZeroCount,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("expected a {expected} instance")]
    WrongInstanceSign { expected: &'static str },

    #[error("arm {0} is above the threshold; the bound applies only to arms at or below it")]
    QualifiedArm(usize),

    #[error("bound requires exactly one arm strictly above the threshold, found {0}")]
    NotUniquelyQualified(usize),

    #[error("the Linear family needs at least two arms")]
    LinearNeedsTwoArms,

    #[error("cannot summarize an empty set of runs")]
    EmptyRecords,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
