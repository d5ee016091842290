use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate game: eps1 = eps2 = 0")]
    DegenerateGame,
    #[error("non-finite payoff {0}")]
    NonFinitePayoff(f64),
    #[error("state left the admissible range at t = {t}: u = ({u1}, {u2})")]
    NonFiniteState { t: u64, u1: f64, u2: f64 },
    #[error("wrong sign regime: {0}")]
    WrongRegime(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid range [{lo}, {hi}]")]
    InvalidRange { lo: f64, hi: f64 },
    #[error("invalid probability vector: {0}")]
    InvalidDistribution(String),
    #[error("invalid initialization: {0}")]
    InvalidInit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
