use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {value} is outside the domain of {what}")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid interval [{lo}, {hi}]: {reason}")]
    InvalidInterval {
        lo: f64,
        hi: f64,
        reason: &'static str,
    },

    #[error("no sign change of {what} over [{lo}, {hi}]")]
    NoSignChange {
        what: &'static str,
        lo: f64,
        hi: f64,
    },

    #[error("invalid parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("unknown bound name `{0}`")]
    UnknownBound(String),
}

pub(crate) fn finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain { what, value })
    }
}
