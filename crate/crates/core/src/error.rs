//! Error type shared by all modules.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Series division by a series with zero constant term.
    ZeroConstantTerm,
    /// Principal log/power of a series whose constant term lies on `(-inf, 0]`.
    BranchCutViolation,
    /// Operation requires a series with constant term 1.
    NotNormalized,
    /// Gamma (or a hypergeometric lower parameter) hit a pole.
    PoleAtNonPositiveInteger,
    /// Hypergeometric argument at or too near the unit-argument singularity.
    DivergentAtOne,
    /// Radius outside the admissible interval.
    InvalidRadius(f64),
    /// `E_{A,B}(1)` with `B = -1` is finite only when `Re A > -1`.
    DivergentArea,
    /// An iterative summation hit its term cap before reaching tolerance.
    NoConvergence,
    /// Multiplier recurrence indices outside the computed table.
    IndexOutOfRange { k: usize, n: usize },
    /// A `U_n <= 0` appeared where the bound check requires positivity.
    NonpositiveU { n: usize },
    /// Schwarz polynomial coefficients with total mass above 1.
    NormViolation { sum: f64 },
    /// Class-parameter or configuration constraint violated.
    InvalidParams(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroConstantTerm => write!(f, "division by a series with zero constant term"),
            Error::BranchCutViolation => {
                write!(f, "constant term on the negative real axis (principal branch)")
            }
            Error::NotNormalized => write!(f, "series constant term must be 1"),
            Error::PoleAtNonPositiveInteger => {
                write!(f, "gamma pole at a non-positive integer argument")
            }
            Error::DivergentAtOne => write!(
                f,
                "hypergeometric argument at or too near 1; use the r = 1 closed form"
            ),
            Error::InvalidRadius(r) => write!(f, "radius {r} outside the admissible interval"),
            Error::DivergentArea => {
                write!(f, "E_{{A,B}}(1) with B = -1 is finite only when Re A > -1")
            }
            Error::NoConvergence => write!(f, "summation did not converge within the term cap"),
            Error::IndexOutOfRange { k, n } => {
                write!(f, "multiplier index (k={k}, N={n}) outside the table")
            }
            Error::NonpositiveU { n } => write!(f, "U_{n} <= 0 inside a positivity-only check"),
            Error::NormViolation { sum } => {
                write!(f, "Schwarz coefficient mass {sum} exceeds 1")
            }
            Error::InvalidParams(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}
