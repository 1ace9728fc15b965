use alloc::string::String;
use core::fmt;

/// Failure modes shared by every module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// Evaluation or limit at a genuine pole.
    Pole,
    /// A residue was requested where the pole has order at least two.
    HigherOrderPole,
    ZeroPolynomial,
    /// A linear system had no unique solution.
    Singular(&'static str),
    /// The object lies outside the chart or domain of the requested map.
    OutOfChart(String),
    /// Indeterminacy locus of a rational map (e.g. vanishing apparent polynomial).
    Indeterminate(String),
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Pole => write!(f, "genuine pole at the evaluation point"),
            Error::HigherOrderPole => write!(f, "pole of order at least two"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::Singular(what) => write!(f, "singular system: {what}"),
            Error::OutOfChart(msg) => write!(f, "outside the chart: {msg}"),
            Error::Indeterminate(msg) => write!(f, "indeterminate: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
