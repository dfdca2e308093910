//! Exact computation of graded Betti numbers, Poincare series and
//! Backelin rates for Artinian (Gorenstein) graded algebras over a prime
//! field.
//!
//! The crate builds algebras from forms via apolarity (Macaulay inverse
//! systems), resolves the residue field over them by exact linear algebra,
//! and certifies rate statements: `rate(A) = floor(s/2)` for seeded
//! "generic" Gorenstein algebras of socle degree `s`, the complete
//! intersection rate `t - 1`, the monomial sandwich
//! `m(I) - 1 <= rate <= m(in(I)) - 1`, and the explicit level monomial
//! ideal constructions behind the odd-socle generation result.
//!
//! All arithmetic is exact: F_p for linear algebra, integers for series
//! coefficients. Nothing here uses floating point.

pub mod experiments;
pub mod fp;
pub mod groebner;
pub mod ideal;
pub mod inverse;
pub mod koszul;
pub mod monomial;
pub mod poincare;
pub mod quotient;
pub mod resolution;
pub mod ring;
pub mod series;

pub use fp::{FpMatrix, PrimeField};
pub use ideal::GradedIdeal;
pub use inverse::ArtinAlgebra;
pub use monomial::MonomialIdeal;
pub use resolution::BettiTable;
pub use ring::{Form, Monomial};
pub use series::SeriesTruncation;

use std::fmt;

/// Crate-wide error type. `Input` and `Config` map to CLI exit code 2;
/// everything that is a *failed check* (rather than a failed computation)
/// is reported through verdict structures instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input (dimension mismatches, bad
    /// parameters, unparsable text).
    Input(String),
    /// Invalid configuration, e.g. a modulus that is not prime or not
    /// larger than the socle degree.
    Config(String),
    /// A syzygy generator appeared at the degree cap, so truncated Betti
    /// data could be missing rows; the caller must raise `j_max`.
    TruncationUnsound { step: usize, degree: usize },
    /// The quotient is not Artinian where an Artinian one is required.
    NotArtinian(String),
    /// The proposed sequence is not regular; carries the first degree
    /// where the Hilbert function deviates from the complete intersection
    /// prediction.
    NotRegularSequence {
        degree: usize,
        expected: usize,
        actual: usize,
    },
    /// The closed Poincare series formula does not cover socle degree 3.
    SocleDegreeExcluded(usize),
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "input error: {msg}"),
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::TruncationUnsound { step, degree } => write!(
                f,
                "truncation unsound: a syzygy generator at homological degree {step} appeared at internal degree {degree}, at or beyond the degree cap; rerun with a larger --max-deg"
            ),
            Error::NotArtinian(msg) => write!(f, "quotient is not Artinian: {msg}"),
            Error::NotRegularSequence {
                degree,
                expected,
                actual,
            } => write!(
                f,
                "not a regular sequence: Hilbert function is {actual} in degree {degree}, complete intersection of the given degrees predicts {expected}"
            ),
            Error::SocleDegreeExcluded(s) => write!(
                f,
                "socle degree {s} is excluded by the closed Poincare series formula (it requires s = 2 or s >= 4)"
            ),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
