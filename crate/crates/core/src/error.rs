use alloc::string::String;
use core::fmt;

/// Errors raised by the enumeration and verification routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    ZeroDiscriminant,
    ZeroInvariant,
    SingularResolvent,
    MultipleRoots,
    NotUnimodular,
    BadDegree(usize),
    ZeroForm,
    BadInput(String),
    BadPrimes(String),
    BadParams(String),
    BadDiscriminant(String),
    NotARing(String),
    InconsistentSizes(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDiscriminant => write!(f, "form has zero discriminant"),
            Error::ZeroInvariant => write!(f, "invariant must be nonzero"),
            Error::SingularResolvent => write!(f, "resolvent cubic has zero discriminant"),
            Error::MultipleRoots => write!(f, "polynomial has a multiple root"),
            Error::NotUnimodular => write!(f, "matrix determinant is not +1 or -1"),
            Error::BadDegree(d) => write!(f, "unsupported degree {d}"),
            Error::ZeroForm => write!(f, "all coefficients are zero"),
            Error::BadInput(m) => write!(f, "bad input: {m}"),
            Error::BadPrimes(m) => write!(f, "bad primes: {m}"),
            Error::BadParams(m) => write!(f, "bad parameters: {m}"),
            Error::BadDiscriminant(m) => write!(f, "bad discriminant: {m}"),
            Error::NotARing(m) => write!(f, "not a ring: {m}"),
            Error::InconsistentSizes(m) => write!(f, "inconsistent sizes: {m}"),
        }
    }
}

impl core::error::Error for Error {}
