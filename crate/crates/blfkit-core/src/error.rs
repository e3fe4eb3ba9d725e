use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    UnsupportedConfiguration { genus: usize, marked: usize },
    UnknownGenerator(String),
    NotACurve(&'static str),
    ModelMismatch { left: usize, right: usize },
    SeparatingCurve,
    NotSeparating,
    NotInSc,
    CrossesC,
    EndpointMismatch,
    IndexOutOfRange { index: usize, len: usize },
    EmptyCycles,
    NotInDomain,
    BadConfiguration(&'static str),
    NotTorelli,
    NotApplicable(&'static str),
    BadParams(&'static str),
    /// A curve could not be carried to the standard position by a twist word.
    NoFrame,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedConfiguration { genus, marked } => {
                write!(f, "unsupported surface: genus {genus} with {marked} marked points")
            }
            Error::UnknownGenerator(n) => write!(f, "unknown generator `{n}`"),
            Error::NotACurve(why) => write!(f, "not an essential simple closed curve: {why}"),
            Error::ModelMismatch { left, right } => {
                write!(f, "curves live on different surfaces (genus {left} and {right})")
            }
            Error::SeparatingCurve => f.write_str("curve is separating"),
            Error::NotSeparating => f.write_str("curve is not separating"),
            Error::NotInSc => f.write_str("curve does not bound a torus containing c"),
            Error::CrossesC => f.write_str("curve crosses c"),
            Error::EndpointMismatch => f.write_str("arcs live on different capped surfaces"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for {len} cycles")
            }
            Error::EmptyCycles => f.write_str("system has no vanishing cycles"),
            Error::NotInDomain => f.write_str("word does not fix c up to orientation"),
            Error::BadConfiguration(why) => write!(f, "bad configuration: {why}"),
            Error::NotTorelli => f.write_str("system is not Torelli"),
            Error::NotApplicable(why) => write!(f, "not applicable: {why}"),
            Error::BadParams(why) => write!(f, "bad parameters: {why}"),
            Error::NoFrame => f.write_str("no change of coordinates to the standard curve was found"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
