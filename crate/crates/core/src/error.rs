use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid {what} character {found:?} at position {position}")]
    InvalidChar {
        what: &'static str,
        position: usize,
        found: char,
    },
    #[error("stream positions are 1-based; index 0 is not a position")]
    ZeroIndex,
    #[error("path is empty")]
    EmptyPath,
    #[error("points {index} and {next} are not one unit step apart")]
    NotUnitStep { index: usize, next: usize },
    #[error("cannot fold a strip of odd width {0}")]
    OddWidth(u64),
    #[error("fold count {requested} exceeds the supported maximum of {max}")]
    TooManyFolds { requested: u32, max: u32 },
    #[error("invalid render options: {0}")]
    RenderOptions(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
