use std::fmt;

/// Errors raised by the checked operations in this crate.
///
/// All integer arithmetic is exact or fails loudly; nothing wraps silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// An argument was zero where the operation is defined on numbers >= 1.
    ZeroComponent,
    /// An intermediate or final value exceeded the 64-bit range.
    Overflow,
    /// Input below the operation's minimum.
    TooSmall { value: u64, min: u64 },
    /// Input above the operation's configured budget (memory or enumeration).
    TooLarge { value: u64, max: u64 },
    /// The congruence-trace operations are defined for odd moduli only.
    EvenInput { value: u64 },
    /// Discriminant must be negative and congruent to 1 mod 4.
    BadDiscriminant { value: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::ZeroComponent => write!(f, "arguments must be at least 1"),
            Error::Overflow => write!(f, "value exceeds 64-bit range"),
            Error::TooSmall { value, min } => {
                write!(f, "input {value} is below the minimum {min}")
            }
            Error::TooLarge { value, max } => {
                write!(f, "input {value} exceeds the supported bound {max}")
            }
            Error::EvenInput { value } => {
                write!(f, "input {value} is even; operation requires an odd number")
            }
            Error::BadDiscriminant { value } => {
                write!(f, "discriminant {value} must be negative and 1 mod 4")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
