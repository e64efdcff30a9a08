use alloc::string::String;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("enumeration exceeded the cap of {cap} diagrams")]
    CapExceeded { cap: usize },
    #[error("not a member: {0}")]
    NotMember(String),
    #[error("diagram is not a generic Kohnert diagram")]
    NotGenericDiagram,
    #[error("integer overflow in coefficient arithmetic")]
    Overflow,
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn not_member(msg: &str) -> Error {
    Error::NotMember(String::from(msg))
}

pub(crate) fn invalid(msg: &str) -> Error {
    Error::InvalidComposition(String::from(msg))
}
