use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation is undefined on the empty word")]
    EmptyWord,
    #[error("alphabet size must be between 1 and {max}, got {sigma}")]
    InvalidAlphabet { sigma: usize, max: usize },
    #[error("character {ch:?} is not a letter of an alphabet of size {sigma}")]
    InvalidCharacter { ch: char, sigma: usize },
    #[error("letter index {letter} is outside an alphabet of size {sigma}")]
    LetterOutOfRange { letter: u8, sigma: usize },
    #[error("length must be positive")]
    ZeroLength,
    #[error("argument must be positive")]
    ZeroArgument,
    #[error("word {0} is not primitive")]
    NotPrimitive(String),
    #[error("word {0} is not a Lyndon word")]
    NotLyndon(String),
    #[error("slope {p}/{q} is invalid: need 0 < p < q")]
    InvalidSlope { p: u64, q: u64 },
    #[error("slope {p}/{q} is not in lowest terms (gcd = {gcd})")]
    NotCoprime { p: u64, q: u64, gcd: u64 },
    #[error("invalid continued fraction: {0}")]
    InvalidContinuedFraction(String),
    #[error("invalid directive sequence: {0}")]
    InvalidDirective(String),
    #[error("word {0} is not a standard word")]
    NotStandard(String),
    #[error("index {0} is out of range")]
    IndexOutOfRange(i64),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("word length {len} exceeds the limit of {limit} letters")]
    WordTooLong { len: u128, limit: usize },
    #[error("request needs {requested} units of work, limit is {limit}: {hint}")]
    WorkLimit {
        requested: u128,
        limit: u128,
        hint: &'static str,
    },
    #[error("there are no Lyndon words of length {n} over {sigma} letter(s)")]
    NoLyndonWords { n: usize, sigma: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
