//! Counting Lyndon factors.
//!
//! Exact closed forms for the maximum, expected total and expected distinct
//! number of Lyndon factors in words of length `n`, Christoffel and standard
//! Sturmian word constructions, and searches for Lyndon words with the fewest
//! distinct Lyndon factors.
//!
//! ```
//! use lyndonlab::{lyndon_profile, Word};
//!
//! let w: Word = "aabab".parse().unwrap();
//! assert_eq!(lyndon_profile(&w).unwrap().distinct_count, 5);
//! ```

pub mod cli;
pub mod counting;
mod error;
pub mod lyndon;
pub mod search;
pub mod sturmian;
pub mod table;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use lyndon::{
    is_lyndon, lyndon_conjugate, lyndon_counts, lyndon_profile, LyndonFactorProfile, LyndonWords,
};
pub use word::{Alphabet, Letter, Word};

/// Environment variable capping brute-force work (enumerated words).
pub const MAX_WORK_ENV: &str = "LYNDONLAB_MAX_WORK";

/// Default cap on the number of words a brute-force routine may enumerate.
pub const DEFAULT_MAX_WORK: u128 = 100_000_000;

/// Reads the work cap from [`MAX_WORK_ENV`], falling back to [`DEFAULT_MAX_WORK`].
pub fn max_work() -> u128 {
    std::env::var(MAX_WORK_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_WORK)
}
