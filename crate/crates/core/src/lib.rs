//! Finite semirings of monotone chain endomorphisms: strings of two or more
//! anchors, derivations on them, and exhaustive checks of their properties.
//!
//! ```
//! use chain_semiring::{Chain, strings::StringType2};
//!
//! let s = StringType2::new(Chain::new(4)?, 1, 2)?;
//! assert_eq!(s.len(), 5);
//! assert_eq!(s.mul_index(3, 1)?, 0);
//! assert_eq!(s.mul_index(3, 2)?, 3);
//! # Ok::<(), chain_semiring::Error>(())
//! ```

pub mod chain;
pub mod derivations;
pub mod error;
pub mod strings;
pub mod verifier;

pub use chain::{check_semiring_axioms, AxiomReport, Carrier, Chain, ChainEndomorphism, LawCheck};
pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/chains.md")]
mod book_chains {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/strings.md")]
mod book_strings {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/type-m.md")]
mod book_type_m {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/derivations.md")]
mod book_derivations {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/delta.md")]
mod book_delta {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/closures.md")]
mod book_closures {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/full-string.md")]
mod book_full_string {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/verification.md")]
mod book_verification {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
