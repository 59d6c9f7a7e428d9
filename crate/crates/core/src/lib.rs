//! Exact symbolic computation of generalised Gelfand-Graev characters of
//! `GL_n(q)` and `GU_n(q)`, and of the dimensions of their endomorphism
//! algebras, as polynomials in `q`.
//!
//! ```
//! use gggr::kawanaka::endo_dim;
//! use gggr::partitions::Partition;
//! use gggr::polyring::Sign;
//!
//! let mu = Partition::new(vec![2, 1])?;
//! let dim = endo_dim(&mu, Sign::Plus)?;
//! assert!(dim.is_monic());
//! assert_eq!(dim.degree(), Some(3 + 2 * mu.n_stat()));
//! # Ok::<(), gggr::Error>(())
//! ```
//!
//! The guide in `book/` walks through each module.

pub mod cli;
pub mod error;
pub mod green;
pub mod grouporders;
pub mod kawanaka;
pub mod oracle;
pub mod partitions;
pub mod polyring;
pub mod symfunc;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/green.md")]
    mod green {}
    #[doc = include_str!("../../../book/src/kawanaka.md")]
    mod kawanaka {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
