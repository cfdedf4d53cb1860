//! Abelian extensions of finite-dimensional Leibniz algebras over the
//! rationals: structure constants, representations, second cohomology,
//! extension building and the orbit action that classifies them.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod extension;
pub mod harness;
pub mod linalg;
pub mod orbit;
pub mod rational;
pub mod report;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/extensions.md")]
    mod extensions {}
    #[doc = include_str!("../../../book/src/orbits.md")]
    mod orbits {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
