//! Exact computations with finite `F_p`-linear preadditive categories.

pub mod center;
pub mod completion;
pub mod error;
pub mod exactla;
pub mod fincat;
pub mod ideals;
pub mod limits;
pub mod modules;
pub mod peirce;
pub mod report;
pub mod torsion;
pub mod ttf;

pub use error::{Error, Result};
pub use exactla::{Matrix, PrimeField, Subspace};
pub use fincat::{FinCat, Morphism};
pub use limits::Limits;

// The guide's snippets run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/categories.md")]
    mod categories {}
    #[doc = include_str!("../../../book/src/completions.md")]
    mod completions {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/torsion.md")]
    mod torsion {}
    #[doc = include_str!("../../../book/src/ttf.md")]
    mod ttf {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
