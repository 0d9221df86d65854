//! Extreme rays of tropical polyhedral cones.
//!
//! Works over the max-plus semiring `ℝ ∪ {-inf}` with exact rational
//! scalars. A cone given by inequalities `A x ≤ B x` is converted to its
//! extreme rays by tropical double description ([`dd`]); each candidate ray
//! is tested for extremality by building a directed hypergraph from the
//! inequalities saturated at it ([`extremality`]) and checking whether that
//! hypergraph has a single minimal strongly connected component
//! ([`minscc`]), in almost linear time.
//!
//! ```
//! use tropical_cones::dd::compute_extreme;
//! use tropical_cones::instances::fixtures::example_cone;
//!
//! let rays = compute_extreme(&example_cone());
//! assert_eq!(rays.len(), 4);
//! ```

pub mod cone;
pub mod dd;
pub mod error;
pub mod extremality;
pub mod hypergraph;
pub mod instances;
pub mod maxplus;
pub mod minscc;

pub use cone::{GeneratorSet, IneqSystem};
pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use maxplus::{Matrix, Scalar, Vector};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/max-plus.md")]
    mod max_plus {}
    #[doc = include_str!("../../../book/src/cones.md")]
    mod cones {}
    #[doc = include_str!("../../../book/src/hypergraphs.md")]
    mod hypergraphs {}
    #[doc = include_str!("../../../book/src/extremality.md")]
    mod extremality {}
    #[doc = include_str!("../../../book/src/double-description.md")]
    mod double_description {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
