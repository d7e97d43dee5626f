//! Euler characteristics of rank-one reflexive sheaves on complete
//! simplicial toric varieties, computed directly from fan data.
//!
//! The pieces: fans and their validation ([`fan`]), reduced simplicial
//! homology over the rationals ([`homology`]), Stanley-Reisner and
//! irrelevant ideals with Alexander duality and multigraded Tor
//! ([`ideals`]), the divisor class group by integer Smith normal form
//! ([`classgroup`]), graded dimensions as lattice point counts
//! ([`graded`]), the Euler characteristic weight sum ([`euler`]), and an
//! independent degree-by-degree cohomology computation ([`cohomology`])
//! used to cross-check it. The [`cli`] module exposes everything over fan
//! files, with bundled examples in [`library`].

pub mod classgroup;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod euler;
pub mod fan;
pub mod graded;
pub mod homology;
pub mod ideals;
pub mod library;

mod linalg;
mod subsets;

pub use classgroup::{ClassGroupPresentation, DivisorClass, SmithDecomposition};
pub use cohomology::CohomologyVector;
pub use error::{Error, Result};
pub use euler::{ChiTrace, ExponentBound};
pub use fan::{Fan, FaceComplex, ValidationReport, WeilDivisor};
pub use homology::{BettiVector, Complex};
pub use ideals::{ChowPresentation, FineWeight, SquarefreeIdeal};
