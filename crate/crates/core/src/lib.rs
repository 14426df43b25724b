//! Exact computational topology on finite abstract simplicial complexes.
//!
//! Everything is computed over exact arithmetic (arbitrary-precision
//! integers, rationals, prime fields); there are no floats anywhere.
//! All values are immutable after construction and all operations are
//! pure functions, so everything here is freely shareable across threads.

pub mod cohomology;
pub mod complex;
pub mod error;
pub mod exactlinalg;
pub mod homology;
pub mod hopfcatalog;
pub mod lefschetz;
pub mod manifold;
pub mod pi1;
pub mod report;

pub use complex::{SimplicialComplex, SimplicialMap, SimplicialPair};
pub use error::Error;
pub use exactlinalg::{IntMatrix, SmithDecomposition};
pub use homology::{Coefficients, HomologyGroup};
pub use report::Report;

pub type Result<T> = std::result::Result<T, Error>;
