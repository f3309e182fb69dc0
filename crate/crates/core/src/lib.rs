//! Exact enumerators and design checks for first-order Reed–Muller codes
//! `RM(1,m)` and their duals, the extended Hamming codes `H_{2^m}`.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: sparse polynomials in `(w, z, x, y)` with rational coefficients.
//! - [`gf2code`]: binary linear codes, Gray-code codeword enumeration, shells.
//! - [`jacobi`]: Jacobi polynomials, their MacWilliams-type transform and the
//!   closed forms for `RM(1,m)`.
//! - [`harmonic`]: subset functions, the differentiation operator, harmonic
//!   bases and harmonic weight enumerators.
//! - [`design`]: t-design tests by direct counting, by the harmonic criterion
//!   and by Jacobi coefficients, plus the end-to-end 4-design refutation.
//! - [`checks`]: the verification suite behind `rmdesign verify`.

pub mod checks;
pub mod design;
pub mod error;
pub mod gf2code;
pub mod harmonic;
pub mod io;
pub mod jacobi;
mod linalg;
pub mod poly;
pub mod subsets;

pub use design::{DesignReport, Method, Witness};
pub use error::{Error, Result};
pub use gf2code::{BinaryCode, BlockSet, Codeword};
pub use harmonic::{HarmonicFn, SubsetFn, Subspace3};
pub use jacobi::{FourSet, Side, TClass};
pub use poly::{Monomial, Poly4, Var};

/// Resource caps shared by the enumeration-heavy operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest code dimension that may be enumerated codeword by codeword.
    pub max_dimension: usize,
    /// Largest number of t-subsets a direct coverage count may visit.
    pub subset_cap: u64,
    /// Largest `C(n,k)` accepted by the elimination-based harmonic basis.
    pub harm_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dimension: gf2code::MAX_ENUM_DIMENSION,
            subset_cap: 10_000_000,
            harm_cap: 100_000,
        }
    }
}
