//! Exact-arithmetic construction and machine verification of the
//! complementary Bannai-Ito polynomial family: recurrences, kernel
//! transforms, hypergeometric closed forms, the one-parameter family of
//! Dunkl shift operators that diagonalize the polynomials, discrete
//! orthogonality, the associated quadratic algebra with its Casimir
//! element, and the limit/special-case families.

pub mod algebra;
pub mod aw;
pub mod dunkl;
pub mod error;
pub mod family;
pub mod hyper;
pub mod limits;
pub mod matrix;
pub mod op;
pub mod ortho;
pub mod params;
pub mod poly;
pub mod ratfunc;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};
pub use params::ParamSet;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::Rat;
