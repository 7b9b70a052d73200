//! Exact computation of the constants that make derivatives of
//! integer-valued polynomials integer-valued again, together with
//! brute-force checks of every identity relating them.

pub mod binomial_poly;
pub mod constants;
pub mod error;
pub mod exact_arith;
pub mod stirling_fnk;
pub mod triangle;
pub mod verify;

pub use binomial_poly::{BinomialPoly, MonomialPoly};
pub use error::{Error, Result};
pub use exact_arith::{Integer, PrimeFactorization, Rational};
pub use triangle::{IntegerTriangle, RationalTriangle, StirlingTable, Triangle, TriangleLabel};
