//! Exact prime-field commutative algebra for Fermat point configurations.
//!
//! Layers, bottom up: [`field`] arithmetic, sparse [`poly`]nomials and
//! polynomial matrices, Gröbner-based [`ideal`] operations, [`hilbert`]
//! series data, and the [`fermat`] constructions built on top of them.

pub mod error;
pub mod fermat;
pub mod field;
pub mod hilbert;
pub mod ideal;
pub mod par;
pub mod poly;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use ideal::{Certificate, Ideal};
pub use poly::{Monomial, MonomialOrder, PolyMatrix, Polynomial, Ring};
