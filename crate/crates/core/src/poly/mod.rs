//! Sparse multivariate polynomials over a prime field.

mod accum;
mod matrix;
mod monomial;
mod parse;
mod polynomial;
mod ring;
pub(crate) mod terms;

use std::sync::OnceLock;

pub(crate) use accum::Accumulator;
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MonomialOrder, MAX_EXPONENT, MAX_VARS};
pub use polynomial::Polynomial;
pub use ring::Ring;

use crate::error::{Error, Result};

/// Default bound on the total degree of any polynomial produced.
pub const DEFAULT_DEGREE_CAP: u32 = 128;

/// The active degree cap: `FERMAT_MAX_DEGREE` if set and valid, else the default.
pub fn degree_cap() -> u32 {
    static CAP: OnceLock<u32> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("FERMAT_MAX_DEGREE")
            .ok()
            .and_then(|s| s.trim().parse::<u32>().ok())
            .filter(|&c| c > 0)
            .map_or(DEFAULT_DEGREE_CAP, |c| c.min(MAX_EXPONENT))
    })
}

pub(crate) fn check_degree(degree: u32) -> Result<()> {
    let cap = degree_cap();
    if degree > cap {
        Err(Error::DegreeCap { degree, cap })
    } else {
        Ok(())
    }
}
