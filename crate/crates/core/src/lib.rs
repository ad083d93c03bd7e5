//! Exact computation of singularity invariants of reduced complex curve germs
//! from polynomial defining equations: multiplicity, Hilbert-Samuel multiplicity
//! of the Jacobian ideal, the complete intersection discrepancy, the Milnor
//! number, and Whitney-equisingularity audits of one-parameter families.
//!
//! All arithmetic is over exact rationals; every reported invariant is an exact
//! integer. Randomized choices (generic linear forms and constant matrices) are
//! seeded and cross-checked by repeated trials.

pub mod basis;
pub mod error;
pub mod germfile;
pub mod ideal;
pub mod invariants;
pub mod matrix;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
pub use poly::{parse_poly, Poly, Rat, Ring};
