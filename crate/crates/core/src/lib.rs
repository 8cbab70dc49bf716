//! Exact commutative-algebra kernels for jet schemes of local algebras.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`poly`]: exact multivariate polynomials over `Q` or `F_p`;
//! - [`groebner`]: reduced Gröbner bases for ideals and submodules, with
//!   membership, elimination, intersection, colon and radical membership;
//! - [`jets`]: Hasse–Schmidt derivations, jet ideals and the universal jet
//!   over the closed point;
//! - [`closures`]: jet closures of ideals and submodules, arc-closedness
//!   certificates, jet-support membership and the socle/Gorenstein
//!   reduction used to prove arc-closedness of Artinian algebras;
//! - [`newton`]: integral closure of monomial ideals via Newton polyhedra.
#![no_std]

extern crate alloc;

pub mod closures;
pub mod error;
pub mod field;
pub mod groebner;
pub mod jets;
mod linalg;
pub mod newton;
pub mod poly;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, RingContext};
