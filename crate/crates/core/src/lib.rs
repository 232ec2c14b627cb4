//! Exact computations with Hochschild homology of small smooth projective
//! varieties, carried out on Hodge cohomology.
//!
//! Every space in the corpus (projective spaces, curves, their products and
//! the point) is modelled by a finite-dimensional bigraded-commutative ring
//! with rational structure constants. On top of that ring the crate provides
//! characteristic classes, the Mukai and Shklyarov pairings, integral
//! transforms given by convolution with the Chern character of a kernel, a
//! path-algebra oracle for the Kronecker quiver, and a verification driver
//! that checks the comparison identities between all of these exactly.
//!
//! All arithmetic is over [`Q`] (arbitrary-precision rationals); there is no
//! floating point anywhere in the crate.

pub mod characteristic;
pub mod error;
pub mod graded_ring;
pub mod hochschild;
pub mod linalg;
pub mod quiver;
pub mod records;
pub mod series;
pub mod spaces;
pub mod transforms;
pub mod verify;

pub use characteristic::{star, vee, w_involution, BundleData};
pub use error::{Error, Result};
pub use graded_ring::{BigradedAlgebra, HodgeClass, Monomial};
pub use hochschild::{mukai_pairing, shklyarov_pairing, HHClass, Pairing};
pub use linalg::Matrix;
pub use quiver::PathAlgebra;
pub use spaces::{Factor, SpaceKind, SpaceModel};
pub use transforms::Kernel;
pub use verify::{Suite, VerificationReport};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rational `num / den`. Panics if `den == 0`.
pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^k` as a rational.
pub(crate) fn sign(k: u32) -> Q {
    if k.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}
