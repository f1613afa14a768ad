//! Exact arithmetic for quadratic fields, Weil polynomials of abelian
//! surfaces, projective modules over quadratic orders and integral monoid
//! rings. Everything here is `no_std` with `alloc`.
#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod exact;
pub mod monoid_ring;
pub mod order;
pub mod steinitz;
pub mod weil;

pub use error::{Error, Result};
pub use exact::{Integer, IntPoly, QuadElement, Rational};
pub use order::{class_group, class_of, is_principal, maximal_order, ClassGroup, FracIdeal, IdealClass, QuadOrder};
