//! Exact computations with the small quantum group of sl2 at odd roots of
//! unity and the 3-manifold invariants built from it.

pub mod error;
pub mod fixtures;
pub mod hopf;
pub mod linalg;
pub mod nonsemisimple;
pub mod rep;
pub mod scalar;
pub mod semisimple;
pub mod tangle;
pub mod verify;

pub use error::{Error, Result, ScalarError};
pub use scalar::{field_init, CycScalar, CyclotomicField, FieldContext};
