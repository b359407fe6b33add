//! Exact evaluation and classification engine for the SL2, GL2 and SO3 web
//! categories: diagram data model, fiber evaluation, congruence canonical
//! forms, trace-equation solutions and ternary trilinear invariants.

pub mod congruence;
pub mod diagram;
pub mod error;
pub mod fiber;
pub mod linalg;
pub mod scalar;
pub mod solutions;
pub mod trilinear;
