//! A kernel for free cartesian closed categories over a signature: typed
//! arrow terms, a decision procedure for their equality, the polynomial
//! extension by an indeterminate point `x : T |- D`, and the two
//! functional-completeness adjunctions built on it.

pub mod completeness;
pub mod error;
pub mod gen;
pub mod lambda;
pub mod laws;
pub mod model;
pub mod poly;
pub mod rewrite;
pub mod surface;
pub mod syntax;

pub use error::{Error, Result};
pub use syntax::{derived, type_of, Arrow, ArrowType, Object, Side, Signature};
