//! Higher-level q-deformed Fock spaces: the bar involution on standard
//! bases, canonical bases, and Jantzen-type matrices.

pub mod canonical;
pub mod charge;
pub mod error;
pub mod format;
pub mod jantzen;
pub mod laurent;
pub mod matrix;
pub mod partitions;
pub mod wedge;

pub use canonical::{matrix_delta, Computation, Report};
pub use charge::Multicharge;
pub use error::{Error, Result};
pub use jantzen::{matrix_j, Gate};
pub use laurent::LaurentPoly;
pub use matrix::{LabeledMatrix, Params};
pub use partitions::{Multipartition, Partition};
pub use wedge::{matrix_a, Straightener};
