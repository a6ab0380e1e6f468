//! Chekanov differential graded algebras of Legendrian knots given by simple
//! fronts, their augmentations, and the linearized (Chekanov) polynomials.

pub mod algebra;
pub mod augmentation;
pub mod constructions;
pub mod disk;
pub mod error;
pub mod front;
pub mod gf2;
pub mod linearized;
pub mod poly;
pub mod table;

pub use error::{Error, Result};
