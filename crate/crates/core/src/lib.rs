//! Exact computational homological algebra for finite-dimensional coalgebras.

pub mod complex;
pub mod derived;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod report;
pub mod structure;

pub use complex::{AscComplex, Bicomplex, BifunctorTag, Filtration, HochschildVariant, ResolutionData};
pub use error::{Error, Result};
pub use linalg::{FieldSpec, Mat, Scalar, Subquotient, Subspace};
pub use report::{CheckReport, CheckRow, GradedDims};
pub use structure::{
    Bicomodule, Bimodule, CoalgebraRef, Comod, FinAlgebra, FinCoalgebra, IsoWitness, LeftComodule, RightComodule, Ses,
};
