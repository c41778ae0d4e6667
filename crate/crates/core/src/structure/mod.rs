//! Coalgebras, algebras and their (bi)comodules and bimodules.

mod algebra;
mod bimodule;
pub(crate) mod coalgebra;
mod comodule;
mod envelope;
mod iso;
mod ses;

pub use algebra::{dualize_algebra, dualize_coalgebra, FinAlgebra};
pub use bimodule::Bimodule;
pub(crate) use coalgebra::same_coalgebra;
pub use coalgebra::{CoalgebraRef, FinCoalgebra};
pub use comodule::{
    bicomodule_hom_space, comodule_hom_space, left_hom_space, right_hom_space, Bicomodule, Comod, LeftComodule,
    RightComodule,
};
pub use envelope::{bicomodule_from_right_view, envelope, envelope_view, envelope_view_over};
pub use iso::{iso_verify, IsoWitness};
pub use ses::Ses;
