//! Complexes, resolutions and spectral pages.

mod asc;
mod bicomplex;
mod bifunctor;
mod cobar;
mod hochschild;
mod resolution;

pub use asc::AscComplex;
pub use bicomplex::{Bicomplex, Filtration};
pub use bifunctor::{
    bifunctor_bicomplex, bifunctor_second_map, bifunctor_space, BifunctorTag, Direction, ObjectComplex,
};
pub use cobar::{cobar_complex, cotensor_map};
pub use hochschild::{hochschild_complex, HochschildVariant};
pub use resolution::{
    cofree_bicomodule, cofree_resolution, cofree_resolution_with, cofree_right, cofree_right_resolution,
    cofree_right_resolution_with, hom_induced, standard_resolution_map, standard_right_resolution, ResolutionData,
    RightResolution,
};
