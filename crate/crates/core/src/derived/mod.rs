//! Derived functors over finite-dimensional coalgebras and the checks that
//! compare independent pipelines.

mod adjoined;
mod checks;
mod cohom;
mod cotensor;
mod flipping;
mod hochschild;
mod les;
mod pseudo;

pub use adjoined::{adjoined_homology, adjoined_homology_shortcut, adjoined_shortcut_check};
pub use checks::{
    abrams_weibel_check, autoenvelope_check, duality_check, injector_probe, injector_verdict, tensor_bimodule,
};
pub use cohom::{adjunction_check, cohom, cohom_comodule, CohomSpace};
pub use cotensor::{cotensor, cotensor_bicomodule, cotensor_right, cotor};
pub use flipping::{flipping_check, FlippingResolution, PivotSpec};
pub use hochschild::{coalgebra_hochschild, hochschild_dims};
pub use les::{les_check, les_from_complexes, LesFunctor};
pub use pseudo::{pseudo_coext, pseudo_coext_right, pseudo_coext_right_with, pseudo_coext_with_resolution};
