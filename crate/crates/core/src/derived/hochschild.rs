use super::cotensor::cotor;
use crate::complex::{hochschild_complex, HochschildVariant};
use crate::error::{Error, Result};
use crate::report::GradedDims;
use crate::structure::{envelope, envelope_view_over, Bicomodule, Bimodule, FinCoalgebra};

/// Hochschild (co)homology dims of `m` in degrees `0..=max_degree`.
///
/// The chain variant reports `H_s` at index `s`.
pub fn hochschild_dims(m: &Bimodule, max_degree: usize, variant: HochschildVariant) -> Result<GradedDims> {
    m.require_valid()?;
    let cx = hochschild_complex(m, max_degree, variant)?;
    let dims = match variant {
        HochschildVariant::Cochain => cx.homology_dims_upto(max_degree + 1).dims,
        HochschildVariant::Chain => (0..=max_degree).map(|s| cx.homology_dim(-(s as i64))).collect(),
    };
    Ok(GradedDims::new(0, dims))
}

/// `HH^s(C, M) = Cotor^s_{C^e}(M, C)` with both arguments in their `C^e` views.
pub fn coalgebra_hochschild(c: &FinCoalgebra, m: &Bicomodule, max_degree: usize) -> Result<GradedDims> {
    if m.left_over().as_ref() != c || m.right_over().as_ref() != c {
        return Err(Error::MixedCoalgebras);
    }
    let ce = envelope(c)?.into_ref();
    let (mv, _) = envelope_view_over(m, &ce)?;
    let (_, cv) = envelope_view_over(&Bicomodule::regular(m.right_over()), &ce)?;
    cotor(&mv, &cv, max_degree)
}
