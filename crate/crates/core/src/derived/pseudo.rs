use crate::complex::{cofree_right_resolution, ResolutionData, RightResolution};
use crate::error::{Error, Result};
use crate::report::GradedDims;
use crate::structure::{envelope, envelope_view_over, same_coalgebra, Bicomodule, RightComodule};

/// `Pcoext^s(X, M)` for right comodules, `0 ≤ s ≤ max_degree`.
///
/// Slot `s` of `h(I_•, M)` is the dual of `Hom^D(M, I_s)`, so homology is read
/// off the hom complex; `Pcoext⁰ = dim h(X, M)`.
pub fn pseudo_coext_right(x: &RightComodule, m: &RightComodule, max_degree: usize) -> Result<GradedDims> {
    if !same_coalgebra(x.over(), m.over()) {
        return Err(Error::MixedCoalgebras);
    }
    let res = cofree_right_resolution(x, max_degree + 1)?;
    pseudo_coext_right_with(&res, m, max_degree)
}

/// Same, on a caller-supplied resolution of length at least `max_degree + 1`.
pub fn pseudo_coext_right_with(res: &RightResolution, m: &RightComodule, max_degree: usize) -> Result<GradedDims> {
    if res.length() < max_degree + 1 {
        return Err(Error::MalformedInput(format!(
            "resolution of length {} cannot reach degree {max_degree}",
            res.length()
        )));
    }
    Ok(res.hom_complex(m)?.homology_dims_upto(max_degree + 1))
}

/// `Pcoext^s(X, M)` for `C`-`C` bicomodules, through their `C^e` views.
pub fn pseudo_coext(x: &Bicomodule, m: &Bicomodule, max_degree: usize) -> Result<GradedDims> {
    if !x.is_balanced() || !m.is_balanced() || !same_coalgebra(x.right_over(), m.right_over()) {
        return Err(Error::MixedCoalgebras);
    }
    let ce = envelope(x.right_over())?.into_ref();
    let (xv, _) = envelope_view_over(x, &ce)?;
    let (mv, _) = envelope_view_over(m, &ce)?;
    pseudo_coext_right(&xv, &mv, max_degree)
}

/// `Pcoext^s(X, M)` computed on a given two-sided resolution of `X`.
pub fn pseudo_coext_with_resolution(res: &ResolutionData, m: &Bicomodule, max_degree: usize) -> Result<GradedDims> {
    let view = res.envelope_view();
    if !same_coalgebra(res.resolved().right_over(), m.right_over()) || !m.is_balanced() {
        return Err(Error::MixedCoalgebras);
    }
    let (mv, _) = envelope_view_over(m, view.resolved().over())?;
    pseudo_coext_right_with(view, &mv, max_degree)
}
