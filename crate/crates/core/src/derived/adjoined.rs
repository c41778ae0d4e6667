use super::cotensor::cotensor_bicomodule;
use super::pseudo::pseudo_coext_right;
use crate::error::{Error, Result};
use crate::report::{CheckReport, CheckRow, GradedDims};
use crate::structure::{envelope, envelope_view_over, same_coalgebra, Bicomodule, FinCoalgebra, RightComodule};

fn check_over_envelope(c: &FinCoalgebra, m: &RightComodule) -> Result<crate::structure::CoalgebraRef> {
    let ce = envelope(c)?;
    if !same_coalgebra(&ce, m.over()) {
        return Err(Error::MixedCoalgebras);
    }
    Ok(m.over().clone())
}

/// `HA_s(C, M) = Pcoext^s_{C^e}(C □_C C, M)` for a right `C^e`-comodule `M`.
pub fn adjoined_homology(c: &FinCoalgebra, m: &RightComodule, max_degree: usize) -> Result<GradedDims> {
    let ce = check_over_envelope(c, m)?;
    let reg = Bicomodule::regular(&c.clone().into_ref());
    let cc = cotensor_bicomodule(&reg, &reg)?;
    let (x, _) = envelope_view_over(&cc, &ce)?;
    pseudo_coext_right(&x, m, max_degree)
}

/// Same with `X = C` in place of `C □_C C`.
pub fn adjoined_homology_shortcut(c: &FinCoalgebra, m: &RightComodule, max_degree: usize) -> Result<GradedDims> {
    let ce = check_over_envelope(c, m)?;
    let (x, _) = envelope_view_over(&Bicomodule::regular(&c.clone().into_ref()), &ce)?;
    pseudo_coext_right(&x, m, max_degree)
}

/// Both routes side by side.
pub fn adjoined_shortcut_check(c: &FinCoalgebra, m: &RightComodule, max_degree: usize) -> Result<CheckReport> {
    let a = adjoined_homology(c, m, max_degree)?;
    let b = adjoined_homology_shortcut(c, m, max_degree)?;
    let mut rep = CheckReport::new("adjoined homology routes");
    for s in 0..=max_degree as i64 {
        rep.push(CheckRow::compare(format!("degree {s}"), a.at(s), b.at(s)));
    }
    Ok(rep)
}
