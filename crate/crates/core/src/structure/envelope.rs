use super::coalgebra::{same_coalgebra, CoalgebraRef, FinCoalgebra};
use super::comodule::{Bicomodule, LeftComodule, RightComodule};
use crate::error::{Error, Result};
use crate::linalg::{tensor_permutation, Mat};

/// `C^e = C ⊗ C^op` with basis `c ⊗ c'` at `c·d + c'`.
///
/// `Δ_e = (1 ⊗ swap ⊗ 1)∘(Δ ⊗ Δ^op)`, so `c ⊗ c'` maps to
/// `Σ (c₁ ⊗ c'₂) ⊗ (c₂ ⊗ c'₁)`; `ε_e = ε ⊗ ε`.
pub fn envelope(c: &FinCoalgebra) -> Result<FinCoalgebra> {
    c.require_valid()?;
    let d = c.dim();
    let f = c.field();
    let op = c.opposite();
    let middle = tensor_permutation(f, &[d, d, d, d], &[0, 2, 1, 3]);
    let delta = &middle * &c.delta().kron(op.delta())?;
    FinCoalgebra::new(delta, c.counit().kron(c.counit())?)
}

/// A `C`-`C` bicomodule seen as a one-sided `C^e`-comodule, both ways.
///
/// Right view: `m ↦ Σ m₀ ⊗ (m₁ ⊗ m₋₁)` where `m₁` comes from `ρ` and `m₋₁`
/// from `λ`. Left view: `m ↦ Σ (m₋₁ ⊗ m₁) ⊗ m₀`.
pub fn envelope_view(m: &Bicomodule) -> Result<(RightComodule, LeftComodule)> {
    if !same_coalgebra(m.left_over(), m.right_over()) {
        return Err(Error::MixedCoalgebras);
    }
    let c = m.right_over();
    let ce: CoalgebraRef = envelope(c)?.into_ref();
    envelope_view_over(m, &ce)
}

/// [`envelope_view`] against an already built envelope, so repeated views
/// share one coalgebra handle.
pub fn envelope_view_over(m: &Bicomodule, ce: &CoalgebraRef) -> Result<(RightComodule, LeftComodule)> {
    if !same_coalgebra(m.left_over(), m.right_over()) {
        return Err(Error::MixedCoalgebras);
    }
    let d = m.right_over().dim();
    if ce.dim() != d * d {
        return Err(Error::DimensionMismatch(format!("envelope of dim {} for a dim-{d} coalgebra", ce.dim())));
    }
    let f = m.field();
    let dim = m.dim();
    // (λ ⊗ 1)∘ρ lands in C ⊗ M ⊗ C with factors (left, m, right)
    let both = m.two_sided_coaction();
    let to_right = tensor_permutation(f, &[d, dim, d], &[1, 2, 0]);
    let to_left = tensor_permutation(f, &[d, dim, d], &[0, 2, 1]);
    let right = RightComodule::new(ce.clone(), &to_right * &both)?;
    let left = LeftComodule::new(ce.clone(), &to_left * &both)?;
    Ok((right, left))
}

/// Inverse of the right view: recovers the `C`-`C` bicomodule from a right
/// `C^e`-comodule by applying `1 ⊗ 1 ⊗ ε` and `1 ⊗ ε ⊗ 1`.
pub fn bicomodule_from_right_view(c: &CoalgebraRef, m: &RightComodule) -> Result<Bicomodule> {
    let d = c.dim();
    if m.over().dim() != d * d {
        return Err(Error::DimensionMismatch("not a comodule over the envelope".into()));
    }
    let f = c.field();
    let dim = m.dim();
    let im = Mat::identity(f, dim);
    let id = c.id();
    let rho = &im.kron(&id.kron(c.counit())?)? * m.rho();
    let to_left = tensor_permutation(f, &[dim, d], &[1, 0]);
    let lambda = &to_left * &(&im.kron(&c.counit().kron(&id)?)? * m.rho());
    Bicomodule::new(c.clone(), c.clone(), lambda, rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn envelope_of_k1_is_k1() {
        assert_eq!(envelope(&fixtures::k1()).unwrap(), fixtures::k1());
        assert_eq!(envelope(&fixtures::fp_point()).unwrap(), fixtures::fp_point());
    }

    #[test]
    fn envelopes_validate() {
        for c in [fixtures::dp2(), fixtures::mc2(), fixtures::g2()] {
            let e = envelope(&c).unwrap();
            assert_eq!(e.dim(), c.dim() * c.dim());
            assert!(e.validate().passed());
        }
    }

    #[test]
    fn envelope_counit_on_c1c1_vanishes() {
        let e = envelope(&fixtures::dp2()).unwrap();
        assert!(e.counit().get(0, 3).is_zero());
        assert!(e.counit().get(0, 0).is_one());
    }

    #[test]
    fn views_validate() {
        for c in [fixtures::k1(), fixtures::dp2(), fixtures::mc2(), fixtures::g2()] {
            let c = c.into_ref();
            let mut objects = vec![Bicomodule::regular(&c)];
            if c.dim() != 4 {
                objects.push(fixtures::k_c0(&c));
            }
            for m in objects {
                let (r, l) = envelope_view(&m).unwrap();
                assert_eq!(r.dim(), m.dim());
                assert!(r.validate().passed(), "right view over dim {}", c.dim());
                assert!(l.validate().passed(), "left view over dim {}", c.dim());
            }
        }
    }

    #[test]
    fn right_view_round_trips() {
        let c = fixtures::mc2().into_ref();
        let m = Bicomodule::regular(&c);
        let (r, _) = envelope_view(&m).unwrap();
        assert_eq!(bicomodule_from_right_view(&c, &r).unwrap(), m);
    }

    #[test]
    fn mixed_sides_rejected() {
        let a = fixtures::dp2().into_ref();
        let b = fixtures::g2().into_ref();
        let m = Bicomodule::new(a.clone(), b.clone(), a.delta().clone(), b.delta().clone()).unwrap();
        assert_eq!(envelope_view(&m), Err(Error::MixedCoalgebras));
    }
}
