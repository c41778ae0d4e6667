use super::asc::AscComplex;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::structure::{same_coalgebra, LeftComodule, RightComodule};

/// Cotensor map `ρ_M ⊗ 1 − 1 ⊗ λ_N : M ⊗ N → M ⊗ C ⊗ N`.
pub fn cotensor_map(m: &RightComodule, n: &LeftComodule) -> Result<Mat> {
    if !same_coalgebra(m.over(), n.over()) {
        return Err(Error::MixedCoalgebras);
    }
    let f = m.field();
    let a = m.rho().kron(&Mat::identity(f, n.dim()))?;
    let b = Mat::identity(f, m.dim()).kron(n.lambda())?;
    a.try_sub(&b)
}

/// Cobar complex `M ⊗ C^{⊗s} ⊗ N`, `0 ≤ s ≤ max_degree + 1`, with
/// `d = ρ⊗1 + Σ_{i=1}^{s} (−1)^i Δ_i + (−1)^{s+1} 1⊗λ`.
///
/// `d⁰ = ρ⊗1 − 1⊗λ` is the cotensor map, so `H⁰ = M □_C N`.
pub fn cobar_complex(m: &RightComodule, n: &LeftComodule, max_degree: usize) -> Result<AscComplex> {
    if !same_coalgebra(m.over(), n.over()) {
        return Err(Error::MixedCoalgebras);
    }
    let c = m.over();
    let f = c.field();
    let (dm, dn, d) = (m.dim(), n.dim(), c.dim());
    let id = |k: usize| Mat::identity(f, k);
    let top = max_degree + 1;
    let spaces: Vec<usize> = (0..=top).map(|s| dm * d.pow(s as u32) * dn).collect();
    let mut diffs = Vec::with_capacity(top);
    for s in 0..top {
        let ds = d.pow(s as u32);
        let mut diff = m.rho().kron(&id(ds * dn))?;
        for i in 1..=s {
            let inner = id(dm * d.pow(i as u32 - 1)).kron(&c.delta().kron(&id(d.pow((s - i) as u32) * dn))?)?;
            diff = if i % 2 == 0 { diff.try_add(&inner)? } else { diff.try_sub(&inner)? };
        }
        let last = id(dm * ds).kron(n.lambda())?;
        diff = if s % 2 == 0 { diff.try_sub(&last)? } else { diff.try_add(&last)? };
        diffs.push(diff);
    }
    AscComplex::new(f, 0, spaces, diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{kernel, FieldSpec};

    #[test]
    fn over_k1_only_degree_zero_survives() {
        let k = fixtures::k1().into_ref();
        let m = fixtures::trivial(&k, 2);
        let n = fixtures::trivial(&k, 3);
        let c = cobar_complex(&m.right_part(), &n.left_part(), 3).unwrap();
        assert_eq!(c.homology_dims_upto(4).dims, vec![6, 0, 0, 0]);
    }

    #[test]
    fn dp2_trivial_pair_has_zero_first_differential() {
        let c = fixtures::dp2().into_ref();
        let k = fixtures::k_c0(&c);
        let cx = cobar_complex(&k.right_part(), &k.left_part(), 3).unwrap();
        assert_eq!(cx.spaces(), &[1, 2, 4, 8, 16]);
        assert!(cx.diff(0).is_zero());
        assert_eq!(cx.homology_dims_upto(4).dims, vec![1, 1, 1, 1]);
    }

    #[test]
    fn h0_is_kernel_of_cotensor_map() {
        let c = fixtures::dp2().into_ref();
        let reg = crate::structure::Bicomodule::regular(&c);
        let cx = cobar_complex(&reg.right_part(), &reg.left_part(), 1).unwrap();
        let f = cx.diff(0);
        assert_eq!(cx.homology_dim(0), kernel(&f).dim());
        assert_eq!(cx.homology_dim(0), 2);
        assert_eq!(f.field(), FieldSpec::Rationals);
    }

    #[test]
    fn simple_matrix_comodule_is_coflat() {
        let c = fixtures::mc2().into_ref();
        let cx = cobar_complex(&fixtures::simple_right(&c), &fixtures::simple_left(&c), 2).unwrap();
        assert_eq!(cx.homology_dims_upto(3).dims, vec![1, 0, 0]);
    }
}
