use crate::complex::{cobar_complex, cotensor_map};
use crate::error::{Error, Result};
use crate::linalg::{kernel, solve, Mat, Subspace};
use crate::report::GradedDims;
use crate::structure::{same_coalgebra, Bicomodule, LeftComodule, RightComodule};

/// `M □_C N` as a subspace of `M ⊗ N`.
pub fn cotensor(m: &RightComodule, n: &LeftComodule) -> Result<Subspace> {
    Ok(kernel(&cotensor_map(m, n)?))
}

/// Coordinates of `coaction · K` in the basis `frame`, or `RestrictionFailed`.
fn restrict_coaction(coaction: &Mat, kernel_basis: &Mat, frame: &Mat) -> Result<Mat> {
    solve(frame, &(coaction * kernel_basis))?.ok_or(Error::RestrictionFailed)
}

/// `M □_C N` for a `D`-`C` bicomodule `M` and a `C`-`E` bicomodule `N`, with
/// the outer coactions restricted to the kernel.
pub fn cotensor_bicomodule(m: &Bicomodule, n: &Bicomodule) -> Result<Bicomodule> {
    if !same_coalgebra(m.right_over(), n.left_over()) {
        return Err(Error::MixedCoalgebras);
    }
    let f = m.field();
    let k = cotensor(&m.right_part(), &n.left_part())?;
    let basis = k.basis();
    let (dd, de) = (m.left_over().dim(), n.right_over().dim());
    let lambda_mn = m.lambda().kron(&Mat::identity(f, n.dim()))?;
    let rho_mn = Mat::identity(f, m.dim()).kron(n.rho())?;
    let lambda = restrict_coaction(&lambda_mn, basis, &Mat::identity(f, dd).kron(basis)?)?;
    let rho = restrict_coaction(&rho_mn, basis, &basis.kron(&Mat::identity(f, de))?)?;
    Bicomodule::new(m.left_over().clone(), n.right_over().clone(), lambda, rho)
}

/// `N □_C X` for a right `C`-comodule `N` and a `C`-`D` bicomodule `X`, as a
/// right `D`-comodule.
pub fn cotensor_right(n: &RightComodule, x: &Bicomodule) -> Result<RightComodule> {
    if !same_coalgebra(n.over(), x.left_over()) {
        return Err(Error::MixedCoalgebras);
    }
    let f = n.field();
    let k = cotensor(n, &x.left_part())?;
    let basis = k.basis();
    let rho_nx = Mat::identity(f, n.dim()).kron(x.rho())?;
    let frame = basis.kron(&Mat::identity(f, x.right_over().dim()))?;
    RightComodule::new(x.right_over().clone(), restrict_coaction(&rho_nx, basis, &frame)?)
}

/// `dim Cotor^s_C(M, N)` for `0 ≤ s ≤ max_degree`, from the cobar complex.
pub fn cotor(m: &RightComodule, n: &LeftComodule, max_degree: usize) -> Result<GradedDims> {
    Ok(cobar_complex(m, n, max_degree)?.homology_dims_upto(max_degree + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn over_k1_no_constraint() {
        let c = fixtures::k1().into_ref();
        let m = fixtures::trivial(&c, 2);
        let n = fixtures::trivial(&c, 3);
        assert_eq!(cotensor(&m.right_part(), &n.left_part()).unwrap().dim(), 6);
        assert_eq!(cotor(&m.right_part(), &n.left_part(), 3).unwrap().dims, vec![6, 0, 0, 0]);
    }

    #[test]
    fn c_cotensor_c_is_c() {
        for c in [fixtures::dp2(), fixtures::mc2(), fixtures::g2()] {
            let c = c.into_ref();
            let reg = Bicomodule::regular(&c);
            let cc = cotensor_bicomodule(&reg, &reg).unwrap();
            assert_eq!(cc.dim(), c.dim());
            assert!(cc.validate().passed());
        }
    }

    #[test]
    fn trivial_pair_over_dp2() {
        let c = fixtures::dp2().into_ref();
        let k = fixtures::k_c0(&c);
        assert_eq!(cotensor(&k.right_part(), &k.left_part()).unwrap().dim(), 1);
        assert_eq!(cotor(&k.right_part(), &k.left_part(), 3).unwrap().dims, vec![1, 1, 1, 1]);
    }

    #[test]
    fn simple_matrix_comodule_has_no_higher_cotor() {
        let c = fixtures::mc2().into_ref();
        let d = cotor(&fixtures::simple_right(&c), &fixtures::simple_left(&c), 2).unwrap();
        assert_eq!(d.dims, vec![1, 0, 0]);
    }

    #[test]
    fn degree_zero_is_cotensor_on_fixture_pairs() {
        for c in [fixtures::k1(), fixtures::dp2(), fixtures::g2()] {
            let c = c.into_ref();
            let objs = [Bicomodule::regular(&c), fixtures::k_c0(&c)];
            for a in &objs {
                for b in &objs {
                    let t = cotensor(&a.right_part(), &b.left_part()).unwrap().dim();
                    assert_eq!(cotor(&a.right_part(), &b.left_part(), 1).unwrap().at(0), t);
                }
            }
        }
    }

    #[test]
    fn right_cotensor_of_regular() {
        let c = fixtures::dp2().into_ref();
        let n = RightComodule::regular(&c);
        let r = cotensor_right(&n, &Bicomodule::regular(&c)).unwrap();
        assert_eq!(r.dim(), 2);
        assert!(r.validate().passed());
    }

    #[test]
    fn mismatched_middle_coalgebra() {
        let a = fixtures::dp2().into_ref();
        let b = fixtures::g2().into_ref();
        let r = cotensor_bicomodule(&Bicomodule::regular(&a), &Bicomodule::regular(&b));
        assert_eq!(r, Err(Error::MixedCoalgebras));
    }
}
