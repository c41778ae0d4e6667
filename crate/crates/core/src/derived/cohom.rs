use super::cotensor::cotensor_right;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::report::{CheckReport, CheckRow};
use crate::structure::{comodule_hom_space, right_hom_space, same_coalgebra, Bicomodule, Comod, RightComodule};

/// `h(X, M) = Hom^C(M, X)*`, represented by the hom space it dualizes.
///
/// The basis of `h(X, M)` is the dual basis of `hom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomSpace {
    pub hom: Subspace,
}

impl CohomSpace {
    pub fn dim(&self) -> usize {
        self.hom.dim()
    }
}

/// Cohom of two objects of the same kind.
pub fn cohom(x: &Comod, m: &Comod) -> Result<CohomSpace> {
    Ok(CohomSpace { hom: comodule_hom_space(m, x)? })
}

/// `h(X, M)` as a right `C`-comodule, for a `C`-`D` bicomodule `X` and a right
/// `D`-comodule `M`.
///
/// `Hom^D(M, X)` is a left `C`-comodule through `φ ↦ λ_X ∘ φ`; its dual is the
/// right comodule returned.
pub fn cohom_comodule(x: &Bicomodule, m: &RightComodule) -> Result<RightComodule> {
    if !same_coalgebra(x.right_over(), m.over()) {
        return Err(Error::MixedCoalgebras);
    }
    let c = x.left_over();
    let f = x.field();
    let d = c.dim();
    let (dx, dm) = (x.dim(), m.dim());
    let hom = right_hom_space(m, &x.right_part())?;
    let h = hom.dim();
    // column j of lifted: λ_X ∘ φ_j flattened with index (c, i, k) ↦ c·x·m + i·m + k
    let mut lifted = Mat::zeros(f, d * dx * dm, h);
    for j in 0..h {
        let phi = Mat::unflatten(&hom.basis().select_columns(&[j]), dx, dm);
        let img = x.lambda() * &phi;
        for r in 0..d * dx {
            for k in 0..dm {
                lifted.set(r * dm + k, j, img.get(r, k).clone());
            }
        }
    }
    let frame = Mat::identity(f, d).kron(hom.basis())?;
    let l = crate::linalg::solve(&frame, &lifted)?.ok_or(Error::RestrictionFailed)?;
    // ρ*[(k, c), j] = L[(c, j), k]
    let rho = Mat::from_fn(f, h * d, h, |row, j| {
        let (k, cc) = (row / d, row % d);
        l.get(cc * h + j, k).clone()
    });
    RightComodule::new(c.clone(), rho)
}

/// `dim Hom^C(h(X, M), N)` against `dim Hom^D(M, N □_C X)`.
pub fn adjunction_check(x: &Bicomodule, m: &RightComodule, n: &RightComodule) -> Result<CheckReport> {
    let h = cohom_comodule(x, m)?;
    let left = right_hom_space(&h, n)?.dim();
    let nx = cotensor_right(n, x)?;
    let right = right_hom_space(m, &nx)?.dim();
    let mut rep = CheckReport::new("cohom adjunction");
    rep.push(CheckRow::compare("dim Hom(h(X,M), N) vs dim Hom(M, N□X)", left, right));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn over_k1_is_product_of_dims() {
        let c = fixtures::k1().into_ref();
        let x = Comod::Bi(fixtures::trivial(&c, 2));
        let m = Comod::Bi(fixtures::trivial(&c, 3));
        assert_eq!(cohom(&x, &m).unwrap().dim(), 6);
    }

    #[test]
    fn cofree_target_gives_dual_space() {
        let c = fixtures::dp2().into_ref();
        let reg = Comod::Right(RightComodule::regular(&c));
        let k = Comod::Right(fixtures::k_c0(&c).right_part());
        assert_eq!(cohom(&reg, &k).unwrap().dim(), 1);
        assert_eq!(cohom(&reg, &reg).unwrap().dim(), 2);
    }

    #[test]
    fn cohom_comodule_validates() {
        let c = fixtures::dp2().into_ref();
        for x in [Bicomodule::regular(&c), fixtures::k_c0(&c)] {
            for m in [RightComodule::regular(&c), fixtures::k_c0(&c).right_part()] {
                let h = cohom_comodule(&x, &m).unwrap();
                assert!(h.validate().passed());
            }
        }
        let mc2 = fixtures::mc2().into_ref();
        let h = cohom_comodule(&Bicomodule::regular(&mc2), &fixtures::simple_right(&mc2)).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.validate().passed());
    }

    #[test]
    fn adjunction_on_fixture_triples() {
        for c in [fixtures::k1(), fixtures::dp2(), fixtures::g2()] {
            let c = c.into_ref();
            let objs = [Bicomodule::regular(&c), fixtures::k_c0(&c)];
            for x in &objs {
                for m in &objs {
                    for n in &objs {
                        let rep = adjunction_check(x, &m.right_part(), &n.right_part()).unwrap();
                        assert!(rep.passed(), "{rep}");
                    }
                }
            }
        }
        let mc2 = fixtures::mc2().into_ref();
        let reg = Bicomodule::regular(&mc2);
        let s = fixtures::simple_right(&mc2);
        assert!(adjunction_check(&reg, &s, &s).unwrap().passed());
    }
}
