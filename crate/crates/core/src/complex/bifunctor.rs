use std::fmt;
use std::str::FromStr;

use super::bicomplex::Bicomplex;
use super::cobar::cotensor_map;
use crate::error::{Error, Result};
use crate::linalg::{kernel, solve, Mat, Subspace};
use crate::structure::{comodule_hom_space, Comod};

/// Built-in bifunctors `F(X, Y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BifunctorTag {
    /// `X ⊗ Y` on underlying spaces.
    PlainTensor,
    /// `X □_C Y` for right `X` and left `Y`.
    Cotensor,
    /// `Hom^C(X, Y)`.
    ComoduleHom,
    /// `h(X, Y) = Hom^C(Y, X)*`.
    Cohom,
}

impl BifunctorTag {
    pub const ALL: [BifunctorTag; 4] =
        [BifunctorTag::PlainTensor, BifunctorTag::Cotensor, BifunctorTag::ComoduleHom, BifunctorTag::Cohom];

    pub fn name(self) -> &'static str {
        match self {
            BifunctorTag::PlainTensor => "plain-tensor",
            BifunctorTag::Cotensor => "cotensor",
            BifunctorTag::ComoduleHom => "comodule-hom",
            BifunctorTag::Cohom => "cohom",
        }
    }

    /// Whether the functor is covariant in its first argument. All four are
    /// covariant in the second.
    pub fn covariant_in_first(self) -> bool {
        matches!(self, BifunctorTag::PlainTensor | BifunctorTag::Cotensor)
    }
}

impl fmt::Display for BifunctorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BifunctorTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BifunctorTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::CatalogMismatch(format!("unknown bifunctor {s:?}")))
    }
}

/// Which way the maps of an [`ObjectComplex`] point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `maps[i]: objects[i] → objects[i+1]`.
    Ascending,
    /// `maps[i]: objects[i+1] → objects[i]`, as in a projective resolution.
    Descending,
}

/// Finite complex of comodules with colinear maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectComplex {
    objects: Vec<Comod>,
    maps: Vec<Mat>,
    direction: Direction,
}

impl ObjectComplex {
    pub fn new(objects: Vec<Comod>, maps: Vec<Mat>, direction: Direction) -> Result<Self> {
        if objects.is_empty() || maps.len() + 1 != objects.len() {
            return Err(Error::MalformedInput("object complex needs one more object than maps".into()));
        }
        for (i, f) in maps.iter().enumerate() {
            let (src, tgt) = match direction {
                Direction::Ascending => (&objects[i], &objects[i + 1]),
                Direction::Descending => (&objects[i + 1], &objects[i]),
            };
            if !src.is_morphism(f, tgt) {
                return Err(Error::MalformedInput(format!("map {i} is not a comodule morphism")));
            }
        }
        for i in 1..maps.len() {
            let comp = match direction {
                Direction::Ascending => &maps[i] * &maps[i - 1],
                Direction::Descending => &maps[i - 1] * &maps[i],
            };
            if !comp.is_zero() {
                return Err(Error::NotAComplex(i as i64 - 1));
            }
        }
        Ok(ObjectComplex { objects, maps, direction })
    }

    /// A single object in position 0.
    pub fn single(object: Comod) -> Self {
        ObjectComplex { objects: vec![object], maps: vec![], direction: Direction::Ascending }
    }

    pub fn objects(&self) -> &[Comod] {
        &self.objects
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }
}

/// `F(X, Y)` as a subspace of its ambient matrix or tensor space.
pub fn bifunctor_space(tag: BifunctorTag, x: &Comod, y: &Comod) -> Result<Subspace> {
    let f = x.field();
    match tag {
        BifunctorTag::PlainTensor => Ok(Subspace::full(f, x.dim() * y.dim())),
        BifunctorTag::Cotensor => {
            let (Some(r), Some(l)) = (x.as_right(), y.as_left()) else {
                return Err(Error::CatalogMismatch(format!("cotensor of {} and {}", x.kind(), y.kind())));
            };
            Ok(kernel(&cotensor_map(&r, &l)?))
        }
        BifunctorTag::ComoduleHom => comodule_hom_space(x, y),
        BifunctorTag::Cohom => comodule_hom_space(y, x),
    }
}

fn restrict(a: &Mat, src: &Subspace, tgt: &Subspace) -> Result<Mat> {
    solve(tgt.basis(), &(a * src.basis()))?
        .ok_or_else(|| Error::NotWellDefined("bifunctor image leaves the target space".into()))
}

/// Map induced by `a: Y → Y'` in the second argument between `at_y = F(X, Y)`
/// and `at_y2 = F(X, Y')`. `Cohom` cells are dual to hom spaces, so its map is
/// the transpose of precomposition.
pub fn bifunctor_second_map(tag: BifunctorTag, x: &Comod, a: &Mat, at_y: &Subspace, at_y2: &Subspace) -> Result<Mat> {
    let ix = Mat::identity(x.field(), x.dim());
    match tag {
        BifunctorTag::PlainTensor | BifunctorTag::Cotensor => restrict(&ix.kron(a)?, at_y, at_y2),
        BifunctorTag::ComoduleHom => restrict(&a.kron(&ix)?, at_y, at_y2),
        BifunctorTag::Cohom => Ok(restrict(&ix.kron(&a.transpose())?, at_y2, at_y)?.transpose()),
    }
}

/// Grid `F(P_p, Q_q)` with induced differentials; vertical maps carry `(−1)^p`.
///
/// Each argument's variance and direction must combine into ascending maps.
pub fn bifunctor_bicomplex(pres: &ObjectComplex, qres: &ObjectComplex, tag: BifunctorTag) -> Result<Bicomplex> {
    let first_ok = pres.len() == 1 || (tag.covariant_in_first() == (pres.direction == Direction::Ascending));
    let second_ok = qres.len() == 1 || qres.direction == Direction::Ascending;
    if !first_ok || !second_ok {
        return Err(Error::CatalogMismatch(format!(
            "{tag} with {:?} first argument and {:?} second argument does not give ascending maps",
            pres.direction, qres.direction
        )));
    }
    let field = pres.objects[0].field();
    let (np, nq) = (pres.len(), qres.len());
    let mut cells = Vec::with_capacity(np);
    for x in &pres.objects {
        let col: Result<Vec<Subspace>> = qres.objects.iter().map(|y| bifunctor_space(tag, x, y)).collect();
        cells.push(col?);
    }
    let dims = cells.iter().map(|c| c.iter().map(Subspace::dim).collect()).collect();
    let mut dh = Vec::with_capacity(np.saturating_sub(1));
    for p in 0..np.saturating_sub(1) {
        let x = &pres.maps[p];
        let mut col = Vec::with_capacity(nq);
        for (q, y) in qres.objects.iter().enumerate() {
            let iy = Mat::identity(field, y.dim());
            let m = match tag {
                BifunctorTag::PlainTensor | BifunctorTag::Cotensor => {
                    restrict(&x.kron(&iy)?, &cells[p][q], &cells[p + 1][q])?
                }
                BifunctorTag::ComoduleHom => restrict(&iy.kron(&x.transpose())?, &cells[p][q], &cells[p + 1][q])?,
                BifunctorTag::Cohom => restrict(&x.kron(&iy)?, &cells[p + 1][q], &cells[p][q])?.transpose(),
            };
            col.push(m);
        }
        dh.push(col);
    }
    let mut dv = Vec::with_capacity(np);
    for (p, x) in pres.objects.iter().enumerate() {
        let mut col = Vec::with_capacity(nq.saturating_sub(1));
        for (q, a) in qres.maps.iter().enumerate().take(nq.saturating_sub(1)) {
            let m = bifunctor_second_map(tag, x, a, &cells[p][q], &cells[p][q + 1])?;
            col.push(if p % 2 == 1 { m.scale_i64(-1) } else { m });
        }
        dv.push(col);
    }
    Bicomplex::new(field, dims, dh, dv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Filtration;
    use crate::fixtures;
    use crate::structure::Bicomodule;

    fn k1_identity_pair() -> (ObjectComplex, ObjectComplex) {
        let c = fixtures::k1().into_ref();
        let k = Comod::Bi(fixtures::trivial(&c, 1));
        let one = Mat::identity(c.field(), 1);
        let p = ObjectComplex::new(vec![k.clone(), k.clone()], vec![one], Direction::Ascending).unwrap();
        (p, ObjectComplex::single(k))
    }

    #[test]
    fn length_zero_gives_single_cell() {
        let c = fixtures::dp2().into_ref();
        let k = ObjectComplex::single(Comod::Bi(fixtures::k_c0(&c)));
        let reg = ObjectComplex::single(Comod::Bi(Bicomodule::regular(&c)));
        for tag in BifunctorTag::ALL {
            let b = bifunctor_bicomplex(&k, &reg, tag).unwrap();
            assert_eq!((b.width(), b.height()), (1, 1));
        }
        // the socle projection c1 ↦ 1 spans Hom(C, k)
        let b = bifunctor_bicomplex(&k, &reg, BifunctorTag::Cohom).unwrap();
        assert_eq!(b.dim(0, 0), 1);
        let b = bifunctor_bicomplex(&reg, &k, BifunctorTag::Cohom).unwrap();
        assert_eq!(b.dim(0, 0), 1);
    }

    #[test]
    fn plain_tensor_over_k1() {
        let (p, q) = k1_identity_pair();
        let b = bifunctor_bicomplex(&p, &q, BifunctorTag::PlainTensor).unwrap();
        assert_eq!(b.dims(), &[vec![1], vec![1]]);
        assert!(b.dh(0, 0).is_identity());
        assert_eq!(b.total_complex().unwrap().homology_dims().dims, vec![0, 0]);
    }

    #[test]
    fn variance_mismatch_is_rejected() {
        let (p, q) = k1_identity_pair();
        assert!(matches!(bifunctor_bicomplex(&p, &q, BifunctorTag::Cohom), Err(Error::CatalogMismatch(_))));
        let c = fixtures::dp2().into_ref();
        let r = ObjectComplex::single(Comod::Right(crate::structure::RightComodule::regular(&c)));
        assert!(matches!(bifunctor_bicomplex(&r, &r, BifunctorTag::Cotensor), Err(Error::CatalogMismatch(_))));
    }

    #[test]
    fn two_by_two_grid_anticommutes() {
        let c = fixtures::k1().into_ref();
        let k = Comod::Bi(fixtures::trivial(&c, 1));
        let k2 = Comod::Bi(fixtures::trivial(&c, 2));
        let i = Mat::from_i64(c.field(), &[&[1], &[1]]);
        let p = ObjectComplex::new(vec![k.clone(), k2.clone()], vec![i.clone()], Direction::Ascending).unwrap();
        let q = ObjectComplex::new(vec![k, k2], vec![i], Direction::Ascending).unwrap();
        let b = bifunctor_bicomplex(&p, &q, BifunctorTag::PlainTensor).unwrap();
        assert_eq!(b.dims(), &[vec![1, 2], vec![2, 4]]);
        for f in [Filtration::I, Filtration::II] {
            let (e, t) = b.euler_characteristics(f).unwrap();
            assert_eq!(e, t);
        }
        // Künneth: (0,1) ⊗ (0,1) concentrated in total degree 2
        assert_eq!(b.total_complex().unwrap().homology_dims().dims, vec![0, 0, 1]);
    }

    #[test]
    fn tag_names_round_trip() {
        for t in BifunctorTag::ALL {
            assert_eq!(t.name().parse::<BifunctorTag>().unwrap(), t);
        }
        assert!("tensor".parse::<BifunctorTag>().is_err());
    }
}
