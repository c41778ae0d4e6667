use crate::complex::{
    bifunctor_bicomplex, bifunctor_second_map, bifunctor_space, cofree_resolution, BifunctorTag, Direction, Filtration,
    ObjectComplex,
};
use crate::error::{Error, Result};
use crate::linalg::{rank, Mat};
use crate::report::{CheckReport, CheckRow};
use crate::structure::{Bicomodule, Comod};

/// Natural isomorphism `ψ_A: F(P, A) ≅ G(I, A)` declared on finitely many test
/// objects and checked for naturality on declared morphisms between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotSpec {
    pub f: BifunctorTag,
    pub g: BifunctorTag,
    pub p: Comod,
    pub i: Comod,
    pub tests: Vec<Comod>,
    /// `witnesses[k]` is `ψ` on `tests[k]`, in the bases of the two cells.
    pub witnesses: Vec<Mat>,
    /// `(j, k, a)` with `a: tests[j] → tests[k]`.
    pub morphisms: Vec<(usize, usize, Mat)>,
}

impl PivotSpec {
    /// Invertibility of every `ψ_A` and commutation of every naturality square.
    pub fn verify(&self) -> Result<CheckReport> {
        if self.tests.len() != self.witnesses.len() {
            return Err(Error::MalformedInput(format!(
                "{} test objects but {} witnesses",
                self.tests.len(),
                self.witnesses.len()
            )));
        }
        let mut rep = CheckReport::new("pivot");
        let mut cells = Vec::with_capacity(self.tests.len());
        for (k, (a, psi)) in self.tests.iter().zip(&self.witnesses).enumerate() {
            let fa = bifunctor_space(self.f, &self.p, a)?;
            let ga = bifunctor_space(self.g, &self.i, a)?;
            let ok = psi.shape() == (ga.dim(), fa.dim()) && fa.dim() == ga.dim() && rank(psi) == fa.dim();
            rep.push(CheckRow::flag(format!("ψ_{k} invertible"), ok, format!("{} → {}", fa.dim(), ga.dim())));
            cells.push((fa, ga));
        }
        for (j, k, a) in &self.morphisms {
            let (j, k) = (*j, *k);
            if j >= self.tests.len() || k >= self.tests.len() {
                return Err(Error::MalformedInput(format!("morphism {j} → {k} names a missing test object")));
            }
            let fmap = bifunctor_second_map(self.f, &self.p, a, &cells[j].0, &cells[k].0)?;
            let gmap = bifunctor_second_map(self.g, &self.i, a, &cells[j].1, &cells[k].1)?;
            let (pj, pk) = (&self.witnesses[j], &self.witnesses[k]);
            let ok = pj.shape() == (gmap.cols(), fmap.cols())
                && pk.shape() == (gmap.rows(), fmap.rows())
                && &gmap * pj == pk * &fmap;
            rep.push(CheckRow::flag(format!("naturality {j} → {k}"), ok, ""));
        }
        Ok(rep)
    }
}

/// Finite resolution `… → P_1 → P_0 → A → 0` by pivot objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlippingResolution {
    pub resolved: Comod,
    pub pivots: Vec<PivotSpec>,
    /// `maps[p]: P_{p+1} → P_p`.
    pub maps: Vec<Mat>,
    /// `P_0 → A`.
    pub augmentation: Mat,
}

impl FlippingResolution {
    /// Morphism and exactness checks for the augmented complex.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new("flipping resolution");
        let n = self.pivots.len();
        if n == 0 || self.maps.len() + 1 != n {
            rep.push(CheckRow::flag("shape", false, format!("{n} pivots, {} maps", self.maps.len())));
            return rep;
        }
        let obj = |p: usize| &self.pivots[p].p;
        let eps_ok = self.augmentation.shape() == (self.resolved.dim(), obj(0).dim())
            && obj(0).is_morphism(&self.augmentation, &self.resolved);
        rep.push(CheckRow::flag("augmentation colinear", eps_ok, ""));
        for (p, m) in self.maps.iter().enumerate() {
            let ok = m.shape() == (obj(p).dim(), obj(p + 1).dim()) && obj(p + 1).is_morphism(m, obj(p));
            rep.push(CheckRow::flag(format!("map {p} colinear"), ok, ""));
        }
        if !rep.passed() {
            return rep;
        }
        rep.push(CheckRow::compare("exact at A", rank(&self.augmentation), self.resolved.dim()));
        // the map out of P_p is maps[p-1] (the augmentation at p = 0), into it maps[p]
        for p in 0..n {
            let out = if p == 0 { &self.augmentation } else { &self.maps[p - 1] };
            let inc = self.maps.get(p).map_or(0, rank);
            rep.push(CheckRow::compare(format!("exact at P_{p}"), obj(p).dim() - rank(out), inc));
        }
        rep
    }
}

/// Bicomplex `F(P_p, Q_q)` with `Q_•` the cofree resolution of `c`; checks
/// that `^I E²` is concentrated in `p = 0` and that both `E²` pages carry the
/// dimensions of the total homology through `max_degree`.
pub fn flipping_check(res: &FlippingResolution, b: &Comod, c: &Bicomodule, max_degree: usize) -> Result<CheckReport> {
    b.require_valid("B")?;
    let structural = res.validate();
    if let Some(row) = structural.failures().next() {
        return Err(Error::MalformedInput(format!("not a resolution: {} {}", row.label, row.detail)));
    }
    let f = res.pivots[0].f;
    if res.pivots.iter().any(|pv| pv.f != f || pv.g != res.pivots[0].g) {
        return Err(Error::MalformedInput("pivots disagree on the bifunctor pair".into()));
    }
    let mut rep = CheckReport::new("flipping spectral sequence");
    for (p, pv) in res.pivots.iter().enumerate() {
        let v = pv.verify()?;
        if let Some(row) = v.failures().next() {
            return Err(Error::PivotFailure(format!("P_{p}: {} {}", row.label, row.detail)));
        }
        rep.push(CheckRow::flag(format!("pivot P_{p}"), true, format!("{} rows", v.rows.len())));
    }
    let direction = if f.covariant_in_first() { Direction::Ascending } else { Direction::Descending };
    let objects: Vec<Comod> = res.pivots.iter().map(|pv| pv.p.clone()).collect();
    let pres = ObjectComplex::new(objects.clone(), res.maps.clone(), direction)?;

    let evidence: Vec<String> =
        objects.iter().map(|x| bifunctor_space(f, x, b).map(|s| s.dim().to_string())).collect::<Result<_>>()?;
    rep.push(CheckRow::flag(format!("{f}(P_•, B)"), true, evidence.join(" ")));

    let q = cofree_resolution(c, max_degree)?;
    let qobjs = q.terms().iter().cloned().map(Comod::Bi).collect();
    let qres = ObjectComplex::new(qobjs, q.maps().to_vec(), Direction::Ascending)?;
    let bi = bifunctor_bicomplex(&pres, &qres, f)?;
    let tot = bi.total_complex()?;
    let e2_i = bi.spectral_page(Filtration::I, 2)?;
    let e2_ii = bi.spectral_page(Filtration::II, 2)?;

    let off: Vec<String> = e2_i
        .iter()
        .enumerate()
        .skip(1)
        .flat_map(|(p, col)| col.iter().enumerate().filter(|(_, &d)| d > 0).map(move |(q, _)| format!("({p},{q})")))
        .collect();
    rep.push(CheckRow::flag("I E² concentrated at p = 0", off.is_empty(), off.join(" ")));

    for n in 0..=max_degree {
        let h = tot.homology_dim(n as i64);
        for (name, page) in [("I", &e2_i), ("II", &e2_ii)] {
            let sum: usize = page
                .iter()
                .enumerate()
                .filter(|(p, col)| *p <= n && n - p < col.len())
                .map(|(p, col)| col[n - p])
                .sum();
            rep.push(CheckRow::compare(format!("{name} E² vs H^{n}(Tot)"), sum, h));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k1_pivot_collapses() {
        let (res, b, c) = fixtures::k1_flipping();
        let rep = flipping_check(&res, &b, &c, 2).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.row("I E² vs H^0(Tot)").unwrap().left, Some(1));
        assert_eq!(rep.row("II E² vs H^1(Tot)").unwrap().left, Some(0));
    }

    #[test]
    fn singular_witness_is_a_pivot_failure() {
        let (mut res, b, c) = fixtures::k1_flipping();
        res.pivots[0].witnesses[0] = Mat::zeros(c.field(), 1, 1);
        assert!(matches!(flipping_check(&res, &b, &c, 1), Err(Error::PivotFailure(_))));
    }

    #[test]
    fn naturality_failure_is_detected() {
        let (mut res, b, c) = fixtures::k1_flipping();
        let f = c.field();
        let pv = &mut res.pivots[0];
        pv.tests.push(pv.tests[0].clone());
        pv.witnesses.push(Mat::from_i64(f, &[&[2]]));
        pv.morphisms.push((0, 1, Mat::identity(f, 1)));
        assert!(!pv.verify().unwrap().passed());
        assert!(matches!(flipping_check(&res, &b, &c, 1), Err(Error::PivotFailure(_))));
        res.pivots[0].witnesses[1] = Mat::identity(f, 1);
        assert!(flipping_check(&res, &b, &c, 1).unwrap().passed());
    }

    #[test]
    fn non_resolution_is_rejected() {
        let (mut res, b, c) = fixtures::k1_flipping();
        res.augmentation = Mat::zeros(c.field(), 1, 1);
        assert!(matches!(flipping_check(&res, &b, &c, 1), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn two_step_resolution_over_k1() {
        // 0 → k → k² → k → 0 resolves k by pivots k² and k
        let (res1, b, c) = fixtures::k1_flipping();
        let f = c.field();
        let cr = c.left_over().clone();
        let k2 = Comod::Bi(fixtures::trivial(&cr, 2));
        let mut p0 = res1.pivots[0].clone();
        p0.p = k2.clone();
        p0.i = k2;
        p0.witnesses = vec![Mat::identity(f, 2)];
        let res = FlippingResolution {
            resolved: res1.resolved.clone(),
            pivots: vec![p0, res1.pivots[0].clone()],
            maps: vec![Mat::from_i64(f, &[&[1], &[-1]])],
            augmentation: Mat::from_i64(f, &[&[1, 1]]),
        };
        assert!(res.validate().passed(), "{}", res.validate());
        let rep = flipping_check(&res, &b, &c, 2).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.row("cohom(P_•, B)").unwrap().detail, "2 1");
    }
}
