use super::asc::AscComplex;
use crate::error::{Error, Result};
use crate::linalg::{rank, reduce, tensor_permutation, Mat, Scalar};
use crate::report::{CheckReport, CheckRow};
use crate::structure::{envelope, envelope_view_over, same_coalgebra, Bicomodule, CoalgebraRef, RightComodule};

/// Cofree right comodule `W ⊗ D` with `ρ = 1_W ⊗ Δ`.
pub fn cofree_right(d: &CoalgebraRef, w: usize) -> RightComodule {
    let rho = Mat::identity(d.field(), w).kron(d.delta()).unwrap();
    RightComodule::new(d.clone(), rho).unwrap()
}

/// Cofree bicomodule `C ⊗ W ⊗ C` with `λ = Δ ⊗ 1 ⊗ 1` and `ρ = 1 ⊗ 1 ⊗ Δ`.
pub fn cofree_bicomodule(c: &CoalgebraRef, w: usize) -> Bicomodule {
    let f = c.field();
    let d = c.dim();
    let lambda = c.delta().kron(&Mat::identity(f, w * d)).unwrap();
    let rho = Mat::identity(f, d * w).kron(c.delta()).unwrap();
    Bicomodule::new(c.clone(), c.clone(), lambda, rho).unwrap()
}

/// Projection `π` onto a complement of `im ι` together with the kept coordinates `J`.
///
/// With `R` the RREF of `ιᵗ` and pivots `piv`, `π[j][j] = 1` and
/// `π[j][piv_k] = −R[k][j]` for `j ∈ J`; `π∘ι = 0` and `π` restricted to `J` is
/// the identity.
pub(crate) fn cokernel_projection(iota: &Mat) -> Result<(Mat, Vec<usize>)> {
    let f = iota.field();
    let n = iota.rows();
    let red = reduce(&iota.transpose());
    if red.rank != iota.cols() {
        return Err(Error::MalformedInput("embedding is not injective".into()));
    }
    let keep: Vec<usize> = (0..n).filter(|c| !red.pivot_cols.contains(c)).collect();
    let mut pi = Mat::zeros(f, keep.len(), n);
    for (r, &j) in keep.iter().enumerate() {
        pi.set(r, j, Scalar::one(f));
        for (k, &p) in red.pivot_cols.iter().enumerate() {
            let v = red.rref.get(k, j);
            if !v.is_zero() {
                pi.set(r, p, -v);
            }
        }
    }
    Ok((pi, keep))
}

/// Injective resolution `0 → X → W_0⊗D → W_1⊗D → …` of a right `D`-comodule by
/// cofree terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightResolution {
    resolved: RightComodule,
    cogenerators: Vec<usize>,
    terms: Vec<RightComodule>,
    maps: Vec<Mat>,
    augmentation: Mat,
}

impl RightResolution {
    /// Validated resolution from explicit data: cogenerator dims `w_s`, maps
    /// `I_s → I_{s+1}` and the augmentation `X → I_0`.
    pub fn new(resolved: RightComodule, cogenerators: Vec<usize>, maps: Vec<Mat>, augmentation: Mat) -> Result<Self> {
        let d = resolved.over().clone();
        if cogenerators.is_empty() || maps.len() + 1 != cogenerators.len() {
            return Err(Error::MalformedInput("resolution needs one more term than maps".into()));
        }
        let terms = cogenerators.iter().map(|&w| cofree_right(&d, w)).collect();
        let res = RightResolution { resolved, cogenerators, terms, maps, augmentation };
        let rep = res.validate();
        if let Some(row) = rep.failures().next() {
            return Err(Error::MalformedInput(format!("resolution fails {}", row.label)));
        }
        Ok(res)
    }

    pub fn resolved(&self) -> &RightComodule {
        &self.resolved
    }

    pub fn cogenerators(&self) -> &[usize] {
        &self.cogenerators
    }

    pub fn terms(&self) -> &[RightComodule] {
        &self.terms
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn augmentation(&self) -> &Mat {
        &self.augmentation
    }

    /// Highest term index.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// Colinearity, cofreeness and exactness of `0 → X → I_0 → … → I_length`
    /// at `X` and at `I_s` for `s < length`.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new("cofree resolution");
        let d = self.resolved.over();
        let shapes_ok = self.augmentation.shape() == (self.terms[0].dim(), self.resolved.dim())
            && self.maps.iter().enumerate().all(|(s, g)| g.shape() == (self.terms[s + 1].dim(), self.terms[s].dim()));
        if !shapes_ok {
            rep.push(CheckRow::flag("shapes", false, "maps do not fit the terms"));
            return rep;
        }
        for (s, t) in self.terms.iter().enumerate() {
            let ok = same_coalgebra(t.over(), d) && t.rho() == cofree_right(d, self.cogenerators[s]).rho();
            rep.push(CheckRow::flag(format!("term {s} cofree"), ok, ""));
        }
        rep.push(CheckRow::flag(
            "augmentation colinear",
            self.resolved.is_morphism(&self.augmentation, &self.terms[0]),
            "",
        ));
        for (s, g) in self.maps.iter().enumerate() {
            rep.push(CheckRow::flag(format!("map {s} colinear"), self.terms[s].is_morphism(g, &self.terms[s + 1]), ""));
        }
        let mut incoming = self.augmentation.clone();
        rep.push(CheckRow::compare("exact at resolved", rank(&incoming), self.resolved.dim()));
        for (s, g) in self.maps.iter().enumerate() {
            rep.push(CheckRow::flag(format!("composite at term {s}"), (g * &incoming).is_zero(), ""));
            let ker = self.terms[s].dim() - rank(g);
            rep.push(CheckRow::compare(format!("exact at term {s}"), ker, rank(&incoming)));
            incoming = g.clone();
        }
        rep
    }

    /// `Hom^D(M, I_•)` realized on `Hom(M, W_•)` through `f ↦ (f ⊗ 1)∘ρ_M`.
    pub fn hom_complex(&self, m: &RightComodule) -> Result<AscComplex> {
        if !same_coalgebra(m.over(), self.resolved.over()) {
            return Err(Error::MixedCoalgebras);
        }
        let spaces: Vec<usize> = self.cogenerators.iter().map(|w| w * m.dim()).collect();
        let diffs: Vec<Mat> = self
            .maps
            .iter()
            .enumerate()
            .map(|(s, g)| hom_induced(g, self.cogenerators[s], self.cogenerators[s + 1], m))
            .collect();
        AscComplex::new(m.field(), 0, spaces, diffs)
    }
}

/// Matrix of `Hom(M, W) → Hom(M, W')`, `f ↦ (1⊗ε)∘g∘(f⊗1)∘ρ_M`, for a colinear
/// `g: W⊗D → W'⊗D`. Equals `Σ_c G_c ⊗ (ρ^c)ᵗ` with `G = (1⊗ε)g` split by the
/// `D`-index `c` of its columns and `ρ^c` the rows of `ρ_M` with that index.
pub fn hom_induced(g: &Mat, w_src: usize, w_tgt: usize, m: &RightComodule) -> Mat {
    let c = m.over();
    let f = c.field();
    let d = c.dim();
    let collapse = Mat::identity(f, w_tgt).kron(c.counit()).unwrap();
    let gp = &collapse * g;
    let mut out = Mat::zeros(f, w_tgt * m.dim(), w_src * m.dim());
    for k in 0..d {
        let gc = gp.select_columns(&(0..w_src).map(|w| w * d + k).collect::<Vec<_>>());
        let rc = m.rho().select_rows(&(0..m.dim()).map(|j| j * d + k).collect::<Vec<_>>());
        out = &out + &gc.kron(&rc.transpose()).unwrap();
    }
    out
}

/// Canonical resolution: every embedding is the coaction itself.
pub fn cofree_right_resolution(x: &RightComodule, length: usize) -> Result<RightResolution> {
    cofree_right_resolution_with(x, length, |_, q| Mat::identity(x.field(), q))
}

/// Resolution where stage `s` embeds the current comodule `X_s` (of dim `q`) by
/// `(f ⊗ 1)∘ρ` for the injective linear map `f = choose(s, q)`.
pub fn cofree_right_resolution_with(
    x: &RightComodule,
    length: usize,
    mut choose: impl FnMut(usize, usize) -> Mat,
) -> Result<RightResolution> {
    let dcoalg = x.over().clone();
    let field = x.field();
    let mut current = x.clone();
    let mut cogenerators = Vec::with_capacity(length + 1);
    let mut maps = Vec::with_capacity(length);
    let mut augmentation = None;
    let mut prev_projection: Option<Mat> = None;
    for s in 0..=length {
        let f = choose(s, current.dim());
        if f.cols() != current.dim() || f.field() != field {
            return Err(Error::MalformedInput(format!("embedding at stage {s} has the wrong shape")));
        }
        let iota = &f.kron(&dcoalg.id())? * current.rho();
        cogenerators.push(f.rows());
        match prev_projection.take() {
            None => augmentation = Some(iota.clone()),
            Some(pi) => maps.push(&iota * &pi),
        }
        if s < length {
            let (pi, keep) = cokernel_projection(&iota)?;
            let term = cofree_right(&dcoalg, f.rows());
            let rho_q = &pi.kron(&dcoalg.id())? * &term.rho().select_columns(&keep);
            current = RightComodule::new(dcoalg.clone(), rho_q)?;
            prev_projection = Some(pi);
        }
    }
    let terms = cogenerators.iter().map(|&w| cofree_right(&dcoalg, w)).collect();
    let res = RightResolution {
        resolved: x.clone(),
        cogenerators,
        terms,
        maps,
        augmentation: augmentation.expect("stage 0 always runs"),
    };
    if let Some(row) = res.validate().failures().next() {
        // a failing engine-built resolution is an internal inconsistency
        let degree = row.label.rsplit(' ').next().and_then(|t| t.parse().ok()).unwrap_or(-1);
        return Err(Error::NotAComplex(degree));
    }
    Ok(res)
}

/// Standard resolution `X ⊗ D^{⊗(s+1)}` with `d = Σ_{i=0}^{s+1} (−1)^i δ_i`,
/// `δ_0 = ρ ⊗ 1`, `δ_i = Δ` on the `i`-th `D` factor. Functorial in `X`.
pub fn standard_right_resolution(x: &RightComodule, length: usize) -> Result<RightResolution> {
    let c = x.over();
    let f = x.field();
    let (dx, d) = (x.dim(), c.dim());
    let id = |k: usize| Mat::identity(f, k);
    let cogenerators: Vec<usize> = (0..=length).map(|s| dx * d.pow(s as u32)).collect();
    let mut maps = Vec::with_capacity(length);
    for s in 0..length {
        let ds1 = d.pow(s as u32 + 1);
        let mut g = x.rho().kron(&id(ds1))?;
        for i in 1..=s + 1 {
            let inner = id(dx * d.pow(i as u32 - 1)).kron(&c.delta().kron(&id(d.pow((s + 1 - i) as u32)))?)?;
            g = if i % 2 == 0 { g.try_add(&inner)? } else { g.try_sub(&inner)? };
        }
        maps.push(g);
    }
    RightResolution::new(x.clone(), cogenerators, maps, x.rho().clone())
}

/// Components `h ⊗ 1` of the map induced between standard resolutions.
pub fn standard_resolution_map(h: &Mat, d: usize, length: usize) -> Vec<Mat> {
    let f = h.field();
    (0..=length).map(|s| h.kron(&Mat::identity(f, d.pow(s as u32 + 1))).unwrap()).collect()
}

/// Two-sided cofree resolution of a `C`-`C` bicomodule with terms `C ⊗ W_s ⊗ C`.
///
/// Computed as the one-sided resolution of the right `C^e` view and carried
/// back along `(w, b, a) ↦ a ⊗ w ⊗ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    resolved: Bicomodule,
    terms: Vec<Bicomodule>,
    maps: Vec<Mat>,
    augmentation: Mat,
    view: RightResolution,
}

/// `C ⊗ W ⊗ C → W ⊗ C^e` basis change.
fn to_view(c: &CoalgebraRef, w: usize) -> Mat {
    let d = c.dim();
    tensor_permutation(c.field(), &[d, w, d], &[1, 2, 0])
}

impl ResolutionData {
    fn from_view(m: &Bicomodule, view: RightResolution) -> Result<Self> {
        let c = m.right_over().clone();
        let ws = view.cogenerators().to_vec();
        let p: Vec<Mat> = ws.iter().map(|&w| to_view(&c, w)).collect();
        let terms = ws.iter().map(|&w| cofree_bicomodule(&c, w)).collect();
        let maps = view.maps().iter().enumerate().map(|(s, g)| &(&p[s + 1].transpose() * g) * &p[s]).collect();
        let augmentation = &p[0].transpose() * view.augmentation();
        Ok(ResolutionData { resolved: m.clone(), terms, maps, augmentation, view })
    }

    /// Validated resolution from explicit bicomodule data.
    pub fn new(resolved: Bicomodule, terms: Vec<Bicomodule>, maps: Vec<Mat>, augmentation: Mat) -> Result<Self> {
        if !resolved.is_balanced() {
            return Err(Error::MixedCoalgebras);
        }
        let c = resolved.right_over().clone();
        let d2 = c.dim() * c.dim();
        let mut ws = Vec::with_capacity(terms.len());
        for (s, t) in terms.iter().enumerate() {
            let w = t.dim().checked_div(d2).unwrap_or(0);
            if w * d2 != t.dim() || *t != cofree_bicomodule(&c, w) {
                return Err(Error::MalformedInput(format!("term {s} is not cofree")));
            }
            ws.push(w);
        }
        if terms.is_empty() || maps.len() + 1 != terms.len() {
            return Err(Error::MalformedInput("resolution needs one more term than maps".into()));
        }
        let p: Vec<Mat> = ws.iter().map(|&w| to_view(&c, w)).collect();
        for (s, g) in maps.iter().enumerate() {
            if g.shape() != (terms[s + 1].dim(), terms[s].dim()) {
                return Err(Error::MalformedInput(format!("map {s} does not fit its terms")));
            }
        }
        if augmentation.shape() != (terms[0].dim(), resolved.dim()) {
            return Err(Error::MalformedInput("augmentation does not fit".into()));
        }
        for (s, g) in maps.iter().enumerate() {
            if !terms[s].is_morphism(g, &terms[s + 1]) {
                return Err(Error::MalformedInput(format!("map {s} is not bicolinear")));
            }
        }
        if !resolved.is_morphism(&augmentation, &terms[0]) {
            return Err(Error::MalformedInput("augmentation is not bicolinear".into()));
        }
        let ce = envelope(&c)?.into_ref();
        let (x, _) = envelope_view_over(&resolved, &ce)?;
        let view_maps = maps.iter().enumerate().map(|(s, g)| &(&p[s + 1] * g) * &p[s].transpose()).collect();
        let view_aug = &p[0] * &augmentation;
        let view = RightResolution::new(x, ws, view_maps, view_aug)?;
        Ok(ResolutionData { resolved, terms, maps, augmentation, view })
    }

    pub fn resolved(&self) -> &Bicomodule {
        &self.resolved
    }

    pub fn terms(&self) -> &[Bicomodule] {
        &self.terms
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn augmentation(&self) -> &Mat {
        &self.augmentation
    }

    pub fn cogenerators(&self) -> &[usize] {
        self.view.cogenerators()
    }

    /// The same resolution as right `C^e`-comodules.
    pub fn envelope_view(&self) -> &RightResolution {
        &self.view
    }

    pub fn length(&self) -> usize {
        self.view.length()
    }

    /// Per-term cofreeness witnesses, bicolinearity and exactness.
    pub fn validate(&self) -> CheckReport {
        let mut rep = self.view.validate();
        let c = self.resolved.right_over();
        for (s, t) in self.terms.iter().enumerate() {
            let w = self.cogenerators()[s];
            rep.push(CheckRow::flag(format!("term {s} cofree witness"), *t == cofree_bicomodule(c, w), ""));
        }
        for (s, g) in self.maps.iter().enumerate() {
            rep.push(CheckRow::flag(
                format!("map {s} bicolinear"),
                self.terms[s].is_morphism(g, &self.terms[s + 1]),
                "",
            ));
        }
        rep
    }
}

/// Canonical two-sided resolution: term 0 is `C ⊗ M ⊗ C` with embedding
/// `(λ ⊗ 1)∘ρ`, each later term cofree on the previous cokernel.
pub fn cofree_resolution(m: &Bicomodule, length: usize) -> Result<ResolutionData> {
    cofree_resolution_with(m, length, |_, q| Mat::identity(m.field(), q))
}

/// Two-sided resolution with stage-`s` embedding `(1 ⊗ f ⊗ 1)∘(λ ⊗ 1)∘ρ`, `f = choose(s, q)`.
pub fn cofree_resolution_with(
    m: &Bicomodule,
    length: usize,
    choose: impl FnMut(usize, usize) -> Mat,
) -> Result<ResolutionData> {
    if !m.is_balanced() {
        return Err(Error::MixedCoalgebras);
    }
    let ce = envelope(m.right_over())?.into_ref();
    let (x, _) = envelope_view_over(m, &ce)?;
    let view = cofree_right_resolution_with(&x, length, choose)?;
    ResolutionData::from_view(m, view)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::structure::right_hom_space;

    #[test]
    fn k1_terms_are_one_dimensional() {
        let c = fixtures::k1().into_ref();
        let res = cofree_resolution(&fixtures::trivial(&c, 1), 3).unwrap();
        assert!(res.validate().passed());
        assert_eq!(res.cogenerators(), &[1, 0, 0, 0]);
        assert_eq!(res.terms()[0].dim(), 1);
    }

    #[test]
    fn dp2_trivial_resolution() {
        let c = fixtures::dp2().into_ref();
        let res = cofree_resolution(&fixtures::k_c0(&c), 3).unwrap();
        let rep = res.validate();
        assert!(rep.passed(), "{rep}");
        assert_eq!(res.terms()[0].dim(), 4);
        assert_eq!(res.cogenerators(), &[1, 3, 9, 27]);
        for t in res.terms() {
            assert!(t.validate().passed());
        }
    }

    #[test]
    fn term_zero_embedding_is_two_sided_coaction() {
        let c = fixtures::dp2().into_ref();
        let m = Bicomodule::regular(&c);
        let res = cofree_resolution(&m, 0).unwrap();
        assert_eq!(res.augmentation(), &m.two_sided_coaction());
        assert_eq!(rank(res.augmentation()), m.dim());
    }

    #[test]
    fn hand_built_resolution_round_trips_through_new() {
        let c = fixtures::dp2().into_ref();
        let k = fixtures::k_c0(&c);
        let res = cofree_resolution(&k, 2).unwrap();
        let again =
            ResolutionData::new(k.clone(), res.terms().to_vec(), res.maps().to_vec(), res.augmentation().clone())
                .unwrap();
        assert_eq!(again, res);
    }

    #[test]
    fn broken_map_is_rejected() {
        let c = fixtures::dp2().into_ref();
        let k = fixtures::k_c0(&c);
        let res = cofree_resolution(&k, 1).unwrap();
        let bad = res.maps()[0].scale_i64(0);
        let r = ResolutionData::new(k, res.terms().to_vec(), vec![bad], res.augmentation().clone());
        assert!(matches!(r, Err(Error::MalformedInput(_))));
    }

    #[test]
    fn cokernel_projection_kills_image() {
        let c = fixtures::dp2().into_ref();
        let x = crate::structure::RightComodule::regular(&c);
        let (pi, keep) = cokernel_projection(x.rho()).unwrap();
        assert!((&pi * x.rho()).is_zero());
        assert!(pi.select_columns(&keep).is_identity());
    }

    #[test]
    fn standard_resolution_validates() {
        let c = fixtures::dp2().into_ref();
        let x = fixtures::k_c0(&c).right_part();
        let res = standard_right_resolution(&x, 3).unwrap();
        assert_eq!(res.cogenerators(), &[1, 2, 4, 8]);
        assert!(res.validate().passed());
    }

    #[test]
    fn hom_complex_degree_zero_matches_solver() {
        let c = fixtures::dp2().into_ref();
        let x = crate::structure::RightComodule::regular(&c);
        let k = fixtures::k_c0(&c).right_part();
        for res in [cofree_right_resolution(&x, 2).unwrap(), standard_right_resolution(&x, 2).unwrap()] {
            for m in [&x, &k] {
                let h = res.hom_complex(m).unwrap();
                assert_eq!(h.homology_dim(0), right_hom_space(m, &x).unwrap().dim());
            }
        }
    }

    #[test]
    fn hom_into_cofree_is_free_of_constraints() {
        let c = fixtures::mc2().into_ref();
        let w = cofree_right(&c, 2);
        let s = fixtures::simple_right(&c);
        assert_eq!(right_hom_space(&s, &w).unwrap().dim(), 2 * s.dim());
    }
}
