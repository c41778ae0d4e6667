use super::adjoined::adjoined_homology;
use super::cohom::cohom;
use super::cotensor::cotor;
use super::hochschild::{coalgebra_hochschild, hochschild_dims};
use super::pseudo::pseudo_coext;
use crate::complex::HochschildVariant;
use crate::error::{Error, Result};
use crate::linalg::{rank, solve, Mat};
use crate::report::{CheckReport, CheckRow, GradedDims};
use crate::structure::{
    dualize_coalgebra, envelope, envelope_view_over, same_coalgebra, Bicomodule, Bimodule, Comod, FinCoalgebra,
    IsoWitness, LeftComodule, RightComodule, Ses,
};

/// `N ⊗ M` as a bimodule over the dual algebra: `a·v = (1⊗a)ρ_N(v)` on `N`,
/// `w·a = (a⊗1)λ_M(w)` on `M`.
pub fn tensor_bimodule(n: &RightComodule, m: &LeftComodule) -> Result<Bimodule> {
    if !same_coalgebra(n.over(), m.over()) {
        return Err(Error::MixedCoalgebras);
    }
    let c = n.over();
    let a = dualize_coalgebra(c)?;
    let f = c.field();
    let d = c.dim();
    let (dn, dm) = (n.dim(), m.dim());
    let dim = dn * dm;
    let mut left = Mat::zeros(f, dim, d * dim);
    let mut right = Mat::zeros(f, dim, dim * d);
    for x in 0..d {
        for i in 0..dn {
            for j in 0..dm {
                let v = i * dm + j;
                for i2 in 0..dn {
                    let s = n.rho().get(i2 * d + x, i);
                    if !s.is_zero() {
                        left.set(i2 * dm + j, x * dim + v, s.clone());
                    }
                }
                for j2 in 0..dm {
                    let s = m.lambda().get(x * dm + j2, j);
                    if !s.is_zero() {
                        right.set(i * dm + j2, v * d + x, s.clone());
                    }
                }
            }
        }
    }
    Bimodule::new(a, left, right)
}

fn degree_rows(rep: &mut CheckReport, left: &GradedDims, right: &GradedDims, max_degree: usize) {
    for s in 0..=max_degree as i64 {
        rep.push(CheckRow::compare(format!("degree {s}"), left.at(s), right.at(s)));
    }
}

/// Hochschild cohomology of the dual algebra with coefficients `N ⊗ M`
/// against `Cotor_C(N, M)`, degree by degree.
pub fn abrams_weibel_check(
    c: &FinCoalgebra,
    n: &RightComodule,
    m: &LeftComodule,
    max_degree: usize,
) -> Result<CheckReport> {
    if n.over().as_ref() != c || m.over().as_ref() != c {
        return Err(Error::MixedCoalgebras);
    }
    let bimod = tensor_bimodule(n, m)?;
    let left = hochschild_dims(&bimod, max_degree, HochschildVariant::Cochain)?;
    let right = cotor(n, m, max_degree)?;
    let mut rep = CheckReport::new("Hochschild of dual algebra vs Cotor");
    degree_rows(&mut rep, &left, &right, max_degree);
    Ok(rep)
}

/// `HH^s(C, M)` against `HA_{n−s}(C, M)` for `0 ≤ s ≤ max_degree`; adjoined
/// homology in negative degrees counts as zero.
pub fn duality_check(c: &FinCoalgebra, m: &Bicomodule, order: usize, max_degree: usize) -> Result<CheckReport> {
    let hh = coalgebra_hochschild(c, m, max_degree)?;
    let ce = envelope(c)?.into_ref();
    let (mv, _) = envelope_view_over(m, &ce)?;
    let ha = adjoined_homology(c, &mv, order.max(max_degree))?;
    let mut rep = CheckReport::new(format!("Hochschild vs adjoined homology, order {order}"));
    for s in 0..=max_degree {
        let right = if s <= order { ha.at((order - s) as i64) } else { 0 };
        let label = if s <= order { format!("HH^{s} vs HA_{}", order - s) } else { format!("HH^{s} vs 0") };
        rep.push(CheckRow::compare(label, hh.at(s as i64), right));
    }
    Ok(rep)
}

/// Whether `w` is a coalgebra isomorphism `c → envelope(c)`.
pub fn autoenvelope_check(c: &FinCoalgebra, w: &IsoWitness) -> Result<CheckReport> {
    let e = envelope(c)?;
    let mut rep = crate::structure::iso_verify(c, &e, w);
    rep.name = "autoenvelope".into();
    Ok(rep)
}

/// Matrix of `h(x, a) : h(x, Y) → h(x, Y')` for a morphism `a: Y → Y'`: the
/// transpose of precomposition `Hom(Y', x) → Hom(Y, x)`.
fn cohom_map(x: &Comod, y: &Comod, y2: &Comod, a: &Mat) -> Result<Mat> {
    let src = cohom(x, y2)?.hom;
    let tgt = cohom(x, y)?.hom;
    let pre = Mat::identity(x.field(), x.dim()).kron(&a.transpose())?;
    let img = &pre * src.basis();
    let coords = solve(tgt.basis(), &img)?.ok_or_else(|| Error::NotWellDefined("precomposition".into()))?;
    Ok(coords.transpose())
}

/// Applies `h(x, −)` across the sequence and tests exactness of the image.
///
/// A pass means "consistent with `x` being an injector", a failure "refuted".
pub fn injector_probe(x: &Comod, s: &Ses, max_degree: usize) -> Result<CheckReport> {
    s.require_valid()?;
    let hi = cohom_map(x, &s.m, &s.n, &s.i)?;
    let hp = cohom_map(x, &s.n, &s.o, &s.p)?;
    let (dm, dn, dout) = (hi.cols(), hi.rows(), hp.rows());
    let (ri, rp) = (rank(&hi), rank(&hp));
    let mut rep = CheckReport::new("injector probe");
    rep.push(CheckRow::compare("h(x,i) injective", ri, dm));
    rep.push(CheckRow::flag("h(x,p)∘h(x,i) = 0", (&hp * &hi).is_zero(), ""));
    rep.push(CheckRow::compare("exact at h(x,N)", dn - rp, ri));
    rep.push(CheckRow::compare("h(x,p) surjective", rp, dout));
    if let Comod::Bi(xb) = x {
        for (name, obj) in [("M", &s.m), ("N", &s.n), ("O", &s.o)] {
            if let Comod::Bi(yb) = obj {
                let d = pseudo_coext(xb, yb, max_degree)?;
                let text: Vec<String> = d.dims.iter().map(ToString::to_string).collect();
                rep.push(CheckRow::flag(format!("Pcoext(x,{name})"), true, text.join(" ")));
            }
        }
    }
    Ok(rep)
}

/// `"consistent"` or `"refuted"` for an [`injector_probe`] report.
pub fn injector_verdict(rep: &CheckReport) -> &'static str {
    if rep.passed() {
        "consistent"
    } else {
        "refuted"
    }
}
