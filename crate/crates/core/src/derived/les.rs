use crate::complex::{cobar_complex, hom_induced, standard_resolution_map, standard_right_resolution, AscComplex};
use crate::error::{Error, Result};
use crate::linalg::{induced_map, rank, solve, Mat, Subquotient};
use crate::report::{CheckReport, CheckRow};
use crate::structure::{envelope, envelope_view_over, Comod, LeftComodule, RightComodule, Ses};

/// Functor applied across a short exact sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LesFunctor {
    /// `Cotor^•(−, N)` on the right parts of the sequence.
    CotorAgainst(LeftComodule),
    /// `Pcoext^•(−, M)`; bicomodule sequences go through their `C^e` views.
    PcoextAgainst(Comod),
}

/// Long exact sequence of a degreewise short exact sequence of complexes
/// `0 → A →i→ B →p→ C → 0`, checked at every node `H^s(A), H^s(B), H^s(C)`
/// for `0 ≤ s ≤ max_degree`.
///
/// All complexes start in degree 0 and reach degree `max_degree + 1`; `i` and
/// `p` hold the components in those degrees.
pub fn les_from_complexes(
    a: &AscComplex,
    b: &AscComplex,
    c: &AscComplex,
    i: &[Mat],
    p: &[Mat],
    max_degree: usize,
) -> Result<CheckReport> {
    let top = max_degree + 1;
    if i.len() <= top || p.len() <= top {
        return Err(Error::MalformedInput("chain maps do not reach the top degree".into()));
    }
    let hom = |x: &AscComplex, upto: usize| -> Result<Vec<Subquotient>> {
        (0..=upto).map(|s| x.homology_subquotient(s as i64)).collect()
    };
    let (ha, hb, hc) = (hom(a, top)?, hom(b, max_degree)?, hom(c, max_degree)?);
    let mut rep = CheckReport::new("long exact sequence");
    // incoming, node dim, outgoing, label
    let mut nodes: Vec<(Mat, usize, Mat, String)> = Vec::new();
    let mut incoming = Mat::zeros(a.field(), ha[0].dim(), 0);
    for s in 0..=max_degree {
        let istar = induced_map(&i[s], &ha[s], &hb[s])?;
        let pstar = induced_map(&p[s], &hb[s], &hc[s])?;
        let delta = connecting_map(b, &i[s + 1], &p[s], &hc[s], &ha[s + 1], s)?;
        nodes.push((incoming, ha[s].dim(), istar.clone(), format!("H^{s}(M)")));
        nodes.push((istar, hb[s].dim(), pstar.clone(), format!("H^{s}(N)")));
        nodes.push((pstar, hc[s].dim(), delta.clone(), format!("H^{s}(O)")));
        incoming = delta;
        rep.push(CheckRow::flag(format!("dims {s}"), true, format!("{} {} {}", ha[s].dim(), hb[s].dim(), hc[s].dim())));
    }
    for (inc, dim, out, label) in nodes {
        rep.push(CheckRow::flag(format!("composite at {label}"), (&out * &inc).is_zero(), ""));
        rep.push(CheckRow::compare(format!("exact at {label}"), dim - rank(&out), rank(&inc)));
    }
    Ok(rep)
}

/// `δ: H^s(C) → H^{s+1}(A)`: lift through `p`, apply `d_B`, pull back through `i`.
fn connecting_map(
    b: &AscComplex,
    i_next: &Mat,
    p: &Mat,
    hc: &Subquotient,
    ha_next: &Subquotient,
    s: usize,
) -> Result<Mat> {
    let z = hc.representatives();
    let y = solve(p, z)?.ok_or_else(|| Error::ZigZagFailure(format!("cycle not liftable in degree {s}")))?;
    let dy = &b.diff(s as i64) * &y;
    let x = solve(i_next, &dy)?
        .ok_or_else(|| Error::ZigZagFailure(format!("boundary not in the image of i in degree {}", s + 1)))?;
    ha_next.class_coordinates(&x).map_err(|e| Error::ZigZagFailure(format!("degree {}: {e}", s + 1)))
}

/// Long exact sequence of `functor` applied to `s`, exact through `max_degree`.
pub fn les_check(s: &Ses, functor: &LesFunctor, max_degree: usize) -> Result<CheckReport> {
    s.require_valid()?;
    let top = max_degree + 1;
    match functor {
        LesFunctor::CotorAgainst(n) => {
            let parts = right_parts(s)?;
            let cx: Vec<AscComplex> = parts.iter().map(|m| cobar_complex(m, n, top)).collect::<Result<_>>()?;
            let d = n.over().dim();
            let lift = |h: &Mat| -> Vec<Mat> {
                (0..=top + 1).map(|k| h.kron(&Mat::identity(h.field(), d.pow(k as u32) * n.dim())).unwrap()).collect()
            };
            les_from_complexes(&cx[0], &cx[1], &cx[2], &lift(&s.i), &lift(&s.p), max_degree)
        }
        LesFunctor::PcoextAgainst(m) => {
            m.require_valid("coefficient")?;
            let (parts, mv) = match (m, &s.m) {
                (Comod::Bi(mb), Comod::Bi(sm)) => {
                    let ce = envelope(sm.right_over())?.into_ref();
                    let view = |x: &Comod| -> Result<RightComodule> {
                        match x {
                            Comod::Bi(b) => Ok(envelope_view_over(b, &ce)?.0),
                            _ => Err(Error::CatalogMismatch("mixed kinds in sequence".into())),
                        }
                    };
                    let parts = vec![view(&s.m)?, view(&s.n)?, view(&s.o)?];
                    (parts, envelope_view_over(mb, &ce)?.0)
                }
                (Comod::Right(mr), Comod::Right(_)) => (right_parts(s)?, mr.clone()),
                _ => {
                    return Err(Error::CatalogMismatch(format!(
                        "Pcoext against a {} across a sequence of {}s",
                        m.kind(),
                        s.m.kind()
                    )))
                }
            };
            let len = top + 1;
            let res: Vec<_> = parts.iter().map(|x| standard_right_resolution(x, len)).collect::<Result<_>>()?;
            let cx: Vec<AscComplex> = res.iter().map(|r| r.hom_complex(&mv)).collect::<Result<_>>()?;
            let d = mv.over().dim();
            let lift = |h: &Mat, src: usize, tgt: usize| -> Vec<Mat> {
                standard_resolution_map(h, d, len)
                    .iter()
                    .enumerate()
                    .map(|(k, g)| hom_induced(g, res[src].cogenerators()[k], res[tgt].cogenerators()[k], &mv))
                    .collect()
            };
            les_from_complexes(&cx[0], &cx[1], &cx[2], &lift(&s.i, 0, 1), &lift(&s.p, 1, 2), max_degree)
        }
    }
}

fn right_parts(s: &Ses) -> Result<Vec<RightComodule>> {
    [&s.m, &s.n, &s.o]
        .iter()
        .map(|x| x.as_right().ok_or_else(|| Error::CatalogMismatch("left comodules have no right coaction".into())))
        .collect()
}
