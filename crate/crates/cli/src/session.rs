//! Session files: named coalgebras, algebras, (bi)comodules, bimodules,
//! sequences, pivots, flipping resolutions and isomorphism witnesses in JSON.

use std::collections::HashSet;
use std::fmt;
use std::marker::PhantomData;
use std::path::Path;

use cotor_core::complex::{bifunctor_space, BifunctorTag};
use cotor_core::derived::{FlippingResolution, PivotSpec};
use cotor_core::structure::{Bimodule, CoalgebraRef, Comod, FinAlgebra, FinCoalgebra, IsoWitness, LeftComodule};
use cotor_core::{Bicomodule, CheckReport, FieldSpec, Mat, RightComodule, Scalar, Ses};
use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, thiserror::Error)]
pub enum SessionError {
    #[error("cannot read {0}: {1}")]
    Io(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("`{key}`: {detail}")]
    Invalid { key: String, detail: String },
    #[error("`{key}` refers to missing {kind} `{target}`")]
    DanglingReference { key: String, kind: &'static str, target: String },
    #[error("duplicate key `{0}`")]
    DuplicateKey(String),
}

fn invalid(key: &str, detail: impl fmt::Display) -> SessionError {
    SessionError::Invalid { key: key.to_string(), detail: detail.to_string() }
}

/// JSON object that keeps file order and rejects repeated keys.
#[derive(Clone, Debug, PartialEq)]
pub struct Keyed<T>(pub Vec<(String, T)>);

impl<T> Default for Keyed<T> {
    fn default() -> Self {
        Keyed(Vec::new())
    }
}

impl<T> Keyed<T> {
    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Keyed<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V<T>(PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = Keyed<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object of named entries")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Keyed<T>, A::Error> {
                let mut out: Vec<(String, T)> = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, T>()? {
                    if out.iter().any(|(seen, _)| *seen == k) {
                        return Err(serde::de::Error::custom(format!("duplicate key `{k}`")));
                    }
                    out.push((k, v));
                }
                Ok(Keyed(out))
            }
        }
        d.deserialize_map(V(PhantomData))
    }
}

impl<T: Serialize> Serialize for Keyed<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// Wire scalar: rationals as strings, residues as integers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Int(i64),
    Text(String),
}

type MatDoc = Vec<Vec<ScalarDoc>>;
type RowDoc = Vec<ScalarDoc>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraDoc {
    pub dim: usize,
    pub delta: MatDoc,
    pub counit: RowDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub mul: MatDoc,
    pub unit: RowDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RightDoc {
    pub over: String,
    pub dim: usize,
    pub rho: MatDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeftDoc {
    pub over: String,
    pub dim: usize,
    pub lambda: MatDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiDoc {
    pub left_over: String,
    pub right_over: String,
    pub dim: usize,
    pub lambda: MatDoc,
    pub rho: MatDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDoc {
    pub over: String,
    pub dim: usize,
    pub left_act: MatDoc,
    pub right_act: MatDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SesDoc {
    pub m: String,
    pub n: String,
    pub o: String,
    pub i: MatDoc,
    pub p: MatDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub from: usize,
    pub to: usize,
    pub map: MatDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PivotDoc {
    pub f: String,
    pub g: String,
    pub p: String,
    pub i: String,
    pub tests: Vec<String>,
    pub witnesses: Vec<MatDoc>,
    #[serde(default)]
    pub morphisms: Vec<MorphismDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionDoc {
    pub resolved: String,
    pub pivots: Vec<String>,
    pub maps: Vec<MatDoc>,
    pub augmentation: MatDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub coalgebra: String,
    pub matrix: MatDoc,
}

/// The file as written, before any object is built.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionDoc {
    pub field: String,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub coalgebras: Keyed<CoalgebraDoc>,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub algebras: Keyed<AlgebraDoc>,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub right_comodules: Keyed<RightDoc>,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub left_comodules: Keyed<LeftDoc>,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub bicomodules: Keyed<BiDoc>,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub bimodules: Keyed<BimoduleDoc>,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub sequences: Keyed<SesDoc>,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub pivots: Keyed<PivotDoc>,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub resolutions: Keyed<ResolutionDoc>,
    #[serde(default, skip_serializing_if = "Keyed::is_empty")]
    pub witnesses: Keyed<WitnessDoc>,
}

/// A loaded, validated session. Every entry remembers the keys it refers to.
#[derive(Clone, Debug)]
pub struct Session {
    pub field: FieldSpec,
    pub coalgebras: Vec<(String, CoalgebraRef)>,
    pub algebras: Vec<(String, FinAlgebra)>,
    pub right_comodules: Vec<(String, String, RightComodule)>,
    pub left_comodules: Vec<(String, String, LeftComodule)>,
    pub bicomodules: Vec<(String, (String, String), Bicomodule)>,
    pub bimodules: Vec<(String, String, Bimodule)>,
    pub sequences: Vec<(String, [String; 3], Ses)>,
    pub pivots: Vec<(String, PivotDoc, PivotSpec)>,
    pub resolutions: Vec<(String, ResolutionDoc, FlippingResolution)>,
    pub witnesses: Vec<(String, String, IsoWitness)>,
}

fn find<'a, T>(items: &'a [(String, T)], key: &str) -> Option<&'a T> {
    items.iter().find(|(k, _)| k == key).map(|(_, v)| v)
}

fn parse_scalar(field: FieldSpec, key: &str, s: &ScalarDoc) -> Result<Scalar, SessionError> {
    let text = match s {
        ScalarDoc::Int(v) => v.to_string(),
        ScalarDoc::Text(t) => t.clone(),
    };
    Scalar::parse(field, &text).map_err(|e| invalid(key, e))
}

fn parse_mat(
    field: FieldSpec,
    key: &str,
    what: &str,
    doc: &MatDoc,
    rows: usize,
    cols: usize,
) -> Result<Mat, SessionError> {
    if doc.len() != rows || doc.iter().any(|r| r.len() != cols) {
        return Err(invalid(key, format!("{what} must be {rows}x{cols}")));
    }
    let mut out = Vec::with_capacity(rows);
    for r in doc {
        out.push(r.iter().map(|s| parse_scalar(field, key, s)).collect::<Result<Vec<_>, _>>()?);
    }
    Mat::from_rows(field, cols, out).map_err(|e| invalid(key, e))
}

fn parse_row(field: FieldSpec, key: &str, what: &str, doc: &RowDoc, len: usize) -> Result<Mat, SessionError> {
    parse_mat(field, key, what, &vec![doc.clone()], 1, len)
}

fn require(key: &str, rep: CheckReport) -> Result<(), SessionError> {
    match rep.failures().next() {
        Some(row) => {
            let extra = if row.detail.is_empty() { String::new() } else { format!(" ({})", row.detail) };
            Err(invalid(key, format!("{} violates {}{extra}", rep.name, row.label)))
        }
        None => Ok(()),
    }
}

pub fn mat_doc(m: &Mat) -> MatDoc {
    (0..m.rows()).map(|i| m.row(i).iter().map(scalar_doc).collect()).collect()
}

fn scalar_doc(s: &Scalar) -> ScalarDoc {
    match s.field() {
        FieldSpec::Rationals => ScalarDoc::Text(s.to_string()),
        FieldSpec::PrimeField(_) => ScalarDoc::Int(s.to_i64().expect("residues fit in i64")),
    }
}

fn row_doc(m: &Mat) -> RowDoc {
    mat_doc(m).into_iter().next().unwrap_or_default()
}

impl Session {
    pub fn load(path: &Path) -> Result<Session, SessionError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| SessionError::Io(path.display().to_string(), e.to_string()))?;
        Session::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Session, SessionError> {
        let doc: SessionDoc = serde_json::from_str(text).map_err(|e| {
            let msg = e.to_string();
            match msg.strip_prefix("duplicate key `").and_then(|r| r.split('`').next()) {
                Some(k) => SessionError::DuplicateKey(k.to_string()),
                None => SessionError::Parse(msg),
            }
        })?;
        Session::from_doc(&doc)
    }

    pub fn from_doc(doc: &SessionDoc) -> Result<Session, SessionError> {
        let field = FieldSpec::parse(&doc.field).map_err(|e| invalid("field", e))?;
        let mut seen = HashSet::new();
        let all_keys = doc
            .coalgebras
            .0
            .iter()
            .map(|(k, _)| k)
            .chain(doc.algebras.0.iter().map(|(k, _)| k))
            .chain(doc.right_comodules.0.iter().map(|(k, _)| k))
            .chain(doc.left_comodules.0.iter().map(|(k, _)| k))
            .chain(doc.bicomodules.0.iter().map(|(k, _)| k))
            .chain(doc.bimodules.0.iter().map(|(k, _)| k))
            .chain(doc.sequences.0.iter().map(|(k, _)| k))
            .chain(doc.pivots.0.iter().map(|(k, _)| k))
            .chain(doc.resolutions.0.iter().map(|(k, _)| k))
            .chain(doc.witnesses.0.iter().map(|(k, _)| k));
        for k in all_keys {
            if !seen.insert(k.clone()) {
                return Err(SessionError::DuplicateKey(k.clone()));
            }
        }
        let mut s = Session {
            field,
            coalgebras: Vec::new(),
            algebras: Vec::new(),
            right_comodules: Vec::new(),
            left_comodules: Vec::new(),
            bicomodules: Vec::new(),
            bimodules: Vec::new(),
            sequences: Vec::new(),
            pivots: Vec::new(),
            resolutions: Vec::new(),
            witnesses: Vec::new(),
        };
        for (key, c) in &doc.coalgebras.0 {
            let d = c.dim;
            let delta = parse_mat(field, key, "delta", &c.delta, d * d, d)?;
            let counit = parse_row(field, key, "counit", &c.counit, d)?;
            let coalg = FinCoalgebra::new(delta, counit).map_err(|e| invalid(key, e))?;
            require(key, coalg.validate())?;
            s.coalgebras.push((key.clone(), coalg.into_ref()));
        }
        for (key, a) in &doc.algebras.0 {
            let d = a.dim;
            let mul = parse_mat(field, key, "mul", &a.mul, d, d * d)?;
            let unit = parse_row(field, key, "unit", &a.unit, d)?.transpose();
            let alg = FinAlgebra::new(mul, unit).map_err(|e| invalid(key, e))?;
            require(key, alg.validate())?;
            s.algebras.push((key.clone(), alg));
        }
        for (key, r) in &doc.right_comodules.0 {
            let c = s.coalgebra_ref(key, &r.over)?;
            let rho = parse_mat(field, key, "rho", &r.rho, r.dim * c.dim(), r.dim)?;
            let m = RightComodule::new(c, rho).map_err(|e| invalid(key, e))?;
            require(key, m.validate())?;
            s.right_comodules.push((key.clone(), r.over.clone(), m));
        }
        for (key, l) in &doc.left_comodules.0 {
            let c = s.coalgebra_ref(key, &l.over)?;
            let lambda = parse_mat(field, key, "lambda", &l.lambda, c.dim() * l.dim, l.dim)?;
            let m = LeftComodule::new(c, lambda).map_err(|e| invalid(key, e))?;
            require(key, m.validate())?;
            s.left_comodules.push((key.clone(), l.over.clone(), m));
        }
        for (key, b) in &doc.bicomodules.0 {
            let lc = s.coalgebra_ref(key, &b.left_over)?;
            let rc = s.coalgebra_ref(key, &b.right_over)?;
            let lambda = parse_mat(field, key, "lambda", &b.lambda, lc.dim() * b.dim, b.dim)?;
            let rho = parse_mat(field, key, "rho", &b.rho, b.dim * rc.dim(), b.dim)?;
            let m = Bicomodule::new(lc, rc, lambda, rho).map_err(|e| invalid(key, e))?;
            require(key, m.validate())?;
            s.bicomodules.push((key.clone(), (b.left_over.clone(), b.right_over.clone()), m));
        }
        for (key, b) in &doc.bimodules.0 {
            let a = find(&s.algebras, &b.over).cloned().ok_or_else(|| SessionError::DanglingReference {
                key: key.clone(),
                kind: "algebra",
                target: b.over.clone(),
            })?;
            let (d, m) = (a.dim(), b.dim);
            let left = parse_mat(field, key, "left_act", &b.left_act, m, d * m)?;
            let right = parse_mat(field, key, "right_act", &b.right_act, m, m * d)?;
            let bm = Bimodule::new(a, left, right).map_err(|e| invalid(key, e))?;
            require(key, bm.validate())?;
            s.bimodules.push((key.clone(), b.over.clone(), bm));
        }
        for (key, q) in &doc.sequences.0 {
            let [m, n, o] = [&q.m, &q.n, &q.o].map(|t| s.comod_ref(key, t));
            let (m, n, o) = (m?, n?, o?);
            let i = parse_mat(field, key, "i", &q.i, n.dim(), m.dim())?;
            let p = parse_mat(field, key, "p", &q.p, o.dim(), n.dim())?;
            let ses = Ses::new(m, n, o, i, p).map_err(|e| invalid(key, e))?;
            require(key, ses.validate())?;
            s.sequences.push((key.clone(), [q.m.clone(), q.n.clone(), q.o.clone()], ses));
        }
        for (key, pd) in &doc.pivots.0 {
            let pv = s.build_pivot(key, pd)?;
            s.pivots.push((key.clone(), pd.clone(), pv));
        }
        for (key, rd) in &doc.resolutions.0 {
            let resolved = s.comod_ref(key, &rd.resolved)?;
            let mut pivots = Vec::with_capacity(rd.pivots.len());
            for t in &rd.pivots {
                let pv = s.pivots.iter().find(|(k, _, _)| k == t).map(|(_, _, p)| p.clone());
                pivots.push(pv.ok_or_else(|| SessionError::DanglingReference {
                    key: key.clone(),
                    kind: "pivot",
                    target: t.clone(),
                })?);
            }
            if pivots.is_empty() || rd.maps.len() + 1 != pivots.len() {
                return Err(invalid(key, "needs one map fewer than pivots"));
            }
            let maps = rd
                .maps
                .iter()
                .enumerate()
                .map(|(p, m)| parse_mat(field, key, "maps", m, pivots[p].p.dim(), pivots[p + 1].p.dim()))
                .collect::<Result<Vec<_>, _>>()?;
            let aug = parse_mat(field, key, "augmentation", &rd.augmentation, resolved.dim(), pivots[0].p.dim())?;
            let res = FlippingResolution { resolved, pivots, maps, augmentation: aug };
            require(key, res.validate())?;
            s.resolutions.push((key.clone(), rd.clone(), res));
        }
        for (key, w) in &doc.witnesses.0 {
            let c = s.coalgebra_ref(key, &w.coalgebra)?;
            let d = c.dim();
            let m = parse_mat(field, key, "matrix", &w.matrix, d * d, d)?;
            s.witnesses.push((key.clone(), w.coalgebra.clone(), IsoWitness { matrix: m }));
        }
        Ok(s)
    }

    fn build_pivot(&self, key: &str, pd: &PivotDoc) -> Result<PivotSpec, SessionError> {
        let tag = |t: &str| t.parse::<BifunctorTag>().map_err(|e| invalid(key, e));
        let (f, g) = (tag(&pd.f)?, tag(&pd.g)?);
        let p = self.comod_ref(key, &pd.p)?;
        let i = self.comod_ref(key, &pd.i)?;
        let tests = pd.tests.iter().map(|t| self.comod_ref(key, t)).collect::<Result<Vec<_>, _>>()?;
        if pd.witnesses.len() != tests.len() {
            return Err(invalid(key, "needs one witness per test object"));
        }
        let mut witnesses = Vec::with_capacity(tests.len());
        for (a, w) in tests.iter().zip(&pd.witnesses) {
            let fd = bifunctor_space(f, &p, a).map_err(|e| invalid(key, e))?.dim();
            let gd = bifunctor_space(g, &i, a).map_err(|e| invalid(key, e))?.dim();
            witnesses.push(parse_mat(self.field, key, "witness", w, gd, fd)?);
        }
        let mut morphisms = Vec::with_capacity(pd.morphisms.len());
        for md in &pd.morphisms {
            let (Some(src), Some(tgt)) = (tests.get(md.from), tests.get(md.to)) else {
                return Err(invalid(key, format!("morphism {} → {} names a missing test", md.from, md.to)));
            };
            let a = parse_mat(self.field, key, "morphism", &md.map, tgt.dim(), src.dim())?;
            if !src.is_morphism(&a, tgt) {
                return Err(invalid(key, format!("morphism {} → {} is not colinear", md.from, md.to)));
            }
            morphisms.push((md.from, md.to, a));
        }
        Ok(PivotSpec { f, g, p, i, tests, witnesses, morphisms })
    }

    fn coalgebra_ref(&self, key: &str, target: &str) -> Result<CoalgebraRef, SessionError> {
        find(&self.coalgebras, target).cloned().ok_or_else(|| SessionError::DanglingReference {
            key: key.to_string(),
            kind: "coalgebra",
            target: target.to_string(),
        })
    }

    fn comod_ref(&self, key: &str, target: &str) -> Result<Comod, SessionError> {
        self.comod(target).ok_or_else(|| SessionError::DanglingReference {
            key: key.to_string(),
            kind: "comodule",
            target: target.to_string(),
        })
    }

    pub fn coalgebra(&self, key: &str) -> Option<&CoalgebraRef> {
        find(&self.coalgebras, key)
    }

    pub fn algebra(&self, key: &str) -> Option<&FinAlgebra> {
        find(&self.algebras, key)
    }

    pub fn bimodule(&self, key: &str) -> Option<&Bimodule> {
        self.bimodules.iter().find(|(k, _, _)| k == key).map(|(_, _, b)| b)
    }

    /// Any right, left or two-sided comodule under `key`.
    pub fn comod(&self, key: &str) -> Option<Comod> {
        if let Some((_, _, m)) = self.right_comodules.iter().find(|(k, _, _)| k == key) {
            return Some(Comod::Right(m.clone()));
        }
        if let Some((_, _, m)) = self.left_comodules.iter().find(|(k, _, _)| k == key) {
            return Some(Comod::Left(m.clone()));
        }
        self.bicomodules.iter().find(|(k, _, _)| k == key).map(|(_, _, m)| Comod::Bi(m.clone()))
    }

    pub fn sequence(&self, key: &str) -> Option<&Ses> {
        self.sequences.iter().find(|(k, _, _)| k == key).map(|(_, _, s)| s)
    }

    pub fn resolution(&self, key: &str) -> Option<&FlippingResolution> {
        self.resolutions.iter().find(|(k, _, _)| k == key).map(|(_, _, r)| r)
    }

    pub fn witness(&self, key: &str) -> Option<(&str, &IsoWitness)> {
        self.witnesses.iter().find(|(k, _, _)| k == key).map(|(_, c, w)| (c.as_str(), w))
    }

    /// Number of named objects.
    pub fn len(&self) -> usize {
        self.coalgebras.len()
            + self.algebras.len()
            + self.right_comodules.len()
            + self.left_comodules.len()
            + self.bicomodules.len()
            + self.bimodules.len()
            + self.sequences.len()
            + self.pivots.len()
            + self.resolutions.len()
            + self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(key, kind, dim)` for every object in file order, grouped by kind.
    pub fn inventory(&self) -> Vec<(String, &'static str, usize)> {
        let mut out = Vec::new();
        out.extend(self.coalgebras.iter().map(|(k, c)| (k.clone(), "coalgebra", c.dim())));
        out.extend(self.algebras.iter().map(|(k, a)| (k.clone(), "algebra", a.dim())));
        out.extend(self.right_comodules.iter().map(|(k, _, m)| (k.clone(), "right comodule", m.dim())));
        out.extend(self.left_comodules.iter().map(|(k, _, m)| (k.clone(), "left comodule", m.dim())));
        out.extend(self.bicomodules.iter().map(|(k, _, m)| (k.clone(), "bicomodule", m.dim())));
        out.extend(self.bimodules.iter().map(|(k, _, m)| (k.clone(), "bimodule", m.dim())));
        out.extend(self.sequences.iter().map(|(k, _, s)| (k.clone(), "sequence", s.n.dim())));
        out.extend(self.pivots.iter().map(|(k, _, p)| (k.clone(), "pivot", p.p.dim())));
        out.extend(self.resolutions.iter().map(|(k, _, r)| (k.clone(), "resolution", r.pivots.len())));
        out.extend(self.witnesses.iter().map(|(k, _, w)| (k.clone(), "witness", w.matrix.cols())));
        out
    }

    /// Wire form of the loaded objects.
    pub fn to_doc(&self) -> SessionDoc {
        SessionDoc {
            field: self.field.to_string(),
            coalgebras: Keyed(
                self.coalgebras
                    .iter()
                    .map(|(k, c)| {
                        let doc = CoalgebraDoc { dim: c.dim(), delta: mat_doc(c.delta()), counit: row_doc(c.counit()) };
                        (k.clone(), doc)
                    })
                    .collect(),
            ),
            algebras: Keyed(
                self.algebras
                    .iter()
                    .map(|(k, a)| {
                        let doc =
                            AlgebraDoc { dim: a.dim(), mul: mat_doc(a.mul()), unit: row_doc(&a.unit().transpose()) };
                        (k.clone(), doc)
                    })
                    .collect(),
            ),
            right_comodules: Keyed(
                self.right_comodules
                    .iter()
                    .map(|(k, o, m)| (k.clone(), RightDoc { over: o.clone(), dim: m.dim(), rho: mat_doc(m.rho()) }))
                    .collect(),
            ),
            left_comodules: Keyed(
                self.left_comodules
                    .iter()
                    .map(|(k, o, m)| {
                        (k.clone(), LeftDoc { over: o.clone(), dim: m.dim(), lambda: mat_doc(m.lambda()) })
                    })
                    .collect(),
            ),
            bicomodules: Keyed(
                self.bicomodules
                    .iter()
                    .map(|(k, (l, r), m)| {
                        let doc = BiDoc {
                            left_over: l.clone(),
                            right_over: r.clone(),
                            dim: m.dim(),
                            lambda: mat_doc(m.lambda()),
                            rho: mat_doc(m.rho()),
                        };
                        (k.clone(), doc)
                    })
                    .collect(),
            ),
            bimodules: Keyed(
                self.bimodules
                    .iter()
                    .map(|(k, o, b)| {
                        let doc = BimoduleDoc {
                            over: o.clone(),
                            dim: b.dim(),
                            left_act: mat_doc(b.left_act()),
                            right_act: mat_doc(b.right_act()),
                        };
                        (k.clone(), doc)
                    })
                    .collect(),
            ),
            sequences: Keyed(
                self.sequences
                    .iter()
                    .map(|(k, [m, n, o], s)| {
                        let doc =
                            SesDoc { m: m.clone(), n: n.clone(), o: o.clone(), i: mat_doc(&s.i), p: mat_doc(&s.p) };
                        (k.clone(), doc)
                    })
                    .collect(),
            ),
            pivots: Keyed(
                self.pivots
                    .iter()
                    .map(|(k, d, p)| {
                        let doc = PivotDoc {
                            witnesses: p.witnesses.iter().map(mat_doc).collect(),
                            morphisms: p
                                .morphisms
                                .iter()
                                .map(|(from, to, a)| MorphismDoc { from: *from, to: *to, map: mat_doc(a) })
                                .collect(),
                            ..d.clone()
                        };
                        (k.clone(), doc)
                    })
                    .collect(),
            ),
            resolutions: Keyed(
                self.resolutions
                    .iter()
                    .map(|(k, d, r)| {
                        let doc = ResolutionDoc {
                            maps: r.maps.iter().map(mat_doc).collect(),
                            augmentation: mat_doc(&r.augmentation),
                            ..d.clone()
                        };
                        (k.clone(), doc)
                    })
                    .collect(),
            ),
            witnesses: Keyed(
                self.witnesses
                    .iter()
                    .map(|(k, c, w)| (k.clone(), WitnessDoc { coalgebra: c.clone(), matrix: mat_doc(&w.matrix) }))
                    .collect(),
            ),
        }
    }

    pub fn to_json(&self) -> String {
        doc_json(&self.to_doc())
    }
}

/// Indented JSON with every matrix row on one line.
pub fn doc_json(doc: &SessionDoc) -> String {
    let v = serde_json::to_value(doc).expect("session documents always serialize");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", pad(indent + 1), Value::String(k.clone())));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}}}", pad(indent)));
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}]", pad(indent)));
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("[{}]", parts.join(", ")));
        }
        _ => out.push_str(&v.to_string()),
    }
}
