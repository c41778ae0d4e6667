use super::asc::AscComplex;
use crate::error::{Error, Result};
use crate::linalg::{induced_map, kernel, rank, FieldSpec, Mat, Subquotient, Subspace};

/// First-quadrant double complex `K[p][q]`, `0 ≤ p ≤ P`, `0 ≤ q ≤ Q`.
///
/// `dh[p][q]: K[p][q] → K[p+1][q]` for `p < P`, `dv[p][q]: K[p][q] → K[p][q+1]`
/// for `q < Q`. The two differentials anticommute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomplex {
    field: FieldSpec,
    dims: Vec<Vec<usize>>,
    dh: Vec<Vec<Mat>>,
    dv: Vec<Vec<Mat>>,
}

/// Which direction a spectral page takes homology in first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filtration {
    /// Along `p` first, then the map induced by the vertical differential.
    I,
    /// Along `q` first, then the map induced by the horizontal differential.
    II,
}

impl Bicomplex {
    pub fn new(field: FieldSpec, dims: Vec<Vec<usize>>, dh: Vec<Vec<Mat>>, dv: Vec<Vec<Mat>>) -> Result<Self> {
        let np = dims.len();
        let nq = dims.first().map_or(0, Vec::len);
        if dims.iter().any(|col| col.len() != nq) {
            return Err(Error::NotABicomplex("ragged grid".into()));
        }
        if dh.len() != np.saturating_sub(1) || dh.iter().any(|c| c.len() != nq) {
            return Err(Error::NotABicomplex("horizontal differentials do not cover the grid".into()));
        }
        if dv.len() != np || dv.iter().any(|c| c.len() != nq.saturating_sub(1)) {
            return Err(Error::NotABicomplex("vertical differentials do not cover the grid".into()));
        }
        for p in 0..np {
            for q in 0..nq {
                if p + 1 < np && dh[p][q].shape() != (dims[p + 1][q], dims[p][q]) {
                    return Err(Error::NotABicomplex(format!("d_h at ({p},{q}) has the wrong shape")));
                }
                if q + 1 < nq && dv[p][q].shape() != (dims[p][q + 1], dims[p][q]) {
                    return Err(Error::NotABicomplex(format!("d_v at ({p},{q}) has the wrong shape")));
                }
            }
        }
        let all = dh.iter().flatten().chain(dv.iter().flatten());
        if let Some(m) = all.clone().find(|m| m.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), m.field().to_string()));
        }
        for p in 0..np {
            for q in 0..nq {
                if p + 2 < np && !(&dh[p + 1][q] * &dh[p][q]).is_zero() {
                    return Err(Error::NotABicomplex(format!("d_h∘d_h ≠ 0 at ({p},{q})")));
                }
                if q + 2 < nq && !(&dv[p][q + 1] * &dv[p][q]).is_zero() {
                    return Err(Error::NotABicomplex(format!("d_v∘d_v ≠ 0 at ({p},{q})")));
                }
                if p + 1 < np && q + 1 < nq {
                    let s = &(&dh[p][q + 1] * &dv[p][q]) + &(&dv[p + 1][q] * &dh[p][q]);
                    if !s.is_zero() {
                        return Err(Error::NotABicomplex(format!("differentials do not anticommute at ({p},{q})")));
                    }
                }
            }
        }
        Ok(Bicomplex { field, dims, dh, dv })
    }

    /// Grid with no nonzero maps.
    pub fn zero_maps(field: FieldSpec, dims: Vec<Vec<usize>>) -> Result<Self> {
        let np = dims.len();
        let nq = dims.first().map_or(0, Vec::len);
        let dh = (0..np.saturating_sub(1))
            .map(|p| (0..nq).map(|q| Mat::zeros(field, dims[p + 1][q], dims[p][q])).collect())
            .collect();
        let dv = (0..np)
            .map(|p| (0..nq.saturating_sub(1)).map(|q| Mat::zeros(field, dims[p][q + 1], dims[p][q])).collect())
            .collect();
        Bicomplex::new(field, dims, dh, dv)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Number of columns `P + 1`.
    pub fn width(&self) -> usize {
        self.dims.len()
    }

    /// Number of rows `Q + 1`.
    pub fn height(&self) -> usize {
        self.dims.first().map_or(0, Vec::len)
    }

    pub fn dims(&self) -> &[Vec<usize>] {
        &self.dims
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.dims.get(p).and_then(|c| c.get(q)).copied().unwrap_or(0)
    }

    /// Horizontal differential out of `(p, q)`, zero at the right edge.
    pub fn dh(&self, p: usize, q: usize) -> Mat {
        if p + 1 < self.width() {
            self.dh[p][q].clone()
        } else {
            Mat::zeros(self.field, 0, self.dim(p, q))
        }
    }

    /// Vertical differential out of `(p, q)`, zero at the top edge.
    pub fn dv(&self, p: usize, q: usize) -> Mat {
        if q + 1 < self.height() {
            self.dv[p][q].clone()
        } else {
            Mat::zeros(self.field, 0, self.dim(p, q))
        }
    }

    fn dh_into(&self, p: usize, q: usize) -> Mat {
        if p == 0 {
            Mat::zeros(self.field, self.dim(p, q), 0)
        } else {
            self.dh[p - 1][q].clone()
        }
    }

    fn dv_into(&self, p: usize, q: usize) -> Mat {
        if q == 0 {
            Mat::zeros(self.field, self.dim(p, q), 0)
        } else {
            self.dv[p][q - 1].clone()
        }
    }

    /// `E^1` cell as a subquotient of `K[p][q]`.
    fn e1(&self, filt: Filtration, p: usize, q: usize) -> Result<Subquotient> {
        let (out, inc) = match filt {
            Filtration::I => (self.dh(p, q), self.dh_into(p, q)),
            Filtration::II => (self.dv(p, q), self.dv_into(p, q)),
        };
        Subquotient::new(kernel(&out), Subspace::span(&inc))
    }

    /// Dims of `E^r` for `r ∈ {0, 1, 2}`, indexed `[p][q]`.
    pub fn spectral_page(&self, filt: Filtration, r: u8) -> Result<Vec<Vec<usize>>> {
        let (np, nq) = (self.width(), self.height());
        match r {
            0 => return Ok(self.dims.clone()),
            1 | 2 => {}
            _ => return Err(Error::MalformedInput(format!("page {r} is not computed; use 0, 1 or 2"))),
        }
        let mut e1 = Vec::with_capacity(np);
        for p in 0..np {
            let col: Result<Vec<_>> = (0..nq).map(|q| self.e1(filt, p, q)).collect();
            e1.push(col?);
        }
        if r == 1 {
            return Ok(e1.iter().map(|c| c.iter().map(Subquotient::dim).collect()).collect());
        }
        // d¹ runs along the second direction
        let mut d1_rank = vec![vec![0usize; nq]; np];
        for p in 0..np {
            for q in 0..nq {
                let next = match filt {
                    Filtration::I if q + 1 < nq => Some((p, q + 1, self.dv[p][q].clone())),
                    Filtration::II if p + 1 < np => Some((p + 1, q, self.dh[p][q].clone())),
                    _ => None,
                };
                if let Some((p2, q2, f)) = next {
                    d1_rank[p][q] = rank(&induced_map(&f, &e1[p][q], &e1[p2][q2])?);
                }
            }
        }
        let mut e2 = vec![vec![0usize; nq]; np];
        for p in 0..np {
            for q in 0..nq {
                let inc = match filt {
                    Filtration::I if q > 0 => d1_rank[p][q - 1],
                    Filtration::II if p > 0 => d1_rank[p - 1][q],
                    _ => 0,
                };
                e2[p][q] = e1[p][q].dim() - d1_rank[p][q] - inc;
            }
        }
        Ok(e2)
    }

    /// Total complex `Tot^n = ⊕_{p+q=n} K[p][q]`, summands ordered by ascending `p`.
    pub fn total_complex(&self) -> Result<AscComplex> {
        let (np, nq) = (self.width(), self.height());
        if np == 0 || nq == 0 {
            return AscComplex::new(self.field, 0, vec![], vec![]);
        }
        let top = np + nq - 2;
        let cells = |n: usize| -> Vec<(usize, usize)> {
            (0..np).filter(|&p| p <= n && n - p < nq).map(|p| (p, n - p)).collect()
        };
        let offsets = |n: usize| -> Vec<usize> {
            let mut acc = 0;
            cells(n)
                .iter()
                .map(|&(p, q)| {
                    let o = acc;
                    acc += self.dims[p][q];
                    o
                })
                .collect()
        };
        let spaces: Vec<usize> = (0..=top).map(|n| cells(n).iter().map(|&(p, q)| self.dims[p][q]).sum()).collect();
        let mut diffs = Vec::with_capacity(top);
        for n in 0..top {
            let (src, dst) = (cells(n), cells(n + 1));
            let (so, dof) = (offsets(n), offsets(n + 1));
            let mut d = Mat::zeros(self.field, spaces[n + 1], spaces[n]);
            for (k, &(p, q)) in src.iter().enumerate() {
                for (l, &(p2, q2)) in dst.iter().enumerate() {
                    let block = if p2 == p + 1 && q2 == q {
                        &self.dh[p][q]
                    } else if p2 == p && q2 == q + 1 {
                        &self.dv[p][q]
                    } else {
                        continue;
                    };
                    for i in 0..block.rows() {
                        for j in 0..block.cols() {
                            let v = block.get(i, j);
                            if !v.is_zero() {
                                d.set(dof[l] + i, so[k] + j, v.clone());
                            }
                        }
                    }
                }
            }
            diffs.push(d);
        }
        AscComplex::new(self.field, 0, spaces, diffs)
    }

    pub fn total_homology(&self, n: i64) -> Result<usize> {
        Ok(self.total_complex()?.homology_dim(n))
    }

    /// `(Σ (−1)^{p+q} dim E²_{pq}, Σ (−1)^n dim H^n(Tot))`.
    pub fn euler_characteristics(&self, filt: Filtration) -> Result<(i64, i64)> {
        let e2 = self.spectral_page(filt, 2)?;
        let page: i64 = e2
            .iter()
            .enumerate()
            .flat_map(|(p, col)| col.iter().enumerate().map(move |(q, &d)| sign(p + q) * d as i64))
            .sum();
        let tot = self.total_complex()?.homology_dims();
        let total: i64 = tot.dims.iter().enumerate().map(|(n, &d)| sign(n) * d as i64).sum();
        Ok((page, total))
    }
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
