use std::fmt;

use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
///
/// Every entry belongs to `field`; constructors that take foreign scalars
/// check this and return [`Error::FieldMismatch`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(s.field(), field, "from_fn produced a scalar in the wrong field");
                data.push(s);
            }
        }
        Mat { field, rows, cols, data }
    }

    /// Builds a matrix from rows of scalars; `cols` is needed for the 0-row case.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field.to_string(), s.field().to_string()));
                }
                data.push(s);
            }
        }
        Ok(Mat { field, rows: n, cols, data })
    }

    /// Convenience constructor from integer rows (all rows must have equal length).
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| Scalar::from_i64(field, v)).collect()).collect();
        Self::from_rows(field, cols, rows).expect("ragged integer rows")
    }

    /// Column vector.
    pub fn column_vector(field: FieldSpec, entries: Vec<Scalar>) -> Result<Self> {
        let n = entries.len();
        Self::from_rows(field, 1, entries.into_iter().map(|s| vec![s]).collect()).inspect(|m| {
            debug_assert_eq!(m.rows, n);
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[i * self.cols + j] = v;
    }

    pub(crate) fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        let idx = i * self.cols + j;
        self.data[idx] = &self.data[idx] + v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() })
            })
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.set(j, i, v.clone());
                }
            }
        }
        t
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    /// Product with shape and field checks.
    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        // structure maps are overwhelmingly sparse; walk nonzeros only
        let other_nz: Vec<Vec<usize>> =
            (0..other.rows).map(|k| (0..other.cols).filter(|&j| !other.get(k, j).is_zero()).collect()).collect();
        for i in 0..self.rows {
            for (k, nz) in other_nz.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in nz {
                    let prod = a * other.get(k, j);
                    out.add_at(i, j, &prod);
                }
            }
        }
        out
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!("cannot add {:?} and {:?}", self.shape(), other.shape())));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Mat { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.try_add(&other.scale(&-&Scalar::one(self.field)))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let data = self.data.iter().map(|a| a * s).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale_i64(&self, s: i64) -> Mat {
        self.scale(&Scalar::from_i64(self.field, s))
    }

    /// Kronecker product, row-major: `e_i ⊗ e_j` sits at index `i * dim_b + j`.
    pub fn kron(&self, b: &Mat) -> Result<Mat> {
        self.check_field(b)?;
        let mut out = Mat::zeros(self.field, self.rows * b.rows, self.cols * b.cols);
        let b_nz: Vec<(usize, usize)> = (0..b.rows)
            .flat_map(|k| (0..b.cols).map(move |l| (k, l)))
            .filter(|&(k, l)| !b.get(k, l).is_zero())
            .collect();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for &(k, l) in &b_nz {
                    out.set(i * b.rows + k, j * b.cols + l, a * b.get(k, l));
                }
            }
        }
        Ok(out)
    }

    /// Columns listed in `idx`, in order.
    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let c = self.cols + other.cols;
        Ok(Mat::from_fn(self.field, self.rows, c, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!("vstack of {} and {} cols", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Mat { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        let mut out = Mat::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Sub-block `rows r0..r1`, `cols c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        Mat::from_fn(self.field, r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Row-major flattening into a column vector.
    pub fn flatten(&self) -> Mat {
        Mat { field: self.field, rows: self.rows * self.cols, cols: 1, data: self.data.clone() }
    }

    /// Inverse of [`Mat::flatten`].
    pub fn unflatten(v: &Mat, rows: usize, cols: usize) -> Mat {
        assert_eq!(v.rows * v.cols, rows * cols);
        Mat { field: v.field, rows, cols, data: v.data.clone() }
    }
}

impl std::ops::Mul for &Mat {
    type Output = Mat;

    /// Panics on shape or field mismatch; use [`Mat::try_mul`] at input boundaries.
    fn mul(self, other: &Mat) -> Mat {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl std::ops::Add for &Mat {
    type Output = Mat;
    fn add(self, other: &Mat) -> Mat {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl std::ops::Sub for &Mat {
    type Output = Mat;
    fn sub(self, other: &Mat) -> Mat {
        self.try_sub(other).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Kronecker product of a list of matrices, left to right.
pub fn kron_all(field: FieldSpec, factors: &[&Mat]) -> Mat {
    factors.iter().fold(Mat::identity(field, 1), |acc, m| acc.kron(m).expect("kron_all field"))
}

/// Permutation of tensor factors.
///
/// `dims[k]` is the dimension of input factor `k`; output factor `j` is input
/// factor `order[j]`. The result maps `V_0 ⊗ … ⊗ V_{r-1}` to
/// `V_{order[0]} ⊗ … ⊗ V_{order[r-1]}` under the row-major convention.
pub fn tensor_permutation(field: FieldSpec, dims: &[usize], order: &[usize]) -> Mat {
    assert_eq!(dims.len(), order.len());
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
    let mut m = Mat::zeros(field, total, total);
    let mut digits = vec![0usize; dims.len()];
    for src in 0..total {
        let mut rem = src;
        for k in (0..dims.len()).rev() {
            digits[k] = rem % dims[k];
            rem /= dims[k];
        }
        let mut dst = 0;
        for (j, &k) in order.iter().enumerate() {
            dst = dst * out_dims[j] + digits[k];
        }
        m.set(dst, src, Scalar::one(field));
    }
    m
}
