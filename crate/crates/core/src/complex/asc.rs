use crate::error::{Error, Result};
use crate::linalg::{kernel, rank, FieldSpec, Mat, Subquotient, Subspace};
use crate::report::GradedDims;

/// Cochain complex `V_a → V_{a+1} → …` with explicit differentials.
///
/// `diffs[i]` maps `spaces[i]` to `spaces[i+1]`; maps leaving the stored range
/// are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscComplex {
    field: FieldSpec,
    start_degree: i64,
    spaces: Vec<usize>,
    diffs: Vec<Mat>,
}

impl AscComplex {
    /// Checks shapes and `d∘d = 0`.
    pub fn new(field: FieldSpec, start_degree: i64, spaces: Vec<usize>, diffs: Vec<Mat>) -> Result<Self> {
        if diffs.len() + 1 != spaces.len().max(1) {
            return Err(Error::MalformedInput(format!(
                "{} spaces need {} differentials, got {}",
                spaces.len(),
                spaces.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), d.field().to_string()));
            }
            if d.shape() != (spaces[i + 1], spaces[i]) {
                return Err(Error::MalformedInput(format!(
                    "differential at degree {} is {}x{}, expected {}x{}",
                    start_degree + i as i64,
                    d.rows(),
                    d.cols(),
                    spaces[i + 1],
                    spaces[i]
                )));
            }
        }
        for i in 1..diffs.len() {
            if !diffs[i].try_mul(&diffs[i - 1])?.is_zero() {
                return Err(Error::NotAComplex(start_degree + i as i64 - 1));
            }
        }
        Ok(AscComplex { field, start_degree, spaces, diffs })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn start_degree(&self) -> i64 {
        self.start_degree
    }

    /// One past the last stored degree.
    pub fn end_degree(&self) -> i64 {
        self.start_degree + self.spaces.len() as i64
    }

    pub fn spaces(&self) -> &[usize] {
        &self.spaces
    }

    pub fn diffs(&self) -> &[Mat] {
        &self.diffs
    }

    fn index(&self, n: i64) -> Option<usize> {
        let i = n - self.start_degree;
        (i >= 0 && (i as usize) < self.spaces.len()).then_some(i as usize)
    }

    pub fn dim(&self, n: i64) -> usize {
        self.index(n).map_or(0, |i| self.spaces[i])
    }

    /// Differential leaving degree `n`, zero outside the stored range.
    pub fn diff(&self, n: i64) -> Mat {
        match self.index(n) {
            Some(i) if i < self.diffs.len() => self.diffs[i].clone(),
            _ => Mat::zeros(self.field, self.dim(n + 1), self.dim(n)),
        }
    }

    fn diff_rank(&self, n: i64) -> usize {
        match self.index(n) {
            Some(i) if i < self.diffs.len() => rank(&self.diffs[i]),
            _ => 0,
        }
    }

    /// `H^n` as a subquotient of the degree-`n` space.
    pub fn homology_subquotient(&self, n: i64) -> Result<Subquotient> {
        let cycles = kernel(&self.diff(n));
        let boundaries = Subspace::span(&self.diff(n - 1));
        Subquotient::new(cycles, boundaries)
    }

    /// `(dim H^n, representative cycles)`.
    pub fn homology(&self, n: i64) -> Result<(usize, Mat)> {
        let h = self.homology_subquotient(n)?;
        Ok((h.dim(), h.representatives().clone()))
    }

    /// `dim H^n` by ranks alone.
    pub fn homology_dim(&self, n: i64) -> usize {
        self.dim(n) - self.diff_rank(n) - self.diff_rank(n - 1)
    }

    /// Homology dims over every stored degree.
    pub fn homology_dims(&self) -> GradedDims {
        let ranks: Vec<usize> = (0..self.diffs.len()).map(|i| rank(&self.diffs[i])).collect();
        let dims = (0..self.spaces.len())
            .map(|i| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inc = if i == 0 { 0 } else { ranks[i - 1] };
                self.spaces[i] - out - inc
            })
            .collect();
        GradedDims::new(self.start_degree, dims)
    }

    /// Homology dims in degrees `start..start+count`.
    pub fn homology_dims_upto(&self, count: usize) -> GradedDims {
        let mut all = self.homology_dims();
        all.dims.truncate(count);
        all.dims.resize(count, 0);
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn identity_complex_is_acyclic() {
        let c = AscComplex::new(Q, 0, vec![1, 1], vec![Mat::identity(Q, 1)]).unwrap();
        assert_eq!(c.homology_dims().dims, vec![0, 0]);
        assert_eq!(c.homology(0).unwrap().0, 0);
    }

    #[test]
    fn zero_differentials_give_spaces() {
        let c = AscComplex::new(Q, 0, vec![2, 3, 1], vec![Mat::zeros(Q, 3, 2), Mat::zeros(Q, 1, 3)]).unwrap();
        assert_eq!(c.homology_dims().dims, vec![2, 3, 1]);
    }

    #[test]
    fn diagonal_inclusion() {
        let c = AscComplex::new(Q, 0, vec![1, 2], vec![Mat::from_i64(Q, &[&[1], &[1]])]).unwrap();
        assert_eq!(c.homology_dims().dims, vec![0, 1]);
        let (d, reps) = c.homology(1).unwrap();
        assert_eq!(d, 1);
        assert_eq!(reps.rows(), 2);
    }

    #[test]
    fn rejects_non_complex() {
        let d = Mat::identity(Q, 1);
        assert_eq!(AscComplex::new(Q, 3, vec![1, 1, 1], vec![d.clone(), d]), Err(Error::NotAComplex(3)));
    }

    #[test]
    fn rank_and_subquotient_paths_agree() {
        let d0 = Mat::from_i64(Q, &[&[1], &[1], &[0]]);
        let d1 = Mat::from_i64(Q, &[&[1, -1, 0]]);
        let c = AscComplex::new(Q, -1, vec![1, 3, 1], vec![d0, d1]).unwrap();
        for n in -1..2 {
            assert_eq!(c.homology(n).unwrap().0, c.homology_dim(n));
            assert_eq!(c.homology_dims().at(n), c.homology_dim(n));
        }
    }
}
