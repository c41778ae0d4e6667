use super::mat::Mat;
use super::reduce::{reduce, solve};
use super::scalar::FieldSpec;
use crate::error::{Error, Result};

/// A subspace of `k^ambient_dim`, stored as a matrix of independent columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Mat,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { basis: Mat::zeros(field, ambient_dim, 0) }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { basis: Mat::identity(field, ambient_dim) }
    }

    pub(crate) fn from_independent_columns(basis: Mat) -> Self {
        debug_assert_eq!(reduce(&basis).rank, basis.cols());
        Subspace { basis }
    }

    /// Checked constructor: columns must be linearly independent.
    pub fn new(basis: Mat) -> Result<Self> {
        if reduce(&basis).rank != basis.cols() {
            return Err(Error::MalformedInput("subspace basis columns are dependent".into()));
        }
        Ok(Subspace { basis })
    }

    /// Span of arbitrary columns; keeps the leftmost independent ones.
    pub fn span(columns: &Mat) -> Self {
        let piv = reduce(columns).pivot_cols;
        Subspace { basis: columns.select_columns(&piv) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    /// Whether every column of `vectors` lies in this subspace.
    pub fn contains_columns(&self, vectors: &Mat) -> bool {
        if vectors.cols() == 0 {
            return true;
        }
        matches!(solve(&self.basis, vectors), Ok(Some(_)))
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.contains_columns(&other.basis)
    }

    /// Coordinates of `vectors` in this basis, if they lie in the subspace.
    pub fn coordinates(&self, vectors: &Mat) -> Option<Mat> {
        solve(&self.basis, vectors).ok().flatten()
    }
}

/// `numerator / denominator` with chosen representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    numerator: Subspace,
    denominator: Subspace,
    representatives: Mat,
}

impl Subquotient {
    pub fn new(cycles: Subspace, boundaries: Subspace) -> Result<Self> {
        let (_, reps) = subquotient_dim(&cycles, &boundaries)?;
        Ok(Subquotient { numerator: cycles, denominator: boundaries, representatives: reps })
    }

    pub fn dim(&self) -> usize {
        self.representatives.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.numerator.ambient_dim()
    }

    pub fn numerator(&self) -> &Subspace {
        &self.numerator
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    pub fn representatives(&self) -> &Mat {
        &self.representatives
    }

    /// Class coordinates of numerator vectors in the representative basis.
    pub fn class_coordinates(&self, vectors: &Mat) -> Result<Mat> {
        let b = self.denominator.basis();
        let joint = b.hstack(&self.representatives)?;
        let x = solve(&joint, vectors)?.ok_or_else(|| Error::NotWellDefined("vector outside the numerator".into()))?;
        Ok(x.block(b.cols(), x.rows(), 0, x.cols()))
    }
}

/// Dimension of `cycles / boundaries` and cycle-basis columns completing the
/// boundary basis.
pub fn subquotient_dim(cycles: &Subspace, boundaries: &Subspace) -> Result<(usize, Mat)> {
    if cycles.ambient_dim() != boundaries.ambient_dim() {
        return Err(Error::DimensionMismatch("subquotient ambient dims differ".into()));
    }
    if !cycles.contains(boundaries) {
        return Err(Error::NotContained);
    }
    let joint = boundaries.basis().hstack(cycles.basis())?;
    let nb = boundaries.dim();
    let picks: Vec<usize> = reduce(&joint).pivot_cols.into_iter().filter(|&c| c >= nb).map(|c| c - nb).collect();
    let reps = cycles.basis().select_columns(&picks);
    Ok((reps.cols(), reps))
}

/// Matrix of the map induced by `f` from `source` to `target`, in their
/// representative bases.
pub fn induced_map(f: &Mat, source: &Subquotient, target: &Subquotient) -> Result<Mat> {
    if f.cols() != source.ambient_dim() || f.rows() != target.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "map {}x{} between ambients {} and {}",
            f.rows(),
            f.cols(),
            source.ambient_dim(),
            target.ambient_dim()
        )));
    }
    let image_num = f.try_mul(source.numerator().basis())?;
    if !target.numerator().contains_columns(&image_num) {
        return Err(Error::NotWellDefined("numerator not mapped into numerator".into()));
    }
    let image_den = f.try_mul(source.denominator().basis())?;
    if !target.denominator().contains_columns(&image_den) {
        return Err(Error::NotWellDefined("denominator not mapped into denominator".into()));
    }
    let image_reps = f.try_mul(source.representatives())?;
    target.class_coordinates(&image_reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Scalar;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn sub(cols: &[&[i64]], ambient: usize) -> Subspace {
        // cols given as column vectors
        let m = Mat::from_fn(Q, ambient, cols.len(), |i, j| Scalar::from_i64(Q, cols[j][i]));
        Subspace::new(m).unwrap()
    }

    #[test]
    fn subquotient_examples() {
        let line = sub(&[&[1, 1]], 2);
        assert_eq!(subquotient_dim(&line, &line).unwrap().0, 0);
        assert_eq!(subquotient_dim(&Subspace::full(Q, 2), &Subspace::zero(Q, 2)).unwrap().0, 2);
        let z = sub(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let b = sub(&[&[1, 1, 0]], 3);
        assert_eq!(subquotient_dim(&z, &b).unwrap().0, 1);
    }

    #[test]
    fn subquotient_rejects_non_containment() {
        let z = sub(&[&[1, 0]], 2);
        let b = sub(&[&[0, 1]], 2);
        assert_eq!(subquotient_dim(&z, &b), Err(Error::NotContained));
    }

    #[test]
    fn induced_map_examples() {
        let sq = Subquotient::new(Subspace::full(Q, 2), sub(&[&[0, 1]], 2)).unwrap();
        let id = induced_map(&Mat::identity(Q, 2), &sq, &sq).unwrap();
        assert!(id.is_identity());
        assert!(induced_map(&Mat::zeros(Q, 2, 2), &sq, &sq).unwrap().is_zero());
        let f = Mat::from_i64(Q, &[&[1, 0], &[0, 0]]);
        assert_eq!(induced_map(&f, &sq, &sq).unwrap(), Mat::from_i64(Q, &[&[1]]));
    }

    #[test]
    fn induced_map_flags_wrong_differential() {
        // boundaries span{e0}; the swap sends e0 to e1, outside the target boundaries
        let sq = Subquotient::new(Subspace::full(Q, 2), sub(&[&[1, 0]], 2)).unwrap();
        let swap = Mat::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert!(matches!(induced_map(&swap, &sq, &sq), Err(Error::NotWellDefined(_))));
    }

    #[test]
    fn induced_map_is_functorial() {
        let sq = Subquotient::new(Subspace::full(Q, 3), sub(&[&[1, 0, 0]], 3)).unwrap();
        let f = Mat::from_i64(Q, &[&[1, 2, 0], &[0, 1, 1], &[0, 0, 3]]);
        let g = Mat::from_i64(Q, &[&[2, 0, 1], &[0, 0, 1], &[0, 1, 0]]);
        let gf = induced_map(&(&g * &f), &sq, &sq).unwrap();
        let composed = &induced_map(&g, &sq, &sq).unwrap() * &induced_map(&f, &sq, &sq).unwrap();
        assert_eq!(gf, composed);
    }
}
