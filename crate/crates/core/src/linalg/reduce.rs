use super::mat::Mat;
use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Output of [`reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub rref: Mat,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

/// Reduced row echelon form by leftmost-pivot, topmost-row elimination.
pub fn reduce(m: &Mat) -> Reduction {
    let field = m.field();
    let (nrows, ncols) = m.shape();
    let mut rows: Vec<Vec<Scalar>> = (0..nrows).map(|i| m.row(i).to_vec()).collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let support: Vec<usize> = (c..ncols).filter(|&j| !rows[r][j].is_zero()).collect();
        for &j in &support {
            rows[r][j] = &rows[r][j] * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                let t = &factor * &pivot_row[j];
                row[j] = &row[j] - &t;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let rref = Mat::from_rows(field, ncols, rows).expect("rows keep their shape");
    Reduction { rref, rank: pivot_cols.len(), pivot_cols }
}

pub fn rank(m: &Mat) -> usize {
    // eliminate along the shorter side
    if m.rows() > m.cols() {
        reduce(&m.transpose()).rank
    } else {
        reduce(m).rank
    }
}

/// Kernel with the canonical free-variable basis read off the RREF.
///
/// One basis vector per free column `f` (ascending): `v[f] = 1` and
/// `v[pivot_k] = -rref[k][f]`.
pub fn kernel(m: &Mat) -> Subspace {
    let field = m.field();
    let red = reduce(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !red.pivot_cols.contains(c)).collect();
    let mut basis = Mat::zeros(field, n, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis.set(f, k, Scalar::one(field));
        for (row, &p) in red.pivot_cols.iter().enumerate() {
            let v = red.rref.get(row, f);
            if !v.is_zero() {
                basis.set(p, k, -v);
            }
        }
    }
    Subspace::from_independent_columns(basis)
}

/// Solves `a · x = b` for every column of `b`; `None` when some column is not
/// in the column span of `a`. When `a` has dependent columns the free variables
/// are set to zero.
pub fn solve(a: &Mat, b: &Mat) -> Result<Option<Mat>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!("solve: {} vs {} rows", a.rows(), b.rows())));
    }
    let aug = a.hstack(b)?;
    let red = reduce(&aug);
    let n = a.cols();
    if red.pivot_cols.iter().any(|&c| c >= n) {
        return Ok(None);
    }
    let field = a.field();
    let mut x = Mat::zeros(field, n, b.cols());
    for (row, &p) in red.pivot_cols.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, red.rref.get(row, n + j).clone());
        }
    }
    Ok(Some(x))
}

pub fn inverse(m: &Mat) -> Result<Mat> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch(format!("inverse of {}x{}", m.rows(), m.cols())));
    }
    let n = m.rows();
    let red = reduce(&m.hstack(&Mat::identity(m.field(), n))?);
    if red.pivot_cols.iter().copied().take(n).ne(0..n) {
        return Err(Error::Singular);
    }
    Ok(red.rref.block(0, n, n, 2 * n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn identity_and_zero() {
        let r = reduce(&Mat::identity(Q, 2));
        assert_eq!((r.rank, r.pivot_cols.clone()), (2, vec![0, 1]));
        let z = reduce(&Mat::zeros(Q, 3, 2));
        assert_eq!((z.rank, z.pivot_cols), (0, vec![]));
    }

    #[test]
    fn rank_one_example() {
        let r = reduce(&Mat::from_i64(Q, &[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(r.rref, Mat::from_i64(Q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Mat::identity(Q, 3)).dim(), 0);
        assert_eq!(kernel(&Mat::zeros(Q, 2, 3)).dim(), 3);
        let f5 = FieldSpec::prime(5).unwrap();
        let k = kernel(&Mat::from_i64(f5, &[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        // (-1, 1) = (4, 1) mod 5
        assert_eq!(k.basis().column(0), vec![Scalar::from_i64(f5, 4), Scalar::from_i64(f5, 1)]);
    }

    #[test]
    fn inverse_and_singular() {
        let m = Mat::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(inverse(&Mat::from_i64(Q, &[&[1, 2], &[2, 4]])), Err(Error::Singular));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = Mat::from_i64(Q, &[&[1], &[1]]);
        assert!(solve(&a, &Mat::from_i64(Q, &[&[1], &[2]])).unwrap().is_none());
        let x = solve(&a, &Mat::from_i64(Q, &[&[3], &[3]])).unwrap().unwrap();
        assert_eq!(x, Mat::from_i64(Q, &[&[3]]));
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = Mat> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                let rows: Vec<&[i64]> = v.chunks(c).collect();
                Mat::from_i64(Q, &rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix(5)) {
            let k = kernel(&m);
            prop_assert_eq!(reduce(&m).rank + k.dim(), m.cols());
            prop_assert!((&m * k.basis()).is_zero());
        }

        #[test]
        fn reduce_is_idempotent(m in small_matrix(5)) {
            let once = reduce(&m).rref;
            prop_assert_eq!(reduce(&once).rref, once);
        }

        #[test]
        fn rank_matches_transpose(m in small_matrix(5)) {
            prop_assert_eq!(reduce(&m).rank, reduce(&m.transpose()).rank);
        }

        #[test]
        fn kron_is_associative(a in small_matrix(2), b in small_matrix(2), c in small_matrix(2)) {
            let l = a.kron(&b).unwrap().kron(&c).unwrap();
            let r = a.kron(&b.kron(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn kron_mixed_product(a in small_matrix(3), b in small_matrix(3)) {
            // (a ⊗ b)(x ⊗ y) = (a x) ⊗ (b y) on basis vectors
            let x = Mat::from_fn(Q, a.cols(), 1, |i, _| Scalar::from_i64(Q, i as i64 + 1));
            let y = Mat::from_fn(Q, b.cols(), 1, |i, _| Scalar::from_i64(Q, 2 - i as i64));
            let lhs = &a.kron(&b).unwrap() * &x.kron(&y).unwrap();
            let rhs = (&a * &x).kron(&(&b * &y)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
