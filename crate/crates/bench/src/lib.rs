//! Workloads shared by the engine benchmarks.

use cotor_core::{FieldSpec, Mat, Scalar};

/// Vandermonde matrix on the nodes `1..=n` with its last row replaced by the
/// sum of the first two. Over the rationals its rank is `n - 1`.
pub fn dense_matrix(field: FieldSpec, n: usize) -> Mat {
    let mut m = Mat::zeros(field, n, n);
    for i in 0..n {
        let node = Scalar::from_i64(field, i as i64 + 1);
        let mut power = Scalar::one(field);
        for j in 0..n {
            m.set(i, j, power.clone());
            power = &power * &node;
        }
    }
    if n >= 3 {
        for j in 0..n {
            let v = m.get(0, j) + m.get(1, j);
            m.set(n - 1, j, v);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use cotor_core::linalg::rank;

    #[test]
    fn dense_matrix_is_rank_deficient_by_one() {
        for n in [3, 8, 16] {
            assert_eq!(rank(&dense_matrix(FieldSpec::Rationals, n)), n - 1);
        }
    }
}
