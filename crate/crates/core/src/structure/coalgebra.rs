use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{tensor_permutation, FieldSpec, Mat};
use crate::report::{CheckReport, CheckRow};

/// Index of the first column where `a` and `b` differ.
pub(crate) fn first_diff_column(a: &Mat, b: &Mat) -> Option<usize> {
    (0..a.cols()).find(|&j| (0..a.rows()).any(|i| a.get(i, j) != b.get(i, j)))
}

pub(crate) fn axiom_row(label: &str, lhs: &Mat, rhs: &Mat) -> CheckRow {
    CheckRow::axiom(label, first_diff_column(lhs, rhs).map(|j| format!("fails at basis {j}")))
}

pub(crate) fn expect_shape(what: &str, m: &Mat, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(Error::MalformedInput(format!("{what} is {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(())
}

/// Finite-dimensional coalgebra given by structure constants.
///
/// `delta` is `d² × d` with column `i` holding `Δ(e_i)` in tensor indexing
/// (`e_j ⊗ e_k` at `j·d + k`); `counit` is `1 × d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinCoalgebra {
    dim: usize,
    delta: Mat,
    counit: Mat,
}

impl FinCoalgebra {
    /// Shape-checked constructor. Axioms are checked by [`FinCoalgebra::validate`].
    pub fn new(delta: Mat, counit: Mat) -> Result<Self> {
        let d = counit.cols();
        expect_shape("counit", &counit, 1, d)?;
        expect_shape("delta", &delta, d * d, d)?;
        if delta.field() != counit.field() {
            return Err(Error::FieldMismatch(delta.field().to_string(), counit.field().to_string()));
        }
        Ok(FinCoalgebra { dim: d, delta, counit })
    }

    pub fn field(&self) -> FieldSpec {
        self.counit.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &Mat {
        &self.delta
    }

    pub fn counit(&self) -> &Mat {
        &self.counit
    }

    pub fn id(&self) -> Mat {
        Mat::identity(self.field(), self.dim)
    }

    /// Coassociativity and both counit laws.
    pub fn validate(&self) -> CheckReport {
        let id = self.id();
        let mut report = CheckReport::new("coalgebra");
        let left = &id.kron(&self.delta).unwrap() * &self.delta;
        let right = &self.delta.kron(&id).unwrap() * &self.delta;
        report.push(axiom_row("coassociativity", &left, &right));
        let r_counit = &id.kron(&self.counit).unwrap() * &self.delta;
        let l_counit = &self.counit.kron(&id).unwrap() * &self.delta;
        let mut row = axiom_row("counit", &r_counit, &id);
        if row.passed {
            row = axiom_row("counit", &l_counit, &id);
        }
        report.push(row);
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        match self.validate().failures().next() {
            Some(r) => Err(Error::MalformedInput(format!("coalgebra violates {} ({})", r.label, r.detail))),
            None => Ok(()),
        }
    }

    /// Opposite coalgebra: `Δ^op = swap ∘ Δ`.
    pub fn opposite(&self) -> FinCoalgebra {
        let d = self.dim;
        let swap = tensor_permutation(self.field(), &[d, d], &[1, 0]);
        FinCoalgebra { dim: d, delta: &swap * &self.delta, counit: self.counit.clone() }
    }

    pub fn into_ref(self) -> CoalgebraRef {
        Arc::new(self)
    }
}

/// Shared handle; comodules keep their coalgebra alive through it.
pub type CoalgebraRef = Arc<FinCoalgebra>;

pub(crate) fn same_coalgebra(a: &FinCoalgebra, b: &FinCoalgebra) -> bool {
    std::ptr::eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k1_and_dp2_validate() {
        assert!(fixtures::k1().validate().passed());
        assert!(fixtures::dp2().validate().passed());
        assert!(fixtures::mc2().validate().passed());
        assert!(fixtures::g2().validate().passed());
    }

    #[test]
    fn dp2_bad_counit_fails_at_basis_one() {
        let dp2 = fixtures::dp2();
        let q = dp2.field();
        let bad = FinCoalgebra::new(dp2.delta().clone(), Mat::from_i64(q, &[&[1, 1]])).unwrap();
        let rep = bad.validate();
        assert!(!rep.passed());
        let row = rep.row("counit").unwrap();
        assert!(!row.passed);
        assert_eq!(row.detail, "fails at basis 1");
        assert!(rep.row("coassociativity").unwrap().passed);
    }

    #[test]
    fn shape_errors() {
        let q = FieldSpec::Rationals;
        assert!(matches!(FinCoalgebra::new(Mat::zeros(q, 3, 2), Mat::zeros(q, 1, 2)), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn opposite_of_cocommutative_is_itself() {
        let dp2 = fixtures::dp2();
        assert_eq!(dp2.opposite(), dp2);
        assert!(fixtures::mc2().opposite().validate().passed());
        assert_ne!(fixtures::mc2().opposite(), fixtures::mc2());
    }
}
