use super::coalgebra::{axiom_row, expect_shape, FinCoalgebra};
use crate::error::{Error, Result};
use crate::linalg::{kernel, FieldSpec, Mat, Scalar};
use crate::report::CheckReport;

/// Finite-dimensional associative unital algebra.
///
/// `mul` is `d × d²` (column `j·d + k` holds `e_j · e_k`), `unit` is `d × 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAlgebra {
    dim: usize,
    mul: Mat,
    unit: Mat,
}

impl FinAlgebra {
    pub fn new(mul: Mat, unit: Mat) -> Result<Self> {
        let d = unit.rows();
        expect_shape("unit", &unit, d, 1)?;
        expect_shape("mul", &mul, d, d * d)?;
        if mul.field() != unit.field() {
            return Err(Error::FieldMismatch(mul.field().to_string(), unit.field().to_string()));
        }
        Ok(FinAlgebra { dim: d, mul, unit })
    }

    pub fn field(&self) -> FieldSpec {
        self.unit.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self) -> &Mat {
        &self.mul
    }

    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn id(&self) -> Mat {
        Mat::identity(self.field(), self.dim)
    }

    pub fn validate(&self) -> CheckReport {
        let id = self.id();
        let mut report = CheckReport::new("algebra");
        let l = &self.mul * &self.mul.kron(&id).unwrap();
        let r = &self.mul * &id.kron(&self.mul).unwrap();
        report.push(axiom_row("associativity", &l, &r));
        let lu = &self.mul * &self.unit.kron(&id).unwrap();
        let ru = &self.mul * &id.kron(&self.unit).unwrap();
        let mut row = axiom_row("unit", &lu, &id);
        if row.passed {
            row = axiom_row("unit", &ru, &id);
        }
        report.push(row);
        report
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        match self.validate().failures().next() {
            Some(r) => Err(Error::MalformedInput(format!("algebra violates {} ({})", r.label, r.detail))),
            None => Ok(()),
        }
    }

    /// Product of two elements given as coordinate columns.
    pub fn product(&self, a: &Mat, b: &Mat) -> Mat {
        &self.mul * &a.kron(b).unwrap()
    }

    /// Center, solved directly as the common kernel of `z ↦ z·e_a − e_a·z`.
    pub fn center_dim(&self) -> usize {
        let d = self.dim;
        let f = self.field();
        let mut constraints = Mat::zeros(f, 0, d);
        for a in 0..d {
            let ea = Mat::from_fn(f, d, 1, |i, _| Scalar::from_i64(f, (i == a) as i64));
            let left = &self.mul * &self.id().kron(&ea).unwrap();
            let right = &self.mul * &ea.kron(&self.id()).unwrap();
            constraints = constraints.vstack(&(&left - &right)).unwrap();
        }
        kernel(&constraints).dim()
    }
}

/// Transpose duality from coalgebras to algebras: `mul = Δᵗ`, `unit = εᵗ`.
pub fn dualize_coalgebra(c: &FinCoalgebra) -> Result<FinAlgebra> {
    c.require_valid()?;
    FinAlgebra::new(c.delta().transpose(), c.counit().transpose())
}

/// Transpose duality from algebras to coalgebras: `Δ = mulᵗ`, `ε = unitᵗ`.
pub fn dualize_algebra(a: &FinAlgebra) -> Result<FinCoalgebra> {
    a.require_valid()?;
    FinCoalgebra::new(a.mul().transpose(), a.unit().transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn field_and_dual_numbers_validate() {
        assert!(fixtures::field_algebra(Q).validate().passed());
        assert!(fixtures::dual_numbers().validate().passed());
        assert!(fixtures::m2().validate().passed());
    }

    #[test]
    fn wrong_unit_fails_unit_law() {
        let a = fixtures::dual_numbers();
        let bad = FinAlgebra::new(a.mul().clone(), Mat::from_i64(Q, &[&[0], &[1]])).unwrap();
        let rep = bad.validate();
        assert!(rep.row("associativity").unwrap().passed);
        assert!(!rep.row("unit").unwrap().passed);
    }

    #[test]
    fn dual_of_dp2_is_dual_numbers() {
        // c1*·c1* = (c1*⊗c1*)(Δ c1) · c1* + ... = 0; c0* is the unit
        let a = dualize_coalgebra(&fixtures::dp2()).unwrap();
        assert_eq!(a, fixtures::dual_numbers());
    }

    #[test]
    fn dual_of_k1_is_field() {
        assert_eq!(dualize_coalgebra(&fixtures::k1()).unwrap(), fixtures::field_algebra(Q));
    }

    #[test]
    fn double_dual_is_identity() {
        for c in [fixtures::k1(), fixtures::dp2(), fixtures::mc2(), fixtures::g2()] {
            let back = dualize_algebra(&dualize_coalgebra(&c).unwrap()).unwrap();
            assert_eq!(back, c);
        }
        let a = fixtures::m2();
        assert_eq!(dualize_coalgebra(&dualize_algebra(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn dual_of_mc2_is_m2() {
        assert_eq!(dualize_coalgebra(&fixtures::mc2()).unwrap(), fixtures::m2());
    }

    #[test]
    fn dualize_rejects_invalid_input() {
        let dp2 = fixtures::dp2();
        let bad = FinCoalgebra::new(dp2.delta().clone(), Mat::from_i64(Q, &[&[1, 1]])).unwrap();
        assert!(matches!(dualize_coalgebra(&bad), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn centers() {
        assert_eq!(fixtures::dual_numbers().center_dim(), 2);
        assert_eq!(fixtures::m2().center_dim(), 1);
    }
}
