use super::algebra::FinAlgebra;
use super::coalgebra::{axiom_row, expect_shape};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Mat};
use crate::report::CheckReport;

/// `A`-`A` bimodule with both actions stored explicitly.
///
/// `left_act` is `m × d·m` (column `a·m + v` holds `e_a · v`), `right_act` is
/// `m × m·d` (column `v·d + a` holds `v · e_a`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    over: FinAlgebra,
    left_act: Mat,
    right_act: Mat,
}

impl Bimodule {
    pub fn new(over: FinAlgebra, left_act: Mat, right_act: Mat) -> Result<Self> {
        if over.field() != left_act.field() || over.field() != right_act.field() {
            return Err(Error::FieldMismatch(over.field().to_string(), left_act.field().to_string()));
        }
        let m = left_act.rows();
        expect_shape("left_act", &left_act, m, over.dim() * m)?;
        expect_shape("right_act", &right_act, m, m * over.dim())?;
        Ok(Bimodule { over, left_act, right_act })
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(a: &FinAlgebra) -> Self {
        Bimodule { over: a.clone(), left_act: a.mul().clone(), right_act: a.mul().clone() }
    }

    pub fn over(&self) -> &FinAlgebra {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.left_act.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.over.field()
    }

    pub fn left_act(&self) -> &Mat {
        &self.left_act
    }

    pub fn right_act(&self) -> &Mat {
        &self.right_act
    }

    pub fn validate(&self) -> CheckReport {
        let a = &self.over;
        let ia = a.id();
        let im = Mat::identity(self.field(), self.dim());
        let (l, r) = (&self.left_act, &self.right_act);
        let mut rep = CheckReport::new("bimodule");
        rep.push(axiom_row("left associativity", &(l * &a.mul().kron(&im).unwrap()), &(l * &ia.kron(l).unwrap())));
        rep.push(axiom_row("left unit", &(l * &a.unit().kron(&im).unwrap()), &im));
        rep.push(axiom_row("right associativity", &(r * &r.kron(&ia).unwrap()), &(r * &im.kron(a.mul()).unwrap())));
        rep.push(axiom_row("right unit", &(r * &im.kron(a.unit()).unwrap()), &im));
        rep.push(axiom_row("actions commute", &(l * &ia.kron(r).unwrap()), &(r * &l.kron(&ia).unwrap())));
        rep
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        match self.validate().failures().next() {
            Some(r) => Err(Error::MalformedInput(format!("bimodule violates {}", r.label))),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn regular_bimodules_validate() {
        for a in [fixtures::field_algebra(FieldSpec::Rationals), fixtures::dual_numbers(), fixtures::m2()] {
            assert!(Bimodule::regular(&a).validate().passed());
        }
    }

    #[test]
    fn twisted_right_action_breaks_associativity() {
        let a = fixtures::dual_numbers();
        let q = a.field();
        // v·x = v, so (v·x)·x = v while v·(x·x) = 0
        let right = Mat::from_i64(q, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let m = Bimodule::new(a.clone(), a.mul().clone(), right).unwrap();
        let rep = m.validate();
        assert!(!rep.row("right associativity").unwrap().passed);
        assert!(rep.row("left associativity").unwrap().passed);
    }
}
