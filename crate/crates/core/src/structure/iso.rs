use super::coalgebra::{axiom_row, FinCoalgebra};
use crate::linalg::{rank, Mat};
use crate::report::{CheckReport, CheckRow};

/// Claimed coalgebra isomorphism `w: X → Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub matrix: Mat,
}

impl IsoWitness {
    pub fn identity(c: &FinCoalgebra) -> Self {
        IsoWitness { matrix: c.id() }
    }
}

/// Checks invertibility, `Δ_y∘w = (w⊗w)∘Δ_x` and `ε_y∘w = ε_x`.
pub fn iso_verify(x: &FinCoalgebra, y: &FinCoalgebra, w: &IsoWitness) -> CheckReport {
    let mut rep = CheckReport::new("coalgebra isomorphism");
    rep.push(CheckRow::compare("dimension", x.dim(), y.dim()));
    let w = &w.matrix;
    let shape_ok = w.shape() == (y.dim(), x.dim()) && x.field() == y.field() && w.field() == x.field();
    if x.dim() != y.dim() || !shape_ok {
        let detail = if shape_ok { "" } else { "witness shape or field does not match" };
        rep.push(CheckRow::flag("witness", false, detail));
        return rep;
    }
    rep.push(CheckRow::flag("invertible", rank(w) == x.dim(), ""));
    let lhs = y.delta() * w;
    let rhs = &w.kron(w).unwrap() * x.delta();
    rep.push(axiom_row("comultiplication", &lhs, &rhs));
    rep.push(axiom_row("counit", &(y.counit() * w), x.counit()));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::structure::envelope;

    #[test]
    fn point_coalgebras_are_autoenvelopes() {
        for c in [fixtures::k1(), fixtures::fp_point()] {
            let e = envelope(&c).unwrap();
            assert!(iso_verify(&c, &e, &IsoWitness::identity(&c)).passed());
        }
    }

    #[test]
    fn dp2_fails_by_dimension() {
        let c = fixtures::dp2();
        let e = envelope(&c).unwrap();
        let rep = iso_verify(&c, &e, &IsoWitness::identity(&c));
        assert!(!rep.passed());
        let row = rep.row("dimension").unwrap();
        assert_eq!((row.left, row.right), (Some(2), Some(4)));
    }

    #[test]
    fn swap_is_an_automorphism_of_g2_but_not_of_dp2() {
        let g2 = fixtures::g2();
        let swap = Mat::from_i64(g2.field(), &[&[0, 1], &[1, 0]]);
        assert!(iso_verify(&g2, &g2, &IsoWitness { matrix: swap.clone() }).passed());
        let dp2 = fixtures::dp2();
        let rep = iso_verify(&dp2, &dp2, &IsoWitness { matrix: swap });
        assert!(!rep.row("counit").unwrap().passed);
    }

    #[test]
    fn singular_witness_fails() {
        let g2 = fixtures::g2();
        let w = Mat::from_i64(g2.field(), &[&[1, 1], &[0, 0]]);
        assert!(!iso_verify(&g2, &g2, &IsoWitness { matrix: w }).row("invertible").unwrap().passed);
    }
}
