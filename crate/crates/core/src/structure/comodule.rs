use super::coalgebra::{axiom_row, expect_shape, same_coalgebra, CoalgebraRef, FinCoalgebra};
use crate::error::{Error, Result};
use crate::linalg::{kernel, FieldSpec, Mat, Subspace};
use crate::report::CheckReport;

/// Right comodule `ρ: M → M ⊗ C`, stored as an `(m·d) × m` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    over: CoalgebraRef,
    rho: Mat,
}

/// Left comodule `λ: N → C ⊗ N`, stored as a `(d·n) × n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule {
    over: CoalgebraRef,
    lambda: Mat,
}

/// `D`-`C` bicomodule: left `D`-coaction and right `C`-coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    left_over: CoalgebraRef,
    right_over: CoalgebraRef,
    lambda: Mat,
    rho: Mat,
}

fn check_field(c: &FinCoalgebra, m: &Mat) -> Result<()> {
    if c.field() != m.field() {
        return Err(Error::FieldMismatch(c.field().to_string(), m.field().to_string()));
    }
    Ok(())
}

fn validate_right(c: &FinCoalgebra, rho: &Mat, report: &mut CheckReport, prefix: &str) {
    let m = rho.cols();
    let im = Mat::identity(c.field(), m);
    let id = c.id();
    let lhs = &rho.kron(&id).unwrap() * rho;
    let rhs = &im.kron(c.delta()).unwrap() * rho;
    report.push(axiom_row(&format!("{prefix}coassociativity"), &lhs, &rhs));
    let counit = &im.kron(c.counit()).unwrap() * rho;
    report.push(axiom_row(&format!("{prefix}counit"), &counit, &im));
}

fn validate_left(c: &FinCoalgebra, lambda: &Mat, report: &mut CheckReport, prefix: &str) {
    let n = lambda.cols();
    let im = Mat::identity(c.field(), n);
    let lhs = &c.id().kron(lambda).unwrap() * lambda;
    let rhs = &c.delta().kron(&im).unwrap() * lambda;
    report.push(axiom_row(&format!("{prefix}coassociativity"), &lhs, &rhs));
    let counit = &c.counit().kron(&im).unwrap() * lambda;
    report.push(axiom_row(&format!("{prefix}counit"), &counit, &im));
}

impl RightComodule {
    pub fn new(over: CoalgebraRef, rho: Mat) -> Result<Self> {
        check_field(&over, &rho)?;
        let m = rho.cols();
        expect_shape("rho", &rho, m * over.dim(), m)?;
        Ok(RightComodule { over, rho })
    }

    /// `C` coacting on itself by `Δ`.
    pub fn regular(c: &CoalgebraRef) -> Self {
        RightComodule { over: c.clone(), rho: c.delta().clone() }
    }

    /// `k^n` with `ρ(v) = v ⊗ g` for a group-like `g` (given as a `d × 1` column).
    pub fn from_grouplike(c: &CoalgebraRef, g: &Mat, n: usize) -> Self {
        let rho = Mat::identity(c.field(), n).kron(g).unwrap();
        RightComodule { over: c.clone(), rho }
    }

    pub fn zero(c: &CoalgebraRef) -> Self {
        RightComodule { over: c.clone(), rho: Mat::zeros(c.field(), 0, 0) }
    }

    pub fn over(&self) -> &CoalgebraRef {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.rho.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.rho.field()
    }

    pub fn rho(&self) -> &Mat {
        &self.rho
    }

    pub fn validate(&self) -> CheckReport {
        let mut r = CheckReport::new("right comodule");
        validate_right(&self.over, &self.rho, &mut r, "");
        r
    }

    /// Whether `f: self → other` commutes with the coactions.
    pub fn is_morphism(&self, f: &Mat, other: &RightComodule) -> bool {
        same_coalgebra(&self.over, &other.over)
            && f.shape() == (other.dim(), self.dim())
            && &other.rho * f == &f.kron(&self.over.id()).unwrap() * &self.rho
    }
}

impl LeftComodule {
    pub fn new(over: CoalgebraRef, lambda: Mat) -> Result<Self> {
        check_field(&over, &lambda)?;
        let n = lambda.cols();
        expect_shape("lambda", &lambda, over.dim() * n, n)?;
        Ok(LeftComodule { over, lambda })
    }

    pub fn regular(c: &CoalgebraRef) -> Self {
        LeftComodule { over: c.clone(), lambda: c.delta().clone() }
    }

    pub fn from_grouplike(c: &CoalgebraRef, g: &Mat, n: usize) -> Self {
        let lambda = g.kron(&Mat::identity(c.field(), n)).unwrap();
        LeftComodule { over: c.clone(), lambda }
    }

    pub fn zero(c: &CoalgebraRef) -> Self {
        LeftComodule { over: c.clone(), lambda: Mat::zeros(c.field(), 0, 0) }
    }

    pub fn over(&self) -> &CoalgebraRef {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.lambda.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.lambda.field()
    }

    pub fn lambda(&self) -> &Mat {
        &self.lambda
    }

    pub fn validate(&self) -> CheckReport {
        let mut r = CheckReport::new("left comodule");
        validate_left(&self.over, &self.lambda, &mut r, "");
        r
    }

    pub fn is_morphism(&self, f: &Mat, other: &LeftComodule) -> bool {
        same_coalgebra(&self.over, &other.over)
            && f.shape() == (other.dim(), self.dim())
            && &other.lambda * f == &self.over.id().kron(f).unwrap() * &self.lambda
    }
}

impl Bicomodule {
    pub fn new(left_over: CoalgebraRef, right_over: CoalgebraRef, lambda: Mat, rho: Mat) -> Result<Self> {
        check_field(&left_over, &lambda)?;
        check_field(&right_over, &rho)?;
        let m = rho.cols();
        expect_shape("rho", &rho, m * right_over.dim(), m)?;
        expect_shape("lambda", &lambda, left_over.dim() * m, m)?;
        Ok(Bicomodule { left_over, right_over, lambda, rho })
    }

    /// `C` as a `C`-`C` bicomodule through `Δ` on both sides.
    pub fn regular(c: &CoalgebraRef) -> Self {
        Bicomodule { left_over: c.clone(), right_over: c.clone(), lambda: c.delta().clone(), rho: c.delta().clone() }
    }

    /// `k^n` with both coactions through the group-like `g`.
    pub fn from_grouplike(c: &CoalgebraRef, g: &Mat, n: usize) -> Self {
        let id = Mat::identity(c.field(), n);
        Bicomodule {
            left_over: c.clone(),
            right_over: c.clone(),
            lambda: g.kron(&id).unwrap(),
            rho: id.kron(g).unwrap(),
        }
    }

    pub fn zero(c: &CoalgebraRef) -> Self {
        let z = Mat::zeros(c.field(), 0, 0);
        Bicomodule { left_over: c.clone(), right_over: c.clone(), lambda: z.clone(), rho: z }
    }

    pub fn left_over(&self) -> &CoalgebraRef {
        &self.left_over
    }

    pub fn right_over(&self) -> &CoalgebraRef {
        &self.right_over
    }

    /// Both sides over the same coalgebra.
    pub fn is_balanced(&self) -> bool {
        same_coalgebra(&self.left_over, &self.right_over)
    }

    pub fn dim(&self) -> usize {
        self.rho.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.rho.field()
    }

    pub fn lambda(&self) -> &Mat {
        &self.lambda
    }

    pub fn rho(&self) -> &Mat {
        &self.rho
    }

    pub fn right_part(&self) -> RightComodule {
        RightComodule { over: self.right_over.clone(), rho: self.rho.clone() }
    }

    pub fn left_part(&self) -> LeftComodule {
        LeftComodule { over: self.left_over.clone(), lambda: self.lambda.clone() }
    }

    /// `(λ ⊗ 1)∘ρ : M → D ⊗ M ⊗ C`, equal to `(1 ⊗ ρ)∘λ` on a valid bicomodule.
    pub fn two_sided_coaction(&self) -> Mat {
        &self.lambda.kron(&self.right_over.id()).unwrap() * &self.rho
    }

    pub fn validate(&self) -> CheckReport {
        let mut r = CheckReport::new("bicomodule");
        validate_left(&self.left_over, &self.lambda, &mut r, "left ");
        validate_right(&self.right_over, &self.rho, &mut r, "right ");
        let m = self.dim();
        let lhs = self.two_sided_coaction();
        let rhs = &self.left_over.id().kron(&self.rho).unwrap() * &self.lambda;
        debug_assert_eq!(lhs.rows(), self.left_over.dim() * m * self.right_over.dim());
        r.push(axiom_row("compatibility", &lhs, &rhs));
        r
    }

    pub fn is_morphism(&self, f: &Mat, other: &Bicomodule) -> bool {
        self.right_part().is_morphism(f, &other.right_part()) && self.left_part().is_morphism(f, &other.left_part())
    }
}

/// Any of the three comodule kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comod {
    Right(RightComodule),
    Left(LeftComodule),
    Bi(Bicomodule),
}

impl Comod {
    pub fn dim(&self) -> usize {
        match self {
            Comod::Right(m) => m.dim(),
            Comod::Left(m) => m.dim(),
            Comod::Bi(m) => m.dim(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Comod::Right(m) => m.field(),
            Comod::Left(m) => m.field(),
            Comod::Bi(m) => m.field(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Comod::Right(_) => "right comodule",
            Comod::Left(_) => "left comodule",
            Comod::Bi(_) => "bicomodule",
        }
    }

    pub fn validate(&self) -> CheckReport {
        match self {
            Comod::Right(m) => m.validate(),
            Comod::Left(m) => m.validate(),
            Comod::Bi(m) => m.validate(),
        }
    }

    pub fn is_morphism(&self, f: &Mat, other: &Comod) -> bool {
        match (self, other) {
            (Comod::Right(a), Comod::Right(b)) => a.is_morphism(f, b),
            (Comod::Left(a), Comod::Left(b)) => a.is_morphism(f, b),
            (Comod::Bi(a), Comod::Bi(b)) => a.is_morphism(f, b),
            _ => false,
        }
    }

    /// Right coaction, when the object has one.
    pub fn as_right(&self) -> Option<RightComodule> {
        match self {
            Comod::Right(m) => Some(m.clone()),
            Comod::Bi(m) => Some(m.right_part()),
            Comod::Left(_) => None,
        }
    }

    pub fn as_left(&self) -> Option<LeftComodule> {
        match self {
            Comod::Left(m) => Some(m.clone()),
            Comod::Bi(m) => Some(m.left_part()),
            Comod::Right(_) => None,
        }
    }

    pub(crate) fn require_valid(&self, what: &str) -> Result<()> {
        match self.validate().failures().next() {
            Some(r) => Err(Error::MalformedInput(format!("{what}: {} violates {}", self.kind(), r.label))),
            None => Ok(()),
        }
    }
}

/// Linear constraints on `φ: M → N` (flattened row-major, `φ[i][j]` at `i·m + j`)
/// expressing `coact_N ∘ φ = (φ ⊗ 1)∘coact_M` (right) or `(1 ⊗ φ)∘coact_M` (left).
fn colinearity_constraints(target: &Mat, source: &Mat, n: usize, m: usize, d: usize, right: bool) -> Mat {
    let field = target.field();
    let rows = n * d * m;
    let mut a = Mat::zeros(field, rows, n * m);
    let out_index = |t: usize, c: usize, jj: usize| {
        let pos = if right { t * d + c } else { c * n + t };
        pos * m + jj
    };
    for i in 0..n {
        for j in 0..m {
            let col = i * m + j;
            // coact_N ∘ E_ij: column j of the result is column i of coact_N
            for t in 0..n {
                for c in 0..d {
                    let src_row = if right { t * d + c } else { c * n + t };
                    let v = target.get(src_row, i);
                    if !v.is_zero() {
                        a.add_at(out_index(t, c, j), col, v);
                    }
                }
            }
            // (E_ij ⊗ 1)∘coact_M: row (i, c) picks row (j, c) of coact_M
            for c in 0..d {
                let src_row = if right { j * d + c } else { c * m + j };
                for jj in 0..m {
                    let v = source.get(src_row, jj);
                    if !v.is_zero() {
                        a.add_at(out_index(i, c, jj), col, &-v);
                    }
                }
            }
        }
    }
    a
}

/// Colinear maps `M → N` as a subspace of the `n·m`-dimensional matrix space.
pub fn right_hom_space(m: &RightComodule, n: &RightComodule) -> Result<Subspace> {
    if !same_coalgebra(&m.over, &n.over) {
        return Err(Error::MixedCoalgebras);
    }
    let a = colinearity_constraints(&n.rho, &m.rho, n.dim(), m.dim(), m.over.dim(), true);
    Ok(kernel(&a))
}

pub fn left_hom_space(m: &LeftComodule, n: &LeftComodule) -> Result<Subspace> {
    if !same_coalgebra(&m.over, &n.over) {
        return Err(Error::MixedCoalgebras);
    }
    let a = colinearity_constraints(&n.lambda, &m.lambda, n.dim(), m.dim(), m.over.dim(), false);
    Ok(kernel(&a))
}

pub fn bicomodule_hom_space(m: &Bicomodule, n: &Bicomodule) -> Result<Subspace> {
    if !same_coalgebra(&m.left_over, &n.left_over) || !same_coalgebra(&m.right_over, &n.right_over) {
        return Err(Error::MixedCoalgebras);
    }
    let r = colinearity_constraints(&n.rho, &m.rho, n.dim(), m.dim(), m.right_over.dim(), true);
    let l = colinearity_constraints(&n.lambda, &m.lambda, n.dim(), m.dim(), m.left_over.dim(), false);
    Ok(kernel(&r.vstack(&l)?))
}

/// `Hom^C(M, N)` for any matching pair of comodule kinds.
pub fn comodule_hom_space(m: &Comod, n: &Comod) -> Result<Subspace> {
    match (m, n) {
        (Comod::Right(a), Comod::Right(b)) => right_hom_space(a, b),
        (Comod::Left(a), Comod::Left(b)) => left_hom_space(a, b),
        (Comod::Bi(a), Comod::Bi(b)) => bicomodule_hom_space(a, b),
        _ => Err(Error::CatalogMismatch(format!("hom from {} to {}", m.kind(), n.kind()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn regular_comodules_validate() {
        let c = fixtures::dp2().into_ref();
        assert!(RightComodule::regular(&c).validate().passed());
        assert!(LeftComodule::regular(&c).validate().passed());
        assert!(Bicomodule::regular(&c).validate().passed());
        let mc2 = fixtures::mc2().into_ref();
        assert!(Bicomodule::regular(&mc2).validate().passed());
        assert!(fixtures::simple_right(&mc2).validate().passed());
        assert!(fixtures::simple_left(&mc2).validate().passed());
    }

    #[test]
    fn trivial_comodule_through_grouplike() {
        let c = fixtures::dp2().into_ref();
        let k = fixtures::k_c0(&c);
        assert!(k.validate().passed());
        // ρ(1) = 1 ⊗ c1 breaks the counit law
        let q = c.field();
        let bad = RightComodule::new(c.clone(), Mat::from_i64(q, &[&[0], &[1]])).unwrap();
        let rep = bad.validate();
        assert!(!rep.row("counit").unwrap().passed);
    }

    #[test]
    fn incompatible_bicomodule_rejected() {
        // left and right simple coactions of MC2 do not commute on S
        let mc2 = fixtures::mc2().into_ref();
        let s_r = fixtures::simple_right(&mc2);
        let s_l = fixtures::simple_left(&mc2);
        let b = Bicomodule::new(mc2.clone(), mc2.clone(), s_l.lambda().clone(), s_r.rho().clone()).unwrap();
        let rep = b.validate();
        assert!(!rep.passed());
        assert!(!rep.row("compatibility").unwrap().passed);
    }

    #[test]
    fn hom_space_dims() {
        let k1 = fixtures::k1().into_ref();
        let q = k1.field();
        let g = Mat::identity(q, 1);
        let m = RightComodule::from_grouplike(&k1, &g, 2);
        let n = RightComodule::from_grouplike(&k1, &g, 3);
        assert_eq!(right_hom_space(&m, &n).unwrap().dim(), 6);

        let c = fixtures::dp2().into_ref();
        let reg = RightComodule::regular(&c);
        let k = fixtures::k_c0(&c).right_part();
        assert_eq!(right_hom_space(&k, &reg).unwrap().dim(), 1);
        assert_eq!(right_hom_space(&reg, &reg).unwrap().dim(), 2);
    }

    #[test]
    fn hom_space_members_are_colinear() {
        let c = fixtures::dp2().into_ref();
        let reg = RightComodule::regular(&c);
        let hom = right_hom_space(&reg, &reg).unwrap();
        for j in 0..hom.dim() {
            let phi = Mat::unflatten(&hom.basis().select_columns(&[j]), 2, 2);
            assert!(reg.is_morphism(&phi, &reg));
        }
    }

    #[test]
    fn hom_of_c_into_itself_has_dim_d() {
        for c in [fixtures::k1(), fixtures::dp2(), fixtures::mc2(), fixtures::g2()] {
            let d = c.dim();
            let c = c.into_ref();
            let reg = RightComodule::regular(&c);
            assert_eq!(right_hom_space(&reg, &reg).unwrap().dim(), d);
        }
    }

    #[test]
    fn mixed_coalgebras_rejected() {
        let a = RightComodule::regular(&fixtures::dp2().into_ref());
        let b = RightComodule::regular(&fixtures::g2().into_ref());
        assert_eq!(right_hom_space(&a, &b), Err(Error::MixedCoalgebras));
    }
}
