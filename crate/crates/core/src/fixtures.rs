//! Bundled example objects over `ℚ` and `F_5`.

use crate::complex::{bifunctor_bicomplex, Bicomplex, BifunctorTag, Direction, ObjectComplex};
use crate::derived::{FlippingResolution, PivotSpec};
use crate::linalg::{FieldSpec, Mat, Scalar};
use crate::structure::{Bicomodule, CoalgebraRef, Comod, FinAlgebra, FinCoalgebra, LeftComodule, RightComodule, Ses};

const Q: FieldSpec = FieldSpec::Rationals;

/// Prime used by [`fp_point`].
pub const FP_PRIME: u64 = 5;

fn point(f: FieldSpec) -> FinCoalgebra {
    FinCoalgebra::new(Mat::identity(f, 1), Mat::identity(f, 1)).unwrap()
}

/// The field as a 1-dimensional coalgebra over `ℚ`.
pub fn k1() -> FinCoalgebra {
    point(Q)
}

/// The 1-dimensional coalgebra over `F_5`.
pub fn fp_point() -> FinCoalgebra {
    point(FieldSpec::prime(FP_PRIME).unwrap())
}

/// Divided powers truncated at degree 1: `Δc0 = c0⊗c0`, `Δc1 = c0⊗c1 + c1⊗c0`.
pub fn dp2() -> FinCoalgebra {
    let delta = Mat::from_i64(Q, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]);
    FinCoalgebra::new(delta, Mat::from_i64(Q, &[&[1, 0]])).unwrap()
}

/// 2×2 matrix coalgebra, `e_ij` at `2i + j`, `Δe_ij = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`.
pub fn mc2() -> FinCoalgebra {
    let mut delta = Mat::zeros(Q, 16, 4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                delta.set((2 * i + k) * 4 + (2 * k + j), 2 * i + j, Scalar::one(Q));
            }
        }
    }
    FinCoalgebra::new(delta, Mat::from_i64(Q, &[&[1, 0, 0, 1]])).unwrap()
}

/// Group coalgebra of `ℤ/2`: two group-likes.
pub fn g2() -> FinCoalgebra {
    let delta = Mat::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
    FinCoalgebra::new(delta, Mat::from_i64(Q, &[&[1, 1]])).unwrap()
}

pub fn field_algebra(f: FieldSpec) -> FinAlgebra {
    FinAlgebra::new(Mat::identity(f, 1), Mat::identity(f, 1)).unwrap()
}

/// `ℚ[x]/(x²)` on the basis `1, x`.
pub fn dual_numbers() -> FinAlgebra {
    let mul = Mat::from_i64(Q, &[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
    FinAlgebra::new(mul, Mat::from_i64(Q, &[&[1], &[0]])).unwrap()
}

/// `M₂(ℚ)` on matrix units `E_ij` at `2i + j`.
pub fn m2() -> FinAlgebra {
    let mut mul = Mat::zeros(Q, 4, 16);
    for i in 0..2 {
        for k in 0..2 {
            for j in 0..2 {
                mul.set(2 * i + j, (2 * i + k) * 4 + (2 * k + j), Scalar::one(Q));
            }
        }
    }
    FinAlgebra::new(mul, Mat::from_i64(Q, &[&[1], &[0], &[0], &[1]])).unwrap()
}

fn basis_column(f: FieldSpec, d: usize, idx: usize) -> Mat {
    Mat::from_fn(f, d, 1, |i, _| Scalar::from_i64(f, (i == idx) as i64))
}

/// `k` with both coactions through the group-like basis vector `e_idx`.
pub fn k_grouplike(c: &CoalgebraRef, idx: usize) -> Bicomodule {
    Bicomodule::from_grouplike(c, &basis_column(c.field(), c.dim(), idx), 1)
}

/// `k_{c0}`: the trivial bicomodule through the first basis vector.
pub fn k_c0(c: &CoalgebraRef) -> Bicomodule {
    k_grouplike(c, 0)
}

/// `k^n` over the 1-dimensional coalgebra `c`.
pub fn trivial(c: &CoalgebraRef, n: usize) -> Bicomodule {
    Bicomodule::from_grouplike(c, &Mat::identity(c.field(), 1), n)
}

/// Simple right comodule of the matrix coalgebra: `ρ(s_i) = Σ_j s_j ⊗ e_ji`.
pub fn simple_right(mc2: &CoalgebraRef) -> RightComodule {
    let mut rho = Mat::zeros(Q, 8, 2);
    for i in 0..2 {
        for j in 0..2 {
            rho.set(j * 4 + (2 * j + i), i, Scalar::one(Q));
        }
    }
    RightComodule::new(mc2.clone(), rho).unwrap()
}

/// Simple left comodule of the matrix coalgebra: `λ(s_i) = Σ_j e_ij ⊗ s_j`.
pub fn simple_left(mc2: &CoalgebraRef) -> LeftComodule {
    let mut lambda = Mat::zeros(Q, 8, 2);
    for i in 0..2 {
        for j in 0..2 {
            lambda.set((2 * i + j) * 2 + j, i, Scalar::one(Q));
        }
    }
    LeftComodule::new(mc2.clone(), lambda).unwrap()
}

/// `0 → k_{c0} → DP2 → k_{c0} → 0` as bicomodules: `1 ↦ c0` and `c1 ↦ 1`.
pub fn socle_ses_over(c: &CoalgebraRef) -> Ses {
    let k = Comod::Bi(k_c0(c));
    let reg = Comod::Bi(Bicomodule::regular(c));
    let i = Mat::from_i64(Q, &[&[1], &[0]]);
    let p = Mat::from_i64(Q, &[&[0, 1]]);
    Ses::new(k.clone(), reg, k, i, p).unwrap()
}

pub fn socle_ses() -> Ses {
    socle_ses_over(&dp2().into_ref())
}

/// `0 → k → k² → k → 0` over `K1`.
pub fn k1_ses_over(c: &CoalgebraRef) -> Ses {
    let i = Mat::from_i64(Q, &[&[1], &[0]]);
    let p = Mat::from_i64(Q, &[&[0, 1]]);
    Ses::new(Comod::Bi(trivial(c, 1)), Comod::Bi(trivial(c, 2)), Comod::Bi(trivial(c, 1)), i, p).unwrap()
}

pub fn k1_ses() -> Ses {
    k1_ses_over(&k1().into_ref())
}

/// `A = B = C = k` over `K1` with the single cohom/cotensor pivot `⟨k, k⟩`.
pub fn k1_flipping() -> (FlippingResolution, Comod, Bicomodule) {
    let c = k1().into_ref();
    let k = trivial(&c, 1);
    let kc = Comod::Bi(k.clone());
    let pivot = PivotSpec {
        f: BifunctorTag::Cohom,
        g: BifunctorTag::Cotensor,
        p: kc.clone(),
        i: kc.clone(),
        tests: vec![kc.clone()],
        witnesses: vec![Mat::identity(Q, 1)],
        morphisms: vec![(0, 0, Mat::from_i64(Q, &[&[3]]))],
    };
    let res = FlippingResolution {
        resolved: kc.clone(),
        pivots: vec![pivot],
        maps: vec![],
        augmentation: Mat::identity(Q, 1),
    };
    (res, kc, k)
}

/// Bundled bicomplexes: zero maps, an acyclic row, a 2×2 square with nonzero
/// anticommuting maps, and the plain-tensor grid of `0→k→k→0` against `k`.
pub fn bicomplexes() -> Vec<(&'static str, Bicomplex)> {
    let one = Mat::identity(Q, 1);
    let zero = Bicomplex::zero_maps(Q, vec![vec![1, 2], vec![3, 1]]).unwrap();
    let acyclic = Bicomplex::new(Q, vec![vec![1], vec![1]], vec![vec![one.clone()]], vec![vec![], vec![]]).unwrap();
    let square = Bicomplex::new(
        Q,
        vec![vec![1, 1], vec![1, 1]],
        vec![vec![one.clone(), one.clone()]],
        vec![vec![one.clone()], vec![one.scale_i64(-1)]],
    )
    .unwrap();
    let c = k1().into_ref();
    let k = Comod::Bi(trivial(&c, 1));
    let p = ObjectComplex::new(vec![k.clone(), k.clone()], vec![one], Direction::Ascending).unwrap();
    let tensor = bifunctor_bicomplex(&p, &ObjectComplex::single(k), BifunctorTag::PlainTensor).unwrap();
    vec![("zero-grid", zero), ("acyclic-row", acyclic), ("tensor-square", square), ("k1-plain-tensor", tensor)]
}
