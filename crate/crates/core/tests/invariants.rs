//! Cross-module invariants over generated inputs drawn from the fixture corpus.

use cotor_core::complex::{cofree_resolution_with, Bicomplex, Filtration};
use cotor_core::derived::{
    abrams_weibel_check, cohom, cotensor, cotor, les_check, pseudo_coext, pseudo_coext_with_resolution, LesFunctor,
};
use cotor_core::fixtures;
use cotor_core::linalg::{kernel, rank};
use cotor_core::structure::{Bicomodule, CoalgebraRef, Comod, Ses};
use cotor_core::{FieldSpec, Mat, Scalar};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn coalgebra(which: usize) -> CoalgebraRef {
    match which {
        0 => fixtures::k1(),
        1 => fixtures::dp2(),
        _ => fixtures::g2(),
    }
    .into_ref()
}

/// `k^n` with both coactions through the first group-like basis vector.
fn grouplike(c: &CoalgebraRef, n: usize) -> Bicomodule {
    let g = Mat::from_fn(c.field(), c.dim(), 1, |i, _| Scalar::from_i64(c.field(), (i == 0) as i64));
    Bicomodule::from_grouplike(c, &g, n)
}

/// Split sequence `0 → k^a → k^{a+b} → k^b → 0`.
fn split_ses(c: &CoalgebraRef, a: usize, b: usize) -> Ses {
    let i = Mat::identity(Q, a).vstack(&Mat::zeros(Q, b, a)).unwrap();
    let p = Mat::zeros(Q, b, a).hstack(&Mat::identity(Q, b)).unwrap();
    Ses::new(Comod::Bi(grouplike(c, a)), Comod::Bi(grouplike(c, a + b)), Comod::Bi(grouplike(c, b)), i, p).unwrap()
}

fn object(c: &CoalgebraRef, pick: usize, n: usize) -> Bicomodule {
    if pick == 0 {
        Bicomodule::regular(c)
    } else {
        grouplike(c, n)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cotor_degree_zero_is_cotensor(which in 0usize..3, pm in 0usize..2, pn in 0usize..2, n in 1usize..3) {
        let c = coalgebra(which);
        let m = object(&c, pm, n).right_part();
        let x = object(&c, pn, 1).left_part();
        prop_assert_eq!(cotor(&m, &x, 1).unwrap().at(0), cotensor(&m, &x).unwrap().dim());
    }

    #[test]
    fn pcoext_degree_zero_is_cohom(which in 0usize..3, px in 0usize..2, pm in 0usize..2) {
        let c = coalgebra(which);
        let x = object(&c, px, 1);
        let m = object(&c, pm, 2);
        let h = cohom(&Comod::Bi(x.clone()), &Comod::Bi(m.clone())).unwrap().dim();
        prop_assert_eq!(pseudo_coext(&x, &m, 1).unwrap().at(0), h);
    }

    #[test]
    fn split_sequences_have_exact_les(which in 0usize..3, a in 0usize..3, b in 0usize..3) {
        let c = coalgebra(which);
        let s = split_ses(&c, a, b);
        let n = grouplike(&c, 1).left_part();
        prop_assert!(les_check(&s, &LesFunctor::CotorAgainst(n), 1).unwrap().passed());
        let m = Comod::Bi(grouplike(&c, 1));
        prop_assert!(les_check(&s, &LesFunctor::PcoextAgainst(m), 1).unwrap().passed());
    }

    #[test]
    fn abrams_weibel_on_grouplike_sums(which in 0usize..3, a in 1usize..3, b in 1usize..3) {
        let c = coalgebra(which);
        let rep = abrams_weibel_check(&c, &grouplike(&c, a).right_part(), &grouplike(&c, b).left_part(), 2).unwrap();
        prop_assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn zero_map_bicomplex_pages(dims in proptest::collection::vec(proptest::collection::vec(0usize..3, 3), 1..4)) {
        let b = Bicomplex::zero_maps(Q, dims.clone()).unwrap();
        for f in [Filtration::I, Filtration::II] {
            prop_assert_eq!(b.spectral_page(f, 2).unwrap(), dims.clone());
        }
        for n in 0..dims.len() + 2 {
            let diag: usize = (0..=n).filter(|&p| p < dims.len() && n - p < 3).map(|p| dims[p][n - p]).sum();
            prop_assert_eq!(b.total_homology(n as i64).unwrap(), diag);
        }
    }

    #[test]
    fn kernel_dimension_over_f5(v in proptest::collection::vec(0i64..5, 6)) {
        let f5 = FieldSpec::prime(5).unwrap();
        let m = Mat::from_i64(f5, &[&v[0..3], &v[3..6]]);
        let k = kernel(&m);
        prop_assert_eq!(k.dim() + rank(&m), 3);
        prop_assert!((&m * k.basis()).is_zero());
    }
}

#[test]
fn resolution_independence_with_padded_terms() {
    let c = fixtures::dp2().into_ref();
    let k = fixtures::k_c0(&c);
    let canonical = pseudo_coext(&k, &k, 2).unwrap();
    // pad only at odd stages, with two extra cogenerators
    let padded = cofree_resolution_with(&k, 3, |s, q| {
        let pad = if s % 2 == 1 { 2 } else { 0 };
        Mat::identity(Q, q).vstack(&Mat::zeros(Q, pad, q)).unwrap()
    })
    .unwrap();
    let canonical_res = cotor_core::complex::cofree_resolution(&k, 3).unwrap();
    assert_ne!(padded.cogenerators(), canonical_res.cogenerators());
    assert_eq!(pseudo_coext_with_resolution(&padded, &k, 2).unwrap(), canonical);
}
