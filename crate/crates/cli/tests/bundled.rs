//! The shipped session bundles must describe exactly the core fixtures.

use cotor_cli::bundled::{bundle, BUNDLE_NAMES};
use cotor_cli::session::{
    mat_doc, AlgebraDoc, BiDoc, BimoduleDoc, CoalgebraDoc, Keyed, LeftDoc, MorphismDoc, PivotDoc, ResolutionDoc,
    RightDoc, SesDoc, SessionDoc, WitnessDoc,
};
use cotor_core::fixtures;
use cotor_core::structure::{Bimodule, FinAlgebra, FinCoalgebra};
use cotor_core::{Bicomodule, LeftComodule, RightComodule};

fn empty(field: &str) -> SessionDoc {
    SessionDoc {
        field: field.into(),
        coalgebras: Keyed::default(),
        algebras: Keyed::default(),
        right_comodules: Keyed::default(),
        left_comodules: Keyed::default(),
        bicomodules: Keyed::default(),
        bimodules: Keyed::default(),
        sequences: Keyed::default(),
        pivots: Keyed::default(),
        resolutions: Keyed::default(),
        witnesses: Keyed::default(),
    }
}

fn coalg(c: &FinCoalgebra) -> CoalgebraDoc {
    CoalgebraDoc { dim: c.dim(), delta: mat_doc(c.delta()), counit: mat_doc(c.counit()).remove(0) }
}

fn alg(a: &FinAlgebra) -> AlgebraDoc {
    AlgebraDoc { dim: a.dim(), mul: mat_doc(a.mul()), unit: mat_doc(&a.unit().transpose()).remove(0) }
}

fn bi(over: &str, m: &Bicomodule) -> BiDoc {
    BiDoc {
        left_over: over.into(),
        right_over: over.into(),
        dim: m.dim(),
        lambda: mat_doc(m.lambda()),
        rho: mat_doc(m.rho()),
    }
}

fn right(over: &str, m: &RightComodule) -> RightDoc {
    RightDoc { over: over.into(), dim: m.dim(), rho: mat_doc(m.rho()) }
}

fn left(over: &str, m: &LeftComodule) -> LeftDoc {
    LeftDoc { over: over.into(), dim: m.dim(), lambda: mat_doc(m.lambda()) }
}

fn bimod(over: &str, b: &Bimodule) -> BimoduleDoc {
    BimoduleDoc { over: over.into(), dim: b.dim(), left_act: mat_doc(b.left_act()), right_act: mat_doc(b.right_act()) }
}

fn identity_witness(name: &str, c: &FinCoalgebra) -> WitnessDoc {
    WitnessDoc { coalgebra: name.into(), matrix: mat_doc(&c.id()) }
}

fn expected(name: &str) -> SessionDoc {
    match name {
        "K1" => {
            let c = fixtures::k1().into_ref();
            let mut d = empty("Q");
            d.coalgebras.0.push(("K1".into(), coalg(&c)));
            for (k, n) in [("k", 1), ("M", 2), ("N", 5)] {
                d.bicomodules.0.push((k.into(), bi("K1", &fixtures::trivial(&c, n))));
            }
            let ses = fixtures::k1_ses_over(&c);
            d.sequences.0.push((
                "ses".into(),
                SesDoc { m: "k".into(), n: "M".into(), o: "k".into(), i: mat_doc(&ses.i), p: mat_doc(&ses.p) },
            ));
            let (res, _, _) = fixtures::k1_flipping();
            let pv = &res.pivots[0];
            d.pivots.0.push((
                "pivot".into(),
                PivotDoc {
                    f: pv.f.to_string(),
                    g: pv.g.to_string(),
                    p: "k".into(),
                    i: "k".into(),
                    tests: vec!["k".into()],
                    witnesses: pv.witnesses.iter().map(mat_doc).collect(),
                    morphisms: pv
                        .morphisms
                        .iter()
                        .map(|(from, to, a)| MorphismDoc { from: *from, to: *to, map: mat_doc(a) })
                        .collect(),
                },
            ));
            d.resolutions.0.push((
                "flip".into(),
                ResolutionDoc {
                    resolved: "k".into(),
                    pivots: vec!["pivot".into()],
                    maps: vec![],
                    augmentation: mat_doc(&res.augmentation),
                },
            ));
            d.witnesses.0.push(("id".into(), identity_witness("K1", &c)));
            d
        }
        "Fp" => {
            let c = fixtures::fp_point().into_ref();
            let mut d = empty(&c.field().to_string());
            d.coalgebras.0.push(("Fp".into(), coalg(&c)));
            d.bicomodules.0.push(("k".into(), bi("Fp", &fixtures::k_c0(&c))));
            d.witnesses.0.push(("id".into(), identity_witness("Fp", &c)));
            d
        }
        "DP2" => {
            let c = fixtures::dp2().into_ref();
            let mut d = empty("Q");
            d.coalgebras.0.push(("DP2".into(), coalg(&c)));
            d.bicomodules.0.push(("k".into(), bi("DP2", &fixtures::k_c0(&c))));
            d.bicomodules.0.push(("C".into(), bi("DP2", &Bicomodule::regular(&c))));
            let ses = fixtures::socle_ses_over(&c);
            d.sequences.0.push((
                "socle".into(),
                SesDoc { m: "k".into(), n: "C".into(), o: "k".into(), i: mat_doc(&ses.i), p: mat_doc(&ses.p) },
            ));
            d
        }
        "MC2" => {
            let c = fixtures::mc2().into_ref();
            let mut d = empty("Q");
            d.coalgebras.0.push(("MC2".into(), coalg(&c)));
            d.right_comodules.0.push(("Sr".into(), right("MC2", &fixtures::simple_right(&c))));
            d.left_comodules.0.push(("Sl".into(), left("MC2", &fixtures::simple_left(&c))));
            d.bicomodules.0.push(("C".into(), bi("MC2", &Bicomodule::regular(&c))));
            d
        }
        "G2" => {
            let c = fixtures::g2().into_ref();
            let mut d = empty("Q");
            d.coalgebras.0.push(("G2".into(), coalg(&c)));
            d.bicomodules.0.push(("k".into(), bi("G2", &fixtures::k_grouplike(&c, 0))));
            d.bicomodules.0.push(("k1".into(), bi("G2", &fixtures::k_grouplike(&c, 1))));
            d.bicomodules.0.push(("C".into(), bi("G2", &Bicomodule::regular(&c))));
            d
        }
        "algebras" => {
            let mut d = empty("Q");
            let q = cotor_core::FieldSpec::Rationals;
            for (k, a) in
                [("k", fixtures::field_algebra(q)), ("dual", fixtures::dual_numbers()), ("M2", fixtures::m2())]
            {
                d.algebras.0.push((k.into(), alg(&a)));
                d.bimodules.0.push((format!("{k}-reg"), bimod(k, &Bimodule::regular(&a))));
            }
            d
        }
        other => panic!("no expectation for bundle {other}"),
    }
}

#[test]
fn bundles_match_core_fixtures() {
    for name in BUNDLE_NAMES {
        let s = bundle(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(s.to_doc(), expected(name), "bundle {name}");
    }
}

#[test]
fn bundles_round_trip() {
    for name in BUNDLE_NAMES {
        let s = bundle(name).unwrap();
        let again = cotor_cli::session::Session::from_json(&s.to_json()).unwrap();
        assert_eq!(again.to_doc(), s.to_doc());
    }
}

/// Rewrites the shipped bundles from the core fixtures.
#[test]
#[ignore]
fn regenerate_bundles() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in BUNDLE_NAMES {
        let json = cotor_cli::session::doc_json(&expected(name));
        std::fs::write(dir.join(format!("{}.json", name.to_lowercase())), json).unwrap();
    }
}
