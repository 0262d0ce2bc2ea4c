use std::f64::consts::{PI, SQRT_2};

use proptest::prelude::*;
use qwsed_core::families::{self, FamilySpec};
use qwsed_core::reproduce::corpus;
use qwsed_core::sedentary::{
    cartesian_classify, classify_vertex, cor18_tests, double_classify, half_case_parity, kronecker_subset, numeric_scan,
    pendant_group, projection_heavy, CertificateKind, Classifier, ClassifyOptions, Evidence, Flag, ScanOptions, Status,
    Verdict,
};
use qwsed_core::spectral::eigendecompose;
use qwsed_core::{Graph, GraphError, SedentaryError};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn verdicts(g: &Graph) -> Vec<Verdict> {
    let s = eigendecompose(g).unwrap();
    Classifier::new(g, &s, ClassifyOptions::without_scan()).unwrap().classify_all().unwrap()
}

fn subdivided_star(m: usize) -> Graph {
    FamilySpec::SubdividedStar { m }.build().unwrap()
}

#[test]
fn complete_graph_twins() {
    for n in 3..=7 {
        for v in verdicts(&families::complete(n).unwrap()) {
            assert_eq!(v.kind(), CertificateKind::TwinSetLarge);
            assert!((v.lower_bound().unwrap() - (1.0 - 2.0 / n as f64)).abs() <= 1e-9);
        }
    }
}

#[test]
fn subdivided_star_routes() {
    let leaf_kind = |m: usize| verdicts(&subdivided_star(m))[m + 1].kind();
    assert_eq!(leaf_kind(2), CertificateKind::LinearIndependent);
    assert_eq!(leaf_kind(3), CertificateKind::KroneckerSubset);
    assert_eq!(leaf_kind(8), CertificateKind::EqualTwoAdic);
    let centre = &verdicts(&subdivided_star(4))[0];
    assert_eq!(centre.kind(), CertificateKind::SinglePositive);
    assert_eq!(verdicts(&subdivided_star(4))[1].kind(), CertificateKind::BipartiteZeroFree);
}

#[test]
fn kronecker_leaf_of_g3_has_a_witness() {
    let g = subdivided_star(3);
    let s = eigendecompose(&g).unwrap();
    let v = classify_vertex(&g, &s, 4, &ClassifyOptions::without_scan()).unwrap();
    let Evidence::Subset(cert) = &v.certificate.evidence else { panic!("expected subset evidence") };
    assert!(cert.alpha_mass >= 0.25);
    let t = v.witness_time().expect("singleton subset gives a witness");
    assert!(s.walk_diagonal(4, t).unwrap().norm() <= 1e-9);
}

#[test]
fn direct_certificate_calls() {
    let g = FamilySpec::WeightedEndPath { n: 5, alpha: 2.0 }.build().unwrap();
    let s = eigendecompose(&g).unwrap();
    let v = projection_heavy(&s, &s.support(0).unwrap(), 1e-8).unwrap();
    assert!((v.lower_bound().unwrap() - 1.0 / 3.0).abs() <= 1e-9);

    let star = FamilySpec::WeightedStar { weights: vec![1.0, 1.0, 3.0] }.build().unwrap();
    let s = eigendecompose(&star).unwrap();
    let found = pendant_group(&star, &s, 1e-8).unwrap();
    assert!(found.iter().all(Verdict::is_sedentary));
    assert_eq!(found.iter().map(|v| v.vertex).collect::<Vec<_>>(), vec![1, 2]);

    let p4 = families::path(4).unwrap();
    let s = eigendecompose(&p4).unwrap();
    assert_eq!(pendant_group(&p4, &s, 1e-8), Err(SedentaryError::NoPendantGroup));
}

#[test]
fn certificate_preconditions() {
    let opts = ClassifyOptions::default();
    let k3 = families::complete(3).unwrap();
    let s = eigendecompose(&k3).unwrap();
    let p = s.support(0).unwrap();
    assert!(matches!(cor18_tests(&s, &p, &opts), Err(SedentaryError::PreconditionViolated(_))));
    assert!(matches!(half_case_parity(&s, &p, 0, &opts), Err(SedentaryError::NotHalfCase { .. })));

    let p15 = families::path(15).unwrap();
    let s = eigendecompose(&p15).unwrap();
    let p = s.support(0).unwrap();
    assert!(matches!(kronecker_subset(&s, &p, &opts), Err(SedentaryError::SupportTooLarge { .. })));
}

#[test]
fn classifier_rejects_bad_input() {
    let split = Graph::unweighted(4, &[(0, 1), (2, 3)]).unwrap();
    let s = eigendecompose(&split).unwrap();
    assert!(matches!(
        Classifier::new(&split, &s, ClassifyOptions::default()),
        Err(SedentaryError::Graph(GraphError::Disconnected))
    ));
    let p3 = families::path(3).unwrap();
    let s = eigendecompose(&p3).unwrap();
    assert_eq!(
        classify_vertex(&p3, &s, 5, &ClassifyOptions::default()),
        Err(SedentaryError::VertexOutOfRange { u: 5, n: 3 })
    );
    let v = classify_vertex(&p3, &s, 0, &ClassifyOptions::default()).unwrap();
    assert_eq!(double_classify(&p3, &s, 0, &v), Err(SedentaryError::BipartiteInput));
}

#[test]
fn half_case_witnesses() {
    let cp = FamilySpec::CocktailParty { m: 4 }.build().unwrap();
    let v = &verdicts(&cp)[0];
    assert_eq!(v.kind(), CertificateKind::HalfCaseParity);
    assert!(v.certificate.has_flag(Flag::HalfCaseBoundary));
    assert!((v.witness_time().unwrap() - PI / 2.0).abs() <= 1e-9);

    let kne = FamilySpec::CompleteMinusEdge { n: 3 }.build().unwrap();
    let v = &verdicts(&kne)[0];
    assert!(v.is_not_sedentary());
    assert!((v.witness_time().unwrap() - PI / SQRT_2).abs() <= 1e-6);
}

#[test]
fn odd_cocktail_party_bound_is_observed() {
    let cp = FamilySpec::CocktailParty { m: 3 }.build().unwrap();
    let s = eigendecompose(&cp).unwrap();
    let v = classify_vertex(&cp, &s, 0, &ClassifyOptions::default()).unwrap();
    assert!((v.lower_bound().unwrap() - 1.0 / 3.0).abs() <= 1e-6);
    let (a, b) = double_classify(&cp, &s, 0, &v).unwrap();
    assert_eq!((a.vertex, b.vertex), (0, 6));
    assert!(a.is_sedentary() && b.is_sedentary());
}

#[test]
fn cartesian_transfer() {
    let k3 = verdicts(&families::complete(3).unwrap());
    let p2 = verdicts(&families::path(2).unwrap());
    let v = cartesian_classify(&k3[1], &k3[2], 3);
    assert_eq!(v.vertex, 5);
    assert!((v.lower_bound().unwrap() - 1.0 / 9.0).abs() <= 1e-12);
    assert!(cartesian_classify(&k3[0], &p2[1], 2).is_not_sedentary());
}

#[test]
fn verdict_json_shape() {
    let v = &verdicts(&families::complete(4).unwrap())[0];
    let doc: serde_json::Value = serde_json::from_str(&v.to_json()).unwrap();
    assert_eq!(doc["status"], "sedentary");
    assert_eq!(doc["certificate"], "twin_set_large");
    assert!(matches!(v.status, Status::Sedentary { .. }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn verdicts_agree_with_the_walk(seed in any::<u64>(), weighted in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = corpus::random_connected(&mut rng, 2..=7, 0.35, weighted);
        let s = eigendecompose(&g).unwrap();
        let c = Classifier::new(&g, &s, ClassifyOptions::without_scan()).unwrap();
        for u in 0..g.n() {
            let v = c.classify(u).unwrap();
            if let Some(lb) = v.lower_bound() {
                let r = numeric_scan(&s, u, &ScanOptions::default()).unwrap();
                prop_assert!(r.global_min >= lb - 1e-6, "vertex {u}: scan {} < bound {lb}", r.global_min);
            }
            if let Some(t) = v.witness_time() {
                prop_assert!(s.walk_diagonal(u, t).unwrap().norm() <= 1e-9);
            }
            let fired = c.all_firings(u).unwrap();
            prop_assert!(!(fired.iter().any(Verdict::is_sedentary) && fired.iter().any(Verdict::is_not_sedentary)));
        }
    }
}
