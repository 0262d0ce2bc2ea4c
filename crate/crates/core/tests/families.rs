use qwsed_core::families::builtin_corpus;
use qwsed_core::sedentary::{Classifier, ClassifyOptions};
use qwsed_core::spectral::eigendecompose;

#[test]
fn corpus_matches_expectations() {
    let mut failures = Vec::new();
    for spec in builtin_corpus() {
        let g = spec.build().unwrap();
        let s = eigendecompose(&g).unwrap();
        let exp = spec.expected().unwrap();
        if let Err(e) = exp.check_spectrum(&s, 1e-8) {
            failures.push(format!("{spec}: {e}"));
        }
        let c = Classifier::new(&g, &s, ClassifyOptions::default()).unwrap();
        let verdicts = c.classify_all().unwrap();
        for v in &verdicts {
            println!("{spec} {}", v.to_json());
        }
        for x in exp.vertex_expectations.iter().filter(|x| x.applies()) {
            for &u in &x.vertices {
                if let Err(e) = x.check(&verdicts[u]) {
                    failures.push(format!("{spec}: {e}"));
                }
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
