mod common;

use common::{pipeline, pred};
use pred::format::SolutionDocument;
use pred_core::examples::database;
use pred_core::graph::ReductionGraph;
use pred_core::model::Problem;

/// `create --example | reduce --to T | solve` for every example and every
/// variant reachable from it.
#[test]
fn every_example_composes_with_every_reachable_target() {
    let g = ReductionGraph::shipped().unwrap();
    let variants: Vec<_> = g.registry().iter().map(|d| d.variant.clone()).collect();
    let mut pipelines = 0;
    for example in database() {
        for target in &variants {
            if g.find_path(&example.variant(), target, true).unwrap().is_none() {
                continue;
            }
            let to = target.to_string();
            let out = pipeline(
                pred,
                &[&["create", &example.id, "--example"], &["reduce", "-", "--to", &to], &["solve", "-"]],
            );
            assert_eq!(out.code, 0, "{} -> {to}: {}", example.id, out.stderr);
            let doc: SolutionDocument = serde_json::from_str(&out.stdout).unwrap();
            assert_eq!(doc.evaluation, example.known_value.to_string(), "{} -> {to}", example.id);
            match &doc.solution {
                Some(s) => assert_eq!(example.instance.evaluate(s).unwrap(), example.known_value),
                None => assert!(example.known_witness.is_none(), "{} -> {to}", example.id),
            }
            pipelines += 1;
        }
    }
    assert!(pipelines > database().len());
}
