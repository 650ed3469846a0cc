use pred_core::graph::ReductionGraph;
use pred_testkit::routes::check_all_pairs;

#[test]
fn find_path_is_optimal_against_exhaustive_enumeration() {
    let g = ReductionGraph::shipped().unwrap();
    let routed = check_all_pairs(&g, 5).unwrap();
    assert!(routed > g.registry().len());
}

#[test]
fn estimated_costs() {
    let g = ReductionGraph::shipped().unwrap();
    let path = g.find_path_by_name("3SAT", "ILP").unwrap().unwrap();
    assert_eq!(path.estimated_cost.to_string(), "2^L");
    let path = g.find_path_by_name("MIS", "MIS").unwrap().unwrap();
    assert_eq!(path.estimated_cost.to_string(), "1.1996^V");
    let path = g.find_path_by_name("Clique", "ILP").unwrap().unwrap();
    assert_eq!(path.names(), vec!["MaxClique -> MIS[weight=unit]", "MIS[weight=unit] -> ILP"]);
}
