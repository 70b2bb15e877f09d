use sepgraph::selftest;

#[test]
fn acceptance_criteria() {
    let outcomes = selftest::run_all(selftest::DEFAULT_SEED);
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.ok()).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
