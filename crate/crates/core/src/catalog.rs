//! Standard separated graphs used throughout the tests and the CLI.

use crate::graph::{EdgeId, EdgeRecord, GraphSpec, SeparatedGraph, VertexId};
use crate::group::{FiniteGroup, GraphAction, GroupSpec};

fn build(spec: GraphSpec) -> SeparatedGraph {
    SeparatedGraph::from_spec(&spec).expect("catalog graphs are valid")
}

fn edge(id: String, src: &str, dst: &str) -> EdgeRecord {
    EdgeRecord { id, src: src.into(), dst: dst.into() }
}

/// The Cuntz separated graph `(A_n, D)`: one vertex `v`, loops `a1..an`, singleton sets.
pub fn cuntz(n: usize) -> SeparatedGraph {
    let ids: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    build(GraphSpec {
        vertices: vec!["v".into()],
        edges: ids.iter().map(|a| edge(a.clone(), "v", "v")).collect(),
        separation: [("v".to_string(), ids.iter().map(|a| vec![a.clone()]).collect())].into(),
    })
}

/// `(E(m,n), C(m,n))`: `e1..en` and `f1..fm` all go `v → w`, with `X = {eᵢ}` and `Y = {fⱼ}`.
pub fn emn(m: usize, n: usize) -> SeparatedGraph {
    let es: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let fs: Vec<String> = (1..=m).map(|j| format!("f{j}")).collect();
    build(GraphSpec {
        vertices: vec!["v".into(), "w".into()],
        edges: es.iter().chain(&fs).map(|e| edge(e.clone(), "v", "w")).collect(),
        separation: [("v".to_string(), vec![es, fs]), ("w".to_string(), vec![])].into(),
    })
}

/// One vertex carrying `X = {e1..en}` and `Y = {f1..fm}` as loops.
pub fn two_set_loops(n: usize, m: usize) -> SeparatedGraph {
    let es: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let fs: Vec<String> = (1..=m).map(|j| format!("f{j}")).collect();
    build(GraphSpec {
        vertices: vec!["v".into()],
        edges: es.iter().chain(&fs).map(|e| edge(e.clone(), "v", "v")).collect(),
        separation: [("v".to_string(), vec![es, fs])].into(),
    })
}

/// The separated graph of a partial isometry: `X = {alpha1, alpha2}`,
/// `Y = {beta1, beta2}` at `v`, with `alpha1, beta1` ending at `w1`.
pub fn partial_isometry() -> SeparatedGraph {
    SeparatedGraph::from_parts(
        &["v", "w1", "w2", "w3"],
        &[("alpha1", "v", "w1"), ("alpha2", "v", "w2"), ("beta1", "v", "w1"), ("beta2", "v", "w3")],
        &[("v", &[&["alpha1", "alpha2"], &["beta1", "beta2"]])],
    )
    .expect("catalog graphs are valid")
}

/// A directed 2-cycle (`a: v → w`, `b: w → v`) with `Z/2` swapping `v ↔ w` and `a ↔ b`.
pub fn two_cycle_swap() -> (SeparatedGraph, GraphAction) {
    let g = SeparatedGraph::from_parts(
        &["v", "w"],
        &[("a", "v", "w"), ("b", "w", "v")],
        &[("v", &[&["a"]]), ("w", &[&["b"]])],
    )
    .expect("catalog graphs are valid");
    let group = FiniteGroup::new(&GroupSpec::zmod(2)).expect("Z/2");
    let action = GraphAction::from_tables(
        &g,
        group,
        vec![vec![VertexId(0), VertexId(1)], vec![VertexId(1), VertexId(0)]],
        vec![vec![EdgeId(0), EdgeId(1)], vec![EdgeId(1), EdgeId(0)]],
    )
    .expect("tables have the right shape");
    (g, action)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(cuntz(3).edge_count(), 3);
        assert_eq!(cuntz(3).sets().len(), 3);
        let e = emn(2, 3);
        assert_eq!(e.edge_count(), 5);
        assert!(e.is_sink(e.vertex("w").unwrap()));
        assert_eq!(two_set_loops(2, 2).sets().len(), 2);
        assert_eq!(partial_isometry().sets().len(), 2);
    }
}
