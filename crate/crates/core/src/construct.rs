//! Skew products `E ×_c G`, quotients `E/G` and Cayley separated graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeRecord, GraphPath, GraphSpec, Letter, SeparatedGraph, VertexId};
use crate::group::{FiniteGroup, GraphAction, GroupElement, GroupSpec, Labeling};

/// The separated skew product `(E ×_c G, C ×_c G)` of a finite group.
///
/// Vertex `(v, g)` has index `v·|G| + g` and id `"v@g"`; edges likewise.
#[derive(Clone, Debug)]
pub struct SkewProduct {
    base: SeparatedGraph,
    group: FiniteGroup,
    label: Vec<usize>,
    graph: SeparatedGraph,
}

pub fn pair_name(id: &str, g: &GroupElement) -> String {
    format!("{id}@{g}")
}

/// Builds `E ×_c G`: `s(e,g) = (s(e),g)`, `r(e,g) = (r(e), g·c(e))`, `X_g = X × {g}`.
pub fn skew_product(graph: &SeparatedGraph, label: &Labeling) -> Result<SkewProduct> {
    let group = FiniteGroup::new(label.group())?;
    let n = group.len();
    let lab = graph
        .edge_ids()
        .map(|e| group.index_of(label.value(e)?))
        .collect::<Result<Vec<_>>>()?;
    let mut spec = GraphSpec::default();
    for v in graph.vertex_ids() {
        for g in 0..n {
            spec.vertices.push(pair_name(graph.vertex_name(v), group.element(g)));
        }
    }
    for e in graph.edge_ids() {
        for g in 0..n {
            let dst_g = group.mul(g, lab[e.index()]);
            spec.edges.push(EdgeRecord {
                id: pair_name(graph.edge_name(e), group.element(g)),
                src: spec.vertices[graph.src(e).index() * n + g].clone(),
                dst: spec.vertices[graph.dst(e).index() * n + dst_g].clone(),
            });
        }
    }
    for v in graph.vertex_ids() {
        for g in 0..n {
            let fam = graph
                .sets_at(v)
                .iter()
                .map(|&s| {
                    graph.set(s).edges.iter().map(|&e| spec.edges[e.index() * n + g].id.clone()).collect()
                })
                .collect();
            spec.separation.insert(spec.vertices[v.index() * n + g].clone(), fam);
        }
    }
    Ok(SkewProduct {
        base: graph.clone(),
        group,
        label: lab,
        graph: SeparatedGraph::from_spec(&spec)?,
    })
}

impl SkewProduct {
    pub fn graph(&self) -> &SeparatedGraph {
        &self.graph
    }

    pub fn base(&self) -> &SeparatedGraph {
        &self.base
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// `c(e)` as a group index.
    pub fn label_index(&self, e: EdgeId) -> usize {
        self.label[e.index()]
    }

    /// `c` of a signed word, as a group index.
    pub fn degree_index(&self, letters: &[Letter]) -> usize {
        letters.iter().fold(self.group.identity(), |acc, l| {
            let c = self.label[l.edge.index()];
            self.group.mul(acc, if l.star { self.group.inv(c) } else { c })
        })
    }

    pub fn vertex(&self, v: VertexId, g: usize) -> VertexId {
        VertexId((v.index() * self.group.len() + g) as u32)
    }

    pub fn edge(&self, e: EdgeId, g: usize) -> EdgeId {
        EdgeId((e.index() * self.group.len() + g) as u32)
    }

    pub fn split_vertex(&self, v: VertexId) -> (VertexId, usize) {
        let n = self.group.len();
        (VertexId((v.index() / n) as u32), v.index() % n)
    }

    pub fn split_edge(&self, e: EdgeId) -> (EdgeId, usize) {
        let n = self.group.len();
        (EdgeId((e.index() / n) as u32), e.index() % n)
    }

    /// Lifts a forward path `e₁⋯eₙ` starting at group position `g`: the i-th
    /// step is `(eᵢ, g·c(e₁⋯eᵢ₋₁))`.
    pub fn lift_path(&self, path: &GraphPath, g: usize) -> Result<GraphPath> {
        if !path.is_forward() {
            return Err(Error::MalformedPath("only forward paths lift to the skew product".into()));
        }
        let (base, steps) = self.lift_word(path.base, &path.steps, g);
        Ok(GraphPath { base, steps })
    }

    /// Lifts any word of `Ê` starting at `(base, g)`. A star step `e*` taken at
    /// position `k` is the reverse of `(e, k·c(e)⁻¹)`.
    pub fn lift_word(&self, base: VertexId, letters: &[Letter], g: usize) -> (VertexId, Vec<Letter>) {
        let mut at = g;
        let steps = letters
            .iter()
            .map(|l| {
                let c = self.label[l.edge.index()];
                if l.star {
                    at = self.group.mul(at, self.group.inv(c));
                    Letter::star(self.edge(l.edge, at))
                } else {
                    let step = Letter::fwd(self.edge(l.edge, at));
                    at = self.group.mul(at, c);
                    step
                }
            })
            .collect();
        (self.vertex(base, g), steps)
    }

    /// Inverse of [`lift_word`](Self::lift_word): the underlying word of `E` and the start position.
    pub fn project_word(&self, base: VertexId, letters: &[Letter]) -> (VertexId, Vec<Letter>, usize) {
        let (v, g) = self.split_vertex(base);
        let steps = letters
            .iter()
            .map(|l| Letter { edge: self.split_edge(l.edge).0, star: l.star })
            .collect();
        (v, steps, g)
    }

    /// The translation action `γ_z(v,g) = (v, zg)`.
    pub fn translation(&self) -> GraphAction {
        let n = self.group.len();
        let vertex_perm = (0..n)
            .map(|z| {
                self.graph
                    .vertex_ids()
                    .map(|x| {
                        let (v, g) = self.split_vertex(x);
                        self.vertex(v, self.group.mul(z, g))
                    })
                    .collect()
            })
            .collect();
        let edge_perm = (0..n)
            .map(|z| {
                self.graph
                    .edge_ids()
                    .map(|x| {
                        let (e, g) = self.split_edge(x);
                        self.edge(e, self.group.mul(z, g))
                    })
                    .collect()
            })
            .collect();
        GraphAction::from_tables(&self.graph, self.group.clone(), vertex_perm, edge_perm)
            .expect("translation tables have the right shape")
    }
}

/// The quotient separated graph `(E/G, C/G)` with the orbit maps.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: SeparatedGraph,
    /// Orbit of each vertex of the input graph.
    pub vertex_class: Vec<VertexId>,
    /// Orbit of each edge of the input graph.
    pub edge_class: Vec<EdgeId>,
}

/// Orbits are named by their lexicographically smallest member id, and the
/// separation at an orbit is `{X_G : X ∈ C_v}` for that member `v`.
pub fn quotient_graph(graph: &SeparatedGraph, action: &GraphAction) -> Result<Quotient> {
    let report = action.check(graph);
    if !report.is_valid() {
        return Err(Error::InvalidAction(report));
    }
    let vorbits = action.vertex_orbits();
    let eorbits = action.edge_orbits();
    let min_vertex = |orbit: &[VertexId]| {
        *orbit.iter().min_by_key(|&&v| graph.vertex_name(v)).expect("orbits are nonempty")
    };
    let min_edge = |orbit: &[EdgeId]| {
        *orbit.iter().min_by_key(|&&e| graph.edge_name(e)).expect("orbits are nonempty")
    };
    let mut vertex_class = vec![VertexId(0); graph.vertex_count()];
    for (i, orbit) in vorbits.iter().enumerate() {
        for &v in orbit {
            vertex_class[v.index()] = VertexId(i as u32);
        }
    }
    let mut edge_class = vec![EdgeId(0); graph.edge_count()];
    for (i, orbit) in eorbits.iter().enumerate() {
        for &e in orbit {
            edge_class[e.index()] = EdgeId(i as u32);
        }
    }
    let vnames: Vec<String> = vorbits.iter().map(|o| graph.vertex_name(min_vertex(o)).to_string()).collect();
    let enames: Vec<String> = eorbits.iter().map(|o| graph.edge_name(min_edge(o)).to_string()).collect();
    let mut spec = GraphSpec { vertices: vnames.clone(), ..Default::default() };
    for (i, orbit) in eorbits.iter().enumerate() {
        let e = orbit[0];
        spec.edges.push(EdgeRecord {
            id: enames[i].clone(),
            src: vnames[vertex_class[graph.src(e).index()].index()].clone(),
            dst: vnames[vertex_class[graph.dst(e).index()].index()].clone(),
        });
    }
    for (i, orbit) in vorbits.iter().enumerate() {
        let rep = min_vertex(orbit);
        let mut fam: Vec<Vec<String>> = Vec::new();
        for &s in graph.sets_at(rep) {
            let mut set: Vec<String> = Vec::new();
            for &e in &graph.set(s).edges {
                let name = &enames[edge_class[e.index()].index()];
                if !set.contains(name) {
                    set.push(name.clone());
                }
            }
            let mut sorted = set.clone();
            sorted.sort();
            let dup = fam.iter().any(|f| {
                let mut g = f.clone();
                g.sort();
                g == sorted
            });
            if !dup {
                fam.push(set);
            }
        }
        spec.separation.insert(vnames[i].clone(), fam);
    }
    Ok(Quotient { graph: SeparatedGraph::from_spec(&spec)?, vertex_class, edge_class })
}

/// The Cayley separated graph of a finite group: vertices `G`, edges
/// `(h, gᵢ): h → h·gᵢ` with id `"aᵢ@h"`, and singleton sets.
pub fn cayley_graph(group: &GroupSpec, generators: &[GroupElement]) -> Result<SeparatedGraph> {
    let fg = FiniteGroup::new(group)?;
    let gens = generators.iter().map(|g| fg.index_of(g)).collect::<Result<Vec<_>>>()?;
    let mut spec = GraphSpec {
        vertices: fg.elements().iter().map(|g| g.to_string()).collect(),
        ..Default::default()
    };
    let mut separation: BTreeMap<String, Vec<Vec<String>>> = BTreeMap::new();
    for h in 0..fg.len() {
        let mut fam = Vec::new();
        for (i, &gi) in gens.iter().enumerate() {
            let id = pair_name(&format!("a{}", i + 1), fg.element(h));
            spec.edges.push(EdgeRecord {
                id: id.clone(),
                src: spec.vertices[h].clone(),
                dst: spec.vertices[fg.mul(h, gi)].clone(),
            });
            fam.push(vec![id]);
        }
        separation.insert(spec.vertices[h].clone(), fam);
    }
    spec.separation = separation;
    SeparatedGraph::from_spec(&spec)
}

/// Left translation `g·h = gh` on a Cayley separated graph built by [`cayley_graph`].
pub fn cayley_translation(graph: &SeparatedGraph, group: &GroupSpec, generators: usize) -> Result<GraphAction> {
    let fg = FiniteGroup::new(group)?;
    let n = fg.len();
    let vertex_perm = (0..n)
        .map(|g| (0..n).map(|h| VertexId(fg.mul(g, h) as u32)).collect())
        .collect();
    let edge_perm = (0..n)
        .map(|g| {
            (0..n)
                .flat_map(|h| (0..generators).map(move |i| (h, i)))
                .map(|(h, i)| EdgeId((fg.mul(g, h) * generators + i) as u32))
                .collect()
        })
        .collect();
    GraphAction::from_tables(graph, fg, vertex_perm, edge_perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::{check_isomorphism, GraphMorphism};

    fn z(n: u64, k: i64) -> GroupElement {
        GroupSpec::zmod(n).parse_element(&k.to_string()).unwrap()
    }

    #[test]
    fn one_loop_over_z2() {
        let g = catalog::cuntz(1);
        let c = Labeling::from_values(&g, GroupSpec::zmod(2), vec![z(2, 1)]).unwrap();
        let skew = skew_product(&g, &c).unwrap();
        let s = skew.graph();
        assert_eq!(s.vertex_count(), 2);
        let a0 = s.edge("a1@0").unwrap();
        let a1 = s.edge("a1@1").unwrap();
        assert_eq!(s.vertex_name(s.src(a0)), "v@0");
        assert_eq!(s.vertex_name(s.dst(a0)), "v@1");
        assert_eq!(s.vertex_name(s.src(a1)), "v@1");
        assert_eq!(s.vertex_name(s.dst(a1)), "v@0");
    }

    #[test]
    fn trivial_group_skew_is_the_input() {
        let g = catalog::partial_isometry();
        let c = Labeling::from_values(&g, GroupSpec::zmod(1), vec![z(1, 0); 4]).unwrap();
        let skew = skew_product(&g, &c).unwrap();
        let f = GraphMorphism {
            vertices: g.vertex_ids().map(|v| (skew.graph().vertex_name(skew.vertex(v, 0)).to_string(), g.vertex_name(v).to_string())).collect(),
            edges: g.edge_ids().map(|e| (skew.graph().edge_name(skew.edge(e, 0)).to_string(), g.edge_name(e).to_string())).collect(),
        };
        assert!(check_isomorphism(&f, skew.graph(), &g));
    }

    #[test]
    fn infinite_groups_cannot_be_skewed() {
        let g = catalog::cuntz(1);
        let c = Labeling::free(&g);
        assert!(matches!(skew_product(&g, &c), Err(Error::UnsupportedGroup(_))));
    }

    #[test]
    fn skew_path_steps() {
        let g = SeparatedGraph::from_parts(
            &["u", "v", "w"],
            &[("e1", "u", "v"), ("e2", "v", "w")],
            &[("u", &[&["e1"]]), ("v", &[&["e2"]])],
        )
        .unwrap();
        let c = Labeling::from_values(&g, GroupSpec::zmod(3), vec![z(3, 1), z(3, 2)]).unwrap();
        let skew = skew_product(&g, &c).unwrap();
        let p = GraphPath::forward(&g, &["e1", "e2"]).unwrap();
        let lifted = skew.lift_path(&p, 2).unwrap();
        let names: Vec<&str> = lifted.steps.iter().map(|l| skew.graph().edge_name(l.edge)).collect();
        assert_eq!(names, ["e1@2", "e2@0"]);
        assert_eq!(skew.graph().vertex_name(lifted.range(skew.graph())), "w@2");
        let empty = skew.lift_path(&GraphPath::vertex(g.vertex("v").unwrap()), 1).unwrap();
        assert_eq!(skew.graph().vertex_name(empty.base), "v@1");
        assert!(empty.is_empty());
        let e1 = g.edge("e1").unwrap();
        let bad = GraphPath::new(&g, g.vertex("v").unwrap(), vec![Letter::star(e1)]).unwrap();
        assert!(skew.lift_path(&bad, 0).is_err());
    }

    #[test]
    fn swap_quotient_is_one_loop() {
        let (g, action) = catalog::two_cycle_swap();
        let q = quotient_graph(&g, &action).unwrap();
        assert_eq!(q.graph.vertex_count(), 1);
        assert_eq!(q.graph.edge_count(), 1);
        let e = EdgeId(0);
        assert_eq!(q.graph.src(e), q.graph.dst(e));
        assert_eq!(q.graph.sets().len(), 1);
    }

    #[test]
    fn cayley_of_z3() {
        let grp = GroupSpec::zmod(3);
        let g = cayley_graph(&grp, &[z(3, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.sets().iter().all(|x| x.edges.len() == 1));
        let action = cayley_translation(&g, &grp, 1).unwrap();
        assert!(action.check(&g).is_valid());
        assert!(action.is_free());
    }
}
