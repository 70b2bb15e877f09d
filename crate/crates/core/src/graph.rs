//! Finite separated graphs, paths in the extended graph, and graph morphisms.
//!
//! A separated graph is a directed graph `E` together with, for every vertex
//! `v`, a partition `C_v` of the edges leaving `v` into nonempty sets. Sinks
//! carry an empty family.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

/// Index of a separation set `X ∈ C` in [`SeparatedGraph::sets`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl SetId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An edge of the extended graph: `e` or its formal reverse `e*`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub edge: EdgeId,
    pub star: bool,
}

impl Letter {
    pub fn fwd(edge: EdgeId) -> Self {
        Letter { edge, star: false }
    }

    pub fn star(edge: EdgeId) -> Self {
        Letter { edge, star: true }
    }

    pub fn adjoint(self) -> Self {
        Letter { edge: self.edge, star: !self.star }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// The on-disk form of a separated graph. May be invalid; see [`validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default)]
    pub separation: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertex(String),
    DuplicateEdge(String),
    UnknownEndpoint { edge: String, vertex: String },
    UnknownSeparationVertex(String),
    EmptySet { vertex: String, index: usize },
    UnknownSetEdge { vertex: String, edge: String },
    ForeignEdge { vertex: String, edge: String, source: String },
    RepeatedEdge(String),
    UncoveredEdge(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertex(v) => write!(f, "duplicate vertex `{v}`"),
            Violation::DuplicateEdge(e) => write!(f, "duplicate edge `{e}`"),
            Violation::UnknownEndpoint { edge, vertex } => {
                write!(f, "edge `{edge}` references unknown vertex `{vertex}`")
            }
            Violation::UnknownSeparationVertex(v) => {
                write!(f, "separation given for unknown vertex `{v}`")
            }
            Violation::EmptySet { vertex, index } => {
                write!(f, "separation set {index} at `{vertex}` is empty")
            }
            Violation::UnknownSetEdge { vertex, edge } => {
                write!(f, "separation at `{vertex}` lists unknown edge `{edge}`")
            }
            Violation::ForeignEdge { vertex, edge, source } => write!(
                f,
                "separation at `{vertex}` lists edge `{edge}` whose source is `{source}`"
            ),
            Violation::RepeatedEdge(e) => write!(f, "edge `{e}` appears in more than one separation set"),
            Violation::UncoveredEdge(e) => write!(f, "uncovered edge `{e}`"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks every separated-graph invariant and lists each failure.
pub fn validate(spec: &GraphSpec) -> ValidationReport {
    let mut violations = Vec::new();
    let mut vertices = BTreeSet::new();
    for v in &spec.vertices {
        if !vertices.insert(v.as_str()) {
            violations.push(Violation::DuplicateVertex(v.clone()));
        }
    }
    let mut sources: HashMap<&str, &str> = HashMap::new();
    for e in &spec.edges {
        if sources.insert(e.id.as_str(), e.src.as_str()).is_some() {
            violations.push(Violation::DuplicateEdge(e.id.clone()));
        }
        for endpoint in [&e.src, &e.dst] {
            if !vertices.contains(endpoint.as_str()) {
                violations.push(Violation::UnknownEndpoint {
                    edge: e.id.clone(),
                    vertex: endpoint.clone(),
                });
            }
        }
    }
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for (v, family) in &spec.separation {
        if !vertices.contains(v.as_str()) {
            violations.push(Violation::UnknownSeparationVertex(v.clone()));
        }
        for (index, set) in family.iter().enumerate() {
            if set.is_empty() {
                violations.push(Violation::EmptySet { vertex: v.clone(), index });
            }
            for e in set {
                match sources.get(e.as_str()) {
                    None => violations.push(Violation::UnknownSetEdge {
                        vertex: v.clone(),
                        edge: e.clone(),
                    }),
                    Some(src) if *src != v.as_str() => violations.push(Violation::ForeignEdge {
                        vertex: v.clone(),
                        edge: e.clone(),
                        source: src.to_string(),
                    }),
                    Some(_) => {}
                }
                if !seen.insert(e.as_str()) {
                    violations.push(Violation::RepeatedEdge(e.clone()));
                }
            }
        }
    }
    for e in &spec.edges {
        if !seen.contains(e.id.as_str()) {
            violations.push(Violation::UncoveredEdge(e.id.clone()));
        }
    }
    ValidationReport { violations }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: VertexId,
    pub dst: VertexId,
}

/// A separation set `X ∈ C_v`, edges kept in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepSet {
    pub vertex: VertexId,
    pub edges: Vec<EdgeId>,
}

/// A validated finite separated graph `(E, C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedGraph {
    vertices: Vec<String>,
    vertex_index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    edge_index: HashMap<String, EdgeId>,
    sets: Vec<SepSet>,
    vertex_sets: Vec<Vec<SetId>>,
    edge_set: Vec<SetId>,
    out_edges: Vec<Vec<EdgeId>>,
}

impl SeparatedGraph {
    pub fn from_spec(spec: &GraphSpec) -> Result<Self> {
        let report = validate(spec);
        if !report.is_valid() {
            return Err(Error::InvalidGraph(report));
        }
        let vertex_index: HashMap<String, VertexId> = spec
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), VertexId(i as u32)))
            .collect();
        let edge_index: HashMap<String, EdgeId> = spec
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), EdgeId(i as u32)))
            .collect();
        let edges: Vec<Edge> = spec
            .edges
            .iter()
            .map(|e| Edge {
                id: e.id.clone(),
                src: vertex_index[&e.src],
                dst: vertex_index[&e.dst],
            })
            .collect();
        let mut out_edges = vec![Vec::new(); spec.vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.src.index()].push(EdgeId(i as u32));
        }
        let mut sets = Vec::new();
        let mut vertex_sets = vec![Vec::new(); spec.vertices.len()];
        let mut edge_set = vec![SetId(0); edges.len()];
        // sets are numbered in vertex order so SetId order is independent of map order
        for (vi, v) in spec.vertices.iter().enumerate() {
            let Some(family) = spec.separation.get(v) else { continue };
            for set in family {
                let id = SetId(sets.len() as u32);
                let members: Vec<EdgeId> = set.iter().map(|e| edge_index[e]).collect();
                for &e in &members {
                    edge_set[e.index()] = id;
                }
                sets.push(SepSet { vertex: VertexId(vi as u32), edges: members });
                vertex_sets[vi].push(id);
            }
        }
        Ok(SeparatedGraph {
            vertices: spec.vertices.clone(),
            vertex_index,
            edges,
            edge_index,
            sets,
            vertex_sets,
            edge_set,
            out_edges,
        })
    }

    /// Convenience constructor from string slices; panics on invalid input is
    /// avoided by returning the validation error.
    pub fn from_parts(
        vertices: &[&str],
        edges: &[(&str, &str, &str)],
        separation: &[(&str, &[&[&str]])],
    ) -> Result<Self> {
        let spec = GraphSpec {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(id, s, d)| EdgeRecord { id: id.to_string(), src: s.to_string(), dst: d.to_string() })
                .collect(),
            separation: separation
                .iter()
                .map(|(v, fam)| {
                    (
                        v.to_string(),
                        fam.iter().map(|set| set.iter().map(|e| e.to_string()).collect()).collect(),
                    )
                })
                .collect(),
        };
        Self::from_spec(&spec)
    }

    /// An ordinary graph: every non-sink vertex carries the single set `s⁻¹(v)`.
    pub fn ordinary(vertices: &[String], edges: &[(String, String, String)]) -> Result<Self> {
        let mut separation: BTreeMap<String, Vec<Vec<String>>> = BTreeMap::new();
        for (id, src, _) in edges {
            let fam = separation.entry(src.clone()).or_default();
            if fam.is_empty() {
                fam.push(Vec::new());
            }
            fam[0].push(id.clone());
        }
        let spec = GraphSpec {
            vertices: vertices.to_vec(),
            edges: edges
                .iter()
                .map(|(id, s, d)| EdgeRecord { id: id.clone(), src: s.clone(), dst: d.clone() })
                .collect(),
            separation,
        };
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> GraphSpec {
        let mut separation = BTreeMap::new();
        for (vi, v) in self.vertices.iter().enumerate() {
            let fam = self.vertex_sets[vi]
                .iter()
                .map(|&s| self.sets[s.index()].edges.iter().map(|&e| self.edges[e.index()].id.clone()).collect())
                .collect();
            separation.insert(v.clone(), fam);
        }
        GraphSpec {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    src: self.vertices[e.src.index()].clone(),
                    dst: self.vertices[e.dst.index()].clone(),
                })
                .collect(),
            separation,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].id
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge(&self, name: &str) -> Result<EdgeId> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn src(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].src
    }

    pub fn dst(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].dst
    }

    /// Source in the extended graph: `s(e*) = r(e)`.
    pub fn letter_src(&self, l: Letter) -> VertexId {
        if l.star {
            self.dst(l.edge)
        } else {
            self.src(l.edge)
        }
    }

    pub fn letter_dst(&self, l: Letter) -> VertexId {
        if l.star {
            self.src(l.edge)
        } else {
            self.dst(l.edge)
        }
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.index()]
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out_edges[v.index()].is_empty()
    }

    pub fn sets(&self) -> &[SepSet] {
        &self.sets
    }

    pub fn set(&self, s: SetId) -> &SepSet {
        &self.sets[s.index()]
    }

    pub fn sets_at(&self, v: VertexId) -> &[SetId] {
        &self.vertex_sets[v.index()]
    }

    pub fn set_of(&self, e: EdgeId) -> SetId {
        self.edge_set[e.index()]
    }

    pub fn set_size(&self, e: EdgeId) -> usize {
        self.sets[self.edge_set[e.index()].index()].edges.len()
    }

    /// True when every non-sink vertex carries exactly one set (the trivial separation).
    pub fn is_ordinary(&self) -> bool {
        self.vertex_ids()
            .all(|v| self.is_sink(v) || self.vertex_sets[v.index()].len() == 1)
    }

    /// The ordinary graph `E_X`: all vertices, the edges of `X`, one set.
    pub fn restrict_to_set(&self, set: SetId) -> SeparatedGraph {
        let x = &self.sets[set.index()];
        let vertices = self.vertices.clone();
        let edges: Vec<(String, String, String)> = x
            .edges
            .iter()
            .map(|&e| {
                (
                    self.edge_name(e).to_string(),
                    self.vertex_name(self.src(e)).to_string(),
                    self.vertex_name(self.dst(e)).to_string(),
                )
            })
            .collect();
        SeparatedGraph::ordinary(&vertices, &edges).expect("restriction of a valid graph is valid")
    }
}

/// A path in the extended graph `Ê`; `base` is its source (needed for length 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphPath {
    pub base: VertexId,
    pub steps: Vec<Letter>,
}

impl GraphPath {
    pub fn new(graph: &SeparatedGraph, base: VertexId, steps: Vec<Letter>) -> Result<Self> {
        let mut at = base;
        for (i, &l) in steps.iter().enumerate() {
            if graph.letter_src(l) != at {
                return Err(Error::MalformedPath(format!(
                    "step {i} (`{}`) does not start at `{}`",
                    graph.edge_name(l.edge),
                    graph.vertex_name(at)
                )));
            }
            at = graph.letter_dst(l);
        }
        Ok(GraphPath { base, steps })
    }

    pub fn vertex(v: VertexId) -> Self {
        GraphPath { base: v, steps: Vec::new() }
    }

    /// A forward path from edge names.
    pub fn forward(graph: &SeparatedGraph, edges: &[&str]) -> Result<Self> {
        let steps = edges
            .iter()
            .map(|e| graph.edge(e).map(Letter::fwd))
            .collect::<Result<Vec<_>>>()?;
        let Some(first) = steps.first() else {
            return Err(Error::MalformedPath("empty forward path needs a base vertex".into()));
        };
        let base = graph.letter_src(*first);
        GraphPath::new(graph, base, steps)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn source(&self) -> VertexId {
        self.base
    }

    pub fn range(&self, graph: &SeparatedGraph) -> VertexId {
        self.steps.last().map_or(self.base, |&l| graph.letter_dst(l))
    }

    pub fn is_forward(&self) -> bool {
        self.steps.iter().all(|l| !l.star)
    }

    pub fn concat(&self, graph: &SeparatedGraph, other: &GraphPath) -> Result<GraphPath> {
        if self.range(graph) != other.base {
            return Err(Error::MalformedPath("paths are not composable".into()));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Ok(GraphPath { base: self.base, steps })
    }

    /// `μ ↦ μ*`: reversed, every orientation flipped.
    pub fn adjoint(&self, graph: &SeparatedGraph) -> GraphPath {
        GraphPath {
            base: self.range(graph),
            steps: self.steps.iter().rev().map(|l| l.adjoint()).collect(),
        }
    }
}

/// A map of vertex and edge ids between two graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMorphism {
    pub vertices: BTreeMap<String, String>,
    pub edges: BTreeMap<String, String>,
}

impl GraphMorphism {
    pub fn identity(graph: &SeparatedGraph) -> Self {
        GraphMorphism {
            vertices: graph.vertices.iter().map(|v| (v.clone(), v.clone())).collect(),
            edges: graph.edges.iter().map(|e| (e.id.clone(), e.id.clone())).collect(),
        }
    }
}

/// True iff `f` is a bijective graph morphism `src → dst` sending every
/// separation set of `src` onto a separation set of `dst`.
pub fn check_isomorphism(f: &GraphMorphism, src: &SeparatedGraph, dst: &SeparatedGraph) -> bool {
    if src.vertex_count() != dst.vertex_count() || src.edge_count() != dst.edge_count() {
        return false;
    }
    if f.vertices.len() != src.vertex_count() || f.edges.len() != src.edge_count() {
        return false;
    }
    let mut vmap = vec![VertexId(0); src.vertex_count()];
    let mut hit = vec![false; dst.vertex_count()];
    for (a, b) in &f.vertices {
        let (Ok(a), Ok(b)) = (src.vertex(a), dst.vertex(b)) else { return false };
        if std::mem::replace(&mut hit[b.index()], true) {
            return false;
        }
        vmap[a.index()] = b;
    }
    let mut emap = vec![EdgeId(0); src.edge_count()];
    let mut hit = vec![false; dst.edge_count()];
    for (a, b) in &f.edges {
        let (Ok(a), Ok(b)) = (src.edge(a), dst.edge(b)) else { return false };
        if std::mem::replace(&mut hit[b.index()], true) {
            return false;
        }
        emap[a.index()] = b;
    }
    for e in src.edge_ids() {
        let fe = emap[e.index()];
        if vmap[src.src(e).index()] != dst.src(fe) || vmap[src.dst(e).index()] != dst.dst(fe) {
            return false;
        }
    }
    src.sets().iter().all(|x| {
        let image: BTreeSet<EdgeId> = x.edges.iter().map(|e| emap[e.index()]).collect();
        let target = dst.set_of(*image.iter().next().expect("sets are nonempty"));
        let y = dst.set(target);
        y.vertex == vmap[x.vertex.index()]
            && y.edges.len() == image.len()
            && y.edges.iter().all(|e| image.contains(e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cuntz(n: usize) -> SeparatedGraph {
        crate::catalog::cuntz(n)
    }

    #[test]
    fn cuntz_graph_is_valid() {
        let g = cuntz(3);
        assert!(validate(&g.to_spec()).is_valid());
        assert_eq!(g.sets().len(), 3);
    }

    #[test]
    fn empty_graph_is_valid() {
        let spec = GraphSpec::default();
        assert!(validate(&spec).is_valid());
        let g = SeparatedGraph::from_spec(&spec).unwrap();
        assert_eq!(g.vertex_count(), 0);
    }

    #[test]
    fn uncovered_edge_is_reported() {
        let mut spec = cuntz(2).to_spec();
        spec.separation.get_mut("v").unwrap().pop();
        let report = validate(&spec);
        assert_eq!(report.violations, vec![Violation::UncoveredEdge("a2".into())]);
        assert!(report.to_string().contains("uncovered edge"));
        assert!(SeparatedGraph::from_spec(&spec).is_err());
    }

    #[test]
    fn every_kind_of_violation_is_named() {
        let spec: GraphSpec = serde_json::from_str(
            r#"{"vertices":["v","v","w"],
                "edges":[{"id":"a","src":"v","dst":"x"},{"id":"a","src":"v","dst":"w"},
                         {"id":"b","src":"w","dst":"v"}],
                "separation":{"v":[["a"],[]],"w":[["zz"]],"q":[],"u":[["b","b"]]}}"#,
        )
        .unwrap();
        let v = validate(&spec).violations;
        assert!(v.contains(&Violation::DuplicateVertex("v".into())));
        assert!(v.contains(&Violation::DuplicateEdge("a".into())));
        assert!(v.contains(&Violation::UnknownEndpoint { edge: "a".into(), vertex: "x".into() }));
        assert!(v.contains(&Violation::EmptySet { vertex: "v".into(), index: 1 }));
        assert!(v.contains(&Violation::UnknownSetEdge { vertex: "w".into(), edge: "zz".into() }));
        assert!(v.contains(&Violation::UnknownSeparationVertex("q".into())));
        assert!(v.contains(&Violation::RepeatedEdge("b".into())));
        assert!(v.iter().any(|x| matches!(x, Violation::ForeignEdge { edge, .. } if edge == "b")));
    }

    #[test]
    fn sinks_may_omit_their_entry() {
        let spec: GraphSpec = serde_json::from_str(
            r#"{"vertices":["v","w"],"edges":[{"id":"e","src":"v","dst":"w"}],"separation":{"v":[["e"]]}}"#,
        )
        .unwrap();
        let g = SeparatedGraph::from_spec(&spec).unwrap();
        assert!(g.sets_at(g.vertex("w").unwrap()).is_empty());
        assert_eq!(g.to_spec().separation["w"], Vec::<Vec<String>>::new());
    }

    #[test]
    fn paths_follow_the_extended_graph() {
        let g = SeparatedGraph::from_parts(
            &["v", "w"],
            &[("e", "v", "w")],
            &[("v", &[&["e"]])],
        )
        .unwrap();
        let e = g.edge("e").unwrap();
        let v = g.vertex("v").unwrap();
        let w = g.vertex("w").unwrap();
        assert_eq!(g.letter_src(Letter::star(e)), w);
        let p = GraphPath::new(&g, v, vec![Letter::fwd(e), Letter::star(e)]).unwrap();
        assert_eq!(p.range(&g), v);
        assert!(GraphPath::new(&g, v, vec![Letter::star(e)]).is_err());
        assert_eq!(p.adjoint(&g), p);
        assert_eq!(GraphPath::vertex(w).range(&g), w);
    }

    #[test]
    fn isomorphism_checks() {
        let g = crate::catalog::partial_isometry();
        assert!(check_isomorphism(&GraphMorphism::identity(&g), &g, &g));
        let mut f = GraphMorphism::identity(&g);
        f.edges.remove("alpha1");
        assert!(!check_isomorphism(&f, &g, &g));
        // swapping alpha1 <-> beta1 keeps endpoints but breaks the separation
        let mut f = GraphMorphism::identity(&g);
        f.edges.insert("alpha1".into(), "beta1".into());
        f.edges.insert("beta1".into(), "alpha1".into());
        assert!(!check_isomorphism(&f, &g, &g));
        // swapping the two sets wholesale is an automorphism
        let mut f = GraphMorphism::identity(&g);
        f.edges.insert("alpha1".into(), "beta1".into());
        f.edges.insert("beta1".into(), "alpha1".into());
        f.edges.insert("alpha2".into(), "beta2".into());
        f.edges.insert("beta2".into(), "alpha2".into());
        f.vertices.insert("w2".into(), "w3".into());
        f.vertices.insert("w3".into(), "w2".into());
        assert!(check_isomorphism(&f, &g, &g));
    }
}
