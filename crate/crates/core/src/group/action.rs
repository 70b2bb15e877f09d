use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use super::{FiniteGroup, GroupSpec, Labeling};
use crate::construct::{quotient_graph, skew_product, Quotient, SkewProduct};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, GraphMorphism, SeparatedGraph, VertexId};

/// One way in which a table fails to be an action by separated-graph automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionViolation {
    WrongSize { element: String },
    NotPermutation { element: String },
    IdentityMoves { id: String },
    NotHomomorphism { left: String, right: String },
    SourceMismatch { element: String, edge: String },
    RangeMismatch { element: String, edge: String },
    SeparationBroken { element: String, vertex: String },
}

impl fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionViolation::WrongSize { element } => write!(f, "table of {element} has the wrong size"),
            ActionViolation::NotPermutation { element } => write!(f, "{element} does not act bijectively"),
            ActionViolation::IdentityMoves { id } => write!(f, "the identity moves `{id}`"),
            ActionViolation::NotHomomorphism { left, right } => {
                write!(f, "acting by {left} then {right} differs from their product")
            }
            ActionViolation::SourceMismatch { element, edge } => {
                write!(f, "{element} does not commute with the source of `{edge}`")
            }
            ActionViolation::RangeMismatch { element, edge } => {
                write!(f, "{element} does not commute with the range of `{edge}`")
            }
            ActionViolation::SeparationBroken { element, vertex } => {
                write!(f, "{element} does not carry the separation at `{vertex}` onto a separation")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActionReport {
    pub violations: Vec<ActionViolation>,
}

impl ActionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ActionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A finite group acting on a separated graph, stored as one permutation of
/// vertices and one of edges per group element.
#[derive(Clone, Debug)]
pub struct GraphAction {
    group: FiniteGroup,
    vertex_perm: Vec<Vec<VertexId>>,
    edge_perm: Vec<Vec<EdgeId>>,
}

impl GraphAction {
    /// Tables are indexed by group element. Only the shape is checked here;
    /// use [`check`](Self::check) for the action axioms.
    pub fn from_tables(
        graph: &SeparatedGraph,
        group: FiniteGroup,
        vertex_perm: Vec<Vec<VertexId>>,
        edge_perm: Vec<Vec<EdgeId>>,
    ) -> Result<Self> {
        let report = ActionReport {
            violations: (0..group.len())
                .filter(|&g| {
                    vertex_perm.get(g).is_none_or(|p| p.len() != graph.vertex_count())
                        || edge_perm.get(g).is_none_or(|p| p.len() != graph.edge_count())
                })
                .map(|g| ActionViolation::WrongSize { element: group.element(g).to_string() })
                .collect(),
        };
        if vertex_perm.len() != group.len() || edge_perm.len() != group.len() || !report.is_valid() {
            return Err(Error::InvalidAction(report));
        }
        Ok(GraphAction { group, vertex_perm, edge_perm })
    }

    /// The trivial group acting trivially.
    pub fn trivial(graph: &SeparatedGraph) -> Self {
        let group = FiniteGroup::new(&GroupSpec::zmod(1)).expect("trivial group");
        GraphAction {
            group,
            vertex_perm: vec![graph.vertex_ids().collect()],
            edge_perm: vec![graph.edge_ids().collect()],
        }
    }

    /// Reads `{"group": .., "table": {"<element>": {"vertices": {..}, "edges": {..}}}}`.
    pub fn from_json(graph: &SeparatedGraph, json: &Value) -> Result<Self> {
        let spec: GroupSpec = serde_json::from_value(
            json.get("group").cloned().ok_or_else(|| Error::parse(0, "action needs a `group`"))?,
        )?;
        let group = FiniteGroup::new(&spec)?;
        let Some(Value::Object(table)) = json.get("table") else {
            return Err(Error::parse(0, "action needs a `table` object"));
        };
        let mut rows: BTreeMap<usize, &Value> = BTreeMap::new();
        for (key, row) in table {
            let g = group.index_of(&spec.parse_element(key)?)?;
            if rows.insert(g, row).is_some() {
                return Err(Error::parse(0, format!("element `{key}` appears twice")));
            }
        }
        let mut vertex_perm = Vec::with_capacity(group.len());
        let mut edge_perm = Vec::with_capacity(group.len());
        for g in 0..group.len() {
            let name = group.element(g).to_string();
            let row = rows.get(&g).ok_or_else(|| Error::parse(0, format!("no table entry for `{name}`")))?;
            let lookup = |field: &str, id: &str| -> Result<String> {
                row.get(field)
                    .and_then(|m| m.get(id))
                    .and_then(Value::as_str)
                    .map(str::to_string)
                    .ok_or_else(|| Error::parse(0, format!("`{name}` does not say where `{id}` goes")))
            };
            vertex_perm.push(
                graph
                    .vertex_ids()
                    .map(|v| graph.vertex(&lookup("vertices", graph.vertex_name(v))?))
                    .collect::<Result<Vec<_>>>()?,
            );
            edge_perm.push(
                graph
                    .edge_ids()
                    .map(|e| graph.edge(&lookup("edges", graph.edge_name(e))?))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        GraphAction::from_tables(graph, group, vertex_perm, edge_perm)
    }

    pub fn to_json(&self, graph: &SeparatedGraph) -> Value {
        let mut table = Map::new();
        for g in 0..self.group.len() {
            let vertices: Map<String, Value> = graph
                .vertex_ids()
                .map(|v| (graph.vertex_name(v).to_string(), json!(graph.vertex_name(self.vertex(g, v)))))
                .collect();
            let edges: Map<String, Value> = graph
                .edge_ids()
                .map(|e| (graph.edge_name(e).to_string(), json!(graph.edge_name(self.edge(g, e)))))
                .collect();
            table.insert(self.group.element(g).to_string(), json!({"vertices": vertices, "edges": edges}));
        }
        json!({"group": serde_json::to_value(self.group.spec()).expect("group specs serialize"), "table": table})
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn vertex(&self, g: usize, v: VertexId) -> VertexId {
        self.vertex_perm[g][v.index()]
    }

    pub fn edge(&self, g: usize, e: EdgeId) -> EdgeId {
        self.edge_perm[g][e.index()]
    }

    /// Checks bijectivity, the identity and product laws, compatibility with
    /// `s` and `r`, and that every `X ∈ C_v` is sent onto some `Y ∈ C_{g·v}`.
    pub fn check(&self, graph: &SeparatedGraph) -> ActionReport {
        let mut out = Vec::new();
        let grp = &self.group;
        let name = |g: usize| grp.element(g).to_string();
        for g in 0..grp.len() {
            let mut seen_v = vec![false; graph.vertex_count()];
            let mut seen_e = vec![false; graph.edge_count()];
            let bij = self.vertex_perm[g].iter().all(|v| !std::mem::replace(&mut seen_v[v.index()], true))
                && self.edge_perm[g].iter().all(|e| !std::mem::replace(&mut seen_e[e.index()], true));
            if !bij {
                out.push(ActionViolation::NotPermutation { element: name(g) });
            }
        }
        let id = grp.identity();
        for v in graph.vertex_ids() {
            if self.vertex(id, v) != v {
                out.push(ActionViolation::IdentityMoves { id: graph.vertex_name(v).to_string() });
            }
        }
        for e in graph.edge_ids() {
            if self.edge(id, e) != e {
                out.push(ActionViolation::IdentityMoves { id: graph.edge_name(e).to_string() });
            }
        }
        for a in 0..grp.len() {
            for b in 0..grp.len() {
                let ab = grp.mul(a, b);
                let ok = graph.vertex_ids().all(|v| self.vertex(ab, v) == self.vertex(a, self.vertex(b, v)))
                    && graph.edge_ids().all(|e| self.edge(ab, e) == self.edge(a, self.edge(b, e)));
                if !ok {
                    out.push(ActionViolation::NotHomomorphism { left: name(b), right: name(a) });
                }
            }
        }
        for g in 0..grp.len() {
            for e in graph.edge_ids() {
                let ge = self.edge(g, e);
                if graph.src(ge) != self.vertex(g, graph.src(e)) {
                    out.push(ActionViolation::SourceMismatch { element: name(g), edge: graph.edge_name(e).to_string() });
                }
                if graph.dst(ge) != self.vertex(g, graph.dst(e)) {
                    out.push(ActionViolation::RangeMismatch { element: name(g), edge: graph.edge_name(e).to_string() });
                }
            }
            for v in graph.vertex_ids() {
                let gv = self.vertex(g, v);
                let preserved = graph.sets_at(v).iter().all(|&s| {
                    let mut image: Vec<EdgeId> = graph.set(s).edges.iter().map(|&e| self.edge(g, e)).collect();
                    image.sort();
                    graph.sets_at(gv).iter().any(|&t| {
                        let mut target = graph.set(t).edges.clone();
                        target.sort();
                        target == image
                    })
                });
                if !preserved || graph.sets_at(v).len() != graph.sets_at(gv).len() {
                    out.push(ActionViolation::SeparationBroken { element: name(g), vertex: graph.vertex_name(v).to_string() });
                }
            }
        }
        ActionReport { violations: out }
    }

    /// A non-identity element fixing a vertex, if any.
    pub fn fixed_point(&self) -> Option<(usize, VertexId)> {
        let id = self.group.identity();
        (0..self.group.len()).filter(|&g| g != id).find_map(|g| {
            self.vertex_perm[g]
                .iter()
                .enumerate()
                .find(|&(i, v)| v.index() == i)
                .map(|(i, _)| (g, VertexId(i as u32)))
        })
    }

    /// Freeness on vertices; edges then have trivial stabilisers too.
    pub fn is_free(&self) -> bool {
        self.fixed_point().is_none()
    }

    /// Vertex orbits in order of their first member.
    pub fn vertex_orbits(&self) -> Vec<Vec<VertexId>> {
        orbits(&self.vertex_perm, VertexId::index)
    }

    pub fn edge_orbits(&self) -> Vec<Vec<EdgeId>> {
        orbits(&self.edge_perm, EdgeId::index)
    }
}

fn orbits<T: Copy + Ord>(perm: &[Vec<T>], index: impl Fn(T) -> usize) -> Vec<Vec<T>> {
    let n = perm.first().map_or(0, Vec::len);
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut orbit: Vec<T> = perm.iter().map(|p| p[i]).collect();
        orbit.sort();
        orbit.dedup();
        for &x in &orbit {
            seen[index(x)] = true;
        }
        out.push(orbit);
    }
    out
}

/// The data of the Gross–Tucker theorem for a free action: the quotient, a
/// labeling on it and the isomorphism `E/G ×_c G ≅ E`.
#[derive(Clone, Debug)]
pub struct GrossTucker {
    pub quotient: Quotient,
    pub label: Labeling,
    pub skew: SkewProduct,
    /// Skew-product ids to ids of the input graph.
    pub iso: GraphMorphism,
    /// Chosen representative `v_x` of each vertex orbit.
    pub base_vertices: Vec<VertexId>,
}

/// For a free action, recovers `E` as a skew product of its quotient.
///
/// The base vertex of an orbit is its lexicographically smallest member, the
/// representative of an edge orbit is its member leaving a base vertex, and
/// `c([e]) = h` where `r(ê) = h·v_{[r(e)]}`.
pub fn gross_tucker(graph: &SeparatedGraph, action: &GraphAction) -> Result<GrossTucker> {
    let quotient = quotient_graph(graph, action)?;
    if let Some((g, v)) = action.fixed_point() {
        return Err(Error::NotFree {
            element: action.group().element(g).to_string(),
            vertex: graph.vertex_name(v).to_string(),
        });
    }
    let grp = action.group();
    let q = &quotient.graph;
    let base_vertices: Vec<VertexId> = q.vertex_ids().map(|x| graph.vertex(q.vertex_name(x))).collect::<Result<_>>()?;
    // position[u] = (orbit, h) with u = h·v_orbit
    let mut position = vec![(VertexId(0), 0usize); graph.vertex_count()];
    for (x, &vx) in base_vertices.iter().enumerate() {
        for h in 0..grp.len() {
            position[action.vertex(h, vx).index()] = (VertexId(x as u32), h);
        }
    }
    let mut rep = vec![None; q.edge_count()];
    for e in graph.edge_ids() {
        let class = quotient.edge_class[e.index()];
        if position[graph.src(e).index()].1 == grp.identity() {
            rep[class.index()] = Some(e);
        }
    }
    let rep: Vec<EdgeId> = rep.into_iter().map(|r| r.expect("every edge orbit leaves a base vertex")).collect();
    let labels: BTreeMap<String, _> = q
        .edge_ids()
        .map(|c| {
            let h = position[graph.dst(rep[c.index()]).index()].1;
            (q.edge_name(c).to_string(), grp.element(h).clone())
        })
        .collect();
    let label = Labeling::new(q, grp.spec().clone(), &labels)?;
    let skew = skew_product(q, &label)?;
    let s = skew.graph();
    let mut iso = GraphMorphism::default();
    for x in q.vertex_ids() {
        for g in 0..grp.len() {
            let target = action.vertex(g, base_vertices[x.index()]);
            iso.vertices.insert(s.vertex_name(skew.vertex(x, g)).to_string(), graph.vertex_name(target).to_string());
        }
    }
    for c in q.edge_ids() {
        for g in 0..grp.len() {
            let target = action.edge(g, rep[c.index()]);
            iso.edges.insert(s.edge_name(skew.edge(c, g)).to_string(), graph.edge_name(target).to_string());
        }
    }
    Ok(GrossTucker { quotient, label, skew, iso, base_vertices })
}

impl GrossTucker {
    /// `iso ∘ γ_z = z · iso` on every vertex and edge.
    pub fn is_equivariant(&self, graph: &SeparatedGraph, action: &GraphAction) -> Result<bool> {
        let s = self.skew.graph();
        let translation = self.skew.translation();
        let grp = action.group();
        for z in 0..grp.len() {
            for x in s.vertex_ids() {
                let lhs = graph.vertex(&self.iso.vertices[s.vertex_name(translation.vertex(z, x))])?;
                let rhs = action.vertex(z, graph.vertex(&self.iso.vertices[s.vertex_name(x)])?);
                if lhs != rhs {
                    return Ok(false);
                }
            }
            for e in s.edge_ids() {
                let lhs = graph.edge(&self.iso.edges[s.edge_name(translation.edge(z, e))])?;
                let rhs = action.edge(z, graph.edge(&self.iso.edges[s.edge_name(e)])?);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::check_isomorphism;

    #[test]
    fn swap_action_is_valid_and_free() {
        let (g, action) = catalog::two_cycle_swap();
        assert!(action.check(&g).is_valid());
        assert!(action.is_free());
        assert_eq!(action.vertex_orbits().len(), 1);
    }

    #[test]
    fn json_round_trip() {
        let (g, action) = catalog::two_cycle_swap();
        let back = GraphAction::from_json(&g, &action.to_json(&g)).unwrap();
        assert_eq!(back.vertex_perm, action.vertex_perm);
        assert_eq!(back.edge_perm, action.edge_perm);
    }

    #[test]
    fn broken_source_is_reported() {
        let (g, action) = catalog::two_cycle_swap();
        let mut json = action.to_json(&g);
        // keep vertices fixed while edges swap
        for row in json["table"].as_object_mut().unwrap().values_mut() {
            for (k, v) in row["vertices"].as_object_mut().unwrap().iter_mut() {
                *v = Value::String(k.clone());
            }
        }
        let bad = GraphAction::from_json(&g, &json).unwrap();
        let report = bad.check(&g);
        assert!(report.violations.iter().any(|v| matches!(v, ActionViolation::SourceMismatch { .. })));
    }

    #[test]
    fn gross_tucker_on_a_cycle() {
        let (g, action) = catalog::two_cycle_swap();
        let gt = gross_tucker(&g, &action).unwrap();
        assert!(check_isomorphism(&gt.iso, gt.skew.graph(), &g));
        assert!(gt.is_equivariant(&g, &action).unwrap());
    }

    #[test]
    fn trivial_action_is_not_free_on_nonempty_graphs() {
        let g = catalog::cuntz(2);
        let mut t = GraphAction::trivial(&g);
        assert!(t.is_free());
        t.group = FiniteGroup::new(&GroupSpec::zmod(2)).unwrap();
        t.vertex_perm.push(t.vertex_perm[0].clone());
        t.edge_perm.push(t.edge_perm[0].clone());
        assert!(t.check(&g).is_valid());
        assert!(matches!(gross_tucker(&g, &t), Err(Error::NotFree { .. })));
    }
}
