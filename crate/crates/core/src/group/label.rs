use std::collections::BTreeMap;

use serde_json::Value;

use super::{GroupElement, GroupSpec};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, GraphPath, Letter, SeparatedGraph};

/// A labeling `c: E¹ → G`, extended to paths of `Ê` by `c(e*) = c(e)⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    group: GroupSpec,
    values: Vec<GroupElement>,
    names: Vec<String>,
}

impl Labeling {
    /// The free label: every edge goes to its own generator of the free group on `E¹`.
    pub fn free(graph: &SeparatedGraph) -> Self {
        let names: Vec<String> = graph.edge_ids().map(|e| graph.edge_name(e).to_string()).collect();
        let values = names.iter().map(|n| GroupElement::generator(n)).collect();
        Labeling { group: GroupSpec::Free { generators: names.clone() }, values, names }
    }

    pub fn new(graph: &SeparatedGraph, group: GroupSpec, map: &BTreeMap<String, GroupElement>) -> Result<Self> {
        for name in map.keys() {
            graph.edge(name)?;
        }
        let mut values = Vec::with_capacity(graph.edge_count());
        let mut names = Vec::with_capacity(graph.edge_count());
        for e in graph.edge_ids() {
            let name = graph.edge_name(e);
            let g = map.get(name).ok_or_else(|| Error::MissingLabel(name.to_string()))?;
            if !group.contains(g) {
                return Err(Error::NotInGroup { element: g.to_string(), group: group.to_string() });
            }
            values.push(g.clone());
            names.push(name.to_string());
        }
        Ok(Labeling { group, values, names })
    }

    /// Labels given positionally, one per edge in graph order.
    pub fn from_values(graph: &SeparatedGraph, group: GroupSpec, values: Vec<GroupElement>) -> Result<Self> {
        let map = graph
            .edge_ids()
            .zip(values)
            .map(|(e, g)| (graph.edge_name(e).to_string(), g))
            .collect();
        Labeling::new(graph, group, &map)
    }

    /// Reads `{"edge_id": <element literal>, ...}`.
    pub fn from_json(graph: &SeparatedGraph, group: GroupSpec, json: &Value) -> Result<Self> {
        let Value::Object(obj) = json else {
            return Err(Error::parse(0, "a labeling must be a JSON object"));
        };
        let map = obj
            .iter()
            .map(|(k, v)| Ok((k.clone(), group.element_from_json(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Labeling::new(graph, group, &map)
    }

    pub fn to_json(&self) -> Value {
        Value::Object(
            self.names
                .iter()
                .zip(&self.values)
                .map(|(n, g)| (n.clone(), self.group.element_to_json(g)))
                .collect(),
        )
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn value(&self, e: EdgeId) -> Result<&GroupElement> {
        self.values
            .get(e.index())
            .ok_or_else(|| Error::MissingLabel(format!("#{}", e.index())))
    }

    pub fn values(&self) -> &[GroupElement] {
        &self.values
    }

    pub fn of_letter(&self, l: Letter) -> Result<GroupElement> {
        let g = self.value(l.edge)?;
        if l.star {
            self.group.inv(g)
        } else {
            Ok(g.clone())
        }
    }

    /// `c(l₁⋯lₙ) = c(l₁)⋯c(lₙ)`; the empty product is the identity.
    pub fn of_letters(&self, letters: &[Letter]) -> Result<GroupElement> {
        letters.iter().try_fold(self.group.identity(), |acc, &l| {
            let g = self.of_letter(l)?;
            self.group.mul(&acc, &g)
        })
    }

    pub fn label_of_path(&self, path: &GraphPath) -> Result<GroupElement> {
        self.of_letters(&path.steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn empty_path_has_trivial_label() {
        let g = catalog::cuntz(2);
        let c = Labeling::free(&g);
        let v = g.vertex("v").unwrap();
        assert_eq!(c.label_of_path(&GraphPath::vertex(v)).unwrap(), c.group().identity());
    }

    #[test]
    fn edge_then_its_adjoint_cancels() {
        let g = catalog::cuntz(2);
        let c = Labeling::free(&g);
        let a = g.edge("a1").unwrap();
        assert_eq!(c.of_letters(&[Letter::fwd(a), Letter::star(a)]).unwrap(), c.group().identity());
    }

    #[test]
    fn free_label_of_mixed_path() {
        let g = catalog::emn(1, 2);
        let c = Labeling::free(&g);
        let e = g.edge("e1").unwrap();
        let f = g.edge("f1").unwrap();
        let word = c.of_letters(&[Letter::fwd(e), Letter::star(f)]).unwrap();
        assert_eq!(word.to_string(), "e1 f1^-1");
    }

    #[test]
    fn missing_labels_are_reported() {
        let g = catalog::cuntz(2);
        let mut map = BTreeMap::new();
        map.insert("a1".to_string(), GroupSpec::zmod(3).parse_element("1").unwrap());
        assert!(matches!(
            Labeling::new(&g, GroupSpec::zmod(3), &map),
            Err(Error::MissingLabel(e)) if e == "a2"
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = catalog::cuntz(2);
        let json = serde_json::json!({"a1": 1, "a2": 2});
        let c = Labeling::from_json(&g, GroupSpec::zmod(3), &json).unwrap();
        assert_eq!(c.to_json(), json);
    }
}
