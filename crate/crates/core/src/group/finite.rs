use std::collections::HashMap;

use super::{GroupElement, GroupSpec};
use crate::error::{Error, Result};

/// Groups up to this order get a full Cayley table.
const MAX_ORDER: usize = 4096;

/// An enumerated finite group with its multiplication table.
///
/// Elements are addressed by their position in [`GroupSpec::elements`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    spec: GroupSpec,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    table: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let elements = spec.elements()?;
        if elements.len() > MAX_ORDER {
            return Err(Error::UnsupportedGroup(format!("{spec} (order above {MAX_ORDER})")));
        }
        let index: HashMap<GroupElement, usize> =
            elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&spec.mul(a, b)?]);
            }
        }
        let inverse = elements
            .iter()
            .map(|a| spec.inv(a).map(|i| index[&i]))
            .collect::<Result<Vec<_>>>()?;
        let identity = index[&spec.identity()];
        Ok(FiniteGroup { spec: spec.clone(), elements, index, table, inverse, identity })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        self.index.get(g).copied().ok_or_else(|| Error::NotInGroup {
            element: g.to_string(),
            group: self.spec.to_string(),
        })
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_table() {
        let g = FiniteGroup::new(&"product(zmod:2,zmod:2)".parse().unwrap()).unwrap();
        assert_eq!(g.len(), 4);
        for a in 0..4 {
            assert_eq!(g.mul(a, a), g.identity());
            assert_eq!(g.inv(a), a);
        }
    }

    #[test]
    fn infinite_groups_are_refused() {
        assert!(matches!(FiniteGroup::new(&GroupSpec::Z), Err(Error::UnsupportedGroup(_))));
    }
}
