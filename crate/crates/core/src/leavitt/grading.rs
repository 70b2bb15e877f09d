use std::collections::BTreeMap;

use super::Element;
use crate::error::{Error, Result};
use crate::graph::{GraphPath, Letter};
use crate::group::{GraphAction, GroupElement, Labeling};

/// The degree `c(w)` of a basis word; vertices have degree 1.
pub fn degree(word: &GraphPath, label: &Labeling) -> Result<GroupElement> {
    label.label_of_path(word)
}

/// The spectral projection `E_g`: the terms of degree `g`.
pub fn component(x: &Element, g: &GroupElement, label: &Labeling) -> Result<Element> {
    let mut err = None;
    let out = x.filter(|w| match degree(w, label) {
        Ok(d) => &d == g,
        Err(e) => {
            err.get_or_insert(e);
            false
        }
    });
    err.map_or(Ok(out), Err)
}

/// Splits `x` into its nonzero homogeneous components.
pub fn decompose(x: &Element, label: &Labeling) -> Result<BTreeMap<GroupElement, Element>> {
    let mut out: BTreeMap<GroupElement, Element> = BTreeMap::new();
    for (w, c) in x.terms() {
        let d = degree(w, label)?;
        out.entry(d).or_insert_with(|| Element::zero(x.algebra())).add_term(w.clone(), c);
    }
    Ok(out)
}

/// The degree of `x` if it is nonzero and homogeneous.
pub fn is_homogeneous(x: &Element, label: &Labeling) -> Result<Option<GroupElement>> {
    let parts = decompose(x, label)?;
    Ok(if parts.len() == 1 { parts.into_keys().next() } else { None })
}

/// `α_g`, induced by `P_v ↦ P_{g·v}` and `S_e ↦ S_{g·e}`.
///
/// Relabelled words are reduced again since `g·e_X` need not be `e_{g·X}`.
pub fn induced_automorphism(action: &GraphAction, g: &GroupElement, x: &Element) -> Result<Element> {
    let alg = x.algebra();
    let graph = alg.graph();
    let report = action.check(graph);
    if !report.is_valid() {
        return Err(Error::InvalidAction(report));
    }
    let gi = action.group().index_of(g)?;
    Ok(x.map_words(alg, |w| GraphPath {
        base: action.vertex(gi, w.base),
        steps: w.steps.iter().map(|l| Letter { edge: action.edge(gi, l.edge), star: l.star }).collect(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::GroupSpec;
    use crate::leavitt::Algebra;

    #[test]
    fn vertices_live_in_the_unit_fiber() {
        let g = catalog::cuntz(2);
        let alg = Algebra::with_default_choice(g.clone());
        let c = Labeling::free(&g);
        let pv = Element::parse(&alg, "@v").unwrap();
        assert_eq!(component(&pv, &c.group().identity(), &c).unwrap(), pv);
        let a1 = GroupElement::generator("a1");
        assert!(component(&pv, &a1, &c).unwrap().is_zero());
    }

    #[test]
    fn generators_split_by_free_degree() {
        let g = catalog::cuntz(2);
        let alg = Algebra::with_default_choice(g.clone());
        let c = Labeling::free(&g);
        let x = Element::parse(&alg, "a1 + a2").unwrap();
        let part = component(&x, &GroupElement::generator("a1"), &c).unwrap();
        assert_eq!(part, Element::parse(&alg, "a1").unwrap());
        assert_eq!(decompose(&x, &c).unwrap().len(), 2);
    }

    #[test]
    fn z3_degree_sums_labels() {
        let g = catalog::two_set_loops(1, 1);
        let grp = GroupSpec::zmod(3);
        let one = grp.parse_element("1").unwrap();
        let c = Labeling::from_values(&g, grp, vec![one.clone(), one.clone()]).unwrap();
        let w = GraphPath::new(
            &g,
            g.vertex("v").unwrap(),
            vec![Letter::fwd(g.edge("e1").unwrap()), Letter::fwd(g.edge("e1").unwrap()), Letter::star(g.edge("f1").unwrap())],
        )
        .unwrap();
        assert_eq!(degree(&w, &c).unwrap(), one);
    }

    #[test]
    fn identity_acts_trivially() {
        let (g, action) = catalog::two_cycle_swap();
        let alg = Algebra::with_default_choice(g.clone());
        let x = Element::parse(&alg, "2 * a b + 1/3 * @w").unwrap();
        let id = action.group().element(action.group().identity()).clone();
        assert_eq!(induced_automorphism(&action, &id, &x).unwrap(), x);
        let swap = action.group().element(1).clone();
        assert_eq!(
            induced_automorphism(&action, &swap, &x).unwrap(),
            Element::parse(&alg, "2 * b a + 1/3 * @v").unwrap()
        );
    }
}
