//! The canonical conditional expectation `P: L(E,C) → span{P_v}`.
//!
//! On a weakly reduced word `w`, `P(S_w) = N_w · P_{s(w)}`. A vertex has
//! `N = 1`, a word whose free label is not trivial or that has no peak
//! `e e*` has `N = 0`, and otherwise every peak is rewritten as
//! `(1/|X|)·P_v + β_e` simultaneously. The all-β term has expectation zero, so
//! by inclusion–exclusion
//!
//! `N(w) = Σ_{∅ ≠ T ⊆ peaks} (−1)^{|T|+1} Π_{i∈T} |X_i|⁻¹ · N(w ∖ T)`
//!
//! where `w ∖ T` deletes the peaks in `T`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::{Coeff, Rational};
use crate::error::{Error, Result};
use crate::graph::{GraphPath, Letter, SeparatedGraph};
use crate::leavitt::{Algebra, Element};

/// Evaluates `P` with a per-word cache.
#[derive(Debug)]
pub struct Expectation {
    alg: Arc<Algebra>,
    shortcut: bool,
    memo: Mutex<HashMap<Vec<Letter>, Rational>>,
}

impl Expectation {
    pub fn new(alg: &Arc<Algebra>) -> Self {
        Expectation { alg: alg.clone(), shortcut: true, memo: Mutex::default() }
    }

    /// Skips the free-label test, so every answer comes from the peak recursion.
    pub fn without_shortcut(alg: &Arc<Algebra>) -> Self {
        Expectation { shortcut: false, ..Self::new(alg) }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn expect(&self, x: &Element) -> Result<Element> {
        if **x.algebra() != *self.alg {
            return Err(Error::ContextMismatch);
        }
        let mut out = Element::zero(&self.alg);
        for (w, c) in x.terms() {
            let n = self.n_word(&w.steps);
            if !n.is_zero() {
                out.add_term(GraphPath::vertex(w.base), &c.scale(&n));
            }
        }
        Ok(out)
    }

    /// `N_w` for a composable word.
    pub fn n_word(&self, letters: &[Letter]) -> Rational {
        let Some(w) = weak_normalize(self.alg.graph(), letters) else {
            return Rational::zero();
        };
        if w.is_empty() {
            return Rational::one();
        }
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&w) {
            return hit.clone();
        }
        let n = self.compute(&w);
        self.memo.lock().expect("memo lock").insert(w, n.clone());
        n
    }

    fn compute(&self, w: &[Letter]) -> Rational {
        let g = self.alg.graph();
        if self.shortcut && !free_reduces_to_identity(w) {
            return Rational::zero();
        }
        let peaks: Vec<usize> =
            (0..w.len() - 1).filter(|&i| !w[i].star && w[i + 1] == w[i].adjoint()).collect();
        if peaks.is_empty() {
            return Rational::zero();
        }
        let mut total = Rational::zero();
        for mask in 1u64..(1u64 << peaks.len()) {
            let mut weight = Rational::one();
            let mut drop = vec![false; w.len()];
            for (bit, &i) in peaks.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    weight /= Rational::from_integer(BigInt::from(g.set_size(w[i].edge)));
                    drop[i] = true;
                    drop[i + 1] = true;
                }
            }
            let rest: Vec<Letter> = w.iter().zip(&drop).filter(|(_, &d)| !d).map(|(l, _)| *l).collect();
            let term = weight * self.n_word(&rest);
            if mask.count_ones() % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
}

/// Applies `e*e → ·`, `e*f → 0` (same set) and `ee* → ·` (singleton set) until none applies.
pub fn weak_normalize(graph: &SeparatedGraph, letters: &[Letter]) -> Option<Vec<Letter>> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if let Some(&top) = out.last() {
            if top.star && !l.star && graph.set_of(top.edge) == graph.set_of(l.edge) {
                if top.edge != l.edge {
                    return None;
                }
                out.pop();
                continue;
            }
            if !top.star && l == top.adjoint() && graph.set_size(top.edge) == 1 {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    Some(out)
}

/// Whether the word is trivial in the free group on the edges.
fn free_reduces_to_identity(letters: &[Letter]) -> bool {
    let mut stack: Vec<Letter> = Vec::new();
    for &l in letters {
        if stack.last() == Some(&l.adjoint()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack.is_empty()
}

/// `P(x)` with a fresh cache.
pub fn expect(x: &Element) -> Element {
    Expectation::new(x.algebra()).expect(x).expect("same algebra")
}

/// `n_μ = (Π |s⁻¹(s(μᵢ))|)⁻¹` for a forward path.
pub fn n_mu(graph: &SeparatedGraph, mu: &GraphPath) -> Result<Rational> {
    if !mu.is_forward() {
        return Err(Error::MalformedPath("expected a forward path".into()));
    }
    Ok(mu.steps.iter().fold(Rational::one(), |acc, l| {
        acc / Rational::from_integer(BigInt::from(graph.out_edges(graph.src(l.edge)).len()))
    }))
}

/// The expectation of `S_μ S_ν*` on an ordinary graph: `n_μ·P_{s(μ)}` if `μ = ν`, else 0.
pub fn phi_ordinary(alg: &Arc<Algebra>, mu: &GraphPath, nu: &GraphPath) -> Result<Element> {
    let g = alg.graph();
    if let Some(v) = g.vertex_ids().find(|&v| g.sets_at(v).len() > 1) {
        return Err(Error::NotOrdinary(g.vertex_name(v).to_string()));
    }
    if !mu.is_forward() || !nu.is_forward() {
        return Err(Error::MalformedPath("expected forward paths".into()));
    }
    if mu.range(g) != nu.range(g) {
        return Err(Error::MalformedPath("paths must share their range".into()));
    }
    if mu != nu {
        return Ok(Element::zero(alg));
    }
    let n = n_mu(g, mu)?;
    let mut out = Element::zero(alg);
    out.add_term(GraphPath::vertex(mu.base), &Coeff::real(n));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::VertexId;

    #[test]
    fn vertices_are_fixed() {
        let alg = Algebra::with_default_choice(catalog::cuntz(2));
        let pv = Element::vertex(&alg, VertexId(0));
        assert_eq!(expect(&pv), pv);
    }

    #[test]
    fn nontrivial_free_words_vanish() {
        let alg = Algebra::with_default_choice(catalog::cuntz(2));
        for w in ["a1", "a1 a2*", "a2* a1 a1"] {
            let x = Element::parse(&alg, w).unwrap();
            assert!(expect(&x).is_zero());
            assert!(Expectation::without_shortcut(&alg).expect(&x).unwrap().is_zero());
        }
    }

    #[test]
    fn beta_one_projection_is_half() {
        let g = catalog::partial_isometry();
        let alg = Algebra::with_default_choice(g.clone());
        let x = Element::parse(&alg, "beta1 beta1*").unwrap();
        assert_eq!(expect(&x), Element::parse(&alg, "1/2 * @v").unwrap());
    }

    #[test]
    fn three_edge_set_gives_a_third() {
        let g = catalog::emn(1, 3);
        let alg = Algebra::with_default_choice(g.clone());
        for e in ["e1", "e2", "e3"] {
            let x = Element::parse(&alg, &format!("{e} {e}*")).unwrap();
            assert_eq!(expect(&x), Element::parse(&alg, "1/3 * @v").unwrap());
        }
    }

    #[test]
    fn n_mu_product_formula() {
        let g = SeparatedGraph::ordinary(
            &["u".into(), "v".into(), "w".into()],
            &[
                ("e1".into(), "u".into(), "v".into()),
                ("x".into(), "u".into(), "w".into()),
                ("e2".into(), "v".into(), "w".into()),
                ("y".into(), "v".into(), "u".into()),
                ("z".into(), "v".into(), "v".into()),
            ],
        )
        .unwrap();
        let mu = GraphPath::forward(&g, &["e1", "e2"]).unwrap();
        assert_eq!(n_mu(&g, &mu).unwrap(), Rational::new(1.into(), 6.into()));
        let alg = Algebra::with_default_choice(g.clone());
        let nu = GraphPath::forward(&g, &["x"]).unwrap();
        assert!(phi_ordinary(&alg, &mu, &nu).unwrap().is_zero());
        let empty = GraphPath::vertex(g.vertex("u").unwrap());
        assert_eq!(phi_ordinary(&alg, &empty, &empty).unwrap(), Element::vertex(&alg, empty.base));
    }

    #[test]
    fn phi_needs_an_ordinary_graph() {
        let g = catalog::emn(1, 2);
        let alg = Algebra::with_default_choice(g.clone());
        let v = GraphPath::vertex(g.vertex("v").unwrap());
        assert!(matches!(phi_ordinary(&alg, &v, &v), Err(Error::NotOrdinary(_))));
    }
}
