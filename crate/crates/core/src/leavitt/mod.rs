//! Normal-form arithmetic in the Leavitt path algebra `L(E,C)`.
//!
//! Elements are finite combinations of C-separated reduced words: words over
//! `Ê` containing no `e*f` with `e, f` in one set and no `e_X e_X*`. Any word
//! is brought to that basis by the rewriting system
//!
//! * `e*e → r(e)`
//! * `e*f → 0` for `e ≠ f` in the same set
//! * `e_X e_X* → s(e_X) − Σ_{f ∈ X∖e_X} f f*`
//!
//! and non-composable concatenations are zero.

mod element;
mod grading;
mod literal;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, GraphPath, Letter, SeparatedGraph, SetId, VertexId};

pub use element::Element;
pub use grading::{component, decompose, degree, induced_automorphism, is_homogeneous};
pub use literal::format_word;

/// The representative `e_X` of every separation set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExChoice {
    chosen: Vec<EdgeId>,
    is_chosen: Vec<bool>,
}

impl ExChoice {
    /// Picks the lexicographically smallest edge id of each set.
    pub fn lexicographic(graph: &SeparatedGraph) -> Self {
        let chosen = graph
            .sets()
            .iter()
            .map(|x| *x.edges.iter().min_by_key(|&&e| graph.edge_name(e)).expect("sets are nonempty"))
            .collect();
        Self::from_chosen(graph, chosen)
    }

    /// Picks the last edge of each set in input order; a second canonical choice.
    pub fn last(graph: &SeparatedGraph) -> Self {
        let chosen = graph.sets().iter().map(|x| *x.edges.last().expect("sets are nonempty")).collect();
        Self::from_chosen(graph, chosen)
    }

    /// One edge per set, indexed by [`SetId`].
    pub fn from_edges(graph: &SeparatedGraph, chosen: Vec<EdgeId>) -> Result<Self> {
        if chosen.len() != graph.sets().len() {
            return Err(Error::parse(0, "one chosen edge is needed per separation set"));
        }
        for (i, &e) in chosen.iter().enumerate() {
            if graph.set_of(e) != SetId(i as u32) {
                return Err(Error::InvalidChoice { edge: graph.edge_name(e).to_string() });
            }
        }
        Ok(Self::from_chosen(graph, chosen))
    }

    /// Reads `{"v": ["e2", "f1"], ...}`: the i-th id is `e_X` for the i-th set at `v`.
    /// Sets that are not mentioned keep the lexicographic choice.
    pub fn from_json(graph: &SeparatedGraph, json: &Value) -> Result<Self> {
        let Value::Object(obj) = json else {
            return Err(Error::parse(0, "an edge choice must be a JSON object"));
        };
        let mut chosen = Self::lexicographic(graph).chosen;
        for (v, picks) in obj {
            let vid = graph.vertex(v)?;
            let Value::Array(picks) = picks else {
                return Err(Error::parse(0, format!("choice at `{v}` must be a list")));
            };
            if picks.len() > graph.sets_at(vid).len() {
                return Err(Error::parse(0, format!("`{v}` has only {} sets", graph.sets_at(vid).len())));
            }
            for (&s, pick) in graph.sets_at(vid).iter().zip(picks) {
                let name = pick.as_str().ok_or_else(|| Error::parse(0, "edge ids are strings"))?;
                let e = graph.edge(name)?;
                if graph.set_of(e) != s {
                    return Err(Error::InvalidChoice { edge: name.to_string() });
                }
                chosen[s.index()] = e;
            }
        }
        Ok(Self::from_chosen(graph, chosen))
    }

    pub fn to_json(&self, graph: &SeparatedGraph) -> Value {
        Value::Object(
            graph
                .vertex_ids()
                .filter(|&v| !graph.is_sink(v))
                .map(|v| {
                    let picks = graph.sets_at(v).iter().map(|s| Value::from(graph.edge_name(self.chosen[s.index()])));
                    (graph.vertex_name(v).to_string(), Value::Array(picks.collect()))
                })
                .collect(),
        )
    }

    fn from_chosen(graph: &SeparatedGraph, chosen: Vec<EdgeId>) -> Self {
        let mut is_chosen = vec![false; graph.edge_count()];
        for &e in &chosen {
            is_chosen[e.index()] = true;
        }
        ExChoice { chosen, is_chosen }
    }

    pub fn chosen(&self, set: SetId) -> EdgeId {
        self.chosen[set.index()]
    }

    pub fn is_chosen(&self, e: EdgeId) -> bool {
        self.is_chosen[e.index()]
    }
}

/// Which redex the rewriting system contracts first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

enum Redex {
    Cancel,
    Kill,
    Expand,
}

type NormalForm = Arc<Vec<(GraphPath, BigInt)>>;

/// A separated graph with a fixed choice of `e_X`; the context of every [`Element`].
#[derive(Debug)]
pub struct Algebra {
    graph: SeparatedGraph,
    ex: ExChoice,
    memo: [Mutex<HashMap<GraphPath, NormalForm>>; 2],
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.ex == other.ex
    }
}

impl Algebra {
    pub fn new(graph: SeparatedGraph, ex: ExChoice) -> Result<Arc<Self>> {
        if ex.chosen.len() != graph.sets().len() || ex.is_chosen.len() != graph.edge_count() {
            return Err(Error::ContextMismatch);
        }
        for (i, &e) in ex.chosen.iter().enumerate() {
            if e.index() >= graph.edge_count() || graph.set_of(e) != SetId(i as u32) {
                return Err(Error::InvalidChoice { edge: format!("#{}", e.index()) });
            }
        }
        Ok(Arc::new(Algebra { graph, ex, memo: Default::default() }))
    }

    /// The algebra with the lexicographic choice of `e_X`.
    pub fn with_default_choice(graph: SeparatedGraph) -> Arc<Self> {
        let ex = ExChoice::lexicographic(&graph);
        Algebra::new(graph, ex).expect("the default choice is valid")
    }

    pub fn graph(&self) -> &SeparatedGraph {
        &self.graph
    }

    pub fn ex(&self) -> &ExChoice {
        &self.ex
    }

    /// Drops cached normal forms.
    pub fn clear_cache(&self) {
        for m in &self.memo {
            m.lock().expect("memo lock").clear();
        }
    }

    /// True iff the letters are composable and contain no forbidden pair.
    pub fn is_normal_letters(&self, letters: &[Letter]) -> bool {
        letters
            .windows(2)
            .all(|w| self.graph.letter_dst(w[0]) == self.graph.letter_src(w[1]) && self.redex(w[0], w[1]).is_none())
    }

    pub fn is_normal(&self, word: &GraphPath) -> bool {
        self.is_normal_letters(&word.steps)
    }

    fn redex(&self, a: Letter, b: Letter) -> Option<Redex> {
        let g = &self.graph;
        if a.star && !b.star && g.set_of(a.edge) == g.set_of(b.edge) {
            Some(if a.edge == b.edge { Redex::Cancel } else { Redex::Kill })
        } else if !a.star && b.star && a.edge == b.edge && self.ex.is_chosen(a.edge) {
            Some(Redex::Expand)
        } else {
            None
        }
    }

    fn find_redex(&self, letters: &[Letter], strategy: Strategy) -> Option<(usize, Redex)> {
        let found = |i: usize| self.redex(letters[i], letters[i + 1]).map(|r| (i, r));
        let n = letters.len().saturating_sub(1);
        match strategy {
            Strategy::Leftmost => (0..n).find_map(found),
            Strategy::Rightmost => (0..n).rev().find_map(found),
        }
    }

    /// The normal form of a composable word, with integer coefficients.
    pub(crate) fn normal_form(&self, word: &GraphPath, strategy: Strategy) -> NormalForm {
        let slot = &self.memo[strategy as usize];
        if let Some(hit) = slot.lock().expect("memo lock").get(word) {
            return hit.clone();
        }
        let result = match self.find_redex(&word.steps, strategy) {
            None => vec![(word.clone(), BigInt::one())],
            Some((i, redex)) => {
                let mut acc: BTreeMap<GraphPath, BigInt> = BTreeMap::new();
                let mut absorb = |w: GraphPath, sign: i32| {
                    for (u, c) in self.normal_form(&w, strategy).iter() {
                        let entry = acc.entry(u.clone()).or_default();
                        if sign > 0 {
                            *entry += c;
                        } else {
                            *entry -= c;
                        }
                    }
                };
                match redex {
                    Redex::Kill => {}
                    Redex::Cancel => absorb(splice(word, i, &[]), 1),
                    Redex::Expand => {
                        let e = word.steps[i].edge;
                        absorb(splice(word, i, &[]), 1);
                        for &f in &self.graph.set(self.graph.set_of(e)).edges {
                            if f != e {
                                absorb(splice(word, i, &[Letter::fwd(f), Letter::star(f)]), -1);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            }
        };
        let result = Arc::new(result);
        slot.lock().expect("memo lock").insert(word.clone(), result.clone());
        result
    }

    /// Reduces `base · l₁ ⋯ lₙ`; a non-composable word gives zero.
    pub fn reduce(self: &Arc<Self>, base: VertexId, letters: &[Letter]) -> Element {
        self.reduce_with(base, letters, Strategy::Leftmost)
    }

    pub fn reduce_with(self: &Arc<Self>, base: VertexId, letters: &[Letter], strategy: Strategy) -> Element {
        let mut at = base;
        for &l in letters {
            if self.graph.letter_src(l) != at {
                return Element::zero(self);
            }
            at = self.graph.letter_dst(l);
        }
        let word = GraphPath { base, steps: letters.to_vec() };
        Element::from_integer_terms(self, self.normal_form(&word, strategy).iter(), &crate::Coeff::one())
    }
}

/// Replaces the pair at `i, i+1` by `with`; the base vertex never changes.
fn splice(word: &GraphPath, i: usize, with: &[Letter]) -> GraphPath {
    let mut steps = Vec::with_capacity(word.steps.len());
    steps.extend_from_slice(&word.steps[..i]);
    steps.extend_from_slice(with);
    steps.extend_from_slice(&word.steps[i + 2..]);
    GraphPath { base: word.base, steps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn letters(g: &SeparatedGraph, text: &str) -> Vec<Letter> {
        text.split_whitespace()
            .map(|t| match t.strip_suffix('*') {
                Some(e) => Letter::star(g.edge(e).unwrap()),
                None => Letter::fwd(g.edge(t).unwrap()),
            })
            .collect()
    }

    #[test]
    fn default_choice_is_smallest_id() {
        let g = catalog::emn(2, 3);
        let ex = ExChoice::lexicographic(&g);
        assert_eq!(g.edge_name(ex.chosen(SetId(0))), "e1");
        assert_eq!(g.edge_name(ex.chosen(SetId(1))), "f1");
    }

    #[test]
    fn normality_examples() {
        let g = catalog::emn(1, 2);
        let alg = Algebra::with_default_choice(g.clone());
        assert!(!alg.is_normal_letters(&letters(&g, "e1* e2")));
        assert!(alg.is_normal_letters(&letters(&g, "e2 e1*")));
        assert!(alg.is_normal_letters(&letters(&g, "e1 f1*")));
        assert!(!alg.is_normal_letters(&letters(&g, "e1 e1*")));
        assert!(alg.is_normal_letters(&letters(&g, "e2 e2*")));
        assert!(alg.is_normal_letters(&letters(&g, "e1* f1")));
    }

    #[test]
    fn choice_json_round_trip() {
        let g = catalog::two_set_loops(2, 2);
        let json = serde_json::json!({"v": ["e2", "f1"]});
        let ex = ExChoice::from_json(&g, &json).unwrap();
        assert_eq!(ex.to_json(&g), json);
        let bad = serde_json::json!({"v": ["f2"]});
        assert!(matches!(ExChoice::from_json(&g, &bad), Err(Error::InvalidChoice { .. })));
    }

    #[test]
    fn strategies_agree_on_a_small_word() {
        let g = catalog::two_set_loops(2, 2);
        let alg = Algebra::with_default_choice(g.clone());
        let w = letters(&g, "e1 e1* e1 e1* f1 f1*");
        let v = g.vertex("v").unwrap();
        assert_eq!(alg.reduce_with(v, &w, Strategy::Leftmost), alg.reduce_with(v, &w, Strategy::Rightmost));
    }
}
