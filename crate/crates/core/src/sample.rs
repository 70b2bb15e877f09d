//! Seeded random graphs, words and elements for property checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coeff::Coeff;
use crate::graph::{EdgeRecord, GraphPath, GraphSpec, Letter, SeparatedGraph, VertexId};
use crate::group::{FiniteGroup, Labeling};
use crate::leavitt::{Algebra, Element};

/// The RNG used by every sampler and by the self-test.
pub type SampleRng = rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    <SampleRng as rand::SeedableRng>::seed_from_u64(seed)
}

/// A random graph with `1..=max_vertices` vertices and `0..=max_edges` edges.
/// With `ordinary` every vertex gets one set, otherwise its out-edges are
/// split into a random number of nonempty sets.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize, ordinary: bool) -> SeparatedGraph {
    let nv = rng.gen_range(1..=max_vertices);
    let ne = rng.gen_range(0..=max_edges);
    let vertices: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
    let edges: Vec<EdgeRecord> = (0..ne)
        .map(|i| EdgeRecord {
            id: format!("e{i}"),
            src: vertices[rng.gen_range(0..nv)].clone(),
            dst: vertices[rng.gen_range(0..nv)].clone(),
        })
        .collect();
    let mut separation = BTreeMap::new();
    for v in &vertices {
        let mut out: Vec<String> = edges.iter().filter(|e| &e.src == v).map(|e| e.id.clone()).collect();
        if out.is_empty() {
            continue;
        }
        out.shuffle(rng);
        let k = if ordinary { 1 } else { rng.gen_range(1..=out.len()) };
        let mut sets: Vec<Vec<String>> = vec![Vec::new(); k];
        for (i, e) in out.into_iter().enumerate() {
            let slot = if i < k { i } else { rng.gen_range(0..k) };
            sets[slot].push(e);
        }
        for s in &mut sets {
            s.sort();
        }
        separation.insert(v.clone(), sets);
    }
    SeparatedGraph::from_spec(&GraphSpec { vertices, edges, separation }).expect("sampled graphs are valid")
}

fn letters_at(graph: &SeparatedGraph, v: VertexId) -> Vec<Letter> {
    graph
        .edge_ids()
        .flat_map(|e| {
            let fwd = (graph.src(e) == v).then_some(Letter::fwd(e));
            let star = (graph.dst(e) == v).then_some(Letter::star(e));
            fwd.into_iter().chain(star)
        })
        .collect()
}

fn walk<R: Rng>(
    rng: &mut R,
    graph: &SeparatedGraph,
    len: usize,
    mut allowed: impl FnMut(Option<Letter>, Letter) -> bool,
) -> GraphPath {
    let base = VertexId(rng.gen_range(0..graph.vertex_count()) as u32);
    let mut at = base;
    let mut steps: Vec<Letter> = Vec::with_capacity(len);
    for _ in 0..len {
        let options: Vec<Letter> =
            letters_at(graph, at).into_iter().filter(|&l| allowed(steps.last().copied(), l)).collect();
        let Some(&l) = options.choose(rng) else { break };
        steps.push(l);
        at = graph.letter_dst(l);
    }
    GraphPath { base, steps }
}

/// A composable word over `Ê` of length at most `max_len`.
pub fn random_word<R: Rng>(rng: &mut R, graph: &SeparatedGraph, max_len: usize) -> GraphPath {
    let len = rng.gen_range(0..=max_len);
    walk(rng, graph, len, |_, _| true)
}

/// A forward path of length at most `max_len` starting anywhere.
pub fn random_forward_path<R: Rng>(rng: &mut R, graph: &SeparatedGraph, max_len: usize) -> GraphPath {
    let len = rng.gen_range(0..=max_len);
    walk(rng, graph, len, |_, l| !l.star)
}

/// A forward path of length at most `max_len` ending at `end`, grown backwards.
pub fn random_path_into<R: Rng>(rng: &mut R, graph: &SeparatedGraph, end: VertexId, max_len: usize) -> GraphPath {
    let len = rng.gen_range(0..=max_len);
    let mut at = end;
    let mut rev = Vec::new();
    for _ in 0..len {
        let options: Vec<_> = graph.edge_ids().filter(|&e| graph.dst(e) == at).collect();
        let Some(&e) = options.choose(rng) else { break };
        rev.push(Letter::fwd(e));
        at = graph.src(e);
    }
    rev.reverse();
    GraphPath { base: at, steps: rev }
}

/// A basis word of the algebra, grown letter by letter while staying normal.
pub fn random_normal_word<R: Rng>(rng: &mut R, alg: &Algebra, max_len: usize) -> GraphPath {
    let len = rng.gen_range(0..=max_len);
    walk(rng, alg.graph(), len, |prev, l| prev.is_none_or(|p| alg.is_normal_letters(&[p, l])))
}

/// A small Gaussian rational, nonzero.
pub fn random_coeff<R: Rng>(rng: &mut R) -> Coeff {
    loop {
        let re = Coeff::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        let im = if rng.gen_bool(0.25) { Coeff::ratio(rng.gen_range(-2..=2), rng.gen_range(1..=2)) } else { Coeff::zero() };
        let c = &re + &(&im * &Coeff::i());
        if !c.is_zero() {
            return c;
        }
    }
}

/// A sum of up to `max_terms` random basis words.
pub fn random_element<R: Rng>(rng: &mut R, alg: &Arc<Algebra>, max_terms: usize, max_len: usize) -> Element {
    let mut out = Element::zero(alg);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let w = random_normal_word(rng, alg, max_len);
        out.add_term(w, &random_coeff(rng));
    }
    out
}

/// Independent uniform labels in a finite group.
pub fn random_labeling<R: Rng>(rng: &mut R, graph: &SeparatedGraph, group: &FiniteGroup) -> Labeling {
    let values = graph.edge_ids().map(|_| group.element(rng.gen_range(0..group.len())).clone()).collect();
    Labeling::from_values(graph, group.spec().clone(), values).expect("labels lie in the group")
}
