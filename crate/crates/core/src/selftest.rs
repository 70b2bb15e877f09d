//! The acceptance suite, shared by the `acceptance` test target and the CLI.
//!
//! Every criterion is checked with exact equality; each also has a time budget.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::catalog;
use crate::coeff::{Coeff, Rational};
use crate::construct::{cayley_graph, cayley_translation, quotient_graph, skew_product};
use crate::crossed::CrossedIso;
use crate::error::Result;
use crate::expectation::{n_mu, phi_ordinary, Expectation};
use crate::graph::{check_isomorphism, GraphMorphism, GraphPath, Letter, SeparatedGraph, VertexId};
use crate::group::{gross_tucker, FiniteGroup, FreeLetter, GraphAction, GroupElement, GroupSpec, Labeling};
use crate::leavitt::{component, decompose, degree, induced_automorphism, Algebra, Element, ExChoice, Strategy};
use crate::sample::{self, SampleRng};

pub const DEFAULT_SEED: u64 = 20_240_617;

/// The result of one criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    /// Correct and within its time budget.
    pub fn ok(&self) -> bool {
        self.passed && self.elapsed < self.limit
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({:.2}s of {}s): {}",
            if self.ok() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

type Check = fn(u64) -> std::result::Result<String, String>;

const CRITERIA: [(&str, u64, Check); 10] = [
    ("free-group model", 5, free_group_model),
    ("trace on free words", 5, trace_property),
    ("ordinary-graph oracle", 10, ordinary_oracle),
    ("confluence and change of basis", 20, confluence),
    ("Gross-Tucker round trip", 10, gross_tucker_round_trip),
    ("crossed-product isomorphism", 30, crossed_isomorphism),
    ("grading", 15, grading_suite),
    ("action invariance of P", 10, action_invariance),
    ("freeness condition", 5, freeness_condition),
    ("spot values and identifications", 5, spot_values),
];

pub fn count() -> usize {
    CRITERIA.len()
}

/// Runs criterion `id` (1-based).
pub fn run(id: usize, seed: u64) -> Outcome {
    let (name, limit, check) = CRITERIA[id - 1];
    let start = Instant::now();
    let result = check(seed.wrapping_add(id as u64));
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, name, passed, detail, elapsed, limit: Duration::from_secs(limit) }
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    (1..=CRITERIA.len()).map(|i| run(i, seed)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn z_groups() -> [GroupSpec; 3] {
    [GroupSpec::zmod(2), GroupSpec::zmod(3), "product(zmod:2,zmod:2)".parse().expect("group literal")]
}

/// Reduced free words of length `≤ max_len`, as letters of the Cuntz graph.
fn reduced_words(n_edges: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let gens: Vec<Letter> = (0..n_edges as u32)
        .flat_map(|e| [Letter::fwd(crate::graph::EdgeId(e)), Letter::star(crate::graph::EdgeId(e))])
        .collect();
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &gens {
                if w.last() != Some(&l.adjoint()) {
                    let mut u: Vec<Letter> = w.clone();
                    u.push(l);
                    next.push(u);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn to_free(g: &SeparatedGraph, w: &[Letter]) -> GroupElement {
    GroupElement::Free(
        w.iter().map(|l| FreeLetter { generator: g.edge_name(l.edge).to_string(), inverse: l.star }).collect(),
    )
}

fn from_free(g: &SeparatedGraph, x: &GroupElement) -> Vec<Letter> {
    let GroupElement::Free(letters) = x else { unreachable!("free group element") };
    letters
        .iter()
        .map(|f| {
            let e = g.edge(&f.generator).expect("generator is an edge");
            Letter { edge: e, star: f.inverse }
        })
        .collect()
}

/// 1. In `(A₂, D)`, basis words multiply like reduced words of the free group.
fn free_group_model(_seed: u64) -> std::result::Result<String, String> {
    let g = catalog::cuntz(2);
    let alg = Algebra::with_default_choice(g.clone());
    let free = GroupSpec::free(&["a1", "a2"]);
    let v = VertexId(0);
    let words = reduced_words(2, 4);
    let elems: Vec<Element> = words.iter().map(|w| Element::monomial(&alg, GraphPath { base: v, steps: w.clone() }, Coeff::one())).collect();
    let mut checked = 0;
    for (i, x) in words.iter().enumerate() {
        ensure(alg.is_normal_letters(x), || format!("reduced word #{i} is not a basis word"))?;
        for (j, y) in words.iter().enumerate() {
            let prod = lift(free.mul(&to_free(&g, x), &to_free(&g, y)))?;
            let expected = Element::monomial(&alg, GraphPath { base: v, steps: from_free(&g, &prod) }, Coeff::one());
            let got = &elems[i] * &elems[j];
            ensure(got == expected, || format!("{} * {} gave {got}, expected {expected}", elems[i], elems[j]))?;
            checked += 1;
        }
    }
    Ok(format!("{} reduced words, {checked} products", words.len()))
}

fn random_reduced_word(rng: &mut SampleRng, n_edges: usize, len: usize) -> Vec<Letter> {
    let mut w: Vec<Letter> = Vec::with_capacity(len);
    while w.len() < len {
        let e = crate::graph::EdgeId(rng.gen_range(0..n_edges as u32));
        let l = if rng.gen_bool(0.5) { Letter::fwd(e) } else { Letter::star(e) };
        if w.last() != Some(&l.adjoint()) {
            w.push(l);
        }
    }
    w
}

/// 2. On `(A₃, D)`, `P` is the canonical trace.
fn trace_property(seed: u64) -> std::result::Result<String, String> {
    let mut rng = sample::rng(seed);
    let alg = Algebra::with_default_choice(catalog::cuntz(3));
    let with = Expectation::new(&alg);
    let without = Expectation::without_shortcut(&alg);
    let pv = Element::vertex(&alg, VertexId(0));
    ensure(lift(with.expect(&pv))? == pv, || "P(P_v) != P_v".into())?;
    for _ in 0..500 {
        let len = rng.gen_range(1..=8);
        let w = random_reduced_word(&mut rng, 3, len);
        let x = alg.reduce(VertexId(0), &w);
        ensure(x.len() == 1, || format!("reduced word {x} is not a single basis word"))?;
        for (label, e) in [("with", &with), ("without", &without)] {
            let p = lift(e.expect(&x))?;
            ensure(p.is_zero(), || format!("P({x}) = {p} ({label} shortcut)"))?;
        }
    }
    Ok("500 words, P(P_v) = P_v".into())
}

/// 3. `P(S_μ S_ν*)` agrees with the closed formula on ordinary graphs.
fn ordinary_oracle(seed: u64) -> std::result::Result<String, String> {
    let mut rng = sample::rng(seed);
    let mut pairs = 0;
    let mut nonzero = 0;
    for _ in 0..50 {
        let g = sample::random_graph(&mut rng, 5, 8, true);
        let alg = Algebra::with_default_choice(g.clone());
        let with = Expectation::new(&alg);
        let without = Expectation::without_shortcut(&alg);
        for _ in 0..20 {
            let mu = sample::random_forward_path(&mut rng, &g, 4);
            let nu = if rng.gen_bool(0.5) { mu.clone() } else { sample::random_path_into(&mut rng, &g, mu.range(&g), 4) };
            let mut steps = mu.steps.clone();
            steps.extend(nu.adjoint(&g).steps);
            let x = alg.reduce(mu.base, &steps);
            let oracle = lift(phi_ordinary(&alg, &mu, &nu))?;
            if !oracle.is_zero() {
                nonzero += 1;
                let n = lift(n_mu(&g, &mu))?;
                ensure(oracle.coeff(&GraphPath::vertex(mu.base)) == Coeff::real(n), || "n_mu mismatch".into())?;
            }
            for e in [&with, &without] {
                let p = lift(e.expect(&x))?;
                ensure(p == oracle, || format!("P({x}) = {p}, oracle {oracle}"))?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} path pairs over 50 graphs ({nonzero} with mu = nu)"))
}

fn random_choice(rng: &mut SampleRng, g: &SeparatedGraph) -> ExChoice {
    let chosen = g.sets().iter().map(|x| x.edges[rng.gen_range(0..x.edges.len())]).collect();
    ExChoice::from_edges(g, chosen).expect("choices come from their sets")
}

/// A composable word that often continues `e` with `e*` and `e*` with some `f`
/// of the same set, so that
/// every rewriting rule fires.
fn peaky_word(rng: &mut SampleRng, g: &SeparatedGraph, max_len: usize) -> GraphPath {
    let mut w = sample::random_word(rng, g, 1);
    let len = rng.gen_range(1..=max_len);
    while w.steps.len() < len {
        let at = w.range(g);
        let last = w.steps.last().copied();
        let next = match last {
            Some(l) if !l.star && rng.gen_bool(0.4) => Some(Letter::star(l.edge)),
            Some(l) if l.star && rng.gen_bool(0.4) => {
                let set = &g.set(g.set_of(l.edge)).edges;
                Some(Letter::fwd(set[rng.gen_range(0..set.len())]))
            }
            _ => {
                let options: Vec<Letter> = g
                    .edge_ids()
                    .flat_map(|e| {
                        let f = (g.src(e) == at).then_some(Letter::fwd(e));
                        let s = (g.dst(e) == at).then_some(Letter::star(e));
                        f.into_iter().chain(s)
                    })
                    .collect();
                (!options.is_empty()).then(|| options[rng.gen_range(0..options.len())])
            }
        };
        match next {
            Some(l) if g.letter_src(l) == at => w.steps.push(l),
            Some(_) => continue,
            None => break,
        }
    }
    w
}

/// 4. Leftmost and rightmost rewriting agree, and changing `e_X` is invertible.
fn confluence(seed: u64) -> std::result::Result<String, String> {
    let mut rng = sample::rng(seed);
    let mut words = 0;
    let mut expanded = 0;
    let mut zero = 0;
    let mut rewritten = 0;
    for _ in 0..10 {
        let g = sample::random_graph(&mut rng, 2, 8, false);
        let a = lift(Algebra::new(g.clone(), ExChoice::lexicographic(&g)))?;
        let b = lift(Algebra::new(g.clone(), random_choice(&mut rng, &g)))?;
        for _ in 0..50 {
            let w = if rng.gen_bool(0.8) { peaky_word(&mut rng, &g, 10) } else { sample::random_word(&mut rng, &g, 10) };
            let left = a.reduce_with(w.base, &w.steps, Strategy::Leftmost);
            let right = a.reduce_with(w.base, &w.steps, Strategy::Rightmost);
            ensure(left == right, || format!("strategies disagree: {left} vs {right}"))?;
            let direct_b = b.reduce_with(w.base, &w.steps, Strategy::Rightmost);
            let via_a = lift(left.rebase(&b))?;
            ensure(via_a == direct_b, || format!("change of basis A to B: {via_a} vs {direct_b}"))?;
            ensure(lift(via_a.rebase(&a))? == left, || format!("change of basis B to A fails on {left}"))?;
            if left.len() > 1 {
                expanded += 1;
            }
            if left.is_zero() {
                zero += 1;
            }
            if !a.is_normal(&w) {
                rewritten += 1;
            }
            words += 1;
        }
    }
    Ok(format!("{words} words over 10 graphs ({rewritten} rewritten, {expanded} with several terms, {zero} zero)"))
}

/// The free actions of criterion 5: translations on random skew products.
fn sample_actions(seed: u64) -> Vec<(SeparatedGraph, GraphAction)> {
    let mut rng = sample::rng(seed);
    let groups = z_groups();
    (0..20)
        .map(|i| {
            let grp = FiniteGroup::new(&groups[i % 3]).expect("finite");
            let base = sample::random_graph(&mut rng, 3, 5, false);
            let label = sample::random_labeling(&mut rng, &base, &grp);
            let skew = skew_product(&base, &label).expect("finite group");
            (skew.graph().clone(), skew.translation())
        })
        .collect()
}

/// 5. Gross–Tucker recovers every translation action up to equivariant isomorphism.
fn gross_tucker_round_trip(seed: u64) -> std::result::Result<String, String> {
    let mut points = 0;
    for (i, (g, action)) in sample_actions(seed).iter().enumerate() {
        ensure(action.check(g).is_valid(), || format!("action #{i} is invalid"))?;
        ensure(action.is_free(), || format!("action #{i} is not free"))?;
        let gt = lift(gross_tucker(g, action))?;
        ensure(check_isomorphism(&gt.iso, gt.skew.graph(), g), || format!("action #{i}: not an isomorphism"))?;
        ensure(lift(gt.is_equivariant(g, action))?, || format!("action #{i}: not equivariant"))?;
        points += action.group().len() * (g.edge_count() + g.vertex_count());
    }
    Ok(format!("20 actions, {points} pointwise equivariance checks"))
}

/// 6. `ψ∘φ = id`, `φ` multiplicative and `*`-preserving, and equivariant.
fn crossed_isomorphism(seed: u64) -> std::result::Result<String, String> {
    let mut rng = sample::rng(seed);
    let graphs = [
        catalog::two_set_loops(2, 2),
        catalog::emn(1, 2),
        catalog::cuntz(1),
        catalog::partial_isometry(),
        catalog::emn(2, 3),
    ];
    let mut totals = (0, 0, 0);
    for g in &graphs {
        for grp in [GroupSpec::zmod(2), GroupSpec::zmod(3)] {
            let fg = lift(FiniteGroup::new(&grp))?;
            let label = sample::random_labeling(&mut rng, g, &fg);
            let alg = Algebra::with_default_choice(g.clone());
            let iso = lift(CrossedIso::new(&alg, &label))?;
            let report = iso.verify(200, 4, &mut rng);
            ensure(report.passed(), || format!("{grp} on {} edges: {}", g.edge_count(), report.failures.join("; ")))?;
            totals.0 += report.generators_checked;
            totals.1 += report.pairs_checked;
            totals.2 += report.equivariance_checked;
        }
    }
    Ok(format!(
        "10 cases: {} generators, {} sampled pairs, {} equivariance checks",
        totals.0, totals.1, totals.2
    ))
}

fn grading_checks(
    rng: &mut SampleRng,
    alg: &Arc<Algebra>,
    label: &Labeling,
    expectation: &Expectation,
) -> std::result::Result<(), String> {
    let grp = label.group();
    let one = grp.identity();
    let x = sample::random_element(rng, alg, 4, 5);
    let parts = lift(decompose(&x, label))?;
    let total = parts.values().fold(Element::zero(alg), |acc, p| &acc + p);
    ensure(total == x, || format!("components of {x} do not sum back"))?;
    let mut degrees: Vec<GroupElement> = parts.keys().cloned().collect();
    degrees.push(one.clone());
    if let Ok(all) = grp.elements() {
        degrees.extend(all);
    }
    degrees.sort();
    degrees.dedup();
    for g in &degrees {
        let eg = lift(component(&x, g, label))?;
        ensure(lift(component(&eg, g, label))? == eg, || format!("E_{g} is not idempotent on {x}"))?;
        for h in degrees.iter().filter(|h| *h != g) {
            ensure(lift(component(&eg, h, label))?.is_zero(), || format!("E_{h} E_{g} != 0 on {x}"))?;
        }
        if *g != one {
            let p = lift(expectation.expect(&eg))?;
            ensure(p.is_zero(), || format!("P(E_{g}({x})) = {p}"))?;
        }
    }
    let u = sample::random_normal_word(rng, alg, 4);
    let w = sample::random_normal_word(rng, alg, 4);
    let (du, dw) = (lift(degree(&u, label))?, lift(degree(&w, label))?);
    let expected = lift(grp.mul(&du, &dw))?;
    let prod = &Element::monomial(alg, u.clone(), Coeff::one()) * &Element::monomial(alg, w.clone(), Coeff::one());
    for (p, _) in prod.terms() {
        ensure(lift(degree(p, label))? == expected, || format!("degree not additive on {prod}"))?;
    }
    let star = Element::monomial(alg, u.clone(), Coeff::one()).star();
    for (p, _) in star.terms() {
        ensure(lift(degree(p, label))? == lift(grp.inv(&du))?, || "star does not invert degrees".to_string())?;
    }
    Ok(())
}

/// 7. Spectral projections partition elements and respect products, and `P∘E_g = 0` off the unit.
fn grading_suite(seed: u64) -> std::result::Result<String, String> {
    let mut rng = sample::rng(seed);
    let z3 = lift(FiniteGroup::new(&GroupSpec::zmod(3)))?;
    let mut samples = 0;
    for _ in 0..10 {
        let g = sample::random_graph(&mut rng, 4, 6, false);
        let alg = Algebra::with_default_choice(g.clone());
        let expectation = Expectation::new(&alg);
        let labels = [Labeling::free(&g), sample::random_labeling(&mut rng, &g, &z3)];
        for _ in 0..10 {
            for label in &labels {
                grading_checks(&mut rng, &alg, label, &expectation)?;
                samples += 1;
            }
        }
    }
    Ok(format!("{samples} samples over 10 graphs, free and Z/3 labels"))
}

/// 8. `P∘α_g = α_g∘P` for the actions of criterion 5.
fn action_invariance(seed: u64) -> std::result::Result<String, String> {
    let actions = sample_actions(seed.wrapping_sub(3));
    let mut rng = sample::rng(seed);
    let mut checked = 0;
    for (g, action) in &actions {
        let alg = Algebra::with_default_choice(g.clone());
        let expectation = Expectation::new(&alg);
        for _ in 0..10 {
            let x = sample::random_element(&mut rng, &alg, 3, 6);
            let z = action.group().element(rng.gen_range(0..action.group().len())).clone();
            let lhs = lift(expectation.expect(&lift(induced_automorphism(action, &z, &x))?))?;
            let rhs = lift(induced_automorphism(action, &z, &lift(expectation.expect(&x))?))?;
            ensure(lhs == rhs, || format!("P(alpha_{z}({x})) = {lhs} but alpha_{z}(P(x)) = {rhs}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} elements over 20 actions"))
}

/// 9. Alternating products of `β_e`-kernel elements from different sets have `P = 0`.
fn freeness_condition(seed: u64) -> std::result::Result<String, String> {
    let mut rng = sample::rng(seed);
    let g = catalog::partial_isometry();
    let alg = Algebra::with_default_choice(g.clone());
    let v = lift(g.vertex("v"))?;
    let pv = Element::vertex(&alg, v);
    let half = Coeff::ratio(1, 2);
    let beta = |name: &str| -> Element {
        let e = g.edge(name).expect("catalog edge");
        let ee = alg.reduce(v, &[Letter::fwd(e), Letter::star(e)]);
        &ee - &pv.scale(&half)
    };
    let sets = [[beta("alpha1"), beta("alpha2")], [beta("beta1"), beta("beta2")]];
    let with = Expectation::new(&alg);
    let without = Expectation::without_shortcut(&alg);
    for (i, set) in sets.iter().enumerate() {
        for b in set {
            ensure(lift(with.expect(b))?.is_zero(), || format!("beta in set {i} is not in the kernel"))?;
        }
    }
    let mut nontrivial = 0;
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let mut which = rng.gen_range(0..2);
        let mut prod = pv.clone();
        for _ in 0..n {
            let a = loop {
                let c0 = sample::random_coeff(&mut rng);
                let c1 = if rng.gen_bool(0.5) { sample::random_coeff(&mut rng) } else { Coeff::zero() };
                let a = &sets[which][0].scale(&c0) + &sets[which][1].scale(&c1);
                if !a.is_zero() {
                    break a;
                }
            };
            prod = &prod * &a;
            which = 1 - which;
        }
        if !prod.is_zero() {
            nontrivial += 1;
        }
        for e in [&with, &without] {
            let p = lift(e.expect(&prod))?;
            ensure(p.is_zero(), || format!("P of an alternating product is {p}"))?;
        }
    }
    Ok(format!("100 alternating products ({nontrivial} nonzero)"))
}

fn name_morphism(
    src: &SeparatedGraph,
    vertex: impl Fn(&str) -> String,
    edge: impl Fn(&str) -> String,
) -> GraphMorphism {
    GraphMorphism {
        vertices: src.vertex_ids().map(|v| (src.vertex_name(v).to_string(), vertex(src.vertex_name(v)))).collect(),
        edges: src.edge_ids().map(|e| (src.edge_name(e).to_string(), edge(src.edge_name(e)))).collect(),
    }
}

/// 10. Worked values for `β₁`, Cayley graphs, their quotients and the two-cycle action.
fn spot_values(_seed: u64) -> std::result::Result<String, String> {
    let g = catalog::partial_isometry();
    let alg = Algebra::with_default_choice(g.clone());
    let x = lift(Element::parse(&alg, "beta1 beta1*"))?;
    let p = lift(Expectation::new(&alg).expect(&x))?;
    let v = lift(g.vertex("v"))?;
    let half = Coeff::real(Rational::new(1.into(), 2.into()));
    ensure(p == Element::vertex(&alg, v).scale(&half), || format!("P(beta1 beta1*) = {p}"))?;
    let y = g.set_of(lift(g.edge("beta1"))?);
    let ey = g.restrict_to_set(y);
    let ey_alg = Algebra::with_default_choice(ey.clone());
    let mu = lift(GraphPath::forward(&ey, &["beta1"]))?;
    let oracle = lift(phi_ordinary(&ey_alg, &mu, &mu))?;
    ensure(oracle.coeff(&GraphPath::vertex(lift(ey.vertex("v"))?)) == half, || format!("oracle on E_Y gives {oracle}"))?;

    let cayley_cases: [(GroupSpec, Vec<&str>); 3] = [
        (GroupSpec::zmod(3), vec!["1"]),
        ("product(zmod:2,zmod:2)".parse().expect("group literal"), vec!["(1,0)", "(0,1)"]),
        (GroupSpec::zmod(4), vec!["1", "2"]),
    ];
    for (grp, gens) in &cayley_cases {
        let gens: Vec<GroupElement> = gens.iter().map(|s| grp.parse_element(s)).collect::<Result<_>>().map_err(|e| e.to_string())?;
        let n = gens.len();
        let cay = lift(cayley_graph(grp, &gens))?;
        let an = catalog::cuntz(n);
        let values: BTreeMap<String, GroupElement> =
            gens.iter().enumerate().map(|(i, g)| (format!("a{}", i + 1), g.clone())).collect();
        let label = lift(Labeling::new(&an, grp.clone(), &values))?;
        let skew = lift(skew_product(&an, &label))?;
        let to_cayley = name_morphism(
            skew.graph(),
            |s| s.strip_prefix("v@").expect("skew vertex").to_string(),
            |s| s.to_string(),
        );
        ensure(check_isomorphism(&to_cayley, skew.graph(), &cay), || format!("A_{n} x {grp} is not the Cayley graph"))?;
        let action = lift(cayley_translation(&cay, grp, n))?;
        let q = lift(quotient_graph(&cay, &action))?;
        let to_an = name_morphism(&q.graph, |_| "v".into(), |s| s.split('@').next().expect("edge id").to_string());
        ensure(check_isomorphism(&to_an, &q.graph, &an), || format!("Cayley graph of {grp} modulo G is not A_{n}"))?;
        let gt = lift(gross_tucker(&cay, &action))?;
        ensure(gt.quotient.graph.vertex_count() == 1 && gt.quotient.graph.edge_count() == n, || "Gross-Tucker quotient is not A_n".into())?;
        for (i, gi) in gens.iter().enumerate() {
            let e = gt
                .quotient
                .graph
                .edge_ids()
                .find(|&e| gt.quotient.graph.edge_name(e).starts_with(&format!("a{}@", i + 1)))
                .ok_or("missing quotient edge")?;
            ensure(lift(gt.label.value(e))? == gi, || format!("label of a{} is not {gi}", i + 1))?;
        }
    }

    let (cyc, swap) = catalog::two_cycle_swap();
    let gt = lift(gross_tucker(&cyc, &swap))?;
    let expected: BTreeMap<String, String> =
        [("v@0", "v"), ("v@1", "w")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    ensure(gt.iso.vertices == expected, || format!("swap iso on vertices: {:?}", gt.iso.vertices))?;
    let expected: BTreeMap<String, String> =
        [("a@0", "a"), ("a@1", "b")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    ensure(gt.iso.edges == expected, || format!("swap iso on edges: {:?}", gt.iso.edges))?;
    ensure(gt.label.values()[0] == GroupSpec::zmod(2).parse_element("1").map_err(|e| e.to_string())?, || "swap label".into())?;
    Ok("P(beta1 beta1*) = 1/2 P_v; 3 Cayley identifications; two-cycle Gross-Tucker data".into())
}
