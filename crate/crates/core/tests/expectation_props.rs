use std::sync::Arc;

use num_traits::Signed;
use proptest::prelude::*;
use rand::Rng;

use sepgraph::catalog;
use sepgraph::construct::skew_product;
use sepgraph::expectation::{expect, n_mu, phi_ordinary, Expectation};
use sepgraph::graph::GraphPath;
use sepgraph::group::{FiniteGroup, GroupSpec};
use sepgraph::leavitt::{induced_automorphism, Algebra, Element};
use sepgraph::sample::{self, SampleRng};
use sepgraph::{Coeff, Rational};

fn diagonal(rng: &mut SampleRng, alg: &Arc<Algebra>) -> Element {
    let mut d = Element::zero(alg);
    for v in alg.graph().vertex_ids() {
        if rng.gen_bool(0.6) {
            d = &d + &Element::vertex(alg, v).scale(&sample::random_coeff(rng));
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn expectation_is_an_idempotent_star_map(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let alg = Algebra::with_default_choice(sample::random_graph(&mut rng, 3, 6, false));
        let x = sample::random_element(&mut rng, &alg, 4, 5);
        let p = expect(&x);
        prop_assert!(p.is_vertex_supported());
        prop_assert_eq!(expect(&p), p.clone());
        prop_assert_eq!(expect(&x.star()), p.star());
    }

    #[test]
    fn expectation_is_a_bimodule_map(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let alg = Algebra::with_default_choice(sample::random_graph(&mut rng, 3, 6, false));
        let x = sample::random_element(&mut rng, &alg, 4, 5);
        let (a, b) = (diagonal(&mut rng, &alg), diagonal(&mut rng, &alg));
        prop_assert_eq!(expect(&(&(&a * &x) * &b)), &(&a * &expect(&x)) * &b);
    }

    #[test]
    fn shortcut_does_not_change_values(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let alg = Algebra::with_default_choice(sample::random_graph(&mut rng, 3, 6, false));
        let x = sample::random_element(&mut rng, &alg, 4, 6);
        let slow = Expectation::without_shortcut(&alg).expect(&x).unwrap();
        prop_assert_eq!(expect(&x), slow);
    }

    #[test]
    fn expectation_is_positive(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let alg = Algebra::with_default_choice(sample::random_graph(&mut rng, 3, 5, false));
        let x = sample::random_element(&mut rng, &alg, 3, 3);
        let p = expect(&(&x.star() * &x));
        for (_, c) in p.terms() {
            prop_assert!(c.is_real() && c.re().is_positive());
        }
        prop_assert_eq!(p.is_zero(), x.is_zero());
    }

    #[test]
    fn ordinary_graphs_match_the_path_formula(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let g = sample::random_graph(&mut rng, 3, 6, true);
        let alg = Algebra::with_default_choice(g.clone());
        let mu = sample::random_forward_path(&mut rng, &g, 3);
        let nu = if rng.gen_bool(0.5) { mu.clone() } else { sample::random_path_into(&mut rng, &g, mu.range(&g), 3) };
        let word = mu.concat(&g, &nu.adjoint(&g)).unwrap();
        prop_assert_eq!(expect(&Element::path(&alg, &word)), phi_ordinary(&alg, &mu, &nu).unwrap());
    }

    #[test]
    fn expectation_commutes_with_actions(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let base = sample::random_graph(&mut rng, 2, 4, false);
        let grp = FiniteGroup::new(&GroupSpec::zmod(rng.gen_range(2..4))).unwrap();
        let skew = skew_product(&base, &sample::random_labeling(&mut rng, &base, &grp)).unwrap();
        let action = skew.translation();
        let alg = Algebra::with_default_choice(skew.graph().clone());
        let x = sample::random_element(&mut rng, &alg, 3, 4);
        let g = grp.element(rng.gen_range(0..grp.len()));
        let moved = induced_automorphism(&action, g, &x).unwrap();
        prop_assert_eq!(expect(&moved), induced_automorphism(&action, g, &expect(&x)).unwrap());
    }
}

#[test]
fn set_projections_have_the_uniform_weight() {
    let g = catalog::two_set_loops(3, 2);
    let alg = Algebra::with_default_choice(g.clone());
    let v = alg.graph().vertex("v").unwrap();
    for (name, n) in [("e1", 3), ("e3", 3), ("f2", 2)] {
        let x = Element::parse(&alg, &format!("{name} {name}*")).unwrap();
        let expected = Element::vertex(&alg, v).scale(&Coeff::ratio(1, n));
        assert_eq!(expect(&x), expected);
    }
    let mixed = Element::parse(&alg, "e1 f1 f1* e1*").unwrap();
    assert_eq!(expect(&mixed), Element::vertex(&alg, v).scale(&Coeff::ratio(1, 6)));
}

#[test]
fn n_mu_rejects_backward_letters() {
    let g = catalog::cuntz(2);
    let mu = GraphPath::forward(&g, &["a1", "a2"]).unwrap();
    assert_eq!(n_mu(&g, &mu).unwrap(), Rational::new(1.into(), 4.into()));
    assert!(n_mu(&g, &mu.adjoint(&g)).is_err());
}
