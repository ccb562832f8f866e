mod common;

use common::{arb_graph, arb_graph_point, arb_rational, brute_clique_polynomial, brute_cliques};
use gpatoms_core::clique::join_factorization_check;
use gpatoms_core::graph::{Graph, VertexSet};
use gpatoms_core::scalar::{int, Rational};
use gpatoms_core::CliquePolynomialForm;
use proptest::prelude::*;

fn relabel(g: &Graph, prefix: &str) -> Graph {
    let names: Vec<String> = g.vertices().iter().map(|v| format!("{prefix}{v}")).collect();
    Graph::from_index_edges(names, &g.edges())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cliques_match_subset_scan(g in arb_graph(7)) {
        let mut fast: Vec<u64> = g.enumerate_cliques().iter().map(|c| c.members().bits()).collect();
        let mut slow: Vec<u64> = brute_cliques(&g).iter().map(|s| s.bits()).collect();
        fast.sort_unstable();
        slow.sort_unstable();
        prop_assert_eq!(&fast, &slow);
        prop_assert!(fast.len() <= 1 << g.len());
        prop_assert_eq!(fast.len() == 1 << g.len(), g.is_complete());
    }

    #[test]
    fn join_multiplies_clique_counts(a in arb_graph(4), b in arb_graph(4)) {
        let j = relabel(&a, "l").join(&relabel(&b, "r")).unwrap();
        prop_assert_eq!(
            j.enumerate_cliques().len(),
            a.enumerate_cliques().len() * b.enumerate_cliques().len()
        );
    }

    #[test]
    fn join_factors_are_adjacent_and_irreducible(g in arb_graph(7)) {
        let factors = g.join_factor_sets();
        let union = factors.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        prop_assert_eq!(union, g.all());
        for (i, f) in factors.iter().enumerate() {
            prop_assert!(g.induced(*f).is_join_irreducible());
            for h in &factors[i + 1..] {
                prop_assert!(f.intersection(*h).is_empty());
                for u in f.iter() {
                    for v in h.iter() {
                        prop_assert!(g.adjacent(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn evaluation_matches_definition((g, x) in arb_graph_point(6)) {
        let form = CliquePolynomialForm::new(g.clone());
        prop_assert_eq!(form.evaluate(&x).unwrap(), brute_clique_polynomial(&g, &x));
    }

    #[test]
    fn affine_in_each_variable_with_slope_the_derivative(
        (g, x) in arb_graph_point(6),
        a in arb_rational(9),
        b in arb_rational(9),
    ) {
        let form = CliquePolynomialForm::new(g.clone());
        for j in 0..g.len() {
            let at = |t: &Rational| {
                let mut y = x.clone();
                y[j] = t.clone();
                form.evaluate(&y).unwrap()
            };
            let slope = at(&int(1)) - at(&int(0));
            prop_assert_eq!(form.partial_derivative(j, &x).unwrap(), slope.clone());
            // Three collinear values pin down affineness.
            prop_assert_eq!(at(&a) - at(&b), slope * (&a - &b));
        }
    }

    #[test]
    fn zero_coordinates_restrict_away((g, mut x) in arb_graph_point(6), zeros in any::<u8>()) {
        for (i, v) in x.iter_mut().enumerate() {
            if zeros & (1 << i) != 0 {
                *v = int(0);
            }
        }
        let form = CliquePolynomialForm::new(g);
        let (sub, y) = form.restrict_zeros(&x).unwrap();
        prop_assert_eq!(CliquePolynomialForm::new(sub).evaluate(&y).unwrap(), form.evaluate(&x).unwrap());
    }

    #[test]
    fn join_factorization_on_random_joins(
        parts in prop::collection::vec(arb_graph(3), 2..=3),
        seed in prop::collection::vec(arb_rational(8), 9),
    ) {
        let mut g = relabel(&parts[0], "f0_");
        for (k, p) in parts.iter().enumerate().skip(1) {
            g = g.join(&relabel(p, &format!("f{k}_"))).unwrap();
        }
        let x: Vec<Rational> = seed[..g.len()].to_vec();
        let (full, factors) = join_factorization_check(&g, &x).unwrap();
        prop_assert!(factors.len() >= parts.len());
        prop_assert_eq!(full, factors.iter().product::<Rational>());
    }
}
