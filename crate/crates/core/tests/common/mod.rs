//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use gpatoms_core::atoms::{Summand, VertexAlgebraSpec};
use gpatoms_core::graph::{Graph, VertexSet};
use gpatoms_core::scalar::{int, rat, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::numbered(n, &edges)
}

/// Uniform rational `k/den` with `lo <= k <= hi`.
pub fn random_rational(rng: &mut impl Rng, lo: i64, hi: i64, den: i64) -> Rational {
    rat(rng.gen_range(lo..=hi), den)
}

/// Point of `[0,1]^n` with denominators up to 12, biased toward zero so that
/// both members and non-members of the region show up.
pub fn random_unit_point(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| {
            let den = rng.gen_range(1..=12);
            if rng.gen_bool(0.15) {
                int(0)
            } else {
                rat(rng.gen_range(0..=den), den)
            }
        })
        .collect()
}

/// The eleven graphs on four vertices up to isomorphism.
pub fn graphs_on_four() -> Vec<Graph> {
    let edge_sets: [&[(usize, usize)]; 11] = [
        &[],
        &[(0, 1)],
        &[(0, 1), (1, 2)],
        &[(0, 1), (2, 3)],
        &[(0, 1), (1, 2), (0, 2)],
        &[(0, 1), (0, 2), (0, 3)],
        &[(0, 1), (1, 2), (2, 3)],
        &[(0, 1), (1, 2), (2, 3), (3, 0)],
        &[(0, 1), (1, 2), (0, 2), (2, 3)],
        &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    ];
    edge_sets.iter().map(|e| Graph::numbered(4, e)).collect()
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.len();
    if n != b.len() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|i| (0..n).all(|j| a.adjacent(i, j) == b.adjacent(perm[i], perm[j]))) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every subset whose members are pairwise adjacent, by checking all `2^n`
/// subsets.
pub fn brute_cliques(g: &Graph) -> Vec<VertexSet> {
    VertexSet::full(g.len())
        .subsets()
        .filter(|s| {
            let m: Vec<usize> = s.iter().collect();
            m.iter()
                .enumerate()
                .all(|(k, &a)| m[k + 1..].iter().all(|&b| g.adjacent(a, b)))
        })
        .collect()
}

/// Clique polynomial straight from the definition over all subsets.
pub fn brute_clique_polynomial(g: &Graph, x: &[Rational]) -> Rational {
    brute_cliques(g)
        .into_iter()
        .map(|s| {
            let m: Rational = s.iter().map(|v| x[v].clone()).product();
            if s.len() % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .sum()
}

prop_compose! {
    pub fn arb_graph(max_n: usize)(n in 1..=max_n)
        (n in Just(n), bits in prop::collection::vec(any::<bool>(), n * (n - 1) / 2))
        -> Graph
    {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::numbered(n, &edges)
    }
}

pub fn arb_rational(max_den: i64) -> impl Strategy<Value = Rational> {
    (1..=max_den).prop_flat_map(|d| (0..=d).prop_map(move |k| rat(k, d)))
}

/// A graph with a point of `[0,1]^V`.
pub fn arb_graph_point(max_n: usize) -> impl Strategy<Value = (Graph, Vec<Rational>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.len();
        (Just(g), prop::collection::vec(arb_rational(10), n))
    })
}

/// `k` positive rationals summing to `total`.
pub fn random_partition(r: &mut impl Rng, k: usize, total: &Rational) -> Vec<Rational> {
    let raw: Vec<i64> = (0..k).map(|_| r.gen_range(1..=6)).collect();
    let sum: i64 = raw.iter().sum();
    raw.iter().map(|&a| total * rat(a, sum)).collect()
}

pub fn random_specs(r: &mut impl Rng, g: &Graph, max_dim: usize, infinite: bool) -> Vec<VertexAlgebraSpec<Rational>> {
    g.vertices()
        .iter()
        .map(|v| {
            let k = r.gen_range(1..=3);
            let diffuse = r.gen_bool(0.5);
            let total = if diffuse { rat(r.gen_range(3..=9), 10) } else { int(1) };
            let summands = random_partition(r, k, &total)
                .into_iter()
                .map(|w| {
                    if infinite && r.gen_bool(0.2) {
                        Summand::infinite(w)
                    } else {
                        let n = r.gen_range(1..=max_dim);
                        Summand::finite(w, random_partition(r, n, &int(1)))
                    }
                })
                .collect();
            VertexAlgebraSpec::new(v.clone(), summands, diffuse)
        })
        .collect()
}

