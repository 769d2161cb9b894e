//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symbreak::graphs::{self, Family, Graph};

/// Every permutation of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn is_aut(g: &Graph, p: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| g.has_edge(p[u], p[v]))
}

/// All automorphisms, by filtering `n!` permutations, sorted by support
/// size so that cheap witnesses come first.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let mut auts: Vec<Vec<usize>> = permutations(g.n_vertices())
        .into_iter()
        .filter(|p| is_aut(g, p))
        .collect();
    auts.sort_by_key(|p| p.iter().enumerate().filter(|(i, &x)| *i != x).count());
    auts
}

pub fn preserves(p: &[usize], colors: &[u32]) -> bool {
    (0..p.len()).all(|v| colors[p[v]] == colors[v])
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// Distinguishing against an explicit automorphism list.
pub fn brute_distinguishing(auts: &[Vec<usize>], colors: &[u32]) -> bool {
    !auts.iter().any(|p| !is_identity(p) && preserves(p, colors))
}

/// Every map `0..n -> 1..=r`.
pub fn all_colorings(n: usize, r: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (r as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let c = (code % r as u64) as u32 + 1;
                code /= r as u64;
                c
            })
            .collect()
    })
}

/// Smallest `r` admitting a distinguishing colouring, by trying all of them.
pub fn brute_distinguishing_number(g: &Graph) -> u32 {
    let auts = brute_automorphisms(g);
    (1..=g.n_vertices() as u32)
        .find(|&r| all_colorings(g.n_vertices(), r).any(|c| brute_distinguishing(&auts, &c)))
        .unwrap_or(g.n_vertices().max(1) as u32)
}

pub fn random_graph(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    Graph::from_edges(n, edges, Family::Other(format!("random-{seed}")), None).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(
        n,
        (0..n).map(|i| (i, (i + 1) % n)),
        Family::Other(format!("cycle-{n}")),
        None,
    )
    .unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(
        n,
        (1..n).map(|i| (i - 1, i)),
        Family::Other(format!("path-{n}")),
        None,
    )
    .unwrap()
}

/// The 8-vertex graphs used for cross-validation.
pub fn eight_vertex_graphs() -> Vec<Graph> {
    let q3 = graphs::hypercube(3).unwrap();
    let mut out = vec![
        q3.clone(),
        graphs::augmented_cube(3).unwrap(),
        graphs::graph_power(&q3, 2).unwrap(),
        graphs::graph_power(&q3, 3).unwrap(),
        graphs::complement_perfect_matching(8).unwrap(),
        cycle(8),
        path(8),
    ];
    for seed in 0..4 {
        out.push(random_graph(8, 0.45, seed));
    }
    out
}
