//! Helpers shared by the command-line tests.
#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use symbreak::graphs::Graph;

pub fn symbreak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symbreak"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn symbreak_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symbreak"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

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

/// All automorphisms by filtering `n!` permutations, smallest support first.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let edges = g.edges();
    let mut auts: Vec<Vec<usize>> = permutations(g.n_vertices())
        .into_iter()
        .filter(|p| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
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

pub fn brute_distinguishing(auts: &[Vec<usize>], colors: &[u32]) -> bool {
    !auts.iter().any(|p| !is_identity(p) && preserves(p, colors))
}

/// Every map `0..n -> 1..=r`, in base-`r` counting order.
pub fn all_colorings(n: usize, r: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (r as u64).pow(n as u32);
    (0..total).map(move |code| decode(code, n, r))
}

pub fn decode(mut code: u64, n: usize, r: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let c = (code % r as u64) as u32 + 1;
            code /= r as u64;
            c
        })
        .collect()
}
