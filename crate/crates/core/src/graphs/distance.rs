use std::collections::VecDeque;

use rayon::prelude::*;

use super::Graph;

/// Sentinel distance between vertices in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest distance, or [`UNREACHABLE`] if the graph is disconnected.
    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n_vertices()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Breadth-first search from every vertex.
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.n_vertices();
    let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs(g, s)).collect();
    DistanceMatrix {
        n,
        dist: rows.concat(),
    }
}

impl Graph {
    pub fn diameter(&self) -> u32 {
        distances(self).diameter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{augmented_cube, complement_perfect_matching, hypercube, Family};

    #[test]
    fn hypercube_distance_is_hamming() {
        let g = hypercube(4).unwrap();
        let d = distances(&g);
        for u in 0..16 {
            for v in 0..16 {
                assert_eq!(d.get(u, v), (u ^ v).count_ones());
            }
        }
        assert_eq!(d.diameter(), 4);
    }

    #[test]
    fn metric_axioms() {
        let g = augmented_cube(5).unwrap();
        let d = distances(&g);
        let n = g.n_vertices();
        for u in 0..n {
            assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                assert_eq!(d.get(u, v), d.get(v, u));
                for w in 0..n {
                    assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn augmented_diameters() {
        assert_eq!(augmented_cube(4).unwrap().diameter(), 2);
        assert_eq!(augmented_cube(5).unwrap().diameter(), 3);
    }

    #[test]
    fn disconnected_reports_sentinel() {
        assert_eq!(
            complement_perfect_matching(2).unwrap().diameter(),
            UNREACHABLE
        );
        let g = Graph::from_edges(4, [(0, 1), (2, 3)], Family::Other("two edges".into()), None)
            .unwrap();
        let d = distances(&g);
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.get(0, 2), UNREACHABLE);
    }
}
