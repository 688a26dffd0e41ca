//! Simple undirected graphs, their Laplacians and a few metric invariants.

mod canon;
mod corpus;
mod io;
mod metrics;

use std::collections::VecDeque;

pub use canon::{canonical_form, canonical_form_with_cap, is_omega_member, DEFAULT_CANON_CAP};
pub use corpus::{connected_bipartite_graphs, unlabelled_graphs, MAX_CORPUS_N};
pub use io::{parse_edge_list, write_edge_list};
pub use metrics::{spectral_radius, spectral_radius_with, wiener_index, DEFAULT_SPECTRAL_TOL, POWER_ITERATION_CAP};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Simple graph on vertices `0..n`. Neighbour lists are kept sorted.
///
/// External text formats label vertices `1..=n`; see [`Graph::from_edge_list`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 1-based edge labels. Self-loops, labels outside
    /// `1..=n` and repeated edges are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "vertex label out of range",
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            if !g.insert_edge(u - 1, v - 1) {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "duplicate edge",
                });
            }
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edge_list`] but with 0-based vertex indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let shifted: Vec<_> = edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect();
        Graph::from_edge_list(n, &shifted)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    /// Star with centre 0.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges).expect("valid star")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn leaf_count(&self) -> usize {
        self.adj.iter().filter(|nb| nb.len() == 1).count()
    }

    /// Inserts `{u, v}`; returns false if already present.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have distances");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// A proper 2-colouring when one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color: Vec<Option<u8>> = vec![None; self.n()];
        for start in 0..self.n() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("coloured");
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("all coloured")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n());
        for (u, v) in self.edges() {
            m.set(u, v, 1);
            m.set(v, u, 1);
        }
        m
    }

    /// L = D − A.
    pub fn laplacian(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n());
        for u in 0..self.n() {
            m.set(u, u, self.degree(u) as i64);
            for &v in &self.adj[u] {
                m.set(u, v, -1);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_from_edge_lists() {
        let p2 = Graph::from_edge_list(2, &[(1, 2)]).unwrap();
        assert_eq!(p2, Graph::path(2));
        let c4 = Graph::from_edge_list(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(c4.degrees(), vec![2; 4]);
        assert_eq!(c4, Graph::cycle(4));
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::InvalidEdge {
                reason: "self-loop",
                ..
            })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 4)]),
            Err(Error::InvalidEdge { u: 1, v: 4, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 2), (2, 1)]),
            Err(Error::InvalidEdge {
                reason: "duplicate edge",
                ..
            })
        ));
    }

    #[test]
    fn laplacian_shape() {
        let l = Graph::path(2).laplacian();
        assert_eq!(l.rows(), vec![vec![1, -1], vec![-1, 1]]);
        let l = Graph::cycle(4).laplacian();
        assert_eq!(
            l.rows(),
            vec![
                vec![2, -1, 0, -1],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![-1, 0, -1, 2]
            ]
        );
        for g in [Graph::complete(5), Graph::star(6), Graph::cycle(7)] {
            let l = g.laplacian();
            assert!(l.is_symmetric());
            for i in 0..g.n() {
                assert_eq!((0..g.n()).map(|j| l.get(i, j)).sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn bipartiteness() {
        assert!(Graph::cycle(4).is_bipartite());
        assert!(!Graph::cycle(3).is_bipartite());
        assert!(Graph::star(5).is_bipartite());
        let colors = Graph::path(5).bipartition().unwrap();
        for (u, v) in Graph::path(5).edges() {
            assert_ne!(colors[u], colors[v]);
        }
    }

    #[test]
    fn edit_and_relabel() {
        let mut g = Graph::path(3);
        assert!(g.remove_edge(0, 1));
        assert!(!g.remove_edge(0, 1));
        assert!(!g.is_connected());
        assert!(g.insert_edge(0, 2));
        assert!(g.is_tree());
        let r = Graph::path(3).relabel(&[2, 0, 1]);
        assert_eq!(r.edges(), vec![(0, 1), (0, 2)]);
    }
}
