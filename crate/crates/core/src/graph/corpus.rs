use std::collections::BTreeMap;

use super::{canonical_form, Graph};
use crate::error::{Error, Result};

/// Largest vertex count for exhaustive graph generation.
pub const MAX_CORPUS_N: usize = 7;

/// One representative of every isomorphism class of graphs on `n` vertices
/// accepted by `keep`, sorted by canonical form. Labelled graphs are
/// generated exhaustively, so this is for small `n` only.
pub fn unlabelled_graphs(n: usize, keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    if n > MAX_CORPUS_N {
        return Err(Error::Capacity {
            what: "exhaustive graph generation (vertices)",
            requested: n as u128,
            limit: MAX_CORPUS_N as u128,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut classes = BTreeMap::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut g = Graph::empty(n);
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.insert_edge(u, v);
            }
        }
        if keep(&g) {
            classes.entry(canonical_form(&g)?).or_insert(g);
        }
    }
    Ok(classes.into_values().collect())
}

/// Connected bipartite graphs on `n` vertices, up to isomorphism.
pub fn connected_bipartite_graphs(n: usize) -> Result<Vec<Graph>> {
    unlabelled_graphs(n, |g| g.is_connected() && g.is_bipartite())
}
