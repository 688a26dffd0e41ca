use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph};

/// Largest tree family built by default.
pub const DEFAULT_MAX_TREE_N: usize = 12;
/// Largest hanging tree (vertices, root included) for unicyclic families.
pub const DEFAULT_MAX_HANGING_TREE: usize = 9;

/// An unlabelled graph family closed under non-degenerate shifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// All trees on `n` vertices.
    Trees { n: usize },
    /// A `k`-cycle with one rooted tree on `n - k + 1` vertices glued at its
    /// root to a single cycle vertex.
    Unicyclic { n: usize, k: usize },
}

impl FamilySpec {
    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::Trees { n } | FamilySpec::Unicyclic { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Trees { n: 0 } => Err(Error::InvalidFamily("trees need n >= 1".into())),
            FamilySpec::Unicyclic { n, k } if k < 3 || n <= k => Err(Error::InvalidFamily(format!(
                "unicyclic family needs n > k >= 3, got n = {n}, k = {k}"
            ))),
            _ => Ok(()),
        }
    }

    /// Refuses families above the given size limits.
    pub fn check_caps(&self, max_tree_n: usize, max_hanging_tree: usize) -> Result<()> {
        let (requested, limit, what) = match *self {
            FamilySpec::Trees { n } => (n, max_tree_n, "tree family (vertices)"),
            FamilySpec::Unicyclic { n, k } => (n - k + 1, max_hanging_tree, "unicyclic family (hanging tree vertices)"),
        };
        if requested > limit {
            return Err(Error::Capacity {
                what,
                requested: requested as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Trees { n } => write!(f, "trees(n={n})"),
            FamilySpec::Unicyclic { n, k } => write!(f, "unicyclic(n={n}, k={k})"),
        }
    }
}

/// Level sequences of all rooted trees on `m` vertices, one per
/// isomorphism class, in decreasing lexicographic order.
pub fn rooted_tree_level_sequences(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return Vec::new();
    }
    // start from the path hanging from the root
    let mut seq: Vec<usize> = (0..m).collect();
    let mut out = vec![seq.clone()];
    // last position with level above 1
    while let Some(p) = (0..m).rev().find(|&i| seq[i] > 1) {
        let q = (0..p)
            .rev()
            .find(|&i| seq[i] == seq[p] - 1)
            .expect("parent level exists");
        let period = p - q;
        for i in p..m {
            seq[i] = seq[i - period];
        }
        out.push(seq.clone());
    }
    out
}

/// Edges of the rooted tree with `levels`, vertices numbered in sequence
/// order plus `offset`, root first.
fn tree_edges(levels: &[usize], offset: usize, root: usize) -> Vec<(usize, usize)> {
    let mut last_at_level: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    for (i, &lvl) in levels.iter().enumerate() {
        let v = if i == 0 { root } else { offset + i - 1 };
        last_at_level.truncate(lvl);
        if let Some(&parent) = last_at_level.last() {
            edges.push((parent, v));
        }
        last_at_level.push(v);
    }
    edges
}

fn dedupe(graphs: impl Iterator<Item = Graph>) -> Result<Vec<(String, Graph)>> {
    let mut seen = BTreeMap::new();
    for g in graphs {
        let key = canonical_form(&g)?;
        seen.entry(key).or_insert(g);
    }
    Ok(seen.into_iter().collect())
}

/// One representative per isomorphism class, with its canonical form,
/// sorted by canonical form.
pub fn enumerate_family_with_forms(spec: FamilySpec) -> Result<Vec<(String, Graph)>> {
    spec.validate()?;
    match spec {
        FamilySpec::Trees { n } => dedupe(rooted_tree_level_sequences(n).into_iter().map(|levels| {
            let edges = tree_edges(&levels, 1, 0);
            Graph::from_edges(n, &edges).expect("level sequences give trees")
        })),
        FamilySpec::Unicyclic { n, k } => {
            let members = dedupe(rooted_tree_level_sequences(n - k + 1).into_iter().map(|levels| {
                let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                edges.extend(tree_edges(&levels, k, 0));
                Graph::from_edges(n, &edges).expect("cycle plus hanging tree")
            }))?;
            // distinct rooted trees give distinct members
            debug_assert_eq!(members.len(), rooted_tree_level_sequences(n - k + 1).len());
            Ok(members)
        }
    }
}

pub fn enumerate_family(spec: FamilySpec) -> Result<Vec<Graph>> {
    Ok(enumerate_family_with_forms(spec)?.into_iter().map(|(_, g)| g).collect())
}
