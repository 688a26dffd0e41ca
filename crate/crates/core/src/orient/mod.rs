//! Vertex orientations, their cycle types, and censuses of orientations by type.
//!
//! A (partial) vertex orientation sends each vertex of its domain `B` to one
//! neighbour. Following arrows gives a functional digraph whose directed
//! cycles of length at least 2 determine the type; every other vertex,
//! oriented or not, contributes a part of size 1.

mod census;
mod transport;

pub use census::{
    count_b_types, count_b_types_all, count_b_types_all_capped, count_full_types, count_full_types_capped,
    OrientationCensus, DEFAULT_ENUMERATION_CAP,
};
pub use transport::transport_delta;

use num_bigint::BigInt;

use crate::combinat::{alpha, alpha_tau, Basis, Partition};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cycle type of an orientation, as a partition of `n`.
pub type OrientationType = Partition;

/// Arrows from a vertex subset into neighbours. Vertices outside the domain
/// carry no arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexOrientation {
    arrows: Vec<Option<usize>>,
}

impl VertexOrientation {
    /// Validates every arrow against `g`.
    pub fn new(g: &Graph, arrows: Vec<Option<usize>>) -> Result<Self> {
        let o = VertexOrientation { arrows };
        o.check(g)?;
        Ok(o)
    }

    /// An orientation of every vertex.
    pub fn full(g: &Graph, targets: Vec<usize>) -> Result<Self> {
        Self::new(g, targets.into_iter().map(Some).collect())
    }

    /// The orientation with empty domain.
    pub fn empty(n: usize) -> Self {
        VertexOrientation { arrows: vec![None; n] }
    }

    pub(crate) fn from_arrows_unchecked(arrows: Vec<Option<usize>>) -> Self {
        VertexOrientation { arrows }
    }

    pub fn n(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, v: usize) -> Option<usize> {
        self.arrows[v]
    }

    pub fn arrows(&self) -> &[Option<usize>] {
        &self.arrows
    }

    /// The domain `B`, sorted.
    pub fn domain(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.arrows[v].is_some()).collect()
    }

    pub fn domain_size(&self) -> usize {
        self.arrows.iter().filter(|a| a.is_some()).count()
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                found: self.n(),
            });
        }
        for (v, a) in self.arrows.iter().enumerate() {
            if let Some(w) = *a {
                if w >= g.n() || !g.has_edge(v, w) {
                    return Err(Error::InvalidOrientation(format!(
                        "arrow {} -> {} is not along an edge",
                        v + 1,
                        w + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Lengths of the directed cycles, in no particular order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.n();
        // 0 unvisited, 1 on the current walk, 2 finished
        let mut state = vec![0u8; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            let mut walk = Vec::new();
            let mut v = start;
            loop {
                if state[v] == 2 {
                    break;
                }
                if state[v] == 1 {
                    let pos = walk.iter().position(|&u| u == v).expect("on the walk");
                    lengths.push(walk.len() - pos);
                    break;
                }
                state[v] = 1;
                walk.push(v);
                match self.arrows[v] {
                    Some(w) => v = w,
                    None => break,
                }
            }
            for u in walk {
                state[u] = 2;
            }
        }
        lengths
    }
}

/// The type of `o` on `g`: one part per directed cycle, padded with 1s to `n`.
pub fn classify_type(g: &Graph, o: &VertexOrientation) -> Result<OrientationType> {
    o.check(g)?;
    let mut parts = o.cycle_lengths();
    let on_cycles: usize = parts.iter().sum();
    parts.extend(std::iter::repeat_n(1, g.n() - on_cycles));
    Ok(Partition::from_unsorted(parts))
}

fn require_bipartite(g: &Graph) -> Result<()> {
    if g.is_bipartite() {
        Ok(())
    } else {
        Err(Error::NotBipartite)
    }
}

fn check_partition(g: &Graph, lam: &Partition) -> Result<()> {
    if lam.n() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: lam.n(),
        });
    }
    Ok(())
}

/// `Σ_μ a_G(μ)·α_{λ,μ}` for bipartite `g`.
pub fn immanant_via_orientations(g: &Graph, lam: &Partition) -> Result<BigInt> {
    require_bipartite(g)?;
    check_partition(g, lam)?;
    count_full_types(g)?.pair_with(|mu| alpha(lam, mu))
}

/// `Σ_μ a_{G,r}(μ)·α_{λ,μ}` for bipartite `g`.
pub fn coefficient_via_orientations(g: &Graph, lam: &Partition, r: usize) -> Result<BigInt> {
    coefficient_via_orientations_in(g, Basis::Schur, lam, r)
}

/// Same pairing with `α_μ(τ)` for the `basis` element indexed by `lam`.
pub fn coefficient_via_orientations_in(g: &Graph, basis: Basis, lam: &Partition, r: usize) -> Result<BigInt> {
    require_bipartite(g)?;
    check_partition(g, lam)?;
    count_b_types(g, r)?.pair_with(|mu| alpha_tau(basis, lam, mu))
}
