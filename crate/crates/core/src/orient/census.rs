use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::combinat::{Partition, SymmetricGroup};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest number of orientations enumerated before refusing.
pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

/// Orientation counts by type, over the partitions of `n`.
#[derive(Debug, Clone)]
pub struct OrientationCensus {
    group: Arc<SymmetricGroup>,
    counts: Vec<u64>,
}

impl PartialEq for OrientationCensus {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.counts == other.counts
    }
}

impl Eq for OrientationCensus {}

impl OrientationCensus {
    fn zero(n: usize) -> Self {
        let group = SymmetricGroup::get(n);
        let counts = vec![0; group.partitions().len()];
        OrientationCensus { group, counts }
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn get(&self, ty: &Partition) -> u64 {
        if ty.n() != self.n() {
            return 0;
        }
        self.counts[self.group.index_of(ty)]
    }

    /// Types with a nonzero count, in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> + '_ {
        self.group
            .partitions()
            .iter()
            .zip(self.counts.iter().copied())
            .filter(|&(_, c)| c > 0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| u128::from(c)).sum()
    }

    /// `Σ_μ count(μ)·weight(μ)`.
    pub fn pair_with(&self, mut weight: impl FnMut(&Partition) -> Result<BigInt>) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (mu, c) in self.iter() {
            total += weight(mu)? * c;
        }
        Ok(total)
    }
}

const NONE: usize = usize::MAX;

struct Walk<'a> {
    g: &'a Graph,
    partial: bool,
    arrows: Vec<usize>,
    cycles: Vec<u16>,
    oriented: usize,
    /// Indexed by domain size; keys are cycle counts by length.
    hist: Vec<HashMap<Vec<u16>, u64>>,
}

impl<'a> Walk<'a> {
    fn new(g: &'a Graph, partial: bool) -> Self {
        let n = g.n();
        Walk {
            g,
            partial,
            arrows: vec![NONE; n],
            cycles: vec![0; n + 1],
            oriented: 0,
            hist: vec![HashMap::new(); n + 1],
        }
    }

    /// Vertices are decided in increasing order, so anything above `v` is
    /// still open. Returns the length of the cycle closed by `v -> t`.
    fn closes_cycle(&self, v: usize, t: usize) -> Option<usize> {
        let mut u = t;
        for steps in 1..=self.arrows.len() {
            if u == v {
                return Some(steps);
            }
            if u > v || self.arrows[u] == NONE {
                return None;
            }
            u = self.arrows[u];
        }
        None
    }

    fn choose(&mut self, v: usize, target: Option<usize>) {
        let Some(t) = target else {
            self.descend(v + 1);
            return;
        };
        self.arrows[v] = t;
        self.oriented += 1;
        let closed = self.closes_cycle(v, t);
        if let Some(len) = closed {
            self.cycles[len] += 1;
        }
        self.descend(v + 1);
        if let Some(len) = closed {
            self.cycles[len] -= 1;
        }
        self.oriented -= 1;
        self.arrows[v] = NONE;
    }

    fn descend(&mut self, v: usize) {
        if v == self.arrows.len() {
            let bucket = &mut self.hist[self.oriented];
            match bucket.get_mut(self.cycles.as_slice()) {
                Some(c) => *c += 1,
                None => {
                    bucket.insert(self.cycles.clone(), 1);
                }
            }
            return;
        }
        if self.partial {
            self.choose(v, None);
        }
        for i in 0..self.g.degree(v) {
            let t = self.g.neighbors(v)[i];
            self.choose(v, Some(t));
        }
    }
}

fn enumeration_size(g: &Graph, partial: bool) -> u128 {
    g.degrees()
        .into_iter()
        .map(|d| d as u128 + u128::from(partial))
        .fold(1u128, |acc, f| acc.saturating_mul(f))
}

/// Histograms indexed by domain size.
fn enumerate(g: &Graph, partial: bool, cap: u128) -> Result<Vec<OrientationCensus>> {
    let size = enumeration_size(g, partial);
    if size > cap {
        return Err(Error::Capacity {
            what: "orientation enumeration",
            requested: size,
            limit: cap,
        });
    }
    let n = g.n();
    let mut out: Vec<OrientationCensus> = (0..=n).map(|_| OrientationCensus::zero(n)).collect();
    if n == 0 {
        out[0].counts[0] = 1;
        return Ok(out);
    }
    let mut first: Vec<Option<usize>> = g.neighbors(0).iter().copied().map(Some).collect();
    if partial {
        first.insert(0, None);
    }
    let parts: Vec<Vec<HashMap<Vec<u16>, u64>>> = first
        .into_par_iter()
        .map(|choice| {
            let mut walk = Walk::new(g, partial);
            walk.choose(0, choice);
            walk.hist
        })
        .collect();
    let group = SymmetricGroup::get(n);
    for hist in parts {
        for (r, bucket) in hist.into_iter().enumerate() {
            for (cycles, count) in bucket {
                let mut mult: Vec<usize> = cycles.iter().map(|&c| usize::from(c)).collect();
                let on_cycles: usize = mult.iter().enumerate().map(|(len, &c)| len * c).sum();
                mult[1] = n - on_cycles;
                let idx = group.index_of(&Partition::from_multiplicities(&mult));
                out[r].counts[idx] += count;
            }
        }
    }
    Ok(out)
}

/// `a_G(μ)`: every vertex oriented.
pub fn count_full_types(g: &Graph) -> Result<OrientationCensus> {
    count_full_types_capped(g, DEFAULT_ENUMERATION_CAP)
}

pub fn count_full_types_capped(g: &Graph, cap: u128) -> Result<OrientationCensus> {
    let mut all = enumerate(g, false, cap)?;
    Ok(all.swap_remove(g.n()))
}

/// `a_{G,r}(μ)`: summed over all domains of size `r`.
pub fn count_b_types(g: &Graph, r: usize) -> Result<OrientationCensus> {
    if r > g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: r,
        });
    }
    let mut all = count_b_types_all(g)?;
    Ok(all.swap_remove(r))
}

/// `a_{G,r}` for every `r = 0..=n`, from a single enumeration.
pub fn count_b_types_all(g: &Graph) -> Result<Vec<OrientationCensus>> {
    count_b_types_all_capped(g, DEFAULT_ENUMERATION_CAP)
}

pub fn count_b_types_all_capped(g: &Graph, cap: u128) -> Result<Vec<OrientationCensus>> {
    enumerate(g, true, cap)
}

#[cfg(test)]
mod tests {
    use super::super::{classify_type, VertexOrientation};
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Direct enumeration over the product space, classifying each element.
    fn brute_census(g: &Graph, partial: bool) -> Vec<Vec<(Partition, u64)>> {
        let n = g.n();
        let mut per_r: Vec<HashMap<Partition, u64>> = vec![HashMap::new(); n + 1];
        let choices: Vec<Vec<Option<usize>>> = (0..n)
            .map(|v| {
                let mut c: Vec<Option<usize>> = g.neighbors(v).iter().copied().map(Some).collect();
                if partial {
                    c.push(None);
                }
                c
            })
            .collect();
        let mut idx = vec![0usize; n];
        if choices.iter().any(Vec::is_empty) {
            return vec![Vec::new(); n + 1];
        }
        loop {
            let arrows: Vec<Option<usize>> = (0..n).map(|v| choices[v][idx[v]]).collect();
            let o = VertexOrientation::new(g, arrows).unwrap();
            // vertices outside the domain carry no arrow, so no cycle leaves it
            assert!(o.cycle_lengths().iter().sum::<usize>() <= o.domain_size());
            *per_r[o.domain_size()].entry(classify_type(g, &o).unwrap()).or_default() += 1;
            let mut v = 0;
            while v < n {
                idx[v] += 1;
                if idx[v] < choices[v].len() {
                    break;
                }
                idx[v] = 0;
                v += 1;
            }
            if v == n {
                break;
            }
        }
        per_r
            .into_iter()
            .map(|m| {
                let mut v: Vec<_> = m.into_iter().collect();
                v.sort();
                v
            })
            .collect()
    }

    fn as_sorted(c: &OrientationCensus) -> Vec<(Partition, u64)> {
        let mut v: Vec<_> = c.iter().map(|(p, c)| (p.clone(), c)).collect();
        v.sort();
        v
    }

    #[test]
    fn small_censuses() {
        let p2 = count_full_types(&Graph::path(2)).unwrap();
        assert_eq!(as_sorted(&p2), vec![(p("2"), 1)]);

        let c4 = count_full_types(&Graph::cycle(4)).unwrap();
        assert_eq!(c4.total(), 16);
        assert_eq!(c4.get(&p("4")), 2);
        assert_eq!(c4.get(&p("2,2")), 2);

        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let full = count_full_types(&g).unwrap();
        for ty in ["2,2,1,1", "4,1,1", "4,2"] {
            assert!(full.get(&p(ty)) > 0, "{ty}");
        }
        let all = count_b_types_all(&g).unwrap();
        assert_eq!(all[0].get(&Partition::column(6)), 1);
        assert_eq!(all[0].total(), 1);
        assert_eq!(all[1].get(&Partition::column(6)), 2 * g.edge_count() as u64);
        assert_eq!(all[6], full);
    }

    #[test]
    fn caps_are_enforced() {
        let err = count_full_types_capped(&Graph::complete(5), 100).unwrap_err();
        assert!(matches!(err, Error::Capacity { requested: 1024, .. }));
        assert!(count_b_types(&Graph::path(3), 4).is_err());
    }

    #[test]
    fn matches_product_space_enumeration() {
        let graphs = [
            Graph::cycle(5),
            Graph::complete(4),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap(),
        ];
        for g in graphs {
            let fast = count_b_types_all(&g).unwrap();
            let slow = brute_census(&g, true);
            for r in 0..=g.n() {
                assert_eq!(as_sorted(&fast[r]), slow[r], "r = {r}");
            }
            assert_eq!(
                as_sorted(&count_full_types(&g).unwrap()),
                brute_census(&g, false)[g.n()]
            );
        }
    }

    proptest! {
        #[test]
        fn census_identities(mask in 0u32..(1 << 15)) {
            let n = 6;
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let full = count_full_types(&g).unwrap();
            let product: u128 = g.degrees().iter().map(|&d| d as u128).product();
            prop_assert_eq!(full.total(), product);
            if g.is_bipartite() {
                for (mu, _) in full.iter() {
                    prop_assert!(mu.parts().iter().all(|&part| part <= 2 || part % 2 == 0));
                }
            }
            let all = count_b_types_all(&g).unwrap();
            let total: u128 = all.iter().map(OrientationCensus::total).sum();
            let expected: u128 = g.degrees().iter().map(|&d| d as u128 + 1).product();
            prop_assert_eq!(total, expected);
        }
    }
}
