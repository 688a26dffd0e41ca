//! Shift orders on unlabelled graph families and their Hasse diagrams.

mod family;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;

pub use family::{
    enumerate_family, enumerate_family_with_forms, rooted_tree_level_sequences, FamilySpec, DEFAULT_MAX_HANGING_TREE,
    DEFAULT_MAX_TREE_N,
};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, write_edge_list, Graph};
use crate::shift::{enumerate_ggs_moves, ggs, GgsMove};

#[derive(Debug, Clone)]
pub struct PosetNode {
    pub id: usize,
    pub canonical: String,
    pub graph: Graph,
}

/// A cover `lower < upper`, with a move taking `lower` to a graph isomorphic
/// to `upper`.
#[derive(Debug, Clone)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub witness: GgsMove,
}

#[derive(Debug, Clone)]
pub struct HasseDiagram {
    pub nodes: Vec<PosetNode>,
    pub covers: Vec<Cover>,
}

/// Builds the order with the default family caps.
pub fn build_poset(spec: FamilySpec) -> Result<HasseDiagram> {
    build_poset_capped(spec, DEFAULT_MAX_TREE_N, DEFAULT_MAX_HANGING_TREE)
}

pub fn build_poset_capped(spec: FamilySpec, max_tree_n: usize, max_hanging_tree: usize) -> Result<HasseDiagram> {
    spec.validate()?;
    spec.check_caps(max_tree_n, max_hanging_tree)?;
    let nodes: Vec<PosetNode> = enumerate_family_with_forms(spec)?
        .into_iter()
        .enumerate()
        .map(|(id, (canonical, graph))| PosetNode { id, canonical, graph })
        .collect();
    let index: HashMap<&str, usize> = nodes.iter().map(|v| (v.canonical.as_str(), v.id)).collect();

    let per_node: Vec<Vec<(usize, GgsMove)>> = nodes
        .par_iter()
        .map(|node| -> Result<Vec<(usize, GgsMove)>> {
            let mut out = Vec::new();
            for mv in enumerate_ggs_moves(&node.graph) {
                let image = ggs(&node.graph, &mv)?;
                let form = canonical_form(&image)?;
                let &upper = index
                    .get(form.as_str())
                    .ok_or_else(|| Error::InvalidFamily(format!("shift {mv} leaves {spec}: {form}")))?;
                out.push((upper, mv));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;

    // first witness per arc, in move order
    let mut arcs: BTreeMap<(usize, usize), GgsMove> = BTreeMap::new();
    for (lower, targets) in per_node.into_iter().enumerate() {
        for (upper, mv) in targets {
            if upper == lower {
                return Err(Error::InvalidFamily(format!(
                    "shift {mv} fixes {}",
                    nodes[lower].canonical
                )));
            }
            arcs.entry((lower, upper)).or_insert(mv);
        }
    }
    let covers = transitive_reduction(nodes.len(), arcs)?;
    Ok(HasseDiagram { nodes, covers })
}

/// Keeps the arcs not implied by longer chains. Errors on a directed cycle.
fn transitive_reduction(n: usize, arcs: BTreeMap<(usize, usize), GgsMove>) -> Result<Vec<Cover>> {
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for &(a, b) in arcs.keys() {
        succ[a].push(b);
        indegree[b] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    while let Some(v) = ready.pop() {
        order.push(v);
        for &w in &succ[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(w);
            }
        }
    }
    if order.len() != n {
        return Err(Error::InvalidFamily("shift relation has a directed cycle".into()));
    }
    // strict descendants, as bitsets
    let words = n.div_ceil(64);
    let mut reach = vec![vec![0u64; words]; n];
    for &v in order.iter().rev() {
        let mut bits = vec![0u64; words];
        for &w in &succ[v] {
            bits[w / 64] |= 1 << (w % 64);
            for (b, r) in bits.iter_mut().zip(&reach[w]) {
                *b |= r;
            }
        }
        reach[v] = bits;
    }
    let reaches = |a: usize, b: usize| reach[a][b / 64] >> (b % 64) & 1 == 1;
    Ok(arcs
        .into_iter()
        .filter(|&((a, b), _)| !succ[a].iter().any(|&c| c != b && reaches(c, b)))
        .map(|((lower, upper), witness)| Cover { lower, upper, witness })
        .collect())
}

impl HasseDiagram {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Ids with no cover above and no cover below.
    pub fn extremal_elements(&self) -> (Vec<usize>, Vec<usize>) {
        let mut has_up = vec![false; self.len()];
        let mut has_down = vec![false; self.len()];
        for c in &self.covers {
            has_up[c.lower] = true;
            has_down[c.upper] = true;
        }
        let maximal = (0..self.len()).filter(|&v| !has_up[v]).collect();
        let minimal = (0..self.len()).filter(|&v| !has_down[v]).collect();
        (maximal, minimal)
    }

    /// Nodes reachable upward from `start`, including itself.
    pub fn up_set(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for c in self.covers.iter().filter(|c| c.lower == v) {
                if !seen[c.upper] {
                    seen[c.upper] = true;
                    stack.push(c.upper);
                }
            }
        }
        seen
    }

    /// DOT digraph with arcs from lower to upper.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for v in &self.nodes {
            let edges: Vec<String> = write_edge_list(&v.graph)
                .lines()
                .skip(1)
                .map(|l| l.replace(' ', "-"))
                .collect();
            writeln!(out, "  n{} [label=\"{}\"]; // {}", v.id, v.canonical, edges.join(" ")).expect("write to String");
        }
        for c in &self.covers {
            writeln!(out, "  n{} -> n{}; // {}", c.lower, c.upper, c.witness).expect("write to String");
        }
        out.push_str("}\n");
        out
    }

    /// `node_id,canonical_form,is_max,is_min` rows.
    pub fn to_csv(&self) -> String {
        let (maximal, minimal) = self.extremal_elements();
        let mut out = String::from("node_id,canonical_form,is_max,is_min\n");
        for v in &self.nodes {
            writeln!(
                out,
                "{},{},{},{}",
                v.id,
                v.canonical,
                maximal.contains(&v.id),
                minimal.contains(&v.id)
            )
            .expect("write to String");
        }
        out
    }
}

/// Same as [`HasseDiagram::extremal_elements`].
pub fn extremal_elements(h: &HasseDiagram) -> (Vec<usize>, Vec<usize>) {
    h.extremal_elements()
}

/// Same as [`HasseDiagram::to_dot`].
pub fn export_dot(h: &HasseDiagram) -> String {
    h.to_dot()
}
