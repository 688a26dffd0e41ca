//! Isomorphism-invariant encodings.
//!
//! Trees get an AHU encoding rooted at their centre(s). Unicyclic graphs whose
//! cycle carries a single vertex of degree above two are encoded by the cycle
//! length and the AHU encoding of the tree hanging off that anchor. Anything
//! else falls back to a minimum adjacency string over degree-respecting
//! relabelings, which is factorial in the worst case and therefore capped.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_CANON_CAP: usize = 10;

/// AHU encoding of the subtree at `v`, never stepping into `blocked` vertices
/// or back to `parent`.
fn ahu(g: &Graph, v: usize, parent: Option<usize>, blocked: &[bool]) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent && !blocked[w])
        .map(|&w| ahu(g, w, Some(v), blocked))
        .collect();
    children.sort_unstable();
    let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    s.push('(');
    children.iter().for_each(|c| s.push_str(c));
    s.push(')');
    s
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Vertices of the 2-core: what survives repeatedly deleting leaves.
fn two_core(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Cycle length and anchor vertex when `g` is connected, unicyclic, has more
/// vertices than its cycle, and exactly one cycle vertex has degree above two.
pub fn is_omega_member(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    if n == 0 || g.edge_count() != n || !g.is_connected() {
        return None;
    }
    // in a connected unicyclic graph the 2-core is the cycle
    let core = two_core(g);
    let cycle: Vec<usize> = (0..n).filter(|&v| core[v]).collect();
    let k = cycle.len();
    if k < 3 || k >= n {
        return None;
    }
    let heavy: Vec<usize> = cycle.iter().copied().filter(|&v| g.degree(v) > 2).collect();
    match heavy.as_slice() {
        [anchor] => Some((k, *anchor)),
        _ => None,
    }
}

fn brute_force(g: &Graph, cap: usize) -> Result<String> {
    let n = g.n();
    if n > cap {
        return Err(Error::Capacity {
            what: "brute-force canonical form (vertices)",
            requested: n as u128,
            limit: cap as u128,
        });
    }
    // vertices are placed in nondecreasing degree order; only orderings
    // within a degree class are searched
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();

    let mut best: Option<Vec<u8>> = None;
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(g, &degrees, &mut order, &mut used, &mut best);

    let bits = best.unwrap_or_default();
    let mut s = format!("G{n}:");
    for d in &degrees {
        write!(s, "{d}.").expect("write to String");
    }
    s.push(':');
    for chunk in bits.chunks(4) {
        let nibble = chunk.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | (b << (3 - i)));
        write!(s, "{nibble:x}").expect("write to String");
    }
    Ok(s)
}

/// Depth-first search over degree-respecting orderings, pruning any prefix
/// whose partial adjacency string already exceeds the best found.
fn search(g: &Graph, degrees: &[usize], order: &mut Vec<usize>, used: &mut [bool], best: &mut Option<Vec<u8>>) {
    let n = degrees.len();
    let pos = order.len();
    if pos == n {
        let bits = upper_triangle(g, order);
        if best.as_ref().is_none_or(|b| bits < *b) {
            *best = Some(bits);
        }
        return;
    }
    for v in 0..n {
        if used[v] || g.degree(v) != degrees[pos] {
            continue;
        }
        order.push(v);
        if let Some(b) = best.as_ref() {
            // columns of the upper triangle are filled in placement order, so
            // compare the prefix that is already determined
            let prefix = column_prefix(g, order);
            let reference = &b[..prefix.len()];
            if prefix.as_slice() > reference {
                order.pop();
                continue;
            }
        }
        used[v] = true;
        search(g, degrees, order, used, best);
        used[v] = false;
        order.pop();
    }
}

/// Upper triangle read column by column: entry (i, j) for j = 1.., i < j.
fn upper_triangle(g: &Graph, order: &[usize]) -> Vec<u8> {
    column_prefix(g, order)
}

fn column_prefix(g: &Graph, order: &[usize]) -> Vec<u8> {
    let mut bits = Vec::with_capacity(order.len() * order.len() / 2);
    for j in 1..order.len() {
        for i in 0..j {
            bits.push(u8::from(g.has_edge(order[i], order[j])));
        }
    }
    bits
}

/// Canonical string with the default brute-force cap.
pub fn canonical_form(g: &Graph) -> Result<String> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<String> {
    if g.is_tree() {
        let encodings = tree_centers(g)
            .into_iter()
            .map(|c| ahu(g, c, None, &vec![false; g.n()]));
        let best = encodings.min().expect("trees have a centre");
        return Ok(format!("T{}:{best}", g.n()));
    }
    if let Some((k, anchor)) = is_omega_member(g) {
        let mut blocked = two_core(g);
        blocked[anchor] = false;
        let code = ahu(g, anchor, None, &blocked);
        return Ok(format!("U{}.{k}:{code}", g.n()));
    }
    brute_force(g, cap)
}
