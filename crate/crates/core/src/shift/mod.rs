//! Edge-moving graph transformations: the Kelmans transformation and the
//! generalized shift along a path of degree-2 vertices (which on trees is the
//! generalized tree shift).

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A shift of the donor's off-path neighbours onto the recipient along `path`.
///
/// `path` runs from the recipient to the donor. `x_side` is everything not on
/// the path and not hanging off the donor; `y_side` is what hangs off the
/// donor once the path edges are removed. All three sets partition the
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GgsMove {
    path: Vec<usize>,
    x_side: Vec<usize>,
    y_side: Vec<usize>,
}

impl GgsMove {
    pub fn recipient(&self) -> usize {
        self.path[0]
    }

    pub fn donor(&self) -> usize {
        *self.path.last().expect("paths have two endpoints")
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn x_side(&self) -> &[usize] {
        &self.x_side
    }

    pub fn y_side(&self) -> &[usize] {
        &self.y_side
    }

    /// Nothing moves, or the move only mirrors the path: either endpoint
    /// lacks neighbours off the path.
    pub fn is_degenerate(&self, g: &Graph) -> bool {
        let off_path = |v: usize, along: usize| g.neighbors(v).iter().any(|&w| w != along);
        let m = self.path.len();
        !off_path(self.recipient(), self.path[1]) || !off_path(self.donor(), self.path[m - 2])
    }

    /// The move with `line` as produced by its `Display` form, checked against `g`.
    pub fn parse(g: &Graph, line: &str) -> Result<GgsMove> {
        let bad = |msg: &str| Error::InvalidMove(format!("{msg}: {line:?}"));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, k, path] = fields.as_slice() else {
            return Err(bad("expected \"u k p1,...,pm\""));
        };
        let label = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(v) if v >= 1 && v <= g.n() => Ok(v - 1),
                _ => Err(bad("vertex label out of range")),
            }
        };
        let (u, k) = (label(u)?, label(k)?);
        let path: Vec<usize> = path.split(',').map(label).collect::<Result<_>>()?;
        let mv = ggs_applicable(g, u, k).ok_or_else(|| bad("not applicable"))?;
        if mv.path != path {
            return Err(bad("path does not match the graph"));
        }
        Ok(mv)
    }
}

impl fmt::Display for GgsMove {
    /// `u k p1,...,pm` with 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{} {} {}", self.recipient() + 1, self.donor() + 1, path.join(","))
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.n() {
        Ok(())
    } else {
        Err(Error::InvalidVertex(v))
    }
}

/// Moves every edge `{x, w}` with `w ∉ N[y]` to `{y, w}`.
pub fn kelmans(g: &Graph, x: usize, y: usize) -> Result<Graph> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Err(Error::InvalidMove(
            "Kelmans transformation needs two distinct vertices".into(),
        ));
    }
    let mut out = g.clone();
    for &w in g.neighbors(x) {
        if w != y && !g.has_edge(y, w) {
            out.remove_edge(x, w);
            out.insert_edge(y, w);
        }
    }
    Ok(out)
}

/// Paths from `u` to `k` whose interior vertices all have degree 2.
fn thin_paths(g: &Graph, u: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for &first in g.neighbors(u) {
        let mut path = vec![u, first];
        loop {
            let cur = *path.last().expect("non-empty");
            if cur == k {
                out.push(path);
                break;
            }
            if cur == u || g.degree(cur) != 2 {
                break;
            }
            let prev = path[path.len() - 2];
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree 2");
            path.push(next);
        }
    }
    out
}

/// Reachability from `start` with the edges of `path` removed.
fn reach_without_path(g: &Graph, path: &[usize], start: usize) -> Vec<bool> {
    let on_path_edge = |a: usize, b: usize| {
        path.windows(2)
            .any(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))
    };
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] && !on_path_edge(v, w) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// The move with recipient `u` and donor `k`, when a path of degree-2
/// interior vertices joins them and they share no cycle.
pub fn ggs_applicable(g: &Graph, u: usize, k: usize) -> Option<GgsMove> {
    if u == k || u >= g.n() || k >= g.n() {
        return None;
    }
    let mut candidates = thin_paths(g, u, k);
    // a second candidate would close a cycle through both ends
    if candidates.len() != 1 {
        return None;
    }
    let path = candidates.pop().expect("one candidate");
    let from_u = reach_without_path(g, &path, u);
    if from_u[k] {
        return None;
    }
    let from_k = reach_without_path(g, &path, k);
    let mut on_path = vec![false; g.n()];
    path.iter().for_each(|&v| on_path[v] = true);
    let y_side = (0..g.n()).filter(|&v| from_k[v] && !on_path[v]).collect();
    let x_side = (0..g.n()).filter(|&v| !from_k[v] && !on_path[v]).collect();
    Some(GgsMove { path, x_side, y_side })
}

/// Applies `mv`: each edge from the donor to a vertex off the path is moved
/// to the recipient.
pub fn ggs(g: &Graph, mv: &GgsMove) -> Result<Graph> {
    match ggs_applicable(g, mv.recipient(), mv.donor()) {
        Some(current) if current == *mv => {}
        _ => return Err(Error::InvalidMove(format!("move {mv} does not apply to this graph"))),
    }
    let (u, k) = (mv.recipient(), mv.donor());
    let along = mv.path[mv.path.len() - 2];
    let mut out = g.clone();
    for &w in g.neighbors(k) {
        if w != along {
            out.remove_edge(k, w);
            out.insert_edge(u, w);
        }
    }
    Ok(out)
}

/// All non-degenerate moves, the smaller label as recipient, in label order.
pub fn enumerate_ggs_moves(g: &Graph) -> Vec<GgsMove> {
    let n = g.n();
    (0..n)
        .into_par_iter()
        .flat_map_iter(|u| (u + 1..n).filter_map(move |k| ggs_applicable(g, u, k).filter(|mv| !mv.is_degenerate(g))))
        .collect()
}
