use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_SPECTRAL_TOL: f64 = 1e-10;
pub const POWER_ITERATION_CAP: usize = 1_000_000;

/// Sum of shortest-path distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for s in 0..g.n() {
        for d in g.bfs_distances(s).into_iter().skip(s + 1) {
            total += d.ok_or(Error::Disconnected)? as u64;
        }
    }
    Ok(total)
}

/// Largest adjacency eigenvalue with the default tolerance.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    spectral_radius_with(g, DEFAULT_SPECTRAL_TOL, POWER_ITERATION_CAP)
}

/// Power iteration on `A + I` from the all-ones vector. The unit shift keeps
/// the Perron root strictly dominant on bipartite graphs, whose spectrum is
/// symmetric about zero. Stops once successive Rayleigh quotients of `A`
/// differ by less than `tol`.
pub fn spectral_radius_with(g: &Graph, tol: f64, max_iter: usize) -> Result<f64> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let apply = |x: &[f64]| -> Vec<f64> {
        (0..n)
            .map(|u| g.neighbors(u).iter().map(|&w| x[w]).sum::<f64>())
            .collect()
    };
    let rayleigh = |x: &[f64], ax: &[f64]| -> f64 { x.iter().zip(ax).map(|(a, b)| a * b).sum() };
    let mut ax = apply(&x);
    let mut rho = rayleigh(&x, &ax);
    for _ in 0..max_iter {
        let mut y: Vec<f64> = ax.iter().zip(&x).map(|(a, b)| a + b).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Ok(0.0);
        }
        y.iter_mut().for_each(|v| *v /= norm);
        x = y;
        ax = apply(&x);
        let next = rayleigh(&x, &ax);
        if (next - rho).abs() < tol {
            return Ok(next);
        }
        rho = next;
    }
    Err(Error::NoConvergence { iterations: max_iter })
}
