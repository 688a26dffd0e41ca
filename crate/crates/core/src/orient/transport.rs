//! Carrying partial orientations back across a shift.
//!
//! Let `G2 = ggs(G1, mv)` with path `p_1 = recipient, ..., p_m = donor`. In
//! `G2` the donor's former neighbours `Y` hang off the recipient and the donor
//! is a leaf on `p_{m-1}`. An orientation of `G2` is sent to one of `G1` with
//! the same domain size and type:
//!
//! * if the recipient does not point into `Y`, every arrow is kept except
//!   arrows from `Y` into the recipient, which point at the donor instead;
//! * otherwise the donor takes over the recipient's arrow into `Y`, arrows
//!   from `Y` into the recipient are redirected to the donor, and the path is
//!   reflected: `p_i` (for `i >= 2`) hands its arrow to `p_{m+1-i}`, with
//!   "towards the recipient" becoming "towards the donor".
//!
//! Images of the first kind leave the donor unoriented or pointing along the
//! path, images of the second kind point it into `Y`, so the map is injective.

use super::VertexOrientation;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::shift::{ggs, GgsMove};

/// Maps an orientation of `ggs(g1, mv)` to one of `g1` of the same type.
pub fn transport_delta(g1: &Graph, mv: &GgsMove, o: &VertexOrientation) -> Result<VertexOrientation> {
    let g2 = ggs(g1, mv)?;
    o.check(&g2)?;
    let n = g1.n();
    let path = mv.path();
    let m = path.len();
    let (recipient, donor) = (mv.recipient(), mv.donor());
    let mut in_y = vec![false; n];
    mv.y_side().iter().for_each(|&v| in_y[v] = true);

    let mut arrows = o.arrows().to_vec();
    for &y in mv.y_side() {
        if arrows[y] == Some(recipient) {
            arrows[y] = Some(donor);
        }
    }

    if let Some(target) = o.arrow(recipient).filter(|&t| in_y[t]) {
        let mut position = vec![usize::MAX; n];
        path.iter().enumerate().for_each(|(i, &v)| position[v] = i);
        path.iter().for_each(|&v| arrows[v] = None);
        arrows[donor] = Some(target);
        // 0-based: p_i (i >= 1) moves to p_{m-1-i}
        for i in 1..m {
            let Some(t) = o.arrow(path[i]) else { continue };
            let towards_recipient = position[t] == i - 1;
            if position[t] == usize::MAX || (!towards_recipient && position[t] != i + 1) {
                return Err(Error::InvalidOrientation(format!(
                    "path vertex {} points off the path",
                    path[i] + 1
                )));
            }
            let j = m - 1 - i;
            arrows[path[j]] = Some(if towards_recipient { path[j + 1] } else { path[j - 1] });
        }
    }

    let out = VertexOrientation::from_arrows_unchecked(arrows);
    out.check(g1)?;
    Ok(out)
}
