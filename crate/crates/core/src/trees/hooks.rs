use crate::error::Result;
use crate::exactalg::PolyQ;

use super::{enumerate_andre, enumerate_pointed, AndreTree, PointedAndreTree};

/// `∏_{h_v ≠ 1} (2 + q(h_v − 1))`
pub fn hook_poly_a(t: &AndreTree) -> PolyQ {
    t.hooks()
        .iter()
        .filter(|&&h| h != 1)
        .fold(PolyQ::one(), |acc, &h| &acc * &PolyQ::lin(2, h as i64 - 1))
}

/// `∏_{h_v ≠ 1} β(v)`, with `β(v) = 1 + q(h_v − 1)` on the path from the
/// root to the distinguished vertex and `2 + q(h_v − 1)` elsewhere.
pub fn hook_poly_b(t: &PointedAndreTree) -> PolyQ {
    let path = t.tree.path_to(t.point);
    t.tree
        .hooks()
        .iter()
        .enumerate()
        .filter(|&(_, &h)| h != 1)
        .fold(PolyQ::one(), |acc, (i, &h)| {
            let c = if path.contains(&(i + 1)) { 1 } else { 2 };
            &acc * &PolyQ::lin(c, h as i64 - 1)
        })
}

/// Both sides of a hook identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookReport {
    pub n: usize,
    pub trees: usize,
    pub lhs: PolyQ,
    pub rhs: PolyQ,
}

impl HookReport {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `∏_{i=1}^{n−1} (i + 1 + q(n − i)) = Σ_{T ∈ A_n} hook_poly_a(T)`
pub fn check_hook_a(n: usize, max_vertices: usize) -> Result<HookReport> {
    let trees = enumerate_andre(n, max_vertices)?;
    let n_i = n as i64;
    let lhs = (1..n_i).fold(PolyQ::one(), |acc, i| &acc * &PolyQ::lin(i + 1, n_i - i));
    let rhs = trees.iter().fold(PolyQ::zero(), |acc, t| &acc + &hook_poly_a(t));
    Ok(HookReport { n, trees: trees.len(), lhs, rhs })
}

/// `∏_{i=1}^{n} (i + q(n − i)) = Σ_{T ∈ A*_n} hook_poly_b(T)`
pub fn check_hook_b(n: usize, max_vertices: usize) -> Result<HookReport> {
    let trees = enumerate_pointed(n, max_vertices)?;
    let n_i = n as i64;
    let lhs = (1..=n_i).fold(PolyQ::one(), |acc, i| &acc * &PolyQ::lin(i, n_i - i));
    let rhs = trees.iter().fold(PolyQ::zero(), |acc, t| &acc + &hook_poly_b(t));
    Ok(HookReport { n, trees: trees.len(), lhs, rhs })
}
