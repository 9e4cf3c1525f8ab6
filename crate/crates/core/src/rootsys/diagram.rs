//! Coxeter diagrams of parabolic simple systems and their classification.

use crate::error::{Error, Result};

use super::{CoxeterType, RootSystem};

/// An irreducible factor of a parabolic subgroup: its type and simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicFactor {
    pub ty: CoxeterType,
    pub simple: Vec<usize>,
}

/// `m(α, β)`, the order of `s_α s_β`, for every pair of the given roots.
pub fn coxeter_matrix(rs: &RootSystem, roots: &[usize]) -> Vec<Vec<usize>> {
    roots
        .iter()
        .map(|&a| {
            roots
                .iter()
                .map(|&b| rs.reflection(rs.abs_root(a)).compose(rs.reflection(rs.abs_root(b))).order())
                .collect()
        })
        .collect()
}

/// Splits the diagram on `roots` into connected components and classifies
/// each one. The roots must form a simple system of a parabolic subgroup.
pub fn recognize_parabolic_type(rs: &RootSystem, roots: &[usize]) -> Result<Vec<ParabolicFactor>> {
    let m = coxeter_matrix(rs, roots);
    let k = roots.len();
    let mut comp = vec![usize::MAX; k];
    let mut out = Vec::new();
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut nodes = vec![start];
        comp[start] = start;
        let mut i = 0;
        while i < nodes.len() {
            let a = nodes[i];
            for b in 0..k {
                if m[a][b] >= 3 && comp[b] == usize::MAX {
                    comp[b] = start;
                    nodes.push(b);
                }
            }
            i += 1;
        }
        nodes.sort_unstable();
        let sub: Vec<Vec<usize>> = nodes.iter().map(|&a| nodes.iter().map(|&b| m[a][b]).collect()).collect();
        let ty = classify(&sub).ok_or_else(|| Error::Diagram(format!("{sub:?}")))?;
        out.push(ParabolicFactor { ty, simple: nodes.iter().map(|&a| roots[a]).collect() });
    }
    Ok(out)
}

fn classify(m: &[Vec<usize>]) -> Option<CoxeterType> {
    let k = m.len();
    match k {
        0 => return None,
        1 => return Some(CoxeterType::A(1)),
        2 => {
            return Some(match m[0][1] {
                3 => CoxeterType::A(2),
                4 => CoxeterType::B(2),
                x if x >= 5 => CoxeterType::I2(x),
                _ => return None,
            })
        }
        _ => {}
    }
    let nbrs: Vec<Vec<usize>> = (0..k).map(|a| (0..k).filter(|&b| b != a && m[a][b] >= 3).collect()).collect();
    let edges: usize = nbrs.iter().map(|n| n.len()).sum::<usize>() / 2;
    if edges != k - 1 {
        return None;
    }
    if let Some(branch) = (0..k).find(|&a| nbrs[a].len() == 3) {
        if nbrs.iter().any(|n| n.len() > 3) || (0..k).filter(|&a| nbrs[a].len() == 3).count() > 1 {
            return None;
        }
        if (0..k).any(|a| nbrs[a].iter().any(|&b| m[a][b] != 3)) {
            return None;
        }
        let mut arms: Vec<usize> = nbrs[branch].iter().map(|&b| walk(&nbrs, branch, b).len()).collect();
        arms.sort_unstable();
        return match arms.as_slice() {
            [1, 1, x] => Some(CoxeterType::D(x + 3)),
            [1, 2, 2] => Some(CoxeterType::E6),
            _ => None,
        };
    }
    let end = (0..k).find(|&a| nbrs[a].len() == 1)?;
    let path: Vec<usize> = std::iter::once(end).chain(walk(&nbrs, end, nbrs[end][0])).collect();
    let labels: Vec<usize> = path.windows(2).map(|w| m[w[0]][w[1]]).collect();
    let count = |x: usize| labels.iter().filter(|&&l| l == x).count();
    let at_end = |x: usize| labels[0] == x || labels[k - 2] == x;
    if count(3) == k - 1 {
        Some(CoxeterType::A(k))
    } else if count(4) == 1 && count(3) == k - 2 && at_end(4) {
        Some(CoxeterType::B(k))
    } else if k == 4 && labels == [3, 4, 3] {
        Some(CoxeterType::F4)
    } else if k == 3 && count(5) == 1 && count(3) == 1 {
        Some(CoxeterType::H3)
    } else {
        None
    }
}

/// Nodes reached going from `from` through `next` away from `from`.
fn walk(nbrs: &[Vec<usize>], from: usize, next: usize) -> Vec<usize> {
    let (mut prev, mut cur) = (from, next);
    let mut out = vec![cur];
    loop {
        let forward: Vec<usize> = nbrs[cur].iter().copied().filter(|&x| x != prev).collect();
        match forward.as_slice() {
            [n] => {
                out.push(*n);
                prev = cur;
                cur = *n;
            }
            _ => return out,
        }
    }
}
