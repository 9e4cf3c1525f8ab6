use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::exactalg::{PolyQ, RatPoly};

use super::{enumerate_andre, guard, AndreTree};

/// A binary tree with ordered left and right children; vertices in preorder.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryPlaneTree {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl BinaryPlaneTree {
    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    fn children(&self, v: usize) -> impl Iterator<Item = usize> {
        self.left[v].into_iter().chain(self.right[v])
    }

    /// Subtree sizes, by preorder index.
    pub fn hooks(&self) -> Vec<usize> {
        let mut h = vec![1; self.len()];
        for v in (0..self.len()).rev() {
            h[v] += self.children(v).map(|u| h[u]).sum::<usize>();
        }
        h
    }

    /// Every labeling by `1..=n` decreasing from the root; entry `v` is the label of `v`.
    pub fn decreasing_labelings(&self) -> Vec<Vec<usize>> {
        fn go(t: &BinaryPlaneTree, next: usize, avail: &mut Vec<usize>, lab: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if next == 0 {
                out.push(lab.clone());
                return;
            }
            for k in 0..avail.len() {
                let v = avail.swap_remove(k);
                lab[v] = next;
                let added: Vec<usize> = t.children(v).collect();
                avail.extend(&added);
                go(t, next - 1, avail, lab, out);
                avail.truncate(avail.len() - added.len());
                avail.push(v);
                let last = avail.len() - 1;
                avail.swap(k, last);
            }
        }
        let mut out = Vec::new();
        if !self.is_empty() {
            go(self, self.len(), &mut vec![0], &mut vec![0; self.len()], &mut out);
        }
        out
    }

    /// The André tree obtained by forgetting left and right.
    pub fn forget(&self, labels: &[usize]) -> AndreTree {
        let mut parent = vec![None; self.len()];
        for v in 0..self.len() {
            for u in self.children(v) {
                parent[labels[u] - 1] = Some(labels[v]);
            }
        }
        AndreTree::from_parents(parent).expect("decreasing labelings give André trees")
    }
}

/// All binary plane trees on `n` vertices.
pub fn enumerate_plane(n: usize, max_vertices: usize) -> Result<Vec<BinaryPlaneTree>> {
    guard(n, max_vertices)?;
    fn build(n: usize) -> Vec<BinaryPlaneTree> {
        if n == 0 {
            return vec![BinaryPlaneTree { left: vec![], right: vec![] }];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for l in build(k) {
                for r in build(n - 1 - k) {
                    let shift = |o: &Option<usize>, d: usize| o.map(|x| x + d);
                    let mut left = vec![(k > 0).then_some(1)];
                    let mut right = vec![(n - 1 - k > 0).then_some(1 + k)];
                    left.extend(l.left.iter().map(|o| shift(o, 1)));
                    right.extend(l.right.iter().map(|o| shift(o, 1)));
                    left.extend(r.left.iter().map(|o| shift(o, 1 + k)));
                    right.extend(r.right.iter().map(|o| shift(o, 1 + k)));
                    out.push(BinaryPlaneTree { left, right });
                }
            }
        }
        out
    }
    Ok(build(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostnikovReport {
    pub n: usize,
    pub plane_trees: usize,
    /// `∏_{i=1}^{n−1} (i + 1 + q(n − i))`
    pub lhs: PolyQ,
    /// `(n!/2^n) Σ_T ∏_v (q + (2 − q)/h_v)`
    pub rhs: RatPoly,
    /// Each shape has `n!/∏h_v` decreasing labelings (checked when run).
    pub labelings: Option<bool>,
    /// Forgetting left/right is `2^{in(T)}`-to-one onto the André trees.
    pub forgetting: Option<bool>,
}

impl PostnikovReport {
    pub fn pass(&self) -> bool {
        self.lhs.to_rational() == self.rhs && self.labelings != Some(false) && self.forgetting != Some(false)
    }
}

/// The hook identity over binary plane trees, with the labeling and
/// forgetting steps checked by enumeration when `n ≤ labeling_limit`.
pub fn check_postnikov(n: usize, max_vertices: usize, labeling_limit: usize) -> Result<PostnikovReport> {
    let trees = enumerate_plane(n, max_vertices)?;
    let n_i = n as i64;
    let lhs = (1..n_i).fold(PolyQ::one(), |acc, i| &acc * &PolyQ::lin(i + 1, n_i - i));
    let fact: BigInt = (1..=n as u64).fold(BigInt::one(), |a, x| a * x);
    let mut sum = RatPoly::zero();
    for t in &trees {
        let term = t.hooks().iter().fold(RatPoly::one(), |acc, &h| {
            let h = BigInt::from(h);
            &acc * &RatPoly::lin_rat(BigRational::new(BigInt::from(2), h.clone()), BigRational::one() - BigRational::new(BigInt::one(), h))
        });
        sum = &sum + &term;
    }
    let rhs = sum.scale(&BigRational::new(fact.clone(), BigInt::from(2).pow(n as u32)));
    let (mut labelings, mut forgetting) = (None, None);
    if n <= labeling_limit {
        let mut preimages: HashMap<AndreTree, usize> = HashMap::new();
        let mut ok = true;
        for t in &trees {
            let labs = t.decreasing_labelings();
            let prod: BigInt = t.hooks().iter().fold(BigInt::one(), |a, &h| a * h);
            ok &= BigInt::from(labs.len()) * prod == fact;
            for l in &labs {
                *preimages.entry(t.forget(l)).or_default() += 1;
            }
        }
        labelings = Some(ok);
        let andre = enumerate_andre(n, max_vertices)?;
        forgetting = Some(
            preimages.len() == andre.len()
                && andre.iter().all(|a| preimages.get(a) == Some(&(1usize << a.internal_count()))),
        );
    }
    Ok(PostnikovReport { n, plane_trees: trees.len(), lhs, rhs, labelings, forgetting })
}
