use std::collections::{BTreeSet, HashSet};

use crate::classes::{class_poly_formula, ClassEngine};
use crate::error::{Error, Result};
use crate::noncross::{NcChain, NcLattice};
use crate::partition::{blocks_a, blocks_b, BlocksA, BlocksB};
use crate::rootsys::CoxeterType;

use super::hooks::{hook_poly_a, hook_poly_b};
use super::{enumerate_andre, enumerate_pointed, AndreTree, PointedAndreTree};

/// Block sequence of the flats along a type A chain.
pub fn chain_to_merge_a(lat: &NcLattice<'_>, chain: &NcChain) -> Result<Vec<BlocksA>> {
    chain.partitions(lat).into_iter().map(|p| blocks_a(lat.rs(), p)).collect()
}

/// Signed block sequence of the flats along a type B chain.
pub fn chain_to_merge_b(lat: &NcLattice<'_>, chain: &NcChain) -> Result<Vec<BlocksB>> {
    chain.partitions(lat).into_iter().map(|p| blocks_b(lat.rs(), p)).collect()
}

fn malformed(why: &str) -> Error {
    Error::Invalid(format!("malformed merge chain: {why}"))
}

/// Parent of each vertex: the first later vertex whose blocks contain its blocks.
fn nest<T: Ord + Copy>(vertices: &[Vec<BTreeSet<T>>]) -> Vec<Option<usize>> {
    (0..vertices.len())
        .map(|i| {
            (i + 1..vertices.len())
                .find(|&j| vertices[i].iter().all(|b| vertices[j].iter().any(|big| b.is_subset(big))))
                .map(|j| j + 1)
        })
        .collect()
}

/// Vertex `i` is the block created by the `i`-th merge; it lies below the
/// blocks that later contain it. A chain on `m` points gives `m − 1` vertices.
pub fn stanley_a(chain: &[BlocksA]) -> Result<AndreTree> {
    let m = chain.first().ok_or_else(|| malformed("empty"))?.m;
    if m < 2 || chain.len() != m || chain[0] != BlocksA::singletons(m) || chain[m - 1].blocks.len() != 1 {
        return Err(malformed("must run from singletons to one block"));
    }
    let mut vertices = Vec::new();
    for w in chain.windows(2) {
        let before: HashSet<&Vec<usize>> = w[0].blocks.iter().collect();
        let after: HashSet<&Vec<usize>> = w[1].blocks.iter().collect();
        let gone: Vec<_> = before.difference(&after).collect();
        let new: Vec<_> = after.difference(&before).collect();
        let [b] = new.as_slice() else { return Err(malformed("one block must appear per step")) };
        if gone.len() != 2 || gone.iter().map(|g| g.len()).sum::<usize>() != b.len() {
            return Err(malformed("each step merges two blocks"));
        }
        vertices.push(vec![b.iter().copied().collect::<BTreeSet<usize>>()]);
    }
    AndreTree::from_parents(nest(&vertices))
}

/// Vertices are zero blocks and pairs of opposite blocks (of size at least
/// two), labelled by the step that creates them; the vertex created when a
/// zero block first appears is distinguished.
pub fn stanley_b(chain: &[BlocksB]) -> Result<PointedAndreTree> {
    let n = chain.first().ok_or_else(|| malformed("empty"))?.n;
    let last = chain.last().expect("nonempty");
    if chain.len() != n + 1 || chain[0] != BlocksB::singletons(n) || last.blocks.len() != 1 || last.zero_block().is_none() {
        return Err(malformed("must run from singletons to the zero block"));
    }
    let mut vertices = Vec::new();
    let mut point = None;
    for (i, w) in chain.windows(2).enumerate() {
        let before: HashSet<&Vec<i64>> = w[0].blocks.iter().collect();
        let after: HashSet<&Vec<i64>> = w[1].blocks.iter().collect();
        let gone: BTreeSet<i64> = before.difference(&after).flat_map(|b| b.iter().copied()).collect();
        let new: Vec<&&Vec<i64>> = after.difference(&before).collect();
        let union: BTreeSet<i64> = new.iter().flat_map(|b| b.iter().copied()).collect();
        if gone != union || new.is_empty() {
            return Err(malformed("blocks must merge"));
        }
        let is_zero = |b: &Vec<i64>| b.contains(&-b[0]);
        let vertex = match new.as_slice() {
            [z] if is_zero(z) => {
                if w[0].zero_block().is_none() {
                    point = Some(i + 1);
                }
                vec![z.iter().copied().collect()]
            }
            [x, y] if !is_zero(x) && x.iter().all(|v| y.contains(&-v)) && x.len() == y.len() => {
                vec![x.iter().copied().collect(), y.iter().copied().collect::<BTreeSet<i64>>()]
            }
            _ => return Err(malformed("one zero block or one opposite pair must appear per step")),
        };
        vertices.push(vertex);
    }
    let tree = AndreTree::from_parents(nest(&vertices))?;
    PointedAndreTree::new(tree, point.ok_or_else(|| malformed("no zero block"))?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeClassReport {
    pub classes: usize,
    pub trees: usize,
    /// Class polynomial equals the hook polynomial of the tree, for every chain.
    pub formula_matches: bool,
    /// Every member of a class has the same tree.
    pub constant_on_classes: bool,
    /// Distinct classes have distinct trees.
    pub injective: bool,
}

impl TreeClassReport {
    pub fn pass(&self) -> bool {
        self.formula_matches && self.constant_on_classes && self.injective && self.classes == self.trees
    }
}

/// The induced map from chain classes to (pointed) André trees is a
/// bijection compatible with the class polynomials. Types A and B only.
pub fn check_tree_class_consistency(
    lat: &NcLattice<'_>,
    max_group_order: usize,
    max_chains: u128,
    max_vertices: usize,
) -> Result<TreeClassReport> {
    let (kind_b, n) = match lat.rs().spec().factors.as_slice() {
        [CoxeterType::A(n)] => (false, *n),
        [CoxeterType::B(n)] => (true, *n),
        _ => return Err(Error::WrongType(format!("{} is not of type A or B", lat.rs().spec()))),
    };
    let image = |ch: &NcChain| -> Result<(String, crate::exactalg::PolyQ)> {
        Ok(if kind_b {
            let t = stanley_b(&chain_to_merge_b(lat, ch)?)?;
            (t.to_string(), hook_poly_b(&t))
        } else {
            let t = stanley_a(&chain_to_merge_a(lat, ch)?)?;
            (t.to_string(), hook_poly_a(&t))
        })
    };
    let engine = ClassEngine::new(lat, max_group_order)?;
    let classes = engine.all_classes(max_chains)?;
    let mut report = TreeClassReport {
        classes: classes.len(),
        trees: if kind_b { enumerate_pointed(n, max_vertices)?.len() } else { enumerate_andre(n, max_vertices)?.len() },
        formula_matches: true,
        constant_on_classes: true,
        injective: true,
    };
    let mut seen = HashSet::new();
    for class in &classes {
        let (tree, _) = image(&class.representative)?;
        for m in &class.members {
            let (t, hook) = image(m)?;
            report.constant_on_classes &= t == tree;
            report.formula_matches &= hook == class_poly_formula(lat, m)?;
        }
        report.injective &= seen.insert(tree);
    }
    Ok(report)
}
