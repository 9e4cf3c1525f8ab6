//! André trees, pointed André trees and binary plane trees, with the
//! chain-to-tree maps and the hook-length identities they support.

mod hooks;
mod plane;
mod stanley;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use hooks::{check_hook_a, check_hook_b, hook_poly_a, hook_poly_b, HookReport};
pub use plane::{check_postnikov, enumerate_plane, BinaryPlaneTree, PostnikovReport};
pub use stanley::{
    chain_to_merge_a, chain_to_merge_b, check_tree_class_consistency, stanley_a, stanley_b, TreeClassReport,
};

fn guard(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Guard { what: "tree enumeration", needed: format!("{n} vertices"), limit: limit.to_string() });
    }
    Ok(())
}

/// A tree on labels `1..=n` whose labels decrease from the root, in which
/// every vertex has at most two (unordered) children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AndreTree {
    /// `parent[v - 1]` is the parent label of `v`.
    parent: Vec<Option<usize>>,
}

impl AndreTree {
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<AndreTree> {
        let n = parent.len();
        let bad = |why: &str| Err(Error::Invalid(format!("not an André tree: {why}")));
        if n == 0 {
            return bad("no vertices");
        }
        let mut arity = vec![0; n + 1];
        for (i, p) in parent.iter().enumerate() {
            match *p {
                None if i + 1 != n => return bad("only the largest label may be the root"),
                Some(_) if i + 1 == n => return bad("the largest label must be the root"),
                Some(q) if q <= i + 1 || q > n => return bad("labels must decrease towards the leaves"),
                Some(q) => arity[q] += 1,
                None => {}
            }
        }
        if arity.iter().any(|&a| a > 2) {
            return bad("a vertex has more than two children");
        }
        Ok(AndreTree { parent })
    }

    pub fn single() -> AndreTree {
        AndreTree { parent: vec![None] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    /// Children of `v`, largest label first.
    pub fn children(&self, v: usize) -> Vec<usize> {
        (1..v).rev().filter(|&u| self.parent[u - 1] == Some(v)).collect()
    }

    /// `h_v`, the number of vertices in the subtree of `v`; index `v − 1`.
    pub fn hooks(&self) -> Vec<usize> {
        let mut h = vec![1; self.len()];
        // children have smaller labels, so one increasing pass suffices
        for v in 1..=self.len() {
            if let Some(p) = self.parent[v - 1] {
                h[p - 1] += h[v - 1];
            }
        }
        h
    }

    /// Vertices with `h_v > 1`.
    pub fn internal_count(&self) -> usize {
        self.hooks().iter().filter(|&&h| h > 1).count()
    }

    /// Path from the root down to `v`, both included.
    pub fn path_to(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        while let Some(p) = self.parent(*path.last().expect("nonempty")) {
            path.push(p);
        }
        path.reverse();
        path
    }

    fn write_node(&self, f: &mut fmt::Formatter<'_>, v: usize, mark: Option<usize>) -> fmt::Result {
        write!(f, "{v}")?;
        if mark == Some(v) {
            write!(f, "*")?;
        }
        let ch = self.children(v);
        if !ch.is_empty() {
            write!(f, "(")?;
            for (k, &u) in ch.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                self.write_node(f, u, mark)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for AndreTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_node(f, self.root(), None)
    }
}

/// Parses `label['*'][(child child)]`; returns parents and the starred label.
fn parse_tree(text: &str) -> Result<(Vec<Option<usize>>, Option<usize>)> {
    let err = || Error::Parse(text.to_string());
    let bytes = text.trim().as_bytes();
    let mut pos = 0;
    let mut edges = Vec::new();
    let mut star = None;
    fn node(
        b: &[u8],
        pos: &mut usize,
        edges: &mut Vec<(usize, Option<usize>)>,
        star: &mut Option<usize>,
        parent: Option<usize>,
    ) -> Option<()> {
        let start = *pos;
        while *pos < b.len() && b[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let label: usize = std::str::from_utf8(&b[start..*pos]).ok()?.parse().ok()?;
        edges.push((label, parent));
        if b.get(*pos) == Some(&b'*') {
            if star.replace(label).is_some() {
                return None;
            }
            *pos += 1;
        }
        if b.get(*pos) == Some(&b'(') {
            *pos += 1;
            loop {
                node(b, pos, edges, star, Some(label))?;
                match b.get(*pos)? {
                    b' ' => *pos += 1,
                    b')' => {
                        *pos += 1;
                        break;
                    }
                    _ => return None,
                }
            }
        }
        Some(())
    }
    node(bytes, &mut pos, &mut edges, &mut star, None).ok_or_else(err)?;
    if pos != bytes.len() {
        return Err(err());
    }
    let n = edges.len();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    for (label, p) in edges {
        if label == 0 || label > n || std::mem::replace(&mut seen[label - 1], true) {
            return Err(err());
        }
        parent[label - 1] = p;
    }
    Ok((parent, star))
}

impl FromStr for AndreTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_tree(s)? {
            (parent, None) => AndreTree::from_parents(parent),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// An André tree with a distinguished vertex having at most one child.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedAndreTree {
    pub tree: AndreTree,
    pub point: usize,
}

impl PointedAndreTree {
    pub fn new(tree: AndreTree, point: usize) -> Result<Self> {
        if point == 0 || point > tree.len() || tree.children(point).len() > 1 {
            return Err(Error::Invalid(format!("vertex {point} of {tree} cannot be distinguished")));
        }
        Ok(PointedAndreTree { tree, point })
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }
}

impl fmt::Display for PointedAndreTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.write_node(f, self.tree.root(), Some(self.point))
    }
}

impl FromStr for PointedAndreTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_tree(s)? {
            (parent, Some(point)) => PointedAndreTree::new(AndreTree::from_parents(parent)?, point),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// All André trees on `n` vertices: labels are placed from `n` down to 1,
/// each under an existing vertex with a free slot.
pub fn enumerate_andre(n: usize, max_vertices: usize) -> Result<Vec<AndreTree>> {
    guard(n, max_vertices)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    fn grow(n: usize, label: usize, parent: &mut Vec<Option<usize>>, arity: &mut Vec<usize>, out: &mut Vec<AndreTree>) {
        if label == 0 {
            out.push(AndreTree { parent: parent.clone() });
            return;
        }
        for p in label + 1..=n {
            if arity[p] < 2 {
                arity[p] += 1;
                parent[label - 1] = Some(p);
                grow(n, label - 1, parent, arity, out);
                arity[p] -= 1;
            }
        }
        parent[label - 1] = None;
    }
    let mut out = Vec::new();
    grow(n, n - 1, &mut vec![None; n], &mut vec![0; n + 1], &mut out);
    out.sort();
    Ok(out)
}

/// All pointed André trees on `n` vertices.
pub fn enumerate_pointed(n: usize, max_vertices: usize) -> Result<Vec<PointedAndreTree>> {
    let mut out = Vec::new();
    for t in enumerate_andre(n, max_vertices)? {
        for v in 1..=n {
            if t.children(v).len() <= 1 {
                out.push(PointedAndreTree { tree: t.clone(), point: v });
            }
        }
    }
    Ok(out)
}

/// Shifts labels up by one and hangs a new leaf `1` under the distinguished vertex.
pub fn pointed_to_andre(t: &PointedAndreTree) -> AndreTree {
    let mut parent = vec![Some(t.point + 1)];
    parent.extend(t.tree.parent.iter().map(|p| p.map(|q| q + 1)));
    AndreTree { parent }
}

/// Inverse of [`pointed_to_andre`]: removes leaf `1` and points at its parent.
pub fn andre_to_pointed(t: &AndreTree) -> Result<PointedAndreTree> {
    let point = t.parent(1).ok_or_else(|| Error::Invalid("a single vertex has no pointed preimage".into()))?;
    let parent = t.parent[1..].iter().map(|p| p.map(|q| q - 1)).collect();
    PointedAndreTree::new(AndreTree { parent }, point - 1)
}
