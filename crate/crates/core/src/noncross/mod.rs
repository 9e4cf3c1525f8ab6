//! Absolute order, the noncrossing partition lattice of a Coxeter element,
//! maximal chains and the `nir` statistic.

mod appendix;
mod fuss;
mod mpoly;
mod orbits;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::PolyQ;
use crate::partition::{is_interval_refinement, SetPartition};
use crate::rootsys::{GroupElement, RootSet, RootSystem};

pub use appendix::{
    check_appendix_a, check_appendix_d, check_e6, conjugation_orbit_check, type_d_coatom_families, type_d_interval_lines,
    AppendixAReport, AppendixDReport, ConjugationVerdict, CyclicOrbit, E6Report,
};
pub use fuss::{
    check_recfomin, check_zeta_relation, fuss_catalan, multichain_count, zeta_poly, RecfominReport, ZetaReport,
};
pub use mpoly::{m_poly_closed, m_poly_recursion, multinomial};
pub use orbits::{check_standard1, check_standard2, coatom_orbit_report, CoatomOrbit, OrbitReport, Standard2Report};

/// `ℓ_T(w) = n − dim fix(w)`
pub fn absolute_length(rs: &RootSystem, w: &GroupElement) -> usize {
    rs.absolute_length(w)
}

/// `u ≤_abs v` iff `ℓ_T(u) + ℓ_T(u⁻¹v) = ℓ_T(v)`.
pub fn leq_abs(rs: &RootSystem, u: &GroupElement, v: &GroupElement) -> bool {
    rs.absolute_length(u) + rs.absolute_length(&u.inverse().compose(v)) == rs.absolute_length(v)
}

/// Every interval refinement of a noncrossing flat is noncrossing.
pub fn interval_refinement_closed(lat: &NcLattice<'_>) -> bool {
    let flats: Vec<SetPartition> = crate::partition::all_flats(lat.rs()).into_iter().flatten().collect();
    lat.elements().iter().all(|e| {
        flats.iter().filter(|tau| is_interval_refinement(tau, &e.partition)).all(|tau| lat.contains_partition(tau))
    })
}

/// An element `w ≤_abs c` with its flat `fix(w)`.
#[derive(Clone, Debug)]
pub struct NcElement {
    pub w: GroupElement,
    pub partition: SetPartition,
    pub rank: usize,
}

/// `w ⋖ w·t` inside `[1, c]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub reflection: usize,
    pub target: usize,
    /// Whether the lower flat is an interval refinement of the upper one.
    pub interval: bool,
}

/// The interval `[1, c]` of the absolute order, with its cover relations.
pub struct NcLattice<'a> {
    rs: &'a RootSystem,
    c: GroupElement,
    elements: Vec<NcElement>,
    index: HashMap<GroupElement, usize>,
    by_roots: HashMap<RootSet, usize>,
    up: Vec<Vec<Cover>>,
    top: usize,
}

impl<'a> NcLattice<'a> {
    /// Breadth-first closure from the identity: `w ⋖ wt` whenever the root
    /// of `t` lies in the moved space of `w⁻¹c`.
    pub fn build(rs: &'a RootSystem, c: &GroupElement) -> Result<NcLattice<'a>> {
        if rs.absolute_length(c) != rs.rank() {
            return Err(Error::Invalid("not a Coxeter element: fix(c) is not {0}".into()));
        }
        let id = rs.identity();
        let mut elements = vec![NcElement { partition: SetPartition::minimal(rs), w: id.clone(), rank: 0 }];
        let mut index = HashMap::from([(id, 0)]);
        let mut up: Vec<Vec<Cover>> = vec![Vec::new()];
        let mut frontier = vec![0];
        for rank in 1..=rs.rank() {
            let mut next = Vec::new();
            for &i in &frontier {
                let w = elements[i].w.clone();
                let rest = w.inverse().compose(c);
                for t in rs.mov_roots(&rest).iter() {
                    let wt = w.compose(rs.reflection(t));
                    let target = match index.get(&wt) {
                        Some(&j) => j,
                        None => {
                            let j = elements.len();
                            let partition = SetPartition::from_roots(rs, rs.mov_roots(&wt));
                            elements.push(NcElement { w: wt.clone(), partition, rank });
                            index.insert(wt, j);
                            up.push(Vec::new());
                            next.push(j);
                            j
                        }
                    };
                    let interval = is_interval_refinement(&elements[i].partition, &elements[target].partition);
                    up[i].push(Cover { reflection: t, target, interval });
                }
            }
            frontier = next;
        }
        let top = index[c];
        let by_roots = elements.iter().enumerate().map(|(i, e)| (e.partition.roots(), i)).collect();
        Ok(NcLattice { rs, c: c.clone(), elements, index, by_roots, up, top })
    }

    pub fn rs(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn c(&self) -> &GroupElement {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[NcElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &NcElement {
        &self.elements[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn covers(&self, i: usize) -> &[Cover] {
        &self.up[i]
    }

    pub fn index_of(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// The element whose flat has the given root set.
    pub fn index_of_roots(&self, roots: RootSet) -> Option<usize> {
        self.by_roots.get(&roots).copied()
    }

    pub fn contains_partition(&self, p: &SetPartition) -> bool {
        self.by_roots.contains_key(&p.roots())
    }

    /// `{ct : t ∈ T}`
    pub fn coatoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.elements[i].rank + 1 == self.rs.rank()).collect()
    }

    /// Number of maximal chains, by counting paths to the top.
    pub fn chain_count(&self) -> BigUint {
        let mut paths = vec![BigUint::zero(); self.len()];
        paths[self.top] = BigUint::from(1u8);
        for i in (0..self.len()).rev() {
            if i != self.top {
                paths[i] = self.up[i].iter().map(|cv| &paths[cv.target]).sum();
            }
        }
        paths[0].clone()
    }

    fn check_guard(&self, max_chains: u128) -> Result<()> {
        let n = self.chain_count();
        if n.to_u128().is_none_or(|x| x > max_chains) {
            return Err(Error::Guard { what: "chain enumeration", needed: n.to_string(), limit: max_chains.to_string() });
        }
        Ok(())
    }

    /// All maximal chains, depth first, branching on reflection index.
    pub fn chains(&self, max_chains: u128) -> Result<ChainIter<'_, 'a>> {
        self.check_guard(max_chains)?;
        Ok(ChainIter::new(self, 0, self.up[0].len()))
    }

    /// `Σ q^nir` over all maximal chains.
    pub fn m_poly_direct(&self, max_chains: u128) -> Result<PolyQ> {
        self.check_guard(max_chains)?;
        let hist = (0..self.up[0].len())
            .into_par_iter()
            .map(|k| {
                let mut h = vec![0u64; self.rs.rank() + 1];
                for ch in ChainIter::new(self, k, k + 1) {
                    h[ch.nir()] += 1;
                }
                h
            })
            .reduce(
                || vec![0u64; self.rs.rank() + 1],
                |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
            );
        Ok(PolyQ::new(hist.into_iter().map(num_bigint::BigInt::from).collect()))
    }

    /// The chain whose reflection word is `word`, if it is one.
    pub fn chain_from_word(&self, word: &[usize]) -> Option<NcChain> {
        let mut nodes = vec![0];
        let mut flags = Vec::new();
        for &t in word {
            let cv = self.up[*nodes.last().expect("nonempty")].iter().find(|cv| cv.reflection == t)?;
            nodes.push(cv.target);
            flags.push(cv.interval);
        }
        (*nodes.last().expect("nonempty") == self.top).then(|| NcChain { word: word.to_vec(), nodes, interval: flags })
    }

    /// The chain through the given flats, bottom to top.
    pub fn chain_from_partitions(&self, flats: &[RootSet]) -> Option<NcChain> {
        let nodes: Vec<usize> = flats.iter().map(|r| self.index_of_roots(*r)).collect::<Option<_>>()?;
        let mut word = Vec::new();
        let mut flags = Vec::new();
        for pair in nodes.windows(2) {
            let cv = self.up[pair[0]].iter().find(|cv| cv.target == pair[1])?;
            word.push(cv.reflection);
            flags.push(cv.interval);
        }
        (nodes.first() == Some(&0) && nodes.last() == Some(&self.top)).then_some(NcChain { word, nodes, interval: flags })
    }
}

/// A maximal chain `π_0 < … < π_n`, encoded by its reflection word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcChain {
    /// `t_1, …, t_n` as positive-root indices, with `t_1 ⋯ t_n = c`.
    pub word: Vec<usize>,
    /// Lattice indices of the prefixes `t_1 ⋯ t_i`, `i = 0..=n`.
    pub nodes: Vec<usize>,
    /// `π_i ⊑ π_{i+1}` for each step.
    pub interval: Vec<bool>,
}

impl NcChain {
    /// Number of steps that are not interval refinements.
    pub fn nir(&self) -> usize {
        self.interval.iter().filter(|&&b| !b).count()
    }

    /// Flats along the chain.
    pub fn partitions<'l>(&self, lat: &'l NcLattice<'_>) -> Vec<&'l SetPartition> {
        self.nodes.iter().map(|&i| &lat.element(i).partition).collect()
    }

    /// Comma-separated reflection indices.
    pub fn word_string(&self) -> String {
        self.word.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub struct ChainIter<'l, 'a> {
    lat: &'l NcLattice<'a>,
    /// (node, next cover to try)
    stack: Vec<(usize, usize)>,
    word: Vec<usize>,
    flags: Vec<bool>,
    root_end: usize,
}

impl<'l, 'a> ChainIter<'l, 'a> {
    fn new(lat: &'l NcLattice<'a>, first: usize, root_end: usize) -> Self {
        ChainIter { lat, stack: vec![(0, first)], word: Vec::new(), flags: Vec::new(), root_end }
    }
}

impl Iterator for ChainIter<'_, '_> {
    type Item = NcChain;

    fn next(&mut self) -> Option<NcChain> {
        while let Some(&(node, k)) = self.stack.last() {
            if node == self.lat.top {
                let chain = NcChain {
                    word: self.word.clone(),
                    nodes: self.stack.iter().map(|f| f.0).collect(),
                    interval: self.flags.clone(),
                };
                self.stack.pop();
                self.word.pop();
                self.flags.pop();
                return Some(chain);
            }
            let end = if self.stack.len() == 1 { self.root_end } else { self.lat.up[node].len() };
            if k < end {
                let cv = self.lat.up[node][k];
                self.stack.last_mut().expect("nonempty").1 += 1;
                self.stack.push((cv.target, 0));
                self.word.push(cv.reflection);
                self.flags.push(cv.interval);
            } else {
                self.stack.pop();
                self.word.pop();
                self.flags.pop();
            }
        }
        None
    }
}

#[cfg(test)]
mod tests;
