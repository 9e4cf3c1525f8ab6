//! Classes of maximal chains under the action of `W`, the `(h, g)` statistics
//! of covers, and the product formula for the generating function of a class.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::PolyQ;
use crate::noncross::{NcChain, NcLattice};
use crate::partition::{coatom_lines, irreducible_factors, SetPartition};
use crate::rootsys::{GroupElement, RootSet, RootSystem};

/// `h`: Coxeter number of the factor of `W_(π)` where `τ ⋖ π` differ.
/// `g`: least `g > 0` such that conjugating by `π^g` fixes `τ` and each
/// irreducible factor of `W_(τ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverStats {
    pub h: usize,
    pub g: usize,
}

impl CoverStats {
    /// `2g/h + q(g − 2g/h)`
    pub fn factor(&self) -> PolyQ {
        let r = (2 * self.g / self.h) as i64;
        PolyQ::lin(r, self.g as i64 - r)
    }
}

/// Statistics of the cover between lattice elements `lower ⋖ upper`.
pub fn cover_stats(lat: &NcLattice<'_>, lower: usize, upper: usize) -> Result<CoverStats> {
    let rs = lat.rs();
    let cover = lat.covers(lower).iter().find(|cv| cv.target == upper).ok_or(Error::NotACover)?;
    let (tau, pi) = (lat.element(lower), lat.element(upper));
    let factors = irreducible_factors(rs, &pi.partition);
    let diff = pi.partition.roots().difference(tau.partition.roots());
    let touched: Vec<_> = factors.iter().filter(|f| !f.roots.intersection(diff).is_empty()).collect();
    let home = factors.iter().find(|f| f.roots.contains(cover.reflection)).expect("the cover root lies in W_(π)");
    if touched.len() != 1 || touched[0] != home {
        return Err(Error::Invalid("cover differs in more than one factor".into()));
    }
    let h = home.coxeter_number;
    let tau_factors: Vec<RootSet> = irreducible_factors(rs, &tau.partition).into_iter().map(|f| f.roots).collect();
    let p = &pi.w;
    let p_inv = p.inverse();
    let mut conj = p.clone();
    let mut conj_inv = p_inv.clone();
    for g in 1..=p.order() {
        if conj.compose(&tau.w).compose(&conj_inv) == tau.w
            && tau_factors.iter().all(|&f| rs.apply_to_set(&conj, f) == f)
        {
            return Ok(CoverStats { h, g });
        }
        conj = conj.compose(p);
        conj_inv = conj_inv.compose(&p_inv);
    }
    unreachable!("π^ord(π) is the identity")
}

/// Cover statistics along the chain, one per step.
pub fn chain_stats(lat: &NcLattice<'_>, chain: &NcChain) -> Result<Vec<CoverStats>> {
    chain.nodes.windows(2).map(|w| cover_stats(lat, w[0], w[1])).collect()
}

/// `∏_{i≥2} (2g_i/h_i + q(g_i − 2g_i/h_i))`
pub fn class_poly_formula(lat: &NcLattice<'_>, chain: &NcChain) -> Result<PolyQ> {
    let stats = chain_stats(lat, chain)?;
    Ok(stats.iter().skip(1).fold(PolyQ::one(), |acc, s| &acc * &s.factor()))
}

/// An equivalence class `[Π] = W·Π ∩ NC`.
#[derive(Clone, Debug)]
pub struct ChainClass {
    pub representative: NcChain,
    pub members: Vec<NcChain>,
    pub formula_poly: PolyQ,
    /// `Σ q^nir` over the members.
    pub direct_poly: PolyQ,
}

impl ChainClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn nir_poly(chains: &[NcChain], n: usize) -> PolyQ {
    let mut c = vec![0i64; n + 1];
    for ch in chains {
        c[ch.nir()] += 1;
    }
    PolyQ::new(c.into_iter().map(BigInt::from).collect())
}

/// Chain classes computed from the whole group.
pub struct ClassEngine<'l, 'a> {
    lat: &'l NcLattice<'a>,
    group: Vec<GroupElement>,
}

impl<'l, 'a> ClassEngine<'l, 'a> {
    /// Enumerates `W`; fails when `|W|` exceeds `max_group_order`.
    pub fn new(lat: &'l NcLattice<'a>, max_group_order: usize) -> Result<Self> {
        Ok(ClassEngine { lat, group: lat.rs().enumerate_group(max_group_order)? })
    }

    pub fn lattice(&self) -> &'l NcLattice<'a> {
        self.lat
    }

    fn image(&self, w: &GroupElement, chain: &NcChain) -> Option<Vec<usize>> {
        let rs = self.lat.rs();
        chain
            .nodes
            .iter()
            .map(|&i| self.lat.index_of_roots(rs.apply_to_set(w, self.lat.element(i).partition.roots())))
            .collect()
    }

    fn chain_at(&self, nodes: &[usize]) -> NcChain {
        let flats: Vec<RootSet> = nodes.iter().map(|&i| self.lat.element(i).partition.roots()).collect();
        self.lat.chain_from_partitions(&flats).expect("images of chains are chains")
    }

    /// Orbit of node sequences under the given group elements.
    fn orbit<'g>(&self, chain: &NcChain, elements: impl Iterator<Item = &'g GroupElement>) -> Vec<Vec<usize>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for w in elements {
            if let Some(nodes) = self.image(w, chain) {
                if seen.insert(nodes.clone()) {
                    out.push(nodes);
                }
            }
        }
        out.sort();
        out
    }

    /// `[Π]`, with both polynomials.
    pub fn class_of(&self, chain: &NcChain) -> Result<ChainClass> {
        let members: Vec<NcChain> = self.orbit(chain, self.group.iter()).iter().map(|n| self.chain_at(n)).collect();
        Ok(ChainClass {
            representative: chain.clone(),
            direct_poly: nir_poly(&members, self.lat.rs().rank()),
            formula_poly: class_poly_formula(self.lat, chain)?,
            members,
        })
    }

    /// All classes, each represented by its first chain in enumeration order.
    pub fn all_classes(&self, max_chains: u128) -> Result<Vec<ChainClass>> {
        let mut assigned = HashSet::new();
        let mut out = Vec::new();
        for ch in self.lat.chains(max_chains)? {
            if assigned.contains(&ch.nodes) {
                continue;
            }
            let class = self.class_of(&ch)?;
            assigned.extend(class.members.iter().map(|m| m.nodes.clone()));
            out.push(class);
        }
        Ok(out)
    }

    /// `⟨Π⟩`: the orbit under `W_(π_{n−1})`.
    fn sub_class(&self, chain: &NcChain) -> Vec<Vec<usize>> {
        let rs = self.lat.rs();
        let coatom = self.lat.element(chain.nodes[chain.nodes.len() - 2]).partition.roots();
        self.orbit(chain, self.group.iter().filter(|w| rs.mov_roots(w).is_subset(coatom)))
    }

    /// Least `g > 0` with `⟨Π⟩ = ⟨c^g(Π)⟩`.
    pub fn class_orbit_period(&self, chain: &NcChain) -> usize {
        let rs = self.lat.rs();
        let base = self.sub_class(chain);
        let c = self.lat.c();
        let mut cg = c.clone();
        for g in 1..=c.order() {
            let moved = self.image(&cg, chain).expect("the lattice is stable under c");
            if base == self.sub_class(&self.chain_at(&moved)) {
                return g;
            }
            cg = cg.compose(c);
        }
        unreachable!("c^h is the identity on {}", rs.spec())
    }
}

#[derive(Clone, Debug)]
pub struct ClassReport {
    pub classes: Vec<ChainClass>,
    /// Members whose formula polynomial differs from their class's.
    pub formula_mismatches: usize,
    /// Classes with no chain of interval partitions.
    pub classes_without_interval_chain: usize,
    pub class_sum: PolyQ,
    pub m_poly: PolyQ,
}

impl ClassReport {
    /// Direct and formula polynomials agree on every class, and the formula
    /// is constant on classes.
    pub fn classgen_pass(&self) -> bool {
        self.formula_mismatches == 0
            && self.classes_without_interval_chain == 0
            && self.classes.iter().all(|c| c.direct_poly == c.formula_poly)
    }

    /// `Σ_classes M([Π], q) = M(W, q)`.
    pub fn classeq_pass(&self) -> bool {
        self.class_sum == self.m_poly
    }
}

/// Classes of the lattice with the class-wise checks.
pub fn check_classes(lat: &NcLattice<'_>, max_group_order: usize, max_chains: u128) -> Result<ClassReport> {
    let engine = ClassEngine::new(lat, max_group_order)?;
    let classes = engine.all_classes(max_chains)?;
    let mut formula_mismatches = 0;
    let mut classes_without_interval_chain = 0;
    let mut class_sum = PolyQ::zero();
    for class in &classes {
        for m in &class.members {
            if class_poly_formula(lat, m)? != class.formula_poly {
                formula_mismatches += 1;
            }
        }
        if !class.members.iter().any(|m| m.nir() == 0) {
            classes_without_interval_chain += 1;
        }
        class_sum = &class_sum + &class.formula_poly;
    }
    Ok(ClassReport {
        classes,
        formula_mismatches,
        classes_without_interval_chain,
        class_sum,
        m_poly: lat.m_poly_direct(max_chains)?,
    })
}

/// Period of each class representative against `g_n` of its top cover.
pub fn check_class_periods(lat: &NcLattice<'_>, max_group_order: usize, max_chains: u128) -> Result<Vec<(usize, usize)>> {
    let engine = ClassEngine::new(lat, max_group_order)?;
    let mut out = Vec::new();
    for class in engine.all_classes(max_chains)? {
        let ch = &class.representative;
        let n = ch.nodes.len();
        let top = cover_stats(lat, ch.nodes[n - 2], ch.nodes[n - 1])?;
        out.push((engine.class_orbit_period(ch), top.g));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermuteFactorReport {
    pub h: usize,
    /// Lines `L_i` with `c^{h/2}(L_i) = L_i`.
    pub stable_lines: Vec<usize>,
    /// Of those, lines where `c^{h/2}` and `w0` move the factors of `W_(i)` differently.
    pub mismatches: Vec<usize>,
}

impl PermuteFactorReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// When `c^{h/2}(L_i) = L_i`, conjugation by `c^{h/2}` and by `w0` send
/// each irreducible factor root set of `W_(i)` to the same factor.
pub fn check_permutefactor(rs: &RootSystem, c: &GroupElement) -> PermuteFactorReport {
    let h = c.order();
    let mut report = PermuteFactorReport { h, stable_lines: Vec::new(), mismatches: Vec::new() };
    if h % 2 == 1 {
        return report;
    }
    let half = c.pow(h / 2);
    let w0 = rs.longest_element();
    for (i, line) in coatom_lines(rs).iter().enumerate() {
        if rs.apply_to_set(&half, line.roots()) != line.roots() {
            continue;
        }
        report.stable_lines.push(i);
        let same = irreducible_factors(rs, line)
            .iter()
            .all(|f| rs.apply_to_set(&half, f.roots) == rs.apply_to_set(&w0, f.roots));
        if !same {
            report.mismatches.push(i);
        }
    }
    report
}

/// Members of each class keyed by node sequence, for lookups.
pub fn class_index(classes: &[ChainClass]) -> HashMap<Vec<usize>, usize> {
    classes.iter().enumerate().flat_map(|(k, c)| c.members.iter().map(move |m| (m.nodes.clone(), k))).collect()
}

/// Cover statistics between two flats given as partitions.
pub fn cover_stats_of(lat: &NcLattice<'_>, tau: &SetPartition, pi: &SetPartition) -> Result<CoverStats> {
    let lower = lat.index_of_roots(tau.roots()).ok_or(Error::NotACover)?;
    let upper = lat.index_of_roots(pi.roots()).ok_or(Error::NotACover)?;
    cover_stats(lat, lower, upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partition_from_blocks_a, partition_from_blocks_b, BlocksA, BlocksB};
    use crate::rootsys::RootSystem;

    fn lattice(rs: &RootSystem) -> NcLattice<'_> {
        let c = rs.standard_coxeter_element(&(0..rs.rank()).collect::<Vec<_>>()).unwrap();
        NcLattice::build(rs, &c).unwrap()
    }

    fn pa(rs: &RootSystem, s: &str) -> SetPartition {
        partition_from_blocks_a(rs, &BlocksA::parse(s).unwrap()).unwrap()
    }

    fn chain_a(lat: &NcLattice<'_>, flats: &[&str]) -> NcChain {
        let roots: Vec<RootSet> = flats.iter().map(|s| pa(lat.rs(), s).roots()).collect();
        lat.chain_from_partitions(&roots).unwrap()
    }

    #[test]
    fn type_a_merges() {
        let rs = RootSystem::from_label("A3").unwrap();
        let lat = lattice(&rs);
        let s = cover_stats_of(&lat, &pa(&rs, "12|3|4"), &pa(&rs, "123|4")).unwrap();
        assert_eq!(s, CoverStats { h: 3, g: 3 });
        let s = cover_stats_of(&lat, &pa(&rs, "1|2|3|4"), &pa(&rs, "12|3|4")).unwrap();
        assert_eq!(s, CoverStats { h: 2, g: 1 });
        assert!(matches!(cover_stats_of(&lat, &pa(&rs, "1|2|3|4"), &pa(&rs, "123|4")), Err(Error::NotACover)));
    }

    #[test]
    fn type_b_zero_block_merge() {
        let rs = RootSystem::from_label("B3").unwrap();
        let lat = lattice(&rs);
        let tau = partition_from_blocks_b(&rs, &BlocksB::parse("1 3|-1 -3|2|-2").unwrap()).unwrap();
        let pi = partition_from_blocks_b(&rs, &BlocksB::parse("1 3 -1 -3|2|-2").unwrap()).unwrap();
        if lat.contains_partition(&tau) && lat.contains_partition(&pi) {
            assert_eq!(cover_stats_of(&lat, &tau, &pi).unwrap(), CoverStats { h: 4, g: 2 });
        } else {
            // the pair is noncrossing for another Coxeter element
            let found = rs.all_standard_coxeter_elements(3).unwrap().into_iter().any(|c| {
                let l = NcLattice::build(&rs, &c).unwrap();
                l.contains_partition(&tau)
                    && l.contains_partition(&pi)
                    && cover_stats_of(&l, &tau, &pi).unwrap() == CoverStats { h: 4, g: 2 }
            });
            assert!(found);
        }
    }

    #[test]
    fn a3_chain_formulas() {
        let rs = RootSystem::from_label("A3").unwrap();
        let lat = lattice(&rs);
        let ch = chain_a(&lat, &["1|2|3|4", "12|3|4", "12|34", "1234"]);
        assert_eq!(class_poly_formula(&lat, &ch).unwrap(), PolyQ::from_ints(&[2, 2]));
        let ch = chain_a(&lat, &["1|2|3|4", "12|3|4", "123|4", "1234"]);
        assert_eq!(class_poly_formula(&lat, &ch).unwrap(), &PolyQ::from_ints(&[2, 1]) * &PolyQ::from_ints(&[2, 2]));
    }

    #[test]
    fn a2_single_class() {
        let rs = RootSystem::from_label("A2").unwrap();
        let lat = lattice(&rs);
        let r = check_classes(&lat, 2000, 1000).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.classes[0].size(), 3);
        assert_eq!(r.class_sum, PolyQ::from_ints(&[2, 1]));
        assert_eq!(check_class_periods(&lat, 2000, 1000).unwrap(), vec![(3, 3)]);
    }

    #[test]
    fn rank_one() {
        let rs = RootSystem::from_label("A1").unwrap();
        let lat = lattice(&rs);
        let r = check_classes(&lat, 2000, 1000).unwrap();
        assert_eq!((r.classes.len(), r.classes[0].size()), (1, 1));
        assert_eq!(r.classes[0].formula_poly, PolyQ::one());
    }

    #[test]
    fn class_identities() {
        for (label, classes) in [("A3", 2), ("B2", 2), ("B3", 5), ("D4", 12)] {
            let rs = RootSystem::from_label(label).unwrap();
            for c in rs.all_standard_coxeter_elements(4).unwrap().into_iter().take(4) {
                let lat = NcLattice::build(&rs, &c).unwrap();
                let r = check_classes(&lat, 2000, 100_000).unwrap();
                assert!(r.classgen_pass() && r.classeq_pass(), "{label}");
                assert_eq!(r.classes.len(), classes, "{label}");
                for (period, g) in check_class_periods(&lat, 2000, 100_000).unwrap() {
                    assert_eq!(period, g, "{label}");
                }
            }
        }
    }

    #[test]
    fn a3_class_sum() {
        let rs = RootSystem::from_label("A3").unwrap();
        let r = check_classes(&lattice(&rs), 2000, 1000).unwrap();
        assert_eq!(r.class_sum, &PolyQ::from_ints(&[2, 2]) * &PolyQ::from_ints(&[3, 1]));
    }

    #[test]
    fn stats_are_h_or_half() {
        for label in ["B3", "H3", "A4", "I2(6)"] {
            let rs = RootSystem::from_label(label).unwrap();
            let lat = lattice(&rs);
            for i in 0..lat.len() {
                for cv in lat.covers(i) {
                    let s = cover_stats(&lat, i, cv.target).unwrap();
                    assert!(s.g == s.h || 2 * s.g == s.h, "{label} {s:?}");
                }
            }
        }
    }

    #[test]
    fn permutefactor() {
        for label in ["A3", "A4", "B3", "D4", "D5", "H3", "F4", "E6"] {
            let rs = RootSystem::from_label(label).unwrap();
            for ord in crate::rootsys::orderings(rs.rank()).into_iter().take(24) {
                let c = rs.standard_coxeter_element(&ord).unwrap();
                assert!(check_permutefactor(&rs, &c).pass(), "{label} {ord:?}");
            }
        }
    }

    /// In D5 conjugation by `c^4` can fix a coatom whose parabolic is an
    /// irreducible D4 while acting on it by the outer diagram flip. The
    /// chain's class then has period 8 although `g = 4`, and the product
    /// formula counts half of the class.
    #[test]
    fn d5_outer_automorphism_classes() {
        let rs = RootSystem::from_label("D5").unwrap();
        let lat = lattice(&rs);
        let r = check_classes(&lat, 2000, 1_000_000).unwrap();
        assert_eq!(r.classes.len(), 26);
        let bad: Vec<&ChainClass> = r.classes.iter().filter(|c| c.direct_poly != c.formula_poly).collect();
        assert_eq!(bad.len(), 5);
        for c in &bad {
            assert_eq!(c.direct_poly, c.formula_poly.scale(&BigInt::from(2)));
            let n = c.representative.nodes.len();
            let tau = &lat.element(c.representative.nodes[n - 2]).partition;
            let ty = crate::rootsys::recognize_parabolic_type(&rs, tau.simple_system()).unwrap();
            assert_eq!(ty.len(), 1);
            assert_eq!(ty[0].ty, crate::rootsys::CoxeterType::D(4));
        }
        let direct_sum = r.classes.iter().fold(PolyQ::zero(), |a, c| &a + &c.direct_poly);
        assert_eq!(direct_sum, r.m_poly);
        assert!(!r.classeq_pass());
        let periods = check_class_periods(&lat, 2000, 1_000_000).unwrap();
        assert_eq!(periods.iter().filter(|(p, g)| p != g).count(), 5);
        assert!(periods.iter().all(|(p, g)| p == g || *p == 2 * g));
    }
}
