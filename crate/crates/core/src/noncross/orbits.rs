//! The action of `c` on the coatoms `ct`, and the coatoms as standard
//! Coxeter elements of their parabolic subgroups.

use std::collections::HashSet;

use crate::partition::{coatom_lines, is_interval_partition};
use crate::rootsys::{GroupElement, RootSet, RootSystem};

use super::{leq_abs, NcLattice};

/// One orbit of `π ↦ c(π)` on the coatoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoatomOrbit {
    /// Lattice indices, in the order `π, c(π), c²(π), …`.
    pub members: Vec<usize>,
    /// Positions `i` (0-based generator index) with `L_i` in the orbit.
    pub interval_lines: Vec<usize>,
    /// Every `L_i` in the orbit is mapped by `w0` into the orbit's interval
    /// members as the dichotomy requires.
    pub w0_ok: bool,
    /// `c^{h/2}` acts as `−1` on the interval member (size `h/2` orbits only).
    pub minus_one: Option<bool>,
}

impl CoatomOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub h: usize,
    pub orbits: Vec<CoatomOrbit>,
}

/// Orbits of the coatoms under `c`, with their interval members.
pub fn coatom_orbit_report(lat: &NcLattice<'_>) -> OrbitReport {
    let rs = lat.rs();
    let c = lat.c();
    let h = c.order();
    let lines: Vec<RootSet> = coatom_lines(rs).iter().map(|p| p.roots()).collect();
    let w0 = rs.longest_element();
    let half = (h % 2 == 0).then(|| c.pow(h / 2));
    let mut seen = HashSet::new();
    let mut orbits = Vec::new();
    for start in lat.coatoms() {
        if !seen.insert(start) {
            continue;
        }
        let mut members = vec![start];
        let mut roots = lat.element(start).partition.roots();
        loop {
            roots = rs.apply_to_set(c, roots);
            let j = lat.index_of_roots(roots).expect("the coatoms are stable under c");
            if j == start {
                break;
            }
            seen.insert(j);
            members.push(j);
        }
        let interval: Vec<usize> = members
            .iter()
            .filter(|&&j| is_interval_partition(rs, &lat.element(j).partition))
            .map(|&j| lines.iter().position(|&l| l == lat.element(j).partition.roots()).expect("interval coatoms are lines"))
            .collect();
        let image = |i: usize| rs.apply_to_set(&w0, lines[i]);
        let (w0_ok, minus_one) = match interval.as_slice() {
            [i, j] => (image(*i) == lines[*j], None),
            [i] => (image(*i) == lines[*i], Some(half.as_ref().is_some_and(|x| rs.acts_as_minus_one(x, lines[*i])))),
            _ => (false, None),
        };
        orbits.push(CoatomOrbit { members, interval_lines: interval, w0_ok, minus_one });
    }
    OrbitReport { h, orbits }
}

/// Each orbit has `h` members with two interval lines swapped by `w0`, or
/// `h/2` members with one `w0`-stable interval line on which `c^{h/2} = −1`.
pub fn check_standard1(report: &OrbitReport) -> bool {
    report.orbits.iter().all(|o| {
        let full = o.size() == report.h && o.interval_lines.len() == 2 && o.w0_ok;
        let half = report.h % 2 == 0
            && o.size() == report.h / 2
            && o.interval_lines.len() == 1
            && o.w0_ok
            && o.minus_one == Some(true);
        full || half
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Standard2Report {
    pub coatoms: usize,
    /// For each coatom, an ordering of its parabolic simple roots whose
    /// reflections multiply to it.
    pub orderings: Vec<Option<Vec<usize>>>,
}

impl Standard2Report {
    pub fn pass(&self) -> bool {
        self.orderings.iter().all(|o| o.is_some())
    }
}

/// Searches, for every coatom `ct`, an ordering of the simple reflections of
/// `W_(ct)` with product `ct`. Prefixes must stay below `ct` in absolute order.
pub fn check_standard2(lat: &NcLattice<'_>) -> Standard2Report {
    let rs = lat.rs();
    let coatoms = lat.coatoms();
    let orderings = coatoms
        .iter()
        .map(|&i| {
            let e = lat.element(i);
            find_ordering(rs, e.partition.simple_system(), &e.w)
        })
        .collect();
    Standard2Report { coatoms: coatoms.len(), orderings }
}

fn find_ordering(rs: &RootSystem, simple: &[usize], target: &GroupElement) -> Option<Vec<usize>> {
    fn go(
        rs: &RootSystem,
        simple: &[usize],
        target: &GroupElement,
        prefix: &mut Vec<usize>,
        acc: &GroupElement,
    ) -> bool {
        if prefix.len() == simple.len() {
            return acc == target;
        }
        for &r in simple {
            if prefix.contains(&r) {
                continue;
            }
            let next = acc.compose(rs.reflection(r));
            if rs.absolute_length(&next) != prefix.len() + 1 || !leq_abs(rs, &next, target) {
                continue;
            }
            prefix.push(r);
            if go(rs, simple, target, prefix, &next) {
                return true;
            }
            prefix.pop();
        }
        false
    }
    let mut prefix = Vec::new();
    go(rs, simple, target, &mut prefix, &rs.identity()).then_some(prefix)
}
