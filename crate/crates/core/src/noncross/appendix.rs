//! Case checks for types A, D and E6: explicit coatom lists and orbit
//! structure under `c`, compared against the computed lattice.

use std::collections::HashSet;

use crate::classical::{cycles, is_unimodal, point_permutation, signed_permutation};
use crate::error::{Error, Result};
use crate::partition::{
    blocks_a, is_interval_partition, partition_from_blocks_a, partition_from_blocks_b, BlocksA, BlocksB,
};
use crate::rootsys::{CoxeterType, GroupElement, RootSet, RootSystem};

use super::orbits::{check_standard1, coatom_orbit_report};
use super::NcLattice;

/// One `c`-orbit of type A coatoms, all with blocks of sizes `k` and `m − k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicOrbit {
    pub k: usize,
    pub size: usize,
    /// Interval members, as set partitions of `1..m`.
    pub interval: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixAReport {
    /// Number of points `m` (the group is `A_{m−1}`).
    pub points: usize,
    /// The cycle of `c`, rotated to a unimodal sequence if one exists.
    pub sequence: Vec<usize>,
    pub unimodal: bool,
    /// Coatoms are exactly the pairs of complementary cyclic intervals.
    pub coatoms_match: bool,
    pub orbits: Vec<CyclicOrbit>,
    /// Orbit sizes and interval members are as described for each `k`.
    pub orbits_match: bool,
}

impl AppendixAReport {
    pub fn pass(&self) -> bool {
        self.unimodal && self.coatoms_match && self.orbits_match
    }
}

fn cyclic_slice(seq: &[usize], start: usize, len: usize) -> Vec<usize> {
    (0..len).map(|t| seq[(start + t) % seq.len()]).collect()
}

/// `c` is the cycle of a unimodal sequence, the coatoms are pairs of
/// complementary cyclic intervals, and the orbit for block sizes `k, m−k`
/// has `m` members (`m/2` when `2k = m`) with the expected interval members.
pub fn check_appendix_a(rs: &RootSystem, c: &GroupElement) -> Result<AppendixAReport> {
    let perm = point_permutation(rs, c)?;
    let m = perm.len();
    let cyc = cycles(&perm);
    let one_cycle = cyc.len() == 1;
    let base: Vec<usize> = cyc[0].iter().map(|x| x + 1).collect();
    let sequence = (0..m)
        .map(|r| cyclic_slice(&base, r, m))
        .find(|s| one_cycle && is_unimodal(s))
        .unwrap_or_else(|| base.clone());
    let unimodal = one_cycle && is_unimodal(&sequence);

    let lat = NcLattice::build(rs, c)?;
    let flat_of = |blocks: Vec<Vec<usize>>| -> Result<RootSet> {
        Ok(partition_from_blocks_a(rs, &BlocksA::new(m, blocks)?)?.roots())
    };
    let mut expected = HashSet::new();
    if unimodal {
        for start in 0..m {
            for k in 1..m {
                expected.insert(flat_of(vec![cyclic_slice(&sequence, start, k), cyclic_slice(&sequence, start + k, m - k)])?);
            }
        }
    }
    let coatoms: HashSet<RootSet> = lat.coatoms().iter().map(|&i| lat.element(i).partition.roots()).collect();
    let coatoms_match = unimodal && expected == coatoms;

    let report = coatom_orbit_report(&lat);
    let mut orbits = Vec::new();
    let mut orbits_match = true;
    let mut seen_k = HashSet::new();
    for o in &report.orbits {
        let ks: HashSet<usize> = o
            .members
            .iter()
            .map(|&j| {
                let b = blocks_a(rs, &lat.element(j).partition).expect("type A");
                b.blocks.iter().map(|x| x.len()).min().unwrap_or(0)
            })
            .collect();
        let k = *ks.iter().next().expect("nonempty orbit");
        let interval_members: Vec<usize> =
            o.members.iter().copied().filter(|&j| is_interval_partition(rs, &lat.element(j).partition)).collect();
        let got: HashSet<RootSet> = interval_members.iter().map(|&j| lat.element(j).partition.roots()).collect();
        let want: HashSet<RootSet> = [k, m - k]
            .iter()
            .map(|&a| flat_of(vec![(1..=a).collect(), (a + 1..=m).collect()]))
            .collect::<Result<_>>()?;
        let size = if 2 * k == m { m / 2 } else { m };
        orbits_match &= ks.len() == 1 && seen_k.insert(k) && o.size() == size && got == want;
        orbits.push(CyclicOrbit {
            k,
            size: o.size(),
            interval: interval_members
                .iter()
                .map(|&j| blocks_a(rs, &lat.element(j).partition).expect("type A").to_string())
                .collect(),
        });
    }
    orbits_match &= seen_k.len() == m / 2;
    orbits.sort_by_key(|o| o.k);
    Ok(AppendixAReport { points: m, sequence, unimodal, coatoms_match, orbits, orbits_match })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixDReport {
    pub n: usize,
    /// `1` if `c(1) = −1`, `2` if `c(2) = −2`, `0` otherwise.
    pub case: i64,
    /// `i_1, …, i_{n−1}` with `c = (a, −a)[[i_1, …, i_{n−1}]]`.
    pub sequence: Vec<i64>,
    pub unimodal: bool,
    /// The four families of signed partitions are exactly the coatoms.
    pub families_match: bool,
    /// The interval coatoms are `L_0`, `L_1` and the `L_i`, `2 ≤ i < n`.
    pub intervals_match: bool,
    /// Orbit dichotomy of the coatoms under `c`.
    pub standard1: bool,
    pub h: usize,
    pub orbit_sizes: Vec<usize>,
    /// Size of the orbit holding both `L_0` and `L_1`, if they share one.
    pub l0_l1_orbit: Option<usize>,
    /// All orbits have size `h/2`, except `L_0` and `L_1` share an orbit
    /// of size `h` exactly when `n` is even.
    pub printed_parity: bool,
    /// The same rule with the parity of `n` reversed.
    pub reversed_parity: bool,
}

impl AppendixDReport {
    /// Everything except the parity rule.
    pub fn structure_pass(&self) -> bool {
        self.unimodal && self.families_match && self.intervals_match && self.standard1
    }

    pub fn pass(&self) -> bool {
        self.structure_pass() && self.printed_parity
    }
}

/// Builds the coatom list of `D_n` for `c = (a, −a)[[seq]]`.
pub fn type_d_coatom_families(n: usize, a: i64, seq: &[i64]) -> Result<Vec<BlocksB>> {
    let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
    let both = |v: &[i64]| v.iter().flat_map(|&x| [x, -x]).collect::<Vec<_>>();
    let k = seq.len();
    let mut out = Vec::new();
    for m in 1..=k {
        for lead in [a, -a] {
            let p: Vec<i64> = [vec![lead], seq[m..].to_vec(), neg(&seq[..m])].concat();
            out.push(BlocksB::new(n, vec![p.clone(), neg(&p)])?);
        }
    }
    for l in 1..k {
        for m in l + 1..=k {
            let z: Vec<i64> = [vec![a], seq[..l].to_vec(), seq[m..].to_vec()].concat();
            let q = seq[l..m].to_vec();
            out.push(BlocksB::new(n, vec![both(&z), q.clone(), neg(&q)])?);

            let z: Vec<i64> = [vec![a], seq[l..m].to_vec()].concat();
            let q: Vec<i64> = [seq[..l].to_vec(), neg(&seq[m..])].concat();
            out.push(BlocksB::new(n, vec![both(&z), q.clone(), neg(&q)])?);
        }
    }
    Ok(out)
}

/// The interval coatoms of `D_n`, indexed by the omitted generator.
pub fn type_d_interval_lines(n: usize) -> Result<Vec<BlocksB>> {
    let n_i = n as i64;
    let all: Vec<i64> = (1..=n_i).collect();
    let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
    let l1: Vec<i64> = std::iter::once(1).chain((2..=n_i).map(|x| -x)).collect();
    let mut out = vec![BlocksB::new(n, vec![all.clone(), neg(&all)])?, BlocksB::new(n, vec![l1.clone(), neg(&l1)])?];
    for i in 2..n_i {
        let z: Vec<i64> = (1..=i).flat_map(|x| [x, -x]).collect();
        let p: Vec<i64> = (i + 1..=n_i).collect();
        out.push(BlocksB::new(n, vec![z, p.clone(), neg(&p)])?);
    }
    Ok(out)
}

/// Recovers `a` and `i_1, …, i_{n−1}` from `c`, compares the coatoms with
/// the four families and the interval list, and tests the orbit rules.
pub fn check_appendix_d(rs: &RootSystem, c: &GroupElement) -> Result<AppendixDReport> {
    let [CoxeterType::D(n)] = rs.spec().factors.as_slice() else {
        return Err(Error::WrongType(format!("{} is not of type D", rs.spec())));
    };
    let n = *n;
    let sp = signed_permutation(rs, c)?;
    let img = |x: i64| x.signum() * sp[x.unsigned_abs() as usize - 1];
    let case = [1i64, 2].into_iter().find(|&a| img(a) == -a).unwrap_or(0);
    let sequence: Vec<i64> = (1..=n as i64)
        .filter(|&x| x != case)
        .map(|start| {
            let mut s = vec![start];
            while s.len() < n - 1 {
                s.push(img(*s.last().expect("nonempty")));
            }
            s
        })
        .find(|s| s.iter().all(|&x| x > 0) && img(*s.last().expect("nonempty")) == -s[0])
        .unwrap_or_default();
    let unimodal = case != 0
        && sequence.len() == n - 1
        && is_unimodal(&sequence.iter().map(|&x| x as usize).collect::<Vec<_>>());

    let lat = NcLattice::build(rs, c)?;
    let coatoms: HashSet<RootSet> = lat.coatoms().iter().map(|&i| lat.element(i).partition.roots()).collect();
    let families_match = unimodal && {
        let fam = type_d_coatom_families(n, case, &sequence)?;
        let flats: HashSet<RootSet> =
            fam.iter().map(|b| partition_from_blocks_b(rs, b).map(|p| p.roots())).collect::<Result<_>>()?;
        flats.len() == fam.len() && flats == coatoms
    };
    let lines: Vec<RootSet> = type_d_interval_lines(n)?
        .iter()
        .map(|b| partition_from_blocks_b(rs, b).map(|p| p.roots()))
        .collect::<Result<_>>()?;
    let interval: HashSet<RootSet> = lat
        .coatoms()
        .iter()
        .filter(|&&i| is_interval_partition(rs, &lat.element(i).partition))
        .map(|&i| lat.element(i).partition.roots())
        .collect();
    let intervals_match = interval == lines.iter().copied().collect();

    let report = coatom_orbit_report(&lat);
    let h = report.h;
    let orbit_of = |r: RootSet| report.orbits.iter().position(|o| o.members.iter().any(|&j| lat.element(j).partition.roots() == r));
    let (o0, o1) = (orbit_of(lines[0]), orbit_of(lines[1]));
    let l0_l1_orbit = (o0.is_some() && o0 == o1).then(|| report.orbits[o0.expect("checked")].size());
    let rule = |pair_when_even: bool| {
        let paired = (n % 2 == 0) == pair_when_even;
        report.orbits.iter().enumerate().all(|(k, o)| {
            if paired && Some(k) == o0 {
                o0 == o1 && o.size() == h
            } else {
                o.size() == h / 2
            }
        })
    };
    let mut orbit_sizes: Vec<usize> = report.orbits.iter().map(|o| o.size()).collect();
    orbit_sizes.sort_unstable();
    Ok(AppendixDReport {
        n,
        case,
        sequence,
        unimodal,
        families_match,
        intervals_match,
        standard1: check_standard1(&report),
        h,
        orbit_sizes,
        l0_l1_orbit,
        printed_parity: rule(true),
        reversed_parity: rule(false),
    })
}

/// Verdicts of the conjugation-orbit test for one ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugationVerdict {
    /// Orbit of size `h` with two of the products, or size `h/2` with one.
    pub dichotomy: bool,
    /// `ct2 = w0·ct·w0` (resp. `ct = w0·ct·w0`) as group elements.
    pub w0_elements: bool,
    /// The same equalities between fixed spaces.
    pub w0_fixed_spaces: bool,
}

/// Conjugation orbits of the products of `c` with one generator removed,
/// for one ordering of the generators. Each such `ct` must have a
/// `c`-conjugation orbit of size `h` holding two of them, the other being
/// `w0·ct·w0`, or of size `h/2` holding only `ct`, with `w0·ct·w0 = ct`.
pub fn conjugation_orbit_check(rs: &RootSystem, ordering: &[usize]) -> Result<ConjugationVerdict> {
    let c = rs.standard_coxeter_element(ordering)?;
    let c_inv = c.inverse();
    let h = c.order();
    let w0 = rs.longest_element();
    let inte: Vec<GroupElement> = (0..rs.rank())
        .map(|i| {
            ordering
                .iter()
                .filter(|&&j| j != i)
                .fold(rs.identity(), |acc, &j| acc.compose(rs.simple_reflection(j)))
        })
        .collect();
    let mut verdict = ConjugationVerdict { dichotomy: true, w0_elements: true, w0_fixed_spaces: true };
    for ct in &inte {
        let (mut i, mut j) = (1, 1);
        let mut ct2 = None;
        let mut k = c.compose(ct).compose(&c_inv);
        while &k != ct {
            i += 1;
            if inte.contains(&k) {
                j += 1;
                ct2 = Some(k.clone());
            }
            k = c.compose(&k).compose(&c_inv);
        }
        verdict.dichotomy &= (j == 2 && i == h) || (h % 2 == 0 && i == h / 2 && j == 1);
        let conj = w0.compose(ct).compose(&w0);
        let partner = if j == 2 { ct2.as_ref() } else { Some(ct) };
        verdict.w0_elements &= j <= 2 && partner == Some(&conj);
        verdict.w0_fixed_spaces &= j <= 2 && partner.is_some_and(|p| rs.mov_roots(p) == rs.mov_roots(&conj));
    }
    Ok(verdict)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E6Report {
    pub n: usize,
    pub h: usize,
    pub checked: usize,
    pub dichotomy_failures: Vec<Vec<usize>>,
    pub element_failures: Vec<Vec<usize>>,
    pub fixed_space_failures: Vec<Vec<usize>>,
}

impl E6Report {
    /// Orbit dichotomy and `w0` pairing of the fixed lines.
    pub fn pass(&self) -> bool {
        self.checked > 0
            && self.n == 6
            && self.h == 12
            && self.dichotomy_failures.is_empty()
            && self.fixed_space_failures.is_empty()
    }

    /// The `w0` conditions read as equalities of group elements.
    pub fn element_pass(&self) -> bool {
        self.pass() && self.element_failures.is_empty()
    }
}

/// Runs [`conjugation_orbit_check`] on `E6` for each ordering given.
pub fn check_e6(rs: &RootSystem, orderings: &[Vec<usize>]) -> Result<E6Report> {
    if rs.spec().factors.as_slice() != [CoxeterType::E6] {
        return Err(Error::WrongType(format!("{} is not E6", rs.spec())));
    }
    let h = rs.coxeter_number().expect("irreducible") as usize;
    let mut report = E6Report {
        n: rs.rank(),
        h,
        checked: orderings.len(),
        dichotomy_failures: Vec::new(),
        element_failures: Vec::new(),
        fixed_space_failures: Vec::new(),
    };
    for l in orderings {
        let v = conjugation_orbit_check(rs, l)?;
        for (ok, list) in [
            (v.dichotomy, &mut report.dichotomy_failures),
            (v.w0_elements, &mut report.element_failures),
            (v.w0_fixed_spaces, &mut report.fixed_space_failures),
        ] {
            if !ok {
                list.push(l.clone());
            }
        }
    }
    Ok(report)
}
