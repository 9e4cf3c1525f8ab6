//! The partition lattice of a reflection group: flats of the hyperplane
//! arrangement, identified by the positive roots orthogonal to them.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{subspace_intersect, FieldTag, Scalar, Subspace};
use crate::rootsys::{recognize_parabolic_type, CoxeterType, GroupElement, RootSet, RootSystem};

/// A flat `π`, stored as `Φ⁺ ∩ π⊥` together with the simple system of that
/// root set. Equality and hashing use the root set only.
#[derive(Clone, Debug)]
pub struct SetPartition {
    roots: RootSet,
    simple: Vec<usize>,
    dim: usize,
}

impl PartialEq for SetPartition {
    fn eq(&self, o: &Self) -> bool {
        self.roots == o.roots
    }
}

impl Eq for SetPartition {}

impl std::hash::Hash for SetPartition {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.roots.hash(state)
    }
}

impl SetPartition {
    /// `roots` must be closed: all positive roots of some flat's orthogonal.
    pub fn from_roots(rs: &RootSystem, roots: RootSet) -> SetPartition {
        debug_assert_eq!(rs.span_closure(roots), roots);
        let simple = parabolic_simple_system(rs, roots);
        SetPartition { roots, dim: rs.rank() - simple.len(), simple }
    }

    /// The whole space `V`.
    pub fn minimal(rs: &RootSystem) -> SetPartition {
        SetPartition::from_roots(rs, RootSet::EMPTY)
    }

    /// The flat `{0}`.
    pub fn maximal(rs: &RootSystem) -> SetPartition {
        SetPartition::from_roots(rs, rs.all_positive())
    }

    pub fn roots(&self) -> RootSet {
        self.roots
    }

    pub fn simple_system(&self) -> &[usize] {
        &self.simple
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Codimension, the rank of the parabolic subgroup.
    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// The flat as an ambient subspace (coordinates required).
    pub fn subspace(&self, rs: &RootSystem) -> Option<Subspace> {
        rs.orthogonal_subspace(self.roots)
    }

    /// `w(π)`
    pub fn image(&self, rs: &RootSystem, w: &GroupElement) -> SetPartition {
        SetPartition::from_roots(rs, rs.apply_to_set(w, self.roots))
    }

    /// `π ≤ ρ` in reverse inclusion, i.e. `ρ ⊆ π`.
    pub fn leq(&self, other: &SetPartition) -> bool {
        self.roots.is_subset(other.roots)
    }
}

/// `fix(w)`
pub fn from_fix(rs: &RootSystem, w: &GroupElement) -> SetPartition {
    SetPartition::from_roots(rs, rs.mov_roots(w))
}

/// Roots `β ∈ R` such that `s_β` maps every other root of `R` to a positive root.
pub fn parabolic_simple_system(rs: &RootSystem, roots: RootSet) -> Vec<usize> {
    roots
        .iter()
        .filter(|&b| {
            let t = rs.reflection(b);
            roots.iter().all(|g| g == b || rs.is_positive(t.apply(g)))
        })
        .collect()
}

/// Whether the flat equals the intersection of the simple hyperplanes that
/// contain it.
pub fn is_interval_partition(rs: &RootSystem, p: &SetPartition) -> bool {
    let containing: Vec<usize> = (0..rs.rank()).filter(|&i| p.roots.contains(rs.simple_roots()[i])).collect();
    match (p.subspace(rs), rs.full_space()) {
        (Some(flat), Some(full)) => {
            let mut acc = full;
            for i in containing {
                let h = rs.simple_hyperplane(i).expect("coordinates");
                acc = subspace_intersect(&acc, &h).expect("same ambient");
            }
            acc == flat
        }
        _ => {
            let simple: RootSet = containing.iter().map(|&i| rs.simple_roots()[i]).collect();
            rs.span_closure(simple) == p.roots
        }
    }
}

/// `τ ⊑ π`: the simple roots of `τ` are among those of `π`.
pub fn is_interval_refinement(tau: &SetPartition, pi: &SetPartition) -> bool {
    tau.simple.iter().all(|r| pi.simple.contains(r))
}

/// `L_i`, the intersection of all simple hyperplanes but the `i`-th.
pub fn coatom_lines(rs: &RootSystem) -> Vec<SetPartition> {
    let simple = rs.simple_roots();
    (0..rs.rank())
        .map(|i| {
            let others: RootSet = simple.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &r)| r).collect();
            SetPartition::from_roots(rs, rs.span_closure(others))
        })
        .collect()
}

/// Every flat, grouped by codimension (index `k` holds the flats of rank `k`).
pub fn all_flats(rs: &RootSystem) -> Vec<Vec<SetPartition>> {
    let mut layers = vec![vec![SetPartition::minimal(rs)]];
    for _ in 0..rs.rank() {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for f in layers.last().expect("nonempty") {
            for b in rs.all_positive().difference(f.roots).iter() {
                let closed = rs.span_closure(f.roots.union(RootSet::singleton(b)));
                if seen.insert(closed) {
                    next.push(SetPartition::from_roots(rs, closed));
                }
            }
        }
        next.sort_by_key(|p| p.roots);
        layers.push(next);
    }
    layers
}

/// Number of interval flats and of maximal chains through them.
pub fn interval_chains(rs: &RootSystem) -> (usize, u128) {
    let flats = all_flats(rs);
    let interval: Vec<&SetPartition> = flats.iter().flatten().filter(|p| is_interval_partition(rs, p)).collect();
    let mut count: HashMap<RootSet, u128> = HashMap::from([(RootSet::EMPTY, 1)]);
    for k in 1..=rs.rank() {
        for p in interval.iter().filter(|p| p.rank() == k) {
            let below = interval.iter().filter(|q| q.rank() == k - 1 && q.leq(p)).map(|q| count[&q.roots]).sum();
            count.insert(p.roots, below);
        }
    }
    (interval.len(), count[&rs.all_positive()])
}

/// An irreducible factor of the parabolic subgroup of a flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub roots: RootSet,
    pub simple: Vec<usize>,
    pub ty: CoxeterType,
    pub coxeter_number: usize,
}

pub fn irreducible_factors(rs: &RootSystem, p: &SetPartition) -> Vec<Factor> {
    recognize_parabolic_type(rs, &p.simple)
        .expect("parabolic simple systems have supported diagrams")
        .into_iter()
        .map(|f| {
            let roots = rs.span_closure(f.simple.iter().copied().collect());
            let cox = f.simple.iter().fold(rs.identity(), |acc, &r| acc.compose(rs.reflection(r)));
            Factor { roots, coxeter_number: cox.order(), ty: f.ty, simple: f.simple }
        })
        .collect()
}

/// Flat spanned by explicit ambient vectors, for types whose ambient form
/// is the standard dot product (A, B, D, F4, E6).
pub fn from_spanning_vectors(rs: &RootSystem, vectors: &[Vec<Scalar>]) -> Result<SetPartition> {
    if rs.spec().factors.contains(&CoxeterType::H3) || !rs.has_coordinates() {
        return Err(Error::WrongType(format!("{}: no standard ambient form", rs.spec())));
    }
    let dot = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).fold(Scalar::zero(rs.field_tag()), |s, (x, y)| &s + &(x * y));
    let roots = (0..rs.positive_count())
        .filter(|&i| {
            let beta = rs.root_vector(i).expect("coordinates");
            vectors.iter().all(|v| dot(&beta, v).is_zero())
        })
        .collect();
    Ok(SetPartition::from_roots(rs, roots))
}

/// A classical set partition of `{1..m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlocksA {
    pub m: usize,
    /// Each block sorted, blocks sorted by least element.
    pub blocks: Vec<Vec<usize>>,
}

impl BlocksA {
    pub fn new(m: usize, mut blocks: Vec<Vec<usize>>) -> Result<BlocksA> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != (1..=m).collect::<Vec<_>>() {
            return Err(Error::Invalid(format!("{blocks:?} is not a set partition of 1..{m}")));
        }
        Ok(BlocksA { m, blocks })
    }

    pub fn singletons(m: usize) -> BlocksA {
        BlocksA { m, blocks: (1..=m).map(|i| vec![i]).collect() }
    }

    /// Parses `15|2|37|46` (single-digit labels) or `1 5|2|...`.
    pub fn parse(text: &str) -> Result<BlocksA> {
        let blocks: Vec<Vec<usize>> = text
            .split('|')
            .map(|b| {
                let b = b.trim();
                if b.contains(' ') {
                    b.split_whitespace().map(|x| x.parse().map_err(|_| Error::Invalid(text.into()))).collect()
                } else {
                    b.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Invalid(text.into()))).collect()
                }
            })
            .collect::<Result<_>>()?;
        let m = blocks.iter().flatten().copied().max().unwrap_or(0);
        BlocksA::new(m, blocks)
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&x)).expect("element of the ground set")
    }
}

impl fmt::Display for BlocksA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.m < 10 { "" } else { " " };
        let parts: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// A type B set partition of `{±1..±n}`: blocks come in pairs `b, −b`, plus
/// at most one zero block with `b = −b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlocksB {
    pub n: usize,
    /// All blocks (both members of each pair, and the zero block), each
    /// sorted by `(|x|, x < 0)`, blocks sorted by their first element.
    pub blocks: Vec<Vec<i64>>,
}

fn signed_key(x: i64) -> (i64, bool) {
    (x.abs(), x < 0)
}

impl BlocksB {
    pub fn new(n: usize, mut blocks: Vec<Vec<i64>>) -> Result<BlocksB> {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort_by_key(|&x| signed_key(x));
        }
        blocks.sort_by_key(|b| signed_key(b[0]));
        let mut all: Vec<i64> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        let expect: Vec<i64> = (-(n as i64)..=n as i64).filter(|&x| x != 0).collect();
        let bad = || Error::Invalid(format!("{blocks:?} is not a type B partition of ±1..±{n}"));
        if all != expect {
            return Err(bad());
        }
        let set: HashSet<Vec<i64>> = blocks.iter().cloned().collect();
        let mut zeros = 0;
        for b in &blocks {
            let mut neg: Vec<i64> = b.iter().map(|x| -x).collect();
            neg.sort_by_key(|&x| signed_key(x));
            if &neg == b {
                zeros += 1;
            } else if !set.contains(&neg) {
                return Err(bad());
            }
        }
        if zeros > 1 {
            return Err(bad());
        }
        Ok(BlocksB { n, blocks })
    }

    pub fn singletons(n: usize) -> BlocksB {
        let blocks = (1..=n as i64).flat_map(|i| [vec![i], vec![-i]]).collect();
        BlocksB::new(n, blocks).expect("valid")
    }

    /// Parses `1 -2 5|-1 2 -5|3 -3 6 -6|4|-4`.
    pub fn parse(text: &str) -> Result<BlocksB> {
        let blocks: Vec<Vec<i64>> = text
            .split('|')
            .map(|b| b.split_whitespace().map(|x| x.parse().map_err(|_| Error::Invalid(text.into()))).collect())
            .collect::<Result<_>>()?;
        let n = blocks.iter().flatten().map(|x: &i64| x.unsigned_abs() as usize).max().unwrap_or(0);
        BlocksB::new(n, blocks)
    }

    pub fn zero_block(&self) -> Option<&Vec<i64>> {
        self.blocks.iter().find(|b| b.iter().any(|x| b.contains(&-x)))
    }

    /// One block from each `±` pair (the one whose first element is positive).
    pub fn pair_blocks(&self) -> Vec<&Vec<i64>> {
        self.blocks.iter().filter(|b| b[0] > 0 && !b.contains(&-b[0])).collect()
    }

    pub fn block_of(&self, x: i64) -> usize {
        self.blocks.iter().position(|b| b.contains(&x)).expect("element of the ground set")
    }
}

impl fmt::Display for BlocksB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", parts.join("|"))
    }
}

fn single_factor(rs: &RootSystem) -> Option<CoxeterType> {
    match rs.spec().factors.as_slice() {
        [t] => Some(*t),
        _ => None,
    }
}

/// Reads the blocks off the coordinates of the flat: `i, j` share a block
/// iff `x_i = x_j` on it.
pub fn blocks_a(rs: &RootSystem, p: &SetPartition) -> Result<BlocksA> {
    let Some(CoxeterType::A(n)) = single_factor(rs) else {
        return Err(Error::WrongType(format!("{} is not of type A", rs.spec())));
    };
    let flat = p.subspace(rs).expect("type A has coordinates");
    let m = n + 1;
    let mut key_of: HashMap<Vec<Scalar>, usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        let key: Vec<Scalar> = flat.basis().iter().map(|b| b[i].clone()).collect();
        let k = *key_of.entry(key).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[k].push(i + 1);
    }
    BlocksA::new(m, blocks)
}

/// Signed blocks from the coordinates of the flat (types B and D): `i ~ j`
/// iff `x_i = x_j`, `i ~ −j` iff `x_i = −x_j`, zero block where `x_i = 0`.
pub fn blocks_b(rs: &RootSystem, p: &SetPartition) -> Result<BlocksB> {
    let n = match single_factor(rs) {
        Some(CoxeterType::B(n)) | Some(CoxeterType::D(n)) => n,
        _ => return Err(Error::WrongType(format!("{} is not of type B or D", rs.spec()))),
    };
    let flat = p.subspace(rs).expect("type B has coordinates");
    let coord = |i: usize, sign: i64| -> Vec<Scalar> {
        flat.basis().iter().map(|b| if sign > 0 { b[i].clone() } else { -&b[i] }).collect()
    };
    let mut key_of: HashMap<Vec<Scalar>, usize> = HashMap::new();
    let mut blocks: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for sign in [1i64, -1] {
            let k = *key_of.entry(coord(i, sign)).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[k].push(sign * (i as i64 + 1));
        }
    }
    BlocksB::new(n, blocks)
}

/// The flat of a type A set partition on `{1..n+1}`.
pub fn partition_from_blocks_a(rs: &RootSystem, b: &BlocksA) -> Result<SetPartition> {
    let Some(CoxeterType::A(n)) = single_factor(rs) else {
        return Err(Error::WrongType(format!("{} is not of type A", rs.spec())));
    };
    if b.m != n + 1 {
        return Err(Error::Invalid(format!("{b} is not on {} points", n + 1)));
    }
    let tag = FieldTag::Rational;
    let vectors: Vec<Vec<Scalar>> = b
        .blocks
        .iter()
        .map(|blk| (1..=b.m).map(|i| Scalar::from_int(tag, blk.contains(&i) as i64)).collect())
        .collect();
    from_spanning_vectors(rs, &vectors)
}

/// The flat of a type B set partition (types B and D).
pub fn partition_from_blocks_b(rs: &RootSystem, b: &BlocksB) -> Result<SetPartition> {
    let n = match single_factor(rs) {
        Some(CoxeterType::B(n)) | Some(CoxeterType::D(n)) => n,
        _ => return Err(Error::WrongType(format!("{} is not of type B or D", rs.spec()))),
    };
    if b.n != n {
        return Err(Error::Invalid(format!("{b} is not on ±1..±{n}")));
    }
    let tag = FieldTag::Rational;
    let vectors: Vec<Vec<Scalar>> = b
        .pair_blocks()
        .into_iter()
        .map(|blk| {
            let mut v = vec![Scalar::zero(tag); n];
            for &x in blk {
                v[x.unsigned_abs() as usize - 1] = Scalar::from_int(tag, x.signum());
            }
            v
        })
        .collect();
    from_spanning_vectors(rs, &vectors)
}

/// Outcome of the check that lines are conjugate to the `L_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WliReport {
    pub lines: usize,
    pub group_order: usize,
    /// Every line is some `w(L_i)`.
    pub covered: bool,
    /// `w(L_i) = L_j`, `i ≠ j` implies `w0(L_i) = L_j`.
    pub w0_pairing: bool,
}

impl WliReport {
    pub fn pass(&self) -> bool {
        self.covered && self.w0_pairing
    }
}

pub fn check_wli(rs: &RootSystem, max_group_order: usize) -> Result<WliReport> {
    let group = rs.enumerate_group(max_group_order)?;
    let flats = all_flats(rs);
    let lines: HashSet<RootSet> = flats[rs.rank() - 1].iter().map(|p| p.roots).collect();
    let ls: Vec<RootSet> = coatom_lines(rs).iter().map(|p| p.roots).collect();
    let w0 = rs.longest_element();
    let mut reached = HashSet::new();
    let mut pairing = true;
    for w in &group {
        for (i, &li) in ls.iter().enumerate() {
            let img = rs.apply_to_set(w, li);
            reached.insert(img);
            for (j, &lj) in ls.iter().enumerate() {
                if i != j && img == lj && rs.apply_to_set(&w0, li) != lj {
                    pairing = false;
                }
            }
        }
    }
    Ok(WliReport {
        lines: lines.len(),
        group_order: group.len(),
        covered: lines.iter().all(|l| reached.contains(l)),
        w0_pairing: pairing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::subspace_leq;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn fix_of_basic_elements() {
        let r = rs("A2");
        let v = from_fix(&r, &r.identity());
        assert_eq!((v.dim(), v.roots()), (2, RootSet::EMPTY));
        let c = r.standard_coxeter_element(&[0, 1]).unwrap();
        assert_eq!(from_fix(&r, &c), SetPartition::maximal(&r));
        let h1 = from_fix(&r, r.simple_reflection(0));
        assert_eq!((h1.dim(), h1.roots().len()), (1, 1));
        assert_eq!(h1.subspace(&r), r.simple_hyperplane(0));
    }

    #[test]
    fn simple_systems() {
        let r = rs("E6");
        assert_eq!(SetPartition::maximal(&r).simple_system(), r.simple_roots());
        assert!(SetPartition::minimal(&r).simple_system().is_empty());
        // the 1257|34|6 flat of A6
        let a6 = rs("A6");
        let p = partition_from_blocks_a(&a6, &BlocksA::parse("1257|34|6").unwrap()).unwrap();
        let simple: HashSet<BlocksA> = p
            .simple_system()
            .iter()
            .map(|&b| blocks_a(&a6, &SetPartition::from_roots(&a6, RootSet::singleton(b))).unwrap())
            .collect();
        for pair in ["12|3|4|5|6|7", "1|25|3|4|6|7", "1|2|3|4|57|6", "1|2|34|5|6|7"] {
            assert!(simple.contains(&BlocksA::parse(pair).unwrap()), "{pair}");
        }
        assert_eq!(p.simple_system().len(), 4);
    }

    #[test]
    fn interval_partitions() {
        let r = rs("A2");
        for l in coatom_lines(&r) {
            assert!(is_interval_partition(&r, &l));
            assert_eq!(l.dim(), 1);
        }
        let p = partition_from_blocks_a(&r, &BlocksA::parse("13|2").unwrap()).unwrap();
        assert!(!is_interval_partition(&r, &p));
        assert!(is_interval_partition(&r, &SetPartition::minimal(&r)));
    }

    #[test]
    fn figure_refinements() {
        let r = rs("A6");
        let p = |s: &str| partition_from_blocks_a(&r, &BlocksA::parse(s).unwrap()).unwrap();
        let (p1, p2, p3) = (p("1257|34|6"), p("12|34|57|6"), p("17|25|34|6"));
        assert!(is_interval_refinement(&p2, &p1));
        assert!(!is_interval_refinement(&p3, &p1));
        assert!(is_interval_refinement(&SetPartition::minimal(&r), &p1));
        assert!(is_interval_refinement(&p1, &p1));
    }

    #[test]
    fn factors() {
        let a3 = rs("A3");
        let top = irreducible_factors(&a3, &SetPartition::maximal(&a3));
        assert_eq!((top.len(), top[0].ty, top[0].coxeter_number), (1, CoxeterType::A(3), 4));
        let p = partition_from_blocks_a(&a3, &BlocksA::parse("12|34").unwrap()).unwrap();
        let f = irreducible_factors(&a3, &p);
        assert_eq!(f.iter().map(|x| x.ty).collect::<Vec<_>>(), vec![CoxeterType::A(1); 2]);
        let b2 = rs("B2");
        let z = from_fix(&b2, b2.simple_reflection(0));
        let f = irreducible_factors(&b2, &z);
        assert_eq!((f.len(), f[0].ty, f[0].coxeter_number), (1, CoxeterType::A(1), 2));
        assert_eq!(blocks_b(&b2, &z).unwrap().to_string(), "1 -1|2|-2");
    }

    #[test]
    fn block_decoders() {
        let a3 = rs("A3");
        let t = a3.reflection(0);
        assert_eq!(blocks_a(&a3, &from_fix(&a3, t)).unwrap().to_string(), "12|3|4");
        assert_eq!(blocks_a(&a3, &SetPartition::minimal(&a3)).unwrap().to_string(), "1|2|3|4");
        let b6 = rs("B6");
        for text in ["1 -1 3 -3|2 -4 5 6|-2 4 -5 -6", "1 -2 5|-1 2 -5|3 -3 6 -6|4|-4"] {
            let b = BlocksB::parse(text).unwrap();
            let p = partition_from_blocks_b(&b6, &b).unwrap();
            assert_eq!(blocks_b(&b6, &p).unwrap().to_string(), text);
        }
        assert_eq!(blocks_b(&b6, &SetPartition::minimal(&b6)).unwrap(), BlocksB::singletons(6));
        assert!(blocks_a(&b6, &SetPartition::minimal(&b6)).is_err());
        assert!(BlocksB::parse("1 2|-1 -2 3|-3").is_err());
        assert!(BlocksB::parse("1 -1|2 -2").is_err());
    }

    #[test]
    fn wli() {
        for label in ["A2", "B2", "D4", "H3", "I2(5)", "A3"] {
            let rep = check_wli(&rs(label), 2000).unwrap();
            assert!(rep.pass(), "{label}: {rep:?}");
        }
        assert!(check_wli(&rs("E6"), 2000).is_err());
    }

    #[test]
    fn boolean_interval_lattice() {
        for label in ["A3", "B3", "H3", "D4", "I2(5)"] {
            let r = rs(label);
            let n_fact: u128 = (1..=r.rank() as u128).product();
            assert_eq!(interval_chains(&r), (1 << r.rank(), n_fact), "{label}");
        }
    }

    #[test]
    fn interval_test_agrees_with_refinement_of_top() {
        for label in ["A3", "B3", "I2(7)", "A2xA1"] {
            let r = rs(label);
            let top = SetPartition::maximal(&r);
            for p in all_flats(&r).iter().flatten() {
                assert_eq!(is_interval_partition(&r, p), is_interval_refinement(p, &top), "{label}");
            }
        }
    }

    #[test]
    fn refinement_implies_containment() {
        let r = rs("B3");
        let flats: Vec<SetPartition> = all_flats(&r).into_iter().flatten().collect();
        for a in &flats {
            for b in &flats {
                if is_interval_refinement(a, b) {
                    assert!(subspace_leq(&a.subspace(&r).unwrap(), &b.subspace(&r).unwrap()));
                }
            }
        }
    }

    /// `β` is simple in `R` iff it is not a nonnegative combination of two
    /// other roots of `R`.
    fn cone_simple(r: &RootSystem, roots: RootSet) -> Vec<usize> {
        let coords = |i: usize| r.root_simple_coords(i).unwrap();
        roots
            .iter()
            .filter(|&b| {
                let beta = coords(b);
                !roots.iter().any(|g| {
                    roots.iter().any(|d| {
                        if g == b || d == b || g == d {
                            return false;
                        }
                        nonneg_solution(&coords(g), &coords(d), &beta)
                    })
                })
            })
            .collect()
    }

    /// Exact search for `x, y ≥ 0` with `x·u + y·v = w`.
    fn nonneg_solution(u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> bool {
        let n = u.len();
        for i in 0..n {
            for j in 0..n {
                let det = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
                if det.is_zero() {
                    continue;
                }
                let x = (&(&w[i] * &v[j]) - &(&w[j] * &v[i])).div(&det);
                let y = (&(&u[i] * &w[j]) - &(&u[j] * &w[i])).div(&det);
                let fits = (0..n).all(|k| (&(&(&x * &u[k]) + &(&y * &v[k])) - &w[k]).is_zero());
                return fits && x.signum() >= 0 && y.signum() >= 0;
            }
        }
        false
    }

    #[test]
    fn simple_system_matches_cone_definition() {
        for label in ["A3", "B3", "H3", "A2xA1"] {
            let r = rs(label);
            for p in all_flats(&r).iter().flatten() {
                assert_eq!(p.simple_system(), cone_simple(&r, p.roots()), "{label}");
            }
        }
    }

    #[test]
    fn monotone_root_sets() {
        let r = rs("D4");
        let flats: Vec<SetPartition> = all_flats(&r).into_iter().flatten().collect();
        for a in &flats {
            for b in &flats {
                let (sa, sb) = (a.subspace(&r).unwrap(), b.subspace(&r).unwrap());
                // π ≤ ρ means ρ ⊆ π
                if subspace_leq(&sa, &sb) {
                    assert!(a.roots().is_subset(b.roots()));
                }
            }
        }
    }
}
