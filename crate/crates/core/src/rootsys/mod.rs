//! Root systems and group elements for A_n, B_n, D_n, I2(m), H3, F4, E6 and
//! their direct products.
//!
//! Roots are indexed globally: positive roots `0..N` grouped by irreducible
//! component (simple roots first inside each component), and `N + i` is the
//! negative of root `i`.

mod build;
mod data;
mod diagram;
mod element;
mod spec;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{mat_kernel, ExactMatrix, FieldTag, Scalar, Subspace};

use build::{build_component, dihedral_reflection, dihedral_simple, Backend};
pub use data::{irreducible_data, IrreducibleData};
pub use diagram::{coxeter_matrix, recognize_parabolic_type, ParabolicFactor};
pub use element::{GroupElement, RootSet};
pub use spec::{CoxeterType, GroupSpec};

/// Which construction backs a root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BackendKind {
    Matrix,
    Dihedral,
    Mixed,
}

struct Component {
    ty: CoxeterType,
    pos_offset: usize,
    n_pos: usize,
    gen_offset: usize,
    ambient_offset: usize,
    backend: Backend,
}

impl Component {
    fn rank(&self) -> usize {
        self.ty.rank()
    }

    fn positive(&self) -> RootSet {
        RootSet(RootSet::full(self.n_pos).0 << self.pos_offset)
    }
}

pub struct RootSystem {
    spec: GroupSpec,
    comps: Vec<Component>,
    n_pos: usize,
    rank: usize,
    ambient: usize,
    tag: FieldTag,
    simple: Vec<usize>,
    reflections: Vec<GroupElement>,
    reflection_index: HashMap<GroupElement, usize>,
    /// global root -> (component, local index)
    home: Vec<(usize, usize)>,
    mov_cache: RwLock<HashMap<GroupElement, RootSet>>,
}

impl std::fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RootSystem({}, {} positive roots)", self.spec, self.n_pos)
    }
}

impl RootSystem {
    pub fn build(spec: &GroupSpec) -> Result<RootSystem> {
        let mut comps = Vec::new();
        let (mut pos, mut gens, mut amb) = (0, 0, 0);
        let mut tag = FieldTag::Rational;
        for &ty in &spec.factors {
            let backend = build_component(ty);
            let (n_pos, ambient) = match &backend {
                Backend::Matrix(m) => {
                    tag = tag.join(m.tag);
                    (m.n_pos(), m.ambient())
                }
                Backend::Dihedral { m } => (*m, 0),
            };
            comps.push(Component { ty, pos_offset: pos, n_pos, gen_offset: gens, ambient_offset: amb, backend });
            pos += n_pos;
            gens += ty.rank();
            amb += ambient;
        }
        if pos > 128 {
            return Err(Error::Unsupported(format!("{spec}: {pos} positive roots exceed the supported 128")));
        }
        let n_pos = pos;
        let mut home = vec![(0, 0); 2 * n_pos];
        for (ci, c) in comps.iter().enumerate() {
            for l in 0..c.n_pos {
                home[c.pos_offset + l] = (ci, l);
                home[n_pos + c.pos_offset + l] = (ci, c.n_pos + l);
            }
        }
        let mut rs = RootSystem {
            spec: spec.clone(),
            comps,
            n_pos,
            rank: gens,
            ambient: amb,
            tag,
            simple: Vec::new(),
            reflections: Vec::new(),
            reflection_index: HashMap::new(),
            home,
            mov_cache: RwLock::new(HashMap::new()),
        };
        for c in &rs.comps {
            match &c.backend {
                Backend::Matrix(_) => rs.simple.extend((0..c.rank()).map(|j| c.pos_offset + j)),
                Backend::Dihedral { m } => rs.simple.extend(dihedral_simple(*m).iter().map(|&j| c.pos_offset + j)),
            }
        }
        let mut reflections = Vec::with_capacity(n_pos);
        for (ci, c) in rs.comps.iter().enumerate() {
            for l in 0..c.n_pos {
                let local = match &c.backend {
                    Backend::Matrix(m) => m.reflection_perm(l),
                    Backend::Dihedral { m } => dihedral_reflection(*m, l),
                };
                let mut perm: Vec<u16> = (0..2 * n_pos as u16).collect();
                for (g, p) in perm.iter_mut().enumerate() {
                    let (hc, hl) = rs.home[g];
                    if hc == ci {
                        *p = rs.global(ci, local[hl] as usize) as u16;
                    }
                }
                reflections.push(GroupElement::from_perm(perm));
            }
        }
        rs.reflection_index = reflections.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        rs.reflections = reflections;
        Ok(rs)
    }

    pub fn from_label(text: &str) -> Result<RootSystem> {
        RootSystem::build(&GroupSpec::parse(text)?)
    }

    fn global(&self, comp: usize, local: usize) -> usize {
        let c = &self.comps[comp];
        if local < c.n_pos {
            c.pos_offset + local
        } else {
            self.n_pos + c.pos_offset + local - c.n_pos
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of roots, positive and negative.
    pub fn root_count(&self) -> usize {
        2 * self.n_pos
    }

    pub fn positive_count(&self) -> usize {
        self.n_pos
    }

    pub fn all_positive(&self) -> RootSet {
        RootSet::full(self.n_pos)
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    /// The positive root among `±root i`.
    pub fn abs_root(&self, i: usize) -> usize {
        if i < self.n_pos {
            i
        } else {
            i - self.n_pos
        }
    }

    /// Simple roots, in generator order.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_set(&self) -> RootSet {
        self.simple.iter().copied().collect()
    }

    pub fn backend(&self) -> BackendKind {
        let dihedral = self.comps.iter().filter(|c| matches!(c.backend, Backend::Dihedral { .. })).count();
        match dihedral {
            0 => BackendKind::Matrix,
            d if d == self.comps.len() => BackendKind::Dihedral,
            _ => BackendKind::Mixed,
        }
    }

    pub fn has_coordinates(&self) -> bool {
        self.backend() == BackendKind::Matrix
    }

    pub fn field_tag(&self) -> FieldTag {
        self.tag
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Irreducible components with their positive roots.
    pub fn components(&self) -> Vec<(CoxeterType, RootSet)> {
        self.comps.iter().map(|c| (c.ty, c.positive())).collect()
    }

    pub fn component_of_root(&self, i: usize) -> usize {
        self.home[i].0
    }

    pub fn irreducible_data(&self) -> Vec<IrreducibleData> {
        self.spec.factors.iter().map(|&t| irreducible_data(t)).collect()
    }

    pub fn group_order(&self) -> BigInt {
        self.irreducible_data().iter().fold(BigInt::one(), |a, d| a * &d.group_order)
    }

    /// Coxeter number of an irreducible group.
    pub fn coxeter_number(&self) -> Option<u64> {
        self.spec.is_irreducible().then(|| irreducible_data(self.spec.factors[0]).coxeter_number)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.root_count())
    }

    /// One reflection per positive root, in positive-root order.
    pub fn reflections(&self) -> &[GroupElement] {
        &self.reflections
    }

    pub fn reflection(&self, k: usize) -> &GroupElement {
        &self.reflections[k]
    }

    pub fn simple_reflection(&self, i: usize) -> &GroupElement {
        &self.reflections[self.simple[i]]
    }

    /// Positive root of a reflection, if `t` is one.
    pub fn reflection_root(&self, t: &GroupElement) -> Option<usize> {
        self.reflection_index.get(t).copied()
    }

    /// Product of reflections given by positive-root index, left to right.
    pub fn reflection_product(&self, word: &[usize]) -> GroupElement {
        word.iter().fold(self.identity(), |acc, &k| acc.compose(&self.reflections[k]))
    }

    /// Image of a set of positive roots, taken up to sign.
    pub fn apply_to_set(&self, w: &GroupElement, s: RootSet) -> RootSet {
        s.iter().map(|i| self.abs_root(w.apply(i))).collect()
    }

    /// Ambient coordinates of a root (matrix backend only).
    pub fn root_vector(&self, i: usize) -> Option<Vec<Scalar>> {
        let (ci, l) = self.home[i];
        let c = &self.comps[ci];
        let Backend::Matrix(m) = &c.backend else { return None };
        let local = m.embed.mul_vec(&m.roots[l]);
        let mut v = vec![Scalar::zero(self.tag); self.ambient];
        for (k, x) in local.into_iter().enumerate() {
            v[c.ambient_offset + k] = x.promote(self.tag);
        }
        Some(v)
    }

    /// Coordinates of a root in the basis of simple roots.
    pub fn root_simple_coords(&self, i: usize) -> Option<Vec<Scalar>> {
        let (ci, l) = self.home[i];
        let c = &self.comps[ci];
        let Backend::Matrix(m) = &c.backend else { return None };
        let mut v = vec![Scalar::zero(self.tag); self.rank];
        for (k, x) in m.roots[l].iter().enumerate() {
            v[c.gen_offset + k] = x.promote(self.tag);
        }
        Some(v)
    }

    /// Positive roots in the moved space of `w`, i.e. in `fix(w)^⊥`.
    pub fn mov_roots(&self, w: &GroupElement) -> RootSet {
        if let Some(s) = self.mov_cache.read().expect("cache lock").get(w) {
            return *s;
        }
        let mut out = RootSet::EMPTY;
        for (ci, c) in self.comps.iter().enumerate() {
            out = out.union(self.component_mov(ci, c, w));
        }
        self.mov_cache.write().expect("cache lock").insert(w.clone(), out);
        out
    }

    fn component_mov(&self, ci: usize, c: &Component, w: &GroupElement) -> RootSet {
        match &c.backend {
            Backend::Matrix(m) => {
                let moved: Vec<Vec<Scalar>> = (0..m.rank)
                    .map(|j| {
                        let img = self.home[w.apply(c.pos_offset + j)];
                        debug_assert_eq!(img.0, ci);
                        let mut v = m.roots[img.1].clone();
                        v[j] = &v[j] - &Scalar::one(m.tag);
                        v
                    })
                    .collect();
                let span = Subspace::span(m.tag, m.rank, &moved);
                match span.dim() {
                    0 => RootSet::EMPTY,
                    d if d == m.rank => c.positive(),
                    _ => (0..c.n_pos).filter(|&l| span.contains(&m.roots[l])).map(|l| c.pos_offset + l).collect(),
                }
            }
            Backend::Dihedral { m } => {
                let m = *m;
                let local = |k: usize| self.home[w.apply(c.pos_offset + k)].1;
                let sums: HashSet<usize> = (0..2 * m)
                    .map(|k| {
                        let g = self.global(ci, k);
                        (self.home[w.apply(g)].1 + k) % (2 * m)
                    })
                    .collect();
                if (0..m).all(|k| local(k) == k) {
                    RootSet::EMPTY
                } else if sums.len() == 1 {
                    let s = *sums.iter().next().expect("nonempty");
                    RootSet::singleton(c.pos_offset + ((s + m) % (2 * m)) / 2)
                } else {
                    c.positive()
                }
            }
        }
    }

    /// `n − dim fix(w)`.
    pub fn absolute_length(&self, w: &GroupElement) -> usize {
        self.span_rank(self.mov_roots(w))
    }

    /// Dimension of the span of a set of positive roots.
    pub fn span_rank(&self, s: RootSet) -> usize {
        self.comps
            .iter()
            .map(|c| {
                let part = s.intersection(c.positive());
                match &c.backend {
                    Backend::Matrix(m) => {
                        let vs: Vec<Vec<Scalar>> = part.iter().map(|i| m.roots[i - c.pos_offset].clone()).collect();
                        Subspace::span(m.tag, m.rank, &vs).dim()
                    }
                    Backend::Dihedral { .. } => part.len().min(2),
                }
            })
            .sum()
    }

    /// All positive roots in the linear span of `s`.
    pub fn span_closure(&self, s: RootSet) -> RootSet {
        let mut out = RootSet::EMPTY;
        for c in &self.comps {
            let part = s.intersection(c.positive());
            let closed = match &c.backend {
                Backend::Matrix(m) => {
                    let vs: Vec<Vec<Scalar>> = part.iter().map(|i| m.roots[i - c.pos_offset].clone()).collect();
                    let span = Subspace::span(m.tag, m.rank, &vs);
                    match span.dim() {
                        0 => RootSet::EMPTY,
                        d if d == m.rank => c.positive(),
                        _ => (0..c.n_pos).filter(|&l| span.contains(&m.roots[l])).map(|l| c.pos_offset + l).collect(),
                    }
                }
                Backend::Dihedral { .. } => {
                    if part.len() >= 2 {
                        c.positive()
                    } else {
                        part
                    }
                }
            };
            out = out.union(closed);
        }
        out
    }

    /// The flat `{x : (x, β) = 0 for β ∈ s}` as an ambient subspace of `V`.
    /// `None` when some component has no coordinates.
    pub fn orthogonal_subspace(&self, s: RootSet) -> Option<Subspace> {
        let mut vectors = Vec::new();
        for c in &self.comps {
            let Backend::Matrix(m) = &c.backend else { return None };
            let rows: Vec<Vec<Scalar>> = s
                .intersection(c.positive())
                .iter()
                .map(|i| m.gram.mul_vec(&m.roots[i - c.pos_offset]))
                .collect();
            let kernel = if rows.is_empty() {
                Subspace::full(m.tag, m.rank)
            } else {
                mat_kernel(&ExactMatrix::from_rows(m.tag, m.rank, &rows))
            };
            for y in kernel.basis() {
                let x = m.embed.mul_vec(y);
                let mut v = vec![Scalar::zero(self.tag); self.ambient];
                for (k, e) in x.into_iter().enumerate() {
                    v[c.ambient_offset + k] = e.promote(self.tag);
                }
                vectors.push(v);
            }
        }
        Some(Subspace::span(self.tag, self.ambient, &vectors))
    }

    /// The whole space `V` (the span of the roots inside the ambient space).
    pub fn full_space(&self) -> Option<Subspace> {
        self.orthogonal_subspace(RootSet::EMPTY)
    }

    /// The hyperplane orthogonal to the `i`-th simple root.
    pub fn simple_hyperplane(&self, i: usize) -> Option<Subspace> {
        self.orthogonal_subspace(RootSet::singleton(self.simple[i]))
    }

    /// The matrix of `w` acting on `V` in the basis of simple roots.
    pub fn element_matrix(&self, w: &GroupElement) -> Option<ExactMatrix> {
        let mut out = ExactMatrix::zeros(self.tag, self.rank, self.rank);
        for c in &self.comps {
            let Backend::Matrix(m) = &c.backend else { return None };
            for j in 0..m.rank {
                let img = self.home[w.apply(c.pos_offset + j)].1;
                for (k, x) in m.roots[img].iter().enumerate() {
                    out.set(c.gen_offset + k, c.gen_offset + j, x.promote(self.tag));
                }
            }
        }
        Some(out)
    }

    /// `dim fix(w)`, from the kernel of `w − 1`. `None` without coordinates.
    pub fn fix_dim(&self, w: &GroupElement) -> Option<usize> {
        let m = self.element_matrix(w)?;
        Some(mat_kernel(&m.sub(&ExactMatrix::identity(self.tag, self.rank))).dim())
    }

    /// Length of a shortest reflection word for every element, by
    /// breadth-first search over all reflections.
    pub fn reflection_lengths(&self, cap: usize) -> Result<HashMap<GroupElement, usize>> {
        let order = self.group_order();
        if order > BigInt::from(cap) {
            return Err(Error::Guard { what: "reflection lengths", needed: format!("|W| = {order}"), limit: cap.to_string() });
        }
        let mut dist = HashMap::from([(self.identity(), 0)]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for t in &self.reflections {
                let wt = w.compose(t);
                if !dist.contains_key(&wt) {
                    dist.insert(wt.clone(), d + 1);
                    queue.push_back(wt);
                }
            }
        }
        Ok(dist)
    }

    /// Whether `w` maps the flat orthogonal to the closed root set `roots`
    /// onto itself and acts there as `−1`.
    pub fn acts_as_minus_one(&self, w: &GroupElement, roots: RootSet) -> bool {
        if self.apply_to_set(w, roots) != roots {
            return false;
        }
        if let Some(mat) = self.element_matrix(w) {
            // fix space in simple-root coordinates: kernel of (β, ·) over β ∈ roots
            let mut rows = Vec::new();
            for i in roots.iter() {
                let (ci, l) = self.home[i];
                let c = &self.comps[ci];
                let Backend::Matrix(m) = &c.backend else { unreachable!() };
                let gb = m.gram.mul_vec(&m.roots[l]);
                let mut row = vec![Scalar::zero(self.tag); self.rank];
                for (k, x) in gb.into_iter().enumerate() {
                    row[c.gen_offset + k] = x.promote(self.tag);
                }
                rows.push(row);
            }
            let flat = if rows.is_empty() {
                Subspace::full(self.tag, self.rank)
            } else {
                mat_kernel(&ExactMatrix::from_rows(self.tag, self.rank, &rows))
            };
            flat.dim() > 0
                && flat.basis().iter().all(|y| {
                    let img = mat.mul_vec(y);
                    img.iter().zip(y).all(|(a, b)| (a + b).is_zero())
                })
        } else {
            // On a line, a stabilizing element is ±1; it is +1 exactly when the
            // line lies in fix(w).
            self.rank - self.span_rank(roots) == 1 && !self.mov_roots(w).is_subset(roots)
        }
    }

    /// `s_{σ(1)} ⋯ s_{σ(n)}` for a permutation `σ` of the generator positions.
    pub fn standard_coxeter_element(&self, ordering: &[usize]) -> Result<GroupElement> {
        let mut seen = vec![false; self.rank];
        if ordering.len() != self.rank {
            return Err(Error::Invalid(format!("ordering has {} entries, rank is {}", ordering.len(), self.rank)));
        }
        for &i in ordering {
            if i >= self.rank || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid(format!("{ordering:?} is not a permutation of 0..{}", self.rank)));
            }
        }
        Ok(ordering.iter().fold(self.identity(), |acc, &i| acc.compose(self.simple_reflection(i))))
    }

    /// Distinct standard Coxeter elements over all orderings, in order of
    /// first appearance (orderings taken lexicographically).
    pub fn all_standard_coxeter_elements(&self, max_rank: usize) -> Result<Vec<GroupElement>> {
        if self.rank > max_rank {
            return Err(Error::Guard {
                what: "standard Coxeter elements",
                needed: format!("rank {}", self.rank),
                limit: format!("rank {max_rank}"),
            });
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for ord in orderings(self.rank) {
            let c = self.standard_coxeter_element(&ord).expect("valid permutation");
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        Ok(out)
    }

    pub fn longest_element(&self) -> GroupElement {
        let mut w = self.identity();
        'grow: loop {
            let inv = w.inverse();
            for i in 0..self.rank {
                if self.is_positive(inv.apply(self.simple[i])) {
                    w = self.simple_reflection(i).compose(&w);
                    continue 'grow;
                }
            }
            return w;
        }
    }

    pub fn element_order(&self, w: &GroupElement) -> usize {
        w.order()
    }

    /// All group elements by breadth-first search over simple reflections.
    pub fn enumerate_group(&self, cap: usize) -> Result<Vec<GroupElement>> {
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank {
                let sw = self.simple_reflection(i).compose(&w);
                if seen.insert(sw.clone()) {
                    if seen.len() > cap {
                        return Err(Error::Guard {
                            what: "group enumeration",
                            needed: format!("|W| = {}", self.group_order()),
                            limit: cap.to_string(),
                        });
                    }
                    queue.push_back(sw);
                }
            }
            out.push(w);
        }
        Ok(out)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn orderings(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}
