//! Construction of the irreducible components: explicit simple roots for the
//! crystallographic types, a Gram matrix over Q(√5) for H3, and a purely
//! combinatorial model for the dihedral groups.

use std::collections::{HashMap, VecDeque};

use crate::exactalg::{rat, ExactMatrix, FieldTag, QuadExt5, Scalar};

use super::spec::CoxeterType;

pub(crate) enum Backend {
    Matrix(MatrixComp),
    Dihedral { m: usize },
}

/// Roots of one irreducible component in simple-root coordinates.
/// Local index `i < N` is a positive root, `N + i` is its negative.
pub(crate) struct MatrixComp {
    pub tag: FieldTag,
    pub rank: usize,
    /// `(α_i, α_j)` for the simple roots.
    pub gram: ExactMatrix,
    /// Columns are the simple roots in ambient coordinates.
    pub embed: ExactMatrix,
    pub roots: Vec<Vec<Scalar>>,
    pub lookup: HashMap<Vec<Scalar>, usize>,
}

impl MatrixComp {
    pub fn n_pos(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn ambient(&self) -> usize {
        self.embed.rows()
    }

    /// `(x, y)` for vectors in simple-root coordinates.
    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).fold(Scalar::zero(self.tag), |acc, (a, b)| &acc + &(a * b))
    }

    /// `s_β(γ)` in simple-root coordinates.
    pub fn reflect(&self, beta: &[Scalar], gamma: &[Scalar]) -> Vec<Scalar> {
        let two = Scalar::from_int(self.tag, 2);
        let c = (&two * &self.inner(gamma, beta)).div(&self.inner(beta, beta));
        gamma.iter().zip(beta).map(|(g, b)| g - &(&c * b)).collect()
    }

    /// Local permutation of the reflection in positive root `k`.
    pub fn reflection_perm(&self, k: usize) -> Vec<u16> {
        let beta = &self.roots[k];
        self.roots
            .iter()
            .map(|g| *self.lookup.get(&self.reflect(beta, g)).expect("root system closed under reflections") as u16)
            .collect()
    }
}

pub(crate) fn build_component(ty: CoxeterType) -> Backend {
    use CoxeterType::*;
    let q = FieldTag::Rational;
    match ty {
        A(n) => {
            let simple = (0..n).map(|i| unit_diff(q, n + 1, i, i + 1)).collect();
            Backend::Matrix(matrix_component(q, n + 1, simple, None))
        }
        B(n) => {
            let mut simple = vec![scaled_unit(q, n, 0, -1)];
            simple.extend((1..n).map(|i| unit_diff(q, n, i - 1, i)));
            Backend::Matrix(matrix_component(q, n, simple, None))
        }
        D(n) => {
            let mut first = scaled_unit(q, n, 0, -1);
            first[1] = Scalar::from_int(q, -1);
            let mut simple = vec![first];
            simple.extend((1..n).map(|i| unit_diff(q, n, i - 1, i)));
            Backend::Matrix(matrix_component(q, n, simple, None))
        }
        F4 => {
            let h = rat(1, 2);
            let simple = vec![
                unit_diff(q, 4, 1, 2),
                unit_diff(q, 4, 2, 3),
                scaled_unit(q, 4, 3, 1),
                vec![h.clone(), -h.clone(), -h.clone(), -h]
                    .into_iter()
                    .map(Scalar::Rat)
                    .collect(),
            ];
            Backend::Matrix(matrix_component(q, 4, simple, None))
        }
        E6 => {
            let h = rat(1, 2);
            let mut a1 = vec![Scalar::Rat(-h.clone()); 8];
            a1[0] = Scalar::Rat(h.clone());
            a1[7] = Scalar::Rat(h);
            let mut a2 = vec![Scalar::zero(q); 8];
            a2[0] = Scalar::one(q);
            a2[1] = Scalar::one(q);
            let simple = vec![
                a1,
                a2,
                unit_diff(q, 8, 1, 0),
                unit_diff(q, 8, 2, 1),
                unit_diff(q, 8, 3, 2),
                unit_diff(q, 8, 4, 3),
            ];
            Backend::Matrix(matrix_component(q, 8, simple, None))
        }
        H3 => {
            // unit roots; angle π/5 between α_1, α_2 and π/3 between α_2, α_3
            let t = FieldTag::Sqrt5;
            let minus_half_phi = Scalar::Quad(QuadExt5::new(rat(-1, 4), rat(-1, 4)));
            let zero = Scalar::zero(t);
            let one = Scalar::one(t);
            let minus_half = Scalar::from_rational(t, rat(-1, 2));
            let gram = ExactMatrix::from_rows(
                t,
                3,
                &[
                    vec![one.clone(), minus_half_phi.clone(), zero.clone()],
                    vec![minus_half_phi, one.clone(), minus_half.clone()],
                    vec![zero, minus_half, one],
                ],
            );
            let simple = (0..3).map(|i| scaled_unit(t, 3, i, 1)).collect();
            Backend::Matrix(matrix_component(t, 3, simple, Some(gram)))
        }
        I2(m) => Backend::Dihedral { m },
    }
}

fn scaled_unit(tag: FieldTag, d: usize, i: usize, k: i64) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(tag); d];
    v[i] = Scalar::from_int(tag, k);
    v
}

/// `e_i − e_j`
fn unit_diff(tag: FieldTag, d: usize, i: usize, j: usize) -> Vec<Scalar> {
    let mut v = scaled_unit(tag, d, i, 1);
    v[j] = Scalar::from_int(tag, -1);
    v
}

fn matrix_component(tag: FieldTag, ambient: usize, simple: Vec<Vec<Scalar>>, form: Option<ExactMatrix>) -> MatrixComp {
    let rank = simple.len();
    let embed = ExactMatrix::from_cols(tag, ambient, &simple);
    let form = form.unwrap_or_else(|| ExactMatrix::identity(tag, ambient));
    let gram = embed.transpose().mul(&form).mul(&embed);
    let mut comp = MatrixComp { tag, rank, gram, embed, roots: Vec::new(), lookup: HashMap::new() };

    let unit = |i: usize| -> Vec<Scalar> { (0..rank).map(|j| Scalar::from_int(tag, (i == j) as i64)).collect() };
    let simple_coords: Vec<Vec<Scalar>> = (0..rank).map(unit).collect();
    let mut seen: HashMap<Vec<Scalar>, ()> = HashMap::new();
    let mut queue: VecDeque<Vec<Scalar>> = VecDeque::new();
    let mut all = Vec::new();
    for s in &simple_coords {
        if seen.insert(s.clone(), ()).is_none() {
            queue.push_back(s.clone());
        }
    }
    while let Some(beta) = queue.pop_front() {
        for s in &simple_coords {
            let img = comp.reflect(s, &beta);
            if !seen.contains_key(&img) {
                seen.insert(img.clone(), ());
                queue.push_back(img);
            }
        }
        all.push(beta);
    }

    let mut positive: Vec<Vec<Scalar>> = all.into_iter().filter(|r| r.iter().all(|x| x.signum() >= 0)).collect();
    let height = |r: &Vec<Scalar>| r.iter().fold(Scalar::zero(tag), |a, x| &a + x);
    positive.sort_by(|x, y| {
        height(x).cmp_value(&height(y)).then_with(|| {
            // lexicographically descending, so simple roots come in index order
            for (a, b) in x.iter().zip(y) {
                let c = b.cmp_value(a);
                if c.is_ne() {
                    return c;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    let negative: Vec<Vec<Scalar>> = positive.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    comp.roots = positive.into_iter().chain(negative).collect();
    comp.lookup = comp.roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    debug_assert!((0..rank).all(|i| comp.roots[i] == simple_coords[i]));
    comp
}

/// Local permutation of the dihedral reflection in positive root `r`. Root
/// `k` sits at angle `kπ/m`; positive roots are `0..m`, `−u_k = u_{k+m}`.
pub(crate) fn dihedral_reflection(m: usize, r: usize) -> Vec<u16> {
    (0..2 * m).map(|k| ((2 * r + 3 * m - k) % (2 * m)) as u16).collect()
}

/// Simple roots of the dihedral model: angles 0 and (m−1)π/m.
pub(crate) fn dihedral_simple(m: usize) -> [usize; 2] {
    [0, m - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n_roots(ty: CoxeterType) -> usize {
        match build_component(ty) {
            Backend::Matrix(c) => c.roots.len(),
            Backend::Dihedral { m } => 2 * m,
        }
    }

    #[test]
    fn root_counts() {
        // #Φ = n·h
        assert_eq!(n_roots(CoxeterType::A(2)), 6);
        assert_eq!(n_roots(CoxeterType::B(3)), 18);
        assert_eq!(n_roots(CoxeterType::D(4)), 24);
        assert_eq!(n_roots(CoxeterType::F4), 48);
        assert_eq!(n_roots(CoxeterType::H3), 30);
        assert_eq!(n_roots(CoxeterType::E6), 72);
    }

    #[test]
    fn dihedral_reflection_negates_its_root() {
        for m in 3..9 {
            for r in 0..m {
                let p = dihedral_reflection(m, r);
                assert_eq!(p[r] as usize, r + m);
                assert!(p.iter().enumerate().all(|(k, &v)| p[v as usize] as usize == k));
            }
        }
    }

    #[test]
    fn positive_roots_are_nonnegative_combinations() {
        if let Backend::Matrix(c) = build_component(CoxeterType::H3) {
            let n = c.n_pos();
            for r in &c.roots[..n] {
                assert!(r.iter().all(|x| x.signum() >= 0));
            }
            for r in &c.roots[n..] {
                assert!(r.iter().all(|x| x.signum() <= 0));
            }
        }
    }
}
