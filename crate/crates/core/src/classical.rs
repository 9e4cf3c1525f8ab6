//! Permutation models: `S_{n+1}` acting on points for type A, signed
//! permutations of `±1..±n` for types B and D.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactalg::Scalar;
use crate::rootsys::{CoxeterType, GroupElement, RootSystem};

fn root_lookup(rs: &RootSystem) -> HashMap<Vec<Scalar>, usize> {
    (0..rs.root_count()).map(|i| (rs.root_vector(i).expect("coordinates"), i)).collect()
}

fn unit_diff(m: usize, i: usize, j: usize, sign: i64) -> Vec<Scalar> {
    let t = crate::exactalg::FieldTag::Rational;
    let mut v = vec![Scalar::zero(t); m];
    v[i] = Scalar::from_int(t, 1);
    v[j] = Scalar::from_int(t, sign);
    v
}

/// The permutation of `0..=n` induced by an element of `A_n` (0-based images).
pub fn point_permutation(rs: &RootSystem, w: &GroupElement) -> Result<Vec<usize>> {
    let [CoxeterType::A(n)] = rs.spec().factors.as_slice() else {
        return Err(Error::WrongType(format!("{} is not of type A", rs.spec())));
    };
    let m = n + 1;
    let lookup = root_lookup(rs);
    Ok((0..m)
        .map(|i| {
            let j = if i == 0 { 1 } else { 0 };
            let img = rs.root_vector(w.apply(lookup[&unit_diff(m, i, j, -1)])).expect("coordinates");
            img.iter().position(|x| x.is_one()).expect("image is e_a - e_b")
        })
        .collect())
}

/// The signed permutation of an element of `B_n` or `D_n`: entry `i - 1`
/// is the image of `i`, as a signed 1-based label.
pub fn signed_permutation(rs: &RootSystem, w: &GroupElement) -> Result<Vec<i64>> {
    let n = match rs.spec().factors.as_slice() {
        [CoxeterType::B(n)] | [CoxeterType::D(n)] => *n,
        _ => return Err(Error::WrongType(format!("{} is not of type B or D", rs.spec()))),
    };
    let lookup = root_lookup(rs);
    Ok((0..n)
        .map(|i| {
            let j = if i == 0 { 1 } else { 0 };
            let a = rs.root_vector(w.apply(lookup[&unit_diff(n, i, j, -1)])).expect("coordinates");
            let b = rs.root_vector(w.apply(lookup[&unit_diff(n, i, j, 1)])).expect("coordinates");
            // w(e_i) = (w(e_i - e_j) + w(e_i + e_j)) / 2
            let (k, x) = a.iter().zip(&b).map(|(x, y)| x + y).enumerate().find(|(_, x)| !x.is_zero()).expect("nonzero");
            (k as i64 + 1) * x.signum() as i64
        })
        .collect())
}

/// Cycles of a permutation of `0..m`, each starting at its least element.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut x = perm[s];
        while x != s {
            seen[x] = true;
            cyc.push(x);
            x = perm[x];
        }
        out.push(cyc);
    }
    out
}

/// Weakly increasing then weakly decreasing.
pub fn is_unimodal(seq: &[usize]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_transpositions() {
        let rs = RootSystem::from_label("A3").unwrap();
        assert_eq!(point_permutation(&rs, rs.simple_reflection(1)).unwrap(), vec![0, 2, 1, 3]);
        let c = rs.standard_coxeter_element(&[0, 1, 2]).unwrap();
        assert_eq!(cycles(&point_permutation(&rs, &c).unwrap()).len(), 1);
    }

    #[test]
    fn signed_generators() {
        let b = RootSystem::from_label("B3").unwrap();
        assert_eq!(signed_permutation(&b, b.simple_reflection(0)).unwrap(), vec![-1, 2, 3]);
        assert_eq!(signed_permutation(&b, b.simple_reflection(2)).unwrap(), vec![1, 3, 2]);
        let d = RootSystem::from_label("D4").unwrap();
        assert_eq!(signed_permutation(&d, d.simple_reflection(0)).unwrap(), vec![-2, -1, 3, 4]);
        assert!(signed_permutation(&RootSystem::from_label("A2").unwrap(), &d.identity()).is_err());
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&[1, 3, 4, 2]));
        assert!(is_unimodal(&[4, 3, 1]));
        assert!(!is_unimodal(&[2, 1, 3]));
        assert!(is_unimodal(&[]));
    }
}
