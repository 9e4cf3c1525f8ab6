//! `M(W, q)` without enumerating chains: the recursion over maximal standard
//! parabolic subgroups, and the product over the degrees.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::exactalg::{PolyQ, RatPoly};
use crate::rootsys::{irreducible_data, recognize_parabolic_type, CoxeterType, GroupSpec, RootSystem};

/// `(Σ k_i)! / ∏ k_i!`
pub fn multinomial(parts: &[usize]) -> BigInt {
    let fact = |k: usize| (1..=k as u64).fold(BigInt::one(), |a, x| a * x);
    let total: usize = parts.iter().sum();
    parts.iter().fold(fact(total), |a, &k| a / fact(k))
}

/// `M(W) = (2 + q(h−2))/2 · Σ_s M(W_(s))` for irreducible `W`, with
/// `M(A1) = 1` and the binomial product rule for reducible groups.
pub fn m_poly_recursion(spec: &GroupSpec) -> Result<PolyQ> {
    let mut memo = HashMap::new();
    let ranks: Vec<usize> = spec.factors.iter().map(|t| t.rank()).collect();
    let mut acc = PolyQ::constant(multinomial(&ranks));
    for &t in &spec.factors {
        acc = &acc * &irreducible_recursion(t, &mut memo)?;
    }
    Ok(acc)
}

fn irreducible_recursion(ty: CoxeterType, memo: &mut HashMap<CoxeterType, PolyQ>) -> Result<PolyQ> {
    if let Some(p) = memo.get(&ty) {
        return Ok(p.clone());
    }
    if ty == CoxeterType::A(1) {
        return Ok(PolyQ::one());
    }
    let h = irreducible_data(ty).coxeter_number as i64;
    let mut sum = PolyQ::zero();
    for types in maximal_parabolic_types(ty)? {
        let ranks: Vec<usize> = types.iter().map(|t| t.rank()).collect();
        let mut term = PolyQ::constant(multinomial(&ranks));
        for t in types {
            term = &term * &irreducible_recursion(t, memo)?;
        }
        sum = &sum + &term;
    }
    let p = (&PolyQ::lin(2, h - 2) * &sum).div_exact(&BigInt::from(2)).expect("recursion yields integer coefficients");
    memo.insert(ty, p.clone());
    Ok(p)
}

/// Irreducible factors of `W_(s)` for each simple generator `s`, read off
/// the Coxeter diagram with the node of `s` deleted.
pub(crate) fn maximal_parabolic_types(ty: CoxeterType) -> Result<Vec<Vec<CoxeterType>>> {
    let rs = RootSystem::build(&GroupSpec::irreducible(ty))?;
    (0..rs.rank())
        .map(|drop| {
            let keep: Vec<usize> =
                rs.simple_roots().iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &r)| r).collect();
            Ok(recognize_parabolic_type(&rs, &keep)?.into_iter().map(|f| f.ty).collect())
        })
        .collect()
}

/// `(n!/|W|) ∏ (d_i + q(h − d_i))`, factor by factor.
pub fn m_poly_closed(spec: &GroupSpec) -> PolyQ {
    let ranks: Vec<usize> = spec.factors.iter().map(|t| t.rank()).collect();
    let mut acc = PolyQ::constant(multinomial(&ranks));
    for &t in &spec.factors {
        let d = irreducible_data(t);
        let h = d.coxeter_number as i64;
        let n_fact: BigInt = (1..=t.rank() as u64).fold(BigInt::one(), |a, x| a * x);
        let mut p = RatPoly::constant(BigRational::new(n_fact, d.group_order.clone()));
        for &di in &d.degrees {
            let di = di as i64;
            p = &p * &RatPoly::lin_rat(BigInt::from(di).into(), BigInt::from(h - di).into());
        }
        acc = &acc * &p.to_integer().expect("closed form has integer coefficients");
    }
    acc
}
