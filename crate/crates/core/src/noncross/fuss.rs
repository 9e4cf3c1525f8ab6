//! Fuss–Catalan numbers, the zeta polynomial of the lattice, and the
//! identities tying them to `M(W, q)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{PolyQ, RatPoly};
use crate::rootsys::{irreducible_data, CoxeterType, GroupSpec};

use super::mpoly::{m_poly_recursion, maximal_parabolic_types};
use super::NcLattice;

fn irreducible_fuss(t: CoxeterType, m: &BigRational) -> BigRational {
    let d = irreducible_data(t);
    let h = BigRational::from_integer(BigInt::from(d.coxeter_number));
    let prod = d.degrees.iter().fold(BigRational::one(), |a, &di| a * (&h * m + BigRational::from_integer(di.into())));
    prod / BigRational::from_integer(d.group_order)
}

/// `Cat^(m)(W) = (1/|W|) ∏ (hm + d_i)`, multiplicative over factors.
pub fn fuss_catalan(spec: &GroupSpec, m: u64) -> BigInt {
    let m = BigRational::from_integer(m.into());
    let v = spec.factors.iter().fold(BigRational::one(), |a, &t| a * irreducible_fuss(t, &m));
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// The zeta polynomial `Z(W, m) = Cat^(m−1)(W)` as a polynomial in `m`.
pub fn zeta_poly(spec: &GroupSpec) -> RatPoly {
    let mut acc = RatPoly::one();
    for &t in &spec.factors {
        let d = irreducible_data(t);
        let h = d.coxeter_number as i64;
        let mut p = RatPoly::constant(BigRational::new(BigInt::one(), d.group_order.clone()));
        for &di in &d.degrees {
            p = &p * &RatPoly::lin_rat(BigInt::from(di as i64 - h).into(), BigInt::from(h).into());
        }
        acc = &acc * &p;
    }
    acc
}

/// Number of multichains `π_1 ≤ … ≤ π_m` in the lattice.
pub fn multichain_count(lat: &NcLattice<'_>, m: usize, max_lattice: usize) -> Result<BigUint> {
    if lat.len() > max_lattice {
        return Err(Error::Guard { what: "multichain count", needed: lat.len().to_string(), limit: max_lattice.to_string() });
    }
    let roots: Vec<_> = lat.elements().iter().map(|e| e.partition.roots()).collect();
    let below: Vec<Vec<usize>> =
        (0..lat.len()).map(|y| (0..lat.len()).filter(|&x| roots[x].is_subset(roots[y])).collect()).collect();
    if m == 0 {
        return Ok(BigUint::one());
    }
    let mut f = vec![BigUint::one(); lat.len()];
    for _ in 1..m {
        f = below.iter().map(|xs| xs.iter().map(|&x| &f[x]).sum()).collect();
    }
    Ok(f.iter().sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecfominRow {
    pub m: u64,
    /// `Z(W, m)` and `((m−1)h+2)/(2n) Σ_s Z(W_(s), m)`.
    pub lhs: BigRational,
    pub rhs: BigRational,
    /// The same identity read with `Cat^(m)` on both sides.
    pub literal_lhs: BigRational,
    pub literal_rhs: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecfominReport {
    pub rows: Vec<RecfominRow>,
}

impl RecfominReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.lhs == r.rhs)
    }

    pub fn literal_pass(&self) -> bool {
        self.rows.iter().all(|r| r.literal_lhs == r.literal_rhs)
    }
}

/// `Z(W, m) = ((m−1)h + 2)/(2n) · Σ_s Z(W_(s), m)` for `m = 1..=m_max`.
pub fn check_recfomin(spec: &GroupSpec, m_max: u64) -> Result<RecfominReport> {
    let [ty] = spec.factors.as_slice() else {
        return Err(Error::WrongType(format!("{spec} is not irreducible")));
    };
    let d = irreducible_data(*ty);
    let (h, n) = (d.coxeter_number as i64, ty.rank() as i64);
    let parabolics = maximal_parabolic_types(*ty)?;
    let fuss = |types: &[CoxeterType], m: i64| {
        let m = BigRational::from_integer(m.into());
        types.iter().fold(BigRational::one(), |a, &t| a * irreducible_fuss(t, &m))
    };
    let mut rows = Vec::new();
    for m in 1..=m_max as i64 {
        let factor = BigRational::new(((m - 1) * h + 2).into(), (2 * n).into());
        let sum = |shift: i64| parabolics.iter().fold(BigRational::zero(), |a, p| a + fuss(p, m - shift));
        rows.push(RecfominRow {
            m: m as u64,
            lhs: fuss(&[*ty], m - 1),
            rhs: &factor * sum(1),
            literal_lhs: fuss(&[*ty], m),
            literal_rhs: &factor * sum(0),
        });
    }
    Ok(RecfominReport { rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaReport {
    /// `M(W, q)` from the parabolic recursion.
    pub m_poly: PolyQ,
    /// `n! (1−q)^n Z(W, 1/(1−q))`
    pub from_zeta: PolyQ,
}

impl ZetaReport {
    pub fn pass(&self) -> bool {
        self.m_poly == self.from_zeta
    }
}

/// Expands `Z(W, m) = Σ z_k m^k` and substitutes: `n!(1−q)^n Z(1/(1−q)) = n! Σ z_k (1−q)^(n−k)`.
pub fn check_zeta_relation(spec: &GroupSpec) -> Result<ZetaReport> {
    let n = spec.rank();
    let z = zeta_poly(spec);
    let one_minus_q = RatPoly::lin_rat(BigRational::one(), -BigRational::one());
    let n_fact = BigRational::from_integer((1..=n as u64).fold(BigInt::one(), |a, x| a * x));
    let mut sum = RatPoly::zero();
    for (k, zk) in z.coeffs().iter().enumerate() {
        sum = &sum + &one_minus_q.pow((n - k) as u32).scale(zk);
    }
    let from_zeta = sum.scale(&n_fact).to_integer().ok_or_else(|| Error::Invalid("non-integer coefficients".into()))?;
    Ok(ZetaReport { m_poly: m_poly_recursion(spec)?, from_zeta })
}
