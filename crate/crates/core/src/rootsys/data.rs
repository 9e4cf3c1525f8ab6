//! Degree tables for the supported irreducible types.

use num_bigint::BigInt;
use num_traits::One;

use super::spec::CoxeterType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleData {
    pub ty: CoxeterType,
    /// Sorted ascending.
    pub degrees: Vec<u64>,
    pub coxeter_number: u64,
    pub group_order: BigInt,
    pub reflection_count: u64,
}

/// Degrees, Coxeter number (largest degree), |W| = ∏ d_i and |T| = Σ (d_i − 1).
pub fn irreducible_data(ty: CoxeterType) -> IrreducibleData {
    let mut degrees: Vec<u64> = match ty {
        CoxeterType::A(n) => (2..=n as u64 + 1).collect(),
        CoxeterType::B(n) => (1..=n as u64).map(|i| 2 * i).collect(),
        CoxeterType::D(n) => (1..n as u64).map(|i| 2 * i).chain([n as u64]).collect(),
        CoxeterType::I2(m) => vec![2, m as u64],
        CoxeterType::H3 => vec![2, 6, 10],
        CoxeterType::F4 => vec![2, 6, 8, 12],
        CoxeterType::E6 => vec![2, 5, 6, 8, 9, 12],
    };
    degrees.sort_unstable();
    let coxeter_number = *degrees.last().expect("rank >= 1");
    let group_order = degrees.iter().fold(BigInt::one(), |acc, &d| acc * d);
    let reflection_count = degrees.iter().map(|d| d - 1).sum();
    IrreducibleData { ty, degrees, coxeter_number, group_order, reflection_count }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        let a2 = irreducible_data(CoxeterType::A(2));
        assert_eq!((a2.degrees.clone(), a2.coxeter_number), (vec![2, 3], 3));
        assert_eq!(a2.group_order, BigInt::from(6));
        let b3 = irreducible_data(CoxeterType::B(3));
        assert_eq!(b3.degrees, vec![2, 4, 6]);
        assert_eq!(b3.group_order, BigInt::from(48));
        let d4 = irreducible_data(CoxeterType::D(4));
        assert_eq!(d4.degrees, vec![2, 4, 4, 6]);
        let e6 = irreducible_data(CoxeterType::E6);
        assert_eq!(e6.coxeter_number, 12);
        assert_eq!(e6.group_order, BigInt::from(51840));
        assert_eq!(e6.reflection_count, 36);
    }

    #[test]
    fn reflection_count_is_nh_over_two() {
        let types = [
            CoxeterType::A(5),
            CoxeterType::B(4),
            CoxeterType::D(5),
            CoxeterType::I2(7),
            CoxeterType::H3,
            CoxeterType::F4,
            CoxeterType::E6,
        ];
        for t in types {
            let d = irreducible_data(t);
            assert_eq!(2 * d.reflection_count, t.rank() as u64 * d.coxeter_number, "{t}");
        }
    }
}
