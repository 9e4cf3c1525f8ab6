mod common;

use common::*;
use ncchains::noncross::{m_poly_closed, m_poly_recursion, NcLattice};
use num_bigint::BigUint;

#[test]
fn counts_match_degree_formula() {
    for label in CHAIN_GROUPS.iter().filter(|l| !l.contains('x')) {
        let r = rs(label);
        let lat = NcLattice::build(&r, &coxeter_elements(&r)[0]).unwrap();
        let walked = lat.chains(10_000_000).unwrap().count() as u128;
        assert_eq!(walked, deligne(&r), "{label}");
        assert_eq!(lat.chain_count(), BigUint::from(walked), "{label}");
    }
    for (label, count) in [("A4", 125), ("B3", 27), ("D4", 162), ("F4", 432), ("H3", 50), ("I2(7)", 7)] {
        let r = rs(label);
        let lat = NcLattice::build(&r, &coxeter_elements(&r)[0]).unwrap();
        assert_eq!(lat.chain_count(), BigUint::from(count as u32), "{label}");
    }
}

#[test]
fn type_a_counts_are_powers() {
    for n in 1..=5u32 {
        let r = rs(&format!("A{n}"));
        let lat = NcLattice::build(&r, &coxeter_elements(&r)[0]).unwrap();
        assert_eq!(lat.chain_count(), BigUint::from((n + 1).pow(n - 1)));
    }
}

#[test]
fn product_groups_multiply() {
    let r = rs("B2xA1");
    let lat = NcLattice::build(&r, &coxeter_elements(&r)[0]).unwrap();
    // interleavings of a 2-step and a 1-step chain: 3 · 4 · 1
    assert_eq!(lat.chain_count(), BigUint::from(12u32));
    assert_eq!(lat.m_poly_direct(1000).unwrap(), m_poly_closed(r.spec()));
}

#[test]
fn three_methods_agree_on_every_coxeter_element() {
    for label in CHAIN_GROUPS {
        let r = rs(label);
        let closed = m_poly_closed(r.spec());
        assert_eq!(m_poly_recursion(r.spec()).unwrap(), closed, "{label}");
        let elements = coxeter_elements(&r);
        let take = if r.rank() <= 4 { elements.len() } else { 3 };
        for c in elements.iter().take(take) {
            let lat = NcLattice::build(&r, c).unwrap();
            assert_eq!(lat.m_poly_direct(10_000_000).unwrap(), closed, "{label}");
        }
    }
}
