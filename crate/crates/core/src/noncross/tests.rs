use super::*;
use crate::partition::is_interval_partition;
use crate::rootsys::GroupSpec;
use num_bigint::BigInt;
use proptest::prelude::*;

fn lattice_of(rs: &RootSystem) -> NcLattice<'_> {
    let c = rs.standard_coxeter_element(&(0..rs.rank()).collect::<Vec<_>>()).unwrap();
    NcLattice::build(rs, &c).unwrap()
}

fn poly(c: &[i64]) -> PolyQ {
    PolyQ::from_ints(c)
}

#[test]
fn lattice_sizes_are_catalan() {
    for (label, size) in [("A1", 2), ("A2", 5), ("A3", 14), ("B2", 6), ("B3", 20), ("D4", 50), ("I2(5)", 7), ("H3", 32)] {
        let rs = RootSystem::from_label(label).unwrap();
        assert_eq!(lattice_of(&rs).len(), size, "{label}");
    }
}

#[test]
fn chain_counts() {
    for (label, n) in [("A2", 3u32), ("A3", 16), ("A4", 125), ("B3", 27), ("D4", 162), ("H3", 50), ("I2(7)", 7)] {
        let rs = RootSystem::from_label(label).unwrap();
        let lat = lattice_of(&rs);
        assert_eq!(lat.chain_count(), BigUint::from(n), "{label}");
        assert_eq!(lat.chains(u128::MAX).unwrap().count() as u32, n, "{label}");
    }
}

#[test]
fn chains_are_reflection_factorizations() {
    let rs = RootSystem::from_label("B3").unwrap();
    let lat = lattice_of(&rs);
    for ch in lat.chains(1000).unwrap() {
        assert_eq!(&rs.reflection_product(&ch.word), lat.c());
        assert_eq!(lat.chain_from_word(&ch.word).as_ref(), Some(&ch));
        let flats: Vec<RootSet> = ch.partitions(&lat).iter().map(|p| p.roots()).collect();
        assert_eq!(lat.chain_from_partitions(&flats).as_ref(), Some(&ch));
    }
}

#[test]
fn guard_refuses_large_enumeration() {
    let rs = RootSystem::from_label("A4").unwrap();
    assert!(matches!(lattice_of(&rs).m_poly_direct(100), Err(Error::Guard { .. })));
}

#[test]
fn small_m_polynomials() {
    let rs = RootSystem::from_label("A2").unwrap();
    assert_eq!(lattice_of(&rs).m_poly_direct(100).unwrap(), poly(&[2, 1]));
    let rs = RootSystem::from_label("B2").unwrap();
    assert_eq!(lattice_of(&rs).m_poly_direct(100).unwrap(), poly(&[2, 2]));
    let rs = RootSystem::from_label("A3").unwrap();
    assert_eq!(lattice_of(&rs).m_poly_direct(100).unwrap(), poly(&[6, 8, 2]));
}

#[test]
fn three_methods_agree() {
    for label in ["A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3", "I2(5)", "I2(8)", "A1xA1", "A2xB2", "A1xA1xA1"] {
        let spec = GroupSpec::parse(label).unwrap();
        let rs = RootSystem::build(&spec).unwrap();
        let direct = lattice_of(&rs).m_poly_direct(1_000_000).unwrap();
        assert_eq!(direct, m_poly_recursion(&spec).unwrap(), "{label}");
        assert_eq!(direct, m_poly_closed(&spec), "{label}");
    }
}

#[test]
fn closed_form_at_one_counts_chains() {
    let spec = GroupSpec::parse("E6").unwrap();
    let m = m_poly_closed(&spec);
    assert_eq!(m.eval(&BigInt::from(1)), BigInt::from(41472));
    assert_eq!(m, m_poly_recursion(&spec).unwrap());
}

#[test]
fn m_poly_independent_of_coxeter_element() {
    let rs = RootSystem::from_label("B3").unwrap();
    let expected = m_poly_closed(rs.spec());
    for c in rs.all_standard_coxeter_elements(4).unwrap() {
        assert_eq!(NcLattice::build(&rs, &c).unwrap().m_poly_direct(1000).unwrap(), expected);
    }
}

#[test]
fn multinomials() {
    assert_eq!(multinomial(&[2, 1]), BigInt::from(3));
    assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
    assert_eq!(multinomial(&[3]), BigInt::from(1));
}

/// `u ≤ v` iff some reduced reflection word of `v` has a prefix word for `u`,
/// checked by brute force on A2.
#[test]
fn absolute_order_matches_subwords() {
    let rs = RootSystem::from_label("A2").unwrap();
    let group = rs.enumerate_group(100).unwrap();
    let refl: Vec<usize> = rs.all_positive().iter().collect();
    let mut words: Vec<(GroupElement, Vec<usize>)> = vec![(rs.identity(), vec![])];
    for a in &refl {
        words.push((rs.reflection(*a).clone(), vec![*a]));
        for b in &refl {
            words.push((rs.reflection_product(&[*a, *b]), vec![*a, *b]));
        }
    }
    for u in &group {
        for v in &group {
            let reduced_v: Vec<&Vec<usize>> =
                words.iter().filter(|(w, wd)| w == v && wd.len() == rs.absolute_length(v)).map(|x| &x.1).collect();
            let subword = reduced_v.iter().any(|wd| {
                (0u32..1 << wd.len()).any(|mask| {
                    let sub: Vec<usize> = (0..wd.len()).filter(|&i| mask >> i & 1 == 1).map(|i| wd[i]).collect();
                    &rs.reflection_product(&sub) == u
                })
            });
            assert_eq!(leq_abs(&rs, u, v), subword);
        }
    }
}

#[test]
fn fuss_catalan_values() {
    let a2 = GroupSpec::parse("A2").unwrap();
    assert_eq!(fuss_catalan(&a2, 1), BigInt::from(5));
    assert_eq!(fuss_catalan(&a2, 2), BigInt::from(12));
    assert_eq!(fuss_catalan(&GroupSpec::parse("B2").unwrap(), 1), BigInt::from(6));
    let rs = RootSystem::build(&a2).unwrap();
    assert_eq!(multichain_count(&lattice_of(&rs), 2, 100).unwrap(), BigUint::from(12u8));
}

#[test]
fn multichains_match_fuss_catalan() {
    for label in ["A3", "B3", "H3", "I2(6)", "A1xA2"] {
        let spec = GroupSpec::parse(label).unwrap();
        let rs = RootSystem::build(&spec).unwrap();
        let lat = lattice_of(&rs);
        for m in 1..=3 {
            let got = multichain_count(&lat, m, 10_000).unwrap();
            assert_eq!(BigInt::from(got), fuss_catalan(&spec, m as u64), "{label} m={m}");
        }
    }
}

#[test]
fn recursion_identity() {
    for label in ["A3", "B4", "D5", "F4", "H3", "E6", "I2(7)"] {
        let r = check_recfomin(&GroupSpec::parse(label).unwrap(), 5).unwrap();
        assert!(r.pass(), "{label}");
    }
    let r = check_recfomin(&GroupSpec::parse("A2").unwrap(), 1).unwrap();
    assert!(!r.literal_pass());
}

#[test]
fn zeta_relation() {
    for label in ["A3", "B3", "D4", "F4", "E6", "A1xB2"] {
        assert!(check_zeta_relation(&GroupSpec::parse(label).unwrap()).unwrap().pass(), "{label}");
    }
}

#[test]
fn coatom_orbits() {
    for label in ["A2", "A3", "B3", "D4", "H3", "F4", "I2(5)", "I2(6)"] {
        let rs = RootSystem::from_label(label).unwrap();
        for c in rs.all_standard_coxeter_elements(4).unwrap() {
            let lat = NcLattice::build(&rs, &c).unwrap();
            let report = coatom_orbit_report(&lat);
            assert!(check_standard1(&report), "{label}");
            assert!(check_standard2(&lat).pass(), "{label}");
        }
    }
}

#[test]
fn orbit_check_by_conjugation() {
    for label in ["A3", "B3", "D4", "H3"] {
        let rs = RootSystem::from_label(label).unwrap();
        for l in crate::rootsys::orderings(rs.rank()) {
            let v = conjugation_orbit_check(&rs, &l).unwrap();
            assert!(v.dichotomy && v.w0_fixed_spaces, "{label} {l:?}");
        }
    }
}

#[test]
fn type_a_appendix() {
    for label in ["A2", "A3", "A4", "A5"] {
        let rs = RootSystem::from_label(label).unwrap();
        for c in rs.all_standard_coxeter_elements(5).unwrap() {
            let r = check_appendix_a(&rs, &c).unwrap();
            assert!(r.pass(), "{label} {r:?}");
        }
    }
    let rs = RootSystem::from_label("A3").unwrap();
    let r = check_appendix_a(&rs, &rs.standard_coxeter_element(&[0, 1, 2]).unwrap()).unwrap();
    assert_eq!(r.orbits[0].k, 1);
    assert_eq!(r.orbits[0].size, 4);
    assert_eq!(r.orbits[0].interval.len(), 2);
}

#[test]
fn type_d_appendix() {
    for label in ["D4", "D5"] {
        let rs = RootSystem::from_label(label).unwrap();
        for c in rs.all_standard_coxeter_elements(5).unwrap() {
            let r = check_appendix_d(&rs, &c).unwrap();
            assert!(r.structure_pass(), "{label} {r:?}");
        }
    }
}

#[test]
fn lines_are_noncrossing_and_stable() {
    let rs = RootSystem::from_label("D4").unwrap();
    let lat = lattice_of(&rs);
    for p in crate::partition::all_flats(&rs).concat() {
        if is_interval_partition(&rs, &p) {
            assert!(lat.contains_partition(&p));
        }
    }
    for e in lat.elements() {
        let img = rs.apply_to_set(lat.c(), e.partition.roots());
        assert!(lat.index_of_roots(img).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interval_refinements_stay_noncrossing(ord in Just(vec![0usize, 1, 2]).prop_shuffle(), label in prop::sample::select(vec!["A3", "B3", "H3"])) {
        let rs = RootSystem::from_label(label).unwrap();
        let c = rs.standard_coxeter_element(&ord).unwrap();
        let lat = NcLattice::build(&rs, &c).unwrap();
        let flats = crate::partition::all_flats(&rs).concat();
        for e in lat.elements() {
            for f in &flats {
                if is_interval_refinement(f, &e.partition) {
                    prop_assert!(lat.contains_partition(f));
                }
            }
        }
    }

    #[test]
    fn covers_raise_length_by_one(ord in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        let rs = RootSystem::from_label("F4").unwrap();
        let c = rs.standard_coxeter_element(&ord).unwrap();
        let lat = NcLattice::build(&rs, &c).unwrap();
        for (i, e) in lat.elements().iter().enumerate() {
            prop_assert_eq!(absolute_length(&rs, &e.w), e.rank);
            prop_assert!(leq_abs(&rs, &e.w, &c));
            for cv in lat.covers(i) {
                prop_assert_eq!(lat.element(cv.target).rank, e.rank + 1);
                prop_assert!(e.partition.leq(&lat.element(cv.target).partition));
            }
        }
    }
}

/// `L_0` and `L_1` share an orbit of size `h` for odd `n`; for even `n`,
/// `c^{h/2} = −1` fixes every flat.
#[test]
fn type_d_pairing_follows_odd_rank() {
    for (label, paired) in [("D4", false), ("D5", true), ("D6", false)] {
        let rs = RootSystem::from_label(label).unwrap();
        for c in rs.all_standard_coxeter_elements(6).unwrap() {
            let r = check_appendix_d(&rs, &c).unwrap();
            assert!(r.structure_pass() && r.reversed_parity && !r.printed_parity, "{label}");
            assert_eq!(r.l0_l1_orbit.is_some(), paired, "{label}");
        }
    }
}

#[test]
fn e6_orbits_by_conjugation() {
    let rs = RootSystem::from_label("E6").unwrap();
    let ords = crate::rootsys::orderings(6);
    let r = check_e6(&rs, &ords).unwrap();
    assert_eq!((r.n, r.h, r.checked), (6, 12, 720));
    assert!(r.pass());
    // w0 permutes the diagram, so w0·ct·w0 is usually a different element
    // with the same fixed line.
    assert!(r.element_failures.contains(&vec![0, 1, 2, 3, 4, 5]));
    assert_eq!(r.element_failures.len(), 720 - 264);
}
