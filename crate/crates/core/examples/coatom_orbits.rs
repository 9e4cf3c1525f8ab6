//! Orbits of the coatoms under conjugation by c, the ordering search for
//! coatoms, and the explicit descriptions in types A and D.

use ncchains::noncross::{
    check_appendix_a, check_appendix_d, check_standard1, check_standard2, coatom_orbit_report, NcLattice,
};
use ncchains::rootsys::RootSystem;

fn main() -> ncchains::Result<()> {
    for label in ["A3", "B3", "D4", "D5", "H3", "F4"] {
        let rs = RootSystem::from_label(label)?;
        let c = rs.standard_coxeter_element(&(0..rs.rank()).collect::<Vec<_>>())?;
        let lat = NcLattice::build(&rs, &c)?;
        let report = coatom_orbit_report(&lat);
        let sizes: Vec<usize> = report.orbits.iter().map(|o| o.size()).collect();
        let lines: Vec<usize> = report.orbits.iter().map(|o| o.interval_lines.len()).collect();
        println!(
            "{label}: h={} orbit sizes {sizes:?} interval lines per orbit {lines:?} dichotomy {} orderings {}",
            report.h,
            check_standard1(&report),
            check_standard2(&lat).pass()
        );
    }
    let rs = RootSystem::from_label("A5")?;
    let a = check_appendix_a(&rs, &rs.standard_coxeter_element(&[2, 0, 4, 1, 3])?)?;
    println!("A5 cycle {:?} unimodal {} pass {}", a.sequence, a.unimodal, a.pass());
    for label in ["D4", "D5"] {
        let rs = RootSystem::from_label(label)?;
        let d = check_appendix_d(&rs, &rs.standard_coxeter_element(&(0..rs.rank()).collect::<Vec<_>>())?)?;
        println!(
            "{label} sequence {:?} structure {} orbit sizes {:?} stated parity {} reversed parity {}",
            d.sequence,
            d.structure_pass(),
            d.orbit_sizes,
            d.printed_parity,
            d.reversed_parity
        );
    }
    Ok(())
}
