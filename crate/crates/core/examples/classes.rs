//! Chain classes under the group action, with the product formula per
//! class and the direct count over its members.
//!
//!     cargo run --example classes -- [GROUP]

use ncchains::classes::{chain_stats, check_classes};
use ncchains::noncross::NcLattice;
use ncchains::rootsys::RootSystem;

fn main() -> ncchains::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let rs = RootSystem::from_label(&label)?;
    let c = rs.standard_coxeter_element(&(0..rs.rank()).collect::<Vec<_>>())?;
    let lat = NcLattice::build(&rs, &c)?;
    let report = check_classes(&lat, 2000, 10_000_000)?;
    for class in &report.classes {
        let stats: Vec<(usize, usize)> =
            chain_stats(&lat, &class.representative)?.iter().map(|s| (s.h, s.g)).collect();
        println!(
            "[{}] size {:>3}  (h,g) {:?}  formula {}  direct {}",
            class.representative.word_string(),
            class.size(),
            stats,
            class.formula_poly,
            class.direct_poly
        );
    }
    println!("sum over classes {}  M(W,q) {}", report.class_sum, report.m_poly);
    assert!(report.classgen_pass() && report.classeq_pass());
    Ok(())
}
