//! Maximal chains of a noncrossing partition lattice as reflection words,
//! with the flats along one chain and the nir histogram.
//!
//!     cargo run --example chains -- [GROUP]

use ncchains::noncross::NcLattice;
use ncchains::rootsys::RootSystem;

fn main() -> ncchains::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let rs = RootSystem::from_label(&label)?;
    let c = rs.standard_coxeter_element(&(0..rs.rank()).collect::<Vec<_>>())?;
    let lat = NcLattice::build(&rs, &c)?;
    println!("{label}: {} noncrossing partitions, {} maximal chains", lat.len(), lat.chain_count());
    let mut hist = vec![0usize; rs.rank() + 1];
    for (i, ch) in lat.chains(1_000_000)?.enumerate() {
        hist[ch.nir()] += 1;
        if i < 8 {
            let steps: String = ch.interval.iter().map(|&b| if b { '⊑' } else { '<' }).collect();
            println!("  word {:<12} steps {steps}  nir {}", ch.word_string(), ch.nir());
        }
    }
    println!("nir histogram {hist:?}");
    let first = lat.chains(1_000_000)?.next().expect("a maximal chain");
    for (k, p) in first.partitions(&lat).into_iter().enumerate() {
        println!("  rank {k}: simple system {:?}", p.simple_system());
    }
    Ok(())
}
