//! Conjugation orbits of the products `c` with one generator left out, for
//! sampled orderings of the E6 generators.
//!
//!     cargo run --release --example e6_orbits -- [SAMPLES] [SEED]

use ncchains::noncross::check_e6;
use ncchains::rootsys::RootSystem;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> ncchains::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let rs = RootSystem::from_label("E6")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let orderings: Vec<Vec<usize>> = (0..samples)
        .map(|_| {
            let mut o: Vec<usize> = (0..6).collect();
            o.shuffle(&mut rng);
            o
        })
        .collect();
    let r = check_e6(&rs, &orderings)?;
    println!("checked {} orderings, h = {}", r.checked, r.h);
    println!("orbit dichotomy failures: {}", r.dichotomy_failures.len());
    println!("w0 pairing of fixed lines failures: {}", r.fixed_space_failures.len());
    println!("w0 pairing as group elements failures: {}", r.element_failures.len());
    Ok(())
}
