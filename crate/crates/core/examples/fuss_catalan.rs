//! Fuss-Catalan numbers against multichain counts, the zeta polynomial and
//! its relation to the nir polynomial.

use ncchains::noncross::{check_recfomin, check_zeta_relation, fuss_catalan, multichain_count, zeta_poly, NcLattice};
use ncchains::rootsys::RootSystem;

fn main() -> ncchains::Result<()> {
    for label in ["A3", "B3", "D4", "H3", "I2(5)"] {
        let rs = RootSystem::from_label(label)?;
        let lat = NcLattice::build(&rs, &rs.standard_coxeter_element(&(0..rs.rank()).collect::<Vec<_>>())?)?;
        let mut line = format!("{label:<6} |NC| {:>4}", lat.len());
        for m in 1..=3 {
            let formula = fuss_catalan(rs.spec(), m as u64);
            let counted = multichain_count(&lat, m, 10_000)?;
            line += &format!("  Cat^({m}) {formula}/{counted}");
        }
        println!("{line}");
        println!("       Z(W,m) = {}", zeta_poly(rs.spec()).to_string().replace('q', "m"));
        let z = check_zeta_relation(rs.spec())?;
        println!("       n!(1-q)^n Z(1/(1-q)) = {}  ({})", z.from_zeta, z.pass());
        println!("       parabolic recursion m<=5: {}", check_recfomin(rs.spec(), 5)?.pass());
    }
    Ok(())
}
