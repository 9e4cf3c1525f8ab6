//! The nir polynomial three ways: by walking every maximal chain, by the
//! parabolic recursion, and by the product formula.
//!
//!     cargo run --example mpoly -- [GROUP...]

use ncchains::noncross::{m_poly_closed, m_poly_recursion, NcLattice};
use ncchains::rootsys::RootSystem;

fn main() -> ncchains::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let labels = if args.is_empty() {
        ["A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3", "F4", "I2(7)"].map(String::from).to_vec()
    } else {
        args
    };
    for label in labels {
        let rs = RootSystem::from_label(&label)?;
        let c = rs.standard_coxeter_element(&(0..rs.rank()).collect::<Vec<_>>())?;
        let lat = NcLattice::build(&rs, &c)?;
        let direct = lat.m_poly_direct(100_000_000)?;
        let recursion = m_poly_recursion(rs.spec())?;
        let closed = m_poly_closed(rs.spec());
        let agree = direct == recursion && recursion == closed;
        println!("{:<6} chains {:>6}  M = {}  agree={agree}", label, lat.chain_count(), closed);
        assert!(agree, "{label}");
    }
    Ok(())
}
