//! Build root systems and print their basic invariants.
//!
//!     cargo run --example root_systems -- [GROUP...]

use ncchains::rootsys::RootSystem;

fn main() -> ncchains::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let labels = if args.is_empty() {
        ["A3", "B3", "D4", "H3", "F4", "I2(5)", "E6", "A2xA1"].map(String::from).to_vec()
    } else {
        args
    };
    println!("{:<8} {:>5} {:>6} {:>7} {:>3}  {}", "group", "rank", "|Φ+|", "|W|", "h", "backend");
    for label in labels {
        let rs = RootSystem::from_label(&label)?;
        let h = rs.coxeter_number().map_or("-".to_string(), |h| h.to_string());
        println!(
            "{:<8} {:>5} {:>6} {:>7} {:>3}  {:?}",
            rs.spec().to_string(),
            rs.rank(),
            rs.positive_count(),
            rs.group_order(),
            h,
            rs.backend()
        );
        let c = rs.standard_coxeter_element(&(0..rs.rank()).collect::<Vec<_>>())?;
        assert_eq!(rs.absolute_length(&c), rs.rank());
    }
    Ok(())
}
