//! André trees and the maps from chains of set partitions to trees.

use ncchains::noncross::NcLattice;
use ncchains::partition::{BlocksA, BlocksB};
use ncchains::rootsys::RootSystem;
use ncchains::trees::{
    andre_to_pointed, chain_to_merge_a, enumerate_andre, enumerate_pointed, pointed_to_andre, stanley_a, stanley_b,
    PointedAndreTree,
};

fn main() -> ncchains::Result<()> {
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_andre(n, 9).map(|t| t.len())).collect::<Result<_, _>>()?;
    println!("André trees on 1..8 vertices: {counts:?}");
    let pointed: Vec<usize> = (1..=7).map(|n| enumerate_pointed(n, 9).map(|t| t.len())).collect::<Result<_, _>>()?;
    println!("pointed André trees on 1..7:  {pointed:?}");

    let t: PointedAndreTree = "5(4*(3(2 1)))".parse()?;
    let u = pointed_to_andre(&t);
    println!("{t}  <->  {u}  <->  {}", andre_to_pointed(&u)?);

    let rows = ["1|2|3|4|5|6|7", "1|2|3|46|5|7", "15|2|3|46|7", "15|2|37|46", "15|2|3467", "125|3467", "1234567"];
    let chain = rows.iter().map(|r| BlocksA::parse(r)).collect::<Result<Vec<_>, _>>()?;
    println!("{}  ->  {}", rows.join(" < "), stanley_a(&chain)?);

    let rows = [
        "1|-1|2|-2|3|-3|4|-4|5|-5|6|-6",
        "1|-1|2|-2|3|-3|5|-5|4 -6|-4 6",
        "1|-1|3|-3|2 5|-2 -5|4 -6|-4 6",
        "1 3|-1 -3|2 5|-2 -5|4 -6|-4 6",
        "1 -1 3 -3|2 5|-2 -5|4 -6|-4 6",
        "1 -1 3 -3|2 -4 5 6|-2 4 -5 -6",
        "1 -1 2 -2 3 -3 4 -4 5 -5 6 -6",
    ];
    let chain = rows.iter().map(|r| BlocksB::parse(r)).collect::<Result<Vec<_>, _>>()?;
    println!("type B chain  ->  {}", stanley_b(&chain)?);

    // every maximal chain of NC(A3) through the lattice, as a tree
    let rs = RootSystem::from_label("A3")?;
    let lat = NcLattice::build(&rs, &rs.standard_coxeter_element(&[0, 1, 2])?)?;
    for ch in lat.chains(100)?.take(5) {
        let merges = chain_to_merge_a(&lat, &ch)?;
        let text: Vec<String> = merges.iter().map(|b| b.to_string()).collect();
        println!("  {}  ->  {}", text.join(" < "), stanley_a(&merges)?);
    }
    Ok(())
}
