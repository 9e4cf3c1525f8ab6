#![allow(dead_code)]

use ncchains::rootsys::{GroupElement, RootSystem};

pub const CHAIN_GROUPS: [&str; 20] = [
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "F4", "H3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)",
    "I2(8)", "A2xA1", "B2xA1", "A1xA1",
];

/// Irreducible groups of rank at most 4.
pub const SMALL_GROUPS: [&str; 16] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)",
];

pub fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label).unwrap()
}

pub fn coxeter_elements(rs: &RootSystem) -> Vec<GroupElement> {
    rs.all_standard_coxeter_elements(6).unwrap()
}

/// `n! h^n / |W|` from the degrees.
pub fn deligne(rs: &RootSystem) -> u128 {
    let n = rs.rank() as u32;
    let h = rs.coxeter_number().unwrap() as u128;
    let fact: u128 = (1..=n as u128).product();
    let order: u128 = rs.group_order().try_into().unwrap();
    fact * h.pow(n) / order
}
