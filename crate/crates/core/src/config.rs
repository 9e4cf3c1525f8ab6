/// Resource guards shared by the enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of maximal chains an enumeration may visit.
    pub max_chains: u128,
    /// Largest group that may be enumerated element by element.
    pub max_group_order: usize,
    /// Largest lattice for the quadratic multichain count.
    pub max_lattice: usize,
    /// Largest rank for which all `n!` orderings of the generators are tried.
    pub max_coxeter_rank: usize,
    /// Largest vertex count for tree enumerations.
    pub max_tree_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_chains: 100_000_000, max_group_order: 2000, max_lattice: 10_000, max_coxeter_rank: 6, max_tree_vertices: 9 }
    }
}
