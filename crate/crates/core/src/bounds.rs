/// Size limits applied by constructions, enumerations and oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest ring order accepted by `construct`.
    pub max_order: usize,
    /// Largest ring order on which the exhaustive denominator-set oracle runs.
    pub oracle_max_order: usize,
    /// Largest number of two-sided ideals `enumerate_ideals` will produce.
    pub max_ideals: usize,
    /// Largest `|S × R|` accepted by the fraction oracle.
    pub oracle_max_pairs: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_order: 4096,
            oracle_max_order: 16,
            max_ideals: 1_000_000,
            oracle_max_pairs: 1 << 16,
        }
    }
}
