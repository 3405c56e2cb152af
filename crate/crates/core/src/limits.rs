/// Resource caps. Exceeding any of them is an error, never a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest bouquet accepted by the `2^n` subset enumeration.
    pub max_edges: usize,
    /// Largest `n` for exhaustive bouquet enumeration.
    pub max_enumerate: usize,
    /// Largest signed graph handed to the realization search.
    pub max_realize: usize,
    /// Largest mutation orbit explored before giving up.
    pub orbit_cap: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_edges: 24,
        max_enumerate: 7,
        max_realize: 7,
        orbit_cap: 1_000_000,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Self::DEFAULT
    }
}
