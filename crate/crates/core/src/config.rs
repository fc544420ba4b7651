//! Run-time settings shared by the library suites and the command line.

use std::path::PathBuf;

use crate::mass::DEFAULT_T_BOUND;

/// Environment variable naming an alternative data directory.
pub const DATA_ENV: &str = "COBORDISM_DATA";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Bounds of the sweeping suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepBounds {
    /// Largest `n` in `S_{k,...,k} Φ_n`.
    pub n_max: u32,
    /// Largest part size `k`.
    pub k_max: u32,
    /// Largest repetition count.
    pub m_max: u32,
    /// Largest `m` for which the Table 9 families are instantiated.
    pub family_m_max: u32,
    /// `d₁²` is checked on every monomial up to this `t`.
    pub exhaustive_t: u32,
    /// Random monomials checked above `exhaustive_t`.
    pub random_samples: usize,
    pub seed: u64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            n_max: 20,
            k_max: 8,
            m_max: 13,
            family_m_max: 10,
            exhaustive_t: 60,
            random_samples: 10_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub t_bound: u32,
    pub data_dir: Option<PathBuf>,
    pub format: Format,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub bounds: SweepBounds,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            t_bound: DEFAULT_T_BOUND,
            data_dir: None,
            format: Format::Text,
            jobs: 0,
            bounds: SweepBounds::default(),
        }
    }
}

impl Config {
    /// The explicit directory if given, else `COBORDISM_DATA` if set.
    pub fn resolved_data_dir(&self) -> Option<PathBuf> {
        self.data_dir
            .clone()
            .or_else(|| std::env::var_os(DATA_ENV).map(PathBuf::from))
    }
}
